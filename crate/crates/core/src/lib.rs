//! Exact decision procedures for self-duality of projective toric varieties.

mod bigser;
pub mod config;
pub mod engine;
pub mod error;
pub mod gale;
pub mod generators;
pub mod linalg;
pub mod oracle;
pub mod verdict;

pub use config::Configuration;
pub use error::{Error, Result};
pub use gale::GaleDual;
pub use verdict::{Criterion, Verdict, Witness};
