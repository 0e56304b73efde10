mod commands;
mod io;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "selfdual",
    version,
    about = "Exact self-duality tests for projective toric varieties"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Re-verify witnesses with the independent oracles.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical Gale dual of a configuration.
    Gale { file: PathBuf },
    /// Decide a property of a configuration.
    #[command(subcommand)]
    Check(Check),
    /// Repeats, apexes and core of a configuration.
    Decompose { file: PathBuf },
    /// All circuits (small inputs only).
    Circuits { file: PathBuf },
    /// All flats of the Gale rows (small inputs only).
    Flats { file: PathBuf },
    /// Sufficient smoothness certificate from vertex edge bases.
    SmoothCertificate { file: PathBuf },
    /// Point, conic, Segre quadric or other hypersurface.
    ClassifyHypersurface { file: PathBuf },
    /// Build a configuration from a named family.
    Generate {
        #[command(subcommand)]
        family: Generate,
        /// Also write the matrix to this file.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Brute-force referees.
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Subcommand)]
enum Check {
    SelfDual {
        file: PathBuf,
    },
    Strong {
        file: PathBuf,
        /// A Gale basis to test alongside the canonical one.
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    Facial {
        file: PathBuf,
        /// Zero-based point indices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// The Segre embedding of P^1 x P^(m-1).
    Segre {
        #[arg(long)]
        m: usize,
    },
    /// Lawrence lift of a matrix given inline, rows separated by ';'.
    Lawrence {
        #[arg(long, allow_hyphen_values = true)]
        rows: String,
    },
    /// The 5 x 7 four-dimensional family.
    FamilyAlpha {
        #[arg(long, allow_hyphen_values = true)]
        alpha: i64,
    },
    /// Planar Gale pattern; r is the number of alphas.
    FamilyDim {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        alphas: Vec<i64>,
    },
    /// Codimension-m Gale pattern; r is the number of alphas.
    FamilyCodim {
        #[arg(long)]
        m: usize,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        alphas: Vec<i64>,
    },
}

#[derive(Subcommand)]
enum Oracle {
    /// Compare every self-duality criterion on a seeded random corpus.
    Crosscheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_points: usize,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long, default_value_t = 3)]
        max_entry: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, ok) = match commands::run(&cli) {
        Ok(done) => done,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize"),
        Format::Text => report.render_text(),
    };
    // a closed pipe downstream is not an error
    let _ = writeln!(std::io::stdout().lock(), "{rendered}");
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
