//! Example matrices shared by the integration tests.
#![allow(dead_code)]

use selfdual_core::linalg::IntMatrix;
use selfdual_core::Configuration;

pub fn matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

pub fn config(rows: &[Vec<i64>]) -> Configuration {
    Configuration::from_rows(rows).unwrap()
}

/// Gale dual printed alongside the five-dimensional family.
pub fn family_alpha_gale(a: i64) -> IntMatrix {
    matrix(&[
        vec![2 * a, 0],
        vec![-a, 0],
        vec![-a, 0],
        vec![1, 1],
        vec![-1, -1],
        vec![0, 1],
        vec![0, -1],
    ])
}

/// Strongly self-dual 7 x 9 configuration that is not of Lawrence type.
pub fn strong_nine() -> Configuration {
    config(&[
        vec![1, 0, 0, 0, 0, 0, 0, 1, 1],
        vec![0, 1, 0, 0, 0, 0, 0, 1, 1],
        vec![0, 0, 1, 0, 0, 0, 0, 2, 0],
        vec![0, 0, 0, 1, 0, 0, 0, 0, 2],
        vec![0, 0, 0, 0, 1, 0, 0, -2, -2],
        vec![0, 0, 0, 0, 0, 1, 0, -1, 0],
        vec![0, 0, 0, 0, 0, 0, 1, 0, -1],
    ])
}

/// Its printed Gale dual, as columns.
pub fn strong_nine_gale() -> IntMatrix {
    matrix(&[
        vec![-2, -2, -2, -2, 4, 1, 1, 1, 1],
        vec![1, 1, 2, 0, -2, -1, 0, -1, 0],
    ])
    .transpose()
}

/// Two conics glued along a splitting torus; a point of the configuration
/// sits inside two edges.
pub fn interior_point_faces() -> Configuration {
    config(&[
        vec![1, 1, 1, 0, 0, 0],
        vec![0, 0, 0, 1, 1, 1],
        vec![0, 1, 2, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 2],
    ])
}

/// Six vertices whose hull has lattice points missing from the configuration.
pub fn missing_points() -> Configuration {
    Configuration::from_points(&[
        vec![1, 0, 0, 2],
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 1, 0, 2],
        vec![0, 0, 1, 0],
        vec![0, 0, 1, 1],
    ])
    .unwrap()
}

pub fn missing_points_gale() -> IntMatrix {
    matrix(&[
        vec![1, 0],
        vec![-1, 0],
        vec![0, 1],
        vec![0, -1],
        vec![2, -2],
        vec![-2, 2],
    ])
}

pub fn twisted_cubic() -> Configuration {
    Configuration::from_points(&[vec![0], vec![1], vec![2], vec![3]]).unwrap()
}

pub fn conic_pyramid() -> Configuration {
    Configuration::from_points(&[vec![1, 0, 0], vec![1, 1, 0], vec![1, 2, 0], vec![1, 0, 1]])
        .unwrap()
}
