//! Constructors for standard families and for configurations with a
//! prescribed Gale dual.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::config::{parse_configuration, Configuration};
use crate::error::{Error, Result};
use crate::linalg::{
    integer_kernel, rational_rank, row_lattice_basis, saturation_index, IntMatrix,
};

/// The `(m+1) x 2m` matrix `(Id Id; 0..0 1..1)`.
pub fn segre(m: usize) -> Result<Configuration> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "segre needs m >= 2, got {m}"
        )));
    }
    let ones = IntMatrix::from_rows(&[vec![1i64; m]])?;
    lawrence(&ones)
}

/// The Lawrence configuration `(Id Id; 0 M)` of a `d x n` matrix `M`.
pub fn lawrence(m: &IntMatrix) -> Result<Configuration> {
    let (d, n) = (m.rows(), m.cols());
    let mut w = IntMatrix::zeros(n + d, 2 * n);
    for i in 0..n {
        w[(i, i)] = BigInt::one();
        w[(i, n + i)] = BigInt::one();
    }
    for r in 0..d {
        for j in 0..n {
            w[(n + r, n + j)] = m[(r, j)].clone();
        }
    }
    parse_configuration(w)
}

/// The `5 x 7` family of four-dimensional self-dual examples.
pub fn family_alpha(alpha: i64) -> Result<Configuration> {
    if alpha == 0 {
        return Err(Error::InvalidParameter("alpha must be nonzero".into()));
    }
    let a = alpha;
    Configuration::from_rows(&[
        vec![1, 1, 1, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 0, 0],
        vec![0, 0, 0, 1, 1, 0, 0],
        vec![0, 1, 0, a, 0, -a, 0],
        vec![0, 0, 1, 0, -a, 0, a],
    ])
}

/// The planar Gale pattern `(a_1,0)..(a_r,0), (0,1), (0,-1), (1,1), (-1,-1)`.
pub fn family_dim_gale(r: usize, alphas: &[i64]) -> Result<IntMatrix> {
    family_codim_gale(2, r, alphas)
}

/// Configuration of dimension `r + 1` with the planar Gale pattern above.
pub fn family_dim(r: usize, alphas: &[i64]) -> Result<Configuration> {
    config_from_gale(&family_dim_gale(r, alphas)?)
}

/// The Gale pattern `a_1 e_1..a_r e_1, +-e_2..+-e_m, +-(e_1 + ... + e_m)` in `Z^m`.
pub fn family_codim_gale(m: usize, r: usize, alphas: &[i64]) -> Result<IntMatrix> {
    if m < 2 || r < 2 {
        return Err(Error::InvalidParameter(format!(
            "need m >= 2 and r >= 2, got m = {m}, r = {r}"
        )));
    }
    if alphas.len() != r {
        return Err(Error::InvalidParameter(format!(
            "expected {r} alphas, got {}",
            alphas.len()
        )));
    }
    if alphas.contains(&0) {
        return Err(Error::InvalidParameter("alphas must be nonzero".into()));
    }
    if alphas.iter().sum::<i64>() != 0 {
        return Err(Error::InvalidParameter("alphas must sum to zero".into()));
    }
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(r + 2 * m);
    for &a in alphas {
        let mut row = vec![0; m];
        row[0] = a;
        rows.push(row);
    }
    for k in 1..m {
        let mut row = vec![0; m];
        row[k] = 1;
        rows.push(row.clone());
        row[k] = -1;
        rows.push(row);
    }
    rows.push(vec![1; m]);
    rows.push(vec![-1; m]);
    IntMatrix::from_rows(&rows)
}

/// Configuration of dimension `m + r - 1` and codimension `m`.
pub fn family_codim(m: usize, r: usize, alphas: &[i64]) -> Result<Configuration> {
    config_from_gale(&family_codim_gale(m, r, alphas)?)
}

/// A configuration whose affine relations are exactly the column lattice of `b`.
///
/// The rows of the result are the Hermite basis of the lattice orthogonal to
/// the columns of `b`.
pub fn config_from_gale(b: &IntMatrix) -> Result<Configuration> {
    let n = b.rows();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if (0..b.cols()).any(|j| !b.col(j).iter().sum::<BigInt>().is_zero()) {
        return Err(Error::GaleRowSumNonzero);
    }
    if b.cols() > 0 {
        if rational_rank(b) != b.cols() {
            return Err(Error::GaleDependentColumns);
        }
        let index = saturation_index(b);
        if !index.is_one() {
            return Err(Error::GaleNotSaturated {
                index: index.to_string(),
            });
        }
    }
    let orth = if b.cols() == 0 {
        IntMatrix::identity(n)
    } else {
        integer_kernel(&b.transpose())
    };
    parse_configuration(row_lattice_basis(&orth.transpose()))
}
