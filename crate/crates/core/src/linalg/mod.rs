//! Exact integer and rational linear algebra.
//!
//! Everything here is exact: entries are `BigInt`/`BigRational` and no
//! decision ever passes through floating point.

mod lattice;
pub mod lp;
mod matrix;
mod rational;

pub use lattice::{
    column_lattice_basis, hermite_normal_form, integer_kernel, row_lattice_basis,
    same_column_lattice, saturate, saturation_index, smith_normal_form, HermiteForm, SmithForm,
};
pub use matrix::{are_parallel, primitive_direction, vec_sum, IntMatrix, RatVector};
pub use rational::{
    in_row_span, rational_kernel, rational_rank, solve_left, unimodular_inverse, RowSpanSolution,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use lp::Feasibility;

/// Answer to "is there a strictly positive linear dependency among these vectors?"
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositiveDependency {
    /// Coefficients `r_i > 0` with `sum r_i v_i = 0`.
    Found(RatVector),
    /// A functional `y` with `<y, v_i> <= 0` for every `i` and `< 0` for some `i`.
    /// Pairing any positive combination with `y` gives a negative number.
    Obstructed(RatVector),
}

impl PositiveDependency {
    pub fn relation(&self) -> Option<&RatVector> {
        match self {
            Self::Found(r) => Some(r),
            Self::Obstructed(_) => None,
        }
    }
}

/// Strictly positive rationals `r` with `sum r_i * rows_i = 0`, if they exist.
pub fn positive_dependency(rows: &[Vec<BigInt>]) -> Result<Option<RatVector>> {
    Ok(positive_dependency_certified(rows)?.relation().cloned())
}

/// As [`positive_dependency`], but an infeasible answer carries a separating functional.
pub fn positive_dependency_certified(rows: &[Vec<BigInt>]) -> Result<PositiveDependency> {
    let first = rows.first().ok_or(Error::EmptyInput)?;
    let dim = first.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.len(),
        });
    }
    if dim == 0 {
        return Ok(PositiveDependency::Found(RatVector(vec![
            BigRational::one();
            rows.len()
        ])));
    }
    // r = 1 + x with x >= 0 turns strict positivity into a standard-form system
    let a: Vec<Vec<BigRational>> = (0..dim)
        .map(|j| {
            rows.iter()
                .map(|r| BigRational::from_integer(r[j].clone()))
                .collect()
        })
        .collect();
    let b: Vec<BigRational> = (0..dim)
        .map(|j| -BigRational::from_integer(rows.iter().map(|r| &r[j]).sum::<BigInt>()))
        .collect();
    match lp::nonnegative_solution(&a, &b) {
        Feasibility::Feasible(x) => Ok(PositiveDependency::Found(RatVector(
            x.0.into_iter().map(|xi| xi + BigRational::one()).collect(),
        ))),
        Feasibility::Infeasible(y) => Ok(PositiveDependency::Obstructed(y)),
    }
}

/// Independent recheck of a [`PositiveDependency`] answer.
pub fn check_positive_dependency(rows: &[Vec<BigInt>], answer: &PositiveDependency) -> bool {
    let dim = rows.first().map_or(0, Vec::len);
    match answer {
        PositiveDependency::Found(r) => {
            r.len() == rows.len()
                && r.0.iter().all(Signed::is_positive)
                && (0..dim).all(|j| {
                    r.0.iter()
                        .zip(rows)
                        .map(|(c, v)| c * BigRational::from_integer(v[j].clone()))
                        .sum::<BigRational>()
                        .is_zero()
                })
        }
        PositiveDependency::Obstructed(y) => {
            if y.len() != dim {
                return false;
            }
            let pairings: Vec<BigRational> = rows.iter().map(|v| y.dot_ints(v)).collect();
            pairings.iter().all(|p| !p.is_positive()) && pairings.iter().any(Signed::is_negative)
        }
    }
}

/// Row reduction over GF(2) on boolean rows; returns pivot columns.
pub(crate) fn gf2_rref(a: &mut [Vec<bool>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c]) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && a[i][c] {
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn is_odd(x: &BigInt) -> bool {
    !(x % BigInt::from(2)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn antiparallel_pair_has_positive_dependency() {
        let rows = v(&[vec![1], vec![-1]]);
        let r = positive_dependency(&rows).unwrap().unwrap();
        assert_eq!(r, RatVector::from_ints(&[1, 1]));
    }

    #[test]
    fn independent_vectors_are_obstructed() {
        let rows = v(&[vec![1, 0], vec![0, 1]]);
        let ans = positive_dependency_certified(&rows).unwrap();
        assert!(matches!(ans, PositiveDependency::Obstructed(_)));
        assert!(check_positive_dependency(&rows, &ans));
    }

    #[test]
    fn diagonal_rows_of_family_gale_dual() {
        let rows = v(&[vec![1, 1], vec![-1, -1]]);
        let r = positive_dependency(&rows).unwrap().unwrap();
        assert_eq!(r, RatVector::from_ints(&[1, 1]));
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(positive_dependency(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn unbalanced_weights() {
        let rows = v(&[vec![2, 0], vec![-1, 1], vec![-1, -1]]);
        let ans = positive_dependency_certified(&rows).unwrap();
        assert!(check_positive_dependency(&rows, &ans));
        assert!(ans.relation().is_some());
    }
}
