//! Gauss-Jordan elimination over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{IntMatrix, RatVector};
use crate::error::{Error, Result};

pub(crate) type RatRows = Vec<Vec<BigRational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(a: &mut RatRows) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rational_rank(m: &IntMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let mut a = m.to_rational_rows();
    rref(&mut a).len()
}

/// Basis of the rational null space `{x : m x = 0}`, one vector per free column.
pub fn rational_kernel(m: &IntMatrix) -> Vec<RatVector> {
    let n = m.cols();
    if m.rows() == 0 {
        return (0..n)
            .map(|j| {
                let mut v = RatVector::zeros(n);
                v.0[j] = BigRational::one();
                v
            })
            .collect();
    }
    let mut a = m.to_rational_rows();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = RatVector::zeros(n);
            v.0[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v.0[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Outcome of asking whether a target is a rational combination of the rows of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowSpanSolution {
    /// Coefficients `y` with `y^T m = target`.
    Combination(RatVector),
    /// A vector `x` with `m x = 0` and `target . x != 0`.
    Obstruction(RatVector),
}

/// Finds `y` with `y^T m = target`, or a kernel vector of `m` that pairs nontrivially with `target`.
pub fn solve_left(m: &IntMatrix, target: &RatVector) -> Result<RowSpanSolution> {
    if target.len() != m.cols() {
        return Err(Error::DimensionMismatch {
            expected: m.cols(),
            found: target.len(),
        });
    }
    let d = m.rows();
    let n = m.cols();
    // m^T y = target, augmented with the target column
    let mut a: RatRows = (0..n)
        .map(|j| {
            let mut row: Vec<BigRational> = (0..d)
                .map(|i| BigRational::from_integer(m[(i, j)].clone()))
                .collect();
            row.push(target.0[j].clone());
            row
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.last() == Some(&d) {
        for x in rational_kernel(m) {
            let pairing: BigRational = x.0.iter().zip(&target.0).map(|(a, b)| a * b).sum();
            if !pairing.is_zero() {
                return Ok(RowSpanSolution::Obstruction(x));
            }
        }
        unreachable!("inconsistent system without a kernel obstruction");
    }
    let mut y = RatVector::zeros(d);
    for (r, &p) in pivots.iter().enumerate() {
        y.0[p] = a[r][d].clone();
    }
    Ok(RowSpanSolution::Combination(y))
}

/// True iff `v` is a rational combination of the rows of `m`.
pub fn in_row_span(m: &IntMatrix, v: &RatVector) -> Result<bool> {
    Ok(matches!(solve_left(m, v)?, RowSpanSolution::Combination(_)))
}

/// Exact inverse of a square matrix over the rationals.
pub(crate) fn inverse(m: &IntMatrix) -> Option<RatRows> {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut a: RatRows = m.to_rational_rows();
    for (i, row) in a.iter_mut().enumerate() {
        row.extend((0..n).map(|j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
    }
    let pivots = rref(&mut a);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Inverse of a unimodular integer matrix.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    let inv = inverse(m)?;
    let mut out = IntMatrix::zeros(m.rows(), m.cols());
    for (i, row) in inv.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            if !x.is_integer() {
                return None;
            }
            out[(i, j)] = x.to_integer();
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(rational_rank(&IntMatrix::identity(4)), 4);
        assert_eq!(rational_rank(&IntMatrix::zeros(3, 2)), 0);
        assert_eq!(rational_rank(&m(&[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn row_span_membership() {
        let a = m(&[vec![1, 1, 1], vec![0, 1, 2]]);
        assert!(in_row_span(&a, &RatVector::from_ints(&[1, 1, 1])).unwrap());
        assert!(in_row_span(&a, &RatVector::from_ints(&[0, 1, 2])).unwrap());
        assert!(in_row_span(&a, &RatVector::zeros(3)).unwrap());
        assert!(!in_row_span(&a, &RatVector::from_ints(&[1, 0, 0])).unwrap());
        assert!(matches!(
            in_row_span(&a, &RatVector::zeros(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn obstruction_pairs_nontrivially() {
        let a = m(&[vec![1, 1, 1], vec![0, 1, 2]]);
        let t = RatVector::from_ints(&[1, 0, 0]);
        let RowSpanSolution::Obstruction(x) = solve_left(&a, &t).unwrap() else {
            panic!("expected an obstruction");
        };
        let ints = x.to_primitive_ints();
        assert!(a.mul_vec(&ints).unwrap().iter().all(Zero::is_zero));
        assert!(!x.0[0].is_zero());
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let u = m(&[vec![2, 1], vec![1, 1]]);
        let inv = unimodular_inverse(&u).unwrap();
        assert_eq!(&u * &inv, IntMatrix::identity(2));
        assert!(unimodular_inverse(&m(&[vec![2, 0], vec![0, 1]])).is_none());
    }
}
