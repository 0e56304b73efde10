//! Exact feasibility of `{x >= 0 : A x = b}` by a phase-one simplex over the
//! rationals, with Bland's rule against cycling.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::RatVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A point `x >= 0` with `A x = b`.
    Feasible(RatVector),
    /// A Farkas certificate `y` with `y^T A <= 0` componentwise and `y^T b > 0`.
    Infeasible(RatVector),
}

/// `a` has one row per equation.
pub fn nonnegative_solution(a: &[Vec<BigRational>], b: &[BigRational]) -> Feasibility {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    assert_eq!(b.len(), m, "right-hand side length");
    if m == 0 {
        return Feasibility::Feasible(RatVector::zeros(n));
    }

    // rows with negative rhs are negated so artificials start feasible
    let signs: Vec<bool> = b.iter().map(|x| x.is_negative()).collect();
    let width = n + m + 1;
    let rhs = n + m;
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = vec![BigRational::zero(); width];
            for j in 0..n {
                row[j] = if signs[i] {
                    -a[i][j].clone()
                } else {
                    a[i][j].clone()
                };
            }
            row[n + i] = BigRational::one();
            row[rhs] = if signs[i] {
                -b[i].clone()
            } else {
                b[i].clone()
            };
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            match leave {
                None => leave = Some(i),
                Some(l) => {
                    let lhs = &t[i][rhs] / &t[i][enter];
                    let cur = &t[l][rhs] / &t[l][enter];
                    if lhs < cur || (lhs == cur && basis[i] < basis[l]) {
                        leave = Some(i);
                    }
                }
            }
        }
        // phase one is bounded below by zero
        let leave = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut cost, leave, enter);
        basis[leave] = enter;
    }

    if cost[rhs].is_zero() {
        let mut x = RatVector::zeros(n);
        for (i, &j) in basis.iter().enumerate() {
            if j < n {
                x.0[j] = t[i][rhs].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // reduced cost of artificial i is 1 - y_i for the sign-adjusted system
        let y = (0..m)
            .map(|i| {
                let yi = BigRational::one() - &cost[n + i];
                if signs[i] {
                    -yi
                } else {
                    yi
                }
            })
            .collect();
        Feasibility::Infeasible(RatVector(y))
    }
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let inv = t[r][c].recip();
    for x in t[r].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= p * &f;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= p * &f;
            }
        }
    }
}

/// Checks a claimed outcome against the system it answers.
pub fn certifies(a: &[Vec<BigRational>], b: &[BigRational], outcome: &Feasibility) -> bool {
    match outcome {
        Feasibility::Feasible(x) => {
            x.0.iter().all(|v| !v.is_negative())
                && a.iter().zip(b).all(|(row, bi)| {
                    let lhs: BigRational = row.iter().zip(&x.0).map(|(p, q)| p * q).sum();
                    &lhs == bi
                })
        }
        Feasibility::Infeasible(y) => {
            let n = a.first().map_or(0, Vec::len);
            let yb: BigRational = y.0.iter().zip(b).map(|(p, q)| p * q).sum();
            yb.is_positive()
                && (0..n).all(|j| {
                    let s: BigRational = y.0.iter().zip(a).map(|(p, row)| p * &row[j]).sum();
                    !s.is_positive()
                })
        }
    }
}
