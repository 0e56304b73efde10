//! Hermite and Smith normal forms, integer kernels and lattice saturation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::rational::unimodular_inverse;

/// Column Hermite form `h = m * u` with `u` unimodular.
///
/// `h` is lower echelon: each of the first `rank` columns has a positive pivot
/// strictly below the previous pivot, entries to the left of a pivot lie in
/// `[0, pivot)`, and the remaining columns are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
}

pub fn hermite_normal_form(m: &IntMatrix) -> HermiteForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(cols);
    let mut p = 0;
    let mut pivot_rows = Vec::new();
    for i in 0..rows {
        if p == cols {
            break;
        }
        while let Some(jmin) = (p..cols)
            .filter(|&j| !h[(i, j)].is_zero())
            .min_by(|&a, &b| h[(i, a)].abs().cmp(&h[(i, b)].abs()))
        {
            h.swap_cols(p, jmin);
            u.swap_cols(p, jmin);
            let mut done = true;
            for j in p + 1..cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = h[(i, j)].div_floor(&h[(i, p)]);
                h.col_axpy(j, p, &q);
                u.col_axpy(j, p, &q);
                if !h[(i, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(i, p)].is_zero() {
            continue;
        }
        if h[(i, p)].is_negative() {
            h.negate_col(p);
            u.negate_col(p);
        }
        for j in 0..p {
            let q = h[(i, j)].div_floor(&h[(i, p)]);
            h.col_axpy(j, p, &q);
            u.col_axpy(j, p, &q);
        }
        pivot_rows.push(i);
        p += 1;
    }
    HermiteForm {
        h,
        u,
        rank: p,
        pivot_rows,
    }
}

/// Smith form `s = u * m * v` with `u`, `v` unimodular and
/// `s = diag(d_1, ..., d_rank, 0, ...)`, `d_i > 0`, `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish(s, u, v, rank);
            };
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut clean = true;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                s.row_axpy(i, t, &q);
                u.row_axpy(i, t, &q);
                if !s[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                s.col_axpy(j, t, &q);
                v.col_axpy(j, t, &q);
                if !s[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&s[(t, t)])));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    s.row_axpy(t, i, &minus_one);
                    u.row_axpy(t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        rank += 1;
    }
    finish(s, u, v, rank)
}

fn finish(s: IntMatrix, u: IntMatrix, v: IntMatrix, rank: usize) -> SmithForm {
    SmithForm { s, u, v, rank }
}

/// Canonical basis (nonzero columns of the column Hermite form) of the lattice
/// spanned by the columns of `m`.
pub fn column_lattice_basis(m: &IntMatrix) -> IntMatrix {
    let hf = hermite_normal_form(m);
    let keep: Vec<usize> = (0..hf.rank).collect();
    hf.h.select_columns(&keep)
}

/// Canonical basis of the lattice spanned by the rows of `m`, as rows.
pub fn row_lattice_basis(m: &IntMatrix) -> IntMatrix {
    column_lattice_basis(&m.transpose()).transpose()
}

pub fn same_column_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.rows() == b.rows() && column_lattice_basis(a) == column_lattice_basis(b)
}

/// Z-basis of the saturated lattice `{v in Z^n : m v = 0}`, as columns in
/// canonical Hermite form.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let hf = hermite_normal_form(m);
    let free: Vec<usize> = (hf.rank..m.cols()).collect();
    let basis = hf.u.select_columns(&free);
    if basis.cols() == 0 {
        return basis;
    }
    column_lattice_basis(&basis)
}

/// Basis of the saturation `(L (x) Q) ∩ Z^n` of the column lattice `L` of `m`.
pub fn saturate(m: &IntMatrix) -> IntMatrix {
    let sf = smith_normal_form(m);
    let u_inv = unimodular_inverse(&sf.u).expect("smith transform is unimodular");
    let keep: Vec<usize> = (0..sf.rank).collect();
    column_lattice_basis(&u_inv.select_columns(&keep))
}

/// Index of the column lattice of `m` inside its saturation (product of the
/// invariant factors); `1` iff the lattice is saturated.
pub fn saturation_index(m: &IntMatrix) -> BigInt {
    smith_normal_form(m)
        .invariant_factors()
        .into_iter()
        .fold(BigInt::one(), |acc, d| acc * d)
}
