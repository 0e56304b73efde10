//! Point configurations, the standard reductions, and the pyramid/join
//! decomposition.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    integer_kernel, rational_rank, row_lattice_basis, smith_normal_form, solve_left, IntMatrix,
    RatVector, RowSpanSolution,
};

/// A finite list of lattice points, stored as the columns of a `d x n` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub weights: IntMatrix,
    /// Some rational functional is identically one on the columns.
    pub regular: bool,
    /// The columns span `Z^d`.
    pub lattice_normalized: bool,
}

/// Validates the matrix and computes the regularity and lattice flags.
pub fn parse_configuration(matrix: IntMatrix) -> Result<Configuration> {
    if matrix.rows() == 0 || matrix.cols() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let regular = is_regular(&matrix);
    let lattice_normalized = spans_full_lattice(&matrix);
    Ok(Configuration {
        weights: matrix,
        regular,
        lattice_normalized,
    })
}

fn is_regular(m: &IntMatrix) -> bool {
    let ones = RatVector(vec![One::one(); m.cols()]);
    matches!(solve_left(m, &ones), Ok(RowSpanSolution::Combination(_)))
}

fn spans_full_lattice(m: &IntMatrix) -> bool {
    let sf = smith_normal_form(m);
    sf.rank == m.rows() && sf.invariant_factors().iter().all(One::is_one)
}

impl Configuration {
    pub fn new(weights: IntMatrix) -> Result<Self> {
        parse_configuration(weights)
    }

    /// Builds a configuration from matrix rows.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        parse_configuration(IntMatrix::from_rows(rows)?)
    }

    /// Builds a configuration whose columns are the given points.
    pub fn from_points<T: Into<BigInt> + Clone>(points: &[Vec<T>]) -> Result<Self> {
        parse_configuration(IntMatrix::from_rows(points)?.transpose())
    }

    /// Number of points `n`.
    pub fn len(&self) -> usize {
        self.weights.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Ambient dimension `d`.
    pub fn ambient_dim(&self) -> usize {
        self.weights.rows()
    }

    pub fn point(&self, i: usize) -> Vec<BigInt> {
        self.weights.col(i)
    }

    pub fn points(&self) -> Vec<Vec<BigInt>> {
        self.weights.col_vectors()
    }

    /// The weights with an all-ones row on top. Its kernel is the lattice of
    /// affine relations.
    pub fn affine_matrix(&self) -> IntMatrix {
        self.weights.with_ones_row()
    }

    /// The configuration formed by the given points, in the given order.
    pub fn subconfiguration(&self, indices: &[usize]) -> Result<Configuration> {
        let n = self.len();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        parse_configuration(self.weights.select_columns(indices))
    }

    /// First pair of equal columns, if any.
    pub fn repeated_pair(&self) -> Option<(usize, usize)> {
        let pts = self.points();
        for j in 0..pts.len() {
            if let Some(i) = (0..j).find(|&i| pts[i] == pts[j]) {
                return Some((i, j));
            }
        }
        None
    }

    pub(crate) fn require_repeat_free(&self, criterion: &'static str) -> Result<()> {
        match self.repeated_pair() {
            Some((first, second)) => Err(Error::RepeatedColumns {
                criterion,
                first,
                second,
            }),
            None => Ok(()),
        }
    }
}

/// Integer lattice of affine relations `{a : sum a_i = 0, sum a_i lambda_i = 0}`,
/// as the columns of a canonical basis.
pub fn affine_relations(c: &Configuration) -> IntMatrix {
    integer_kernel(&c.affine_matrix())
}

/// Returns `c` if it is regular, otherwise `c` with an all-ones row prepended.
pub fn regularize(c: &Configuration) -> Configuration {
    if c.regular {
        return c.clone();
    }
    let weights = c.affine_matrix();
    Configuration {
        lattice_normalized: spans_full_lattice(&weights),
        weights,
        regular: true,
    }
}

/// Re-expresses `c` in coordinates where its columns span the whole lattice.
///
/// Returns `(c', e)` with `c.weights = e * c'.weights`; `c'` has full row rank
/// and the same relation lattice. Already normalized input is returned
/// unchanged with the identity transform.
pub fn normalize_lattice(c: &Configuration) -> Result<(Configuration, IntMatrix)> {
    let w = &c.weights;
    let sf = smith_normal_form(w);
    if sf.rank == 0 {
        return Err(Error::RankZero);
    }
    if c.lattice_normalized {
        return Ok((c.clone(), IntMatrix::identity(w.rows())));
    }
    // u w v = s, so the first rank rows of u w are d_i times rows of v^-1
    let uw = &sf.u * w;
    let mut reduced = IntMatrix::zeros(sf.rank, w.cols());
    for (i, d) in sf.invariant_factors().iter().enumerate() {
        for j in 0..w.cols() {
            reduced[(i, j)] = &uw[(i, j)] / d;
        }
    }
    let canonical = row_lattice_basis(&reduced);

    let mut e = IntMatrix::zeros(w.rows(), canonical.rows());
    for i in 0..w.rows() {
        let target = RatVector::from_ints(w.row(i));
        let RowSpanSolution::Combination(y) = solve_left(&canonical, &target)? else {
            unreachable!("rows of the input lie in the span of the normalized rows");
        };
        for (k, yk) in y.0.iter().enumerate() {
            debug_assert!(yk.is_integer());
            e[(i, k)] = yk.to_integer();
        }
    }
    let normalized = Configuration {
        regular: c.regular,
        lattice_normalized: true,
        weights: canonical,
    };
    Ok((normalized, e))
}

/// Equal columns grouped together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DedupReport {
    /// The `h` distinct points, in order of first appearance.
    pub distinct: Configuration,
    /// How many times each distinct point occurs.
    pub multiplicity: Vec<usize>,
    /// Original index to distinct index.
    pub index_map: Vec<usize>,
}

impl DedupReport {
    /// `k = n - h`, the number of surplus copies.
    pub fn repeat_count(&self) -> usize {
        self.multiplicity.iter().map(|m| m - 1).sum()
    }
}

pub fn dedup(c: &Configuration) -> DedupReport {
    let mut reps: Vec<Vec<BigInt>> = Vec::new();
    let mut first_index = Vec::new();
    let mut multiplicity = Vec::new();
    let mut index_map = Vec::with_capacity(c.len());
    for (i, p) in c.points().into_iter().enumerate() {
        match reps.iter().position(|q| *q == p) {
            Some(k) => {
                multiplicity[k] += 1;
                index_map.push(k);
            }
            None => {
                index_map.push(reps.len());
                reps.push(p);
                first_index.push(i);
                multiplicity.push(1);
            }
        }
    }
    let distinct = c
        .subconfiguration(&first_index)
        .expect("indices of first occurrences are in range");
    DedupReport {
        distinct,
        multiplicity,
        index_map,
    }
}

/// Dimension of the affine span of the points.
pub fn affine_dim(c: &Configuration) -> usize {
    rational_rank(&c.affine_matrix()) - 1
}

/// Structure of a configuration as a join of a linear space, a simplex and a
/// non-pyramidal core.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    /// `k`: codimension of the linear span of the variety, the number of surplus copies.
    pub repeat_codim: usize,
    /// Distinct points lying in no affine relation.
    pub apex_indices: Vec<usize>,
    /// The remaining distinct points.
    pub core_indices: Vec<usize>,
    /// The lattice of the points splits as apex part plus core part.
    pub splitting_valid: bool,
    /// `(k, r, h - r)` with `r` apexes among `h` distinct points.
    pub join_shape: (usize, usize, usize),
    /// Distinct index of every original point.
    pub index_map: Vec<usize>,
}

impl DecompositionReport {
    pub fn apex_count(&self) -> usize {
        self.apex_indices.len()
    }

    pub fn is_pyramidal(&self) -> bool {
        !self.apex_indices.is_empty()
    }
}

/// Removes repeats and splits the distinct points into apexes and core.
///
/// Index sets refer to the distinct points of [`dedup`].
pub fn pyramid_decompose(c: &Configuration) -> DecompositionReport {
    let report = dedup(c);
    let k = report.repeat_count();
    let distinct = &report.distinct;
    let relations = affine_relations(distinct);
    let (apex, core): (Vec<usize>, Vec<usize>) =
        (0..distinct.len()).partition(|&i| relations.row(i).iter().all(Zero::is_zero));
    let splitting_valid = lattice_splits(distinct, &apex, &core);
    let h = distinct.len();
    DecompositionReport {
        repeat_codim: k,
        join_shape: (k, apex.len(), h - apex.len()),
        apex_indices: apex,
        core_indices: core,
        splitting_valid,
        index_map: report.index_map,
    }
}

/// Checks, on the homogenized points, that the apex columns are independent,
/// that the apex and core spans meet only in zero, and that the lattice they
/// generate together is saturated in the lattice of all points.
pub(crate) fn lattice_splits(c: &Configuration, apex: &[usize], core: &[usize]) -> bool {
    let w = c.affine_matrix();
    let all_rank = rational_rank(&w);
    let apex_m = w.select_columns(apex);
    let core_m = w.select_columns(core);
    let apex_rank = if apex.is_empty() {
        0
    } else {
        rational_rank(&apex_m)
    };
    let core_rank = if core.is_empty() {
        0
    } else {
        rational_rank(&core_m)
    };
    if apex_rank != apex.len() || apex_rank + core_rank != all_rank {
        return false;
    }
    // every vector of the full lattice lying in the apex span must already be
    // an integer combination of the apex columns
    if apex.is_empty() {
        return true;
    }
    let (normalized, _) = match normalize_lattice(&Configuration {
        regular: true,
        lattice_normalized: spans_full_lattice(&w),
        weights: w.clone(),
    }) {
        Ok(x) => x,
        Err(_) => return false,
    };
    let wn = normalized.weights;
    let stacked: Vec<usize> = apex.iter().chain(core).copied().collect();
    let sf = smith_normal_form(&wn.select_columns(&stacked));
    let apex_sf = smith_normal_form(&wn.select_columns(apex));
    sf.invariant_factors().iter().all(One::is_one)
        && apex_sf.invariant_factors().iter().all(One::is_one)
}
