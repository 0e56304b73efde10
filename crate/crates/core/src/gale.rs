//! Gale duality and the combinatorics of the Gale rows: lines through the
//! origin, coparallelism, face complements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::config::{affine_relations, Configuration};
use crate::error::{Error, Result};
use crate::linalg::{
    column_lattice_basis, positive_dependency_certified, primitive_direction, rational_rank,
    solve_left, vec_sum, IntMatrix, PositiveDependency, RatVector, RowSpanSolution,
};
use crate::verdict::{Criterion, Verdict, Witness};

/// `n x r` matrix whose columns are a saturated basis of the affine relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaleDual {
    pub matrix: IntMatrix,
}

impl GaleDual {
    /// Wraps a matrix without checking it.
    pub fn from_matrix(matrix: IntMatrix) -> Self {
        Self { matrix }
    }

    pub fn len(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of columns `r`.
    pub fn rank(&self) -> usize {
        self.matrix.cols()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        self.matrix.row(i)
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.matrix.row_vectors()
    }

    pub fn zero_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.row(i).iter().all(Zero::is_zero))
            .collect()
    }
}

/// The canonical Gale dual: Hermite basis of the affine relation lattice.
pub fn gale_dual(c: &Configuration) -> GaleDual {
    let matrix = affine_relations(c);
    let matrix = if matrix.cols() == 0 {
        IntMatrix::zeros(c.len(), 0)
    } else {
        matrix
    };
    GaleDual { matrix }
}

/// True iff the columns of `b` are a basis of the affine relation lattice of `c`.
pub fn verify_gale_dual(c: &Configuration, b: &IntMatrix) -> Result<bool> {
    if b.rows() != c.len() {
        return Err(Error::DimensionMismatch {
            expected: c.len(),
            found: b.rows(),
        });
    }
    if b.cols() == 0 {
        return Ok(gale_dual(c).rank() == 0);
    }
    let relations_hold = c.affine_matrix().checked_mul(b)?.is_zero();
    let independent = rational_rank(b) == b.cols();
    Ok(relations_hold && independent && column_lattice_basis(b) == gale_dual(c).matrix)
}

/// Nonzero Gale rows on one line through the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineClass {
    /// Primitive vector with positive first nonzero entry.
    #[serde(with = "crate::bigser::int_vec")]
    pub direction: Vec<BigInt>,
    pub members: Vec<usize>,
    #[serde(with = "crate::bigser::int_vec")]
    pub sum: Vec<BigInt>,
}

impl LineClass {
    pub fn sums_to_zero(&self) -> bool {
        self.sum.iter().all(Zero::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinePartition {
    /// Classes ordered by their smallest member.
    pub classes: Vec<LineClass>,
    pub zero_rows: Vec<usize>,
}

pub fn line_partition(b: &GaleDual) -> LinePartition {
    let r = b.rank();
    let mut classes: Vec<LineClass> = Vec::new();
    let mut zero_rows = Vec::new();
    for i in 0..b.len() {
        let row = b.row(i);
        let Some(dir) = primitive_direction(row) else {
            zero_rows.push(i);
            continue;
        };
        match classes.iter_mut().find(|c| c.direction == dir) {
            Some(class) => class.members.push(i),
            None => classes.push(LineClass {
                direction: dir,
                members: vec![i],
                sum: Vec::new(),
            }),
        }
    }
    for class in &mut classes {
        class.sum = vec_sum(class.members.iter().map(|&i| b.row(i).to_vec()), r);
    }
    LinePartition { classes, zero_rows }
}

/// Every line through the origin carries Gale rows summing to zero.
///
/// Only meaningful for non-pyramidal configurations; zero rows are an error.
pub fn line_sums_zero(b: &GaleDual) -> Result<Verdict> {
    let partition = line_partition(b);
    if !partition.zero_rows.is_empty() {
        return Err(Error::Pyramidal {
            criterion: "the Gale line-sum test",
            apexes: partition.zero_rows,
        });
    }
    Ok(line_sum_verdict(partition))
}

pub(crate) fn line_sum_verdict(partition: LinePartition) -> Verdict {
    match partition.classes.iter().find(|c| !c.sums_to_zero()) {
        Some(bad) => Verdict::new(
            false,
            Criterion::GaleLineSums,
            Witness::ViolatingLine { class: bad.clone() },
        ),
        None => Verdict::new(
            true,
            Criterion::GaleLineSums,
            Witness::LineClasses { partition },
        ),
    }
}

/// Indices grouped by parallel Gale rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoparallelClasses {
    /// Classes ordered by their smallest member; zero rows form singletons.
    pub classes: Vec<Vec<usize>>,
    /// Zero rows, present only for pyramidal input.
    pub flagged_zero_rows: Vec<usize>,
}

pub fn coparallel_classes(b: &GaleDual) -> CoparallelClasses {
    let partition = line_partition(b);
    let mut classes: Vec<Vec<usize>> = partition.classes.into_iter().map(|c| c.members).collect();
    classes.extend(partition.zero_rows.iter().map(|&i| vec![i]));
    classes.sort_by_key(|c| c[0]);
    CoparallelClasses {
        classes,
        flagged_zero_rows: partition.zero_rows,
    }
}

fn check_subset(c: &Configuration, subset: &[usize]) -> Result<Vec<bool>> {
    let n = c.len();
    if subset.is_empty() {
        return Err(Error::InvalidParameter("subset must be nonempty".into()));
    }
    let mut mask = vec![false; n];
    for &i in subset {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        mask[i] = true;
    }
    Ok(mask)
}

/// True iff the subset is the set of points on some face of the convex hull.
pub fn is_facial(c: &Configuration, subset: &[usize]) -> Result<Verdict> {
    let mask = check_subset(c, subset)?;
    let complement: Vec<usize> = (0..c.len()).filter(|&i| !mask[i]).collect();
    if complement.is_empty() {
        return Ok(Verdict::new(
            true,
            Criterion::FaceComplement,
            Witness::ImproperFace,
        ));
    }
    let b = gale_dual(c);
    if b.rank() == 0 {
        return Ok(facial_without_relations(c, &mask, complement));
    }
    let rows: Vec<Vec<BigInt>> = complement.iter().map(|&i| b.row(i).to_vec()).collect();
    let verdict = match positive_dependency_certified(&rows)? {
        PositiveDependency::Found(coefficients) => Verdict::new(
            true,
            Criterion::FaceComplement,
            Witness::PositiveRelation {
                complement,
                coefficients,
            },
        ),
        PositiveDependency::Obstructed(functional) => Verdict::new(
            false,
            Criterion::FaceComplement,
            Witness::SeparatingObstruction {
                complement,
                functional,
            },
        ),
    };
    Ok(verdict)
}

/// Affinely independent points: every subset is a face. An affine functional
/// vanishing on the subset and equal to `-1` off it is the witness.
fn facial_without_relations(c: &Configuration, mask: &[bool], complement: Vec<usize>) -> Verdict {
    let a = c.affine_matrix();
    let target = RatVector(
        mask.iter()
            .map(|&inside| {
                if inside {
                    BigRational::zero()
                } else {
                    -BigRational::one()
                }
            })
            .collect(),
    );
    match solve_left(&a, &target).expect("target has one entry per point") {
        RowSpanSolution::Combination(functional) => Verdict::new(
            true,
            Criterion::FaceComplement,
            Witness::Functional {
                class: complement,
                functional,
            },
        ),
        RowSpanSolution::Obstruction(_) => {
            unreachable!("points without affine relations are affinely independent")
        }
    }
}

/// Solves for an affine functional equal to one on `class` and zero elsewhere.
pub fn is_parallel_face_complement(c: &Configuration, class: &[usize]) -> Result<Verdict> {
    let mask = check_subset(c, class)?;
    let mut class: Vec<usize> = class.to_vec();
    class.sort_unstable();
    class.dedup();
    let target = RatVector(
        mask.iter()
            .map(|&inside| {
                if inside {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect(),
    );
    let verdict = match solve_left(&c.affine_matrix(), &target)? {
        RowSpanSolution::Combination(functional) => Verdict::new(
            true,
            Criterion::ParallelFaceComplement,
            Witness::Functional { class, functional },
        ),
        RowSpanSolution::Obstruction(x) => Verdict::new(
            false,
            Criterion::ParallelFaceComplement,
            Witness::RelationObstruction {
                class,
                relation: x.to_primitive_ints(),
            },
        ),
    };
    Ok(verdict)
}

/// Every coparallelism class is a parallel face complement.
pub fn coparallel_criterion(c: &Configuration) -> Result<Verdict> {
    c.require_repeat_free("the coparallelism criterion")?;
    let b = gale_dual(c);
    let zero = b.zero_rows();
    if !zero.is_empty() {
        return Err(Error::Pyramidal {
            criterion: "the coparallelism criterion",
            apexes: zero,
        });
    }
    let classes = coparallel_classes(&b).classes;
    let mut functionals = Vec::with_capacity(classes.len());
    for class in &classes {
        let v = is_parallel_face_complement(c, class)?;
        match v.witness {
            Witness::Functional { functional, .. } => functionals.push(functional),
            _ => {
                return Ok(Verdict::new(
                    false,
                    Criterion::ParallelFaceComplements,
                    v.witness,
                ));
            }
        }
    }
    Ok(Verdict::new(
        true,
        Criterion::ParallelFaceComplements,
        Witness::ClassFunctionals {
            classes,
            functionals,
        },
    ))
}
