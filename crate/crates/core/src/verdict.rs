//! Boolean answers with checkable evidence.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::config::DecompositionReport;
use crate::gale::{LineClass, LinePartition};
use crate::linalg::{IntMatrix, RatVector};

/// Which test produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Gale rows on every line through the origin sum to zero.
    GaleLineSums,
    /// Every coparallelism class is a parallel face complement.
    ParallelFaceComplements,
    /// Reduction through repeats, apexes and the non-pyramidal core.
    JoinDecomposition,
    /// Strictly positive dependency among the Gale rows of the complement.
    FaceComplement,
    /// Affine functional equal to one on the class and zero off it.
    ParallelFaceComplement,
    /// Line sums plus the signed power products of every Gale column.
    StrongGaleProducts,
    /// All-ones vector in the row span of the lower block over GF(2).
    LawrenceParity,
    /// First lattice points along the edges at every vertex form a lattice basis.
    SmoothVertexBases,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Self::GaleLineSums => "gale_line_sums",
            Self::ParallelFaceComplements => "parallel_face_complements",
            Self::JoinDecomposition => "join_decomposition",
            Self::FaceComplement => "face_complement",
            Self::ParallelFaceComplement => "parallel_face_complement",
            Self::StrongGaleProducts => "strong_gale_products",
            Self::LawrenceParity => "lawrence_parity",
            Self::SmoothVertexBases => "smooth_vertex_bases",
        }
    }
}

impl std::fmt::Display for Criterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a decomposition-based verdict is negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecompositionFailure {
    /// The number of apexes differs from the number of surplus copies.
    ApexCount { apexes: usize, repeats: usize },
    /// Apex and core do not split the lattice.
    Splitting,
    /// The core fails the line-sum test.
    Core,
}

/// Edges found at one vertex of the convex hull.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexStar {
    pub vertex: usize,
    /// For each edge, the index of the point on it closest to the vertex.
    pub first_points: Vec<usize>,
}

/// Why a vertex does not certify smoothness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StarDefect {
    EdgeCount {
        found: usize,
        expected: usize,
    },
    /// Edge vectors span a sublattice of the given index (zero if not full rank).
    NotBasis {
        #[serde(with = "crate::bigser::int")]
        index: BigInt,
    },
}

/// One Gale column's power products in the strong test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerProducts {
    #[serde(with = "crate::bigser::int")]
    pub positive: BigInt,
    #[serde(with = "crate::bigser::int")]
    pub negative: BigInt,
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Line classes of the Gale rows, all summing to zero.
    LineClasses {
        partition: LinePartition,
    },
    /// A line class whose sum is nonzero.
    ViolatingLine {
        class: LineClass,
    },
    /// The subset is every point.
    ImproperFace,
    /// Positive coefficients on the complement's Gale rows summing to zero.
    PositiveRelation {
        complement: Vec<usize>,
        coefficients: RatVector,
    },
    /// `y` pairing non-positively with every complement Gale row, negatively with one.
    SeparatingObstruction {
        complement: Vec<usize>,
        functional: RatVector,
    },
    /// Affine functional `(c, l)`, the constant first, with value one on the class.
    Functional {
        class: Vec<usize>,
        functional: RatVector,
    },
    /// An affine relation whose coefficients on the class do not sum to zero.
    RelationObstruction {
        class: Vec<usize>,
        #[serde(with = "crate::bigser::int_vec")]
        relation: Vec<BigInt>,
    },
    /// One functional per coparallelism class.
    ClassFunctionals {
        classes: Vec<Vec<usize>>,
        functionals: Vec<RatVector>,
    },
    Decomposition {
        report: DecompositionReport,
        failure: Option<DecompositionFailure>,
        core: Option<Box<Verdict>>,
    },
    /// The Gale basis tested and its per-column products.
    StrongProducts {
        basis: IntMatrix,
        partition: LinePartition,
        products: Vec<PowerProducts>,
    },
    /// Rows of the normalized lower block whose sum is odd in every column.
    ParitySubset {
        normalized: IntMatrix,
        rows: Vec<usize>,
    },
    /// Columns whose sum over GF(2) is zero in every row, odd in number.
    ParityObstruction {
        normalized: IntMatrix,
        columns: Vec<usize>,
    },
    SmoothCertificate {
        stars: Vec<VertexStar>,
    },
    NotCertified {
        star: VertexStar,
        defect: StarDefect,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: bool,
    pub criterion: Criterion,
    pub witness: Witness,
}

impl Verdict {
    pub fn new(value: bool, criterion: Criterion, witness: Witness) -> Self {
        Self {
            value,
            criterion,
            witness,
        }
    }
}
