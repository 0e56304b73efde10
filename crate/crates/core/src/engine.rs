//! Top-level verdicts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::config::{affine_dim, dedup, normalize_lattice, pyramid_decompose, Configuration};
use crate::error::{Error, Result};
use crate::gale::{
    gale_dual, is_facial, line_partition, line_sum_verdict, verify_gale_dual, GaleDual,
};
use crate::linalg::{
    column_lattice_basis, gf2_rref, is_odd, rational_rank, saturation_index, IntMatrix,
};
use crate::verdict::{
    Criterion, DecompositionFailure, PowerProducts, StarDefect, Verdict, VertexStar, Witness,
};

/// Decides self-duality for an arbitrary configuration.
///
/// Repeats are removed first; the surplus copies must be matched by as many
/// apexes, and the remaining core must pass the line-sum test. A configuration
/// without repeats or apexes is answered by the line-sum test directly.
pub fn is_self_dual(c: &Configuration) -> Verdict {
    let report = pyramid_decompose(c);
    let distinct = dedup(c).distinct;
    if report.repeat_codim == 0 && !report.is_pyramidal() {
        return line_sum_verdict(line_partition(&gale_dual(&distinct)));
    }
    let decomposition = |failure: Option<DecompositionFailure>, core: Option<Verdict>| {
        Verdict::new(
            failure.is_none(),
            Criterion::JoinDecomposition,
            Witness::Decomposition {
                report: report.clone(),
                failure,
                core: core.map(Box::new),
            },
        )
    };
    if report.apex_count() != report.repeat_codim {
        return decomposition(
            Some(DecompositionFailure::ApexCount {
                apexes: report.apex_count(),
                repeats: report.repeat_codim,
            }),
            None,
        );
    }
    if !report.splitting_valid {
        return decomposition(Some(DecompositionFailure::Splitting), None);
    }
    if report.core_indices.is_empty() {
        return decomposition(None, None);
    }
    let core = distinct
        .subconfiguration(&report.core_indices)
        .expect("core indices are in range");
    let core_verdict = line_sum_verdict(line_partition(&gale_dual(&core)));
    let failure = (!core_verdict.value).then_some(DecompositionFailure::Core);
    decomposition(failure, Some(core_verdict))
}

fn require_strong_hypotheses(c: &Configuration, b: &GaleDual) -> Result<()> {
    if !c.regular {
        return Err(Error::NonRegular {
            criterion: "the strong self-duality test",
        });
    }
    let zero = b.zero_rows();
    if !zero.is_empty() {
        return Err(Error::Pyramidal {
            criterion: "the strong self-duality test",
            apexes: zero,
        });
    }
    Ok(())
}

/// `(prod_{b > 0} b^b, prod_{b < 0} b^(-b))` with signed bases.
pub fn power_products(column: &[BigInt]) -> Result<PowerProducts> {
    let mut positive = BigInt::one();
    let mut negative = BigInt::one();
    for b in column {
        let e = b
            .abs()
            .to_u32()
            .ok_or_else(|| Error::InvalidParameter(format!("exponent {b} too large")))?;
        if b.is_positive() {
            positive *= b.pow(e);
        } else if b.is_negative() {
            negative *= b.pow(e);
        }
    }
    Ok(PowerProducts { positive, negative })
}

fn strong_verdict(b: &GaleDual) -> Result<Verdict> {
    let partition = line_partition(b);
    let lines_ok = partition.classes.iter().all(|c| c.sums_to_zero());
    let products = (0..b.rank())
        .map(|j| power_products(&b.matrix.col(j)))
        .collect::<Result<Vec<_>>>()?;
    let products_ok = products.iter().all(|p| p.positive == p.negative);
    Ok(Verdict::new(
        lines_ok && products_ok,
        Criterion::StrongGaleProducts,
        Witness::StrongProducts {
            basis: b.matrix.clone(),
            partition,
            products,
        },
    ))
}

/// Strong self-duality against the canonical Gale basis.
pub fn is_strongly_self_dual(c: &Configuration) -> Result<Verdict> {
    let b = gale_dual(c);
    require_strong_hypotheses(c, &b)?;
    strong_verdict(&b)
}

/// Strong self-duality against a caller-supplied Gale basis, which is
/// verified first.
pub fn is_strongly_self_dual_with_basis(c: &Configuration, basis: &IntMatrix) -> Result<Verdict> {
    if !verify_gale_dual(c, basis)? {
        return Err(Error::InvalidParameter(
            "supplied matrix is not a Gale dual of the configuration".into(),
        ));
    }
    let b = GaleDual::from_matrix(basis.clone());
    require_strong_hypotheses(c, &b)?;
    strong_verdict(&b)
}

/// Verdicts for the canonical basis and, when given, a supplied one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongReport {
    pub canonical: Verdict,
    pub supplied: Option<Verdict>,
}

pub fn strong_report(c: &Configuration, supplied: Option<&IntMatrix>) -> Result<StrongReport> {
    let canonical = is_strongly_self_dual(c)?;
    let supplied = supplied
        .map(|b| is_strongly_self_dual_with_basis(c, b))
        .transpose()?;
    Ok(StrongReport {
        canonical,
        supplied,
    })
}

/// Recovers `M` when the weights are literally `(Id Id; 0 M)` up to column order.
pub fn is_lawrence(c: &Configuration) -> Option<IntMatrix> {
    let w = &c.weights;
    let total = w.cols();
    if !total.is_multiple_of(2) || total == 0 {
        return None;
    }
    let n = total / 2;
    if w.rows() < n {
        return None;
    }
    let d = w.rows() - n;
    let mut by_unit: Vec<Vec<usize>> = vec![Vec::new(); n];
    for j in 0..total {
        let col = w.col(j);
        let unit = (0..n).find(|&i| col[i].is_one())?;
        if (0..n).any(|i| i != unit && !col[i].is_zero()) {
            return None;
        }
        by_unit[unit].push(j);
    }
    let mut m = IntMatrix::zeros(d, n);
    for (i, cols) in by_unit.iter().enumerate() {
        let &[a, b] = cols.as_slice() else {
            return None;
        };
        let lower = |j: usize| -> Vec<BigInt> { (n..n + d).map(|r| w[(r, j)].clone()).collect() };
        let (la, lb) = (lower(a), lower(b));
        let lifted = if la.iter().all(Zero::is_zero) {
            lb
        } else if lb.iter().all(Zero::is_zero) {
            la
        } else {
            return None;
        };
        for (r, x) in lifted.into_iter().enumerate() {
            m[(r, i)] = x;
        }
    }
    Some(m)
}

/// Rows of `m` re-expressed so that its columns span the full lattice; same kernel.
pub fn normalize_block(m: &IntMatrix) -> IntMatrix {
    if m.rows() == 0 || rational_rank(m) == 0 {
        return IntMatrix::zeros(0, m.cols());
    }
    let c = Configuration::new(m.clone()).expect("nonempty matrix");
    normalize_lattice(&c).expect("rank is positive").0.weights
}

/// Is the all-ones vector in the GF(2) row span of the normalized `m`?
///
/// Decides strong self-duality of the Lawrence configuration of `m`.
pub fn lawrence_strong_parity(m: &IntMatrix) -> Verdict {
    let normalized = normalize_block(m);
    let k = normalized.rows();
    let n = normalized.cols();
    let bits = |i: usize, j: usize| is_odd(&normalized[(i, j)]);

    // columns of the system x^T M = 1, one equation per column of M
    let mut system: Vec<Vec<bool>> = (0..n)
        .map(|j| {
            let mut row: Vec<bool> = (0..k).map(|i| bits(i, j)).collect();
            row.push(true);
            row
        })
        .collect();
    let pivots = gf2_rref(&mut system);
    if pivots.last() != Some(&k) {
        let rows = pivots
            .iter()
            .enumerate()
            .filter(|&(r, _)| system[r][k])
            .map(|(_, &p)| p)
            .collect::<Vec<_>>();
        let mut rows = rows;
        rows.sort_unstable();
        return Verdict::new(
            true,
            Criterion::LawrenceParity,
            Witness::ParitySubset { normalized, rows },
        );
    }

    // an odd-weight kernel vector of M over GF(2)
    let mut reduced: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..n).map(|j| bits(i, j)).collect())
        .collect();
    let piv = gf2_rref(&mut reduced);
    let columns = (0..n)
        .filter(|f| !piv.contains(f))
        .map(|f| {
            let mut w = vec![false; n];
            w[f] = true;
            for (r, &p) in piv.iter().enumerate() {
                w[p] = reduced[r][f];
            }
            w
        })
        .find(|w| w.iter().filter(|&&x| x).count() % 2 == 1)
        .expect("ones outside the row span is detected by an odd kernel vector");
    let columns = (0..n).filter(|&j| columns[j]).collect();
    Verdict::new(
        false,
        Criterion::LawrenceParity,
        Witness::ParityObstruction {
            normalized,
            columns,
        },
    )
}

/// `m` when the Gale rows can be ordered as `b_1..b_m, -b_1..-b_m` with
/// `b_1 + ... + b_m = 0` and `b_1..b_{m-1}` a lattice basis.
pub fn is_segre(c: &Configuration) -> Option<usize> {
    let n = c.len();
    if n < 4 || !n.is_multiple_of(2) {
        return None;
    }
    let m = n / 2;
    let b = gale_dual(c);
    if b.rank() != m - 1 || m > 20 {
        return None;
    }
    let rows = b.rows();
    if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
        return None;
    }
    let mut used = vec![false; n];
    let mut pairs = Vec::with_capacity(m);
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        let neg: Vec<BigInt> = rows[i].iter().map(|x| -x).collect();
        let j = (0..n).find(|&j| !used[j] && rows[j] == neg)?;
        used[j] = true;
        pairs.push((i, j));
    }
    let r = m - 1;
    for mask in 0u32..(1 << m) {
        let chosen: Vec<&Vec<BigInt>> = pairs
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| {
                if mask >> k & 1 == 1 {
                    &rows[j]
                } else {
                    &rows[i]
                }
            })
            .collect();
        let sums_to_zero = (0..r).all(|t| chosen.iter().map(|v| &v[t]).sum::<BigInt>().is_zero());
        if !sums_to_zero {
            continue;
        }
        let basis =
            IntMatrix::from_rows(&chosen[..r].iter().map(|v| (*v).clone()).collect::<Vec<_>>())
                .expect("rows of equal length");
        if basis.det().abs().is_one() {
            return Some(m);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypersurfaceClass {
    /// Two equal points: a point on a line.
    Point,
    /// Three collinear points with one the midpoint of the others.
    Conic,
    /// Four points `a, b, c, d` with `a + c = b + d`.
    SegreQuadric,
    OtherHypersurface,
    NotHypersurface,
}

pub fn hypersurface_class(c: &Configuration) -> HypersurfaceClass {
    if c.len() != affine_dim(c) + 2 {
        return HypersurfaceClass::NotHypersurface;
    }
    let column = gale_dual(c).matrix.col(0);
    let mut pattern: Vec<i64> = match column
        .iter()
        .map(ToPrimitive::to_i64)
        .collect::<Option<_>>()
    {
        Some(p) => p,
        None => return HypersurfaceClass::OtherHypersurface,
    };
    if pattern.iter().filter(|&&x| x < 0).count() > pattern.iter().filter(|&&x| x > 0).count() {
        pattern.iter_mut().for_each(|x| *x = -*x);
    }
    pattern.sort_unstable();
    match pattern.as_slice() {
        [-1, 1] => HypersurfaceClass::Point,
        [-2, 1, 1] => HypersurfaceClass::Conic,
        [-1, -1, 1, 1] => HypersurfaceClass::SegreQuadric,
        _ => HypersurfaceClass::OtherHypersurface,
    }
}

/// Position of `p` on the segment from `v` to `w`, if it lies on it.
fn segment_parameter(v: &[BigInt], w: &[BigInt], p: &[BigInt]) -> Option<BigRational> {
    let k = (0..v.len()).find(|&k| w[k] != v[k])?;
    let t = BigRational::new(&p[k] - &v[k], &w[k] - &v[k]);
    let on_line = (0..v.len()).all(|i| {
        BigRational::from_integer(&p[i] - &v[i]) == &t * BigRational::from_integer(&w[i] - &v[i])
    });
    (on_line && !t.is_negative() && t <= BigRational::one()).then_some(t)
}

/// Differences between the points and the first point, as columns.
pub(crate) fn difference_matrix(c: &Configuration, base: usize, targets: &[usize]) -> IntMatrix {
    let pts = c.points();
    let cols: Vec<Vec<BigInt>> = targets
        .iter()
        .map(|&j| pts[j].iter().zip(&pts[base]).map(|(a, b)| a - b).collect())
        .collect();
    IntMatrix::from_columns(c.ambient_dim(), &cols).expect("columns of ambient length")
}

/// Edges at a vertex and the first point of the configuration along each one.
pub fn vertex_star(c: &Configuration, vertex: usize, vertices: &[usize]) -> Result<VertexStar> {
    let pts = c.points();
    let mut first_points = Vec::new();
    for &w in vertices {
        if w == vertex {
            continue;
        }
        let on_segment: Vec<(usize, BigRational)> = (0..c.len())
            .filter_map(|j| segment_parameter(&pts[vertex], &pts[w], &pts[j]).map(|t| (j, t)))
            .collect();
        let subset: Vec<usize> = on_segment.iter().map(|(j, _)| *j).collect();
        if !is_facial(c, &subset)?.value {
            continue;
        }
        let first = on_segment
            .iter()
            .filter(|(_, t)| t.is_positive())
            .min_by(|a, b| a.1.cmp(&b.1))
            .map(|(j, _)| *j)
            .expect("the far vertex lies on the segment");
        first_points.push(first);
    }
    Ok(VertexStar {
        vertex,
        first_points,
    })
}

/// Checks a vertex star: as many edges as the dimension, and edge vectors
/// spanning the lattice of differences.
pub fn star_defect(c: &Configuration, star: &VertexStar) -> Option<StarDefect> {
    let dim = affine_dim(c);
    if star.first_points.len() != dim {
        return Some(StarDefect::EdgeCount {
            found: star.first_points.len(),
            expected: dim,
        });
    }
    if dim == 0 {
        return None;
    }
    let all: Vec<usize> = (0..c.len()).collect();
    let edges = difference_matrix(c, star.vertex, &star.first_points);
    let lattice = difference_matrix(c, star.vertex, &all);
    if column_lattice_basis(&edges) == column_lattice_basis(&lattice) {
        return None;
    }
    let index = if rational_rank(&edges) < dim {
        BigInt::zero()
    } else {
        saturation_index(&edges) / saturation_index(&lattice)
    };
    Some(StarDefect::NotBasis { index })
}

/// Sufficient test for smoothness: at every vertex the first lattice points on
/// the edges form a basis. A negative answer does not prove a singularity.
pub fn smooth_certificate(c: &Configuration) -> Result<Verdict> {
    c.require_repeat_free("the smoothness certificate")?;
    let mut vertices = Vec::new();
    for i in 0..c.len() {
        if is_facial(c, &[i])?.value {
            vertices.push(i);
        }
    }
    let mut stars = Vec::with_capacity(vertices.len());
    for &v in &vertices {
        let star = vertex_star(c, v, &vertices)?;
        if let Some(defect) = star_defect(c, &star) {
            return Ok(Verdict::new(
                false,
                Criterion::SmoothVertexBases,
                Witness::NotCertified { star, defect },
            ));
        }
        stars.push(star);
    }
    Ok(Verdict::new(
        true,
        Criterion::SmoothVertexBases,
        Witness::SmoothCertificate { stars },
    ))
}
