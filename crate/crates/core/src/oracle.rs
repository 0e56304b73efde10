//! Brute-force referees for the criteria, and witness re-verification.
//!
//! Everything here works from definitions by enumeration and is meant for
//! small inputs only; enumerations refuse more than [`ENUMERATION_LIMIT`] points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::{affine_dim, pyramid_decompose, Configuration};
use crate::engine::{is_lawrence, normalize_block, star_defect, vertex_star};
use crate::error::{Error, Result};
use crate::gale::{gale_dual, line_partition, verify_gale_dual, GaleDual};
use crate::generators::{config_from_gale, lawrence};
use crate::linalg::{
    in_row_span, integer_kernel, lp, primitive_direction, rational_rank, IntMatrix, RatVector,
};
use crate::verdict::{Criterion, DecompositionFailure, Verdict, Witness};

pub const ENUMERATION_LIMIT: usize = 12;

fn guard(n: usize) -> Result<()> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationGuard {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

fn subset_indices(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// A minimal affine dependency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub support: Vec<usize>,
    /// Primitive, first nonzero entry positive, zero off the support.
    #[serde(with = "crate::bigser::int_vec")]
    pub relation: Vec<BigInt>,
}

/// All circuits, found by testing every subset for a one-dimensional affine
/// kernel with full support.
pub fn enumerate_circuits(c: &Configuration) -> Result<Vec<Circuit>> {
    let n = c.len();
    guard(n)?;
    let a = c.affine_matrix();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let support = subset_indices(mask, n);
        let kernel = integer_kernel(&a.select_columns(&support));
        if kernel.cols() != 1 {
            continue;
        }
        let local = kernel.col(0);
        if local.iter().any(Zero::is_zero) {
            continue;
        }
        let mut relation = vec![BigInt::zero(); n];
        for (k, &i) in support.iter().enumerate() {
            relation[i] = local[k].clone();
        }
        let relation = primitive_direction(&relation).expect("nonzero relation");
        out.push(Circuit { support, relation });
    }
    Ok(out)
}

/// Indices grouped by the set of circuits containing them; indices in no
/// circuit are singletons.
pub fn coparallel_via_circuits(c: &Configuration) -> Result<Vec<Vec<usize>>> {
    let circuits = enumerate_circuits(c)?;
    let n = c.len();
    let membership: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            circuits
                .iter()
                .enumerate()
                .filter(|(_, circ)| circ.support.contains(&i))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let found = if membership[i].is_empty() {
            None
        } else {
            classes
                .iter_mut()
                .find(|cl| membership[cl[0]] == membership[i])
        };
        match found {
            Some(cl) => cl.push(i),
            None => classes.push(vec![i]),
        }
    }
    Ok(classes)
}

/// Indices of Gale rows lying in the span of the rows indexed by `generators`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flat {
    pub generators: Vec<usize>,
    pub closure: Vec<usize>,
    /// Dimension of the spanned subspace.
    pub rank: usize,
}

fn stacked_rank(b: &GaleDual, rows: &[usize]) -> usize {
    if rows.is_empty() || b.rank() == 0 {
        return 0;
    }
    rational_rank(&b.matrix.select_rows(rows))
}

/// All distinct flats, each with the first generating set found.
pub fn enumerate_flats(b: &GaleDual) -> Result<Vec<Flat>> {
    let n = b.len();
    guard(n)?;
    let mut flats: Vec<Flat> = Vec::new();
    for mask in 0u32..(1 << n) {
        let generators = subset_indices(mask, n);
        let rank = stacked_rank(b, &generators);
        let closure: Vec<usize> = (0..n)
            .filter(|&i| {
                let mut with = generators.clone();
                with.push(i);
                stacked_rank(b, &with) == rank
            })
            .collect();
        if !flats.iter().any(|f| f.closure == closure) {
            flats.push(Flat {
                generators,
                closure,
                rank,
            });
        }
    }
    Ok(flats)
}

fn require_no_zero_rows(b: &GaleDual, criterion: &'static str) -> Result<()> {
    let zero = b.zero_rows();
    if zero.is_empty() {
        Ok(())
    } else {
        Err(Error::Pyramidal {
            criterion,
            apexes: zero,
        })
    }
}

fn flat_sums_zero(b: &GaleDual, flat: &Flat) -> bool {
    (0..b.rank()).all(|j| {
        flat.closure
            .iter()
            .map(|&i| &b.row(i)[j])
            .sum::<BigInt>()
            .is_zero()
    })
}

/// Every flat of the Gale rows sums to zero.
pub fn self_dual_via_flats(b: &GaleDual) -> Result<bool> {
    require_no_zero_rows(b, "the flat-sum oracle")?;
    Ok(enumerate_flats(b)?.iter().all(|f| flat_sums_zero(b, f)))
}

/// As [`self_dual_via_flats`], restricted to flats spanning a line.
pub fn self_dual_via_line_flats(b: &GaleDual) -> Result<bool> {
    require_no_zero_rows(b, "the flat-sum oracle")?;
    Ok(enumerate_flats(b)?
        .iter()
        .filter(|f| f.rank == 1)
        .all(|f| flat_sums_zero(b, f)))
}

/// For every circuit `v`, the indicator of the complement of its support lies
/// in the row span of the weights.
pub fn self_dual_via_sigma(c: &Configuration) -> Result<bool> {
    if !c.regular {
        return Err(Error::NonRegular {
            criterion: "the sigma oracle",
        });
    }
    for circuit in enumerate_circuits(c)? {
        let sigma = RatVector(
            circuit
                .relation
                .iter()
                .map(|v| {
                    if v.is_zero() {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        );
        if !in_row_span(&c.weights, &sigma)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest number of grid evaluations [`strong_via_points`] will attempt.
pub const POINT_GRID_LIMIT: usize = 2_000_000;

fn first_primes(count: usize) -> Vec<BigInt> {
    let mut primes: Vec<u64> = Vec::with_capacity(count);
    let mut k = 2u64;
    while primes.len() < count {
        if primes.iter().all(|p| !k.is_multiple_of(*p)) {
            primes.push(k);
        }
        k += 1;
    }
    primes.into_iter().map(BigInt::from).collect()
}

/// Checks that the points `(<s, b_1>, ..., <s, b_n>)` satisfy every basis
/// binomial identically in `s`.
///
/// Each binomial is homogeneous of degree `D` in `s`, so it vanishes
/// identically iff it vanishes on `{1} x G^(r-1)` for any grid `G` of `D + 1`
/// distinct values; the grid uses distinct primes.
pub fn strong_via_points(c: &Configuration, samples: usize) -> Result<bool> {
    if !c.regular {
        return Err(Error::NonRegular {
            criterion: "the point-membership oracle",
        });
    }
    let b = gale_dual(c);
    require_no_zero_rows(&b, "the point-membership oracle")?;
    let r = b.rank();
    let rows = b.rows();
    for j in 0..r {
        let exponents: Vec<i64> = b
            .matrix
            .col(j)
            .iter()
            .map(|x| x.to_i64().expect("small exponents"))
            .collect();
        let degree: usize = exponents
            .iter()
            .filter(|&&e| e > 0)
            .map(|&e| e as usize)
            .sum();
        let per_axis = samples.max(degree + 1);
        let grid_size = (per_axis as u128).saturating_pow((r - 1) as u32);
        if grid_size > POINT_GRID_LIMIT as u128 {
            return Err(Error::EnumerationGuard {
                n: grid_size.min(usize::MAX as u128) as usize,
                limit: POINT_GRID_LIMIT,
            });
        }
        let values = first_primes(per_axis);
        let mut digits = vec![0usize; r - 1];
        loop {
            let s: Vec<BigInt> = std::iter::once(BigInt::one())
                .chain(digits.iter().map(|&d| values[d].clone()))
                .collect();
            let mut lhs = BigInt::one();
            let mut rhs = BigInt::one();
            for (row, &e) in rows.iter().zip(&exponents) {
                let x: BigInt = row.iter().zip(&s).map(|(a, b)| a * b).sum();
                if e > 0 {
                    lhs *= x.pow(e as u32);
                } else if e < 0 {
                    rhs *= x.pow((-e) as u32);
                }
            }
            if lhs != rhs {
                return Ok(false);
            }
            // next grid point
            let mut k = 0;
            while k < digits.len() {
                digits[k] += 1;
                if digits[k] < per_axis {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == digits.len() {
                break;
            }
        }
    }
    Ok(true)
}

/// Affine functional vanishing on the subset and at most `-1` on the other
/// points, found by exact linear programming on the points themselves.
pub fn separating_functional(c: &Configuration, subset: &[usize]) -> Option<RatVector> {
    let a = c.affine_matrix();
    let d = a.rows();
    let n = a.cols();
    let outside: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
    // variables: l+ (d), l- (d), one slack per outside point
    let width = 2 * d + outside.len();
    let mut rows = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![BigRational::zero(); width];
        for k in 0..d {
            let v = BigRational::from_integer(a[(k, i)].clone());
            row[d + k] = -v.clone();
            row[k] = v;
        }
        match outside.iter().position(|&j| j == i) {
            Some(s) => {
                row[2 * d + s] = BigRational::one();
                rhs.push(-BigRational::one());
            }
            None => rhs.push(BigRational::zero()),
        }
        rows.push(row);
    }
    match lp::nonnegative_solution(&rows, &rhs) {
        lp::Feasibility::Feasible(x) => {
            Some(RatVector((0..d).map(|k| &x.0[k] - &x.0[d + k]).collect()))
        }
        lp::Feasibility::Infeasible(_) => None,
    }
}

/// The subset is the set of points on a face, by the definition.
pub fn facial_via_separation(c: &Configuration, subset: &[usize]) -> bool {
    separating_functional(c, subset).is_some()
}

fn affine_value(c: &Configuration, functional: &RatVector, i: usize) -> BigRational {
    functional.dot_ints(&c.affine_matrix().col(i))
}

fn is_affine_relation(c: &Configuration, v: &[BigInt]) -> bool {
    v.len() == c.len()
        && c.affine_matrix()
            .mul_vec(v)
            .is_ok_and(|x| x.iter().all(Zero::is_zero))
}

fn check_partition(b: &GaleDual, claimed: &crate::gale::LinePartition) -> bool {
    *claimed == line_partition(b)
        && claimed.classes.iter().all(|class| {
            class
                .members
                .iter()
                .all(|&i| primitive_direction(b.row(i)).as_deref() == Some(&class.direction[..]))
        })
}

/// Re-verifies the witness of a verdict about `c` from first principles.
///
/// Returns `true` iff the witness is valid and supports the stated value.
pub fn recheck(c: &Configuration, verdict: &Verdict) -> Result<bool> {
    let n = c.len();
    let ok = match (&verdict.witness, verdict.criterion) {
        (Witness::LineClasses { partition }, _) => {
            let b = gale_dual(c);
            verdict.value
                && check_partition(&b, partition)
                && partition.classes.iter().all(|cl| cl.sums_to_zero())
        }
        (Witness::ViolatingLine { class }, _) => {
            let b = gale_dual(c);
            let actual = line_partition(&b);
            !verdict.value && !class.sums_to_zero() && actual.classes.contains(class)
        }
        (Witness::ImproperFace, _) => verdict.value,
        (
            Witness::PositiveRelation {
                complement,
                coefficients,
            },
            _,
        ) => {
            let b = gale_dual(c);
            verdict.value
                && coefficients.len() == complement.len()
                && coefficients.0.iter().all(Signed::is_positive)
                && (0..b.rank()).all(|j| {
                    complement
                        .iter()
                        .zip(&coefficients.0)
                        .map(|(&i, r)| r * BigRational::from_integer(b.row(i)[j].clone()))
                        .sum::<BigRational>()
                        .is_zero()
                })
        }
        (
            Witness::SeparatingObstruction {
                complement,
                functional,
            },
            _,
        ) => {
            let b = gale_dual(c);
            let pairings: Vec<BigRational> = complement
                .iter()
                .map(|&i| functional.dot_ints(b.row(i)))
                .collect();
            !verdict.value
                && functional.len() == b.rank()
                && pairings.iter().all(|p| !p.is_positive())
                && pairings.iter().any(Signed::is_negative)
        }
        (Witness::Functional { class, functional }, Criterion::FaceComplement) => {
            // the class holds the complement; value 0 on the subset, -1 off it
            verdict.value
                && (0..n).all(|i| {
                    let want = if class.contains(&i) {
                        -BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    affine_value(c, functional, i) == want
                })
        }
        (Witness::Functional { class, functional }, _) => {
            verdict.value && functional_fits(c, class, functional)
        }
        (Witness::RelationObstruction { class, relation }, _) => {
            !verdict.value
                && is_affine_relation(c, relation)
                && !class
                    .iter()
                    .map(|&i| &relation[i])
                    .sum::<BigInt>()
                    .is_zero()
        }
        (
            Witness::ClassFunctionals {
                classes,
                functionals,
            },
            _,
        ) => {
            let expected = if n <= ENUMERATION_LIMIT {
                coparallel_via_circuits(c)?
            } else {
                crate::gale::coparallel_classes(&gale_dual(c)).classes
            };
            verdict.value
                && *classes == expected
                && classes.len() == functionals.len()
                && classes
                    .iter()
                    .zip(functionals)
                    .all(|(cl, f)| functional_fits(c, cl, f))
        }
        (
            Witness::Decomposition {
                report,
                failure,
                core,
            },
            _,
        ) => {
            let fresh = pyramid_decompose(c);
            let consistent = match failure {
                Some(DecompositionFailure::ApexCount { apexes, repeats }) => {
                    *apexes == report.apex_count()
                        && *repeats == report.repeat_codim
                        && apexes != repeats
                }
                Some(DecompositionFailure::Splitting) => !report.splitting_valid,
                Some(DecompositionFailure::Core) => core.as_ref().is_some_and(|v| !v.value),
                None => {
                    report.apex_count() == report.repeat_codim
                        && report.splitting_valid
                        && core.as_ref().is_none_or(|v| v.value)
                        && (core.is_some() || report.core_indices.is_empty())
                }
            };
            let core_ok = match core {
                Some(v) => {
                    let distinct = crate::config::dedup(c).distinct;
                    let core_config = distinct.subconfiguration(&report.core_indices)?;
                    recheck(&core_config, v)?
                }
                None => true,
            };
            *report == fresh && consistent && core_ok && verdict.value == failure.is_none()
        }
        (
            Witness::StrongProducts {
                basis,
                partition,
                products,
            },
            _,
        ) => {
            let b = GaleDual::from_matrix(basis.clone());
            let recomputed: Vec<_> = (0..b.rank())
                .map(|j| crate::engine::power_products(&b.matrix.col(j)))
                .collect::<Result<_>>()?;
            let value = partition.classes.iter().all(|cl| cl.sums_to_zero())
                && products.iter().all(|p| p.positive == p.negative);
            verify_gale_dual(c, basis)?
                && check_partition(&b, partition)
                && *products == recomputed
                && value == verdict.value
        }
        (Witness::ParitySubset { .. } | Witness::ParityObstruction { .. }, _) => {
            match is_lawrence(c) {
                Some(m) => recheck_parity(&m, verdict),
                None => false,
            }
        }
        (Witness::SmoothCertificate { stars }, _) => {
            let vertices: Vec<usize> = (0..n).filter(|&i| facial_via_separation(c, &[i])).collect();
            let listed: Vec<usize> = stars.iter().map(|s| s.vertex).collect();
            verdict.value
                && listed == vertices
                && stars.iter().all(|s| {
                    vertex_star(c, s.vertex, &vertices).is_ok_and(|fresh| fresh == *s)
                        && star_defect(c, s).is_none()
                })
        }
        (Witness::NotCertified { star, defect }, _) => {
            let vertices: Vec<usize> = (0..n).filter(|&i| facial_via_separation(c, &[i])).collect();
            !verdict.value
                && vertices.contains(&star.vertex)
                && vertex_star(c, star.vertex, &vertices).is_ok_and(|fresh| fresh == *star)
                && star_defect(c, star).as_ref() == Some(defect)
        }
    };
    Ok(ok)
}

fn functional_fits(c: &Configuration, class: &[usize], functional: &RatVector) -> bool {
    functional.len() == c.ambient_dim() + 1
        && (0..c.len()).all(|i| {
            let want = if class.contains(&i) {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            affine_value(c, functional, i) == want
        })
}

/// Re-verifies a parity verdict for the lower block `m`.
pub fn recheck_parity(m: &IntMatrix, verdict: &Verdict) -> bool {
    let expected = normalize_block(m);
    let odd = |x: &BigInt| !(x % BigInt::from(2)).is_zero();
    match &verdict.witness {
        Witness::ParitySubset { normalized, rows } => {
            verdict.value
                && *normalized == expected
                && rows.iter().all(|&i| i < normalized.rows())
                && (0..normalized.cols())
                    .all(|j| odd(&rows.iter().map(|&i| &normalized[(i, j)]).sum::<BigInt>()))
        }
        Witness::ParityObstruction {
            normalized,
            columns,
        } => {
            !verdict.value
                && *normalized == expected
                && columns.len() % 2 == 1
                && columns.iter().all(|&j| j < normalized.cols())
                && (0..normalized.rows())
                    .all(|i| !odd(&columns.iter().map(|&j| &normalized[(i, j)]).sum::<BigInt>()))
        }
        _ => false,
    }
}

/// Size limits for random corpora.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusLimits {
    pub max_points: usize,
    pub max_affine_dim: usize,
    pub max_entry: i64,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        Self {
            max_points: 8,
            max_affine_dim: 4,
            max_entry: 3,
        }
    }
}

fn within_limits(c: &Configuration, limits: &CorpusLimits) -> bool {
    c.len() <= limits.max_points
        && c.weights.max_abs() <= BigInt::from(limits.max_entry)
        && affine_dim(c) <= limits.max_affine_dim
}

fn is_non_pyramidal(c: &Configuration) -> bool {
    gale_dual(c).zero_rows().is_empty()
}

fn random_points(rng: &mut ChaCha8Rng, limits: &CorpusLimits) -> Option<Configuration> {
    let d = rng.gen_range(1..=limits.max_affine_dim);
    let n = rng.gen_range(d + 2..=limits.max_points.max(d + 2));
    let span = rng.gen_range(1..=limits.max_entry);
    let rows: Vec<Vec<i64>> = (0..d)
        .map(|_| (0..n).map(|_| rng.gen_range(-span..=span)).collect())
        .collect();
    Configuration::from_rows(&rows).ok()
}

fn random_lawrence_lift(rng: &mut ChaCha8Rng, limits: &CorpusLimits) -> Option<Configuration> {
    let cols = rng.gen_range(2..=limits.max_points / 2);
    let rows = rng.gen_range(1..=cols.min(2));
    let m: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-1..=1)).collect())
        .collect();
    lawrence(&IntMatrix::from_rows(&m).ok()?).ok()
}

/// Gale rows grouped on random lines with zero sum on each line.
fn random_balanced_gale(rng: &mut ChaCha8Rng, limits: &CorpusLimits) -> Option<Configuration> {
    let r = rng.gen_range(1..=3usize);
    let patterns: [&[i64]; 4] = [&[1, -1], &[2, -1, -1], &[1, 1, -1, -1], &[1, 1, -2]];
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let lines = rng.gen_range(r..=r + 1);
    for _ in 0..lines {
        let dir: Vec<i64> = (0..r).map(|_| rng.gen_range(-1..=1)).collect();
        if dir.iter().all(|&x| x == 0) {
            return None;
        }
        let pattern = patterns.choose(rng)?;
        for &k in pattern.iter() {
            rows.push(dir.iter().map(|&x| k * x).collect());
        }
    }
    if rows.len() > limits.max_points {
        return None;
    }
    rows.shuffle(rng);
    let b = IntMatrix::from_rows(&rows).ok()?;
    config_from_gale(&b).ok()
}

/// Seeded corpus of non-pyramidal configurations without repeated points.
///
/// Mixes uniformly random points with Lawrence lifts and configurations built
/// from balanced Gale patterns, so that both verdicts are well represented.
pub fn random_corpus(seed: u64, count: usize, limits: &CorpusLimits) -> Vec<Configuration> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempt = 0usize;
    while out.len() < count {
        let candidate = match attempt % 4 {
            0 | 1 => random_points(&mut rng, limits),
            2 => random_lawrence_lift(&mut rng, limits),
            _ => random_balanced_gale(&mut rng, limits),
        };
        attempt += 1;
        let Some(c) = candidate else { continue };
        if within_limits(&c, limits)
            && c.repeated_pair().is_none()
            && is_non_pyramidal(&c)
            && !out.contains(&c)
        {
            out.push(c);
        }
    }
    out
}

/// Seeded random blocks `M` (at most `max_rows x max_cols`, entries bounded)
/// whose Lawrence lift is not a pyramid.
pub fn random_lawrence_blocks(
    seed: u64,
    count: usize,
    max_rows: usize,
    max_cols: usize,
    max_entry: i64,
) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let rows = rng.gen_range(1..=max_rows);
        let cols = rng.gen_range(1..=max_cols);
        let entries: Vec<Vec<i64>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| rng.gen_range(-max_entry..=max_entry))
                    .collect()
            })
            .collect();
        let m = IntMatrix::from_rows(&entries).expect("rectangular");
        let lift = lawrence(&m).expect("nonempty lift");
        if is_non_pyramidal(&lift) {
            out.push(m);
        }
    }
    out
}

/// Regularized copy, for oracles that need the all-ones functional.
#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::regularize;

    fn segment(points: &[i64]) -> Configuration {
        Configuration::from_points(&points.iter().map(|&p| vec![p]).collect::<Vec<_>>()).unwrap()
    }

    fn segre2() -> Configuration {
        Configuration::from_rows(&[vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap()
    }

    #[test]
    fn circuits_of_small_examples() {
        let c = enumerate_circuits(&segment(&[0, 1, 2])).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].relation, [1, -2, 1].map(BigInt::from).to_vec());

        let simplex = Configuration::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert!(enumerate_circuits(&simplex).unwrap().is_empty());

        let c = enumerate_circuits(&segre2()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].relation, [1, -1, -1, 1].map(BigInt::from).to_vec());
    }

    #[test]
    fn guard_is_enforced() {
        let c = segment(&(0..13).collect::<Vec<_>>());
        assert!(matches!(
            enumerate_circuits(&c),
            Err(Error::EnumerationGuard { n: 13, limit: 12 })
        ));
    }

    #[test]
    fn coparallel_with_apex() {
        let c =
            Configuration::from_points(&[vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            coparallel_via_circuits(&c).unwrap(),
            vec![vec![0, 1, 2], vec![3]]
        );
    }

    #[test]
    fn flats_of_rank_one_dual() {
        let b = gale_dual(&segre2());
        let flats = enumerate_flats(&b).unwrap();
        let closures: Vec<Vec<usize>> = flats.iter().map(|f| f.closure.clone()).collect();
        assert_eq!(closures, vec![vec![], vec![0, 1, 2, 3]]);
        assert!(self_dual_via_flats(&b).unwrap());
    }

    #[test]
    fn sigma_on_twisted_cubic() {
        let c = regularize(&segment(&[0, 1, 2, 3]));
        assert!(!self_dual_via_sigma(&c).unwrap());
        assert!(self_dual_via_sigma(&segre2()).unwrap());
        assert!(matches!(
            self_dual_via_sigma(&segment(&[0, 1, 2])),
            Err(Error::NonRegular { .. })
        ));
    }

    #[test]
    fn points_oracle() {
        assert!(strong_via_points(&segre2(), 3).unwrap());
        let weighted = regularize(&segment(&[1, 0, 2]));
        assert!(!strong_via_points(&weighted, 3).unwrap());
    }

    #[test]
    fn separation_on_segment() {
        let c = segment(&[0, 1, 2]);
        assert!(facial_via_separation(&c, &[0]));
        assert!(facial_via_separation(&c, &[2]));
        assert!(!facial_via_separation(&c, &[1]));
        assert!(facial_via_separation(&c, &[0, 1, 2]));
    }

    #[test]
    fn corpus_is_reproducible() {
        let limits = CorpusLimits::default();
        let a = random_corpus(7, 10, &limits);
        let b = random_corpus(7, 10, &limits);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|c| within_limits(c, &limits) && is_non_pyramidal(c)));
    }
}
