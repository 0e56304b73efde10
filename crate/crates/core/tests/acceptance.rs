//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::sync::OnceLock;
use std::time::Instant;

use selfdual_core::config::{affine_dim, regularize};
use selfdual_core::engine::{
    is_lawrence, is_segre, is_self_dual, is_strongly_self_dual, is_strongly_self_dual_with_basis,
    lawrence_strong_parity, smooth_certificate,
};
use selfdual_core::gale::{
    coparallel_classes, coparallel_criterion, gale_dual, is_facial, line_sums_zero,
    verify_gale_dual,
};
use selfdual_core::generators::{family_alpha, lawrence, segre};
use selfdual_core::linalg::IntMatrix;
use selfdual_core::oracle::{
    coparallel_via_circuits, facial_via_separation, random_corpus, random_lawrence_blocks,
    self_dual_via_flats, self_dual_via_sigma, CorpusLimits,
};
use selfdual_core::Configuration;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const CORPUS_SEED: u64 = 20_240_501;
const LAWRENCE_SEED: u64 = 77;
const COPARALLEL_SEED: u64 = 4_242;
const FACIAL_SEED: u64 = 31_337;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn main_corpus() -> &'static [Configuration] {
    static CORPUS: OnceLock<Vec<Configuration>> = OnceLock::new();
    CORPUS.get_or_init(|| random_corpus(CORPUS_SEED, 200, &CorpusLimits::default()))
}

fn family_alpha_examples() -> Outcome {
    for a in [1, 2, 3, -2] {
        let c = family_alpha(a).map_err(|e| e.to_string())?;
        ensure(is_self_dual(&c).value, || {
            format!("alpha = {a}: not self-dual")
        })?;
        let printed = common::family_alpha_gale(a);
        ensure(
            verify_gale_dual(&c, &printed).map_err(|e| e.to_string())?,
            || format!("alpha = {a}: printed Gale dual rejected"),
        )?;
        let dim = affine_dim(&c);
        ensure(dim == 4, || format!("alpha = {a}: dimension {dim}"))?;
    }
    Ok("alpha in {1, 2, 3, -2}: self-dual, printed Gale dual verified, dim 4".into())
}

fn strong_nine_point_example() -> Outcome {
    let c = common::strong_nine();
    let printed = common::strong_nine_gale();
    ensure(
        verify_gale_dual(&c, &printed).map_err(|e| e.to_string())?,
        || "printed Gale dual rejected".into(),
    )?;
    let canonical = is_strongly_self_dual(&c).map_err(|e| e.to_string())?;
    ensure(canonical.value, || {
        "canonical basis: not strongly self-dual".into()
    })?;
    let supplied = is_strongly_self_dual_with_basis(&c, &printed).map_err(|e| e.to_string())?;
    ensure(supplied.value, || {
        "printed basis: not strongly self-dual".into()
    })?;
    ensure(is_lawrence(&c).is_none(), || {
        "recognized as Lawrence".into()
    })?;
    Ok("strongly self-dual under canonical and printed bases; not Lawrence".into())
}

fn segre_family() -> Outcome {
    for m in 2..=6 {
        let c = segre(m).map_err(|e| e.to_string())?;
        ensure(is_self_dual(&c).value, || format!("m = {m}: not self-dual"))?;
        let strong = is_strongly_self_dual(&c).map_err(|e| e.to_string())?;
        ensure(strong.value, || format!("m = {m}: not strongly self-dual"))?;
        ensure(is_segre(&c) == Some(m), || {
            format!("m = {m}: is_segre = {:?}", is_segre(&c))
        })?;
        let ones = IntMatrix::from_rows(&[vec![1i64; m]]).expect("one row");
        ensure(lawrence_strong_parity(&ones).value, || {
            format!("m = {m}: parity false")
        })?;
        let smooth = smooth_certificate(&c).map_err(|e| e.to_string())?;
        ensure(smooth.value, || format!("m = {m}: not certified smooth"))?;
    }
    Ok("m = 2..6: self-dual, strong, recognized, parity, smooth certificate".into())
}

fn singular_self_dual_examples() -> Outcome {
    for (name, c) in [
        ("interior point faces", common::interior_point_faces()),
        ("missing points", common::missing_points()),
    ] {
        ensure(is_self_dual(&c).value, || format!("{name}: not self-dual"))?;
        let smooth = smooth_certificate(&c).map_err(|e| e.to_string())?;
        ensure(!smooth.value, || format!("{name}: certified smooth"))?;
    }
    Ok("both self-dual, neither certified smooth".into())
}

fn oracle_equivalence_sweep() -> Outcome {
    let corpus = main_corpus();
    let mut self_dual = 0;
    for (k, c) in corpus.iter().enumerate() {
        let b = gale_dual(c);
        let lines = line_sums_zero(&b).map_err(|e| format!("#{k}: {e}"))?.value;
        let flats = self_dual_via_flats(&b).map_err(|e| format!("#{k}: {e}"))?;
        let sigma = self_dual_via_sigma(&regularize(c)).map_err(|e| format!("#{k}: {e}"))?;
        let coparallel = coparallel_criterion(c)
            .map_err(|e| format!("#{k}: {e}"))?
            .value;
        ensure(
            lines == flats && flats == sigma && sigma == coparallel,
            || {
                format!(
                    "#{k} {}: lines {lines}, flats {flats}, sigma {sigma}, coparallel {coparallel}",
                    c.weights
                )
            },
        )?;
        self_dual += usize::from(lines);
    }
    Ok(format!(
        "{} configurations, 0 disagreements ({self_dual} self-dual)",
        corpus.len()
    ))
}

fn lawrence_parity_equivalence() -> Outcome {
    let blocks = random_lawrence_blocks(LAWRENCE_SEED, 50, 4, 4, 3);
    let mut strong = 0;
    for (k, m) in blocks.iter().enumerate() {
        let lift = lawrence(m).map_err(|e| e.to_string())?;
        let parity = lawrence_strong_parity(m).value;
        let direct = is_strongly_self_dual(&lift)
            .map_err(|e| format!("#{k}: {e}"))?
            .value;
        ensure(parity == direct, || {
            format!("#{k} M = {m}: parity {parity}, strong {direct}")
        })?;
        ensure(is_self_dual(&lift).value, || {
            format!("#{k} M = {m}: lift not self-dual")
        })?;
        strong += usize::from(parity);
    }
    Ok(format!(
        "{} blocks, 0 disagreements ({strong} strongly self-dual), all lifts self-dual",
        blocks.len()
    ))
}

fn coparallel_equivalence() -> Outcome {
    let corpus = random_corpus(COPARALLEL_SEED, 100, &CorpusLimits::default());
    for (k, c) in corpus.iter().enumerate() {
        let gale_side = coparallel_classes(&gale_dual(c)).classes;
        let circuits = coparallel_via_circuits(c).map_err(|e| e.to_string())?;
        ensure(gale_side == circuits, || {
            format!(
                "#{k} {}: gale {gale_side:?}, circuits {circuits:?}",
                c.weights
            )
        })?;
    }
    Ok(format!("{} configurations, 0 disagreements", corpus.len()))
}

fn facial_equivalence() -> Outcome {
    let limits = CorpusLimits {
        max_points: 7,
        ..CorpusLimits::default()
    };
    let corpus = random_corpus(FACIAL_SEED, 30, &limits);
    let mut subsets = 0;
    for (k, c) in corpus.iter().enumerate() {
        let n = c.len();
        for mask in 1u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let gale_side = is_facial(c, &s).map_err(|e| e.to_string())?.value;
            let direct = facial_via_separation(c, &s);
            ensure(gale_side == direct, || {
                format!(
                    "#{k} {} subset {s:?}: gale {gale_side}, separation {direct}",
                    c.weights
                )
            })?;
            subsets += 1;
        }
    }
    Ok(format!(
        "{} configurations, {subsets} subsets, 0 disagreements",
        corpus.len()
    ))
}

fn hereditary_property() -> Outcome {
    let mut instances = 0;
    let mut checked = 0;
    for (k, c) in main_corpus().iter().enumerate() {
        if !is_self_dual(c).value {
            continue;
        }
        instances += 1;
        let n = c.len();
        for mask in 1u32..(1 << n) {
            let d: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let sub = c.subconfiguration(&d).map_err(|e| e.to_string())?;
            if !gale_dual(&sub).zero_rows().is_empty() {
                continue;
            }
            checked += 1;
            ensure(is_self_dual(&sub).value, || {
                format!("#{k} {}: subset {d:?} not self-dual", c.weights)
            })?;
            ensure(is_facial(c, &d).map_err(|e| e.to_string())?.value, || {
                format!("#{k} {}: subset {d:?} not facial", c.weights)
            })?;
        }
    }
    ensure(instances > 0, || {
        "no self-dual instance in the corpus".into()
    })?;
    Ok(format!(
        "{instances} self-dual instances, {checked} non-pyramidal subsets, 0 violations"
    ))
}

fn hypersurface_law() -> Outcome {
    let mut hypersurfaces = 0;
    for (k, c) in main_corpus().iter().enumerate() {
        if c.len() != affine_dim(c) + 2 {
            continue;
        }
        hypersurfaces += 1;
        ensure(is_self_dual(c).value, || {
            format!("#{k} {}: hypersurface not self-dual", c.weights)
        })?;
    }
    ensure(hypersurfaces > 0, || "no hypersurface in the corpus".into())?;
    Ok(format!("{hypersurfaces} hypersurfaces, all self-dual"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("five-point family alpha", family_alpha_examples),
        ("strongly self-dual 7x9 example", strong_nine_point_example),
        ("Segre family", segre_family),
        ("singular self-dual examples", singular_self_dual_examples),
        ("oracle equivalence sweep", oracle_equivalence_sweep),
        ("Lawrence parity equivalence", lawrence_parity_equivalence),
        ("coparallelism equivalence", coparallel_equivalence),
        ("facial-test equivalence", facial_equivalence),
        ("hereditary property", hereditary_property),
        ("hypersurface law", hypersurface_law),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{ms} ms]", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
