use anyhow::{bail, Result};
use serde::Serialize;

use selfdual_core::config::{affine_dim, pyramid_decompose, regularize};
use selfdual_core::engine::{
    hypersurface_class, is_self_dual, lawrence_strong_parity, smooth_certificate, strong_report,
};
use selfdual_core::gale::{
    coparallel_classes, coparallel_criterion, gale_dual, is_facial, line_sums_zero,
    verify_gale_dual,
};
use selfdual_core::generators::{family_alpha, family_codim, family_dim, lawrence, segre};
use selfdual_core::linalg::IntMatrix;
use selfdual_core::oracle::{
    coparallel_via_circuits, enumerate_circuits, enumerate_flats, random_corpus, recheck,
    recheck_parity, self_dual_via_flats, self_dual_via_sigma, CorpusLimits,
};
use selfdual_core::{Configuration, Verdict};

use crate::io::{parse_inline, read_configuration, read_matrix, write_matrix};
use crate::report::{join, set_of, Report};
use crate::{Check, Cli, Command, Generate, Oracle};

/// Builds the report; the flag is false when a crosscheck found a disagreement
/// or `--verify` rejected a witness.
pub fn run(cli: &Cli) -> Result<(Report, bool)> {
    let report = match &cli.command {
        Command::Gale { file } => gale(&read_configuration(file)?, cli.verify)?,
        Command::Check(check) => match check {
            Check::SelfDual { file } => {
                let c = read_configuration(file)?;
                verdict_report(&c, cli.verify, |c| Ok(is_self_dual(c)))?
            }
            Check::Strong { file, basis } => {
                let basis = basis.as_deref().map(read_matrix).transpose()?;
                strong(&read_configuration(file)?, basis.as_ref(), cli.verify)?
            }
            Check::Facial { file, subset } => {
                let c = read_configuration(file)?;
                verdict_report(&c, cli.verify, |c| Ok(is_facial(c, subset)?))?
            }
        },
        Command::Decompose { file } => decompose(&read_configuration(file)?)?,
        Command::Circuits { file } => circuits(&read_configuration(file)?, cli.verify)?,
        Command::Flats { file } => flats(&read_configuration(file)?)?,
        Command::SmoothCertificate { file } => {
            let c = read_configuration(file)?;
            verdict_report(&c, cli.verify, |c| Ok(smooth_certificate(c)?))?
        }
        Command::ClassifyHypersurface { file } => {
            let c = read_configuration(file)?;
            let mut r = Report::for_config(&c);
            let class = r.timed("compute", || hypersurface_class(&c));
            r.set_output(class, vec![format!("class      {class:?}")])?;
            r
        }
        Command::Generate { family, out } => {
            let r = generate(family, cli.verify)?;
            if let (Some(path), Some(c)) = (out, &r.config_echo) {
                write_matrix(path, &c.weights)?;
            }
            r
        }
        Command::Oracle(Oracle::Crosscheck {
            seed,
            count,
            max_points,
            max_dim,
            max_entry,
        }) => {
            let limits = CorpusLimits {
                max_points: *max_points,
                max_affine_dim: *max_dim,
                max_entry: *max_entry,
            };
            crosscheck(*seed, *count, &limits)?
        }
    };
    let crosscheck_failed =
        matches!(cli.command, Command::Oracle(_)) && report.verdict == Some(false);
    let ok = report.verified != Some(false) && !crosscheck_failed;
    Ok((report, ok))
}

fn verdict_report(
    c: &Configuration,
    verify: bool,
    decide: impl FnOnce(&Configuration) -> Result<Verdict>,
) -> Result<Report> {
    let mut r = Report::for_config(c);
    let v = r.timed("compute", || decide(c))?;
    if verify {
        r.verified = Some(r.timed("verify", || recheck(c, &v))?);
    }
    r.set_verdict(v);
    Ok(r)
}

fn matrix_lines(label: &str, m: &IntMatrix) -> Vec<String> {
    let mut lines = vec![format!("{label} ({} x {})", m.rows(), m.cols())];
    lines.extend(m.to_string().lines().map(|l| format!("  {l}")));
    lines
}

fn gale(c: &Configuration, verify: bool) -> Result<Report> {
    let mut r = Report::for_config(c);
    let b = r.timed("compute", || gale_dual(c));
    if verify {
        r.verified = Some(r.timed("verify", || verify_gale_dual(c, &b.matrix))?);
    }
    r.set_output(&b.matrix, matrix_lines("gale dual", &b.matrix))?;
    Ok(r)
}

#[derive(Serialize)]
struct StrongOutput {
    canonical: Verdict,
    supplied: Option<Verdict>,
}

fn strong(c: &Configuration, basis: Option<&IntMatrix>, verify: bool) -> Result<Report> {
    let mut r = Report::for_config(c);
    let sr = r.timed("compute", || strong_report(c, basis))?;
    if verify {
        let mut ok = recheck(c, &sr.canonical)?;
        if let Some(s) = &sr.supplied {
            ok &= recheck(c, s)?;
        }
        r.verified = Some(ok);
    }
    let mut text = Vec::new();
    if let Some(s) = &sr.supplied {
        text.push(format!("supplied   {}", s.value));
    }
    r.set_output(
        StrongOutput {
            canonical: sr.canonical.clone(),
            supplied: sr.supplied,
        },
        text,
    )?;
    r.set_verdict(sr.canonical);
    Ok(r)
}

fn decompose(c: &Configuration) -> Result<Report> {
    let mut r = Report::for_config(c);
    let d = r.timed("compute", || pyramid_decompose(c));
    let (k, apexes, rest) = d.join_shape;
    let text = vec![
        format!("repeats    {k}"),
        format!("apexes     {}", set_of(&d.apex_indices)),
        format!("core       {}", set_of(&d.core_indices)),
        format!("splitting  {}", d.splitting_valid),
        format!("join shape ({k}, {apexes}, {rest})"),
    ];
    r.set_output(d, text)?;
    Ok(r)
}

fn circuits(c: &Configuration, verify: bool) -> Result<Report> {
    let mut r = Report::for_config(c);
    let cs = r.timed("compute", || enumerate_circuits(c))?;
    if verify {
        let a = c.affine_matrix();
        let ok = cs.iter().all(|circuit| {
            a.mul_vec(&circuit.relation)
                .is_ok_and(|v| v.iter().all(num_traits::Zero::is_zero))
        });
        r.verified = Some(ok);
    }
    let text = std::iter::once(format!("circuits   {}", cs.len()))
        .chain(
            cs.iter()
                .map(|x| format!("  {} relation ({})", set_of(&x.support), join(&x.relation))),
        )
        .collect();
    r.set_output(cs, text)?;
    Ok(r)
}

fn flats(c: &Configuration) -> Result<Report> {
    let mut r = Report::for_config(c);
    let b = gale_dual(c);
    let fs = r.timed("compute", || enumerate_flats(&b))?;
    let text = std::iter::once(format!("flats      {}", fs.len()))
        .chain(
            fs.iter()
                .map(|f| format!("  rank {} closure {}", f.rank, set_of(&f.closure))),
        )
        .collect();
    r.set_output(fs, text)?;
    Ok(r)
}

fn parse_rows(spec: &str) -> Result<IntMatrix> {
    let m = parse_inline(spec)?;
    if m.cols() == 0 {
        bail!("--rows needs at least one column");
    }
    Ok(m)
}

fn generate(family: &Generate, verify: bool) -> Result<Report> {
    let (c, parity_block) = match family {
        Generate::Segre { m } => (segre(*m)?, Some(IntMatrix::from_rows(&[vec![1i64; *m]])?)),
        Generate::Lawrence { rows } => {
            let m = parse_rows(rows)?;
            (lawrence(&m)?, Some(m))
        }
        Generate::FamilyAlpha { alpha } => (family_alpha(*alpha)?, None),
        Generate::FamilyDim { alphas } => (family_dim(alphas.len(), alphas)?, None),
        Generate::FamilyCodim { m, alphas } => (family_codim(*m, alphas.len(), alphas)?, None),
    };
    let mut r = Report::for_config(&c);
    let v = match &parity_block {
        Some(m) => {
            let v = r.timed("compute", || lawrence_strong_parity(m));
            if verify {
                r.verified = Some(recheck_parity(m, &v));
            }
            v
        }
        None => {
            let v = r.timed("compute", || is_self_dual(&c));
            if verify {
                r.verified = Some(recheck(&c, &v)?);
            }
            v
        }
    };
    let mut text = matrix_lines("matrix", &c.weights);
    text.push(format!("dimension  {}", affine_dim(&c)));
    r.set_output(&c.weights, text)?;
    r.set_verdict(v);
    Ok(r)
}

#[derive(Serialize)]
struct Disagreement {
    index: usize,
    weights: IntMatrix,
    line_sums: bool,
    flats: bool,
    sigma: bool,
    coparallel: bool,
    classes_match: bool,
}

#[derive(Serialize)]
struct CrosscheckOutput {
    limits: CorpusLimits,
    instances: usize,
    self_dual: usize,
    disagreements: Vec<Disagreement>,
}

fn crosscheck(seed: u64, count: usize, limits: &CorpusLimits) -> Result<Report> {
    let mut r = Report {
        seed: Some(seed),
        ..Report::default()
    };
    let corpus = r.timed("corpus", || random_corpus(seed, count, limits));
    let out = r.timed("compare", || -> Result<CrosscheckOutput> {
        let mut self_dual = 0;
        let mut disagreements = Vec::new();
        for (index, c) in corpus.iter().enumerate() {
            let b = gale_dual(c);
            let line_sums = line_sums_zero(&b)?.value;
            let flats = self_dual_via_flats(&b)?;
            let sigma = self_dual_via_sigma(&regularize(c))?;
            let coparallel = coparallel_criterion(c)?.value;
            let classes_match = coparallel_classes(&b).classes == coparallel_via_circuits(c)?;
            self_dual += usize::from(line_sums);
            if !(line_sums == flats && flats == sigma && sigma == coparallel && classes_match) {
                disagreements.push(Disagreement {
                    index,
                    weights: c.weights.clone(),
                    line_sums,
                    flats,
                    sigma,
                    coparallel,
                    classes_match,
                });
            }
        }
        Ok(CrosscheckOutput {
            limits: *limits,
            instances: corpus.len(),
            self_dual,
            disagreements,
        })
    })?;
    r.verdict = Some(out.disagreements.is_empty());
    let mut text = vec![
        format!("instances  {}", out.instances),
        format!("self-dual  {}", out.self_dual),
        format!("disagree   {}", out.disagreements.len()),
    ];
    for d in &out.disagreements {
        text.push(format!(
            "  #{}: lines {}, flats {}, sigma {}, coparallel {}, classes {}",
            d.index, d.line_sums, d.flats, d.sigma, d.coparallel, d.classes_match
        ));
    }
    r.set_output(out, text)?;
    Ok(r)
}
