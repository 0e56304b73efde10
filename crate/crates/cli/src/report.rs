//! Report assembly and rendering.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use selfdual_core::gale::{LineClass, LinePartition};
use selfdual_core::linalg::{IntMatrix, RatVector};
use selfdual_core::verdict::{DecompositionFailure, StarDefect};
use selfdual_core::{Configuration, Criterion, Verdict, Witness};

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub verdict: Option<bool>,
    pub criterion: Option<Criterion>,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub config_echo: Option<Configuration>,
    /// Milliseconds per stage.
    pub timings: BTreeMap<String, f64>,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn for_config(c: &Configuration) -> Self {
        Self {
            config_echo: Some(c.clone()),
            ..Self::default()
        }
    }

    pub fn set_verdict(&mut self, v: Verdict) {
        self.verdict = Some(v.value);
        self.criterion = Some(v.criterion);
        self.witness = Some(v.witness);
    }

    /// Runs `f` and records its wall time under `stage`.
    pub fn timed<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings
            .insert(stage.to_string(), start.elapsed().as_secs_f64() * 1e3);
        out
    }

    pub fn set_output(&mut self, value: impl Serialize, text: Vec<String>) -> anyhow::Result<()> {
        self.output = Some(serde_json::to_value(value)?);
        self.text = text;
        Ok(())
    }

    pub fn render_text(&self) -> String {
        let mut out = Vec::new();
        if let Some(v) = self.verdict {
            out.push(format!("verdict    {v}"));
        }
        if let Some(c) = self.criterion {
            out.push(format!("criterion  {c}"));
        }
        if let Some(w) = &self.witness {
            let lines = describe_witness(w);
            out.push(format!("witness    {}", lines[0]));
            out.extend(lines[1..].iter().map(|l| format!("           {l}")));
        }
        if let Some(v) = self.verified {
            out.push(format!("verified   {v}"));
        }
        if let Some(s) = self.seed {
            out.push(format!("seed       {s}"));
        }
        out.extend(self.text.iter().cloned());
        let timings: Vec<String> = self
            .timings
            .iter()
            .map(|(k, v)| format!("{k} {v:.2} ms"))
            .collect();
        if !timings.is_empty() {
            out.push(format!("timings    {}", timings.join(", ")));
        }
        out.join("\n")
    }
}

pub fn join<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn set_of(items: &[usize]) -> String {
    format!("{{{}}}", join(items))
}

fn tuple<T: Display>(items: &[T]) -> String {
    format!("({})", join(items))
}

fn block(m: &IntMatrix) -> String {
    let rows: Vec<String> = m.row_vectors().iter().map(|r| tuple(r)).collect();
    rows.join(" ")
}

fn rat(v: &RatVector) -> String {
    tuple(&v.0)
}

fn class_line(c: &LineClass) -> String {
    format!(
        "{} on direction {}, sum {}",
        set_of(&c.members),
        tuple(&c.direction),
        tuple(&c.sum)
    )
}

fn partition_lines(p: &LinePartition) -> Vec<String> {
    let mut lines: Vec<String> = p.classes.iter().map(class_line).collect();
    if !p.zero_rows.is_empty() {
        lines.push(format!("zero rows {}", set_of(&p.zero_rows)));
    }
    lines
}

pub fn describe_witness(w: &Witness) -> Vec<String> {
    match w {
        Witness::LineClasses { partition } => {
            let mut l = vec![format!(
                "{} line classes, all sums zero",
                partition.classes.len()
            )];
            l.extend(partition_lines(partition));
            l
        }
        Witness::ViolatingLine { class } => vec![format!("line class {}", class_line(class))],
        Witness::ImproperFace => vec!["the subset is the whole configuration".into()],
        Witness::PositiveRelation {
            complement,
            coefficients,
        } => vec![format!(
            "complement {} has positive relation {}",
            set_of(complement),
            rat(coefficients)
        )],
        Witness::SeparatingObstruction {
            complement,
            functional,
        } => vec![format!(
            "complement {} is separated by {}",
            set_of(complement),
            rat(functional)
        )],
        Witness::Functional { class, functional } => vec![format!(
            "affine functional {} (constant first) on {}",
            rat(functional),
            set_of(class)
        )],
        Witness::RelationObstruction { class, relation } => vec![format!(
            "relation {} does not sum to zero on {}",
            tuple(relation),
            set_of(class)
        )],
        Witness::ClassFunctionals {
            classes,
            functionals,
        } => {
            let mut l = vec![format!("{} coparallel classes", classes.len())];
            for (c, f) in classes.iter().zip(functionals) {
                l.push(format!("{} by {}", set_of(c), rat(f)));
            }
            l
        }
        Witness::Decomposition {
            report,
            failure,
            core,
        } => {
            let (k, r, rest) = report.join_shape;
            let mut l = vec![format!(
                "join shape (k, r, h - r) = ({k}, {r}, {rest}), apexes {}, splitting {}",
                set_of(&report.apex_indices),
                report.splitting_valid
            )];
            match failure {
                Some(DecompositionFailure::ApexCount { apexes, repeats }) => {
                    l.push(format!("{apexes} apexes but {repeats} surplus copies"))
                }
                Some(DecompositionFailure::Splitting) => l.push("lattice does not split".into()),
                Some(DecompositionFailure::Core) => l.push("core fails the line-sum test".into()),
                None => {}
            }
            if let Some(core) = core {
                l.push(format!("core verdict {} by {}", core.value, core.criterion));
                l.extend(
                    describe_witness(&core.witness)
                        .into_iter()
                        .map(|s| format!("  {s}")),
                );
            }
            l
        }
        Witness::StrongProducts {
            basis,
            partition,
            products,
        } => {
            let mut l = vec![format!("Gale basis with {} columns", basis.cols())];
            l.extend(partition_lines(partition));
            for (j, p) in products.iter().enumerate() {
                l.push(format!("column {j}: {} vs {}", p.positive, p.negative));
            }
            l
        }
        Witness::ParitySubset { normalized, rows } => vec![
            format!(
                "rows {} of the normalized block sum to odd entries",
                set_of(rows)
            ),
            format!("normalized block {}", block(normalized)),
        ],
        Witness::ParityObstruction {
            normalized,
            columns,
        } => vec![
            format!("odd column set {} is even in every row", set_of(columns)),
            format!("normalized block {}", block(normalized)),
        ],
        Witness::SmoothCertificate { stars } => {
            let mut l = vec![format!("{} vertices with basis edge vectors", stars.len())];
            for s in stars {
                l.push(format!(
                    "vertex {} edges to {}",
                    s.vertex,
                    set_of(&s.first_points)
                ));
            }
            l
        }
        Witness::NotCertified { star, defect } => {
            let why = match defect {
                StarDefect::EdgeCount { found, expected } => {
                    format!("{found} edges, expected {expected}")
                }
                StarDefect::NotBasis { index } => format!("edge vectors have index {index}"),
            };
            vec![format!(
                "vertex {} with edges to {}: {why}",
                star.vertex,
                set_of(&star.first_points)
            )]
        }
    }
}
