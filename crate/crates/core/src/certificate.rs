//! JSON certificates and CSV scan rows.
//!
//! Every exact value is a reduced `p/q` string; each `approx` field is the
//! exact field next to it rounded half-even to `digits` significant digits.
//! Serialization is deterministic, so two runs on the same input differ
//! only in `timing`.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{format_scalar, parse_scalar, to_decimal_string, Scalar};
use crate::families::XrSpec;
use crate::kstability::{InputKind, StabilityCertificate};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    File(String),
    Family { r: usize },
    Builtin(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputBlock {
    pub kind: String,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub label: String,
    pub coords: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeBlock {
    pub dim: usize,
    /// Counts for the moment polytope `P`.
    pub vertices: usize,
    pub facets: usize,
    pub reflexive: bool,
    pub smooth: bool,
    pub warnings: Vec<String>,
    /// Generators of `Δ` in family listing order, when built from a family.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generators: Option<Vec<Generator>>,
    /// Vertices of `Δ` in canonical order, when the input was `Δ`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fano_vertices: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentsBlock {
    pub volume: String,
    pub b: Vec<String>,
    pub c: Vec<Vec<String>>,
    pub sbar: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialBlock {
    pub a: Vec<String>,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MabuchiBlock {
    pub value: String,
    pub approx: String,
    pub argmax: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionBlock {
    pub applicable: bool,
    pub satisfied: bool,
    pub pminus_vertices: usize,
    pub vol_pminus: String,
    pub vol_pminus_approx: String,
    pub integral: String,
    pub integral_approx: String,
    pub lhs: String,
    pub lhs_approx: String,
    /// Absent when `Vol(P⁻) = 0`.
    pub rhs: Option<String>,
    pub rhs_approx: Option<String>,
    pub lhs_minus_rhs: Option<String>,
    pub lhs_minus_rhs_approx: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictBlock {
    pub sufficient_polystable: bool,
    pub ding_unstable: bool,
    pub criterion: CriterionBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DestabilizerBlock {
    pub candidate: String,
    pub u: Vec<String>,
    pub d: String,
    pub value: String,
    pub approx: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimingBlock {
    pub moments_s: f64,
    pub pminus_s: f64,
    pub criterion_s: f64,
    pub destabilizer_s: f64,
    pub total_s: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema_version: u32,
    pub digits: usize,
    pub input: InputBlock,
    pub polytope: PolytopeBlock,
    pub moments: MomentsBlock,
    pub potential: PotentialBlock,
    pub mabuchi: MabuchiBlock,
    pub verdicts: VerdictBlock,
    pub destabilizer: Option<DestabilizerBlock>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<TimingBlock>,
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

pub fn kind_name(kind: InputKind) -> &'static str {
    match kind {
        InputKind::FanoPolytope => "fano_polytope",
        InputKind::MomentPolytope => "moment_polytope",
    }
}

impl CertificateDocument {
    pub fn new(cert: &StabilityCertificate, source: Source, digits: usize) -> Self {
        let approx = |q: &Scalar| to_decimal_string(q, digits);
        let p = &cert.moment_polytope;
        let m = &cert.moments;
        let generators = match &source {
            Source::Family { r } => XrSpec::new(*r).ok().map(|spec| {
                spec.generators()
                    .into_iter()
                    .map(|(label, v)| Generator { label, coords: v.0 })
                    .collect()
            }),
            _ => None,
        };
        let cr = &cert.criterion;
        let rhs = cr.rhs.as_ref();
        let diff = cr.lhs_minus_rhs();
        Self {
            schema_version: SCHEMA_VERSION,
            digits,
            input: InputBlock {
                kind: kind_name(cert.kind).to_string(),
                source,
            },
            polytope: PolytopeBlock {
                dim: p.dim(),
                vertices: p.vertices().len(),
                facets: p.facets().len(),
                reflexive: cert.reflexive,
                smooth: cert.smooth,
                warnings: cert.warnings.clone(),
                generators,
                fano_vertices: cert
                    .fano
                    .as_ref()
                    .map(|d| d.vertices().iter().map(|v| strings(v)).collect()),
            },
            moments: MomentsBlock {
                volume: format_scalar(&m.volume),
                b: strings(&m.first),
                c: m.second.to_rows().iter().map(|r| strings(r)).collect(),
                sbar: format_scalar(&cert.sbar),
            },
            potential: PotentialBlock {
                a: strings(&cert.potential.a),
                c: format_scalar(&cert.potential.c),
            },
            mabuchi: MabuchiBlock {
                value: format_scalar(&cert.mabuchi.value),
                approx: cert.mabuchi.approx(digits),
                argmax: strings(&cert.mabuchi.argmax),
            },
            verdicts: VerdictBlock {
                sufficient_polystable: cert.sufficient_polystable(),
                ding_unstable: cert.ding_unstable(),
                criterion: CriterionBlock {
                    applicable: cr.applicable(),
                    satisfied: cr.satisfied,
                    pminus_vertices: cr.pminus_vertex_count,
                    vol_pminus: format_scalar(&cr.vol_pminus),
                    vol_pminus_approx: approx(&cr.vol_pminus),
                    integral: format_scalar(&cr.integral),
                    integral_approx: approx(&cr.integral),
                    lhs: format_scalar(&cr.lhs),
                    lhs_approx: approx(&cr.lhs),
                    rhs: rhs.map(format_scalar),
                    rhs_approx: rhs.map(approx),
                    lhs_minus_rhs: diff.as_ref().map(format_scalar),
                    lhs_minus_rhs_approx: diff.as_ref().map(approx),
                },
            },
            destabilizer: cert.destabilizer.as_ref().map(|d| DestabilizerBlock {
                candidate: "max(0, theta - 1)".to_string(),
                u: strings(&d.candidate.u),
                d: format_scalar(&d.candidate.d),
                value: format_scalar(&d.value),
                approx: approx(&d.value),
            }),
            timing: Some(TimingBlock {
                moments_s: secs(cert.timing.moments),
                pminus_s: secs(cert.timing.pminus),
                criterion_s: secs(cert.timing.criterion),
                destabilizer_s: secs(cert.timing.destabilizer),
                total_s: secs(cert.timing.total),
            }),
        }
    }

    pub fn without_timing(&self) -> Self {
        Self {
            timing: None,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Every exact string field, parsed back.
    pub fn exact_fields(&self) -> Result<Vec<Scalar>> {
        let mut out: Vec<&String> = vec![&self.moments.volume, &self.moments.sbar];
        out.extend(&self.moments.b);
        out.extend(self.moments.c.iter().flatten());
        out.extend(&self.potential.a);
        out.push(&self.potential.c);
        out.push(&self.mabuchi.value);
        out.extend(&self.mabuchi.argmax);
        let cr = &self.verdicts.criterion;
        out.extend([&cr.vol_pminus, &cr.integral, &cr.lhs]);
        out.extend(cr.rhs.iter().chain(&cr.lhs_minus_rhs));
        if let Some(d) = &self.destabilizer {
            out.extend(&d.u);
            out.push(&d.d);
            out.push(&d.value);
        }
        out.into_iter()
            .map(|s| {
                parse_scalar(s).map_err(|message| crate::Error::Parse {
                    line: 0,
                    column: 0,
                    message,
                })
            })
            .collect()
    }
}

/// One line of `scan` output; `error` is empty on success.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub name: String,
    pub dim: Option<usize>,
    pub vertices: Option<usize>,
    pub mabuchi: String,
    pub mabuchi_approx: String,
    pub sufficient_polystable: Option<bool>,
    pub ding_unstable: Option<bool>,
    /// `satisfied`, `not_satisfied` or `not_applicable`.
    pub criterion: String,
    pub error: String,
}

impl ScanRow {
    pub fn ok(name: String, cert: &StabilityCertificate, digits: usize) -> Self {
        let cr = &cert.criterion;
        let criterion = match (cr.applicable(), cr.satisfied) {
            (false, _) => "not_applicable",
            (true, true) => "satisfied",
            (true, false) => "not_satisfied",
        };
        Self {
            name,
            dim: Some(cert.moment_polytope.dim()),
            vertices: Some(cert.fano.as_ref().unwrap_or(&cert.moment_polytope).vertices().len()),
            mabuchi: format_scalar(&cert.mabuchi.value),
            mabuchi_approx: cert.mabuchi.approx(digits),
            sufficient_polystable: Some(cert.sufficient_polystable()),
            ding_unstable: Some(cert.ding_unstable()),
            criterion: criterion.to_string(),
            error: String::new(),
        }
    }

    pub fn failed(name: String, error: String) -> Self {
        Self {
            name,
            error,
            ..Self::default()
        }
    }
}

pub fn write_csv<W: std::io::Write>(rows: &[ScanRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_vector;
    use crate::kstability::analyze;
    use crate::polytope::enumerate_facets;

    fn square_cert() -> StabilityCertificate {
        let sq = enumerate_facets(&[
            int_vector(&[1, 1]),
            int_vector(&[1, -1]),
            int_vector(&[-1, 1]),
            int_vector(&[-1, -1]),
        ])
        .unwrap();
        analyze(&sq, InputKind::MomentPolytope).unwrap()
    }

    #[test]
    fn square_document() {
        let doc = CertificateDocument::new(&square_cert(), Source::File("square.poly".into()), 15);
        assert_eq!(doc.mabuchi.value, "0");
        assert_eq!(doc.mabuchi.approx, "0");
        assert!(doc.verdicts.sufficient_polystable);
        assert!(!doc.verdicts.criterion.applicable);
        assert!(doc.verdicts.criterion.rhs.is_none());
        assert!(doc.destabilizer.is_none());
        assert_eq!(doc.moments.volume, "4");
    }

    #[test]
    fn json_round_trip_is_stable() {
        let doc = CertificateDocument::new(&square_cert(), Source::Family { r: 1 }, 10).without_timing();
        let text = doc.to_json();
        let back = CertificateDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
        assert!(back.exact_fields().is_ok());
        assert!(!text.contains("timing"));
    }

    #[test]
    fn csv_rows() {
        let rows = vec![
            ScanRow::ok("a.poly".into(), &square_cert(), 15),
            ScanRow::failed("b.poly".into(), "polytope is not reflexive".into()),
        ];
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("name,dim,vertices,mabuchi"));
        assert!(lines[1].contains("not_applicable"));
        assert!(lines[2].ends_with("polytope is not reflexive"));
    }
}
