//! Machine-readable reports and certificates.
//!
//! Reports are single-line JSON objects whose first field is `outcome`.
//! Every exact value is a reduced rational string; the only floats are the
//! `*_approx` diagnostic fields.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::document::{parse_rational_value, rational_strings};
use crate::certify::{Counterexample, Outcome, PolyaCertificate, PureStateScan, SearchReport};
use crate::error::{Error, Result};
use crate::poly::MultiIndex;
use crate::psd::PdWitness;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EmitOptions {
    /// Include the full minor vector of every witness.
    pub witnesses: bool,
    /// Include the grid margin estimate and per-exponent failures.
    pub diagnostics: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct WitnessRepr {
    alpha: Vec<u32>,
    minors: Vec<Value>,
}

#[derive(Debug, Serialize)]
struct FailureRepr {
    m: u32,
    alpha: Vec<u32>,
}

#[derive(Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
enum ReportRepr {
    Certified {
        m: u32,
        witnesses: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        degree: Option<u32>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness_minors: Option<Vec<WitnessRepr>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        failures: Option<Vec<FailureRepr>>,
        #[serde(flatten)]
        margin: Option<MarginRepr>,
    },
    Refuted {
        point: Vec<String>,
        direction: Vec<String>,
        value: String,
    },
    Inconclusive {
        #[serde(skip_serializing_if = "Option::is_none")]
        m_max: Option<u32>,
        grid_depth: u32,
        #[serde(skip_serializing_if = "Option::is_none")]
        failures: Option<Vec<FailureRepr>>,
        #[serde(flatten)]
        margin: Option<MarginRepr>,
    },
    Margin {
        grid_depth: u32,
        #[serde(flatten)]
        margin: MarginRepr,
    },
    PureStateScan {
        grid_depth: u32,
        evaluations: usize,
        min_value: String,
        point: Vec<String>,
        direction: Vec<String>,
    },
    Verified {
        valid: bool,
    },
}

#[derive(Debug, Serialize)]
struct MarginRepr {
    margin_estimate: String,
    margin_estimate_approx: f64,
}

impl MarginRepr {
    fn new(eps: &Rational) -> Self {
        MarginRepr {
            margin_estimate: rational::format(eps),
            margin_estimate_approx: rational::to_f64(eps),
        }
    }
}

fn render(repr: &ReportRepr) -> String {
    let mut out = serde_json::to_string(repr).expect("report serializes");
    out.push('\n');
    out
}

fn failures(report: &SearchReport) -> Vec<FailureRepr> {
    report
        .failures
        .iter()
        .map(|f| FailureRepr {
            m: f.m,
            alpha: f.alpha.exponents().to_vec(),
        })
        .collect()
}

fn witness_list(cert: &PolyaCertificate) -> Vec<WitnessRepr> {
    cert.witnesses
        .iter()
        .map(|(alpha, w)| WitnessRepr {
            alpha: alpha.exponents().to_vec(),
            minors: rational_strings(&w.minors)
                .into_iter()
                .map(Value::String)
                .collect(),
        })
        .collect()
}

pub fn emit_report(report: &SearchReport, opts: EmitOptions) -> String {
    let diag = opts.diagnostics;
    let margin = || report.margin.as_ref().filter(|_| diag).map(MarginRepr::new);
    let repr = match &report.outcome {
        Outcome::Certified(cert) => ReportRepr::Certified {
            m: cert.m,
            witnesses: cert.witnesses.len(),
            degree: opts.witnesses.then_some(cert.degree),
            witness_minors: opts.witnesses.then(|| witness_list(cert)),
            failures: diag.then(|| failures(report)),
            margin: margin(),
        },
        Outcome::Refuted(cx) => refuted(cx),
        Outcome::Inconclusive => ReportRepr::Inconclusive {
            m_max: Some(report.m_max),
            grid_depth: report.grid_depth,
            failures: Some(failures(report)),
            margin: margin(),
        },
    };
    render(&repr)
}

fn refuted(cx: &Counterexample) -> ReportRepr {
    ReportRepr::Refuted {
        point: rational_strings(&cx.point),
        direction: rational_strings(&cx.direction),
        value: rational::format(&cx.value),
    }
}

pub fn emit_counterexample(cx: &Counterexample) -> String {
    render(&refuted(cx))
}

/// Report for a grid that produced no counterexample in refute-only mode.
pub fn emit_clean_grid(grid_depth: u32) -> String {
    render(&ReportRepr::Inconclusive {
        m_max: None,
        grid_depth,
        failures: None,
        margin: None,
    })
}

pub fn emit_margin(grid_depth: u32, eps: &Rational) -> String {
    render(&ReportRepr::Margin {
        grid_depth,
        margin: MarginRepr::new(eps),
    })
}

pub fn emit_pure_state_scan(grid_depth: u32, scan: &PureStateScan) -> String {
    render(&ReportRepr::PureStateScan {
        grid_depth,
        evaluations: scan.evaluations,
        min_value: rational::format(&scan.value),
        point: rational_strings(&scan.point),
        direction: rational_strings(&scan.direction),
    })
}

pub fn emit_verification(valid: bool) -> String {
    render(&ReportRepr::Verified { valid })
}

#[derive(Debug, Deserialize)]
struct CertificateRepr {
    outcome: String,
    m: u32,
    witnesses: usize,
    degree: u32,
    witness_minors: Vec<WitnessRepr>,
}

/// Reads a certificate back from a `certified` report emitted with full
/// witnesses.
pub fn parse_certificate(text: &str) -> Result<PolyaCertificate> {
    let repr: CertificateRepr =
        serde_json::from_str(text).map_err(|e| Error::parse("certificate", e.to_string()))?;
    if repr.outcome != "certified" {
        return Err(Error::parse(
            "outcome",
            format!("expected \"certified\", found {:?}", repr.outcome),
        ));
    }
    if repr.witnesses != repr.witness_minors.len() {
        return Err(Error::parse(
            "witnesses",
            format!(
                "declares {} but lists {}",
                repr.witnesses,
                repr.witness_minors.len()
            ),
        ));
    }
    let mut witnesses = BTreeMap::new();
    for (k, w) in repr.witness_minors.iter().enumerate() {
        let minors = w
            .minors
            .iter()
            .enumerate()
            .map(|(i, v)| parse_rational_value(v, &format!("witness_minors[{k}].minors[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let alpha = MultiIndex::new(w.alpha.clone());
        if witnesses
            .insert(alpha.clone(), PdWitness { minors })
            .is_some()
        {
            return Err(Error::parse(
                format!("witness_minors[{k}].alpha"),
                format!("duplicate multi-index {alpha}"),
            ));
        }
    }
    Ok(PolyaCertificate {
        m: repr.m,
        degree: repr.degree,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::ExponentFailure;
    use crate::rational::{int, ratio};

    fn report(outcome: Outcome) -> SearchReport {
        SearchReport {
            outcome,
            m_tried: 1,
            m_max: 0,
            grid_depth: 16,
            failures: vec![ExponentFailure {
                m: 0,
                alpha: MultiIndex::new(vec![1, 1]),
            }],
            margin: Some(ratio(1, 4)),
        }
    }

    #[test]
    fn refuted_shape() {
        let cx = Counterexample {
            point: vec![int(1), int(0)],
            direction: vec![int(0), int(1)],
            value: int(0),
        };
        assert_eq!(
            emit_report(&report(Outcome::Refuted(cx)), EmitOptions::default()),
            "{\"outcome\":\"refuted\",\"point\":[\"1\",\"0\"],\"direction\":[\"0\",\"1\"],\"value\":\"0\"}\n"
        );
    }

    #[test]
    fn inconclusive_shape() {
        let text = emit_report(&report(Outcome::Inconclusive), EmitOptions::default());
        assert!(text.starts_with("{\"outcome\":\"inconclusive\",\"m_max\":0,\"grid_depth\":16"));
        assert!(!text.contains("margin"));
        let text = emit_report(
            &report(Outcome::Inconclusive),
            EmitOptions {
                witnesses: false,
                diagnostics: true,
            },
        );
        assert!(text.contains("\"margin_estimate\":\"1/4\",\"margin_estimate_approx\":0.25"));
    }

    #[test]
    fn certified_round_trip() {
        let witnesses = [
            (vec![1, 0], vec![int(2), int(1)]),
            (vec![0, 1], vec![int(1), ratio(1, 2)]),
        ]
        .into_iter()
        .map(|(a, m)| (MultiIndex::new(a), PdWitness { minors: m }))
        .collect();
        let cert = PolyaCertificate {
            m: 0,
            degree: 1,
            witnesses,
        };
        let plain = emit_report(
            &report(Outcome::Certified(cert.clone())),
            EmitOptions::default(),
        );
        assert_eq!(
            plain,
            "{\"outcome\":\"certified\",\"m\":0,\"witnesses\":2}\n"
        );

        let full = emit_report(
            &report(Outcome::Certified(cert.clone())),
            EmitOptions {
                witnesses: true,
                diagnostics: false,
            },
        );
        assert!(full.contains("\"minors\":[\"1\",\"1/2\"]"));
        assert_eq!(parse_certificate(&full).unwrap(), cert);
        assert!(parse_certificate(&plain).is_err());
    }
}
