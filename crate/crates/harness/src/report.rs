//! Deterministic JSON/TSV reports.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use tk5kit_core::{Error, Result};

use crate::verdict::{validate_verdict, Outcome, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Tsv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "tsv" => Ok(ReportFormat::Tsv),
            _ => Err(format!("unknown format {s:?} (expected json or tsv)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMeta {
    pub seed: u64,
    pub budget: u64,
    pub version: String,
}

impl ReportMeta {
    pub fn new(seed: u64, budget: u64) -> Self {
        ReportMeta {
            seed,
            budget,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    meta: &'a ReportMeta,
    results: &'a [Verdict],
}

/// Sorts by graph id, statement and input, re-validates every certificate
/// and renders the report. A certificate that fails re-validation is an
/// internal consistency error.
pub fn emit_report(
    verdicts: &[Verdict],
    format: ReportFormat,
    meta: &ReportMeta,
) -> Result<String> {
    let mut sorted = verdicts.to_vec();
    sorted.sort_by_cached_key(|v| (v.graph_id.clone(), v.statement(), v.input.sort_key()));
    for v in &sorted {
        if !validate_verdict(v) {
            return Err(Error::InternalConsistency(format!(
                "certificate for {} on {} fails re-validation",
                v.statement(),
                v.graph_id
            )));
        }
    }
    Ok(match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&Report {
                meta,
                results: &sorted,
            })
            .expect("serializable");
            s.push('\n');
            s
        }
        ReportFormat::Tsv => tsv(&sorted, meta),
    })
}

fn tsv(verdicts: &[Verdict], meta: &ReportMeta) -> String {
    let mut s = format!(
        "# seed={} budget={} version={}\n",
        meta.seed, meta.budget, meta.version
    );
    s.push_str("graph_id\tgraph6\tstatement\tinput\tk4_mode\tstatus\tdisjunct\tdetail\n");
    for v in verdicts {
        let (status, disjunct, detail) = match &v.outcome {
            Outcome::Certified {
                disjunct,
                certificate,
            } => (
                "certified",
                disjunct.clone(),
                serde_json::to_string(certificate).expect("serializable"),
            ),
            Outcome::Counterexample { refuted } => {
                ("counterexample", String::new(), refuted.join(","))
            }
            Outcome::BudgetExhausted { exhausted, .. } => {
                ("budget-exhausted", String::new(), exhausted.join(","))
            }
        };
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            v.graph_id,
            v.graph6,
            v.statement(),
            v.input.sort_key(),
            v.k4_mode,
            status,
            disjunct,
            detail
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roles::RoleAssignment;
    use crate::verify::verify_theorem_1_1;
    use tk5kit_core::{Budget, Graph};

    fn sample() -> Vec<Verdict> {
        let g = Graph::complete(7).remove_edges([(5, 6)]);
        let mut a =
            verify_theorem_1_1(&g, &RoleAssignment::new(1, 0, 5, 6), &Budget::default()).unwrap();
        let mut b =
            verify_theorem_1_1(&g, &RoleAssignment::new(0, 1, 5, 6), &Budget::default()).unwrap();
        a.graph_id = "k7e".into();
        b.graph_id = "k7e".into();
        vec![a, b]
    }

    #[test]
    fn order_does_not_matter() {
        let meta = ReportMeta::new(1, 100);
        let mut v = sample();
        let r1 = emit_report(&v, ReportFormat::Json, &meta).unwrap();
        v.reverse();
        assert_eq!(r1, emit_report(&v, ReportFormat::Json, &meta).unwrap());
        let t = emit_report(&v, ReportFormat::Tsv, &meta).unwrap();
        assert_eq!(t.lines().count(), 4);
        let j: serde_json::Value = serde_json::from_str(&r1).unwrap();
        assert_eq!(j["results"].as_array().unwrap().len(), 2);
        assert_eq!(j["meta"]["seed"], 1);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let mut v = sample();
        if let Outcome::Certified { disjunct, .. } = &mut v[0].outcome {
            *disjunct = "iii".into();
        }
        let e = emit_report(&v, ReportFormat::Json, &ReportMeta::new(0, 0)).unwrap_err();
        assert!(matches!(e, Error::InternalConsistency(_)));
    }
}
