//! Ground truth at desk scale: exhaustive witness search on single
//! instances, exact ordered Ramsey numbers and labeling thresholds, and
//! golden-value files that freeze what the searches mint.

pub mod detect;
mod exact;

pub use detect::NiNotion;
pub use exact::{exact_f, exact_g, exact_ordered_ramsey, pair_avoider, triple_avoider, ExactOutcome, OracleError};

use crate::cert::Certificate;
use crate::model::{Instance, PatternKind, PatternSpec};
use detect::{PartialPairs, PartialTriples};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Hard size guard for exhaustive witness search.
#[derive(Clone, Copy, Debug)]
pub struct BruteForceOpts {
    pub n_cap: u32,
}

impl Default for BruteForceOpts {
    fn default() -> Self {
        BruteForceOpts { n_cap: 64 }
    }
}

fn to_one_based(v: Vec<usize>) -> Vec<u32> {
    v.into_iter().map(|x| x as u32 + 1).collect()
}

/// Exhaustive backtracking search for the pattern; `Ok(None)` is
/// authoritative absence. Refuses instances above the configured cap.
pub fn brute_force_witness(
    instance: &Instance,
    pattern: &PatternSpec,
    opts: BruteForceOpts,
) -> Result<Option<Certificate>, OracleError> {
    pattern
        .kind
        .validate()
        .map_err(|e| OracleError::BadParam(e.to_string()))?;
    let n = instance.n_vertices();
    if n > opts.n_cap {
        return Err(OracleError::CapExceeded { n, cap: opts.n_cap });
    }
    let color = pattern.color;
    match (instance, pattern.kind) {
        (Instance::Pairs(c), PatternKind::Clique { s }) => {
            let g = PartialPairs::from_coloring(c);
            Ok(g.find_clique(s as usize, color, None).map(|v| Certificate::MonoClique {
                color,
                vertices: to_one_based(v),
                via: None,
            }))
        }
        (Instance::Pairs(c), PatternKind::PathPower { n, t }) => {
            let g = PartialPairs::from_coloring(c);
            Ok(g.find_path_power(n as usize, t as usize, color)
                .map(|v| Certificate::MonoPathPower {
                    color,
                    t,
                    vertices: to_one_based(v),
                    via: None,
                }))
        }
        (Instance::Pairs(c), PatternKind::Blowup { n, t }) => {
            let g = PartialPairs::from_coloring(c);
            Ok(g.find_blowup(n as usize, t as usize, color)
                .map(|v| Certificate::MonoBlowup {
                    color,
                    t,
                    vertices: to_one_based(v),
                }))
        }
        (Instance::Triples(c), PatternKind::TightPath3 { n }) => {
            let g = PartialTriples::from_coloring(c);
            Ok(g.find_tight_path(n as usize, color)
                .map(|v| Certificate::MonoTightPath3 {
                    color,
                    vertices: to_one_based(v),
                }))
        }
        (Instance::Triples(c), PatternKind::Clique3 { s }) => {
            let g = PartialTriples::from_coloring(c);
            Ok(g.find_clique3(s as usize, color).map(|v| Certificate::MonoClique3 {
                color,
                vertices: to_one_based(v),
            }))
        }
        (_, kind) => Err(OracleError::UnsupportedPattern(format!("{kind:?}"))),
    }
}

/// One frozen oracle result: named parameters, the minted value, and an
/// optional witness file holding the extremal instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRecord {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub value: String,
    pub witness_file: Option<String>,
}

/// Renders records in the `.golden` format:
/// one `name k=v ... -> value [witness=file]` line each.
pub fn render_golden(header: &str, records: &[GoldenRecord]) -> String {
    let mut out = String::new();
    for line in header.lines() {
        writeln!(out, "# {line}").unwrap();
    }
    for r in records {
        write!(out, "{}", r.name).unwrap();
        for (k, v) in &r.params {
            write!(out, " {k}={v}").unwrap();
        }
        write!(out, " -> {}", r.value).unwrap();
        if let Some(w) = &r.witness_file {
            write!(out, " witness={w}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenRecord>, OracleError> {
    let mut records = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| OracleError::BadParam(format!("golden line lacks ->: {line}")))?;
        let mut lhs_parts = lhs.split_whitespace();
        let name = lhs_parts
            .next()
            .ok_or_else(|| OracleError::BadParam("golden line lacks a name".into()))?
            .to_string();
        let mut params = BTreeMap::new();
        for p in lhs_parts {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| OracleError::BadParam(format!("bad golden param {p}")))?;
            params.insert(k.to_string(), v.to_string());
        }
        let mut rhs_parts = rhs.split_whitespace();
        let value = rhs_parts
            .next()
            .ok_or_else(|| OracleError::BadParam("golden line lacks a value".into()))?
            .to_string();
        let mut witness_file = None;
        for p in rhs_parts {
            if let Some(w) = p.strip_prefix("witness=") {
                witness_file = Some(w.to_string());
            }
        }
        records.push(GoldenRecord {
            name,
            params,
            value,
            witness_file,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_two_coloring, Prob};
    use crate::model::{Color, TwoColoring};
    use crate::verify::{verify_certificate, Verdict};

    #[test]
    fn witness_on_all_blue() {
        let c = TwoColoring::from_fn(6, |_, _| Color::Blue).unwrap();
        let inst = Instance::Pairs(c);
        let pat = PatternSpec::new(PatternKind::PathPower { n: 6, t: 2 }, Color::Blue).unwrap();
        let cert = brute_force_witness(&inst, &pat, BruteForceOpts::default())
            .unwrap()
            .expect("all-blue K_6 contains a blue P_6^2");
        assert!(matches!(verify_certificate(&inst, &cert), Verdict::Accept));
    }

    #[test]
    fn absence_is_authoritative() {
        let c = TwoColoring::from_fn(5, |_, _| Color::Red).unwrap();
        let inst = Instance::Pairs(c);
        let pat = PatternSpec::new(PatternKind::Clique { s: 2 }, Color::Blue).unwrap();
        assert_eq!(brute_force_witness(&inst, &pat, BruteForceOpts::default()).unwrap(), None);
    }

    #[test]
    fn cap_is_enforced() {
        let c = random_two_coloring(12, Prob::HALF, 1);
        let pat = PatternSpec::new(PatternKind::Clique { s: 3 }, Color::Red).unwrap();
        let e = brute_force_witness(&Instance::Pairs(c), &pat, BruteForceOpts { n_cap: 10 })
            .unwrap_err();
        assert!(matches!(e, OracleError::CapExceeded { n: 12, cap: 10 }));
    }

    #[test]
    fn golden_roundtrip() {
        let records = vec![
            GoldenRecord {
                name: "ramsey".into(),
                params: BTreeMap::from([
                    ("g".into(), "clique:3".into()),
                    ("h".into(), "path_power:4,1".into()),
                ]),
                value: "7".into(),
                witness_file: Some("es_3_4.orc2".into()),
            },
            GoldenRecord {
                name: "g".into(),
                params: BTreeMap::from([("n".into(), "2".into()), ("s".into(), "3".into())]),
                value: "5".into(),
                witness_file: None,
            },
        ];
        let text = render_golden("minted by the exact search oracle", &records);
        assert_eq!(parse_golden(&text).unwrap(), records);
    }
}
