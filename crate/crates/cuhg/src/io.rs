//! On-disk hypergraph format.
//!
//! Phases are stored as `[re, im]` pairs, not angles, so round-trips stay
//! exact. Vertices are implicit indices `0..n-1`. The canonical form sorts
//! incidences by vertex inside each edge and never reorders edges (edge
//! order is the column order of the incidence matrix).

use serde::{Deserialize, Serialize};

use crate::hypergraph::Hypergraph;
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceRecord {
    pub v: usize,
    pub omega: [f64; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDocument {
    pub schema_version: u32,
    pub n: usize,
    pub edges: Vec<Vec<IncidenceRecord>>,
}

impl HypergraphDocument {
    pub fn from_hypergraph(g: &Hypergraph) -> HypergraphDocument {
        HypergraphDocument {
            schema_version: SCHEMA_VERSION,
            n: g.vertex_count(),
            edges: g
                .edges()
                .iter()
                .map(|edge| {
                    edge.iter()
                        .map(|(&v, &p)| IncidenceRecord {
                            v,
                            omega: [p.re(), p.im()],
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Parse a document and validate it into a hypergraph.
pub fn parse(text: &str) -> Result<Hypergraph> {
    let doc: HypergraphDocument = serde_json::from_str(text).map_err(|e| {
        if e.classify() == serde_json::error::Category::Data {
            Error::Schema(e.to_string())
        } else {
            Error::Syntax {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            }
        }
    })?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "unsupported schema_version {}, expected {SCHEMA_VERSION}",
            doc.schema_version
        )));
    }
    let raw: Vec<Vec<(usize, f64, f64)>> = doc
        .edges
        .iter()
        .map(|edge| {
            edge.iter()
                .map(|inc| (inc.v, inc.omega[0], inc.omega[1]))
                .collect()
        })
        .collect();
    Hypergraph::build(doc.n, &raw)
}

/// Canonical serialization: no whitespace, incidences sorted by vertex,
/// floats in shortest round-trip decimal form. `parse(serialize(g))`
/// reproduces `g` exactly, and re-serializing is byte-identical.
pub fn serialize(g: &Hypergraph) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{{\"schema_version\":{SCHEMA_VERSION},\"n\":{},\"edges\":[",
        g.vertex_count()
    ));
    for (j, edge) in g.edges().iter().enumerate() {
        if j > 0 {
            out.push(',');
        }
        out.push('[');
        // BTreeMap iteration is already vertex-sorted
        for (k, (&v, &p)) in edge.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&format!(
                "{{\"v\":{v},\"omega\":[{},{}]}}",
                fmt_f64(p.re()),
                fmt_f64(p.im())
            ));
        }
        out.push(']');
    }
    out.push_str("]}");
    out
}

/// Shortest decimal that round-trips to the same double; negative zero is
/// normalized away.
fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{x}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g1, g3};
    use crate::generate::{gen_random, PhaseMode};
    use crate::phase::Phase;

    const G1_DOC: &str =
        r#"{"schema_version":1,"n":2,"edges":[[{"v":0,"omega":[1,0]},{"v":1,"omega":[0,1]}]]}"#;

    #[test]
    fn parse_g1() {
        let g = parse(G1_DOC).unwrap();
        assert_eq!(g, g1());
    }

    #[test]
    fn serialize_g1_is_canonical() {
        assert_eq!(serialize(&g1()), G1_DOC);
    }

    #[test]
    fn serialize_empty() {
        assert_eq!(
            serialize(&Hypergraph::empty(0)),
            r#"{"schema_version":1,"n":0,"edges":[]}"#
        );
    }

    #[test]
    fn parse_rejects_non_unit_phase() {
        let doc =
            r#"{"schema_version":1,"n":2,"edges":[[{"v":0,"omega":[1,0]},{"v":1,"omega":[0.5,0.5]}]]}"#;
        assert!(matches!(parse(doc), Err(Error::NonUnitPhase { .. })));
    }

    #[test]
    fn parse_rejects_wrong_schema_version() {
        let doc = r#"{"schema_version":2,"n":0,"edges":[]}"#;
        assert!(matches!(parse(doc), Err(Error::Schema(_))));
    }

    #[test]
    fn parse_reports_syntax_position() {
        match parse("{\"schema_version\":1,\n  \"n\": }") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parse_reports_schema_errors() {
        let doc = r#"{"schema_version":1,"n":2,"edges":[[{"vertex":0,"omega":[1,0]}]]}"#;
        assert!(matches!(parse(doc), Err(Error::Schema(_))));
    }

    #[test]
    fn round_trip_is_exact_for_generated_graphs() {
        for seed in 0..20 {
            let g = gen_random(6, 4, 0.7, PhaseMode::Continuous, seed)
                .unwrap()
                .graph;
            let text = serialize(&g);
            let back = parse(&text).unwrap();
            assert_eq!(back, g, "seed {seed}");
            assert_eq!(serialize(&back), text, "seed {seed}");
        }
    }

    #[test]
    fn serialize_is_deterministic_per_seed() {
        let a = gen_random(5, 3, 0.5, PhaseMode::Continuous, 33).unwrap().graph;
        let b = gen_random(5, 3, 0.5, PhaseMode::Continuous, 33).unwrap().graph;
        assert_eq!(serialize(&a), serialize(&b));
    }

    #[test]
    fn document_round_trip_preserves_exotic_phases() {
        let g = Hypergraph::build(
            1,
            &[vec![(0, Phase::from_angle(1.234).re(), Phase::from_angle(1.234).im())]],
        )
        .unwrap();
        let g2 = parse(&serialize(&g)).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn g3_round_trip() {
        let text = serialize(&g3());
        assert_eq!(parse(&text).unwrap(), g3());
    }
}
