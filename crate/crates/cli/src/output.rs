//! Reports, DOT and JSON renderings.

use std::fmt::Write;

use bkl4::solver::is_periodic;
use bkl4::sliding::is_rigid;
use bkl4::{GarsideBraid, QuotientGraph, SCGraph};
use serde::Serialize;

use crate::parse::format_braid;

/// Invariants of one braid; the schema of every `--json` document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub normal_form: String,
    pub inf: i64,
    pub sup: i64,
    pub len: usize,
    pub word_len: u64,
    pub lambda: i64,
    pub k1: usize,
    pub k2: usize,
    pub rigid: bool,
    pub periodic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sc_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

impl Report {
    pub fn new(x: &GarsideBraid) -> Report {
        let inv = x.invariants();
        Report {
            normal_form: format_braid(x),
            inf: inv.inf,
            sup: inv.sup,
            len: inv.canonical_length,
            word_len: inv.word_length,
            lambda: inv.lambda,
            k1: inv.k1,
            k2: inv.k2,
            rigid: !x.is_delta_power() && is_rigid(x),
            periodic: is_periodic(x),
            sc_size: None,
            certificate: None,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("{}\n", self.normal_form);
        write!(
            s,
            "inf={} sup={} len={} |x|={} lambda={} k1={} k2={} rigid={} periodic={}",
            self.inf,
            self.sup,
            self.len,
            self.word_len,
            self.lambda,
            self.k1,
            self.k2,
            self.rigid,
            self.periodic
        )
        .unwrap();
        s
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Compact vertex label: factors joined by dots, δ-power prefix only when
/// nonzero.
fn label(x: &GarsideBraid) -> String {
    let mut parts: Vec<String> = Vec::new();
    if x.inf() != 0 || x.factors().is_empty() {
        parts.push(format!("d^{}", x.inf()));
    }
    parts.extend(x.factors().iter().map(|f| f.to_string()));
    parts.join(".")
}

pub fn sc_dot(g: &SCGraph) -> String {
    let mut s = String::from("digraph SCG {\n");
    for (i, v) in g.vertices().iter().enumerate() {
        writeln!(s, "  v{i} [label={}];", quote(&label(v))).unwrap();
    }
    for e in g.edges() {
        writeln!(s, "  v{} -> v{} [label={}];", e.from, e.to, quote(e.arrow.name())).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn quotient_dot(q: &QuotientGraph) -> String {
    let mut s = String::from("digraph QuotientSCG {\n");
    for (i, o) in q.orbits.iter().enumerate() {
        let text = format!("{} ({})", label(o.representative()), o.len());
        writeln!(s, "  o{i} [label={}];", quote(&text)).unwrap();
    }
    for &(a, b) in &q.arcs {
        writeln!(s, "  o{a} -> o{b};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[derive(Serialize)]
struct VertexJson {
    id: usize,
    normal_form: String,
    conjugator: String,
}

#[derive(Serialize)]
struct EdgeJson {
    from: usize,
    arrow: &'static str,
    to: usize,
}

#[derive(Serialize)]
struct GraphJson {
    base: String,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

pub fn sc_json(g: &SCGraph) -> serde_json::Value {
    let doc = GraphJson {
        base: format_braid(g.base()),
        vertices: g
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| VertexJson {
                id: i,
                normal_form: format_braid(v),
                conjugator: format_braid(g.conjugator(i)),
            })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeJson {
                from: e.from,
                arrow: e.arrow.name(),
                to: e.to,
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("plain data serializes")
}

#[derive(Serialize)]
struct OrbitJson {
    id: usize,
    representative: String,
    size: usize,
    conjugator: String,
}

#[derive(Serialize)]
struct QuotientJson {
    orbits: Vec<OrbitJson>,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

pub fn quotient_json(g: &SCGraph, q: &QuotientGraph) -> serde_json::Value {
    let doc = QuotientJson {
        orbits: q
            .orbits
            .iter()
            .enumerate()
            .map(|(i, o)| OrbitJson {
                id: i,
                representative: format_braid(o.representative()),
                size: o.len(),
                conjugator: format_braid(
                    g.conjugator_to(o.representative()).expect("representative is a vertex"),
                ),
            })
            .collect(),
        edges: q.edges.iter().copied().collect(),
        arcs: q.arcs.iter().copied().collect(),
    };
    serde_json::to_value(doc).expect("plain data serializes")
}
