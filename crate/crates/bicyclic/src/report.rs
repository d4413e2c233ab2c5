//! Census output.
//!
//! Text (version 1): a `#` header naming the run, one `record` line per
//! weighted graph, one `summary` line per family and pendant flag, and a
//! closing `total` line. Every line is space-separated `key=value` pairs
//! after its leading tag; `label` comes last and is quoted.
//!
//! ```text
//! # bicyclic census v1 n=5 grid=1 tree_weight=1 filter=rank=2
//! record order=5 family=theta(1,1,1) pendants=no edges=0-3,0-4,1-3,1-4,2-3,2-4 weights=1,1,1,1,1,1 a=1,1 b=1,1 c=1,1 inertia=1,1,3 rank=2 label="Thm 4.1"
//! summary family=theta(1,1,1) pendants=no graphs=1 records=1 i+=1..1 i-=1..1 i0=3..3 rank=2..2
//! total graphs=1 records=1
//! ```
//!
//! JSON (version 1) mirrors the same data; see [`JsonReport`].

use std::collections::BTreeSet;
use std::fmt::Write as _;

use bicyclic_core::lab::{CensusConfig, CensusRecord, FamilySummary};
use bicyclic_core::Rational;
use serde::Serialize;

pub const FORMAT_VERSION: u32 = 1;

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Splits the concatenated base weights into `a`, `b`, `c`.
fn strands(r: &CensusRecord) -> [&[Rational]; 3] {
    let [la, lb, _] = r.family.sequence_lengths();
    let (a, rest) = r.base_weights.split_at(la);
    let (b, c) = rest.split_at(lb);
    [a, b, c]
}

pub fn header(cfg: &CensusConfig) -> String {
    format!(
        "# bicyclic census v{FORMAT_VERSION} n={} grid={} tree_weight={} filter={}",
        cfg.n,
        join(&cfg.grid),
        cfg.tree_weight,
        cfg.filter
    )
}

pub fn record_line(r: &CensusRecord) -> String {
    let edges: Vec<String> = r.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    let [a, b, c] = strands(r);
    let i = r.inertia;
    format!(
        "record order={} family={} pendants={} edges={} weights={} a={} b={} c={} inertia={},{},{} rank={} label=\"{}\"",
        r.order,
        r.family,
        yes_no(r.has_pendants),
        edges.join(","),
        join(&r.weights),
        join(a),
        join(b),
        join(c),
        i.pos,
        i.neg,
        i.zero,
        r.rank(),
        r.label.unwrap_or("unmatched"),
    )
}

pub fn summary_line(s: &FamilySummary) -> String {
    format!(
        "summary family={} pendants={} graphs={} records={} i+={} i-={} i0={} rank={}",
        s.family,
        yes_no(s.has_pendants),
        s.graphs,
        s.records,
        s.pos,
        s.neg,
        s.zero,
        s.rank
    )
}

fn distinct_graphs(records: &[CensusRecord]) -> usize {
    records.iter().map(|r| &r.edges).collect::<BTreeSet<_>>().len()
}

/// The whole text report.
pub fn text_report(cfg: &CensusConfig, records: &[CensusRecord], summary: &[FamilySummary]) -> String {
    let mut out = header(cfg);
    out.push('\n');
    for r in records {
        out.push_str(&record_line(r));
        out.push('\n');
    }
    for s in summary {
        out.push_str(&summary_line(s));
        out.push('\n');
    }
    let _ = writeln!(out, "total graphs={} records={}", distinct_graphs(records), records.len());
    out
}

#[derive(Debug, Serialize)]
pub struct JsonInertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

#[derive(Debug, Serialize)]
pub struct JsonRecord {
    pub order: usize,
    pub kind: String,
    pub p: usize,
    pub l: usize,
    pub q: usize,
    pub pendants: bool,
    pub edges: Vec<(usize, usize)>,
    pub weights: Vec<String>,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub c: Vec<String>,
    pub inertia: JsonInertia,
    pub rank: usize,
    pub label: Option<&'static str>,
}

#[derive(Debug, Serialize)]
pub struct JsonSpan {
    pub min: usize,
    pub max: usize,
}

#[derive(Debug, Serialize)]
pub struct JsonSummary {
    pub family: String,
    pub pendants: bool,
    pub graphs: usize,
    pub records: usize,
    pub pos: JsonSpan,
    pub neg: JsonSpan,
    pub zero: JsonSpan,
    pub rank: JsonSpan,
}

/// Rationals are written as strings (`"5/2"`).
#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub version: u32,
    pub n: usize,
    pub grid: Vec<String>,
    pub tree_weight: String,
    pub filter: String,
    pub graphs: usize,
    pub records: Vec<JsonRecord>,
    pub summary: Vec<JsonSummary>,
}

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

impl JsonReport {
    pub fn new(cfg: &CensusConfig, records: &[CensusRecord], summary: &[FamilySummary]) -> Self {
        let span = |s: bicyclic_core::lab::Span| JsonSpan { min: s.min, max: s.max };
        JsonReport {
            version: FORMAT_VERSION,
            n: cfg.n,
            grid: strings(&cfg.grid),
            tree_weight: cfg.tree_weight.to_string(),
            filter: cfg.filter.to_string(),
            graphs: distinct_graphs(records),
            records: records
                .iter()
                .map(|r| {
                    let [a, b, c] = strands(r);
                    JsonRecord {
                        order: r.order,
                        kind: r.family.kind.to_string(),
                        p: r.family.p,
                        l: r.family.l,
                        q: r.family.q,
                        pendants: r.has_pendants,
                        edges: r.edges.clone(),
                        weights: strings(&r.weights),
                        a: strings(a),
                        b: strings(b),
                        c: strings(c),
                        inertia: JsonInertia { pos: r.inertia.pos, neg: r.inertia.neg, zero: r.inertia.zero },
                        rank: r.rank(),
                        label: r.label,
                    }
                })
                .collect(),
            summary: summary
                .iter()
                .map(|s| JsonSummary {
                    family: s.family.to_string(),
                    pendants: s.has_pendants,
                    graphs: s.graphs,
                    records: s.records,
                    pos: span(s.pos),
                    neg: span(s.neg),
                    zero: span(s.zero),
                    rank: span(s.rank),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
