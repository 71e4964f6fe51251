use std::collections::BTreeMap;
use std::fmt::Write;

use idealgraph::theorems::{ClaimResult, Summary, SweepReport};
use idealgraph::{GraphKind, IdealClassification, IdealGraph, InvariantReport, RingSpec};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = include_str!("../report.schema.json");

/// One graph with its invariants, and optionally claims checked on its ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub ring: String,
    pub kind: GraphKind,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub invariants: InvariantReport,
    pub claims: Vec<ClaimResult>,
}

impl Report {
    pub fn new(
        g: &IdealGraph,
        invariants: InvariantReport,
        ring: &RingSpec,
        claims: Vec<ClaimResult>,
    ) -> Self {
        Report {
            ring: ring.to_string(),
            kind: g.kind(),
            vertices: g.labels().iter().map(ToString::to_string).collect(),
            edges: g.edge_labels(),
            invariants,
            claims,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealRow {
    pub ideal: String,
    pub vertex: bool,
    #[serde(flatten)]
    pub flags: IdealClassification,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealListing {
    pub ring: String,
    pub ideal_count: usize,
    pub vertex_count: usize,
    pub ideals: Vec<IdealRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Family {
    pub nmax: u64,
    pub products_up_to: Option<u64>,
    pub extra_rings: Vec<String>,
    pub ring_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub claims: Vec<String>,
    pub family: Family,
    pub summary: Summary,
    pub per_claim: BTreeMap<String, Summary>,
    pub results: Vec<ClaimResult>,
}

impl VerifyReport {
    pub fn new(claims: Vec<String>, family: Family, sweep: SweepReport) -> Self {
        VerifyReport {
            claims,
            family,
            summary: sweep.summary,
            per_claim: sweep.per_claim,
            results: sweep.results,
        }
    }
}

/// `graph <kind>_<spec> { ... }` with one edge statement per edge, then one
/// bare node statement per isolated vertex.
pub fn dot(g: &IdealGraph, ring: &RingSpec) -> String {
    let mut out = format!("graph {}_{} {{\n", g.kind(), ring);
    for (a, b) in g.edge_labels() {
        let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
    }
    for v in g.graph().isolated_vertices() {
        let _ = writeln!(out, "  \"{}\";", g.label(v));
    }
    out.push_str("}\n");
    out
}

fn mark(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "-"
    }
}

pub fn ideal_table(listing: &IdealListing) -> String {
    let mut out = format!(
        "ring {}: {} ideals, {} vertices\n",
        listing.ring, listing.ideal_count, listing.vertex_count
    );
    let width = listing
        .ideals
        .iter()
        .map(|r| r.ideal.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let _ = writeln!(
        out,
        "{:<width$}  vertex  second  prime  minimal  maximal",
        "ideal"
    );
    for row in &listing.ideals {
        let f = &row.flags;
        let _ = writeln!(
            out,
            "{:<width$}  {:<6}  {:<6}  {:<5}  {:<7}  {}",
            row.ideal,
            mark(row.vertex),
            mark(f.is_second),
            mark(f.is_prime),
            mark(f.is_minimal),
            mark(f.is_maximal),
        );
    }
    out
}

pub fn verify_table(report: &VerifyReport) -> String {
    let s = report.summary;
    let mut out = format!(
        "{} rings, {} results: {} pass, {} fail, {} skipped, {} capped\n",
        report.family.ring_count,
        report.results.len(),
        s.pass,
        s.fail,
        s.skipped,
        s.capped
    );
    let _ = writeln!(
        out,
        "{:<14} {:>6} {:>6} {:>8} {:>7}",
        "claim", "pass", "fail", "skipped", "capped"
    );
    for (id, t) in &report.per_claim {
        let _ = writeln!(
            out,
            "{id:<14} {:>6} {:>6} {:>8} {:>7}",
            t.pass, t.fail, t.skipped, t.capped
        );
    }
    for r in report.results.iter().filter(|r| r.witness.is_some()) {
        let w = r.witness.as_ref().expect("filtered");
        let _ = writeln!(out, "FAIL {} on {}: {}", r.claim, r.ring, w.reason);
    }
    out
}
