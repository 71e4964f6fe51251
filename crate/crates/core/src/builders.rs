//! Construction of `SII(R)`, `PIS(R)` and `Γ(R)`.
//!
//! Every pair of distinct vertices is tested directly. The edge predicate runs
//! either on the divisor-tuple closed forms ([`PredicateMode::Fast`]) or on the
//! element-level definitions ([`PredicateMode::Oracle`]).

use std::collections::HashMap;

use crate::graph::{Graph, GraphKind, IdealGraph};
use crate::ring::oracle::{ElementRing, ElementSet};
use crate::ring::{Ideal, RingSpec};
use crate::{Caps, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PredicateMode {
    #[default]
    Fast,
    Oracle,
}

pub fn build_sii(ring: &RingSpec, caps: &Caps) -> Result<IdealGraph> {
    build(ring, GraphKind::Sii, PredicateMode::Fast, caps)
}

pub fn build_pis(ring: &RingSpec, caps: &Caps) -> Result<IdealGraph> {
    build(ring, GraphKind::Pis, PredicateMode::Fast, caps)
}

pub fn build_gamma(ring: &RingSpec, caps: &Caps) -> Result<IdealGraph> {
    build(ring, GraphKind::Gamma, PredicateMode::Fast, caps)
}

pub fn build(
    ring: &RingSpec,
    kind: GraphKind,
    mode: PredicateMode,
    caps: &Caps,
) -> Result<IdealGraph> {
    let vertices = ring.vertices(caps.ideals)?;
    if vertices.is_empty() {
        return Err(Error::NoVertices(ring.to_string()));
    }
    let edges = match mode {
        PredicateMode::Fast => fast_edges(ring, kind, &vertices),
        PredicateMode::Oracle => oracle_edges(ring, kind, &vertices, caps)?,
    };
    let graph = Graph::from_edges(vertices.len(), edges)?;
    IdealGraph::new(kind, vertices, graph)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

fn fast_edges(ring: &RingSpec, kind: GraphKind, vs: &[Ideal]) -> Vec<(usize, usize)> {
    let adjacent = |a: &Ideal, b: &Ideal| match kind {
        GraphKind::Sii => ring.is_second(&ring.intersect(a, b)),
        GraphKind::Pis => ring.is_prime_ideal(&ring.sum(a, b)),
        GraphKind::Gamma => !ring.is_zero(&ring.intersect(a, b)),
    };
    pairs(vs.len())
        .filter(|&(a, b)| adjacent(&vs[a], &vs[b]))
        .collect()
}

fn oracle_edges(
    ring: &RingSpec,
    kind: GraphKind,
    vs: &[Ideal],
    caps: &Caps,
) -> Result<Vec<(usize, usize)>> {
    let er = ElementRing::new(ring, caps.oracle_order)?;
    let sets: Vec<ElementSet> = vs.iter().map(|v| er.ideal_set(v)).collect();
    // intersections and sums are ideals, so few distinct sets reach the predicate
    let mut memo: HashMap<ElementSet, bool> = HashMap::new();
    let mut edges = Vec::new();
    for (a, b) in pairs(vs.len()) {
        let adjacent = match kind {
            GraphKind::Sii => {
                let meet = er.intersection(&sets[a], &sets[b]);
                *memo.entry(meet).or_insert_with_key(|s| er.is_second_set(s))
            }
            GraphKind::Pis => {
                let join = er.sum(&sets[a], &sets[b]);
                *memo.entry(join).or_insert_with_key(|s| er.is_prime_set(s))
            }
            GraphKind::Gamma => !er.is_zero_set(&er.intersection(&sets[a], &sets[b])),
        };
        if adjacent {
            edges.push((a, b));
        }
    }
    Ok(edges)
}
