//! Simple undirected graphs and the invariants used on ideal graphs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::ring::Ideal;
use crate::{Caps, Error, Result};

mod domination;
mod isomorphism;

pub use domination::MAX_DOMINATION_VERTICES;
pub use isomorphism::{find_isomorphism, verify_map_isomorphism};

/// Which ideal graph a vertex set carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Sii,
    Pis,
    Gamma,
}

impl GraphKind {
    pub const ALL: [GraphKind; 3] = [GraphKind::Sii, GraphKind::Pis, GraphKind::Gamma];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Sii => "sii",
            GraphKind::Pis => "pis",
            GraphKind::Gamma => "gamma",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sii" => Ok(GraphKind::Sii),
            "pis" => Ok(GraphKind::Pis),
            "gamma" => Ok(GraphKind::Gamma),
            other => Err(Error::domain(format!("unknown graph kind {other:?}"))),
        }
    }
}

/// A non-negative integer or infinity. Serialized as a number or `null`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Option<usize>", into = "Option<usize>")]
pub enum Extended {
    Finite(usize),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Extended::Finite(_))
    }
}

impl From<Option<usize>> for Extended {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Extended::Infinite, Extended::Finite)
    }
}

impl From<Extended> for Option<usize> {
    fn from(v: Extended) -> Self {
        v.finite()
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

/// Undirected simple graph on `0..n`, immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    matrix: Vec<FixedBitSet>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut matrix = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::domain(format!("edge ({a},{b}) outside 0..{n}")));
            }
            if a == b {
                return Err(Error::domain(format!("self-loop at {a}")));
            }
            matrix[a].insert(b);
            matrix[b].insert(a);
        }
        let neighbors: Vec<Vec<usize>> = matrix.iter().map(|row| row.ones().collect()).collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            matrix,
            neighbors,
            edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.matrix.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.matrix[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "vertex {v} not in graph of {} vertices",
                self.vertex_count()
            )))
        }
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::from([src]);
        dist[src] = Some(0);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, a: usize, b: usize) -> Result<Extended> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Ok(self.bfs(a)[b].into())
    }

    fn require_vertices(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            Err(Error::domain("graph has no vertices"))
        } else {
            Ok(())
        }
    }

    pub fn is_connected(&self) -> Result<bool> {
        self.require_vertices()?;
        Ok(self.bfs(0).iter().all(Option::is_some))
    }

    /// Largest pairwise distance; infinite when disconnected, 0 on one vertex.
    pub fn diameter(&self) -> Result<Extended> {
        self.require_vertices()?;
        let mut best = 0;
        for v in 0..self.vertex_count() {
            for d in self.bfs(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(Extended::Infinite),
                }
            }
        }
        Ok(Extended::Finite(best))
    }

    /// Length of a shortest cycle. A BFS from every root; a non-tree edge
    /// `(u, w)` closes a cycle of length at most `d(u) + d(w) + 1`, and the
    /// minimum over all roots is exact.
    pub fn girth(&self) -> Extended {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] >= b) {
                    break;
                }
                for &w in &self.neighbors[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best.into()
    }

    /// Cubic scan, used to cross-check `girth() == 3`.
    pub fn has_triangle(&self) -> bool {
        let n = self.vertex_count();
        (0..n).any(|a| {
            (a + 1..n).any(|b| {
                self.has_edge(a, b)
                    && (b + 1..n).any(|c| self.has_edge(a, c) && self.has_edge(b, c))
            })
        })
    }

    /// At least one edge, no isolated vertices, connected, every degree even.
    pub fn is_eulerian(&self) -> bool {
        self.edge_count > 0
            && self.isolated_vertices().is_empty()
            && (0..self.vertex_count()).all(|v| self.degree(v).is_multiple_of(2))
            && self.is_connected().unwrap_or(false)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn universal_vertices(&self) -> Vec<usize> {
        let n = self.vertex_count();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 0)
            .collect()
    }

    /// Degrees, non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Every vertex is in `set` or adjacent to a member. The empty set
    /// dominates nothing unless the graph is empty.
    pub fn is_dominating_set(&self, set: &[usize]) -> bool {
        if set.iter().any(|&v| v >= self.vertex_count()) {
            return false;
        }
        if set.is_empty() {
            return self.vertex_count() == 0;
        }
        let mut covered = FixedBitSet::with_capacity(self.vertex_count());
        for &v in set {
            covered.insert(v);
            covered.union_with(&self.matrix[v]);
        }
        covered.count_ones(..) == self.vertex_count()
    }

    /// Dominating, and no proper subset obtained by dropping one member dominates.
    pub fn is_minimal_dominating_set(&self, set: &[usize]) -> bool {
        self.is_dominating_set(set)
            && (0..set.len()).all(|i| {
                let rest: Vec<usize> = set
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &v)| v)
                    .collect();
                !self.is_dominating_set(&rest)
            })
    }

    /// A minimum dominating set (exact).
    pub fn minimum_dominating_set(&self, cap: usize) -> Result<Vec<usize>> {
        domination::minimum_dominating_set(self, cap)
    }

    pub fn domination_number(&self, cap: usize) -> Result<usize> {
        Ok(self.minimum_dominating_set(cap)?.len())
    }
}

/// An ideal graph: a [`Graph`] whose vertices are labeled by ideals.
///
/// Labels are in the ring's enumeration order, which is sorted, so lookups
/// use binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGraph {
    kind: GraphKind,
    labels: Vec<Ideal>,
    graph: Graph,
}

impl IdealGraph {
    pub fn new(kind: GraphKind, labels: Vec<Ideal>, graph: Graph) -> Result<Self> {
        if labels.len() != graph.vertex_count() {
            return Err(Error::domain("label count differs from vertex count"));
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("vertex labels must be unique and sorted"));
        }
        Ok(IdealGraph {
            kind,
            labels,
            graph,
        })
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn labels(&self) -> &[Ideal] {
        &self.labels
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.labels.binary_search(ideal).ok()
    }

    /// Adjacency by label; `false` when either ideal is not a vertex.
    pub fn adjacent(&self, a: &Ideal, b: &Ideal) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.graph.has_edge(i, j),
            _ => false,
        }
    }

    pub fn label(&self, v: usize) -> String {
        self.labels[v].to_string()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.graph
            .edges()
            .map(|(a, b)| (self.label(a), self.label(b)))
            .collect()
    }

    fn names(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.label(v)).collect()
    }

    pub fn invariants(&self, caps: &Caps) -> Result<InvariantReport> {
        let g = &self.graph;
        let (domination_number, domination_status) = match g.domination_number(caps.domination) {
            Ok(v) => (Some(v), DominationStatus::Computed),
            Err(e) if e.is_cap() => (None, DominationStatus::Capped),
            Err(e) => return Err(e),
        };
        Ok(InvariantReport {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            connected: g.is_connected()?,
            diameter: g.diameter()?,
            girth: g.girth(),
            eulerian: g.is_eulerian(),
            complete: g.is_complete(),
            universal_vertices: self.names(&g.universal_vertices()),
            isolated_vertices: self.names(&g.isolated_vertices()),
            degree_sequence: g.degree_sequence(),
            domination_number,
            domination_status,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationStatus {
    Computed,
    Capped,
}

/// Invariants of one ideal graph; vertices are named by ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub diameter: Extended,
    pub girth: Extended,
    pub eulerian: bool,
    pub complete: bool,
    pub universal_vertices: Vec<String>,
    pub isolated_vertices: Vec<String>,
    pub degree_sequence: Vec<usize>,
    pub domination_number: Option<usize>,
    pub domination_status: DominationStatus,
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_rejects_loops() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn distances() {
        let g = path(4);
        assert_eq!(g.distance(2, 2).unwrap(), Extended::Finite(0));
        assert_eq!(g.distance(0, 3).unwrap(), Extended::Finite(3));
        assert!(g.distance(0, 9).is_err());
        let two = Graph::from_edges(2, []).unwrap();
        assert_eq!(two.distance(0, 1).unwrap(), Extended::Infinite);
    }

    #[test]
    fn diameter_edge_cases() {
        let single = Graph::from_edges(1, []).unwrap();
        assert_eq!(single.diameter().unwrap(), Extended::Finite(0));
        assert!(single.is_connected().unwrap());
        assert!(single.is_complete());
        let empty = Graph::from_edges(0, []).unwrap();
        assert!(empty.diameter().is_err());
        assert!(empty.is_connected().is_err());
        assert_eq!(
            Graph::from_edges(2, []).unwrap().diameter().unwrap(),
            Extended::Infinite
        );
        assert_eq!(cycle(7).diameter().unwrap(), Extended::Finite(3));
    }

    #[test]
    fn girth_fixtures() {
        assert_eq!(cycle(4).girth(), Extended::Finite(4));
        assert_eq!(cycle(9).girth(), Extended::Finite(9));
        assert_eq!(complete(4).girth(), Extended::Finite(3));
        assert_eq!(path(5).girth(), Extended::Infinite);
        // star
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.girth(), Extended::Infinite);
    }

    #[test]
    fn eulerian() {
        assert!(cycle(5).is_eulerian());
        assert!(!path(2).is_eulerian());
        assert!(!Graph::from_edges(3, []).unwrap().is_eulerian());
        // two triangles sharing nothing: even degrees but disconnected
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!g.is_eulerian());
        // a triangle plus an isolated vertex
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!g.is_eulerian());
    }

    #[test]
    fn universal_and_isolated() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(g.universal_vertices(), Vec::<usize>::new());
        assert_eq!(g.isolated_vertices(), vec![3]);
        assert_eq!(g.degree_sequence(), vec![2, 1, 1, 0]);
        assert_eq!(complete(3).universal_vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn dominating_sets() {
        let g = path(5);
        assert!(g.is_dominating_set(&[1, 3]));
        assert!(g.is_dominating_set(&[1, 3, 4]));
        assert!(!g.is_minimal_dominating_set(&[1, 3, 4]));
        assert!(g.is_minimal_dominating_set(&[1, 3]));
        assert!(!g.is_dominating_set(&[]));
        assert!(!g.is_dominating_set(&[9]));
        assert_eq!(g.domination_number(40).unwrap(), 2);
        let isolated = Graph::from_edges(3, []).unwrap();
        assert_eq!(isolated.domination_number(40).unwrap(), 3);
    }

    #[test]
    fn extended_serializes_infinity_as_null() {
        assert_eq!(serde_json::to_string(&Extended::Infinite).unwrap(), "null");
        assert_eq!(serde_json::to_string(&Extended::Finite(3)).unwrap(), "3");
        let back: Extended = serde_json::from_str("null").unwrap();
        assert_eq!(back, Extended::Infinite);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..11).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..(n * 2)).prop_map(move |pairs| {
                Graph::from_edges(n, pairs.into_iter().filter(|(a, b)| a != b)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn diameter_finite_iff_connected(g in arb_graph()) {
            prop_assert_eq!(g.diameter().unwrap().is_finite(), g.is_connected().unwrap());
        }

        #[test]
        fn girth_three_iff_triangle(g in arb_graph()) {
            prop_assert_eq!(g.girth() == Extended::Finite(3), g.has_triangle());
        }

        #[test]
        fn complete_iff_edge_count(g in arb_graph()) {
            let n = g.vertex_count();
            prop_assert_eq!(g.is_complete(), g.edge_count() == n * (n - 1) / 2);
            if g.is_complete() { prop_assert!(g.is_connected().unwrap()); }
        }

        #[test]
        fn eulerian_degrees_are_even(g in arb_graph()) {
            if g.is_eulerian() {
                prop_assert!(g.degree_sequence().iter().all(|d| d % 2 == 0));
            }
        }

        #[test]
        fn minimum_dominating_set_is_minimal(g in arb_graph()) {
            let best = g.minimum_dominating_set(40).unwrap();
            prop_assert!(g.is_minimal_dominating_set(&best));
            prop_assert!(best.len() <= g.vertex_count());
        }
    }
}
