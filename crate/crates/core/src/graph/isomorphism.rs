//! Graph isomorphism: checking an explicit vertex map, and a witness-producing
//! backtracking search over color-refined candidate classes.

use std::collections::BTreeMap;

use super::Graph;
use crate::{CapKind, Error, Result};

/// Checks that `map` (vertex `v` of `g` goes to `map[v]` of `h`) is a bijection
/// preserving adjacency and non-adjacency.
pub fn verify_map_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> Result<bool> {
    let n = g.vertex_count();
    if map.len() != n || h.vertex_count() != n {
        return Err(Error::domain(format!(
            "map of length {} between graphs of {} and {} vertices",
            map.len(),
            n,
            h.vertex_count()
        )));
    }
    let mut seen = vec![false; n];
    for &w in map {
        if w >= n || std::mem::replace(&mut seen[w], true) {
            return Err(Error::domain("vertex map is not a bijection"));
        }
    }
    Ok((0..n).all(|a| (a + 1..n).all(|b| g.has_edge(a, b) == h.has_edge(map[a], map[b]))))
}

/// Stable colors from iterated neighborhood refinement on the disjoint union
/// of `g` and `h`, so color ids are comparable across the two graphs.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g, h];
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|gr| (0..gr.vertex_count()).map(|v| gr.degree(v)).collect())
        .collect();
    let mut classes = 0;
    loop {
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let signatures: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(gr, col)| {
                (0..gr.vertex_count())
                    .map(|v| {
                        let mut around: Vec<usize> =
                            gr.neighbors(v).iter().map(|&w| col[w]).collect();
                        around.sort_unstable();
                        (col[v], around)
                    })
                    .collect()
            })
            .collect();
        for sig in signatures.iter().flatten() {
            let next = palette.len();
            palette.entry(sig.clone()).or_insert(next);
        }
        colors = signatures
            .iter()
            .map(|sigs| sigs.iter().map(|s| palette[s]).collect())
            .collect();
        if palette.len() == classes {
            break;
        }
        classes = palette.len();
    }
    let h_colors = colors.pop().unwrap_or_default();
    let g_colors = colors.pop().unwrap_or_default();
    (g_colors, h_colors)
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    g_colors: Vec<usize>,
    h_colors: Vec<usize>,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn feasible(&self, v: usize, w: usize) -> bool {
        self.g_colors[v] == self.h_colors[w]
            && self.order.iter().all(|&u| match self.map[u] {
                Some(x) => self.g.has_edge(u, v) == self.h.has_edge(x, w),
                None => true,
            })
    }

    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        for w in 0..self.h.vertex_count() {
            if self.used[w] || !self.feasible(v, w) {
                continue;
            }
            self.map[v] = Some(w);
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[v] = None;
            self.used[w] = false;
        }
        false
    }
}

/// Visit order: smallest color class first, then grow through neighbors so each
/// new vertex is constrained by already-mapped ones.
fn search_order(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut class_size = BTreeMap::new();
    for &c in colors {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let mapped_neighbors = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (
                    mapped_neighbors,
                    std::cmp::Reverse(class_size[&colors[v]]),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Returns `map` with `map[v]` the image in `h` of vertex `v` of `g`, or `None`
/// when the graphs are not isomorphic.
pub fn find_isomorphism(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    let largest = n.max(h.vertex_count());
    if largest > cap {
        return Err(Error::cap(CapKind::Isomorphism, cap, largest));
    }
    if n != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    let (g_colors, h_colors) = refine(g, h);
    let mut gs = g_colors.clone();
    let mut hs = h_colors.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return Ok(None);
    }
    let order = search_order(g, &g_colors);
    let mut m = Matcher {
        g,
        h,
        g_colors,
        h_colors,
        order,
        map: vec![None; n],
        used: vec![false; n],
    };
    if m.extend(0) {
        Ok(Some(
            m.map
                .into_iter()
                .map(|w| w.expect("complete map"))
                .collect(),
        ))
    } else {
        Ok(None)
    }
}
