//! Exact minimum dominating set by branch and bound over closed neighborhoods.

use super::Graph;
use crate::{CapKind, Error, Result};

/// Hard ceiling for the bitmask representation, independent of the configured cap.
pub const MAX_DOMINATION_VERTICES: usize = 128;

type Mask = u128;

struct Search {
    closed: Vec<Mask>,
    all: Mask,
    best: Vec<usize>,
}

impl Search {
    fn lower_bound(&self, dominated: Mask) -> usize {
        let missing = (self.all & !dominated).count_ones() as usize;
        if missing == 0 {
            return 0;
        }
        let reach = self
            .closed
            .iter()
            .map(|&c| (c & !dominated).count_ones() as usize)
            .max()
            .unwrap_or(1)
            .max(1);
        missing.div_ceil(reach)
    }

    fn run(&mut self, dominated: Mask, chosen: &mut Vec<usize>) {
        if dominated == self.all {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + self.lower_bound(dominated) >= self.best.len() {
            return;
        }
        // branch on the undominated vertex with the fewest ways to be covered
        let undominated = self.all & !dominated;
        let pivot = (0..self.closed.len())
            .filter(|&v| undominated >> v & 1 == 1)
            .min_by_key(|&v| self.closed[v].count_ones())
            .expect("some vertex is undominated");
        let mut options: Vec<usize> = (0..self.closed.len())
            .filter(|&w| self.closed[pivot] >> w & 1 == 1)
            .collect();
        options.sort_by_key(|&w| std::cmp::Reverse((self.closed[w] & undominated).count_ones()));
        for w in options {
            chosen.push(w);
            self.run(dominated | self.closed[w], chosen);
            chosen.pop();
        }
    }
}

fn greedy(closed: &[Mask], all: Mask) -> Vec<usize> {
    let mut dominated: Mask = 0;
    let mut set = Vec::new();
    while dominated != all {
        let v = (0..closed.len())
            .max_by_key(|&v| ((closed[v] & !dominated).count_ones(), std::cmp::Reverse(v)))
            .expect("graph is non-empty");
        set.push(v);
        dominated |= closed[v];
    }
    set
}

pub(super) fn minimum_dominating_set(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::cap(CapKind::Domination, cap, n));
    }
    if n > MAX_DOMINATION_VERTICES {
        return Err(Error::cap(CapKind::Domination, MAX_DOMINATION_VERTICES, n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let closed: Vec<Mask> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1 << v, |m, &w| m | 1 << w))
        .collect();
    let all: Mask = if n == 128 { Mask::MAX } else { (1 << n) - 1 };
    let mut search = Search {
        best: greedy(&closed, all),
        closed,
        all,
    };
    search.run(0, &mut Vec::new());
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}
