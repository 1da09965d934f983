//! Maximum clique by branch and bound with greedy-coloring bounds.
//!
//! Candidates are colored greedily in ascending vertex order; a vertex whose
//! color number plus the current clique size cannot beat the incumbent is
//! pruned together with everything colored before it.

use super::{bit, low_bits};

pub(super) fn clique_number(adj: &[u64]) -> usize {
    maximum_clique(adj).count_ones() as usize
}

pub(super) fn maximum_clique(adj: &[u64]) -> u64 {
    if adj.is_empty() {
        return 0;
    }
    let mut search = Search { adj, best: bit(0) };
    search.expand(0, low_bits(adj.len()));
    search.best
}

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
}

impl Search<'_> {
    fn expand(&mut self, clique: u64, mut cand: u64) {
        let size = clique.count_ones();
        let (order, colors) = color_sort(self.adj, cand);
        for idx in (0..order.len()).rev() {
            if size + colors[idx] <= self.best.count_ones() {
                return;
            }
            let v = order[idx];
            let grown = clique | bit(v);
            let next = cand & self.adj[v];
            if next == 0 {
                if grown.count_ones() > self.best.count_ones() {
                    self.best = grown;
                }
            } else {
                self.expand(grown, next);
            }
            cand &= !bit(v);
        }
    }
}

/// Greedy sequential coloring of `cand`: returns the vertices grouped by
/// color class and, for each, its 1-based color.
fn color_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut open = uncolored;
        while open != 0 {
            let v = open.trailing_zeros() as usize;
            open &= !bit(v) & !adj[v];
            uncolored &= !bit(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

#[cfg(test)]
pub(super) fn is_clique(adj: &[u64], set: u64) -> bool {
    super::bits(set).all(|v| adj[v] & set == set & !bit(v))
}
