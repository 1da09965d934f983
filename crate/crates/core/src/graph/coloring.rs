//! Exact chromatic number for graphs on at most sixteen vertices.
//!
//! The clique number gives the lower bound and a DSATUR coloring the upper
//! bound; each intermediate `k` is decided by DSATUR-ordered backtracking
//! that only ever opens one new color at a time.

use super::{bit, bits, clique};

/// Largest graph accepted by the exact coloring search.
pub const CHROMATIC_CAP: usize = 16;

pub(super) fn chromatic_number(adj: &[u64]) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    if adj.iter().all(|&r| r == 0) {
        return 1;
    }
    let lower = clique::clique_number(adj);
    let upper = dsatur_greedy(adj);
    for k in lower..upper {
        if colorable(adj, k) {
            return k;
        }
    }
    upper
}

/// Uncolored vertex with the most distinct neighbor colors, then the most
/// uncolored neighbors, then the lowest id.
fn pick(adj: &[u64], colors: &[Option<usize>], uncolored: u64) -> usize {
    let mut best = (0, 0, usize::MAX);
    for v in bits(uncolored) {
        let seen = neighbor_colors(adj, colors, v).count_ones();
        let open = (adj[v] & uncolored).count_ones();
        if best.2 == usize::MAX || (seen, open) > (best.0, best.1) {
            best = (seen, open, v);
        }
    }
    best.2
}

fn neighbor_colors(adj: &[u64], colors: &[Option<usize>], v: usize) -> u64 {
    bits(adj[v]).filter_map(|w| colors[w]).fold(0u64, |acc, c| acc | bit(c))
}

fn dsatur_greedy(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut colors = vec![None; n];
    let mut uncolored = super::low_bits(n);
    let mut used = 0;
    while uncolored != 0 {
        let v = pick(adj, &colors, uncolored);
        let c = (!neighbor_colors(adj, &colors, v)).trailing_zeros() as usize;
        colors[v] = Some(c);
        used = used.max(c + 1);
        uncolored &= !bit(v);
    }
    used
}

fn colorable(adj: &[u64], k: usize) -> bool {
    let mut colors = vec![None; adj.len()];
    extend(adj, k, &mut colors, super::low_bits(adj.len()), 0)
}

fn extend(adj: &[u64], k: usize, colors: &mut [Option<usize>], uncolored: u64, used: usize) -> bool {
    if uncolored == 0 {
        return true;
    }
    let v = pick(adj, colors, uncolored);
    let blocked = neighbor_colors(adj, colors, v);
    for c in 0..k.min(used + 1) {
        if blocked & bit(c) != 0 {
            continue;
        }
        colors[v] = Some(c);
        if extend(adj, k, colors, uncolored & !bit(v), used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = None;
    false
}
