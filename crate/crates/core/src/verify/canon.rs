//! Canonical labeling of small graphs by lexicographically minimal
//! upper-triangle edge string.
//!
//! The edge string lists pairs in the order (0,1), (0,2), (1,2), (0,3), ...
//! Placing vertices position by position fixes that string left to right,
//! so a partial labeling whose prefix already exceeds the incumbent is cut.

use crate::graph::{bit, low_bits, pair_count, Graph};

/// Largest order accepted by the canonical search (the string fits in 64 bits).
pub const CANON_MAX: usize = 11;

enum Goal {
    /// Find the minimum.
    Minimize,
    /// Stop at the first string below the incumbent.
    Refute,
    /// Count labelings reproducing the incumbent exactly.
    CountEqual,
}

struct Search<'a> {
    adj: &'a [u64],
    pairs: usize,
    goal: Goal,
    /// Best key so far, string read most-significant-first.
    best: u64,
    placed: Vec<usize>,
    refuted: bool,
    equal: u64,
}

impl Search<'_> {
    fn run(&mut self, used: u64, key: u64, len: usize) {
        let pos = self.placed.len();
        let n = self.adj.len();
        if pos == n {
            match self.goal {
                Goal::Minimize => self.best = self.best.min(key),
                Goal::CountEqual => self.equal += (key == self.best) as u64,
                Goal::Refute => {}
            }
            return;
        }
        let next_len = len + pos;
        let rem = self.pairs - next_len;
        for v in 0..n {
            if used & bit(v) != 0 {
                continue;
            }
            let row = self.adj[v];
            let chunk = self.placed.iter().fold(0u64, |acc, &w| (acc << 1) | (row >> w & 1));
            let next = (key << pos) | chunk;
            let bound = self.best >> rem;
            if next > bound {
                continue;
            }
            if next < bound {
                match self.goal {
                    Goal::Refute => {
                        self.refuted = true;
                        return;
                    }
                    Goal::CountEqual => continue,
                    // every completion of this prefix beats the incumbent
                    Goal::Minimize => self.best = (next << rem) | low_bits(rem),
                }
            }
            self.placed.push(v);
            self.run(used | bit(v), next, next_len);
            self.placed.pop();
            if self.refuted {
                return;
            }
        }
    }
}

fn identity_key(g: &Graph) -> u64 {
    let mut key = 0u64;
    for j in 1..g.n() {
        for i in 0..j {
            key = (key << 1) | g.has_edge(i, j) as u64;
        }
    }
    key
}

fn search(g: &Graph, goal: Goal) -> Search<'_> {
    assert!(g.n() <= CANON_MAX, "canonical search supports at most {CANON_MAX} vertices");
    let mut s = Search {
        adj: g.rows(),
        pairs: pair_count(g.n()),
        goal,
        best: identity_key(g),
        placed: Vec::with_capacity(g.n()),
        refuted: false,
        equal: 0,
    };
    s.run(0, 0, 0);
    s
}

/// Edge mask of the canonical relabeling (bit `k` is the `k`-th pair).
pub fn canonical_mask(g: &Graph) -> u64 {
    let key = search(g, Goal::Minimize).best;
    let pairs = pair_count(g.n());
    (0..pairs).filter(|&k| key >> (pairs - 1 - k) & 1 == 1).fold(0u64, |m, k| m | bit(k))
}

/// `true` when the labeling of `g` is already canonical.
pub fn is_canonical(g: &Graph) -> bool {
    !search(g, Goal::Refute).refuted
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_mask(a) == canonical_mask(b)
}

/// Order of the automorphism group.
pub fn automorphism_count(g: &Graph) -> u64 {
    search(g, Goal::CountEqual).equal
}

/// Number of distinct labelings of `g`: `n! / |Aut(g)|`.
pub fn labeled_copies(g: &Graph) -> u64 {
    (1..=g.n() as u64).product::<u64>() / automorphism_count(g)
}
