//! Connected graphs on `n` labeled vertices in ascending edge-mask order.

use crate::error::{Error, Result};
use crate::graph::{mask_rows, pair_count, rows_connected, Graph};

use super::canon::is_canonical;

/// Largest order for labeled enumeration.
pub const LABELED_MAX: usize = 8;
/// Largest order for enumeration up to isomorphism.
pub const DEDUP_MAX: usize = 7;

pub(crate) fn check_order(n: usize, dedup: bool) -> Result<()> {
    let max = if dedup { DEDUP_MAX } else { LABELED_MAX };
    if (2..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::EnumerationCap { n, min: 2, max })
    }
}

/// Connected graph for `mask`, or `None` when the mask is disconnected (or,
/// with `dedup`, not the canonical labeling of its class).
pub(crate) fn connected_graph(n: usize, mask: u64, dedup: bool) -> Option<Graph> {
    let rows = mask_rows(n, mask);
    if !rows_connected(&rows) {
        return None;
    }
    let g = Graph::from_adjacency(rows).expect("mask rows are a simple graph");
    (!dedup || is_canonical(&g)).then_some(g)
}

pub(crate) fn mask_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// Every connected graph on `n` labeled vertices exactly once, or with
/// `dedup` one canonical representative per isomorphism class.
pub fn enumerate_connected(n: usize, dedup: bool) -> Result<impl Iterator<Item = Graph>> {
    check_order(n, dedup)?;
    Ok((0..mask_count(n)).filter_map(move |mask| connected_graph(n, mask, dedup)))
}

/// Number of connected labeled graphs on `n` vertices, by scanning masks.
pub fn count_connected_labeled(n: usize) -> Result<u64> {
    check_order(n, false)?;
    Ok((0..mask_count(n)).filter(|&mask| rows_connected(&mask_rows(n, mask))).count() as u64)
}
