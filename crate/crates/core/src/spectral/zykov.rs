//! Zykov-style symmetrization driven by the Perron vector.
//!
//! One step picks the vertex `u` of largest weight `w(u) = (Q f)(u)` and
//! duplicates every non-neighbor of `u` to `u`. The result is an independent
//! set joined to `G[N(u)]`, and `q1` does not decrease. Repeating the step
//! inside the remaining `G[N(u)]` ends at a complete multipartite graph.

use serde::Serialize;

use super::{spectrum, vertex_weights};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_bits, Graph};

/// Weights within this relative distance of the maximum count as tied; the
/// lowest vertex id among them wins.
const TIE_TOL: f64 = 1e-10;

struct Step {
    graph: Graph,
    /// Independent set created by the step: `u` plus its former non-neighbors.
    part: u64,
    /// Neighbors of `u` inside the scope; the next scope.
    rest: u64,
}

/// Symmetrizes within `scope`, leaving every vertex outside it untouched.
fn symmetrize(g: &Graph, scope: u64) -> Result<Step> {
    let summary = spectrum(g)?;
    let w = vertex_weights(g, &summary.perron)?;
    let best = bits(scope).map(|v| w[v]).fold(f64::NEG_INFINITY, f64::max);
    let cutoff = best - TIE_TOL * best.abs().max(1.0);
    let u = bits(scope)
        .find(|&v| w[v] >= cutoff)
        .ok_or_else(|| Error::invalid("empty symmetrization scope"))?;
    let rest = g.neighbors(u) & scope;
    let others = scope & !rest & !bit(u);
    let mut graph = g.clone();
    for v in bits(others) {
        graph = graph.duplicate_vertex(v, u)?;
    }
    Ok(Step { graph, part: others | bit(u), rest })
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::invalid("symmetrization needs at least two vertices"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// One symmetrization step on a connected graph.
pub fn zykov_step(g: &Graph) -> Result<Graph> {
    require_connected(g)?;
    symmetrize(g, g.vertices()).map(|s| s.graph)
}

/// The step applied to `g` inside `r ∇ g`: weights come from the Perron
/// vector of the join, the maximizer is taken over `V(g)` only, and the
/// transformed `g` is returned.
pub fn zykov_step_under_join(r: &Graph, g: &Graph) -> Result<Graph> {
    let joined = r.join(g)?;
    require_connected(&joined)?;
    let scope = low_bits(g.n()) << r.n();
    symmetrize(&joined, scope)?.graph.induced(scope)
}

/// Trajectory of repeated symmetrization.
#[derive(Debug, Clone, Serialize)]
pub struct ZykovChain {
    /// Input graph followed by the graph after each step.
    #[serde(serialize_with = "serialize_graphs")]
    pub graphs: Vec<Graph>,
    /// `q1` of each entry of `graphs`.
    pub q1: Vec<f64>,
    /// Sizes of the parts of the final complete multipartite graph, in the
    /// order they were split off.
    pub parts: Vec<usize>,
}

impl ZykovChain {
    pub fn steps(&self) -> usize {
        self.graphs.len() - 1
    }

    pub fn last(&self) -> &Graph {
        self.graphs.last().expect("chain always holds the input graph")
    }
}

fn serialize_graphs<S: serde::Serializer>(graphs: &[Graph], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(graphs.iter().map(Graph::to_graph6))
}

/// Symmetrizes until the remaining scope has no edges.
pub fn zykov_chain(g: &Graph) -> Result<ZykovChain> {
    require_connected(g)?;
    let mut graphs = vec![g.clone()];
    let mut q1 = vec![spectrum(g)?.q1];
    let mut parts = Vec::new();
    let mut scope = g.vertices();
    loop {
        let current = graphs.last().expect("nonempty");
        if current.edges_within(scope) == 0 {
            if scope != 0 {
                parts.push(scope.count_ones() as usize);
            }
            break;
        }
        let step = symmetrize(current, scope)?;
        parts.push(step.part.count_ones() as usize);
        scope = step.rest;
        q1.push(spectrum(&step.graph)?.q1);
        graphs.push(step.graph);
    }
    Ok(ZykovChain { graphs, q1, parts })
}
