//! Side-by-side comparison of the clique bound with four degree-based
//! bounds on two graphs: `T(10, 3)`, where the clique bound is exact, and a
//! seven-vertex graph where the Yu bound is sharper.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bounds::{evaluate_all, BoundKind};
use crate::error::Result;
use crate::families;
use crate::graph::Graph;

/// Seven vertices, 15 edges: `{0,1,2} × {3,4,5,6}` plus `{6,3}, {6,4},
/// {5,4}`, i.e. three independent vertices joined to the path 5-4-6-3.
pub fn seven_vertex_example() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for a in 0..3 {
        for b in 3..7 {
            edges.push((a, b));
        }
    }
    edges.extend([(6, 3), (6, 4), (5, 4)]);
    Graph::from_edges(7, &edges).expect("valid edge list")
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub name: String,
    pub graph6: String,
    pub q1: f64,
    /// Values in [`BoundKind::COMPARED`] order.
    pub bounds: Vec<f64>,
}

pub fn example_table() -> Result<Vec<TableRow>> {
    [("T(10,3)".to_string(), families::turan(10, 3)?), ("G7".to_string(), seven_vertex_example())]
        .into_iter()
        .map(|(name, g)| {
            let r = evaluate_all(&g)?;
            let bounds = BoundKind::COMPARED.iter().map(|&k| r.value(k).expect("connected graph")).collect();
            Ok(TableRow { name, graph6: r.id, q1: r.q1, bounds })
        })
        .collect()
}

/// Fixed-width text at four decimals.
pub fn render_table(rows: &[TableRow]) -> String {
    let mut out = format!("{:<8} {:>8}", "graph", "q1");
    for k in BoundKind::COMPARED {
        let _ = write!(out, " {:>8}", k.key());
    }
    out.push('\n');
    for row in rows {
        let _ = write!(out, "{:<8} {:>8.4}", row.name, row.q1);
        for v in &row.bounds {
            let _ = write!(out, " {v:>8.4}");
        }
        out.push('\n');
    }
    out
}

/// CSV with header `graph,q1,b5,b13,b14,b15,b16`.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("graph,q1");
    for k in BoundKind::COMPARED {
        let _ = write!(out, ",{}", k.key());
    }
    out.push('\n');
    for row in rows {
        let _ = write!(out, "{},{:.4}", row.name, row.q1);
        for v in &row.bounds {
            let _ = write!(out, ",{v:.4}");
        }
        out.push('\n');
    }
    out
}
