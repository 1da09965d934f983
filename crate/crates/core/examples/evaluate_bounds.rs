//! Every bound on one graph, as a table and as JSON.
//!
//! cargo run --example evaluate_bounds -- 'FFzno'

use q1lab::bounds::{evaluate_all, BoundKind};
use q1lab::Graph;

fn main() -> q1lab::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(s) => Graph::from_graph6(&s)?,
        None => Graph::from_edge_list(include_str!("../data/g2.txt"))?,
    };
    let report = evaluate_all(&g)?;
    print!("{}", report.render_table());

    // tightest applicable upper bound
    let best = report
        .bounds
        .iter()
        .filter(|e| !e.kind.is_lower() && e.value.is_some())
        .min_by(|a, b| a.value.partial_cmp(&b.value).unwrap())
        .unwrap();
    println!("tightest upper bound: {} ({:.4})", best.kind.label(), best.value.unwrap());
    println!("clique bound slack: {:.4}", report.get(BoundKind::Clique).and_then(|e| e.slack).unwrap_or(f64::NAN));
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
