//! Perron-guided symmetrization: every step keeps the clique number and
//! does not decrease q1, ending at a complete multipartite graph.

use q1lab::families;
use q1lab::spectral::{zykov_chain, zykov_step};

fn main() -> q1lab::Result<()> {
    let g = families::kite(8, 3)?;
    let chain = zykov_chain(&g)?;
    for (i, (h, q)) in chain.graphs.iter().zip(&chain.q1).enumerate() {
        println!("step {i}: {:<10} omega = {} q1 = {q:.4}", h.to_graph6(), h.clique_number());
    }
    println!("final parts {:?} -> {:?}", chain.parts, chain.last().multipartite_parts());

    let p5 = families::path(5)?;
    println!("one step on P5: {} -> {}", p5, zykov_step(&p5)?);
    Ok(())
}
