//! graph6 and edge-list round trips, canonical forms and automorphisms.

use q1lab::verify::{automorphism_count, canonical_mask, enumerate_connected};
use q1lab::{families, Graph};

fn main() -> q1lab::Result<()> {
    let g = families::kite(7, 4)?;
    let g6 = g.to_graph6();
    println!("kite(7,4) as graph6: {g6}");
    assert_eq!(Graph::from_graph6(&g6)?, g);
    print!("as an edge list:\n{}", g.to_edge_list());
    println!("automorphisms: {}, canonical mask {:#x}", automorphism_count(&g), canonical_mask(&g));

    println!("connected graphs on 4 vertices up to isomorphism:");
    for h in enumerate_connected(4, true)? {
        println!("  {h}  m = {}", h.m());
    }
    Ok(())
}
