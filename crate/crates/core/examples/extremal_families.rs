//! The extremal graphs and their spectral radii.

use q1lab::bounds::{lb_clique, lb_clique_closed, turan_edge_count, ub_clique, ub_multipartite};
use q1lab::families::{self, FamilySpec};
use q1lab::spectral::q1;

fn main() -> q1lab::Result<()> {
    println!("Turán graphs of order 12 (q1 increases with the number of parts):");
    for t in 2..=12 {
        let g = families::turan(12, t)?;
        println!(
            "  T(12,{t:>2}): parts {:?}, m = {:>2} (formula {:>2}), q1 = {:.4}, closed form {:.4}",
            families::turan_parts(12, t)?,
            g.m(),
            turan_edge_count(12, t),
            q1(&g)?,
            ub_multipartite(12, t)?
        );
    }

    println!("kites of order 8 attain the lower bound:");
    for w in 3..=8 {
        let g = families::kite(8, w)?;
        println!("  kite(8,{w}): q1 = {:.6}, lower bound {:.6}", q1(&g)?, lb_clique(8, w)?);
    }
    println!("  clique plus pendant, closed form for w = 4: {:.6}", lb_clique_closed(4)?);

    println!("families by descriptor:");
    for s in ["kpq:3,5", "joinpath:3,4", "cpm:8", "cpmtri:9", "multipartite:4,3,1"] {
        let spec: FamilySpec = s.parse()?;
        let g = spec.build()?;
        println!(
            "  {s:<18} n = {:>2}, omega = {}, q1 = {:.4}, clique bound {:.4}",
            g.n(),
            spec.clique_number(),
            q1(&g)?,
            ub_clique(g.n(), spec.clique_number())?
        );
    }
    Ok(())
}
