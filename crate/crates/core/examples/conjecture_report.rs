//! Where `q1 ≤ 3n/2 + ω − 4` holds (family level), and `q1 − ω` on the
//! conjectured extremal graphs.

use q1lab::verify::{conjecture1_extremal_report, conjecture_region_family};

fn main() -> q1lab::Result<()> {
    for n in [8, 10, 12, 16] {
        let eq: Vec<usize> = conjecture_region_family(n)?.iter().filter(|r| r.equality).map(|r| r.omega).collect();
        println!("n = {n:>2}: region holds, equality at omega = {eq:?}");
    }
    for n in 4..=12 {
        for r in conjecture1_extremal_report(n)? {
            println!(
                "n = {:>2} {:<12} connected = {:<5} q1 - omega = {:.4} vs 3n/2 - 4 = {:.1}",
                r.n, r.graph, r.connected, r.q1_minus_omega, r.threshold
            );
        }
    }
    Ok(())
}
