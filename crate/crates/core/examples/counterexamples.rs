//! Turán graphs exceeding 3n/2 + ω − 4 when 5 ≤ ω < ⌈n/2⌉.

use q1lab::verify::find_counterexamples;

fn main() -> q1lab::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(16);
    for c in find_counterexamples(n_max)? {
        println!(
            "T({:>2},{:>2}) parts {:?}: q1 = {:.4} > {:.1} by {:.4}; q1 - chi = {:.4} > {:.1}",
            c.n, c.omega, c.parts, c.q1, c.threshold, c.margin, c.q1_minus_chi, c.chi_threshold
        );
    }
    Ok(())
}
