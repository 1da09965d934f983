//! Exhaustive sweep over every connected labeled graph of one order.
//!
//! cargo run --release --example exhaustive_sweeps -- 7

use std::time::Instant;

use q1lab::verify::{full_sweep, VerifyConfig};

fn main() -> q1lab::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let start = Instant::now();
    let report = full_sweep(n, &VerifyConfig::default())?;
    println!("n = {n}: {} connected graphs out of {} masks", report.connected, report.masks);
    for c in &report.checks {
        println!("  {:<8} examined {:>8}  equality {:>6}  min slack {:.3e}", c.check, c.examined, c.equality, c.min_slack.unwrap_or(f64::NAN));
        for o in &c.by_omega {
            println!("    omega {}: {:>8} graphs, {:>5} extremal (expected {})", o.omega, o.graphs, o.equality, o.expected.unwrap_or(0));
        }
    }
    if let Some(s) = &report.soundness {
        for (k, slack) in &s.min_slack {
            println!("  bound {k:<4} min slack {slack:.3e}");
        }
        println!("  incomparability witnesses: {}, pairs without witness: {:?}", s.witnesses.len(), s.missing);
    }
    println!("elapsed {:.1?}", start.elapsed());
    Ok(())
}
