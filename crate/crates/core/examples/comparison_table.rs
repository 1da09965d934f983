//! The clique bound next to four degree-based bounds on two graphs.
//!
//! On `T(10, 3)` the clique bound is exact; on the seven-vertex graph the Yu
//! bound wins.

use q1lab::verify::{example_table, render_table};

fn main() -> q1lab::Result<()> {
    let rows = example_table()?;
    print!("{}", render_table(&rows));
    Ok(())
}
