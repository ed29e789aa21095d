//! The p = 61 worked example, rebuilt from gamma = 2 and checked value by value.
//!
//! ```bash
//! cargo run --example p61_walkthrough
//! ```

use jacobi_mds::cli::{verify_example, ExampleData};
use jacobi_mds::Result;

fn main() -> Result<()> {
    let expected: ExampleData = serde_json::from_str(include_str!("../data/example_p61.json"))?;
    let outcome = verify_example(&expected)?;
    for c in &outcome.checks {
        println!("{} {:<42} {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.actual);
    }
    println!("{} of {} checks match", outcome.passed, outcome.checks.len());
    Ok(())
}
