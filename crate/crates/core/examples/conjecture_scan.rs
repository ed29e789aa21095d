//! Scan every generator of F_p^* for p = 1 (mod l) and list the exceptions.
//!
//! ```bash
//! cargo run --release --example conjecture_scan -- 13 79 79
//! ```

use jacobi_mds::scanner::{report, scan, GeneratorPolicy, ReportFormat, ScanOptions};
use jacobi_mds::Result;

fn main() -> Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("an integer")).collect();
    let (l, lo, hi) = match args[..] {
        [l, lo, hi] => (l, lo, hi),
        _ => (13, 79, 79),
    };
    let records = scan(l, lo, hi, 1, GeneratorPolicy::All, &ScanOptions::default())?;
    let (_, summary) = report(&records, ReportFormat::Text)?;
    println!(
        "l = {l}, p in [{lo}, {hi}]: {} generators, {} mds, {} exceptions",
        summary.total, summary.mds, summary.exception
    );
    for e in &summary.exceptions {
        println!(
            "  p = {}, gamma^{} = {}: {} dependent row sets, first {:?}",
            e.p,
            e.generator_power.unwrap_or(0),
            e.generator,
            e.dependent_subsets.len(),
            e.dependent_subsets[0]
        );
    }
    Ok(())
}
