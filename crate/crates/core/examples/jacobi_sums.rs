//! Jacobi sums J(1, n) for a few fields and the checks they pass.
//!
//! ```bash
//! cargo run --example jacobi_sums
//! ```

use jacobi_mds::jacobi::{jacobi_sum, verify_conditions};
use jacobi_mds::{FieldSpec, LogTable, Result};

fn main() -> Result<()> {
    for (p, alpha, l) in [(7, 1, 3), (61, 1, 5), (11, 2, 5), (79, 1, 13)] {
        let spec = FieldSpec::new(p, alpha, l)?;
        let table = LogTable::canonical(&spec, 1_000_000)?;
        let b = table.root_of_unity();
        println!("F_{} (l = {l}), generator {}, b = {b}", spec.q(), table.generator());
        for n in 1..l - 1 {
            let j = jacobi_sum(&table, 1, n)?.value;
            let report = verify_conditions(&j, &spec, n, b)?;
            println!(
                "  J(1, {n}) = {j}   |J|^2 = {}   conditions hold: {}",
                j.abs_square().expect("rational"),
                report.passes_all()
            );
        }
    }
    Ok(())
}
