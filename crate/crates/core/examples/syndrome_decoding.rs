//! Single-error correction with the p = 61 code: every error on one codeword.
//!
//! ```bash
//! cargo run --example syndrome_decoding
//! ```

use jacobi_mds::code::{build_congruence_system, LinearCode};
use jacobi_mds::jacobi::jacobi_sum;
use jacobi_mds::{Error, FieldSpec, LogTable, Result};

fn main() -> Result<()> {
    let spec = FieldSpec::prime(61, 5)?;
    let table = LogTable::canonical(&spec, 1_000)?;
    let j = jacobi_sum(&table, 1, 1)?.value;
    let sys = build_congruence_system(&j, 61, table.root_of_unity())?;
    let code = LinearCode::from_system(&sys, 1)?;

    let w = code.encode(&[11, 4])?;
    println!("codeword {w:?}");
    let mut fixed = 0;
    for pos in 0..code.n {
        for e in 1..61 {
            let mut v = w.clone();
            v[pos] = (v[pos] + e) % 61;
            let d = code.decode_single_error(&v)?;
            assert_eq!(d.codeword, w);
            fixed += 1;
        }
    }
    println!("corrected all {fixed} single errors");

    let v = [(w[0] + 1) % 61, (w[1] + 60) % 61, w[2], w[3]];
    match code.decode_single_error(&v) {
        Ok(d) => println!("double error {v:?} miscorrected to codeword {:?}", d.codeword),
        Err(Error::BeyondCorrectionRadius { syndrome }) => {
            println!("double error {v:?} detected, syndrome {syndrome:?}")
        }
        Err(e) => return Err(e),
    }
    Ok(())
}
