//! Codes over F_{p^2}: the matrices live in F_p, symbols in F_q.
//!
//! ```bash
//! cargo run --example extension_field
//! ```

use jacobi_mds::code::{build_congruence_system, LinearCode};
use jacobi_mds::jacobi::jacobi_sum;
use jacobi_mds::{FieldSpec, LogTable, Result};

fn main() -> Result<()> {
    let spec = FieldSpec::new(11, 2, 5)?;
    println!("F_121 = F_11[x]/({:?}), generator {}", spec.modulus().unwrap_or_default(), spec.find_primitive_element());
    let table = LogTable::canonical(&spec, 1_000)?;
    let j = jacobi_sum(&table, 1, 1)?.value;
    println!("J(1, 1) = {j}, |J|^2 = {}", j.abs_square().expect("rational"));

    let sys = build_congruence_system(&j, 11, table.root_of_unity())?;
    let code = LinearCode::from_system(&sys, 2)?;
    println!("G =\n{}", code.generator);

    let m = [spec.element(&[3, 7])?, spec.element(&[0, 1])?];
    let c = code.encode_over(&spec, &m)?;
    let mut v = c.clone();
    v[3] = spec.add(&v[3], &spec.element(&[4, 4])?)?;
    let (fixed, err) = code.decode_over(&spec, &v)?;
    let show = |xs: &[jacobi_mds::FieldElement]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    println!("sent     [{}]\nreceived [{}]\nerror    [{}]", show(&c), show(&v), show(&err));
    assert_eq!(fixed, c);
    Ok(())
}
