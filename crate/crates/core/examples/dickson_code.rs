//! Order 5: the four Dickson solutions, the selected one, and the [4, 2, 3]
//! code with its determinant identities.
//!
//! ```bash
//! cargo run --example dickson_code -- 101
//! ```

use jacobi_mds::code::{build_congruence_system, determinant_suite, LinearCode};
use jacobi_mds::diophantine::{select_solution, solve_dickson};
use jacobi_mds::{CycInt, FieldSpec, Result};

fn main() -> Result<()> {
    let p: u64 = std::env::args().nth(1).map_or(61, |s| s.parse().expect("a prime"));
    let spec = FieldSpec::prime(p, 5)?;
    let gamma = spec.find_primitive_element();
    let solutions = solve_dickson(p, p)?;
    for s in &solutions {
        println!("(X, U, V, W) = ({}, {}, {}, {})  A = {}, B = {}", s.x, s.u, s.v, s.w, s.a, s.b);
    }
    let sel = select_solution(&solutions, &spec, &gamma)?;
    println!("b = {}, a = {:?}, ratio relation {:?}", sel.b, sel.a_vector, sel.orientation.relation);

    let a = &sel.a_vector;
    let suite = determinant_suite([a[0], a[1], a[2], a[3]], p, sel.b)?;
    println!("D = {:?}\nN = {:?}", suite.d, suite.n);
    println!("(A1, A2, A3, A4) = {:?}", suite.syndrome_coefficients()?);

    let sys = build_congruence_system(&CycInt::from_i64(5, a)?, p, sel.b)?;
    let code = LinearCode::from_system(&sys, 1)?;
    println!("G =\n{}\nH =\n{}", code.generator, code.parity_check);
    Ok(())
}
