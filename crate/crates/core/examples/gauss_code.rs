//! Order 3: solve 4q = L^2 + 27M^2, pick the solution that matches the
//! generator, and read off the [2, 1, 2] code.
//!
//! ```bash
//! cargo run --example gauss_code -- 67
//! ```

use jacobi_mds::code::{build_congruence_system, LinearCode};
use jacobi_mds::diophantine::{select_solution, solve_gauss};
use jacobi_mds::{CycInt, FieldSpec, Result};

fn main() -> Result<()> {
    let p: u64 = std::env::args().nth(1).map_or(7, |s| s.parse().expect("a prime"));
    let spec = FieldSpec::prime(p, 3)?;
    let gamma = spec.find_primitive_element();
    let solutions = solve_gauss(p, p)?;
    for s in &solutions {
        println!("L = {:>4}, M = {:>4}", s.big_l, s.big_m);
    }
    let sel = select_solution(&solutions, &spec, &gamma)?;
    println!("gamma = {gamma}, b = {}, selected (L, M) = ({}, {})", sel.b, sel.solution.big_l, sel.solution.big_m);

    let j = CycInt::from_i64(3, &sel.a_vector)?;
    let sys = build_congruence_system(&j, p, sel.b)?;
    let code = LinearCode::from_system(&sys, 1)?;
    println!("J(1, 1) = {j}");
    println!("G = {}", code.generator);
    println!("[{}, {}, {}] code, MDS: {}", code.n, code.k, code.d, code.is_mds());
    Ok(())
}
