//! Seeded property suites, shared by the `properties` and `acceptance` targets.

#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use jacobi_mds::arith::{gcd, inv_mod, mul_mod, pow_mod, prime_factors};
use jacobi_mds::code::congruence::{build_congruence_system, check_row_subsets};
use jacobi_mds::code::determinants::determinant_suite;
use jacobi_mds::code::linear::{is_mds, is_mds_parity, LinearCode};
use jacobi_mds::cyclotomic::index_permutation;
use jacobi_mds::diophantine::{
    a_to_dickson, a_to_gauss, dickson_to_a, gauss_to_a, select_solution, solve_dickson, solve_gauss,
};
use jacobi_mds::jacobi::{conjugate_solutions, jacobi_sum, verify_conditions};
use jacobi_mds::linalg::ModMatrix;
use jacobi_mds::scanner::{scan, GeneratorPolicy, ScanOptions, ScanRecord, Status};
use jacobi_mds::{CycInt, Error, FieldSpec, LogTable};

use crate::common;

pub const CASES: u32 = 1000;

/// A runner whose seed is a fixed function of the property name.
pub fn runner(name: &str) -> TestRunner {
    let mut seed = [0u8; 32];
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for (i, byte) in name.bytes().cycle().take(64).enumerate() {
        h = (h ^ byte as u64).wrapping_mul(0x0100_0000_01b3);
        seed[i % 32] ^= (h >> 24) as u8;
    }
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &seed))
}

fn check<S>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S: Strategy,
    S::Value: std::fmt::Debug,
{
    runner(name).run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn lib<T>(r: jacobi_mds::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

/// `(p, alpha, l)` with small `q`.
const FIELDS: &[(u64, u32, u64)] = &[
    (7, 1, 3),
    (13, 1, 3),
    (11, 1, 5),
    (31, 1, 5),
    (61, 1, 5),
    (29, 1, 7),
    (7, 2, 3),
    (13, 2, 3),
    (7, 3, 3),
    (11, 2, 5),
    (11, 3, 5),
    (31, 2, 5),
    (23, 1, 11),
    (79, 1, 13),
];

fn field_strategy() -> impl Strategy<Value = (u64, u32, u64)> {
    prop::sample::select(FIELDS.to_vec())
}

thread_local! {
    static TABLES: RefCell<HashMap<(u64, u32, u64, u64), LogTable>> = RefCell::new(HashMap::new());
    static SCANS: RefCell<HashMap<(u64, u64), Vec<ScanRecord>>> = RefCell::new(HashMap::new());
}

/// Log table for `gamma^t`, `gamma` canonical; cached across cases.
fn table(p: u64, alpha: u32, l: u64, t: u64) -> LogTable {
    TABLES.with(|c| {
        c.borrow_mut()
            .entry((p, alpha, l, t))
            .or_insert_with(|| {
                let spec = FieldSpec::new(p, alpha, l).unwrap();
                let canonical = LogTable::canonical(&spec, 1 << 22).unwrap();
                let g = spec.pow(canonical.generator(), t).unwrap();
                LogTable::build(&spec, &g, 1 << 22).unwrap()
            })
            .clone()
    })
}

/// A generator exponent coprime to `q - 1` derived from a raw draw.
fn unit_exponent(q: u64, raw: u64) -> u64 {
    let mut t = 1 + raw % (q - 2).max(1);
    while gcd(t, q - 1) != 1 {
        t = t % (q - 2) + 1;
    }
    t
}

fn primes(l: u64, below: u64) -> Vec<u64> {
    common::primes_one_mod(l, below)
}

// ---------------------------------------------------------------- finite field

pub fn field_nonzero_power() -> Result<(), String> {
    check("field_nonzero_power", (field_strategy(), any::<u64>()), |((p, alpha, l), raw)| {
        let spec = lib(FieldSpec::new(p, alpha, l))?;
        let q = spec.q();
        let x = spec.decode(1 + raw % (q - 1));
        prop_assert_eq!(lib(spec.pow(&x, q - 1))?, spec.one());
        Ok(())
    })
}

pub fn field_generator_order() -> Result<(), String> {
    check("field_generator_order", (field_strategy(), any::<u64>()), |((p, alpha, l), raw)| {
        let spec = lib(FieldSpec::new(p, alpha, l))?;
        let q = spec.q();
        let gamma = spec.find_primitive_element();
        let g = lib(spec.pow(&gamma, unit_exponent(q, raw)))?;
        for r in prime_factors(q - 1) {
            prop_assert_ne!(lib(spec.pow(&g, (q - 1) / r))?, spec.one());
        }
        prop_assert!(lib(spec.is_generator(&g))?);
        // a non-unit exponent never generates
        let h = lib(spec.pow(&gamma, prime_factors(q - 1)[0]))?;
        prop_assert!(!lib(spec.is_generator(&h))?);
        Ok(())
    })
}

pub fn field_root_of_unity() -> Result<(), String> {
    check("field_root_of_unity", (field_strategy(), any::<u64>()), |((p, alpha, l), raw)| {
        let spec = lib(FieldSpec::new(p, alpha, l))?;
        let g = lib(spec.pow(&spec.find_primitive_element(), unit_exponent(spec.q(), raw)))?;
        let b = lib(spec.root_of_unity(&g))?;
        prop_assert_eq!(pow_mod(b, l, p), 1);
        prop_assert_ne!(b, 1);
        Ok(())
    })
}

pub fn field_character_classes() -> Result<(), String> {
    check("field_character_classes", (field_strategy(), any::<u64>()), |((p, alpha, l), raw)| {
        let q = p.pow(alpha);
        let t = table(p, alpha, l, unit_exponent(q, raw % 4));
        let mut counts = vec![0u64; l as usize];
        for code in 1..q {
            let x = t.spec().decode(code);
            counts[lib(t.character_exponent(l, &x))? as usize] += 1;
        }
        prop_assert!(counts.iter().all(|&c| c == (q - 1) / l), "{:?}", counts);
        Ok(())
    })
}

pub fn field_axioms() -> Result<(), String> {
    let s = (field_strategy(), any::<u64>(), any::<u64>(), any::<u64>());
    check("field_axioms", s, |((p, alpha, l), ra, rb, rc)| {
        let spec = lib(FieldSpec::new(p, alpha, l))?;
        let oracle = common::Field::from_spec(&spec);
        let q = spec.q();
        let (a, b, c) = (spec.decode(ra % q), spec.decode(rb % q), spec.decode(rc % q));
        let lhs = lib(spec.mul(&lib(spec.add(&a, &b))?, &c))?;
        let rhs = lib(spec.add(&lib(spec.mul(&a, &c))?, &lib(spec.mul(&b, &c))?))?;
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(spec.encode(&lib(spec.mul(&a, &b))?), oracle.mul(ra % q, rb % q));
        if !a.is_zero() {
            prop_assert_eq!(lib(spec.mul(&a, &lib(spec.inv(&a))?))?, spec.one());
            prop_assert_eq!(lib(spec.div(&lib(spec.mul(&b, &a))?, &a))?, b.clone());
        }
        prop_assert_eq!(lib(spec.add(&b, &lib(spec.neg(&b))?))?, spec.zero());
        Ok(())
    })
}

// ---------------------------------------------------------------- cyclotomic

fn cyc_strategy() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>)> {
    prop::sample::select(vec![3usize, 5, 7, 11, 13]).prop_flat_map(|l| {
        (
            Just(l),
            prop::collection::vec(-1000i64..1000, l),
            prop::collection::vec(-1000i64..1000, l),
        )
    })
}

pub fn cyclotomic_normalize() -> Result<(), String> {
    check("cyclotomic_normalize", cyc_strategy(), |(l, raw, _)| {
        let x = lib(CycInt::normalize_i64(l, &raw))?;
        let again = lib(CycInt::normalize(l, &x.to_full()))?;
        prop_assert_eq!(&again, &x);
        let theta = 2.0 * std::f64::consts::PI / l as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (k, &c) in raw.iter().enumerate() {
            re += c as f64 * (theta * k as f64).cos();
            im += c as f64 * (theta * k as f64).sin();
        }
        let (xr, xi) = x.to_complex();
        prop_assert!((re - xr).abs() < 1e-9 * (1.0 + re.abs()) && (im - xi).abs() < 1e-9 * (1.0 + im.abs()));
        Ok(())
    })
}

pub fn cyclotomic_conjugation_is_automorphism() -> Result<(), String> {
    check("cyclotomic_conjugation_is_automorphism", (cyc_strategy(), 1usize..13), |((l, ra, rb), i)| {
        let i = i % (l - 1) + 1;
        let x = lib(CycInt::normalize_i64(l, &ra))?;
        let y = lib(CycInt::normalize_i64(l, &rb))?;
        let s = |z: &CycInt| z.conjugate(i).unwrap();
        prop_assert_eq!(s(&(&x * &y)), &s(&x) * &s(&y));
        prop_assert_eq!(s(&(&x + &y)), &s(&x) + &s(&y));
        let xy: Vec<i128> = common::cyc_mul(&raw128(&ra), &raw128(&rb));
        let oracle = lib(CycInt::normalize(l, &xy.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()))?;
        prop_assert_eq!(&x * &y, oracle);
        Ok(())
    })
}

fn raw128(v: &[i64]) -> Vec<i128> {
    v.iter().map(|&c| c as i128).collect()
}

pub fn cyclotomic_norm_is_galois_invariant() -> Result<(), String> {
    check("cyclotomic_norm_is_galois_invariant", (cyc_strategy(), 1usize..13), |((l, ra, _), i)| {
        let i = i % (l - 1) + 1;
        let x = lib(CycInt::normalize_i64(l, &ra))?;
        let y = lib(x.conjugate(i))?;
        // x * bar(x) is real but rational only for special x; compare the full product too
        prop_assert_eq!(y.abs_square(), x.abs_square());
        prop_assert_eq!(lib((&x * &x.bar()).conjugate(i))?, &y * &y.bar());
        Ok(())
    })
}

pub fn cyclotomic_l_is_lambda_power() -> Result<(), String> {
    let s = (prop::sample::select(vec![3usize, 5, 7, 11, 13]), 1i64..500);
    check("cyclotomic_l_is_lambda_power", s, |(l, k)| {
        let k = if k % l as i64 == 0 { k + 1 } else { k };
        let x = CycInt::from_integer(l, l as i64 * k);
        let mut y = x.clone();
        for _ in 0..l - 1 {
            y = lib(y.divide_by_lambda())?;
        }
        prop_assert!(x.divisible_by_lambda_power(l as u32 - 1));
        prop_assert!(!x.divisible_by_lambda_power(l as u32));
        prop_assert!(y.divide_by_lambda().is_err(), "quotient must be prime to lambda");
        let lambda = &CycInt::one(l) - &CycInt::zeta_pow(l, 1);
        let mut back = y;
        for _ in 0..l - 1 {
            back = &back * &lambda;
        }
        prop_assert_eq!(back, x);
        Ok(())
    })
}

// ---------------------------------------------------------------- jacobi

fn prime_gen_strategy(ls: Vec<u64>, below: u64) -> impl Strategy<Value = (u64, u64, u64)> {
    prop::sample::select(ls).prop_flat_map(move |l| (Just(l), prop::sample::select(primes(l, below)), any::<u64>()))
}

pub fn jacobi_norm_and_congruence() -> Result<(), String> {
    check("jacobi_norm_and_congruence", prime_gen_strategy(vec![3, 5, 7, 11, 13], 600), |(l, p, raw)| {
        let t = table(p, 1, l, unit_exponent(p, raw));
        let j = lib(jacobi_sum(&t, 1, 1))?.value;
        prop_assert_eq!(j.abs_square(), Some(BigInt::from(p)));
        let shifted = &j + &CycInt::one(l as usize);
        prop_assert!(shifted.divisible_by_lambda_power(2));
        prop_assert!(common::divisible_by_lambda_sq(
            &shifted.to_full().iter().map(|c| c.try_into().unwrap()).collect::<Vec<i128>>()
        ));
        Ok(())
    })
}

pub fn jacobi_matches_oracle() -> Result<(), String> {
    let s = (field_strategy(), any::<u64>(), 1u64..12, 1u64..12);
    check("jacobi_matches_oracle", s, |((p, alpha, l), raw, i, j)| {
        let q = p.pow(alpha);
        let t = table(p, alpha, l, unit_exponent(q, raw % 6));
        let (i, j) = (i % (l - 1) + 1, j % (l - 1) + 1);
        let sum = lib(jacobi_sum(&t, i, j))?.value;
        prop_assert_eq!(sum.coeffs_i64().unwrap(), common::jacobi_for(&t, i, j));
        Ok(())
    })
}

pub fn jacobi_solution_count() -> Result<(), String> {
    check("jacobi_solution_count", prime_gen_strategy(vec![3, 5, 7], 200), |(l, p, _)| {
        let spec = lib(FieldSpec::prime(p, l))?;
        let base = lib(jacobi_sum(&table(p, 1, l, 1), 1, 1))?.value.coeffs_i64().unwrap();
        let mut seen = BTreeSet::new();
        for t in jacobi_mds::field::generator_powers(p) {
            let tab = table(p, 1, l, t);
            let j = lib(jacobi_sum(&tab, 1, 1))?.value;
            let report = lib(verify_conditions(&j, &spec, 1, tab.root_of_unity()))?;
            prop_assert!(report.passes_all());
            seen.insert(j.coeffs_i64().unwrap());
        }
        let orbit: BTreeSet<Vec<i64>> = lib(conjugate_solutions(&base))?.into_iter().collect();
        prop_assert_eq!(orbit.len(), l as usize - 1);
        prop_assert_eq!(seen, orbit);
        Ok(())
    })
}

pub fn jacobi_orientation_is_unique() -> Result<(), String> {
    check("jacobi_orientation_is_unique", prime_gen_strategy(vec![3, 5, 7, 11, 13], 800), |(l, p, raw)| {
        let spec = lib(FieldSpec::prime(p, l))?;
        let tab = table(p, 1, l, unit_exponent(p, raw));
        let b = tab.root_of_unity();
        let j = lib(jacobi_sum(&tab, 1, 1))?.value;
        let mut passing = 0;
        for s in 1..l as usize {
            let c = lib(j.conjugate(s))?;
            let r = lib(verify_conditions(&c, &spec, 1, b))?;
            prop_assert!(r.passes_arithmetic());
            if r.orientation {
                passing += 1;
                prop_assert_eq!(&c, &j);
            }
        }
        prop_assert_eq!(passing, 1);
        Ok(())
    })
}

pub fn jacobi_generator_covariance() -> Result<(), String> {
    check("jacobi_generator_covariance", prime_gen_strategy(vec![3, 5, 7, 11, 13], 1000), |(l, p, raw)| {
        let t = unit_exponent(p, raw);
        let j1 = lib(jacobi_sum(&table(p, 1, l, 1), 1, 1))?.value;
        let jt = lib(jacobi_sum(&table(p, 1, l, t), 1, 1))?.value;
        let s = inv_mod(t, p - 1).unwrap() % l;
        prop_assert_eq!(lib(j1.conjugate(s as usize))?, jt);
        Ok(())
    })
}

// ---------------------------------------------------------------- diophantine

pub fn gauss_pairs() -> Result<(), String> {
    check("gauss_pairs", prop::sample::select(primes(3, 1000)), |p| {
        let sols = lib(solve_gauss(p, p))?;
        prop_assert_eq!(sols.len(), 2);
        prop_assert_eq!(sols[0].big_l, sols[1].big_l);
        prop_assert_eq!(sols[0].big_m, -sols[1].big_m);
        let a0 = lib(gauss_to_a(&sols[0]))?;
        let a1 = lib(gauss_to_a(&sols[1]))?;
        prop_assert_eq!(a0, common::gauss_a(sols[0].big_l, sols[0].big_m));
        prop_assert!(lib(conjugate_solutions(&a0))?.contains(&a1.to_vec()));
        prop_assert_eq!(lib(a_to_gauss(a0, p, p))?, sols[0]);
        Ok(())
    })
}

pub fn dickson_orbit() -> Result<(), String> {
    check("dickson_orbit", (prop::sample::select(primes(5, 1000)), any::<u64>()), |(p, raw)| {
        let sols = lib(solve_dickson(p, p))?;
        prop_assert_eq!(sols.len(), 4);
        let images: Vec<Vec<i64>> = sols.iter().map(|s| dickson_to_a(s).unwrap().to_vec()).collect();
        let orbit: BTreeSet<Vec<i64>> = lib(conjugate_solutions(&images[0]))?.into_iter().collect();
        prop_assert_eq!(images.iter().cloned().collect::<BTreeSet<_>>(), orbit);
        for (s, a) in sols.iter().zip(&images) {
            prop_assert_eq!(a.clone(), common::dickson_a(s.x, s.u, s.v, s.w).to_vec());
            prop_assert_eq!(&lib(a_to_dickson([a[0], a[1], a[2], a[3]], p, p))?, s);
        }
        let spec = lib(FieldSpec::prime(p, 5))?;
        let tab = table(p, 1, 5, unit_exponent(p, raw));
        let b = tab.root_of_unity();
        let passing = images
            .iter()
            .filter(|a| verify_conditions(&CycInt::from_i64(5, a).unwrap(), &spec, 1, b).unwrap().passes_all())
            .count();
        prop_assert_eq!(passing, 1);
        Ok(())
    })
}

pub fn diophantine_oracle_equivalence() -> Result<(), String> {
    let s = (prop::sample::select(vec![3u64, 5]), any::<u64>(), any::<u64>())
        .prop_flat_map(|(l, a, b)| (Just(l), prop::sample::select(primes(l, 1000)), Just(a ^ b)));
    check("diophantine_oracle_equivalence", s, |(l, p, raw)| {
        let spec = lib(FieldSpec::prime(p, l))?;
        let tab = table(p, 1, l, unit_exponent(p, raw));
        let j = lib(jacobi_sum(&tab, 1, 1))?.value.coeffs_i64().unwrap();
        let a = if l == 3 {
            lib(select_solution(&lib(solve_gauss(p, p))?, &spec, tab.generator()))?.a_vector
        } else {
            lib(select_solution(&lib(solve_dickson(p, p))?, &spec, tab.generator()))?.a_vector
        };
        prop_assert_eq!(a, j);
        Ok(())
    })
}

pub fn dickson_nonvanishing() -> Result<(), String> {
    let qs: Vec<(u64, u64)> = primes(5, 1000)
        .into_iter()
        .map(|p| (p, p))
        .chain(primes(5, 100).into_iter().map(|p| (p * p, p)))
        .collect();
    check("dickson_nonvanishing", prop::sample::select(qs), |(q, p)| {
        for s in lib(solve_dickson(q, p))? {
            let (x, u, v, w) = (s.x as i128, s.u as i128, s.v as i128, s.w as i128);
            let t = u * u + v * v + 5 * w * w;
            prop_assert_eq!(16 * q as i128, x * x - 125 * w * w + 50 * t);
            prop_assert_ne!(common::md(t, p), 0);
        }
        Ok(())
    })
}

// ---------------------------------------------------------------- code builder

fn code_for(l: u64, p: u64, t: u64) -> Result<(CycInt, u64, jacobi_mds::code::CongruenceSystem), TestCaseError> {
    let tab = table(p, 1, l, t);
    let j = lib(jacobi_sum(&tab, 1, 1))?.value;
    let b = tab.root_of_unity();
    let sys = lib(build_congruence_system(&j, p, b))?;
    Ok((j, b, sys))
}

pub fn code_round_trip() -> Result<(), String> {
    let s = (prop::sample::select(primes(5, 1000)), any::<u64>(), any::<[u64; 2]>(), 0usize..4, any::<u64>());
    check("code_round_trip", s, |(p, raw, m, pos, mag)| {
        let (_, _, sys) = code_for(5, p, unit_exponent(p, raw % 8))?;
        let code = lib(LinearCode::from_system(&sys, 1))?;
        let m = [m[0] % p, m[1] % p];
        let c = lib(code.encode(&m))?;
        let e = 1 + mag % (p - 1);
        let mut v = c.clone();
        v[pos] = (v[pos] + e) % p;
        let d = lib(code.decode_single_error(&v))?;
        prop_assert_eq!(&d.codeword, &c);
        prop_assert_eq!(d.message, m.to_vec());
        prop_assert_eq!(d.location, Some((pos, e)));
        Ok(())
    })
}

pub fn code_mds_consistency() -> Result<(), String> {
    let s = (prop::sample::select(vec![5u64, 7, 11, 13, 31]), prop::collection::vec(any::<u64>(), 8));
    check("code_mds_consistency", s, |(p, raw)| {
        let rows = vec![raw[..4].iter().map(|x| x % p).collect(), raw[4..].iter().map(|x| x % p).collect()];
        let g = lib(ModMatrix::new(p, rows.clone()))?;
        match is_mds(&g) {
            Err(Error::RankDeficient { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
            Ok(report) => {
                let h = g.null_space();
                prop_assert_eq!(h.nrows(), 2);
                prop_assert_eq!(is_mds_parity(&h), report.mds);
                prop_assert_eq!(common::brute_min_distance(&rows, p) == 3, report.mds);
                prop_assert_eq!(report.distance.map(|d| d.distance), Some(common::brute_min_distance(&rows, p)));
            }
        }
        Ok(())
    })
}

pub fn code_mds_consistency_jacobi() -> Result<(), String> {
    let s = (prop::sample::select(primes(5, 62)), any::<u64>());
    check("code_mds_consistency_jacobi", s, |(p, raw)| {
        let (_, _, sys) = code_for(5, p, unit_exponent(p, raw))?;
        let g = sys.d.transpose();
        let report = lib(is_mds(&g))?;
        let code = lib(LinearCode::from_generator(g.clone(), 1))?;
        prop_assert!(report.mds);
        prop_assert!(is_mds_parity(&code.parity_check));
        prop_assert_eq!(common::brute_min_distance(g.rows(), p), 3);
        Ok(())
    })
}

pub fn code_order_three_rows() -> Result<(), String> {
    check("code_order_three_rows", (prop::sample::select(primes(3, 1000)), any::<u64>()), |(p, raw)| {
        let (j, _, sys) = code_for(3, p, unit_exponent(p, raw))?;
        let a = j.coeffs_i64().unwrap();
        let dt = sys.d.transpose();
        prop_assert_eq!(dt.rows()[0].clone(), vec![common::md(a[1] as i128, p), common::md(a[0] as i128, p)]);
        prop_assert!(dt.rows()[0].iter().all(|&x| x != 0));
        // [coefficient | constant] rows are proportional
        let (d, r) = (&sys.d, &sys.rhs);
        prop_assert_eq!(mul_mod(d.get(0, 0), r[1], p), mul_mod(d.get(1, 0), r[0], p));
        Ok(())
    })
}

pub fn code_determinant_identities() -> Result<(), String> {
    check("code_determinant_identities", (prop::sample::select(primes(5, 1000)), 1usize..5), |(p, i)| {
        let (j, b, _) = code_for(5, p, 1)?;
        let a = j.coeffs_i64().unwrap();
        // (a_i, a_2i, a_3i, a_4i) is the sum for gamma^(i^-1), paired with b^i
        let c = index_permutation(&a, i);
        let bi = pow_mod(b, i as u64, p);
        let suite = lib(determinant_suite([c[0], c[1], c[2], c[3]], p, bi))?;
        let rows = common::order5_rows([c[0], c[1], c[2], c[3]]);
        let pairs = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)];
        for (k, &(r, s)) in pairs.iter().enumerate() {
            let (x, y) = (rows[r], rows[s]);
            let d = common::md(common::det2(x[0], x[1], y[0], y[1]), p);
            let n = common::md(common::det2(-x[2], x[1], -y[2], y[1]), p);
            prop_assert_eq!(suite.d[k], d);
            prop_assert_eq!(suite.n[k], n);
            prop_assert_eq!(mul_mod(d, bi, p), n);
            prop_assert_ne!(d, 0);
        }
        prop_assert_eq!(suite.d[2], suite.n[1]);
        prop_assert_eq!(suite.n[4], suite.d[1]);
        prop_assert_eq!(suite.d[5], suite.n[0]);
        Ok(())
    })
}

pub fn code_general_l_consistency() -> Result<(), String> {
    let s = (prop::sample::select(vec![3u64, 5]), any::<u64>(), any::<u64>())
        .prop_flat_map(|(l, a, b)| (Just(l), prop::sample::select(primes(l, 1000)), Just(a ^ b)));
    check("code_general_l_consistency", s, |(l, p, raw)| {
        let (j, _, sys) = code_for(l, p, unit_exponent(p, raw))?;
        let a = j.coeffs_i64().unwrap();
        let rows: Vec<Vec<i128>> = if l == 3 {
            let (a1, a2) = (a[0] as i128, a[1] as i128);
            vec![vec![a2, a1], vec![a1, a1 - a2]]
        } else {
            common::order5_rows([a[0], a[1], a[2], a[3]])
                .iter()
                .map(|r| vec![r[0], r[1], r[2]])
                .collect()
        };
        let k = sys.k();
        for (i, row) in rows.iter().enumerate() {
            let coeffs: Vec<u64> = row[..k].iter().map(|&c| common::md(c, p)).collect();
            prop_assert_eq!(sys.d.rows()[i].clone(), coeffs);
            prop_assert_eq!(sys.rhs[i], common::md(-row[k], p));
        }
        Ok(())
    })
}

pub fn linalg_laws() -> Result<(), String> {
    let s = (prop::sample::select(vec![2u64, 3, 7, 61, 97]), 1usize..5, prop::collection::vec(any::<u64>(), 32));
    check("linalg_laws", s, |(p, n, raw)| {
        let m = |off: usize| {
            ModMatrix::new(p, (0..n).map(|i| (0..n).map(|j| raw[off + i * n + j] % p).collect()).collect()).unwrap()
        };
        let (a, b) = (m(0), m(n * n));
        let ab = lib(a.mul(&b))?;
        prop_assert_eq!(lib(ab.det())?, mul_mod(lib(a.det())?, lib(b.det())?, p));
        match a.inverse() {
            Ok(inv) => prop_assert_eq!(lib(a.mul(&inv))?, ModMatrix::identity(p, n)),
            Err(_) => prop_assert_eq!(lib(a.det())?, 0),
        }
        let null = a.null_space();
        prop_assert_eq!(a.rank() + null.nrows(), n);
        for v in null.rows() {
            prop_assert!(lib(a.transpose().left_mul_vec(v))?.iter().all(|&x| x == 0));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------- scanner

fn cached_scan(l: u64, p: u64) -> Vec<ScanRecord> {
    SCANS.with(|c| {
        c.borrow_mut()
            .entry((l, p))
            .or_insert_with(|| scan(l, p, p, 1, GeneratorPolicy::All, &ScanOptions::default()).unwrap())
            .clone()
    })
}

fn scan_strategy() -> impl Strategy<Value = (u64, u64, u64, u64)> {
    let mut cases: Vec<(u64, u64)> = Vec::new();
    for l in [5u64, 7] {
        cases.extend(primes(l, 300).into_iter().map(|p| (l, p)));
    }
    cases.extend([(11, 23), (11, 67), (13, 53), (13, 79)]);
    (prop::sample::select(cases), any::<u64>(), any::<u64>()).prop_map(|((l, p), a, b)| (l, p, a, b))
}

pub fn scanner_conjugate_coherence() -> Result<(), String> {
    check("scanner_conjugate_coherence", scan_strategy(), |(l, p, ra, rb)| {
        let records = cached_scan(l, p);
        let pick = |r: u64| &records[(r % records.len() as u64) as usize];
        let (x, y) = (pick(ra), pick(rb));
        let (tx, ty) = (x.generator_power.unwrap(), y.generator_power.unwrap());
        prop_assert_eq!(x.status == Status::Exception, !x.dependent_subsets.is_empty());
        if tx % l == ty % l {
            prop_assert_eq!(x.status, y.status);
            prop_assert_eq!(&x.dependent_subsets, &y.dependent_subsets);
        }
        Ok(())
    })
}

pub fn scanner_monotone_evidence() -> Result<(), String> {
    check("scanner_monotone_evidence", scan_strategy(), |(l, p, ra, _)| {
        let records = cached_scan(l, p);
        let r = &records[(ra % records.len() as u64) as usize];
        let (_, _, sys) = code_for(l, p, r.generator_power.unwrap())?;
        prop_assert_eq!(check_row_subsets(&sys), r.dependent_subsets.clone());
        match is_mds(&sys.d.transpose()) {
            Ok(report) => prop_assert_eq!(report.mds, r.status == Status::Mds),
            Err(Error::RankDeficient { .. }) => prop_assert_eq!(r.status, Status::Exception),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
        Ok(())
    })
}

// ---------------------------------------------------------------- cli

fn cli_json(args: &[String]) -> Option<serde_json::Value> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = jacobi_mds::cli::run(std::iter::once("jmds".to_string()).chain(args.iter().cloned()), &mut out, &mut err);
    (code == 0).then(|| serde_json::from_slice(&out).unwrap())
}

fn round_trip<T: serde::de::DeserializeOwned + serde::Serialize>(v: &serde_json::Value) -> Result<(), TestCaseError> {
    let typed: T = serde_json::from_value(v.clone()).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&serde_json::to_value(&typed).unwrap(), v);
    Ok(())
}

pub fn cli_json_round_trip() -> Result<(), String> {
    use jacobi_mds::cli::{CodeOutput, EncodeOutput, JacobiOutput, SolutionsOutput};
    use jacobi_mds::code::Decoded;
    use jacobi_mds::diophantine::{DicksonSolution, GaussSolution};
    let s = (prop::sample::select(primes(5, 200)), prop::sample::select(primes(3, 200)), 0usize..6, any::<[u64; 4]>());
    check("cli_json_round_trip", s, |(p5, p3, which, w)| {
        let f = |s: &str| s.to_string();
        let word = w.iter().map(|x| (x % p5).to_string()).collect::<Vec<_>>().join(",");
        let base5 = vec![f("--p"), p5.to_string(), f("--format"), f("json")];
        let base3 = vec![f("--p"), p3.to_string(), f("--format"), f("json")];
        let cat = |a: &[&str], b: &[String]| a.iter().map(|s| s.to_string()).chain(b.iter().cloned()).collect::<Vec<_>>();
        match which {
            0 => round_trip::<JacobiOutput>(&cli_json(&cat(&["jacobi", "--l", "5"], &base5)).unwrap())?,
            1 => round_trip::<SolutionsOutput<GaussSolution>>(&cli_json(&cat(&["gauss"], &base3)).unwrap())?,
            2 => round_trip::<SolutionsOutput<DicksonSolution>>(&cli_json(&cat(&["dickson"], &base5)).unwrap())?,
            3 => round_trip::<CodeOutput>(&cli_json(&cat(&["code", "build"], &base5)).unwrap())?,
            4 => {
                let msg = format!("{},{}", w[0] % p5, w[1] % p5);
                let v = cli_json(&cat(&["code", "encode", "--message", &msg], &base5)).unwrap();
                round_trip::<EncodeOutput>(&v)?
            }
            _ => {
                if let Some(v) = cli_json(&cat(&["code", "decode", "--word", &word], &base5)) {
                    round_trip::<Decoded>(&v)?
                }
            }
        }
        Ok(())
    })
}

pub type Property = (&'static str, fn() -> Result<(), String>);

pub const ALL: &[Property] = &[
    ("field_nonzero_power", field_nonzero_power),
    ("field_generator_order", field_generator_order),
    ("field_root_of_unity", field_root_of_unity),
    ("field_character_classes", field_character_classes),
    ("field_axioms", field_axioms),
    ("cyclotomic_normalize", cyclotomic_normalize),
    ("cyclotomic_conjugation_is_automorphism", cyclotomic_conjugation_is_automorphism),
    ("cyclotomic_norm_is_galois_invariant", cyclotomic_norm_is_galois_invariant),
    ("cyclotomic_l_is_lambda_power", cyclotomic_l_is_lambda_power),
    ("jacobi_norm_and_congruence", jacobi_norm_and_congruence),
    ("jacobi_matches_oracle", jacobi_matches_oracle),
    ("jacobi_solution_count", jacobi_solution_count),
    ("jacobi_orientation_is_unique", jacobi_orientation_is_unique),
    ("jacobi_generator_covariance", jacobi_generator_covariance),
    ("gauss_pairs", gauss_pairs),
    ("dickson_orbit", dickson_orbit),
    ("diophantine_oracle_equivalence", diophantine_oracle_equivalence),
    ("dickson_nonvanishing", dickson_nonvanishing),
    ("code_round_trip", code_round_trip),
    ("code_mds_consistency", code_mds_consistency),
    ("code_mds_consistency_jacobi", code_mds_consistency_jacobi),
    ("code_order_three_rows", code_order_three_rows),
    ("code_determinant_identities", code_determinant_identities),
    ("code_general_l_consistency", code_general_l_consistency),
    ("linalg_laws", linalg_laws),
    ("scanner_conjugate_coherence", scanner_conjugate_coherence),
    ("scanner_monotone_evidence", scanner_monotone_evidence),
    ("cli_json_round_trip", cli_json_round_trip),
];
