//! Solvers for the generalized Gauss system (order 3) and the Dickson system
//! (order 5), the linear changes of variables to Jacobi-sum coordinates, and
//! selection of the solution attached to a given generator.
//!
//! Gauss: `4q = L^2 + 27M^2`, `L = 1 (mod 3)`, `p ∤ L`.
//!
//! Dickson: `16q = X^2 + 50U^2 + 50V^2 + 125W^2`, `XW = V^2 - 4UV - U^2`,
//! `X = 1 (mod 5)`, `p ∤ X^2 - 125W^2`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{exact_sqrt, inv_mod, is_prime, pow_mod, residue};
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::jacobi::{verify_conditions, ConditionReport};

fn check_prime_power(q: u64, p: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let mut rest = q;
    let mut alpha = 0;
    while rest > 1 && rest % p == 0 {
        rest /= p;
        alpha += 1;
    }
    if rest != 1 || alpha == 0 {
        return Err(Error::InvalidArgument(format!("{q} is not a power of {p}")));
    }
    Ok(alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GaussSolution {
    #[serde(rename = "L")]
    pub big_l: i64,
    #[serde(rename = "M")]
    pub big_m: i64,
    pub q: u64,
    pub p: u64,
}

impl GaussSolution {
    pub fn is_valid(&self) -> bool {
        let (l, m) = (self.big_l as i128, self.big_m as i128);
        4 * self.q as i128 == l * l + 27 * m * m
            && l.rem_euclid(3) == 1
            && l.rem_euclid(self.p as i128) != 0
    }
}

/// All `(L, M)` with `4q = L^2 + 27M^2`, `L = 1 (mod 3)`, `p ∤ L`; positive `M` first.
pub fn solve_gauss(q: u64, p: u64) -> Result<Vec<GaussSolution>> {
    if p % 3 != 1 {
        return Err(Error::InvalidArgument(format!("p = {p} is not 1 mod 3")));
    }
    check_prime_power(q, p)?;
    let four_q = 4 * q as i128;
    let mut out = BTreeSet::new();
    let mut m = 0i128;
    while 27 * m * m <= four_q {
        if let Some(root) = exact_sqrt(four_q - 27 * m * m) {
            for l in [root, -root] {
                if l.rem_euclid(3) == 1 && l.rem_euclid(p as i128) != 0 {
                    for mm in [m, -m] {
                        out.insert((l as i64, mm as i64));
                    }
                }
            }
        }
        m += 1;
    }
    let mut sols: Vec<GaussSolution> = out
        .into_iter()
        .map(|(big_l, big_m)| GaussSolution { big_l, big_m, q, p })
        .collect();
    sols.sort_by_key(|s| (s.big_m <= 0, s.big_m.abs(), s.big_l));
    Ok(sols)
}

/// `a_1 = (-L + 3M)/2`, `a_2 = (-L - 3M)/2`.
pub fn gauss_to_a(sol: &GaussSolution) -> Result<[i64; 2]> {
    let (l, m) = (sol.big_l, sol.big_m);
    if (l - m).rem_euclid(2) != 0 {
        return Err(Error::NotDivisible(format!(
            "(L, M) = ({l}, {m}) have different parity"
        )));
    }
    Ok([(-l + 3 * m) / 2, (-l - 3 * m) / 2])
}

/// `L = -(a_1 + a_2)`, `M = (a_1 - a_2)/3`.
pub fn a_to_gauss(a: [i64; 2], q: u64, p: u64) -> Result<GaussSolution> {
    let diff = a[0] - a[1];
    if diff.rem_euclid(3) != 0 {
        return Err(Error::NotDivisible(format!(
            "a_1 - a_2 = {diff} is not divisible by 3"
        )));
    }
    Ok(GaussSolution {
        big_l: -(a[0] + a[1]),
        big_m: diff / 3,
        q,
        p,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DicksonSolution {
    #[serde(rename = "X")]
    pub x: i64,
    #[serde(rename = "U")]
    pub u: i64,
    #[serde(rename = "V")]
    pub v: i64,
    #[serde(rename = "W")]
    pub w: i64,
    #[serde(rename = "A")]
    pub a: i64,
    #[serde(rename = "B")]
    pub b: i64,
    pub q: u64,
    pub p: u64,
}

impl DicksonSolution {
    /// Fills in `A = X^2 - 125W^2` and `B = 2XU - XV - 25VW`.
    pub fn new(x: i64, u: i64, v: i64, w: i64, q: u64, p: u64) -> Self {
        DicksonSolution {
            x,
            u,
            v,
            w,
            a: x * x - 125 * w * w,
            b: 2 * x * u - x * v - 25 * v * w,
            q,
            p,
        }
    }

    pub fn tuple(&self) -> (i64, i64, i64, i64) {
        (self.x, self.u, self.v, self.w)
    }

    /// Names of violated conditions among (1)-(4) and the `A ± 10B` nonvanishing.
    pub fn violations(&self) -> Vec<&'static str> {
        let (x, u, v, w) = (self.x as i128, self.u as i128, self.v as i128, self.w as i128);
        let p = self.p as i128;
        let a = self.a as i128;
        let b = self.b as i128;
        let mut out = Vec::new();
        if 16 * self.q as i128 != x * x + 50 * u * u + 50 * v * v + 125 * w * w {
            out.push("(1) 16q = X^2 + 50U^2 + 50V^2 + 125W^2");
        }
        if x * w != v * v - 4 * u * v - u * u {
            out.push("(2) XW = V^2 - 4UV - U^2");
        }
        if x.rem_euclid(5) != 1 {
            out.push("(3) X = 1 (mod 5)");
        }
        if a.rem_euclid(p) == 0 {
            out.push("(4) p does not divide X^2 - 125W^2");
        }
        if (a - 10 * b).rem_euclid(p) == 0 || (a + 10 * b).rem_euclid(p) == 0 {
            out.push("A - 10B and A + 10B nonzero mod p");
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Integer solutions of (1)-(3), before the rejection condition (4).
///
/// For each `(U, V)` inside the ellipse, (1) and (2) give
/// `125 W^4 - R W^2 + N^2 = 0` with `R = 16q - 50U^2 - 50V^2` and `N = V^2 - 4UV - U^2`,
/// so `W^2` and then `X = N / W` follow exactly.
pub fn dickson_candidates(q: u64) -> Vec<(i64, i64, i64, i64)> {
    let sixteen_q = 16 * q as i128;
    let uv_bound = crate::arith::isqrt((sixteen_q / 50) as u128) as i128;
    let mut out = BTreeSet::new();
    for u in -uv_bound..=uv_bound {
        for v in -uv_bound..=uv_bound {
            let r = sixteen_q - 50 * u * u - 50 * v * v;
            if r < 0 {
                continue;
            }
            let n = v * v - 4 * u * v - u * u;
            if n == 0 {
                // only U = V = 0; then XW = 0 and X != 0 forces W = 0
                if let Some(x) = exact_sqrt(r) {
                    for x in [x, -x] {
                        if x.rem_euclid(5) == 1 {
                            out.insert((x as i64, u as i64, v as i64, 0));
                        }
                    }
                }
                continue;
            }
            let Some(s) = exact_sqrt(r * r - 500 * n * n) else {
                continue;
            };
            for num in [r + s, r - s] {
                if num <= 0 || num % 250 != 0 {
                    continue;
                }
                let Some(w) = exact_sqrt(num / 250) else {
                    continue;
                };
                for w in [w, -w] {
                    if n % w != 0 {
                        continue;
                    }
                    let x = n / w;
                    if x.rem_euclid(5) == 1
                        && x * x + 50 * u * u + 50 * v * v + 125 * w * w == sixteen_q
                    {
                        out.insert((x as i64, u as i64, v as i64, w as i64));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The four solutions of (1)-(4), in lexicographic order of `(X, U, V, W)`.
pub fn solve_dickson(q: u64, p: u64) -> Result<Vec<DicksonSolution>> {
    if p % 5 != 1 {
        return Err(Error::InvalidArgument(format!("p = {p} is not 1 mod 5")));
    }
    check_prime_power(q, p)?;
    let sols: Vec<DicksonSolution> = dickson_candidates(q)
        .into_iter()
        .map(|(x, u, v, w)| DicksonSolution::new(x, u, v, w, q, p))
        .filter(|s| residue(s.a, p) != 0)
        .collect();
    if sols.len() != 4 {
        return Err(Error::Integrity(format!(
            "Dickson system for q = {q} has {} solutions, expected 4",
            sols.len()
        )));
    }
    Ok(sols)
}

/// The change of variables to `(a_1, a_2, a_3, a_4)`; every entry is a quarter of an integer form.
pub fn dickson_to_a(sol: &DicksonSolution) -> Result<[i64; 4]> {
    let (x, u, v, w) = sol.tuple();
    let forms = [
        -x + 2 * u + 4 * v + 5 * w,
        -x + 4 * u - 2 * v - 5 * w,
        -x - 4 * u + 2 * v - 5 * w,
        -x - 2 * u - 4 * v + 5 * w,
    ];
    let mut a = [0i64; 4];
    for (slot, f) in a.iter_mut().zip(forms) {
        if f.rem_euclid(4) != 0 {
            return Err(Error::NotDivisible(format!(
                "{f} is not divisible by 4 for (X, U, V, W) = {:?}",
                sol.tuple()
            )));
        }
        *slot = f / 4;
    }
    Ok(a)
}

/// Inverse of [`dickson_to_a`].
pub fn a_to_dickson(a: [i64; 4], q: u64, p: u64) -> Result<DicksonSolution> {
    let [a1, a2, a3, a4] = a;
    let fifth = |f: i64, name: &str| -> Result<i64> {
        if f.rem_euclid(5) != 0 {
            return Err(Error::NotDivisible(format!("5 does not divide {name} = {f}")));
        }
        Ok(f / 5)
    };
    let x = -(a1 + a2 + a3 + a4);
    let u = fifth(a1 + 2 * a2 - 2 * a3 - a4, "5U")?;
    let v = fifth(2 * a1 - a2 + a3 - 2 * a4, "5V")?;
    let w = fifth(a1 - a2 - a3 + a4, "5W")?;
    Ok(DicksonSolution::new(x, u, v, w, q, p))
}

/// A Diophantine parametrization of `J(1, 1)_l` for one fixed order `l`.
pub trait Parametrization: Clone {
    const ORDER: u64;

    /// Jacobi-sum coordinates `(a_1, ..., a_{l-1})`.
    fn a_vector(&self) -> Result<Vec<i64>>;

    /// The closed-form ratio the classical literature equates with `gamma^((q-1)/l)`.
    fn closed_form_ratio(&self) -> Option<u64>;
}

impl Parametrization for GaussSolution {
    const ORDER: u64 = 3;

    fn a_vector(&self) -> Result<Vec<i64>> {
        gauss_to_a(self).map(|a| a.to_vec())
    }

    /// `(L - 3M)/(L + 3M) mod p`.
    fn closed_form_ratio(&self) -> Option<u64> {
        let p = self.p;
        let den = residue(self.big_l + 3 * self.big_m, p);
        let num = residue(self.big_l - 3 * self.big_m, p);
        inv_mod(den, p).map(|d| crate::arith::mul_mod(num, d, p))
    }
}

impl Parametrization for DicksonSolution {
    const ORDER: u64 = 5;

    fn a_vector(&self) -> Result<Vec<i64>> {
        dickson_to_a(self).map(|a| a.to_vec())
    }

    /// `(A - 10B)/(A + 10B) mod p`.
    fn closed_form_ratio(&self) -> Option<u64> {
        let p = self.p;
        let num = residue(self.a - 10 * self.b, p);
        let den = residue(self.a + 10 * self.b, p);
        inv_mod(den, p).map(|d| crate::arith::mul_mod(num, d, p))
    }
}

/// How a closed-form ratio relates to `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "k", rename_all = "snake_case")]
pub enum RatioRelation {
    /// `ratio = b^k`; `k = 1` is agreement, `k = l - 1` is `b^{-1}`.
    Power(u64),
    /// `ratio = -b^k`.
    NegatedPower(u64),
    Unrelated,
    /// The denominator vanishes mod `p`.
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    pub ratio: Option<u64>,
    pub relation: RatioRelation,
}

pub fn classify_ratio(ratio: Option<u64>, b: u64, l: u64, p: u64) -> Orientation {
    let relation = match ratio {
        None => RatioRelation::Undefined,
        Some(r) => {
            let pos = (0..l).find(|&k| pow_mod(b, k, p) == r);
            let neg = (0..l).find(|&k| (p - pow_mod(b, k, p)) % p == r);
            match (pos, neg) {
                (Some(k), _) => RatioRelation::Power(k),
                (None, Some(k)) => RatioRelation::NegatedPower(k),
                _ => RatioRelation::Unrelated,
            }
        }
    };
    Orientation { ratio, relation }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selection<S> {
    pub solution: S,
    pub a_vector: Vec<i64>,
    pub b: u64,
    pub conditions: ConditionReport,
    pub orientation: Orientation,
}

/// Picks the unique solution whose coordinates satisfy condition (vi) for `b = gamma^((q-1)/l)`.
pub fn select_solution<S: Parametrization>(
    solutions: &[S],
    spec: &FieldSpec,
    gamma: &FieldElement,
) -> Result<Selection<S>> {
    if spec.l() != S::ORDER {
        return Err(Error::InvalidArgument(format!(
            "field is set up for l = {}, solutions have order {}",
            spec.l(),
            S::ORDER
        )));
    }
    if !spec.is_generator(gamma)? {
        return Err(Error::InvalidArgument(format!("{gamma} is not a generator")));
    }
    let b = spec.root_of_unity(gamma)?;
    let mut passing = Vec::new();
    for s in solutions {
        let a = s.a_vector()?;
        let h = CycInt::from_i64(S::ORDER as usize, &a)?;
        let report = verify_conditions(&h, spec, 1, b)?;
        if report.passes_all() {
            passing.push((s.clone(), a, report));
        }
    }
    if passing.len() != 1 {
        return Err(Error::Integrity(format!(
            "{} solutions satisfy condition (vi) for b = {b} mod {}, expected exactly 1",
            passing.len(),
            spec.p()
        )));
    }
    let (solution, a_vector, conditions) = passing.pop().unwrap();
    let orientation = classify_ratio(solution.closed_form_ratio(), b, S::ORDER, spec.p());
    Ok(Selection {
        solution,
        a_vector,
        b,
        conditions,
        orientation,
    })
}
