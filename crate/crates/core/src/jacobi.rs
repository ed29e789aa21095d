//! Jacobi sums `J(i, j)_l = sum chi^i(v) chi^j(v + 1)` over `F_q` and the
//! arithmetic conditions (i)-(vi) that single out `J(1, n)` among its conjugates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::inv_mod;
use crate::cyclotomic::{index_permutation, CycInt};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, LogTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiSum {
    pub value: CycInt,
    pub spec: FieldSpec,
    pub generator: FieldElement,
    pub order_pair: (u64, u64),
}

/// Sums `zeta^(i ind(v) + j ind(v+1))` over `v` in `F_q \ {0, -1}`.
pub fn jacobi_sum(table: &LogTable, i: u64, j: u64) -> Result<JacobiSum> {
    let spec = table.spec();
    let l = spec.l();
    if !(1..l).contains(&i) || !(1..l).contains(&j) {
        return Err(Error::InvalidArgument(format!(
            "character powers ({i}, {j}) must lie in [1, {}]",
            l - 1
        )));
    }
    let p = spec.p();
    let q = spec.q();
    let minus_one = p - 1;
    let chunk = 1u64 << 16;
    let histogram = (0..q.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut h = vec![0u64; l as usize];
            let lo = (c * chunk).max(1);
            let hi = ((c + 1) * chunk).min(q);
            for v in lo..hi {
                if v == minus_one {
                    continue;
                }
                // v + 1 only touches the constant coordinate
                let succ = if v % p == p - 1 { v - (p - 1) } else { v + 1 };
                let a = table.index_encoded(v).expect("nonzero");
                let b = table.index_encoded(succ).expect("nonzero");
                h[((i * a + j * b) % l) as usize] += 1;
            }
            h
        })
        .reduce(
            || vec![0u64; l as usize],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let raw: Vec<BigInt> = histogram.into_iter().map(BigInt::from).collect();
    Ok(JacobiSum {
        value: CycInt::normalize(l as usize, &raw)?,
        spec: spec.clone(),
        generator: table.generator().clone(),
        order_pair: (i, j),
    })
}

/// Outcome of conditions (i)-(vi) for a candidate `H = sum a_i zeta^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    #[serde(rename = "i")]
    pub norm: bool,
    #[serde(rename = "ii")]
    pub convolutions: bool,
    #[serde(rename = "iii")]
    pub trace: bool,
    #[serde(rename = "iv")]
    pub weighted_trace: bool,
    #[serde(rename = "v")]
    pub coprime: bool,
    #[serde(rename = "vi")]
    pub orientation: bool,
    pub b: u64,
    pub diagnostics: ConditionDiagnostics,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionDiagnostics {
    /// `sum a_i^2 - sum a_i a_{i+1}`.
    pub quadratic_form: i128,
    /// `sum a_i a_{i+t}` for `t = 1, ..., l-1`.
    pub convolutions: Vec<i128>,
    /// `1 + sum a_i (mod l)`.
    pub trace_residue: u64,
    /// `sum i a_i (mod l)`.
    pub weighted_residue: u64,
    /// Normal-form coordinates of the condition (vi) product, reduced mod `p`.
    pub orientation_residues: Vec<u64>,
}

impl ConditionReport {
    pub fn passes_arithmetic(&self) -> bool {
        self.norm && self.convolutions && self.trace && self.weighted_trace && self.coprime
    }

    pub fn passes_all(&self) -> bool {
        self.passes_arithmetic() && self.orientation
    }
}

/// `{k in [1, l-1] : ((n+1) k mod l) > k}`; for `n = 1` this is `1..=(l-1)/2`.
pub fn condition_index_set(l: u64, n: u64) -> Vec<u64> {
    (1..l).filter(|&k| ((n + 1) * k) % l > k).collect()
}

fn to_i128(x: &BigInt) -> i128 {
    x.to_i128().expect("diagnostic fits in i128")
}

/// Evaluates conditions (i)-(vi) exactly for the candidate, with `b` an `l`-th root of unity mod `p`.
pub fn verify_conditions(
    candidate: &CycInt,
    spec: &FieldSpec,
    n: u64,
    b: u64,
) -> Result<ConditionReport> {
    let l = spec.l();
    if candidate.order() as u64 != l {
        return Err(Error::OrderMismatch {
            left: candidate.order(),
            right: l as usize,
        });
    }
    if !(1..=l - 2).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} outside [1, {}]", l - 2)));
    }
    let p = spec.p();
    let full = candidate.to_full();
    let lu = l as usize;
    let conv = |t: usize| -> BigInt { (1..lu).map(|i| &full[i] * &full[(i + t) % lu]).sum() };

    let squares: BigInt = full.iter().map(|a| a * a).sum();
    let quadratic_form = squares - conv(1);
    let convolutions: Vec<BigInt> = (1..lu).map(conv).collect();
    let l_big = BigInt::from(l);
    let trace: BigInt = full.iter().sum::<BigInt>() + 1;
    let weighted: BigInt = full
        .iter()
        .enumerate()
        .map(|(i, a)| a * BigInt::from(i))
        .sum();
    let trace_residue = trace.mod_floor(&l_big).to_u64().unwrap();
    let weighted_residue = weighted.mod_floor(&l_big).to_u64().unwrap();

    let index_set = condition_index_set(l, n);
    let product = index_set.iter().try_fold(CycInt::one(lu), |acc, &k| {
        candidate
            .conjugate(k as usize)
            .map(|h| &acc * &h)
    })?;
    let coprime = !product.divisible_by(p);

    let bar = candidate.bar();
    let orient = index_set.iter().fold(bar, |acc, &k| {
        let k_inv = inv_mod(k, l).expect("k is a unit mod l");
        let factor = &CycInt::from_integer(lu, b) - &CycInt::zeta_pow(lu, k_inv as i64);
        &acc * &factor
    });
    let orientation_residues: Vec<u64> = orient
        .coeffs()
        .iter()
        .map(|c| crate::arith::residue_big(c, p))
        .collect();

    Ok(ConditionReport {
        norm: quadratic_form == BigInt::from(spec.q()),
        convolutions: convolutions.windows(2).all(|w| w[0] == w[1]),
        trace: trace_residue == 0,
        weighted_trace: weighted_residue == 0,
        coprime,
        orientation: orientation_residues.iter().all(Zero::is_zero),
        b,
        diagnostics: ConditionDiagnostics {
            quadratic_form: to_i128(&quadratic_form),
            convolutions: convolutions.iter().map(to_i128).collect(),
            trace_residue,
            weighted_residue,
            orientation_residues,
        },
    })
}

/// The `l - 1` conjugate coefficient vectors; the `i`-th is `(a_{i*1}, ..., a_{i*(l-1)})`.
pub fn conjugate_solutions<T: Clone>(a: &[T]) -> Result<Vec<Vec<T>>> {
    let l = a.len() + 1;
    if l < 3 || !crate::arith::is_prime(l as u64) {
        return Err(Error::InvalidLength {
            expected: l.max(3) - 1,
            found: a.len(),
        });
    }
    Ok((1..l).map(|i| index_permutation(a, i)).collect())
}
