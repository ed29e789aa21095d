//! Condition (vi) for `n = 1` read as `l - 1` linear congruences in `b, b^2, ..., b^((l-1)/2)`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{inv_mod, mul_mod, pow_mod, residue_big};
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::linalg::{subsets, ModMatrix};

/// `D x = rhs (mod p)` with `x = (b, b^2, ..., b^k)`, `k = (l-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSystem {
    pub l: u64,
    pub p: u64,
    /// The root of unity the system was certified against.
    pub b: u64,
    /// `(l-1) x k`; column `j` holds the coefficients of `b^(j+1)`.
    pub d: ModMatrix,
    /// Negated constant terms mod `p`.
    pub rhs: Vec<u64>,
    /// Exact integer coefficients before reduction, `exact[i][j]` for `t^j`, `j = 0..=k`.
    pub exact: Vec<Vec<BigInt>>,
}

#[derive(Serialize)]
struct SystemJson<'a> {
    l: u64,
    p: u64,
    b: u64,
    d: &'a [Vec<u64>],
    rhs: &'a [u64],
}

impl CongruenceSystem {
    pub fn k(&self) -> usize {
        ((self.l - 1) / 2) as usize
    }

    /// Evaluates every row at `x = (t, t^2, ..., t^k)`.
    pub fn residuals(&self, t: u64) -> Vec<u64> {
        let p = self.p;
        self.d
            .rows()
            .iter()
            .zip(&self.rhs)
            .map(|(row, &r)| {
                let lhs = row.iter().enumerate().fold(0, |acc, (j, &c)| {
                    (acc + mul_mod(c, pow_mod(t, j as u64 + 1, p), p)) % p
                });
                (lhs + p - r) % p
            })
            .collect()
    }

    pub fn is_solved_by(&self, t: u64) -> bool {
        self.residuals(t).iter().all(|&r| r == 0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SystemJson {
            l: self.l,
            p: self.p,
            b: self.b,
            d: self.d.rows(),
            rhs: &self.rhs,
        })
        .expect("plain data")
    }
}

/// Coefficients in `t` of `conj(J) * prod_{k=1}^{(l-1)/2} (t - zeta^(k^-1 mod l))`, constant first.
pub fn orientation_polynomial(j: &CycInt) -> Vec<CycInt> {
    let l = j.order();
    let half = (l - 1) / 2;
    let mut poly = vec![j.bar()];
    for k in 1..=half {
        let k_inv = inv_mod(k as u64, l as u64).expect("unit") as i64;
        let root = CycInt::zeta_pow(l, k_inv);
        let mut next = vec![CycInt::zero(l); poly.len() + 1];
        for (deg, c) in poly.iter().enumerate() {
            next[deg + 1] = &next[deg + 1] + c;
            next[deg] = &next[deg] - &(c * &root);
        }
        poly = next;
    }
    poly
}

/// Builds `D` and the right-hand side; fails if `(b, ..., b^k)` does not solve the system.
pub fn build_congruence_system(j: &CycInt, p: u64, b: u64) -> Result<CongruenceSystem> {
    let l = j.order();
    let half = (l - 1) / 2;
    let poly = orientation_polynomial(j);
    // row i is the zeta^(i+1) coordinate of every t-coefficient
    let exact: Vec<Vec<BigInt>> = (0..l - 1)
        .map(|i| poly.iter().map(|c| c.coeffs()[i].clone()).collect())
        .collect();
    let d_rows = exact
        .iter()
        .map(|row| row[1..=half].iter().map(|c| residue_big(c, p)).collect())
        .collect();
    let rhs = exact
        .iter()
        .map(|row| residue_big(&-&row[0], p))
        .collect();
    let sys = CongruenceSystem {
        l: l as u64,
        p,
        b: b % p,
        d: ModMatrix::new(p, d_rows)?,
        rhs,
        exact,
    };
    let res = sys.residuals(sys.b);
    if let Some(row) = res.iter().position(|&r| r != 0) {
        return Err(Error::Integrity(format!(
            "b = {b} does not solve congruence row {row} mod {p} (residual {}) for J = {j}",
            res[row]
        )));
    }
    Ok(sys)
}

/// Row subsets of size `(l-1)/2` whose minor vanishes mod `p`, in lexicographic order.
pub fn check_row_subsets(sys: &CongruenceSystem) -> Vec<Vec<usize>> {
    let k = sys.k();
    subsets(sys.d.nrows(), k)
        .into_iter()
        .filter(|s| sys.d.select_rows(s).det().expect("square") == 0)
        .collect()
}
