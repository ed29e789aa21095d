//! The six 2x2 minors of the order-5 congruence system and their Cramer numerators.

use serde::{Deserialize, Serialize};

use crate::arith::{inv_mod, mul_mod, residue};
use crate::error::{Error, Result};

/// Pairs of congruence rows, in the order `D1..D6`.
pub const ROW_PAIRS: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminantSuite {
    pub p: u64,
    pub b: u64,
    /// `D_i` mod `p`.
    pub d: [u64; 6],
    /// Cramer numerators for `b`, so that `D_i b = N_i (mod p)`.
    pub n: [u64; 6],
}

fn det2(m: [[i128; 2]; 2]) -> i128 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// `(b, b^2, constant)` rows of the order-5 system for `J = a1 z + a2 z^2 + a3 z^3 + a4 z^4`.
pub fn congruence_rows(a: [i64; 4]) -> [[i128; 3]; 4] {
    let [a1, a2, a3, a4] = a.map(i128::from);
    [
        [a1 - a2 + a3, a4, a3 - a4],
        [a3 - a4, a3, a2 - a4],
        [a1, a2, a1 - a4],
        [a1 - a2 + a3 - a4, a1, -a4],
    ]
}

/// Computes all twelve values and checks `D_i b = N_i`, `D3 = N2`, `N5 = D2` and `D6 = N1` mod `p`.
pub fn determinant_suite(a: [i64; 4], p: u64, b: u64) -> Result<DeterminantSuite> {
    let rows = congruence_rows(a);
    let reduce = |x: i128| x.rem_euclid(p as i128) as u64;
    let mut d = [0u64; 6];
    let mut n = [0u64; 6];
    for (idx, &(r, s)) in ROW_PAIRS.iter().enumerate() {
        let (x, y) = (rows[r], rows[s]);
        d[idx] = reduce(det2([[x[0], x[1]], [y[0], y[1]]]));
        n[idx] = reduce(det2([[-x[2], x[1]], [-y[2], y[1]]]));
    }
    let b = b % p;
    for i in 0..6 {
        if mul_mod(d[i], b, p) != n[i] {
            return Err(Error::Integrity(format!(
                "D{0} * b = {1} but N{0} = {2} mod {p}",
                i + 1,
                mul_mod(d[i], b, p),
                n[i]
            )));
        }
    }
    for (name, lhs, rhs) in [("D3 = N2", d[2], n[1]), ("N5 = D2", n[4], d[1]), ("D6 = N1", d[5], n[0])] {
        if lhs != rhs {
            return Err(Error::Integrity(format!("{name} fails mod {p}: {lhs} vs {rhs}")));
        }
    }
    Ok(DeterminantSuite { p, b, d, n })
}

impl DeterminantSuite {
    /// `(A1, A2, A3, A4) = (D2, D5, -D3, -D4) / D1` mod `p`.
    pub fn syndrome_coefficients(&self) -> Result<[u64; 4]> {
        let p = self.p;
        let inv = inv_mod(self.d[0], p)
            .ok_or_else(|| Error::Singular(format!("D1 vanishes mod {p}")))?;
        let neg = |x: u64| (p - x) % p;
        Ok([self.d[1], self.d[4], neg(self.d[2]), neg(self.d[3])].map(|x| mul_mod(x, inv, p)))
    }

    /// `80 N1 = 2 (A - 10 B) (mod p)` for the Dickson pair `(A, B)`.
    pub fn matches_dickson(&self, big_a: i64, big_b: i64) -> bool {
        let p = self.p;
        let rhs = residue(2 * (big_a - 10 * big_b), p);
        mul_mod(80 % p, self.n[0], p) == rhs
    }
}
