//! Finite fields `F_q`, `q = p^alpha`, with a deterministic primitive element and
//! a discrete-log table for evaluating characters of order `l`.
//!
//! Elements of an extension field are coefficient vectors in the polynomial basis
//! `1, x, ..., x^(alpha-1)` modulo the lexicographically least monic irreducible
//! polynomial of degree `alpha` (coefficients compared constant term first).

use serde::{Deserialize, Serialize};

use crate::arith::{self, inv_mod, is_prime, mul_mod, prime_factors};
use crate::error::{Error, Result};

/// Default cap on the number of log-table entries.
pub const DEFAULT_TABLE_BUDGET: u64 = 10_000_000;

/// The field `F_q` together with the odd prime order `l` of the characters we evaluate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u64,
    alpha: u32,
    q: u64,
    /// Monic modulus, constant term first, length `alpha + 1`. Empty for prime fields.
    modulus: Vec<u64>,
    l: u64,
}

/// An element of `F_q` as `alpha` canonical residues in `[0, p)`, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement {
    p: u64,
    coeffs: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Canonical integer (prime fields) or colon-separated coefficient form.
    pub fn canonical(&self) -> String {
        self.coeffs
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(":")
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl FieldSpec {
    /// Builds `F_{p^alpha}` for characters of order `l`; requires `l | p - 1`.
    pub fn new(p: u64, alpha: u32, l: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if alpha == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        if l < 3 || !is_prime(l) {
            return Err(Error::InvalidField(format!("l = {l} is not an odd prime")));
        }
        if (p - 1) % l != 0 {
            return Err(Error::InvalidField(format!("p = {p} is not 1 mod l = {l}")));
        }
        let q = p
            .checked_pow(alpha)
            .filter(|&q| q < u32::MAX as u64)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{alpha} is too large")))?;
        let modulus = if alpha == 1 {
            Vec::new()
        } else {
            least_irreducible(p, alpha as usize)
        };
        Ok(FieldSpec {
            p,
            alpha,
            q,
            modulus,
            l,
        })
    }

    /// Prime field `F_p`.
    pub fn prime(p: u64, l: u64) -> Result<Self> {
        Self::new(p, 1, l)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    /// The defining polynomial, or `None` for a prime field.
    pub fn modulus(&self) -> Option<&[u64]> {
        (self.alpha > 1).then_some(self.modulus.as_slice())
    }

    /// Element from explicit coefficients; rejects wrong lengths and non-canonical entries.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.alpha as usize {
            return Err(Error::InvalidLength {
                expected: self.alpha as usize,
                found: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidArgument(format!(
                "coefficient {c} is not a residue mod {}",
                self.p
            )));
        }
        Ok(FieldElement {
            p: self.p,
            coeffs: coeffs.to_vec(),
        })
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, x: i64) -> FieldElement {
        let mut coeffs = vec![0; self.alpha as usize];
        coeffs[0] = arith::residue(x, self.p);
        FieldElement { p: self.p, coeffs }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    fn check(&self, x: &FieldElement) -> Result<()> {
        if x.p != self.p || x.coeffs.len() != self.alpha as usize {
            let found = x.p.saturating_pow(x.coeffs.len() as u32);
            return Err(Error::FieldMismatch {
                left: self.q,
                right: found,
            });
        }
        Ok(())
    }

    pub fn arith(&self, op: FieldOp, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(match op {
            FieldOp::Add => self.add_unchecked(x, y),
            FieldOp::Sub => {
                let neg = self.neg_unchecked(y);
                self.add_unchecked(x, &neg)
            }
            FieldOp::Mul => self.mul_unchecked(x, y),
            FieldOp::Div => {
                let inv = self.inv(y)?;
                self.mul_unchecked(x, &inv)
            }
        })
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.arith(FieldOp::Add, x, y)
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.arith(FieldOp::Sub, x, y)
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.arith(FieldOp::Mul, x, y)
    }

    pub fn div(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.arith(FieldOp::Div, x, y)
    }

    pub fn neg(&self, x: &FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        Ok(self.neg_unchecked(x))
    }

    pub fn pow(&self, x: &FieldElement, mut exp: u64) -> Result<FieldElement> {
        self.check(x)?;
        let mut base = x.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = self.mul_unchecked(&base, &base);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative inverse via `x^(q-2)`.
    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        if x.is_zero() {
            return Err(Error::DivisionByZero { q: self.q });
        }
        self.pow(x, self.q - 2)
    }

    fn add_unchecked(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        FieldElement { p: self.p, coeffs }
    }

    fn neg_unchecked(&self, x: &FieldElement) -> FieldElement {
        let coeffs = x.coeffs.iter().map(|&a| (self.p - a) % self.p).collect();
        FieldElement { p: self.p, coeffs }
    }

    fn mul_unchecked(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = if self.alpha == 1 {
            vec![mul_mod(x.coeffs[0], y.coeffs[0], self.p)]
        } else {
            let prod = poly::mul(&x.coeffs, &y.coeffs, self.p);
            let mut r = poly::rem(&prod, &self.modulus, self.p);
            r.resize(self.alpha as usize, 0);
            r
        };
        FieldElement { p: self.p, coeffs }
    }

    /// Packs an element into `sum c_i p^i`, a bijection onto `[0, q)`.
    pub fn encode(&self, x: &FieldElement) -> u64 {
        x.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn decode(&self, mut code: u64) -> FieldElement {
        let mut coeffs = Vec::with_capacity(self.alpha as usize);
        for _ in 0..self.alpha {
            coeffs.push(code % self.p);
            code /= self.p;
        }
        FieldElement { p: self.p, coeffs }
    }

    /// All elements in lexicographic order of coefficients, constant term most significant.
    pub fn elements_lex(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let alpha = self.alpha as usize;
        (0..self.q).map(move |idx| {
            let mut coeffs = vec![0; alpha];
            let mut rest = idx;
            for slot in coeffs.iter_mut().rev() {
                *slot = rest % self.p;
                rest /= self.p;
            }
            FieldElement { p: self.p, coeffs }
        })
    }

    /// Multiplicative order test against the prime factors of `q - 1`.
    pub fn is_generator(&self, x: &FieldElement) -> Result<bool> {
        self.check(x)?;
        if x.is_zero() {
            return Ok(false);
        }
        let one = self.one();
        for r in prime_factors(self.q - 1) {
            if self.pow(x, (self.q - 1) / r)? == one {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The least generator of `F_q^*` in lexicographic coefficient order.
    pub fn find_primitive_element(&self) -> FieldElement {
        let factors = prime_factors(self.q - 1);
        let one = self.one();
        self.elements_lex()
            .filter(|x| !x.is_zero())
            .find(|x| {
                factors.iter().all(|r| {
                    self.pow(x, (self.q - 1) / r).expect("same field") != one
                })
            })
            .expect("F_q^* is cyclic")
    }

    /// The constant coefficient of an element of the prime subfield.
    pub fn subfield_residue(&self, x: &FieldElement) -> Result<u64> {
        self.check(x)?;
        if x.coeffs[1..].iter().any(|&c| c != 0) {
            return Err(Error::NotInPrimeSubfield);
        }
        Ok(x.coeffs[0])
    }

    /// `b = gamma^((q-1)/l)` read as an integer mod `p`.
    pub fn root_of_unity(&self, gamma: &FieldElement) -> Result<u64> {
        let b = self.pow(gamma, (self.q - 1) / self.l)?;
        self.subfield_residue(&b)
    }
}

/// Discrete logarithms to the base of a fixed generator.
#[derive(Debug, Clone)]
pub struct LogTable {
    spec: FieldSpec,
    generator: FieldElement,
    index: Vec<u32>,
}

const NO_LOG: u32 = u32::MAX;

impl LogTable {
    pub fn build(spec: &FieldSpec, generator: &FieldElement, budget: u64) -> Result<Self> {
        spec.check(generator)?;
        let q = spec.q();
        if q > budget {
            return Err(Error::TableBudget { q, budget });
        }
        let mut index = vec![NO_LOG; q as usize];
        let mut x = spec.one();
        for k in 0..q - 1 {
            let slot = &mut index[spec.encode(&x) as usize];
            if *slot != NO_LOG {
                return Err(Error::InvalidArgument(format!(
                    "{generator} is not a generator of F_{q}^*"
                )));
            }
            *slot = k as u32;
            x = spec.mul_unchecked(&x, generator);
        }
        Ok(LogTable {
            spec: spec.clone(),
            generator: generator.clone(),
            index,
        })
    }

    /// Table for the canonical (least) generator.
    pub fn canonical(spec: &FieldSpec, budget: u64) -> Result<Self> {
        if spec.q() > budget {
            return Err(Error::TableBudget {
                q: spec.q(),
                budget,
            });
        }
        let gamma = spec.find_primitive_element();
        Self::build(spec, &gamma, budget)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn generator(&self) -> &FieldElement {
        &self.generator
    }

    pub fn index(&self, x: &FieldElement) -> Result<u64> {
        self.spec.check(x)?;
        self.index_encoded(self.spec.encode(x))
            .ok_or(Error::InvalidArgument("the logarithm of 0 is undefined".into()))
    }

    /// Log of an encoded nonzero element.
    #[inline]
    pub fn index_encoded(&self, code: u64) -> Option<u64> {
        match self.index[code as usize] {
            NO_LOG => None,
            k => Some(k as u64),
        }
    }

    /// `k` with `chi_l(v) = zeta_l^k`, where `chi_l(gamma) = zeta_l`.
    pub fn character_exponent(&self, l: u64, v: &FieldElement) -> Result<u64> {
        if (self.spec.q() - 1) % l != 0 {
            return Err(Error::InvalidArgument(format!(
                "l = {l} does not divide q - 1 = {}",
                self.spec.q() - 1
            )));
        }
        if v.is_zero() {
            return Err(Error::InvalidArgument("chi(0) is undefined".into()));
        }
        Ok(self.index(v)? % l)
    }

    /// `b = gamma^((q-1)/l)` as an integer mod `p`.
    pub fn root_of_unity(&self) -> u64 {
        self.spec
            .root_of_unity(&self.generator)
            .expect("gamma^((q-1)/l) lies in F_p")
    }
}

/// Generators `gamma^t` with `gcd(t, q - 1) = 1`, ordered by `t`.
pub fn generator_powers(q: u64) -> impl Iterator<Item = u64> {
    (1..q - 1).filter(move |&t| arith::gcd(t, q - 1) == 1)
}

/// Dense polynomials over `F_p`, constant term first.
mod poly {
    use super::{inv_mod, mul_mod};

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        trim(out)
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let m = trim(m.to_vec());
        let mut r = trim(a.to_vec());
        let lead_inv = inv_mod(*m.last().expect("nonzero modulus"), p).expect("prime modulus");
        while r.len() >= m.len() {
            let shift = r.len() - m.len();
            let factor = mul_mod(*r.last().unwrap(), lead_inv, p);
            for (i, &c) in m.iter().enumerate() {
                let sub = mul_mod(factor, c, p);
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn pow_mod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1];
        let mut b = rem(base, m, p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            exp >>= 1;
        }
        acc
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^(p^n) = x (mod f)` and
/// `gcd(x^(p^(n/r)) - x, f) = 1` for every prime `r | n`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = poly::trim(f.to_vec());
    let n = f.len().saturating_sub(1);
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    // x^(p^k) mod f
    let frob = |k: usize| -> Vec<u64> {
        let mut acc = x.clone();
        for _ in 0..k {
            acc = poly::pow_mod(&acc, p, &f, p);
        }
        acc
    };
    if poly::sub(&frob(n), &x, p) != Vec::<u64>::new() {
        return false;
    }
    for r in prime_factors(n as u64) {
        let h = poly::sub(&frob(n / r as usize), &x, p);
        if poly::gcd(&h, &f, p).len() != 1 {
            return false;
        }
    }
    true
}

/// Least monic irreducible of degree `alpha`, comparing `c_0, c_1, ...` in turn.
fn least_irreducible(p: u64, alpha: usize) -> Vec<u64> {
    let total = p.pow(alpha as u32);
    for idx in 0..total {
        let mut f = vec![0u64; alpha + 1];
        let mut rest = idx;
        for slot in f[..alpha].iter_mut().rev() {
            *slot = rest % p;
            rest /= p;
        }
        f[alpha] = 1;
        if f[0] != 0 && is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
