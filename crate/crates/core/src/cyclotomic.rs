//! Exact arithmetic in `Z[zeta_l]` for an odd prime `l`.
//!
//! An element is stored as `(c_1, ..., c_{l-1})` meaning `sum c_i zeta^i`. The
//! relation `1 + zeta + ... + zeta^(l-1) = 0` lets every element be written with a
//! zero constant coordinate, and that representation is unique.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::is_prime;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    l: usize,
    coeffs: Vec<BigInt>,
}

fn check_order(l: usize) -> Result<()> {
    if l < 3 || !is_prime(l as u64) {
        return Err(Error::InvalidArgument(format!("l = {l} is not an odd prime")));
    }
    Ok(())
}

impl CycInt {
    /// Element with coordinates `(c_1, ..., c_{l-1})`.
    pub fn new(l: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        check_order(l)?;
        if coeffs.len() != l - 1 {
            return Err(Error::InvalidLength {
                expected: l - 1,
                found: coeffs.len(),
            });
        }
        Ok(CycInt { l, coeffs })
    }

    pub fn from_i64(l: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(l, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Reduces `sum_{i=0}^{l-1} raw_i zeta^i` to normal form by subtracting `raw_0`.
    pub fn normalize(l: usize, raw: &[BigInt]) -> Result<Self> {
        check_order(l)?;
        if raw.len() != l {
            return Err(Error::InvalidLength {
                expected: l,
                found: raw.len(),
            });
        }
        let c0 = &raw[0];
        Ok(CycInt {
            l,
            coeffs: raw[1..].iter().map(|c| c - c0).collect(),
        })
    }

    pub fn normalize_i64(l: usize, raw: &[i64]) -> Result<Self> {
        let raw: Vec<BigInt> = raw.iter().map(|&c| BigInt::from(c)).collect();
        Self::normalize(l, &raw)
    }

    pub fn zero(l: usize) -> Self {
        CycInt {
            l,
            coeffs: vec![BigInt::zero(); l - 1],
        }
    }

    /// The rational integer `n`, i.e. `(-n, ..., -n)`.
    pub fn from_integer(l: usize, n: impl Into<BigInt>) -> Self {
        let n = n.into();
        CycInt {
            l,
            coeffs: vec![-n; l - 1],
        }
    }

    pub fn one(l: usize) -> Self {
        Self::from_integer(l, 1)
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(l: usize, k: i64) -> Self {
        let mut raw = vec![BigInt::zero(); l];
        raw[k.rem_euclid(l as i64) as usize] = BigInt::one();
        Self::normalize(l, &raw).expect("valid order")
    }

    pub fn order(&self) -> usize {
        self.l
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as machine integers, when they all fit.
    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    /// Coordinate of `zeta^i`, `i` taken mod `l` (zero for `i = 0`).
    pub fn coeff(&self, i: usize) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        match i % self.l {
            0 => ZERO.get_or_init(BigInt::zero),
            j => &self.coeffs[j - 1],
        }
    }

    /// Length-`l` vector with a zero constant slot.
    pub fn to_full(&self) -> Vec<BigInt> {
        std::iter::once(BigInt::zero())
            .chain(self.coeffs.iter().cloned())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_order(&self, other: &CycInt) -> Result<()> {
        if self.l != other.l {
            return Err(Error::OrderMismatch {
                left: self.l,
                right: other.l,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycInt) -> Result<CycInt> {
        self.same_order(other)?;
        Ok(CycInt {
            l: self.l,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.same_order(other)?;
        Ok(CycInt {
            l: self.l,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.same_order(other)?;
        let l = self.l;
        let mut raw = vec![BigInt::zero(); l];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                raw[(i + j + 2) % l] += a * b;
            }
        }
        Self::normalize(l, &raw)
    }

    pub fn scale(&self, k: &BigInt) -> CycInt {
        CycInt {
            l: self.l,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// `sigma_i(zeta) = zeta^i`: the coordinate of `zeta^j` moves to `zeta^(ij mod l)`.
    pub fn conjugate(&self, i: usize) -> Result<CycInt> {
        let l = self.l;
        if i % l == 0 {
            return Err(Error::InvalidConjugation { index: i, l });
        }
        let mut raw = vec![BigInt::zero(); l];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(i * (j + 1)) % l] = c.clone();
        }
        Self::normalize(l, &raw)
    }

    /// Complex conjugate, `sigma_{l-1}`.
    pub fn bar(&self) -> CycInt {
        self.conjugate(self.l - 1).expect("l - 1 is a unit mod l")
    }

    /// The rational integer `n` when the element equals `n`.
    pub fn as_rational(&self) -> Option<BigInt> {
        let first = &self.coeffs[0];
        self.coeffs
            .iter()
            .all(|c| c == first)
            .then(|| -first)
    }

    /// `x * conj(x)` when that product is rational.
    pub fn abs_square(&self) -> Option<BigInt> {
        self.checked_mul(&self.bar())
            .expect("same order")
            .as_rational()
    }

    /// Image under `Z[zeta]/(1 - zeta) = Z/l`.
    pub fn residue_mod_lambda(&self) -> u64 {
        let sum: BigInt = self.coeffs.iter().sum();
        sum.mod_floor(&BigInt::from(self.l)).to_u64().unwrap()
    }

    /// Exact quotient by `1 - zeta`, using `l / (1 - zeta) = prod_{i=2}^{l-1} (1 - zeta^i)`.
    pub fn divide_by_lambda(&self) -> Result<CycInt> {
        if self.residue_mod_lambda() != 0 {
            return Err(Error::NotDivisible(format!(
                "{self} is not divisible by (1 - zeta_{})",
                self.l
            )));
        }
        let l = self.l;
        let one = CycInt::one(l);
        let cofactor = (2..l).fold(one.clone(), |acc, i| {
            &acc * &(&one - &CycInt::zeta_pow(l, i as i64))
        });
        let scaled = self * &cofactor;
        let l_big = BigInt::from(l);
        let mut coeffs = Vec::with_capacity(l - 1);
        for c in scaled.coeffs {
            let (quot, rem) = c.div_rem(&l_big);
            if !rem.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "quotient of {self} by (1 - zeta_{l}) is not integral"
                )));
            }
            coeffs.push(quot);
        }
        Ok(CycInt { l, coeffs })
    }

    /// Whether `(1 - zeta)^k` divides the element.
    pub fn divisible_by_lambda_power(&self, k: u32) -> bool {
        let mut x = self.clone();
        for _ in 0..k {
            if x.is_zero() {
                return true;
            }
            match x.divide_by_lambda() {
                Ok(y) => x = y,
                Err(_) => return false,
            }
        }
        true
    }

    /// Divisibility by a rational integer: every normal-form coordinate is a multiple.
    pub fn divisible_by(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.coeffs.iter().all(|c| c.is_multiple_of(&p))
    }

    /// Numerical value at `zeta = exp(2 pi i / l)` as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let l = self.l as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (j, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let theta = 2.0 * std::f64::consts::PI * (j + 1) as f64 / l;
                (re + c * theta.cos(), im + c * theta.sin())
            })
    }
}

/// Multiply an index vector by a unit: the `i`-th output is `(a_{i*1}, ..., a_{i*(l-1)})`.
pub fn index_permutation<T: Clone>(a: &[T], i: usize) -> Vec<T> {
    let l = a.len() + 1;
    (1..l).map(|j| a[(i * j) % l - 1].clone()).collect()
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.checked_add(rhs).expect("cyclotomic orders differ")
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.checked_sub(rhs).expect("cyclotomic orders differ")
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.checked_mul(rhs).expect("cyclotomic orders differ")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            l: self.l,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|d| DIGITS[d.to_digit(10).unwrap() as usize])
        .collect()
}

/// Renders as `-6ζ² + 3ζ³ + 2ζ⁴`, skipping zero coordinates.
impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = if j == 0 { String::new() } else { superscript(j + 1) };
            let mag = c.abs();
            let mag = if mag.is_one() { String::new() } else { mag.to_string() };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{mag}ζ{power}")?,
                (true, false) => write!(f, "{mag}ζ{power}")?,
                (false, true) => write!(f, " - {mag}ζ{power}")?,
                (false, false) => write!(f, " + {mag}ζ{power}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// JSON form `[c_1, ..., c_{l-1}]`; coordinates beyond `i64` are written as strings.
impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for CycInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coord {
            Int(i64),
            Text(String),
        }
        let raw = Vec::<Coord>::deserialize(d)?;
        let coeffs = raw
            .into_iter()
            .map(|c| match c {
                Coord::Int(v) => Ok(BigInt::from(v)),
                Coord::Text(t) => t.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CycInt::new(coeffs.len() + 1, coeffs).map_err(serde::de::Error::custom)
    }
}
