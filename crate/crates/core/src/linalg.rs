//! Dense matrices over `F_p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{inv_mod, mul_mod, residue};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    p: u64,
    rows: Vec<Vec<u64>>,
}

/// Row-major JSON layout: `{"p": .., "k": rows, "n": columns, "rows": [[..], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub p: u64,
    pub k: usize,
    pub n: usize,
    pub rows: Vec<Vec<u64>>,
}

impl ModMatrix {
    pub fn new(p: u64, rows: Vec<Vec<u64>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x % p).collect())
            .collect();
        Ok(ModMatrix { p, rows })
    }

    pub fn from_i64(p: u64, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            p,
            rows.iter()
                .map(|r| r.iter().map(|&x| residue(x, p)).collect())
                .collect(),
        )
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        ModMatrix { p, rows }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn transpose(&self) -> ModMatrix {
        let rows = (0..self.ncols())
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        ModMatrix { p: self.p, rows }
    }

    pub fn mul(&self, other: &ModMatrix) -> Result<ModMatrix> {
        if self.ncols() != other.nrows() || self.p != other.p {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let p = self.p;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.ncols())
                    .map(|j| {
                        r.iter()
                            .zip(&other.rows)
                            .fold(0, |acc, (&x, o)| (acc + mul_mod(x, o[j], p)) % p)
                    })
                    .collect()
            })
            .collect();
        Ok(ModMatrix { p, rows })
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.nrows() {
            return Err(Error::InvalidLength {
                expected: self.nrows(),
                found: v.len(),
            });
        }
        let p = self.p;
        Ok((0..self.ncols())
            .map(|j| {
                v.iter()
                    .zip(&self.rows)
                    .fold(0, |acc, (&x, r)| (acc + mul_mod(x % p, r[j], p)) % p)
            })
            .collect())
    }

    pub fn select_rows(&self, idx: &[usize]) -> ModMatrix {
        ModMatrix {
            p: self.p,
            rows: idx.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> ModMatrix {
        ModMatrix {
            p: self.p,
            rows: self
                .rows
                .iter()
                .map(|r| idx.iter().map(|&j| r[j]).collect())
                .collect(),
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (ModMatrix, Vec<usize>) {
        let p = self.p;
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols() {
            let Some(piv) = (row..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, piv);
            let inv = inv_mod(m[row][col], p).expect("nonzero mod prime");
            for x in m[row].iter_mut() {
                *x = mul_mod(*x, inv, p);
            }
            for r in 0..m.len() {
                if r != row && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in 0..m[r].len() {
                        let sub = mul_mod(f, m[row][c], p);
                        m[r][c] = (m[r][c] + p - sub) % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        (ModMatrix { p, rows: m }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Result<u64> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
        }
        let p = self.p;
        let mut m = self.rows.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else {
                return Ok(0);
            };
            if piv != col {
                m.swap(piv, col);
                det = (p - det) % p;
            }
            det = mul_mod(det, m[col][col], p);
            let inv = inv_mod(m[col][col], p).expect("nonzero mod prime");
            for r in col + 1..n {
                if m[r][col] != 0 {
                    let f = mul_mod(m[r][col], inv, p);
                    for c in col..n {
                        let sub = mul_mod(f, m[col][c], p);
                        m[r][c] = (m[r][c] + p - sub) % p;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<ModMatrix> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::InvalidArgument("inverse of a non-square matrix".into()));
        }
        let augmented = ModMatrix {
            p: self.p,
            rows: self
                .rows
                .iter()
                .zip(ModMatrix::identity(self.p, n).rows)
                .map(|(r, e)| r.iter().copied().chain(e).collect())
                .collect(),
        };
        let (reduced, pivots) = augmented.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} block mod {}", self.p)));
        }
        Ok(reduced.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// Basis of `{x : self * x = 0}`, returned as rows.
    pub fn null_space(&self) -> ModMatrix {
        let p = self.p;
        let (r, pivots) = self.rref();
        let n = self.ncols();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - r.rows[i][f]) % p;
                }
                v
            })
            .collect();
        ModMatrix { p, rows }
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            p: self.p,
            k: self.nrows(),
            n: self.ncols(),
            rows: self.rows.clone(),
        }
    }

    pub fn from_json(m: &MatrixJson) -> Result<Self> {
        if m.rows.len() != m.k || m.rows.iter().any(|r| r.len() != m.n) {
            return Err(Error::InvalidArgument("matrix shape disagrees with k, n".into()));
        }
        Self::new(m.p, m.rows.clone())
    }
}

/// Parenthesized layout with right-aligned columns.
impl Serialize for ModMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = MatrixJson::deserialize(d)?;
        ModMatrix::from_json(&m).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        let n = self.rows.len();
        for (i, r) in self.rows.iter().enumerate() {
            let (open, close) = match (n, i) {
                (1, _) => ('(', ')'),
                (_, 0) => ('⎛', '⎞'),
                (_, i) if i == n - 1 => ('⎝', '⎠'),
                _ => ('⎜', '⎟'),
            };
            let body: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
            write!(f, "{open} {} {close}", body.join("  "))?;
            if i + 1 < n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
