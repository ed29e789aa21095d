//! Linear codes over the prime subfield: MDS checks, systematic form, encoding and
//! single-error syndrome decoding.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{inv_mod, mul_mod};
use crate::code::congruence::CongruenceSystem;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{subsets, ModMatrix};

/// Exhaustive minimum-distance search is capped at this many codewords.
pub const EXHAUSTIVE_CODEWORD_CAP: u64 = 1 << 24;
/// Random codeword pairs drawn when exhaustive search is not used.
pub const DISTANCE_SAMPLES: usize = 1000;
const DISTANCE_SEED: u64 = 0x5eed_d15c;

/// `D^t`, a `(l-1)/2 x (l-1)` generator matrix.
pub fn build_generator_matrix(sys: &CongruenceSystem) -> ModMatrix {
    sys.d.transpose()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceCheck {
    pub distance: usize,
    /// `false` when the value is an upper bound from sampling.
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsReport {
    pub mds: bool,
    /// First dependent column subset (0-based), if any.
    pub witness: Option<Vec<usize>>,
    pub distance: Option<DistanceCheck>,
}

fn require_full_rank(g: &ModMatrix) -> Result<()> {
    let rank = g.rank();
    if rank != g.nrows() {
        return Err(Error::RankDeficient {
            rank,
            expected: g.nrows(),
        });
    }
    Ok(())
}

/// Every `k` columns of `G` independent mod `p`, plus a minimum-distance cross-check for `n <= 8`.
pub fn is_mds(g: &ModMatrix) -> Result<MdsReport> {
    require_full_rank(g)?;
    let (k, n) = (g.nrows(), g.ncols());
    let witness = subsets(n, k)
        .into_iter()
        .find(|cols| g.select_cols(cols).det().expect("square") == 0);
    let distance = (n <= 8).then(|| {
        if g.p() <= 100 {
            minimum_distance(g)
        } else {
            sampled_distance(g, DISTANCE_SAMPLES, DISTANCE_SEED)
        }
    });
    Ok(MdsReport {
        mds: witness.is_none(),
        witness,
        distance,
    })
}

/// Every `n - k` columns of a parity-check matrix independent.
pub fn is_mds_parity(h: &ModMatrix) -> bool {
    let (r, n) = (h.nrows(), h.ncols());
    subsets(n, r)
        .into_iter()
        .all(|cols| h.select_cols(&cols).det().expect("square") != 0)
}

fn weight(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Minimum weight over all nonzero messages in `F_p^k`, exhaustive up to the cap.
pub fn minimum_distance(g: &ModMatrix) -> DistanceCheck {
    let (k, p) = (g.nrows(), g.p());
    let total = (p as u128).pow(k as u32);
    if total > EXHAUSTIVE_CODEWORD_CAP as u128 {
        return sampled_distance(g, DISTANCE_SAMPLES, DISTANCE_SEED);
    }
    let mut best = g.ncols();
    let mut m = vec![0u64; k];
    for _ in 1..total {
        // odometer increment
        for digit in m.iter_mut() {
            *digit += 1;
            if *digit == p {
                *digit = 0;
            } else {
                break;
            }
        }
        let c = g.left_mul_vec(&m).expect("length k");
        best = best.min(weight(&c));
    }
    DistanceCheck {
        distance: best,
        exhaustive: true,
    }
}

/// Minimum distance between random pairs of distinct codewords.
pub fn sampled_distance(g: &ModMatrix, samples: usize, seed: u64) -> DistanceCheck {
    let (k, p) = (g.nrows(), g.p());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = g.ncols();
    let mut drawn = 0;
    while drawn < samples {
        let m1: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let m2: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        if m1 == m2 {
            continue;
        }
        let c1 = g.left_mul_vec(&m1).expect("length k");
        let c2 = g.left_mul_vec(&m2).expect("length k");
        let dist = c1.iter().zip(&c2).filter(|(a, b)| a != b).count();
        best = best.min(dist);
        drawn += 1;
    }
    DistanceCheck {
        distance: best,
        exhaustive: false,
    }
}

/// `G' = Y^{-1} G = [I_k | P]` for the leading `k x k` block `Y`, and `H = [-P^t | I_{n-k}]`.
pub fn to_standard_form(g: &ModMatrix) -> Result<(ModMatrix, ModMatrix)> {
    let (k, n, p) = (g.nrows(), g.ncols(), g.p());
    let y = g.select_cols(&(0..k).collect::<Vec<_>>());
    let y_inv = y
        .inverse()
        .map_err(|_| Error::Singular(format!("leading {k}x{k} block of G mod {p}")))?;
    let standard = y_inv.mul(g)?;
    let parity = standard.select_cols(&(k..n).collect::<Vec<_>>());
    let h_rows = (0..n - k)
        .map(|i| {
            (0..k)
                .map(|j| (p - parity.get(j, i)) % p)
                .chain((0..n - k).map(|j| u64::from(i == j)))
                .collect()
        })
        .collect();
    Ok((standard, ModMatrix::new(p, h_rows)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearCode {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub p: u64,
    /// The code is read over `F_{p^alpha}`; all matrices have entries in `F_p`.
    pub alpha: u32,
    pub generator: ModMatrix,
    pub standard: ModMatrix,
    pub parity_check: ModMatrix,
}

/// Result of a successful decode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decoded {
    pub received: Vec<u64>,
    pub syndrome: Vec<u64>,
    /// `(position, magnitude)` of the corrected error, `None` for a codeword.
    pub location: Option<(usize, u64)>,
    pub error: Vec<u64>,
    pub codeword: Vec<u64>,
    /// Information symbols, the first `k` coordinates of the systematic codeword.
    pub message: Vec<u64>,
}

impl LinearCode {
    pub fn from_generator(g: ModMatrix, alpha: u32) -> Result<Self> {
        let report = is_mds(&g)?;
        let (standard, parity_check) = to_standard_form(&g)?;
        let (k, n) = (g.nrows(), g.ncols());
        let d = if report.mds {
            n - k + 1
        } else {
            report
                .distance
                .clone()
                .unwrap_or_else(|| minimum_distance(&g))
                .distance
        };
        Ok(LinearCode {
            n,
            k,
            d,
            p: g.p(),
            alpha,
            generator: g,
            standard,
            parity_check,
        })
    }

    pub fn from_system(sys: &CongruenceSystem, alpha: u32) -> Result<Self> {
        Self::from_generator(build_generator_matrix(sys), alpha)
    }

    pub fn is_mds(&self) -> bool {
        self.d == self.n - self.k + 1
    }

    /// Columns of `H`: an error of size `e` at position `i` has syndrome `e * pattern[i]`.
    pub fn syndrome_patterns(&self) -> Vec<Vec<u64>> {
        self.parity_check.transpose().rows().to_vec()
    }

    /// `m G'` with the systematic generator.
    pub fn encode(&self, m: &[u64]) -> Result<Vec<u64>> {
        self.standard.left_mul_vec(m)
    }

    pub fn syndrome(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.n {
            return Err(Error::InvalidLength {
                expected: self.n,
                found: v.len(),
            });
        }
        self.parity_check.transpose().left_mul_vec(v)
    }

    /// The position and size of a single error with syndrome `s`, if one exists.
    fn locate(&self, s: &[u64]) -> Option<(usize, u64)> {
        let p = self.p;
        self.syndrome_patterns()
            .iter()
            .enumerate()
            .find_map(|(i, h)| {
                let lead = h.iter().position(|&x| x != 0)?;
                let e = mul_mod(s[lead], inv_mod(h[lead], p)?, p);
                (e != 0 && h.iter().zip(s).all(|(&hx, &sx)| mul_mod(e, hx, p) == sx))
                    .then_some((i, e))
            })
    }

    /// Corrects at most one symbol error.
    pub fn decode_single_error(&self, v: &[u64]) -> Result<Decoded> {
        if self.d < 3 {
            return Err(Error::InvalidArgument(format!(
                "a code with d = {} cannot correct errors",
                self.d
            )));
        }
        let p = self.p;
        let v: Vec<u64> = v.iter().map(|&x| x % p).collect();
        let syndrome = self.syndrome(&v)?;
        let mut error = vec![0u64; self.n];
        let location = if syndrome.iter().all(|&x| x == 0) {
            None
        } else {
            let loc = self
                .locate(&syndrome)
                .ok_or_else(|| Error::BeyondCorrectionRadius {
                    syndrome: syndrome.clone(),
                })?;
            error[loc.0] = loc.1;
            Some(loc)
        };
        let codeword: Vec<u64> = v
            .iter()
            .zip(&error)
            .map(|(&x, &e)| (x + p - e) % p)
            .collect();
        Ok(Decoded {
            received: v,
            syndrome,
            location,
            error,
            message: codeword[..self.k].to_vec(),
            codeword,
        })
    }

    fn split(&self, field: &FieldSpec, v: &[FieldElement], len: usize) -> Result<Vec<Vec<u64>>> {
        if field.p() != self.p || field.alpha() != self.alpha {
            return Err(Error::FieldMismatch {
                left: self.p.pow(self.alpha),
                right: field.q(),
            });
        }
        if v.len() != len {
            return Err(Error::InvalidLength {
                expected: len,
                found: v.len(),
            });
        }
        Ok((0..self.alpha as usize)
            .map(|c| v.iter().map(|x| x.coeffs()[c]).collect())
            .collect())
    }

    fn join(field: &FieldSpec, parts: &[Vec<u64>]) -> Result<Vec<FieldElement>> {
        let len = parts.first().map_or(0, Vec::len);
        (0..len)
            .map(|i| field.element(&parts.iter().map(|row| row[i]).collect::<Vec<_>>()))
            .collect()
    }

    /// Encodes a message over `F_q`; the matrices act on each basis coordinate separately.
    pub fn encode_over(&self, field: &FieldSpec, m: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let parts = self
            .split(field, m, self.k)?
            .iter()
            .map(|part| self.encode(part))
            .collect::<Result<Vec<_>>>()?;
        Self::join(field, &parts)
    }

    /// Single-error decoding over `F_q`: each coordinate syndrome is a multiple of the same column of `H`.
    pub fn decode_over(
        &self,
        field: &FieldSpec,
        v: &[FieldElement],
    ) -> Result<(Vec<FieldElement>, Vec<FieldElement>)> {
        if self.d < 3 {
            return Err(Error::InvalidArgument(format!(
                "a code with d = {} cannot correct errors",
                self.d
            )));
        }
        let p = self.p;
        let parts = self.split(field, v, self.n)?;
        let syndromes = parts
            .iter()
            .map(|part| self.syndrome(part))
            .collect::<Result<Vec<_>>>()?;
        let mut errors = vec![vec![0u64; self.n]; parts.len()];
        if syndromes.iter().any(|s| s.iter().any(|&x| x != 0)) {
            let patterns = self.syndrome_patterns();
            let position = (0..self.n).find(|&i| {
                let h = &patterns[i];
                syndromes.iter().all(|s| {
                    s.iter().all(|&x| x == 0) || self.locate_at(h, s).is_some()
                })
            });
            let flat: Vec<u64> = syndromes.iter().flatten().copied().collect();
            let i = position.ok_or(Error::BeyondCorrectionRadius { syndrome: flat })?;
            for (c, s) in syndromes.iter().enumerate() {
                if let Some(e) = self.locate_at(&patterns[i], s) {
                    errors[c][i] = e;
                }
            }
        }
        let corrected: Vec<Vec<u64>> = parts
            .iter()
            .zip(&errors)
            .map(|(x, e)| x.iter().zip(e).map(|(&a, &b)| (a + p - b) % p).collect())
            .collect();
        Ok((Self::join(field, &corrected)?, Self::join(field, &errors)?))
    }

    fn locate_at(&self, h: &[u64], s: &[u64]) -> Option<u64> {
        let p = self.p;
        let lead = h.iter().position(|&x| x != 0)?;
        let e = mul_mod(s[lead], inv_mod(h[lead], p)?, p);
        (e != 0 && h.iter().zip(s).all(|(&hx, &sx)| mul_mod(e, hx, p) == sx)).then_some(e)
    }
}
