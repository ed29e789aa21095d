//! Searches for generators whose congruence matrix `D` has a singular `(l-1)/2`-row minor.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, inv_mod, is_prime, pow_mod};
use crate::code::congruence::{build_congruence_system, check_row_subsets};
use crate::error::{Error, Result};
use crate::field::{generator_powers, FieldSpec, LogTable, DEFAULT_TABLE_BUDGET};
use crate::jacobi::jacobi_sum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Mds,
    Exception,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Mds => "mds",
            Status::Exception => "exception",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorPolicy {
    /// Only the canonical generator.
    First,
    /// Every `gamma^t` with `gcd(t, q - 1) = 1`.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub l: u64,
    pub p: u64,
    pub alpha: u32,
    /// Exponent `t` of the canonical generator; `None` when the whole field was skipped.
    pub generator_power: Option<u64>,
    /// Coefficients of `gamma^t`, colon-separated, or `*` for a skipped field.
    pub generator: String,
    pub status: Status,
    /// 0-based row sets whose minor vanishes mod `p`.
    pub dependent_subsets: Vec<Vec<usize>>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

pub type RecordKey = (u64, u64, u32, Option<u64>);

impl ScanRecord {
    pub fn key(&self) -> RecordKey {
        (self.l, self.p, self.alpha, self.generator_power)
    }

    fn skipped(l: u64, p: u64, alpha: u32, t: Option<u64>, generator: String, reason: String) -> Self {
        ScanRecord {
            l,
            p,
            alpha,
            generator_power: t,
            generator,
            status: Status::Skipped,
            dependent_subsets: Vec::new(),
            elapsed_ms: 0,
            reason: Some(reason),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub table_budget: u64,
    /// Fields whose Jacobi sum has not started by this point are recorded as skipped.
    pub deadline: Option<Duration>,
    /// Fill `elapsed_ms`; otherwise it is 0 so reports stay byte-stable.
    pub record_timing: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            table_budget: DEFAULT_TABLE_BUDGET,
            deadline: None,
            record_timing: false,
        }
    }
}

/// Primes `p = 1 (mod l)` in `[p_min, p_max]`.
pub fn scan_primes(l: u64, p_min: u64, p_max: u64) -> Vec<u64> {
    (p_min.max(2)..=p_max)
        .filter(|&p| p % l == 1 && is_prime(p))
        .collect()
}

pub fn scan(
    l: u64,
    p_min: u64,
    p_max: u64,
    alpha: u32,
    policy: GeneratorPolicy,
    options: &ScanOptions,
) -> Result<Vec<ScanRecord>> {
    if l < 3 || !is_prime(l) {
        return Err(Error::InvalidArgument(format!("l = {l} must be an odd prime")));
    }
    if alpha == 0 {
        return Err(Error::InvalidArgument("alpha must be at least 1".into()));
    }
    if p_min > p_max {
        return Err(Error::InvalidArgument(format!("empty range [{p_min}, {p_max}]")));
    }
    let start = Instant::now();
    let per_prime = scan_primes(l, p_min, p_max)
        .into_par_iter()
        .map(|p| scan_prime(l, p, alpha, policy, options, start))
        .collect::<Result<Vec<_>>>()?;
    let mut records: Vec<ScanRecord> = per_prime.into_iter().flatten().collect();
    records.sort_by_key(ScanRecord::key);
    Ok(records)
}

fn millis(d: Duration) -> u64 {
    d.as_millis().min(u64::MAX as u128) as u64
}

fn scan_prime(
    l: u64,
    p: u64,
    alpha: u32,
    policy: GeneratorPolicy,
    options: &ScanOptions,
    start: Instant,
) -> Result<Vec<ScanRecord>> {
    let spec = FieldSpec::new(p, alpha, l)?;
    let q = spec.q();
    if q > options.table_budget {
        let reason = format!("q = {q} exceeds table budget {}", options.table_budget);
        return Ok(vec![ScanRecord::skipped(l, p, alpha, None, "*".into(), reason)]);
    }
    if options.deadline.is_some_and(|d| start.elapsed() > d) {
        return Ok(vec![ScanRecord::skipped(l, p, alpha, None, "*".into(), "deadline reached".into())]);
    }
    let field_start = Instant::now();
    let table = LogTable::canonical(&spec, options.table_budget)?;
    let j = jacobi_sum(&table, 1, 1)?.value;
    let b = table.root_of_unity();
    let gamma = table.generator().clone();
    let mut shared_ms = millis(field_start.elapsed());

    let powers: Vec<u64> = match policy {
        GeneratorPolicy::First => vec![1],
        GeneratorPolicy::All => generator_powers(q).collect(),
    };
    let mut records = Vec::with_capacity(powers.len());
    for t in powers {
        let t_start = Instant::now();
        debug_assert_eq!(gcd(t, q - 1), 1);
        // chi for gamma^t is chi^(t^-1), so J moves to its sigma_(t^-1) conjugate
        let t_inv = inv_mod(t, q - 1).expect("t is a unit") % l;
        let j_t = j.conjugate(t_inv as usize)?;
        let b_t = pow_mod(b, t, p);
        let sys = build_congruence_system(&j_t, p, b_t)?;
        let dependent = check_row_subsets(&sys);
        let generator = spec.pow(&gamma, t)?.canonical();
        let elapsed_ms = if options.record_timing {
            millis(t_start.elapsed()) + std::mem::take(&mut shared_ms)
        } else {
            0
        };
        records.push(ScanRecord {
            l,
            p,
            alpha,
            generator_power: Some(t),
            generator,
            status: if dependent.is_empty() {
                Status::Mds
            } else {
                Status::Exception
            },
            dependent_subsets: dependent,
            elapsed_ms,
            reason: None,
        });
    }
    Ok(records)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionEntry {
    pub l: u64,
    pub p: u64,
    pub alpha: u32,
    pub generator_power: Option<u64>,
    pub generator: String,
    pub dependent_subsets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub mds: usize,
    pub exception: usize,
    pub skipped: usize,
    pub exceptions: Vec<ExceptionEntry>,
}

impl Summary {
    pub fn of(records: &[ScanRecord]) -> Self {
        let mut s = Summary {
            total: records.len(),
            ..Summary::default()
        };
        for r in records {
            match r.status {
                Status::Mds => s.mds += 1,
                Status::Skipped => s.skipped += 1,
                Status::Exception => {
                    s.exception += 1;
                    s.exceptions.push(ExceptionEntry {
                        l: r.l,
                        p: r.p,
                        alpha: r.alpha,
                        generator_power: r.generator_power,
                        generator: r.generator.clone(),
                        dependent_subsets: r.dependent_subsets.clone(),
                    });
                }
            }
        }
        s
    }
}

fn subsets_string(s: &[Vec<usize>]) -> String {
    serde_json::to_string(s).expect("plain data")
}

/// Serializes sorted records and their summary.
pub fn report(records: &[ScanRecord], format: ReportFormat) -> Result<(String, Summary)> {
    let mut sorted = records.to_vec();
    sorted.sort_by_key(ScanRecord::key);
    let summary = Summary::of(&sorted);
    let out = match format {
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                records: &'a [ScanRecord],
                summary: &'a Summary,
            }
            let mut s = serde_json::to_string_pretty(&Doc {
                records: &sorted,
                summary: &summary,
            })?;
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["l", "p", "alpha", "generator", "status", "dependent_subsets", "elapsed_ms"])?;
            for r in &sorted {
                w.write_record([
                    r.l.to_string(),
                    r.p.to_string(),
                    r.alpha.to_string(),
                    r.generator.clone(),
                    r.status.as_str().to_string(),
                    subsets_string(&r.dependent_subsets),
                    r.elapsed_ms.to_string(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).expect("csv writes utf-8")
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &sorted {
                let t = r.generator_power.map_or("*".to_string(), |t| t.to_string());
                write!(
                    s,
                    "l={} p={} alpha={} t={} generator={} {}",
                    r.l,
                    r.p,
                    r.alpha,
                    t,
                    r.generator,
                    r.status.as_str()
                )
                .unwrap();
                if !r.dependent_subsets.is_empty() {
                    write!(s, " dependent={}", subsets_string(&r.dependent_subsets)).unwrap();
                }
                if let Some(reason) = &r.reason {
                    write!(s, " ({reason})").unwrap();
                }
                s.push('\n');
            }
            writeln!(
                s,
                "total={} mds={} exception={} skipped={}",
                summary.total, summary.mds, summary.exception, summary.skipped
            )
            .unwrap();
            s
        }
    };
    Ok((out, summary))
}

/// Scan results persisted as JSON, keyed by `(l, p, alpha, t)`.
#[derive(Debug, Clone)]
pub struct ResultsStore {
    path: PathBuf,
    records: BTreeMap<RecordKey, ScanRecord>,
}

impl ResultsStore {
    /// Opens `path`, starting empty if the file does not exist.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let records = match std::fs::read_to_string(&path) {
            Ok(text) => serde_json::from_str::<Vec<ScanRecord>>(&text)?
                .into_iter()
                .map(|r| (r.key(), r))
                .collect(),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(e.into()),
        };
        Ok(ResultsStore { path, records })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn records(&self) -> Vec<ScanRecord> {
        self.records.values().cloned().collect()
    }

    /// Adds new keys; a completed record may replace a skipped one but never the reverse.
    /// Returns the number of records added or replaced.
    pub fn merge(&mut self, new: &[ScanRecord]) -> usize {
        let mut changed = 0;
        for r in new {
            match self.records.get(&r.key()) {
                Some(old) if old.status != Status::Skipped || r.status == Status::Skipped => {}
                _ => {
                    self.records.insert(r.key(), r.clone());
                    changed += 1;
                }
            }
        }
        changed
    }

    /// Writes to a sibling temporary file, then renames it over the target.
    pub fn save(&self) -> Result<()> {
        let dir = match self.path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
            _ => PathBuf::from("."),
        };
        std::fs::create_dir_all(&dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&dir)?;
        let body = serde_json::to_string_pretty(&self.records())?;
        tmp.write_all(body.as_bytes())?;
        tmp.write_all(b"\n")?;
        tmp.as_file().sync_all()?;
        tmp.persist(&self.path).map_err(|e| Error::Io(e.to_string()))?;
        Ok(())
    }
}
