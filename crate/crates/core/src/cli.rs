//! Command-line front end shared by the `jmds` binary and the integration tests.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime};
use crate::code::congruence::{build_congruence_system, check_row_subsets, CongruenceSystem};
use crate::code::determinants::determinant_suite;
use crate::code::linear::{is_mds, Decoded, LinearCode, MdsReport};
use crate::cyclotomic::CycInt;
use crate::diophantine::{solve_dickson, solve_gauss, Parametrization, Selection};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, LogTable, DEFAULT_TABLE_BUDGET};
use crate::jacobi::jacobi_sum;
use crate::linalg::ModMatrix;
use crate::scanner::{report, scan, GeneratorPolicy, ReportFormat, ResultsStore, ScanOptions};

/// Default directory for persisted scan results.
pub const RESULTS_DIR_ENV: &str = "JMDS_RESULTS_DIR";

const EXAMPLE_DATA: &str = include_str!("../data/example_p61.json");

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const BUDGET: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(name = "jmds", version, about = "Jacobi sums, Gauss and Dickson systems, and the MDS codes built from them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Generators {
    First,
    All,
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Characteristic
    #[arg(long)]
    p: u64,
    /// Extension degree, q = p^alpha
    #[arg(long, default_value_t = 1)]
    alpha: u32,
    /// Use gamma^t instead of the canonical generator gamma
    #[arg(long, default_value_t = 1)]
    generator_power: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest q for which a log table is built
    #[arg(long, default_value_t = DEFAULT_TABLE_BUDGET)]
    table_budget: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print J(i, j) for the character of order l
    Jacobi {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        l: u64,
        #[arg(long, default_value_t = 1)]
        i: u64,
        #[arg(long, default_value_t = 1)]
        j: u64,
    },
    /// Solve 4q = L^2 + 27M^2 and select the solution attached to the generator
    Gauss {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Solve the Dickson system and select the solution attached to the generator
    Dickson {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Build, encode with, or decode with the code of D^t
    #[command(subcommand)]
    Code(CodeCommand),
    /// Search for generators whose D has a singular minor
    Scan {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        p_min: u64,
        #[arg(long)]
        p_max: u64,
        #[arg(long, default_value_t = 1)]
        alpha: u32,
        #[arg(long, value_enum, default_value_t = Generators::First)]
        generators: Generators,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_TABLE_BUDGET)]
        table_budget: u64,
        /// Results file; merged idempotently with earlier runs
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for the results file when --out is absent
        #[arg(long, env = RESULTS_DIR_ENV)]
        results_dir: Option<PathBuf>,
        /// Stop starting new fields after this many seconds
        #[arg(long)]
        deadline_secs: Option<u64>,
        /// Record wall-clock times (reports are then no longer byte-stable)
        #[arg(long)]
        timing: bool,
    },
    /// Rebuild the p = 61 worked example and check every displayed value
    VerifyExample {
        /// Alternative expected-values file
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct CodeArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, default_value_t = 5)]
    l: u64,
}

#[derive(Debug, Subcommand)]
enum CodeCommand {
    /// Print D, G, G', H and the syndrome coefficients
    Build(CodeArgs),
    /// Encode information symbols with the systematic generator
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Comma-separated symbols in [0, p)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        message: Vec<i64>,
    },
    /// Correct a single symbol error
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// Comma-separated symbols in [0, p)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        word: Vec<i64>,
    },
}

/// Maps an error to the documented exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TableBudget { .. } => exit::BUDGET,
        Error::InvalidArgument(_)
        | Error::InvalidField(_)
        | Error::InvalidLength { .. }
        | Error::NotInPrimeSubfield
        | Error::InvalidConjugation { .. } => exit::USAGE,
        _ => exit::FAILURE,
    }
}

/// Parses `args` (program name first), writes results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::SUCCESS };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn no_csv(format: Format, command: &str) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::InvalidArgument(format!("--format csv is only available for scan, not {command}")));
    }
    Ok(())
}

/// A field together with the generator chosen on the command line.
struct Setup {
    spec: FieldSpec,
    table: LogTable,
    t: u64,
}

impl Setup {
    fn new(field: &FieldArgs, l: u64) -> Result<Self> {
        if !is_prime(field.p) {
            return Err(Error::InvalidArgument(format!("p = {} is not prime", field.p)));
        }
        let spec = FieldSpec::new(field.p, field.alpha, l)?;
        let q = spec.q();
        let t = field.generator_power;
        if t == 0 || gcd(t, q - 1) != 1 {
            return Err(Error::InvalidArgument(format!(
                "gamma^{t} is not a generator: gcd({t}, {}) != 1",
                q - 1
            )));
        }
        let canonical = LogTable::canonical(&spec, field.table_budget)?;
        let table = if t == 1 {
            canonical
        } else {
            let g = spec.pow(canonical.generator(), t)?;
            LogTable::build(&spec, &g, field.table_budget)?
        };
        Ok(Setup { spec, table, t })
    }

    fn generator(&self) -> &FieldElement {
        self.table.generator()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiOutput {
    pub p: u64,
    pub alpha: u32,
    pub q: u64,
    pub l: u64,
    pub i: u64,
    pub j: u64,
    pub generator_power: u64,
    pub generator: String,
    pub b: u64,
    /// Coefficients of `zeta, ..., zeta^(l-1)`.
    pub value: CycInt,
    pub display: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionsOutput<S> {
    pub p: u64,
    pub alpha: u32,
    pub q: u64,
    pub generator_power: u64,
    pub generator: String,
    pub solutions: Vec<S>,
    pub selected: Selection<S>,
    /// `J(1, 1)` computed directly, for comparison with the selected coordinates.
    pub jacobi: CycInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeOutput {
    pub p: u64,
    pub alpha: u32,
    pub l: u64,
    pub generator_power: u64,
    pub generator: String,
    pub b: u64,
    pub jacobi: CycInt,
    pub d: ModMatrix,
    pub rhs: Vec<u64>,
    pub dependent_subsets: Vec<Vec<usize>>,
    pub mds: MdsReport,
    pub code: LinearCode,
    /// `(A1, A2, A3, A4)`, order 5 only.
    pub syndrome_coefficients: Option<[u64; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodeOutput {
    pub message: Vec<u64>,
    pub codeword: Vec<u64>,
}

struct Pipeline {
    setup: Setup,
    j: CycInt,
    b: u64,
    sys: CongruenceSystem,
}

fn pipeline(field: &FieldArgs, l: u64) -> Result<Pipeline> {
    let setup = Setup::new(field, l)?;
    let j = jacobi_sum(&setup.table, 1, 1)?.value;
    let b = setup.table.root_of_unity();
    let sys = build_congruence_system(&j, setup.spec.p(), b)?;
    Ok(Pipeline { setup, j, b, sys })
}

fn build_code(args: &CodeArgs) -> Result<(Pipeline, CodeOutput)> {
    let pl = pipeline(&args.field, args.l)?;
    let g = pl.sys.d.transpose();
    let mds = is_mds(&g)?;
    let code = LinearCode::from_generator(g, args.field.alpha)?;
    let syndrome_coefficients = if args.l == 5 {
        let a: Vec<i64> = pl.j.coeffs_i64().ok_or_else(|| Error::Integrity("J does not fit in i64".into()))?;
        let suite = determinant_suite([a[0], a[1], a[2], a[3]], pl.setup.spec.p(), pl.b)?;
        Some(suite.syndrome_coefficients()?)
    } else {
        None
    };
    let output = CodeOutput {
        p: pl.setup.spec.p(),
        alpha: pl.setup.spec.alpha(),
        l: args.l,
        generator_power: pl.setup.t,
        generator: pl.setup.generator().canonical(),
        b: pl.b,
        jacobi: pl.j.clone(),
        d: pl.sys.d.clone(),
        rhs: pl.sys.rhs.clone(),
        dependent_subsets: check_row_subsets(&pl.sys),
        mds,
        code,
        syndrome_coefficients,
    };
    Ok((pl, output))
}

fn symbols(values: &[i64], p: u64) -> Result<Vec<u64>> {
    values
        .iter()
        .map(|&v| {
            u64::try_from(v)
                .ok()
                .filter(|&u| u < p)
                .ok_or_else(|| Error::InvalidArgument(format!("symbol {v} is not in [0, {p})")))
        })
        .collect()
}

fn fmt_vec<T: Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Jacobi { field, l, i, j } => {
            no_csv(field.format, "jacobi")?;
            let setup = Setup::new(&field, l)?;
            let sum = jacobi_sum(&setup.table, i, j)?;
            let o = JacobiOutput {
                p: setup.spec.p(),
                alpha: setup.spec.alpha(),
                q: setup.spec.q(),
                l,
                i,
                j,
                generator_power: setup.t,
                generator: setup.generator().canonical(),
                b: setup.table.root_of_unity(),
                display: sum.value.to_string(),
                value: sum.value,
            };
            if field.format == Format::Json {
                emit_json(out, &o)?;
            } else {
                writeln!(out, "q = {} = {}^{}, l = {l}, generator {}", o.q, o.p, o.alpha, o.generator)?;
                writeln!(out, "b = {}", o.b)?;
                writeln!(out, "J({i}, {j}) = {}", o.display)?;
                writeln!(out, "coefficients = {}", fmt_vec(&o.value.coeffs_i64().unwrap_or_default()))?;
            }
        }
        Command::Gauss { field } => {
            no_csv(field.format, "gauss")?;
            let setup = Setup::new(&field, 3)?;
            let solutions = solve_gauss(setup.spec.q(), setup.spec.p())?;
            solutions_output(&setup, solutions, field.format, out, |s| {
                format!("L = {}, M = {}", s.big_l, s.big_m)
            })?;
        }
        Command::Dickson { field } => {
            no_csv(field.format, "dickson")?;
            let setup = Setup::new(&field, 5)?;
            let solutions = solve_dickson(setup.spec.q(), setup.spec.p())?;
            solutions_output(&setup, solutions, field.format, out, |s| {
                format!("(X, U, V, W) = ({}, {}, {}, {})", s.x, s.u, s.v, s.w)
            })?;
        }
        Command::Code(sub) => return code_command(sub, out),
        Command::Scan {
            l,
            p_min,
            p_max,
            alpha,
            generators,
            format,
            table_budget,
            out: path,
            results_dir,
            deadline_secs,
            timing,
        } => {
            let policy = match generators {
                Generators::First => GeneratorPolicy::First,
                Generators::All => GeneratorPolicy::All,
            };
            let options = ScanOptions {
                table_budget,
                deadline: deadline_secs.map(std::time::Duration::from_secs),
                record_timing: timing,
            };
            let records = scan(l, p_min, p_max, alpha, policy, &options)?;
            let fmt = match format {
                Format::Text => ReportFormat::Text,
                Format::Json => ReportFormat::Json,
                Format::Csv => ReportFormat::Csv,
            };
            let (text, summary) = report(&records, fmt)?;
            write!(out, "{text}")?;
            let target = path.or_else(|| results_dir.map(|d| d.join("scan-results.json")));
            if let Some(target) = target {
                let mut store = ResultsStore::open(&target)?;
                store.merge(&records);
                store.save()?;
            }
            if summary.skipped > 0 {
                return Ok(exit::BUDGET);
            }
        }
        Command::VerifyExample { data, format } => {
            no_csv(format, "verify-example")?;
            let text = match data {
                Some(path) => std::fs::read_to_string(path)?,
                None => EXAMPLE_DATA.to_string(),
            };
            let expected: ExampleData = serde_json::from_str(&text)?;
            let outcome = verify_example(&expected)?;
            if format == Format::Json {
                emit_json(out, &outcome)?;
            } else {
                for c in &outcome.checks {
                    if c.passed {
                        writeln!(out, "ok   {}", c.name)?;
                    } else {
                        writeln!(out, "FAIL {}: expected {}, got {}", c.name, c.expected, c.actual)?;
                    }
                }
                writeln!(out, "{} passed, {} failed", outcome.passed, outcome.failed)?;
            }
            if outcome.failed > 0 {
                return Ok(exit::FAILURE);
            }
        }
    }
    Ok(exit::SUCCESS)
}

fn solutions_output<S>(
    setup: &Setup,
    solutions: Vec<S>,
    format: Format,
    out: &mut dyn Write,
    describe: impl Fn(&S) -> String,
) -> Result<()>
where
    S: Parametrization + Serialize,
{
    let selected = crate::diophantine::select_solution(&solutions, &setup.spec, setup.generator())?;
    let jacobi = jacobi_sum(&setup.table, 1, 1)?.value;
    let o = SolutionsOutput {
        p: setup.spec.p(),
        alpha: setup.spec.alpha(),
        q: setup.spec.q(),
        generator_power: setup.t,
        generator: setup.generator().canonical(),
        solutions,
        selected,
        jacobi,
    };
    if format == Format::Json {
        return emit_json(out, &o);
    }
    writeln!(out, "q = {}, generator {}, b = {}", o.q, o.generator, o.selected.b)?;
    for s in &o.solutions {
        writeln!(out, "solution {}", describe(s))?;
    }
    let sel = &o.selected;
    writeln!(out, "selected {}", describe(&sel.solution))?;
    writeln!(out, "a = {}", fmt_vec(&sel.a_vector))?;
    writeln!(out, "J(1, 1) = {}", o.jacobi)?;
    let c = &sel.conditions;
    writeln!(
        out,
        "conditions (i) {} (ii) {} (iii) {} (iv) {} (v) {} (vi) {}",
        c.norm, c.convolutions, c.trace, c.weighted_trace, c.coprime, c.orientation
    )?;
    let ratio = sel
        .orientation
        .ratio
        .map_or("undefined".to_string(), |r| r.to_string());
    writeln!(out, "closed-form ratio = {ratio}, relation to b: {:?}", sel.orientation.relation)?;
    Ok(())
}

fn code_command(sub: CodeCommand, out: &mut dyn Write) -> Result<i32> {
    match sub {
        CodeCommand::Build(args) => {
            no_csv(args.field.format, "code build")?;
            let (_, o) = build_code(&args)?;
            if args.field.format == Format::Json {
                emit_json(out, &o)?;
            } else {
                let c = &o.code;
                writeln!(out, "J(1, 1) = {}, b = {}", o.jacobi, o.b)?;
                writeln!(out, "D =\n{}", o.d)?;
                writeln!(out, "rhs = {}", fmt_vec(&o.rhs))?;
                writeln!(out, "G = D^t =\n{}", c.generator)?;
                writeln!(out, "G' =\n{}", c.standard)?;
                writeln!(out, "H =\n{}", c.parity_check)?;
                writeln!(out, "[n, k, d] = [{}, {}, {}], mds = {}", c.n, c.k, c.d, o.mds.mds)?;
                if let Some(a) = o.syndrome_coefficients {
                    writeln!(out, "(A1, A2, A3, A4) = {}", fmt_vec(&a))?;
                }
                for s in &o.dependent_subsets {
                    writeln!(out, "dependent rows {}", fmt_vec(s))?;
                }
            }
        }
        CodeCommand::Encode { code, message } => {
            no_csv(code.field.format, "code encode")?;
            let (_, o) = build_code(&code)?;
            let message = symbols(&message, o.p)?;
            let codeword = o.code.encode(&message)?;
            let e = EncodeOutput { message, codeword };
            if code.field.format == Format::Json {
                emit_json(out, &e)?;
            } else {
                writeln!(out, "message {} -> codeword {}", fmt_vec(&e.message), fmt_vec(&e.codeword))?;
            }
        }
        CodeCommand::Decode { code, word } => {
            no_csv(code.field.format, "code decode")?;
            let (_, o) = build_code(&code)?;
            let word = symbols(&word, o.p)?;
            let d: Decoded = o.code.decode_single_error(&word)?;
            if code.field.format == Format::Json {
                emit_json(out, &d)?;
            } else {
                writeln!(out, "received {}", fmt_vec(&d.received))?;
                writeln!(out, "syndrome {}", fmt_vec(&d.syndrome))?;
                match d.location {
                    Some((i, e)) => writeln!(out, "error {} at position {i}", e)?,
                    None => writeln!(out, "no error")?,
                }
                writeln!(out, "error vector {}", fmt_vec(&d.error))?;
                writeln!(out, "codeword {}", fmt_vec(&d.codeword))?;
            }
        }
    }
    Ok(exit::SUCCESS)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodingRow {
    pub received: Vec<u64>,
    pub syndrome: Vec<u64>,
    pub e0: u64,
    pub error: Vec<u64>,
}

/// Expected values of the p = 61 example.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleData {
    pub p: u64,
    pub gamma: u64,
    pub l: u64,
    pub jacobi: Vec<i64>,
    pub generator_matrix: Vec<Vec<u64>>,
    pub y: Vec<Vec<u64>>,
    pub det_y: u64,
    pub adj_y: Vec<Vec<u64>>,
    pub y_inverse: Vec<Vec<u64>>,
    pub parity_block: Vec<Vec<u64>>,
    pub h_factors: [Vec<Vec<u64>>; 2],
    pub parity_check: Vec<Vec<u64>>,
    pub syndrome_matrix: Vec<Vec<u64>>,
    pub syndrome_coefficients: [u64; 4],
    pub codeword: Vec<u64>,
    pub decoding: Vec<DecodingRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: serde_json::Value,
    pub actual: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Default)]
struct Checker {
    checks: Vec<Check>,
}

impl Checker {
    fn check<T: Serialize + PartialEq>(&mut self, name: impl Into<String>, expected: &T, actual: &T) {
        self.checks.push(Check {
            name: name.into(),
            passed: expected == actual,
            expected: serde_json::to_value(expected).expect("plain data"),
            actual: serde_json::to_value(actual).expect("plain data"),
        });
    }
}

/// Rebuilds the example from `(p, gamma)` alone and compares every displayed quantity.
pub fn verify_example(ex: &ExampleData) -> Result<VerifyOutcome> {
    let spec = FieldSpec::prime(ex.p, ex.l)?;
    let p = ex.p;
    let mut c = Checker::default();
    let gamma = spec.from_int(ex.gamma as i64);
    c.check("gamma is a generator", &true, &spec.is_generator(&gamma)?);
    c.check("gamma is the least generator", &gamma, &spec.find_primitive_element());
    let table = LogTable::build(&spec, &gamma, DEFAULT_TABLE_BUDGET)?;
    let j = jacobi_sum(&table, 1, 1)?.value;
    c.check("J(1,1) coefficients", &ex.jacobi, &j.coeffs_i64().unwrap_or_default());
    c.check("J(1,1) norm", &Some(p as i64), &j.abs_square().and_then(|x| x.to_i64()));
    let b = table.root_of_unity();
    let sys = build_congruence_system(&j, p, b)?;
    let g = sys.d.transpose();
    c.check("G = D^t", &ex.generator_matrix, &g.rows().to_vec());
    let k = g.nrows();
    let y = g.select_cols(&(0..k).collect::<Vec<_>>());
    c.check("Y", &ex.y, &y.rows().to_vec());
    let det = y.det()?;
    c.check("det Y", &ex.det_y, &det);
    let y_inv = y.inverse()?;
    let adj: Vec<Vec<u64>> = y_inv
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| crate::arith::mul_mod(x, det, p)).collect())
        .collect();
    c.check("adj Y = det Y * Y^-1", &ex.adj_y, &adj);
    c.check("Y^-1", &ex.y_inverse, &y_inv.rows().to_vec());
    let code = LinearCode::from_generator(g.clone(), 1)?;
    c.check("[n, k, d]", &(4usize, 2usize, 3usize), &(code.n, code.k, code.d));
    c.check("is MDS", &true, &is_mds(&g)?.mds);
    let tail = g.select_cols(&(k..g.ncols()).collect::<Vec<_>>());
    let block = y_inv.mul(&tail)?;
    c.check("Y^-1 B", &ex.parity_block, &block.rows().to_vec());
    let std_block = code.standard.select_cols(&(k..code.n).collect::<Vec<_>>());
    c.check("G' parity block", &ex.parity_block, &std_block.rows().to_vec());
    c.check(
        "G' identity block",
        &ModMatrix::identity(p, k).rows().to_vec(),
        &code.standard.select_cols(&(0..k).collect::<Vec<_>>()).rows().to_vec(),
    );
    let f1 = ModMatrix::new(p, ex.h_factors[0].clone())?;
    let f2 = ModMatrix::new(p, ex.h_factors[1].clone())?;
    c.check("B^t", &ex.h_factors[0], &tail.transpose().rows().to_vec());
    let neg_adj_t: Vec<Vec<u64>> = ModMatrix::new(p, adj.clone())?
        .transpose()
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| (p - x) % p).collect())
        .collect();
    c.check("-adj(Y)^t", &ex.h_factors[1], &neg_adj_t);
    let det_inv = crate::arith::inv_mod(det, p).ok_or_else(|| Error::Singular("det Y".into()))?;
    let h_left: Vec<Vec<u64>> = f1
        .mul(&f2)?
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| crate::arith::mul_mod(x, det_inv, p)).collect())
        .collect();
    let h_expected_left: Vec<Vec<u64>> = ex.parity_check.iter().map(|r| r[..k].to_vec()).collect();
    c.check("H left block = B^t (-adj Y)^t / det Y", &h_expected_left, &h_left);
    c.check("H", &ex.parity_check, &code.parity_check.rows().to_vec());
    c.check("H^t", &ex.syndrome_matrix, &code.parity_check.transpose().rows().to_vec());
    let a: Vec<i64> = j.coeffs_i64().unwrap_or_default();
    let suite = determinant_suite([a[0], a[1], a[2], a[3]], p, b)?;
    c.check("(A1, A2, A3, A4)", &ex.syndrome_coefficients, &suite.syndrome_coefficients()?);
    let zero = vec![0u64; code.n - code.k];
    c.check("codeword syndrome", &zero, &code.syndrome(&ex.codeword)?);
    c.check("codeword encodes its information symbols", &ex.codeword, &code.encode(&ex.codeword[..k])?);
    let patterns = code.syndrome_patterns();
    for (row, exp) in ex.decoding.iter().enumerate() {
        let n = row + 1;
        let d = code.decode_single_error(&exp.received)?;
        c.check(format!("row {n} syndrome"), &exp.syndrome, &d.syndrome);
        let pos = exp.error.iter().position(|&x| x != 0).unwrap_or(0);
        let multiple: Vec<u64> = patterns[pos]
            .iter()
            .map(|&h| crate::arith::mul_mod(exp.e0, h, p))
            .collect();
        c.check(format!("row {n} syndrome = e0 * column"), &exp.syndrome, &multiple);
        c.check(format!("row {n} e0"), &Some((pos, exp.e0)), &d.location);
        c.check(format!("row {n} error vector"), &exp.error, &d.error);
        c.check(format!("row {n} codeword"), &ex.codeword, &d.codeword);
    }
    let failed = c.checks.iter().filter(|x| !x.passed).count();
    Ok(VerifyOutcome {
        passed: c.checks.len() - failed,
        failed,
        checks: c.checks,
    })
}
