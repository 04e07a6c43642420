//! The `galcount` command line.
//!
//! [`run`] takes the argument list and two sinks so the whole surface can be
//! driven in-process. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, every check passed |
//! | 1 | a check failed (table row, domination, verdict outside tolerance) |
//! | 2 | bad flags, unparsable group expression or group file |
//! | 3 | enumeration cap exceeded |
//! | 4 | group is not transitive |
//! | 5 | census or sample file unreadable or malformed |
//! | 6 | too few usable samples to fit |
//! | 7 | paired representations are inconsistent |

mod files;
mod spec;
mod table;

pub use files::{parse_group_text, parse_pair_text, parse_samples, read_group_file, read_pair_file, read_samples};
pub use spec::{Family, GroupSpec};
pub use table::{check_row, render_csv, render_text, rows, RowResult, RowStatus, TableRow, DEG6, DEG8};

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::constructions::{
    check_index_domination, dihedral, direct_product, heisenberg_mod3, regular_rep, render_word, ConstructionError,
    DominationReport, DualRep,
};
use crate::estimator::{fit_exponent, geometric_grid, FitError, LogPower, Verdict};
use crate::fieldcount::{
    biquadratic_tally, cyclic_tally, ingest_census, quadratic_tally, tally_samples, write_samples, DiscriminantTally,
    FieldCountError,
};
use crate::ntsieves::{powerful_count, powerful_sieve, squarefree_sieve};
use crate::permcore::{GroupError, PermError, PermGroup, DEFAULT_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INTRANSITIVE: i32 = 4;
pub const EXIT_DATA: i32 = 5;
pub const EXIT_SAMPLES: i32 = 6;
pub const EXIT_INCONSISTENT: i32 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("enumeration exceeded the cap of {0} elements (raise it with --cap)")]
    CapExceeded(usize),
    #[error("group is not transitive: {0}")]
    Intransitive(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Samples(String),
    #[error("inconsistent representations: {0}")]
    Inconsistent(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => EXIT_USAGE,
            CliError::CapExceeded(_) => EXIT_CAP,
            CliError::Intransitive(_) => EXIT_INTRANSITIVE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Samples(_) => EXIT_SAMPLES,
            CliError::Inconsistent(_) => EXIT_INCONSISTENT,
            CliError::Internal(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { cap } => CliError::CapExceeded(cap),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Group(g) => g.into(),
            ConstructionError::Inconsistent { .. } | ConstructionError::GeneratorCountMismatch(..) => {
                CliError::Inconsistent(e.to_string())
            }
            ConstructionError::Verification(msg) => CliError::Internal(msg),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<FieldCountError> for CliError {
    fn from(e: FieldCountError) -> Self {
        match e {
            FieldCountError::NotOddPrime(_) | FieldCountError::UnsortedGrid => CliError::Usage(e.to_string()),
            other => CliError::Data(other.to_string()),
        }
    }
}

impl From<FitError> for CliError {
    fn from(e: FitError) -> Self {
        match e {
            FitError::DegenerateRange => CliError::Usage(e.to_string()),
            FitError::Group(g) => g.into(),
            other => CliError::Samples(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "galcount", version, about = "Field-counting exponents of permutation groups and empirical checks")]
struct Cli {
    /// Largest group that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a(G) for a group expression or group file.
    Aval {
        /// Group expression, e.g. "wreath(C 2, natural(A 4))".
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        spec: Option<String>,
        /// Group file (degree= and gen= lines).
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Rebuild the degree 6 or degree 8 table and compare a(G) row by row.
    Table {
        #[arg(value_enum)]
        which: TableName,
        /// Directory with generator files <table>_Nr<k>.grp for unnamed rows.
        #[arg(long)]
        external: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count fields by discriminant on a grid, printed as x,count rows.
    Count {
        #[command(flatten)]
        source: FamilyArgs,
        /// Grid as min:max:points, geometrically spaced (1e5 notation allowed).
        #[arg(long)]
        grid: String,
        /// Report sieve cross-checks on stderr.
        #[arg(long)]
        sieve: bool,
    },
    /// Fit log Z = log c + a log x + b log log x to samples.
    Fit {
        /// File of x,count rows.
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        samples: Option<PathBuf>,
        #[command(flatten)]
        source: OptFamilyArgs,
        /// Grid as min:max:points; defaults per family.
        #[arg(long, requires = "family")]
        grid: Option<String>,
        /// "fit" for a free log power, or a fixed real exponent.
        #[arg(long, default_value = "fit")]
        log_power: String,
        /// Group expression whose a(G) the fit is compared with.
        #[arg(long)]
        predict: Option<String>,
        #[arg(long, default_value_t = 0.05)]
        tolerance: f64,
    },
    /// Check a2·ind2 >= a1·ind1 across two representations of one group.
    CompareReps {
        /// Paired-representation file (two blocks separated by ---).
        #[arg(required_unless_present = "example", conflicts_with = "example")]
        path: Option<PathBuf>,
        /// Built-in pair: heis-c2 (alias 7.4) or d4 (alias 7.2).
        #[arg(long)]
        example: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    Deg6,
    Deg8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountFamily {
    Quadratic,
    Cyclic,
    Biquadratic,
    Census,
}

#[derive(Debug, clap::Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: CountFamily,
    #[command(flatten)]
    extra: FamilyExtra,
}

#[derive(Debug, clap::Args)]
struct OptFamilyArgs {
    #[arg(long, value_enum)]
    family: Option<CountFamily>,
    #[command(flatten)]
    extra: FamilyExtra,
}

#[derive(Debug, Clone, clap::Args)]
struct FamilyExtra {
    /// Prime degree for the cyclic family.
    #[arg(long)]
    ell: Option<u64>,
    /// Group label to select from a census file.
    #[arg(long)]
    label: Option<String>,
    /// Census file (header degree,group,abs_disc).
    #[arg(long)]
    file: Option<PathBuf>,
}

/// Largest quadratic cutoff; the sieve holds one byte per integer.
const QUADRATIC_LIMIT: u64 = 1 << 31;
/// Largest range the diagnostic sieves cover.
const DIAGNOSTIC_LIMIT: u64 = 10_000_000;

/// Parses and runs one command line, writing reports to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let cap = cli.cap;
    match cli.command {
        Command::Aval { spec, file } => {
            let spec = match (spec, file) {
                (Some(s), _) => s.parse()?,
                (None, Some(path)) => GroupSpec::File(path),
                (None, None) => return Err(CliError::Usage("aval needs a group expression or --file".into())),
            };
            cmd_aval(&spec, cap, out)
        }
        Command::Table { which, external, format } => {
            let name = match which {
                TableName::Deg6 => "deg6",
                TableName::Deg8 => "deg8",
            };
            cmd_table(name, external.as_deref(), format, cap, out)
        }
        Command::Count { source, grid, sieve } => {
            let grid = parse_grid(&grid)?;
            let tally = family_tally(source.family, &source.extra, *grid.last().unwrap_or(&1))?;
            if sieve {
                sieve_diagnostics(source.family, &source.extra, &tally, err)?;
            }
            let samples = tally_samples(&tally, &grid)?;
            write_samples(&mut *out, &samples).map_err(io_error)?;
            Ok(EXIT_OK)
        }
        Command::Fit { samples, source, grid, log_power, predict, tolerance } => {
            let samples = match (samples, source.family) {
                (Some(path), _) => read_samples(&path)?,
                (None, Some(family)) => {
                    let grid = match grid {
                        Some(g) => g,
                        None => default_grid(family, &source.extra)?.to_string(),
                    };
                    let grid = parse_grid(&grid)?;
                    let tally = family_tally(family, &source.extra, *grid.last().unwrap_or(&1))?;
                    tally_samples(&tally, &grid)?
                }
                (None, None) => return Err(CliError::Usage("fit needs --samples or --family".into())),
            };
            let log_power = parse_log_power(&log_power)?;
            let predict = predict.map(|s| s.parse::<GroupSpec>()).transpose()?;
            cmd_fit(&samples, log_power, predict.as_ref(), tolerance, cap, out)
        }
        Command::CompareReps { path, example } => {
            let dual = match (path, example) {
                (Some(p), _) => read_pair_file(&p)?,
                (None, Some(name)) => example_pair(&name, cap)?,
                (None, None) => return Err(CliError::Usage("compare-reps needs a file or --example".into())),
            };
            cmd_compare_reps(&dual, cap, out)
        }
    }
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::Internal(format!("write failed: {e}"))
}

fn require_transitive(group: &PermGroup) -> Result<(), CliError> {
    if group.is_transitive() {
        Ok(())
    } else {
        Err(CliError::Intransitive(format!("degree {} with more than one orbit", group.degree())))
    }
}

/// Report of degree, order, `a(G)` and an element of minimal index.
pub fn cmd_aval(spec: &GroupSpec, cap: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let group = spec.build(cap)?;
    require_transitive(&group)?;
    let order = group.order(cap)?;
    let a = group.a_invariant(cap)?;
    let mut text = format!("group: {spec}\ndegree: {}\norder: {order}\na(G) = {a}\n", group.degree());
    if order > 1 {
        let (witness, ind) = group.min_index_witness(cap)?;
        text += &format!("min index {ind} attained by {witness} (cycle type {:?})\n", witness.cycle_lengths());
    } else {
        text += "trivial group: no nonidentity element\n";
    }
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(EXIT_OK)
}

fn cmd_table(
    name: &str,
    external: Option<&std::path::Path>,
    format: Format,
    cap: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let rows = rows(name).ok_or_else(|| CliError::Usage(format!("unknown table {name}")))?;
    let results = rows.iter().map(|r| check_row(r, external, cap)).collect::<Result<Vec<_>, _>>()?;
    let text = match format {
        Format::Text => render_text(&results),
        Format::Csv => render_csv(&results),
    };
    out.write_all(text.as_bytes()).map_err(io_error)?;
    let failed = results.iter().any(|r| matches!(r.status, RowStatus::Fail(_)));
    Ok(if failed { EXIT_CHECK_FAILED } else { EXIT_OK })
}

/// Parses `min:max:points`; bounds may use `1e5` notation.
pub fn parse_grid(text: &str) -> Result<Vec<u64>, CliError> {
    let bad = |msg: &str| CliError::Usage(format!("grid {text:?}: {msg}"));
    let parts: Vec<&str> = text.split(':').map(str::trim).collect();
    let [lo, hi, n] = parts[..] else {
        return Err(bad("expected min:max:points"));
    };
    let number = |s: &str| -> Result<u64, CliError> {
        if let Ok(v) = s.parse::<u64>() {
            return Ok(v);
        }
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v < 1.8e19 => Ok(v as u64),
            _ => Err(bad(&format!("{s:?} is not a nonnegative integer"))),
        }
    };
    let points: usize = n.parse().map_err(|_| bad("points must be an integer"))?;
    geometric_grid(number(lo)?, number(hi)?, points).map_err(|e| bad(&e.to_string()))
}

fn parse_log_power(text: &str) -> Result<LogPower, CliError> {
    if text == "fit" {
        return Ok(LogPower::Fit);
    }
    match text.parse::<f64>() {
        Ok(b) if b.is_finite() => Ok(LogPower::Fixed(b)),
        _ => Err(CliError::Usage(format!("--log-power must be \"fit\" or a real number, got {text:?}"))),
    }
}

fn default_grid(family: CountFamily, extra: &FamilyExtra) -> Result<&'static str, CliError> {
    match (family, extra.ell) {
        (CountFamily::Quadratic, _) => Ok("1e3:1e7:10"),
        (CountFamily::Cyclic, Some(3)) => Ok("1e3:1e12:10"),
        (CountFamily::Cyclic, Some(5)) => Ok("14641:1e16:10"),
        (CountFamily::Biquadratic, _) => Ok("1e3:1e8:10"),
        _ => Err(CliError::Usage("no default grid for this family; pass --grid".into())),
    }
}

fn family_tally(family: CountFamily, extra: &FamilyExtra, x_max: u64) -> Result<DiscriminantTally, CliError> {
    match family {
        CountFamily::Quadratic => {
            if x_max > QUADRATIC_LIMIT {
                return Err(CliError::Usage(format!("quadratic counts are limited to x <= {QUADRATIC_LIMIT}")));
            }
            Ok(quadratic_tally(x_max))
        }
        CountFamily::Cyclic => {
            let ell = extra.ell.ok_or_else(|| CliError::Usage("cyclic needs --ell".into()))?;
            Ok(cyclic_tally(ell, x_max)?)
        }
        CountFamily::Biquadratic => Ok(biquadratic_tally(x_max)),
        CountFamily::Census => {
            let (Some(label), Some(path)) = (&extra.label, &extra.file) else {
                return Err(CliError::Usage("census needs --label and --file".into()));
            };
            let file = File::open(path).map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?;
            let mut tallies = ingest_census(BufReader::new(file))?;
            tallies.remove(label).ok_or_else(|| {
                let known: Vec<&str> = tallies.keys().map(String::as_str).collect();
                CliError::Data(format!("label {label:?} not in census (labels: {})", known.join(", ")))
            })
        }
    }
}

fn sieve_diagnostics(
    family: CountFamily,
    extra: &FamilyExtra,
    tally: &DiscriminantTally,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let limit = tally.max_disc().unwrap_or(1).min(DIAGNOSTIC_LIMIT);
    let mut lines = Vec::new();
    let k = match family {
        CountFamily::Quadratic => {
            let sf = squarefree_sieve(limit as usize);
            let count = sf.count_upto(limit as usize);
            lines.push(format!(
                "squarefree n <= {limit}: {count} (density {:.6}, 6/pi^2 = {:.6})",
                count as f64 / limit as f64,
                6.0 / std::f64::consts::PI.powi(2)
            ));
            None
        }
        CountFamily::Cyclic => extra.ell.map(|l| l as u32 - 1),
        CountFamily::Biquadratic => Some(2),
        CountFamily::Census => {
            lines.push("census data: no sieve cross-check".into());
            None
        }
    };
    if let Some(k) = k {
        let table = powerful_sieve(k, limit as usize);
        let checked: Vec<u64> = tally.entries().iter().map(|&(d, _)| d).filter(|&d| d <= limit).collect();
        let bad = checked.iter().filter(|&&d| !table.get(d as usize)).count();
        lines.push(format!(
            "{k}-powerful check: {} of {} discriminants <= {limit} pass; powerful_count({k}, {limit}) = {}",
            checked.len() - bad,
            checked.len(),
            powerful_count(k, limit)
        ));
        if bad > 0 {
            lines.push(format!("{bad} discriminants are not {k}-powerful"));
        }
    }
    for l in lines {
        writeln!(err, "sieve: {l}").map_err(io_error)?;
    }
    Ok(())
}

/// Fits the samples and, with a predicted group, prints the verdict.
pub fn cmd_fit(
    samples: &[(u64, u64)],
    log_power: LogPower,
    predict: Option<&GroupSpec>,
    tolerance: f64,
    cap: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let fit = fit_exponent(samples, log_power)?;
    let mut text = format!("{fit}\n");
    let mut code = EXIT_OK;
    if let Some(spec) = predict {
        let group = spec.build(cap)?;
        require_transitive(&group)?;
        let verdict = Verdict::new(group.a_invariant(cap)?, fit, tolerance);
        text += &format!("group: {spec}\n{verdict}\n");
        if !verdict.within_tolerance {
            code = EXIT_CHECK_FAILED;
        }
    }
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(code)
}

/// Built-in representation pairs.
pub fn example_pair(name: &str, cap: usize) -> Result<DualRep, CliError> {
    let base = match name {
        "heis-c2" | "7.4" => direct_product(&heisenberg_mod3()?, &crate::constructions::cyclic(2)?),
        "d4" | "7.2" => dihedral(4)?,
        other => return Err(CliError::Usage(format!("unknown example {other:?} (known: heis-c2, 7.4, d4, 7.2)"))),
    };
    Ok(DualRep::from_groups(&regular_rep(&base, cap)?, &base)?)
}

pub fn render_report(report: &DominationReport, dual: &DualRep) -> String {
    let (n1, n2) = dual.degrees();
    let mut s = format!(
        "degrees: {n1} vs {n2}\norder: {}\na1 = {}\na2 = {}\n",
        report.order, report.a1, report.a2
    );
    match &report.witness {
        None => s += "HOLDS: a2*ind2 >= a1*ind1 for every element\n",
        Some(w) => {
            let lhs = w.a2.ratio() * w.ind2 as u64;
            let rhs = w.a1.ratio() * w.ind1 as u64;
            s += &format!(
                "FAILS: witness {} with ind1 = {}, ind2 = {}: a2*ind2 = {lhs} < a1*ind1 = {rhs}\n  element1 = {}\n  element2 = {}\n",
                render_word(&w.word),
                w.ind1,
                w.ind2,
                w.element1,
                w.element2
            );
        }
    }
    s
}

fn cmd_compare_reps(dual: &DualRep, cap: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = check_index_domination(dual, cap)?;
    out.write_all(render_report(&report, dual).as_bytes()).map_err(io_error)?;
    Ok(if report.holds { EXIT_OK } else { EXIT_CHECK_FAILED })
}
