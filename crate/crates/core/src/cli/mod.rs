//! The `dejonq` command line: single evaluations, identity checks and
//! parameter sweeps, emitted as JSON, CSV or plain text.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 when an internal cross
//! check fails (the offending record is still emitted).

pub mod expr;
pub mod record;

use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bn::{self, BnError, DJProblem, SeriesParams};
use crate::dejonq::{self, DejonqError};
use crate::exact::Partition;
use crate::lls;
use expr::{Expr, ExprError};
pub use record::{render, Cell, Format, Record, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CROSS_CHECK: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dejonq",
    version,
    about = "Exact de Jonquières counts and Brill–Noether dimensions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Virtual number of divisors with multiplicities mu in a g^r_d (|mu| = d, l(mu) = d - r).
    Count(PointArgs),
    /// Expected dimensions of the generalized de Jonquières locus DJ^f_mu.
    Dim(PointArgs),
    /// Whether DJ^f_mu is empty for every g^r_d on a general curve.
    Empty(PointArgs),
    /// Plücker total ramification against the de Jonquières count for (r+1, 1^(d-r-1)).
    Plucker(PointArgs),
    /// Randomized check of the flag-curve dimension identity.
    Identity(IdentityArgs),
    /// Evaluate one of count/dim/empty/plucker over ranges of g, r, d.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub d: u32,
    /// Partition: `2,2,1`, `2^2,1`, a family such as `2^r,1^(d-2r)`, or one
    /// of the aliases `double-points`, `ramification`.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// An integer expression in g, r, d, m = |mu|, e = l(mu), or `span=<s>`
    /// for f = |mu| - s - 1.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long = "of", value_enum, default_value = "count")]
    pub kind: Kind,
    /// Inclusive range `lo..hi` (or a single value).
    #[arg(long)]
    pub g: IntRange,
    #[arg(long)]
    pub r: IntRange,
    #[arg(long)]
    pub d: IntRange,
    /// May be repeated.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Vec<String>,
    /// May be repeated.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Count,
    Dim,
    Empty,
    Plucker,
}

/// Nonempty inclusive interval of nonnegative integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: u32,
    pub hi: u32,
}

impl IntRange {
    pub fn single(v: u32) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad integer `{t}` in range `{s}`"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Self { lo, hi })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        CliError(e.0)
    }
}

/// Partition given literally or as a family with exponents depending on
/// `g`, `r`, `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionSpec {
    Explicit(Partition),
    Family {
        source: String,
        terms: Vec<(Expr, Expr)>,
    },
}

impl PartitionSpec {
    pub fn parse(src: &str) -> Result<Self, CliError> {
        let expanded = match src.trim() {
            "double-points" => "2^r,1^(d-2r)",
            "ramification" => "r+1,1^(d-r-1)",
            other => other,
        };
        if let Ok(p) = expanded.parse::<Partition>() {
            return Ok(PartitionSpec::Explicit(p));
        }
        let vars = ['g', 'r', 'd'];
        let mut terms = Vec::new();
        for term in split_top_level(expanded) {
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => (b, e),
                None => (term, "1"),
            };
            let base = Expr::parse(base, &vars)
                .map_err(|e| CliError(format!("partition `{src}`: {e}")))?;
            let exp =
                Expr::parse(exp, &vars).map_err(|e| CliError(format!("partition `{src}`: {e}")))?;
            terms.push((base, exp));
        }
        if terms.is_empty() {
            return Err(CliError(format!("empty partition `{src}`")));
        }
        Ok(PartitionSpec::Family {
            source: src.to_string(),
            terms,
        })
    }

    /// The partition at `(g, r, d)`, or why there is none.
    pub fn expand(&self, g: u32, r: u32, d: u32) -> Result<Partition, String> {
        match self {
            PartitionSpec::Explicit(p) => Ok(p.clone()),
            PartitionSpec::Family { source, terms } => {
                let lookup = |c: char| match c {
                    'g' => i64::from(g),
                    'r' => i64::from(r),
                    _ => i64::from(d),
                };
                let mut parts = Vec::new();
                for (base, exp) in terms {
                    let (base, exp) = (base.eval(&lookup), exp.eval(&lookup));
                    if exp < 0 {
                        return Err(format!("`{source}` has negative multiplicity {exp}"));
                    }
                    if exp == 0 {
                        continue;
                    }
                    let part = u32::try_from(base)
                        .ok()
                        .filter(|&b| b >= 1)
                        .ok_or_else(|| format!("`{source}` has non-positive part {base}"))?;
                    parts.extend(std::iter::repeat_n(part, exp as usize));
                }
                if parts.is_empty() {
                    return Err(format!("`{source}` expands to the empty partition"));
                }
                Ok(Partition::new(parts).expect("parts checked positive"))
            }
        }
    }

    fn label(&self) -> String {
        match self {
            PartitionSpec::Explicit(p) => p.to_string(),
            PartitionSpec::Family { source, .. } => source.clone(),
        }
    }
}

/// Splits on commas outside parentheses/braces.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter()
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FSpec {
    Value(Expr),
    Span(Expr),
}

const F_VARS: [char; 5] = ['g', 'r', 'd', 'm', 'e'];

impl FSpec {
    pub fn parse(src: &str) -> Result<Self, CliError> {
        match src.trim().strip_prefix("span=") {
            Some(span) => Ok(FSpec::Span(Expr::parse(span, &F_VARS)?)),
            None => Ok(FSpec::Value(Expr::parse(src, &F_VARS)?)),
        }
    }

    pub fn resolve(&self, g: u32, r: u32, d: u32, mu: &Partition) -> i64 {
        let lookup = |c: char| match c {
            'g' => i64::from(g),
            'r' => i64::from(r),
            'd' => i64::from(d),
            'm' => mu.total() as i64,
            _ => mu.len() as i64,
        };
        match self {
            FSpec::Value(e) => e.eval(&lookup),
            FSpec::Span(s) => bn::f_for_span(mu, s.eval(&lookup)),
        }
    }
}

/// A fully parsed and validated request.
#[derive(Debug, Clone)]
pub struct TableRequest {
    pub kind: Kind,
    pub g: IntRange,
    pub r: IntRange,
    pub d: IntRange,
    pub mu: Vec<PartitionSpec>,
    pub f: Vec<FSpec>,
    pub format: Format,
    pub sweep: bool,
}

impl TableRequest {
    fn build(
        kind: Kind,
        (g, r, d): (IntRange, IntRange, IntRange),
        mu: &[String],
        f: &[String],
        format: Format,
        sweep: bool,
    ) -> Result<Self, CliError> {
        let mu = mu
            .iter()
            .map(|s| PartitionSpec::parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        let f = f
            .iter()
            .map(|s| FSpec::parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        let needs_mu = matches!(kind, Kind::Count | Kind::Dim | Kind::Empty);
        if needs_mu && mu.is_empty() {
            return Err(CliError("--mu is required".into()));
        }
        if matches!(kind, Kind::Dim | Kind::Empty) && f.is_empty() {
            return Err(CliError("--f is required".into()));
        }
        Ok(Self {
            kind,
            g,
            r,
            d,
            mu,
            f,
            format,
            sweep,
        })
    }

    pub fn from_point(kind: Kind, args: &PointArgs) -> Result<Self, CliError> {
        let ranges = (
            IntRange::single(args.g),
            IntRange::single(args.r),
            IntRange::single(args.d),
        );
        TableRequest::build(
            kind,
            ranges,
            args.mu.as_slice(),
            args.f.as_slice(),
            args.format,
            false,
        )
    }

    pub fn from_sweep(args: &SweepArgs) -> Result<Self, CliError> {
        TableRequest::build(
            args.kind,
            (args.g, args.r, args.d),
            &args.mu,
            &args.f,
            args.format,
            true,
        )
    }
}

/// Records plus the exit code they imply.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub records: Vec<Record>,
    pub exit_code: i32,
}

struct Cellspec {
    g: u32,
    r: u32,
    d: u32,
    mu: Option<usize>,
    f: Option<usize>,
}

/// Evaluates every cell of the request. Cells are independent and computed
/// in parallel; records come back sorted by `(g, r, d, mu, f)`.
pub fn run(request: &TableRequest) -> Outcome {
    let mut cells = Vec::new();
    for g in request.g.iter() {
        for r in request.r.iter() {
            for d in request.d.iter() {
                let mu_choices: Vec<Option<usize>> = match request.kind {
                    Kind::Plucker => vec![None],
                    _ => (0..request.mu.len()).map(Some).collect(),
                };
                let f_choices: Vec<Option<usize>> = match request.kind {
                    Kind::Dim | Kind::Empty => (0..request.f.len()).map(Some).collect(),
                    _ => vec![None],
                };
                for &mu in &mu_choices {
                    for &f in &f_choices {
                        cells.push(Cellspec { g, r, d, mu, f });
                    }
                }
            }
        }
    }

    let mut keyed: Vec<(SortKey, Record)> = cells
        .par_iter()
        .map(|cell| evaluate(request, cell))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let records: Vec<Record> = keyed.into_iter().map(|(_, r)| r).collect();

    let exit_code = if records.iter().any(|r| r.status == Status::CrossCheckFailed) {
        EXIT_CROSS_CHECK
    } else if !request.sweep && records.iter().any(|r| r.status == Status::Skipped) {
        EXIT_INVALID
    } else {
        EXIT_OK
    };
    Outcome { records, exit_code }
}

type SortKey = (
    u32,
    u32,
    u32,
    Option<Partition>,
    Option<i64>,
    Option<usize>,
    Option<usize>,
);

fn evaluate(request: &TableRequest, cell: &Cellspec) -> (SortKey, Record) {
    let Cellspec { g, r, d, .. } = *cell;
    let spec = cell.mu.map(|i| &request.mu[i]);
    let mu = spec.map(|s| s.expand(g, r, d));
    let resolved_mu = mu.as_ref().and_then(|m| m.as_ref().ok());
    let f = match (cell.f, resolved_mu) {
        (Some(i), Some(mu)) => Some(request.f[i].resolve(g, r, d, mu)),
        _ => None,
    };

    let mu_label = match (&mu, spec) {
        (Some(Ok(p)), _) => Cell::text(p.to_string()),
        (_, Some(s)) => Cell::text(s.label()),
        _ => Cell::Null,
    };
    let inputs = vec![
        ("g", Cell::int(g)),
        ("r", Cell::int(r)),
        ("d", Cell::int(d)),
        ("mu", mu_label),
        ("f", f.map(Cell::int).into()),
    ];

    let mut record = match (request.kind, &mu) {
        (kind, Some(Err(reason))) => skipped(kind, reason.clone()),
        (Kind::Count, Some(Ok(mu))) => count_record(g, r, d, mu),
        (Kind::Dim, Some(Ok(mu))) => dim_record(g, r, d, mu, f.expect("dim rows carry f")),
        (Kind::Empty, Some(Ok(mu))) => empty_record(g, r, d, mu, f.expect("empty rows carry f")),
        (Kind::Plucker, _) => plucker_record(g, r, d),
        (_, None) => unreachable!("mu is required for this command"),
    };
    record.inputs = inputs;
    let key = (g, r, d, resolved_mu.cloned(), f, cell.mu, cell.f);
    (key, record)
}

fn result_columns(kind: Kind) -> &'static [&'static str] {
    match kind {
        Kind::Count => &[
            "value",
            "ordered_value",
            "bracket_ordered_value",
            "symmetry_factor",
            "rho",
            "expected_dim",
            "verdict",
            "note",
        ],
        Kind::Dim => &[
            "rho",
            "e",
            "mu_total",
            "span_dimension",
            "expected_dim_fixed_series",
            "expected_dim_sigma",
            "note",
        ],
        Kind::Empty => &["rho", "expected_dim_sigma", "empty", "note"],
        Kind::Plucker => &["dj_count", "plucker_total", "equal", "note"],
    }
}

/// Record with every result column present, in order, filled from `values`.
fn with_columns(kind: Kind, values: Vec<(&'static str, Cell)>) -> Record {
    let result = result_columns(kind)
        .iter()
        .map(|&k| {
            let v = values.iter().find(|(n, _)| *n == k).map(|(_, v)| v.clone());
            (k, v.into())
        })
        .collect();
    Record {
        inputs: Vec::new(),
        result,
        paths: Vec::new(),
        cross_check_delta: None,
        status: Status::Ok,
        summary: None,
    }
}

fn skipped(kind: Kind, reason: String) -> Record {
    let mut record = with_columns(kind, vec![("note", Cell::text(reason))]);
    record.status = Status::Skipped;
    record
}

fn count_record(g: u32, r: u32, d: u32, mu: &Partition) -> Record {
    let params = match SeriesParams::new(g, r, d) {
        Ok(p) => p,
        Err(e) => return skipped(Kind::Count, e.to_string()),
    };
    let coefficient = match dejonq::coefficient_count(g, r, d, mu) {
        Ok(v) => v,
        Err(e) => return skipped(Kind::Count, e.to_string()),
    };
    let bracket = dejonq::bracket(mu, g).expect("preconditions already checked");
    let delta = &coefficient - &bracket;

    let mut values = vec![
        ("ordered_value", Cell::Int(coefficient.clone())),
        ("bracket_ordered_value", Cell::Int(bracket)),
        ("symmetry_factor", Cell::Int(mu.symmetry_factor())),
        ("rho", Cell::int(bn::rho(&params))),
    ];
    let mut status = Status::Ok;
    match dejonq::dj_count(g, r, d, mu) {
        Ok(count) => values.push(("value", Cell::Int(count.value))),
        Err(e @ DejonqError::Integrality { .. }) => {
            status = Status::CrossCheckFailed;
            values.push(("note", Cell::text(e.to_string())));
        }
        Err(e) => return skipped(Kind::Count, e.to_string()),
    }
    if !delta.is_zero() {
        status = Status::CrossCheckFailed;
        values.push(("note", Cell::text("bracket and coefficient paths disagree")));
    }

    // Classical locus: f = d - r.
    let f = i64::from(d) - i64::from(r);
    let verdict = match DJProblem::new(params, mu.clone(), f).map(|p| bn::expected_dim_sigma(&p)) {
        Ok(Ok(dim)) => {
            values.push(("expected_dim", Cell::int(dim)));
            if dim < 0 {
                "empty"
            } else {
                "expected_dimension"
            }
        }
        Ok(Err(BnError::NegativeRho { .. })) => "rho_negative",
        _ => "not_applicable",
    };
    values.push(("verdict", Cell::text(verdict)));

    let mut record = with_columns(Kind::Count, values);
    record.paths = vec!["bracket", "coefficient"];
    record.cross_check_delta = Some(delta);
    record.status = status;
    record
}

fn problem_for(g: u32, r: u32, d: u32, mu: &Partition, f: i64) -> Result<DJProblem, String> {
    let params = SeriesParams::new(g, r, d).map_err(|e| e.to_string())?;
    DJProblem::new(params, mu.clone(), f).map_err(|e| e.to_string())
}

fn dim_record(g: u32, r: u32, d: u32, mu: &Partition, f: i64) -> Record {
    let problem = match problem_for(g, r, d, mu, f) {
        Ok(p) => p,
        Err(reason) => return skipped(Kind::Dim, reason),
    };
    let mut values = vec![
        ("rho", Cell::int(bn::rho(problem.params()))),
        ("e", Cell::int(mu.len() as u64)),
        ("mu_total", Cell::int(mu.total())),
        ("span_dimension", Cell::int(bn::span_dimension(mu, f))),
        (
            "expected_dim_fixed_series",
            Cell::int(bn::expected_dim_fixed_series(&problem)),
        ),
    ];
    let status = match bn::expected_dim_sigma(&problem) {
        Ok(dim) => {
            values.push(("expected_dim_sigma", Cell::int(dim)));
            Status::Ok
        }
        Err(e) => {
            values.push(("note", Cell::text(e.to_string())));
            Status::HypothesisViolation
        }
    };
    let mut record = with_columns(Kind::Dim, values);
    record.paths = vec!["closed_form"];
    record.status = status;
    record
}

fn empty_record(g: u32, r: u32, d: u32, mu: &Partition, f: i64) -> Record {
    let problem = match problem_for(g, r, d, mu, f) {
        Ok(p) => p,
        Err(reason) => return skipped(Kind::Empty, reason),
    };
    let mut values = vec![("rho", Cell::int(bn::rho(problem.params())))];
    let status = match bn::expected_dim_sigma(&problem) {
        Ok(dim) => {
            values.push(("expected_dim_sigma", Cell::int(dim)));
            values.push(("empty", Cell::Bool(dim < 0)));
            Status::Ok
        }
        Err(e) => {
            values.push(("note", Cell::text(e.to_string())));
            Status::HypothesisViolation
        }
    };
    let mut record = with_columns(Kind::Empty, values);
    record.paths = vec!["closed_form"];
    record.status = status;
    record
}

fn plucker_record(g: u32, r: u32, d: u32) -> Record {
    if r < 1 {
        return skipped(Kind::Plucker, "r must be at least 1".into());
    }
    let (count, total) = match dejonq::ramification_count_check(g, r, d) {
        Ok(pair) => pair,
        Err(e @ DejonqError::Integrality { .. }) => {
            let mut record = with_columns(Kind::Plucker, vec![("note", Cell::text(e.to_string()))]);
            record.status = Status::CrossCheckFailed;
            return record;
        }
        Err(e) => return skipped(Kind::Plucker, e.to_string()),
    };
    let delta: BigInt = &count - &total;
    let equal = delta.is_zero();
    let mut record = with_columns(
        Kind::Plucker,
        vec![
            ("dj_count", Cell::Int(count)),
            ("plucker_total", Cell::Int(total)),
            ("equal", Cell::Bool(equal)),
        ],
    );
    record.paths = vec!["coefficient", "closed_form"];
    record.cross_check_delta = Some(delta);
    record.status = if equal {
        Status::Ok
    } else {
        Status::CrossCheckFailed
    };
    record
}

/// Checks the flag-curve dimension identity on `samples` tuples drawn
/// uniformly from `[-5, 20]^6` with a seeded ChaCha8 generator.
pub fn identity_check(samples: usize, seed: u64) -> (usize, Vec<[i64; 6]>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let t: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-5..=20));
        let (lhs, rhs) = lls::proof_identity(t[0], t[1], t[2], t[3], t[4], t[5]);
        if lhs != rhs {
            failures.push(t);
        }
    }
    (samples - failures.len(), failures)
}

pub fn identity_record(samples: usize, seed: u64) -> Record {
    let (holds, failures) = identity_check(samples, seed);
    let first_failure = failures
        .first()
        .map(|t| Cell::text(format!("{t:?}")))
        .unwrap_or(Cell::Null);
    Record {
        inputs: vec![
            ("samples", Cell::int(samples as u64)),
            ("seed", Cell::int(seed)),
        ],
        result: vec![
            ("holds", Cell::int(holds as u64)),
            ("failures", Cell::int(failures.len() as u64)),
            ("first_failure", first_failure),
        ],
        paths: vec!["polynomial"],
        cross_check_delta: Some(BigInt::from(failures.len())),
        status: if failures.is_empty() {
            Status::Ok
        } else {
            Status::CrossCheckFailed
        },
        summary: Some(if failures.is_empty() {
            format!("{holds}/{samples} identity holds")
        } else {
            format!(
                "{holds}/{samples} identity holds; first failure {:?}",
                failures[0]
            )
        }),
    }
}

/// Runs a parsed command line; returns the text for stdout and the exit code.
/// Input errors come back as `Err` and map to exit code 2.
pub fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let request = match &cli.command {
        Command::Identity(args) => {
            let record = identity_record(args.samples, args.seed);
            let code = if record.status == Status::Ok {
                EXIT_OK
            } else {
                EXIT_CROSS_CHECK
            };
            return Ok((render(&[record], args.format, false), code));
        }
        Command::Count(a) => TableRequest::from_point(Kind::Count, a)?,
        Command::Dim(a) => TableRequest::from_point(Kind::Dim, a)?,
        Command::Empty(a) => TableRequest::from_point(Kind::Empty, a)?,
        Command::Plucker(a) => TableRequest::from_point(Kind::Plucker, a)?,
        Command::Sweep(a) => TableRequest::from_sweep(a)?,
    };
    let outcome = run(&request);
    if outcome.exit_code == EXIT_INVALID {
        let reasons: Vec<String> = outcome
            .records
            .iter()
            .filter(|r| r.status == Status::Skipped)
            .filter_map(|r| r.get("note").map(Cell::to_string))
            .collect();
        return Err(CliError(reasons.join("; ")));
    }
    Ok((
        render(&outcome.records, request.format, request.sweep),
        outcome.exit_code,
    ))
}
