//! Report assembly and command implementations for the `gtkit` binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use gtkit_core::closedforms::{
    bender_knuth_count, bender_knuth_gf, intro_binomial, refined_asm, ssyt_product, theorem_main_q,
    theorem_main_q_fraction, theorem_special, tsspp_product, FormulaId,
};
use gtkit_core::counting::{
    enumerate_patterns, f_bruteforce, f_recursive, fq_bruteforce, fq_recursive, PlainRecurrence, QRecurrence,
};
use gtkit_core::suites::{run_suite, Suite, SweepConfig, Verdict};
use gtkit_core::{Partition, TopRowKey};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ENGINE_MISMATCH: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<gtkit_core::Error> for CliError {
    fn from(e: gtkit_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultEntry {
    pub label: String,
    pub value: String,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub identity: String,
    pub parameters: String,
    /// `"pass"` or `"fail"`.
    pub verdict: String,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
}

impl VerdictRecord {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    fn from_core(v: Verdict, suite: Option<Suite>) -> Self {
        VerdictRecord {
            identity: v.identity,
            parameters: v.parameters,
            verdict: if v.passed { "pass" } else { "fail" }.to_string(),
            checked: v.checked,
            counterexample: v.counterexample,
            note: v.note,
            suite: suite.map(|s| s.name().to_string()),
        }
    }

    fn simple(identity: &str, parameters: String, passed: bool, checked: usize, counterexample: Option<String>) -> Self {
        VerdictRecord {
            identity: identity.to_string(),
            parameters,
            verdict: if passed { "pass" } else { "fail" }.to_string(),
            checked,
            counterexample,
            note: None,
            suite: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Vec<ResultEntry>,
    pub verdicts: Vec<VerdictRecord>,
    /// Process exit code implied by the report.
    #[serde(skip)]
    pub exit_code: i32,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: Vec::new(),
            verdicts: Vec::new(),
            exit_code: EXIT_OK,
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    fn result(&mut self, label: impl Into<String>, value: impl ToString, provenance: &str) {
        self.results.push(ResultEntry { label: label.into(), value: value.to_string(), provenance: provenance.into() });
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(VerdictRecord::passed)
    }

    /// Sets `code` as the exit code if some verdict failed.
    fn fail_with(&mut self, code: i32) {
        if !self.all_passed() {
            self.exit_code = code;
        }
    }

    /// Pretty JSON with object keys in sorted order.
    pub fn to_json(&self) -> String {
        // serde_json::Value keeps maps in a BTreeMap, which sorts the keys
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }
}

/// Inclusive integer range written as `a`, `a..b` or `a..=b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn iter(self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad integer `{t}`: {e}"));
        let Some((a, b)) = s.split_once("..") else {
            let v = parse(s)?;
            return Ok(IntRange { lo: v, hi: v });
        };
        let b = b.strip_prefix('=').unwrap_or(b);
        let r = IntRange { lo: parse(a)?, hi: parse(b)? };
        if r.lo > r.hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(r)
    }
}

impl std::fmt::Display for IntRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// Comma-separated integers; the empty string is the empty list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim().is_empty() {
            return Ok(IntList(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| format!("bad integer `{t}`: {e}")))
            .collect::<Result<_, _>>()
            .map(IntList)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Brute,
    Rec,
    Both,
}

#[derive(Clone, Debug, Args)]
pub struct KeyArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub c: i64,
    /// Interior top-row entries, comma separated (n - r values).
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    pub ks: IntList,
}

impl KeyArgs {
    fn key(&self) -> CliResult<TopRowKey> {
        Ok(TopRowKey::new(self.r, self.n, self.c, self.ks.0.clone())?)
    }
}

#[derive(Clone, Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub key: KeyArgs,
    #[arg(long, value_enum, default_value_t = Engine::Brute)]
    pub engine: Engine,
    /// Count with the q-weight instead of the sign alone.
    #[arg(long)]
    pub q: bool,
}

pub fn cmd_count(args: &CountArgs) -> CliResult<RunReport> {
    let key = args.key.key()?;
    let mut report = RunReport::new("count");
    report.param("r", key.r);
    report.param("n", key.n);
    report.param("c", key.c);
    report.param("ks", key.ks.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    report.param("engine", format!("{:?}", args.engine).to_lowercase());
    report.param("q", args.q);
    let label = if args.q { format!("F_q{key}") } else { format!("F{key}") };
    let use_brute = args.engine != Engine::Rec;
    let use_rec = args.engine != Engine::Brute;
    let (brute, rec) = if args.q {
        (
            use_brute.then(|| fq_bruteforce(&key).to_string()),
            use_rec.then(|| fq_recursive(&key, &mut QRecurrence::new()).to_string()),
        )
    } else {
        (
            use_brute.then(|| f_bruteforce(&key).to_string()),
            use_rec.then(|| f_recursive(&key, &mut PlainRecurrence::new()).to_string()),
        )
    };
    if let Some(v) = &brute {
        report.result(label.clone(), v, "bruteforce");
    }
    if let Some(v) = &rec {
        report.result(label.clone(), v, "recursion");
    }
    if let (Some(b), Some(r)) = (&brute, &rec) {
        let agree = b == r;
        let cex = (!agree).then(|| format!("{key}: bruteforce {b}, recursion {r}"));
        report.verdicts.push(VerdictRecord::simple("engines-agree", key.to_string(), agree, 1, cex));
        report.fail_with(EXIT_ENGINE_MISMATCH);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, Args)]
pub struct TableArgs {
    /// Value or inclusive range such as `1..4`.
    #[arg(long)]
    pub n: IntRange,
    #[arg(long)]
    pub c: IntRange,
    /// Range of k; defaults to `-n..c+n` for each (n, c).
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<IntRange>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: i64,
    pub c: i64,
    pub k: i64,
    pub brute: BigRational,
    pub formula: BigRational,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.brute == self.formula
    }
}

pub fn table_rows(args: &TableArgs) -> CliResult<Vec<TableRow>> {
    if args.n.lo < 1 {
        return Err(CliError::Usage("n must be positive".into()));
    }
    if args.c.lo < 0 {
        return Err(CliError::Usage("c must be nonnegative".into()));
    }
    let mut cells = Vec::new();
    for n in args.n.iter() {
        for c in args.c.iter() {
            let ks = args.k.unwrap_or(IntRange { lo: -n, hi: c + n });
            cells.extend(ks.iter().map(|k| (n, c, k)));
        }
    }
    cells
        .par_iter()
        .map(|&(n, c, k)| {
            let key = TopRowKey::spp(n as usize, c, k)?;
            Ok(TableRow { n, c, k, brute: f_bruteforce(&key), formula: theorem_special(n as u32, c, k) })
        })
        .collect()
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,c,k,brute,formula,match\n");
    for r in rows {
        writeln!(out, "{},{},{},{},{},{}", r.n, r.c, r.k, r.brute, r.formula, r.matches()).unwrap();
    }
    out
}

pub fn cmd_table(args: &TableArgs) -> CliResult<(RunReport, Vec<TableRow>)> {
    let rows = table_rows(args)?;
    let mut report = RunReport::new("table");
    report.param("n", args.n);
    report.param("c", args.c);
    report.param("k", args.k.map_or("-n..c+n".to_string(), |k| k.to_string()));
    for row in &rows {
        let key = format!("({},{},{};{})", row.n - 1, row.n, row.c, row.k);
        report.result(format!("F{key}"), &row.brute, "bruteforce");
        report.result(format!("special{key}"), &row.formula, "closed form");
    }
    let bad = rows.iter().find(|r| !r.matches());
    report.verdicts.push(VerdictRecord::simple(
        "special-closed-form",
        format!("n={}, c={}", args.n, args.c),
        bad.is_none(),
        rows.len(),
        bad.map(|r| format!("n={}, c={}, k={}: {} != {}", r.n, r.c, r.k, r.brute, r.formula)),
    ));
    report.fail_with(EXIT_VERIFY_FAILED);
    Ok((report, rows))
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub fund_functions: usize,
    #[arg(long, default_value_t = 25)]
    pub fund_samples: usize,
    /// Largest n for the zero and interpolation sweeps.
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Largest c for the zero and interpolation sweeps.
    #[arg(long, default_value_t = 4)]
    pub max_c: i64,
}

pub fn selected_suites(name: &str) -> CliResult<Vec<Suite>> {
    let mut suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        name.split(',').map(|s| s.trim().parse::<Suite>()).collect::<Result<_, _>>()?
    };
    suites.sort_by_key(|s| s.name());
    suites.dedup();
    Ok(suites)
}

pub fn cmd_verify(args: &VerifyArgs) -> CliResult<RunReport> {
    let suites = selected_suites(&args.suite)?;
    if args.max_n < 2 {
        return Err(CliError::Usage("--max-n must be at least 2".into()));
    }
    if args.max_c < 0 {
        return Err(CliError::Usage("--max-c must be nonnegative".into()));
    }
    let cfg = SweepConfig {
        seed: args.seed,
        fund_functions: args.fund_functions,
        fund_samples: args.fund_samples,
        max_n: args.max_n,
        max_c: args.max_c,
    };
    let mut report = RunReport::new("verify");
    report.param("suite", &args.suite);
    report.param("seed", cfg.seed);
    report.param("fund_functions", cfg.fund_functions);
    report.param("fund_samples", cfg.fund_samples);
    report.param("max_n", cfg.max_n);
    report.param("max_c", cfg.max_c);
    let per_suite: Vec<Vec<Verdict>> = suites.par_iter().map(|&s| run_suite(s, &cfg)).collect();
    for (suite, verdicts) in suites.iter().zip(per_suite) {
        report.verdicts.extend(verdicts.into_iter().map(|v| VerdictRecord::from_core(v, Some(*suite))));
    }
    let passed = report.verdicts.iter().filter(|v| v.passed()).count();
    let checked: usize = report.verdicts.iter().map(|v| v.checked).sum();
    report.result("verdicts passed", format!("{passed}/{}", report.verdicts.len()), "summary");
    report.result("instances checked", checked, "summary");
    report.fail_with(EXIT_VERIFY_FAILED);
    Ok(report)
}

#[derive(Clone, Debug, Args)]
pub struct ClosedArgs {
    /// One of intro-binomial, special, main-q, bk-count, bk-gf, ssyt, refined-asm, tsspp.
    #[arg(long)]
    pub formula: String,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long)]
    pub r: Option<u32>,
    /// Partition for `ssyt`, comma separated.
    #[arg(long)]
    pub shape: Option<IntList>,
}

fn need<T: Copy>(v: Option<T>, flag: &str, formula: FormulaId) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("formula {formula} needs --{flag}")))
}

pub fn cmd_closed(args: &ClosedArgs) -> CliResult<RunReport> {
    let id: FormulaId = args.formula.parse()?;
    let mut report = RunReport::new("closed");
    report.param("formula", id);
    for (name, v) in [("n", args.n.map(i64::from)), ("c", args.c), ("k", args.k), ("r", args.r.map(i64::from))] {
        if let Some(v) = v {
            report.param(name, v);
        }
    }
    let value = match id {
        FormulaId::IntroBinomial => intro_binomial(need(args.r, "r", id)?, need(args.k, "k", id)?).to_string(),
        FormulaId::TheoremSpecial => {
            theorem_special(need(args.n, "n", id)?, need(args.c, "c", id)?, need(args.k, "k", id)?).to_string()
        }
        FormulaId::TheoremMainQ => {
            let (n, c, k) = (need(args.n, "n", id)?, need(args.c, "c", id)?, need(args.k, "k", id)?);
            match theorem_main_q(n, c, k) {
                Ok(p) => p.to_string(),
                Err(_) => theorem_main_q_fraction(n, c, k).to_string(),
            }
        }
        FormulaId::BenderKnuthCount => bender_knuth_count(need(args.n, "n", id)?, need(args.c, "c", id)?).to_string(),
        FormulaId::BenderKnuthGF => bender_knuth_gf(need(args.n, "n", id)?, need(args.c, "c", id)?)?.to_string(),
        FormulaId::SSYTProduct => {
            let IntList(shape) = args.shape.clone().ok_or_else(|| CliError::Usage(format!("formula {id} needs --shape")))?;
            let k = need(args.k, "k", id)?;
            if k < 0 {
                return Err(CliError::Usage("k must be nonnegative".into()));
            }
            report.param("shape", shape.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
            ssyt_product(&Partition::new(shape)?, k as usize).to_string()
        }
        FormulaId::RefinedASM => refined_asm(need(args.n, "n", id)?, need(args.k, "k", id)?).to_string(),
        FormulaId::TSSPP => tsspp_product(need(args.n, "n", id)?).to_string(),
    };
    report.result(id.name(), value, "closed form");
    Ok(report)
}

#[derive(Clone, Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub key: KeyArgs,
    /// Stop after this many patterns.
    #[arg(long, default_value_t = 1000)]
    pub limit: usize,
}

pub fn cmd_enumerate(args: &EnumerateArgs) -> CliResult<RunReport> {
    let key = args.key.key()?;
    let mut report = RunReport::new("enumerate");
    report.param("key", &key);
    report.param("limit", args.limit);
    let mut total = 0usize;
    for p in enumerate_patterns(&key) {
        if total < args.limit {
            let rows: Vec<String> =
                p.rows().iter().map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")).collect();
            report.result(rows.join(" | "), format!("sign={:+} norm={}", p.sign(), p.norm()), "enumeration");
        }
        total += 1;
    }
    report.result("patterns", total, "enumeration");
    Ok(report)
}
