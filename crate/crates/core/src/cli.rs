//! The `arc` command-line tool.
//!
//! Every command prints one JSON document on standard output (or an aligned
//! table with `--human`) that echoes the resolved configuration. Exit codes:
//! 0 success, 1 property or certificate refuted, 2 invalid input, 3 budget
//! exceeded.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{self, BergeBlocks, FamilySpec};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::formulas;
use crate::model::{parse_arc, write_arc, Coloring, EdgeSet, EdgeSetDoc, HostGraph};
use crate::motif::{find_copy, find_rainbow, verify_witness, MotifKind, MotifSpec, Witness};
use crate::solver::{self, Budget, SolveConfig, SolveResult, SolveStatus, SolveWitness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "arc", version, about = "Rainbow paths, cycles and matchings in complete uniform hypergraphs")]
struct Cli {
    /// Aligned tables instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    /// Worker threads for searches (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form Turán and anti-Ramsey values.
    Formulas(FormulasArgs),
    /// Build an extremal family or a lower-bound coloring.
    Construct(ConstructArgs),
    /// Search a coloring for a rainbow copy, or a family for any copy.
    Detect(DetectArgs),
    /// Check a certificate against an expected property.
    Verify(VerifyArgs),
    /// Exact anti-Ramsey number on a tiny host.
    SolveAr(SolveArgs),
    /// Exact Turán number on a tiny host.
    SolveTuran(SolveArgs),
    /// Monte-Carlo rainbow frequency of random surjective colorings.
    Simulate(SimulateArgs),
}

fn parse_kind(s: &str) -> std::result::Result<MotifKind, String> {
    s.parse::<MotifKind>().map_err(|e| e.to_string())
}

#[derive(Args, Debug, Serialize)]
struct HostArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    s: u32,
}

#[derive(Args, Debug, Serialize)]
struct MotifArgs {
    #[arg(long, value_parser = parse_kind)]
    motif: MotifKind,
    /// Number of edges.
    #[arg(long)]
    k: u32,
}

impl MotifArgs {
    fn spec(&self) -> Result<MotifSpec> {
        MotifSpec::new(self.motif, self.k)
    }
}

#[derive(Args, Debug, Serialize)]
struct FormulasArgs {
    #[command(flatten)]
    #[serde(flatten)]
    host: HostArgs,
    #[command(flatten)]
    #[serde(flatten)]
    motif: MotifArgs,
    /// Known `ex(n, s, B_{k-1})` for Berge cycle bounds.
    #[arg(long)]
    ex_shorter: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyName {
    Star,
    StarPlusEdge,
    StarPlusBook,
    StarPlusMatching,
    PairBook,
    DisjointCliques,
    /// Berge block coloring for paths with `--k` edges.
    BergeBlocks,
    /// The rainbow-free coloring for `--motif` with `--k` edges.
    LowerBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ColorScheme {
    /// Output the bare family.
    None,
    /// Distinct colors on the family, one more on the rest.
    RainbowPlusOne,
}

#[derive(Args, Debug, Serialize)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[command(flatten)]
    #[serde(flatten)]
    host: HostArgs,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    count: Option<u32>,
    #[arg(long)]
    block: Option<u32>,
    #[arg(long, value_parser = parse_kind)]
    motif: Option<MotifKind>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value = "none")]
    color: ColorScheme,
    /// Write the family (JSON) or coloring (arc v1) here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct DetectArgs {
    /// Coloring in arc v1 format.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    coloring: Option<PathBuf>,
    /// Edge set in JSON (`{"n":..,"s":..,"edges":[..]}`).
    #[arg(long)]
    family: Option<PathBuf>,
    #[command(flatten)]
    #[serde(flatten)]
    motif: MotifArgs,
    /// Write the witness JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Expectation {
    /// The coloring has no rainbow copy.
    RainbowFree,
    /// The coloring has a rainbow copy.
    Rainbow,
    /// The family has no copy.
    CopyFree,
    /// The witness file is a valid copy (rainbow if a coloring is given).
    Valid,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    #[arg(long)]
    coloring: Option<PathBuf>,
    #[arg(long)]
    family: Option<PathBuf>,
    /// Witness JSON, checked with `--expect valid`.
    #[arg(long)]
    witness: Option<PathBuf>,
    #[command(flatten)]
    #[serde(flatten)]
    motif: MotifArgs,
    #[arg(long, value_enum)]
    expect: Expectation,
}

#[derive(Args, Debug, Serialize)]
struct SolveArgs {
    #[command(flatten)]
    #[serde(flatten)]
    host: HostArgs,
    #[command(flatten)]
    #[serde(flatten)]
    motif: MotifArgs,
    #[arg(long, default_value_t = Budget::default().max_nodes)]
    max_nodes: u64,
    #[arg(long, default_value_t = Budget::default().max_millis / 1000)]
    max_seconds: u64,
    /// Override the solver's edge cap.
    #[arg(long)]
    edge_cap: Option<usize>,
    /// Write the witness (arc v1 coloring or JSON family) here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct SimulateArgs {
    #[command(flatten)]
    #[serde(flatten)]
    host: HostArgs,
    #[command(flatten)]
    #[serde(flatten)]
    motif: MotifArgs,
    /// Color counts, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    colors: Vec<u32>,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    /// CSV rows instead of JSON.
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Outcome of a command: its JSON document and exit code.
struct Report {
    doc: Value,
    code: i32,
    /// Preformatted text that replaces the JSON (CSV).
    raw: Option<String>,
}

impl Report {
    fn ok(doc: Value) -> Self {
        Report { doc, code: EXIT_OK, raw: None }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            let msg = e.render().to_string();
            let doc = error_doc("invalid-input", msg.trim());
            println!("{}", serde_json::to_string_pretty(&doc).expect("JSON value"));
            return EXIT_INVALID;
        }
    };
    let human = cli.human;
    let threads = cli.threads;
    let outcome = exec::with_threads(threads, move || dispatch(cli.command, threads));
    let report = outcome.unwrap_or_else(|e| Report { doc: error_json(&e), code: exit_code(&e), raw: None });
    match (&report.raw, human) {
        (Some(text), _) => print!("{text}"),
        (None, true) => print!("{}", human_table(&report.doc)),
        (None, false) => println!("{}", serde_json::to_string_pretty(&report.doc).expect("JSON value")),
    }
    report.code
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CertificateRefuted { .. } | Error::CherryShortfall { .. } => EXIT_REFUTED,
        Error::ResourceLimit(_) => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

fn error_doc(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

fn error_json(e: &Error) -> Value {
    let mut doc = error_doc(e.kind(), &e.to_string());
    if let Error::CertificateRefuted { witness } = e {
        doc["error"]["witness"] = json!(witness);
    }
    doc
}

fn dispatch(command: Command, threads: Option<usize>) -> Result<Report> {
    match command {
        Command::Formulas(a) => cmd_formulas(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Detect(a) => cmd_detect(a),
        Command::Verify(a) => cmd_verify(a),
        Command::SolveAr(a) => cmd_solve(a, true, threads),
        Command::SolveTuran(a) => cmd_solve(a, false, threads),
        Command::Simulate(a) => cmd_simulate(a),
    }
}

/// Reads an `arc v1` coloring.
pub fn read_coloring(path: &Path) -> Result<Coloring> {
    parse_arc(&fs::read_to_string(path)?)
}

/// Writes `coloring` in `arc v1` format.
pub fn write_coloring(coloring: &Coloring, path: &Path) -> Result<()> {
    Ok(fs::write(path, write_arc(coloring))?)
}

/// Reads an edge set in its JSON form.
pub fn read_family(path: &Path) -> Result<EdgeSet> {
    let doc: EdgeSetDoc = serde_json::from_str(&fs::read_to_string(path)?)
        .map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
    EdgeSet::try_from(doc)
}

pub fn write_family(set: &EdgeSet, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&EdgeSetDoc::from(set)).expect("edge set JSON");
    Ok(fs::write(path, text + "\n")?)
}

fn host_of(h: &HostArgs) -> Result<HostGraph> {
    HostGraph::new(h.n, h.s)
}

fn report_or_error(r: Result<formulas::BoundReport>) -> (Value, bool) {
    match r {
        Ok(rep) => (json!(rep), true),
        Err(e) => (error_json(&e)["error"].clone(), false),
    }
}

fn cmd_formulas(a: FormulasArgs) -> Result<Report> {
    let host = host_of(&a.host)?;
    let m = a.motif.spec()?;
    m.validate_for(&host)?;
    let (n, s) = (host.n(), host.s());
    let (turan, t_ok) = report_or_error(formulas::ex_value(m, n, s));
    let (ar, a_ok) = if m.kind.is_berge() {
        match formulas::berge_ar_bounds(m.kind, n, s, m.k, a.ex_shorter.map(Into::into)) {
            Ok((lo, hi)) => (json!({ "lower": lo, "upper": hi }), true),
            Err(e) => (error_json(&e)["error"].clone(), false),
        }
    } else {
        report_or_error(formulas::ar_value(m, n, s))
    };
    let doc = json!({ "command": "formulas", "config": a, "turan": turan, "anti_ramsey": ar });
    Ok(Report { doc, code: if t_ok || a_ok { EXIT_OK } else { EXIT_INVALID }, raw: None })
}

fn need<T>(v: Option<T>, flag: &str, family: FamilyName) -> Result<T> {
    v.ok_or_else(|| Error::invalid(format!("--{flag} is required for {family:?}")))
}

fn cmd_construct(a: ConstructArgs) -> Result<Report> {
    let host = host_of(&a.host)?;
    let f = a.family;
    let family = |spec: FamilySpec| constructions::build_family(host, spec);
    let (spec_doc, set, coloring): (Value, Option<EdgeSet>, Option<Coloring>) = match f {
        FamilyName::BergeBlocks => {
            let k = need(a.k, "k", f)?;
            let scheme = match a.block {
                Some(block) => BergeBlocks::Full { block },
                None => BergeBlocks::for_path(host.s(), k)?,
            };
            (json!(scheme), None, Some(constructions::berge_block_coloring_with(host, scheme)?))
        }
        FamilyName::LowerBound => {
            let kind = need(a.motif, "motif", f)?;
            let spec = constructions::lower_bound_family(host, kind, need(a.k, "k", f)?)?;
            let set = family(spec)?;
            (json!(spec), None, Some(constructions::rainbow_plus_one(&set)?))
        }
        _ => {
            let spec = match f {
                FamilyName::Star => FamilySpec::Star { t: need(a.t, "t", f)? },
                FamilyName::StarPlusEdge => FamilySpec::StarPlusEdge { t: need(a.t, "t", f)? },
                FamilyName::StarPlusBook => FamilySpec::StarPlusBook { t: need(a.t, "t", f)? },
                FamilyName::StarPlusMatching => {
                    FamilySpec::StarPlusMatching { t: need(a.t, "t", f)?, count: need(a.count, "count", f)? }
                }
                FamilyName::PairBook => FamilySpec::PairBook,
                FamilyName::DisjointCliques => FamilySpec::DisjointCliques { block: need(a.block, "block", f)? },
                FamilyName::BergeBlocks | FamilyName::LowerBound => unreachable!("handled above"),
            };
            let set = family(spec)?;
            match a.color {
                ColorScheme::None => (json!(spec), Some(set), None),
                ColorScheme::RainbowPlusOne => {
                    let c = constructions::rainbow_plus_one(&set)?;
                    (json!(spec), None, Some(c))
                }
            }
        }
    };
    let mut doc = json!({ "command": "construct", "config": a, "family": spec_doc });
    if let Some(set) = &set {
        doc["edges"] = json!(set.len());
        match &a.out {
            Some(p) => write_family(set, p)?,
            None => doc["edge_set"] = json!(EdgeSetDoc::from(set)),
        }
    }
    if let Some(c) = &coloring {
        doc["colors"] = json!(c.num_colors());
        match &a.out {
            Some(p) => write_coloring(c, p)?,
            None => doc["coloring"] = json!(write_arc(c)),
        }
    }
    if let Some(p) = &a.out {
        doc["out"] = json!(p);
    }
    Ok(Report::ok(doc))
}

fn cmd_detect(a: DetectArgs) -> Result<Report> {
    let m = a.motif.spec()?;
    let witness = match (&a.coloring, &a.family) {
        (Some(p), _) => find_rainbow(&read_coloring(p)?, m)?,
        (None, Some(p)) => find_copy(&read_family(p)?, m)?,
        (None, None) => return Err(Error::invalid("give --coloring or --family")),
    };
    if let (Some(p), Some(w)) = (&a.out, &witness) {
        fs::write(p, serde_json::to_string_pretty(w).expect("witness JSON") + "\n")?;
    }
    let found = witness.is_some();
    Ok(Report::ok(json!({ "command": "detect", "config": a, "found": found, "witness": witness })))
}

fn cmd_verify(a: VerifyArgs) -> Result<Report> {
    let m = a.motif.spec()?;
    let coloring = a.coloring.as_deref().map(read_coloring).transpose()?;
    let family = a.family.as_deref().map(read_family).transpose()?;
    let (holds, witness): (bool, Option<Witness>) = match a.expect {
        Expectation::RainbowFree | Expectation::Rainbow => {
            let c = coloring.as_ref().ok_or_else(|| Error::invalid("--coloring is required"))?;
            let w = find_rainbow(c, m)?;
            (w.is_none() == (a.expect == Expectation::RainbowFree), w)
        }
        Expectation::CopyFree => {
            let f = family.as_ref().ok_or_else(|| Error::invalid("--family is required"))?;
            let w = find_copy(f, m)?;
            (w.is_none(), w)
        }
        Expectation::Valid => {
            let p = a.witness.as_ref().ok_or_else(|| Error::invalid("--witness is required"))?;
            let w: Witness = serde_json::from_str(&fs::read_to_string(p)?)
                .map_err(|e| Error::invalid(format!("{}: {e}", p.display())))?;
            let mut ok = verify_witness(&w, m, coloring.as_ref())?;
            if let Some(f) = &family {
                ok &= w.edges.iter().all(|e| f.contains(e));
            }
            (ok, Some(w))
        }
    };
    let doc = json!({ "command": "verify", "config": a, "holds": holds, "witness": witness });
    Ok(Report { doc, code: if holds { EXIT_OK } else { EXIT_REFUTED }, raw: None })
}

fn cmd_solve(a: SolveArgs, anti_ramsey: bool, threads: Option<usize>) -> Result<Report> {
    let host = host_of(&a.host)?;
    let m = a.motif.spec()?;
    let budget = Budget::new(a.max_nodes, Duration::from_secs(a.max_seconds))?;
    let exec = if threads == Some(1) { Execution::Sequential } else { Execution::default() };
    let config = SolveConfig { budget, edge_cap: a.edge_cap, exec };
    let result: SolveResult = if anti_ramsey {
        solver::ar_exact_with(host, m, &config)?
    } else {
        solver::turan_exact_with(host, m, &config)?
    };
    if let Some(p) = &a.out {
        match &result.witness {
            Some(SolveWitness::Coloring(c)) => write_coloring(c, p)?,
            Some(SolveWitness::Family(f)) => write_family(f, p)?,
            None => {}
        }
    }
    let code = if result.status == SolveStatus::BudgetExceeded { EXIT_BUDGET } else { EXIT_OK };
    let name = if anti_ramsey { "solve-ar" } else { "solve-turan" };
    let doc = json!({ "command": name, "config": a, "result": result });
    Ok(Report { doc, code, raw: None })
}

fn cmd_simulate(a: SimulateArgs) -> Result<Report> {
    let host = host_of(&a.host)?;
    let m = a.motif.spec()?;
    let estimates = a
        .colors
        .iter()
        .map(|&c| solver::rainbow_probability(host, m, c, a.trials, a.seed))
        .collect::<Result<Vec<_>>>()?;
    let raw = a.csv.then(|| {
        let mut text = String::from("n,s,motif,k,colors,trials,seed,hits,fraction\n");
        for e in &estimates {
            text.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                e.n, e.s, e.motif.kind, e.motif.k, e.colors, e.trials, e.seed, e.hits, e.fraction
            ));
        }
        text
    });
    let doc = json!({ "command": "simulate", "config": a, "estimates": estimates });
    match (&a.out, raw) {
        (Some(p), Some(text)) => {
            fs::write(p, text)?;
            Ok(Report::ok(doc))
        }
        (Some(p), None) => {
            fs::write(p, serde_json::to_string_pretty(&doc).expect("JSON value") + "\n")?;
            Ok(Report::ok(doc))
        }
        (None, raw) => Ok(Report { doc, code: EXIT_OK, raw }),
    }
}

/// Flattens a JSON document into aligned `key  value` rows.
fn human_table(doc: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", doc, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&key(k), v, rows)),
        Value::String(s) if s.contains('\n') => {
            rows.push((prefix.to_string(), format!("<{} lines>", s.lines().count())));
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            rows.push((prefix.to_string(), v.to_string()));
        }
        Value::Array(items) => items.iter().enumerate().for_each(|(i, v)| flatten(&key(&i.to_string()), v, rows)),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}
