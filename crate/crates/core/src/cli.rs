//! Command-line front end. [`run`] takes the arguments and output streams so
//! it can be driven in-process; the binary only forwards to it.
//!
//! Exit codes: 0 success, 1 a failed claim or a failed computation (budget,
//! preconditions), 2 a usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::claims::{run_suite, SuiteOptions};
use crate::constructions::{
    gm_switch, join_family, path_join_pair, regular_construction, tensor_family_pair, torus_gap_family,
    SwitchingPartition,
};
use crate::error::{Error, Result};
use crate::forcing::{closure, zero_forcing_number_with, Rule, SearchConfig};
use crate::graph::{
    emit_edgelist, emit_graph6, find_isomorphism, named_graph, parse_edgelist, parse_graph6, Graph, GraphName,
    VertexSet,
};
use crate::skew_rank::{max_nullity_witness_search, WitnessSearch};
use crate::spectra::{char_poly, MatrixKind};

#[derive(Parser, Debug)]
#[command(
    name = "zfforge",
    version,
    about = "Exact zero forcing numbers and cospectral graph constructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a built-in graph.
    Gen {
        /// Graph name, optionally with parameters: `cycle:6`.
        name: String,
        /// Parameters, as an alternative to `name:p1,p2`.
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        format: OutFormat,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Exact zero forcing number with a minimum forcing set.
    Zf {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "standard", value_parser = parse_rule)]
        rule: Rule,
        /// Write the forcing certificate to this file.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Closure of a vertex set, with its forcing chronology.
    Closure {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "standard", value_parser = parse_rule)]
        rule: Rule,
        /// Comma-separated initial vertices; empty for none.
        #[arg(long, default_value = "")]
        set: String,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Characteristic polynomial of A, L or Q.
    Charpoly {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "A", value_parser = parse_matrix)]
        matrix: MatrixKind,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Whether two graphs share a characteristic polynomial.
    Cospectral {
        #[command(flatten)]
        pair: InputPair,
        #[arg(long, default_value = "A", value_parser = parse_matrix)]
        matrix: MatrixKind,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Isomorphism test with an explicit mapping.
    Iso {
        #[command(flatten)]
        pair: InputPair,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Godsil–McKay switching on the given parts.
    GmSwitch {
        #[command(flatten)]
        input: Input,
        /// One part as comma-separated vertices; repeat, or separate parts
        /// with `;`.
        #[arg(long, required = true)]
        parts: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        format: OutFormat,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Build a cospectral pair; prints JSON.
    Construct(ConstructArgs),
    /// Skew-symmetric realisation with the largest nullity found.
    SkewNullity {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = WitnessSearch::default().budget)]
        budget: u64,
        #[arg(long, default_value_t = WitnessSearch::default().seed)]
        seed: u64,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Run the claim suite; exit 0 iff every claim passes.
    VerifyPaper {
        /// Only claims with this id or id prefix (segment-wise).
        #[arg(long)]
        only: Option<String>,
        /// Print the JSON report, or write it to the given file.
        #[arg(long, num_args = 0..=1)]
        json: Option<Option<PathBuf>>,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Seed of the random sweeps.
        #[arg(long, default_value_t = SuiteOptions::default().seed)]
        seed: u64,
        /// Include per-claim wall time (makes output run-dependent).
        #[arg(long)]
        timings: bool,
        /// List claim ids and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args, Debug)]
struct JsonFlag {
    /// Machine-readable output, including errors.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct Input {
    /// Built-in name (`cycle:6`), edge-list or graph6 file, or graph6 string.
    input: String,
    #[arg(long, value_enum)]
    input_format: Option<InFormat>,
}

#[derive(Args, Debug)]
struct InputPair {
    first: String,
    second: String,
    #[arg(long, value_enum)]
    input_format: Option<InFormat>,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: ConstructKind,
    /// First graph (default depends on the construction).
    #[arg(long)]
    g1: Option<String>,
    #[arg(long)]
    g2: Option<String>,
    /// Path length for theorem51.
    #[arg(long)]
    m: Option<usize>,
    /// Block parameter for regular6k.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Factor size for tensor-family (default 3) and join-family (default 2).
    #[arg(long)]
    r: Option<usize>,
    /// Torus parameter for corollary52.
    #[arg(long, default_value_t = 3)]
    c: usize,
    #[arg(long, value_enum)]
    input_format: Option<InFormat>,
    #[command(flatten)]
    out: JsonFlag,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructKind {
    Theorem51,
    Regular6k,
    TensorFamily,
    JoinFamily,
    Corollary52,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InFormat {
    Name,
    Graph6,
    Edgelist,
}

fn parse_rule(s: &str) -> std::result::Result<Rule, String> {
    Rule::from_str(s).map_err(|e| e.to_string())
}

fn parse_matrix(s: &str) -> std::result::Result<MatrixKind, String> {
    MatrixKind::from_str(s).map_err(|e| e.to_string())
}

/// Reads a graph from a name, a file, or a graph6 string.
///
/// Without an explicit format: an existing file is read (graph6 if its
/// first line looks like graph6, an edge list otherwise); a string whose
/// head before `:` is a built-in name is built; anything else is parsed as
/// graph6.
pub fn load_graph(spec: &str, format: Option<&str>) -> Result<Graph> {
    let format = match format {
        Some(f) => Some(InFormat::from_str(f, true).map_err(Error::Parse)?),
        None => None,
    };
    load(spec, format)
}

fn load(spec: &str, format: Option<InFormat>) -> Result<Graph> {
    let path = Path::new(spec);
    let from_file = || std::fs::read_to_string(path);
    match format {
        Some(InFormat::Name) => named_graph(spec),
        Some(InFormat::Graph6) if path.is_file() => parse_graph6(&from_file()?),
        Some(InFormat::Graph6) => parse_graph6(spec),
        Some(InFormat::Edgelist) => parse_edgelist(&from_file()?),
        None if path.is_file() => {
            let text = from_file()?;
            if looks_like_graph6(&text) {
                parse_graph6(&text)
            } else {
                parse_edgelist(&text)
            }
        }
        None if GraphName::from_str(spec.split(':').next().unwrap_or("")).is_ok() => named_graph(spec),
        None => parse_graph6(spec),
    }
}

fn looks_like_graph6(text: &str) -> bool {
    let line = text.lines().next().unwrap_or("").trim();
    let body = line.strip_prefix(">>graph6<<").unwrap_or(line);
    !body.is_empty() && body.bytes().all(|b| (63..=126).contains(&b))
}

fn parse_set(n: usize, text: &str) -> Result<VertexSet> {
    let items = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad vertex `{s}`: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexSet::from_indices(n, items)
}

fn emit(g: &Graph, format: OutFormat) -> String {
    match format {
        OutFormat::Graph6 => emit_graph6(g) + "\n",
        OutFormat::Edgelist => emit_edgelist(g),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::UnknownGraph(_)
        | Error::BadParams { .. }
        | Error::VertexOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::OrderCap(_)
        | Error::Io(_) => 2,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::UnknownGraph(_) => "unknown_graph",
        Error::BadParams { .. } => "bad_params",
        Error::VertexOutOfRange { .. } | Error::SelfLoop(_) => "bad_graph",
        Error::OrderCap(_) => "order_cap",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
        Error::BudgetExceeded(_) => "budget_exceeded",
        Error::InvalidSwitching(_) => "invalid_switching",
        Error::Preconditions(_) => "preconditions",
    }
}

/// Output of one command: text for stdout and the exit code.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let wants_json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            if wants_json {
                let body = json!({ "error": { "kind": "usage", "message": e.to_string() } });
                let _ = writeln!(stdout, "{body}");
            } else {
                let _ = write!(stderr, "{e}");
            }
            return 2;
        }
    };
    let json_errors = wants_json;
    match dispatch(cli.command) {
        Ok(out) => {
            let _ = stdout.write_all(out.text.as_bytes());
            out.code
        }
        Err(e) => {
            if json_errors {
                let mut body = json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } });
                if let Error::Preconditions(list) = &e {
                    body["error"]["preconditions"] = json!(list);
                }
                if let Error::InvalidSwitching(v) = &e {
                    body["error"]["violation"] = json!(v);
                }
                let _ = writeln!(stdout, "{body}");
            } else {
                let _ = writeln!(stderr, "error: {e}");
            }
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command) -> Result<Output> {
    let search = SearchConfig::from_env()?;
    match command {
        Command::Gen {
            name,
            params,
            format,
            out,
        } => {
            let g = if params.is_empty() {
                named_graph(&name)?
            } else {
                crate::graph::build_named(name.parse()?, &params)?
            };
            if out.json {
                return Ok(Output::ok(to_json(&json!({
                    "order": g.order(),
                    "size": g.size(),
                    "graph6": emit_graph6(&g),
                    "edges": g.edges().collect::<Vec<_>>(),
                }))?));
            }
            Ok(Output::ok(emit(&g, format)))
        }
        Command::Zf {
            input,
            rule,
            certificate,
            out,
        } => {
            let g = load(&input.input, input.input_format)?;
            let r = zero_forcing_number_with(&g, rule, &search)?;
            if let Some(path) = certificate {
                std::fs::write(path, to_json(&r.witness)?)?;
            }
            if out.json {
                return Ok(Output::ok(to_json(&r)?));
            }
            let set: Vec<String> = r.witness.initial.iter().map(|v| v.to_string()).collect();
            Ok(Output::ok(format!("{}\nwitness: {}\n", r.value, set.join(","))))
        }
        Command::Closure { input, rule, set, out } => {
            let g = load(&input.input, input.input_format)?;
            let initial = parse_set(g.order(), &set)?;
            let c = closure(&g, rule, initial)?;
            let complete = c.blue == g.vertices();
            if out.json {
                return Ok(Output::ok(to_json(&json!({
                    "blue": c.blue,
                    "forcing_set": complete,
                    "certificate": c.certificate,
                }))?));
            }
            let mut text = String::new();
            for (u, w) in &c.certificate.forces {
                text += &format!("{u} -> {w}\n");
            }
            let blue: Vec<String> = c.blue.iter().map(|v| v.to_string()).collect();
            text += &format!("blue: {}\nforcing set: {complete}\n", blue.join(","));
            Ok(Output::ok(text))
        }
        Command::Charpoly { input, matrix, out } => {
            let g = load(&input.input, input.input_format)?;
            let p = char_poly(&g, matrix);
            if out.json {
                return Ok(Output::ok(to_json(&json!({ "matrix": matrix, "coefficients": p }))?));
            }
            Ok(Output::ok(format!("{p}\n")))
        }
        Command::Cospectral { pair, matrix, out } => {
            let a = load(&pair.first, pair.input_format)?;
            let b = load(&pair.second, pair.input_format)?;
            let (pa, pb) = (char_poly(&a, matrix), char_poly(&b, matrix));
            let same = pa == pb;
            if out.json {
                return Ok(Output::ok(to_json(&json!({
                    "matrix": matrix,
                    "cospectral": same,
                    "first": pa,
                    "second": pb,
                }))?));
            }
            Ok(Output::ok(format!("{same}\n{pa}\n{pb}\n")))
        }
        Command::Iso { pair, out } => {
            let a = load(&pair.first, pair.input_format)?;
            let b = load(&pair.second, pair.input_format)?;
            let mapping = find_isomorphism(&a, &b);
            if out.json {
                return Ok(Output::ok(to_json(&json!({
                    "isomorphic": mapping.is_some(),
                    "mapping": mapping,
                }))?));
            }
            Ok(Output::ok(match mapping {
                Some(m) => {
                    let m: Vec<String> = m.iter().map(|v| v.to_string()).collect();
                    format!("true\nmapping: {}\n", m.join(","))
                }
                None => "false\n".to_string(),
            }))
        }
        Command::GmSwitch {
            input,
            parts,
            format,
            out,
        } => {
            let g = load(&input.input, input.input_format)?;
            let parts = parts
                .iter()
                .flat_map(|p| p.split(';'))
                .filter(|p| !p.trim().is_empty())
                .map(|p| parse_set(g.order(), p))
                .collect::<Result<Vec<_>>>()?;
            let partition = SwitchingPartition::new(&g, parts)?;
            let switched = gm_switch(&g, &partition);
            if out.json {
                let body = json!({
                    "validation": partition.validation,
                    "graph": switched.as_ref().ok().map(emit_graph6),
                });
                let code = if switched.is_ok() { 0 } else { 1 };
                return Ok(Output {
                    text: to_json(&body)?,
                    code,
                });
            }
            Ok(Output::ok(emit(&switched?, format)))
        }
        Command::Construct(args) => construct(args),
        Command::SkewNullity {
            input,
            budget,
            seed,
            out,
        } => {
            let g = load(&input.input, input.input_format)?;
            let w = max_nullity_witness_search(&g, &WitnessSearch { budget, seed })?;
            if out.json {
                return Ok(Output::ok(to_json(&w)?));
            }
            let mut text = format!("{}\ncertified: {}\n", w.achieved_nullity, w.certified);
            for ((i, j), x) in &w.entries {
                text += &format!("{i} {j} {x}\n");
            }
            Ok(Output::ok(text))
        }
        Command::VerifyPaper {
            only,
            json,
            jobs,
            seed,
            timings,
            list,
        } => {
            if list {
                return Ok(Output::ok(crate::claims::claim_ids().join("\n") + "\n"));
            }
            let opts = SuiteOptions {
                only,
                jobs,
                seed,
                timings,
                search,
            };
            let report = run_suite(&opts)?;
            let code = if report.all_passed() { 0 } else { 1 };
            let text = match json {
                Some(None) => to_json(&report)?,
                Some(Some(path)) => {
                    std::fs::write(&path, to_json(&report)?)?;
                    summary_text(&report)
                }
                None => summary_text(&report),
            };
            Ok(Output { text, code })
        }
    }
}

fn summary_text(report: &crate::claims::SuiteReport) -> String {
    let mut text = String::new();
    for c in &report.claims {
        let status = match c.status {
            crate::claims::Status::Pass => "PASS",
            crate::claims::Status::Fail => "FAIL",
            crate::claims::Status::SkippedBudget => "SKIP",
        };
        let computed = c.computed.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string());
        text += &format!("{status} {} expected {} computed {computed}", c.id, c.expected);
        if let Some(ms) = c.wall_ms {
            text += &format!(" ({ms} ms)");
        }
        if let Some(e) = &c.error {
            text += &format!(" [{e}]");
        }
        text += "\n";
    }
    let s = report.summary;
    text += &format!("{} passed, {} failed, {} skipped\n", s.pass, s.fail, s.skipped);
    text
}

fn construct(args: ConstructArgs) -> Result<Output> {
    let get = |spec: &Option<String>, default: &str| load(spec.as_deref().unwrap_or(default), args.input_format);
    let value = match args.kind {
        ConstructKind::Theorem51 => {
            let g1 = get(&args.g1, "fig1_left")?;
            let g2 = get(&args.g2, "fig1_right")?;
            let m = args.m.unwrap_or(g1.order());
            serde_json::to_value(path_join_pair(&g1, &g2, m)?)?
        }
        ConstructKind::Regular6k => serde_json::to_value(regular_construction(args.k)?)?,
        ConstructKind::TensorFamily => {
            let g1 = get(&args.g1, "ex32_G")?;
            let g2 = get(&args.g2, "ex32_Gprime")?;
            serde_json::to_value(tensor_family_pair(&g1, &g2, args.r.unwrap_or(3))?)?
        }
        ConstructKind::JoinFamily => {
            let g1 = get(&args.g1, "fig1_left")?;
            let g2 = get(&args.g2, "fig1_right")?;
            serde_json::to_value(join_family(&g1, &g2, args.r.unwrap_or(2))?)?
        }
        ConstructKind::Corollary52 => serde_json::to_value(torus_gap_family(args.c)?)?,
    };
    let _ = args.out.json;
    Ok(Output::ok(to_json(&value)?))
}
