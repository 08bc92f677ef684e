//! Command-line front end: `analyze`, `bounds`, `certify`, `generate`,
//! `sweep` and `convert`.
//!
//! Exit codes: 0 on success, 1 on data errors (malformed input, failed
//! verification, invalid certificate, violated bound under
//! `--require-satisfied`), 2 on usage errors.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::ops::ControlFlow;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::bounds::{evaluate_bound, BoundId};
use crate::certify::{certify, Theorem};
use crate::constructions::{
    closed_form_ex, polarity_graph, punctured_polarity, FamilyParams,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{
    analyze, bounds_csv_rows, bounds_text, certificate_error_json, certificate_json, parse_edge_list,
    parse_graph6, write_edge_list, write_graph6, AnalysisRecord, BOUNDS_CSV_HEADER,
};
use crate::metrics::eccentricity_profile;
use crate::rational::{approx, int, render};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Graph6 lines handed to the worker pool at a time.
const CHUNK: usize = 512;

#[derive(Debug, Parser)]
#[command(name = "avec", version, about = "Exact average eccentricity: analysis, bounds, extremal families, certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-graph invariants and bound reports.
    Analyze(AnalyzeArgs),
    /// Bound reports only.
    Bounds(BoundsArgs),
    /// Replay an upper-bound argument on each input graph.
    Certify(CertifyArgs),
    /// Write a family member as graph6.
    Generate(GenerateArgs),
    /// CSV of family members over a parameter grid.
    Sweep(SweepArgs),
    /// Translate between edge lists and graph6.
    Convert(ConvertArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input files (graph6 lines, or one edge list per file); `-` is stdin.
    #[arg(default_value = "-")]
    inputs: Vec<String>,
    /// Read edge-list files instead of graph6.
    #[arg(long)]
    edgelist: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Add decimal approximations next to the exact values.
    #[arg(long)]
    approx: bool,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    approx: bool,
    /// Exit 1 if any applicable upper bound is violated.
    #[arg(long)]
    require_satisfied: bool,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_parser = parse_theorem)]
    theorem: Theorem,
    /// Include the packing or matching, tree and weights.
    #[arg(long)]
    full: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn parse_theorem(s: &str) -> std::result::Result<Theorem, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Chain,
    Layered,
    C4chain,
    Polarity,
    Punctured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    delta: Option<u64>,
    #[arg(long = "Delta")]
    max_delta: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    /// Recompute n, delta, Delta, EX by BFS and compare with the closed forms.
    #[arg(long)]
    expect: bool,
    #[arg(long, value_enum, default_value = "graph6")]
    to: GraphFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFamily {
    Chain,
    Layered,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(value_enum)]
    family: SweepFamily,
    /// `key=values` for each of delta, Delta, k; values is `a`, `a,b,c` or `a..b[:step]`.
    #[arg(long, num_args = 1.., required = true)]
    grid: Vec<String>,
    #[arg(long)]
    approx: bool,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[arg(default_value = "-")]
    inputs: Vec<String>,
    #[arg(long, value_enum, default_value = "edgelist")]
    from: GraphFormat,
    #[arg(long, value_enum, default_value = "graph6")]
    to: GraphFormat,
}

/// Usage problems detected after argument parsing.
struct Usage(String);

/// Output of one unit of work, emitted in input order.
#[derive(Default)]
struct Outcome {
    stdout: String,
    stderr: String,
    failed: bool,
}

impl Outcome {
    fn data_error(source: &str, err: &Error) -> Self {
        Outcome {
            stderr: format!("{source}: {err}\n"),
            failed: true,
            ..Outcome::default()
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut failed = false;
    let result = dispatch(cli.command, stdin, stdout, stderr, &mut failed);
    let _ = stdout.flush();
    match result {
        Ok(()) if failed => EXIT_DATA,
        Ok(()) => EXIT_OK,
        Err(Status::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Status::Data(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DATA
        }
    }
}

enum Status {
    Usage(String),
    Data(String),
}

impl From<Usage> for Status {
    fn from(u: Usage) -> Self {
        Status::Usage(u.0)
    }
}

impl From<Error> for Status {
    fn from(e: Error) -> Self {
        Status::Data(e.to_string())
    }
}

impl From<io::Error> for Status {
    fn from(e: io::Error) -> Self {
        Status::Data(e.to_string())
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    failed: &mut bool,
) -> std::result::Result<(), Status> {
    let mut sink = Sink { stdout, stderr, failed };
    match command {
        Command::Analyze(a) => {
            if a.format == Format::Csv {
                sink.out(&csv_line(&AnalysisRecord::csv_header(a.approx)))?;
            }
            stream_graphs(&a.input, stdin, &mut sink, |source, g| {
                let record = analyze(g, source, a.approx)?;
                Ok(Outcome {
                    stdout: match a.format {
                        Format::Json => json_line(&serde_json::to_value(&record).expect("serializable")),
                        Format::Csv => csv_line(&record.csv_row(a.approx)),
                        Format::Text => record.to_text(),
                    },
                    ..Outcome::default()
                })
            })
        }
        Command::Bounds(b) => {
            if b.format == Format::Csv {
                sink.out(&csv_line(&BOUNDS_CSV_HEADER.map(String::from)))?;
            }
            stream_graphs(&b.input, stdin, &mut sink, |source, g| {
                let record = analyze(g, source, b.approx)?;
                if record.bounds.is_empty() {
                    return Err(if record.connected {
                        Error::ParameterOutOfRange("bound reports need n >= 2".into())
                    } else {
                        Error::NotConnected
                    });
                }
                let stdout = match b.format {
                    Format::Json => json_line(&record.bounds_json()),
                    Format::Csv => bounds_csv_rows(&record).iter().map(|r| csv_line(r)).collect(),
                    Format::Text => format!("{}: avec={}\n{}", source, record.avec.as_deref().unwrap_or(""), bounds_text(&record.bounds)),
                };
                let violated = b.require_satisfied && record.has_violation();
                Ok(Outcome {
                    stdout,
                    stderr: if violated { format!("{source}: applicable bound violated\n") } else { String::new() },
                    failed: violated,
                })
            })
        }
        Command::Certify(c) => {
            if c.format == Format::Csv {
                return Err(Usage("certify supports --format json or text".into()).into());
            }
            stream_graphs(&c.input, stdin, &mut sink, |source, g| {
                Ok(match certify(g, c.theorem) {
                    Ok(cert) => {
                        let stdout = match c.format {
                            Format::Text => format!("{source}: {cert}"),
                            _ => json_line(&certificate_json(source, &cert, c.full)),
                        };
                        let valid = cert.is_valid();
                        Outcome {
                            stdout,
                            stderr: if valid { String::new() } else { format!("{source}: certificate INVALID\n") },
                            failed: !valid,
                        }
                    }
                    Err(e) => Outcome {
                        stdout: match c.format {
                            Format::Text => String::new(),
                            _ => json_line(&certificate_error_json(source, c.theorem.name(), &e)),
                        },
                        ..Outcome::data_error(source, &e)
                    },
                })
            })
        }
        Command::Generate(gen) => generate(&gen, &mut sink),
        Command::Sweep(s) => sweep(&s, &mut sink),
        Command::Convert(c) => convert(&c, stdin, &mut sink),
    }
}

struct Sink<'a> {
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    failed: &'a mut bool,
}

impl Sink<'_> {
    fn out(&mut self, text: &str) -> io::Result<()> {
        self.stdout.write_all(text.as_bytes())
    }

    fn emit(&mut self, o: Outcome) -> io::Result<()> {
        self.stdout.write_all(o.stdout.as_bytes())?;
        self.stderr.write_all(o.stderr.as_bytes())?;
        *self.failed |= o.failed;
        Ok(())
    }
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_line<S: AsRef<str>>(fields: &[S]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(fields.iter().map(|f| f.as_ref())).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn with_input<R>(
    path: &str,
    stdin: &mut dyn BufRead,
    f: impl FnOnce(&mut dyn BufRead) -> std::result::Result<R, Status>,
) -> std::result::Result<R, Status> {
    if path == "-" {
        f(stdin)
    } else {
        let file = File::open(path).map_err(|e| Status::Data(format!("{path}: {e}")))?;
        f(&mut BufReader::new(file))
    }
}

fn source_name(path: &str) -> &str {
    if path == "-" {
        "stdin"
    } else {
        path
    }
}

/// Feeds every input graph through `work` on the worker pool and emits
/// outcomes in input order. Parse failures become data-error outcomes.
fn stream_graphs<F>(
    input: &InputArgs,
    stdin: &mut dyn BufRead,
    sink: &mut Sink<'_>,
    work: F,
) -> std::result::Result<(), Status>
where
    F: Fn(&str, &Graph) -> Result<Outcome> + Sync,
{
    let run_one = |source: &str, parsed: Result<Graph>| match parsed.and_then(|g| work(source, &g)) {
        Ok(o) => o,
        Err(e) => Outcome::data_error(source, &e),
    };
    for path in &input.inputs {
        let name = source_name(path);
        with_input(path, stdin, |reader| {
            if input.edgelist {
                let mut text = String::new();
                reader.read_to_string(&mut text)?;
                sink.emit(run_one(name, parse_edge_list(&text)))?;
                return Ok(());
            }
            let mut chunk: Vec<(String, String)> = Vec::with_capacity(CHUNK);
            let flush = |chunk: &mut Vec<(String, String)>, sink: &mut Sink<'_>| -> io::Result<()> {
                let outcomes: Vec<Outcome> = chunk
                    .par_iter()
                    .map(|(source, line)| run_one(source, parse_graph6(line)))
                    .collect();
                chunk.clear();
                outcomes.into_iter().try_for_each(|o| sink.emit(o))
            };
            for (index, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                chunk.push((format!("{name}:{}", index + 1), line));
                if chunk.len() == CHUNK {
                    flush(&mut chunk, sink)?;
                }
            }
            flush(&mut chunk, sink)?;
            Ok(())
        })?;
    }
    Ok(())
}

fn require(value: Option<u64>, flag: &str, family: &str) -> std::result::Result<u64, Usage> {
    value.ok_or_else(|| Usage(format!("{family} needs --{flag}")))
}

fn family_params(gen: &GenerateArgs) -> std::result::Result<Option<FamilyParams>, Usage> {
    let name = format!("{:?}", gen.family).to_lowercase();
    Ok(match gen.family {
        Family::Chain => Some(FamilyParams::Chain {
            delta: require(gen.delta, "delta", &name)?,
            max_delta: require(gen.max_delta, "Delta", &name)?,
            k: require(gen.k, "k", &name)?,
        }),
        Family::Layered => Some(FamilyParams::Layered {
            delta: require(gen.delta, "delta", &name)?,
            max_delta: require(gen.max_delta, "Delta", &name)?,
            k: require(gen.k, "k", &name)?,
        }),
        Family::C4chain => Some(FamilyParams::C4Chain {
            q: require(gen.q, "q", &name)?,
            k: require(gen.k, "k", &name)?,
            m: gen.m.unwrap_or(0),
        }),
        Family::Polarity | Family::Punctured => {
            require(gen.q, "q", &name)?;
            None
        }
    })
}

/// Compares measured against predicted values; returns the report and whether all match.
fn compare(rows: &[(&str, String, String, bool)]) -> (String, bool) {
    let ok = rows.iter().all(|r| r.3);
    let text = rows
        .iter()
        .map(|(name, got, want, pass)| {
            if *pass {
                format!("{name}={got}")
            } else {
                format!("{name}={got} (expected {want})")
            }
        })
        .collect::<Vec<_>>()
        .join(" ");
    (text, ok)
}

fn generate(gen: &GenerateArgs, sink: &mut Sink<'_>) -> std::result::Result<(), Status> {
    let params = family_params(gen)?;
    let graph = match (&params, gen.family) {
        (Some(p), _) => p.build()?,
        (None, Family::Polarity) => polarity_graph(gen.q.expect("checked"))?,
        (None, _) => punctured_polarity(gen.q.expect("checked"))?.graph,
    };
    let text = match gen.to {
        GraphFormat::Graph6 => write_graph6(&graph) + "\n",
        GraphFormat::Edgelist => write_edge_list(&graph),
    };
    sink.out(&text)?;
    if !gen.expect {
        return Ok(());
    }
    let profile = eccentricity_profile(&graph)?;
    let summary = graph.degree_summary()?;
    let (n, delta, max_delta) = (graph.n() as u64, summary.min_degree as u64, summary.max_degree as u64);
    let ex = int(profile.total);
    let rows: Vec<(&str, String, String, bool)> = match params {
        Some(p) => {
            let closed = closed_form_ex(&p)?;
            let lower_only = matches!(p, FamilyParams::C4Chain { .. });
            vec![
                ("n", n.to_string(), p.order().to_string(), n == p.order()),
                ("delta", delta.to_string(), p.min_degree().to_string(), delta == p.min_degree()),
                ("Delta", max_delta.to_string(), p.max_degree().to_string(), max_delta == p.max_degree()),
                if lower_only {
                    ("EX", format!("{} (lower bound {})", render(&ex), render(&closed)), format!(">= {}", render(&closed)), ex >= closed)
                } else {
                    ("EX", render(&ex), render(&closed), ex == closed)
                },
            ]
        }
        None => {
            let q = gen.q.expect("checked");
            let c4 = graph.is_c4_free();
            if gen.family == Family::Polarity {
                let degs = graph.degrees();
                let low = degs.iter().filter(|&&d| d as u64 == q).count() as u64;
                let high = degs.iter().filter(|&&d| d as u64 == q + 1).count() as u64;
                vec![
                    ("n", n.to_string(), (q * q + q + 1).to_string(), n == q * q + q + 1),
                    ("deg_q", low.to_string(), (q + 1).to_string(), low == q + 1),
                    ("deg_q+1", high.to_string(), (q * q).to_string(), high == q * q),
                    ("diam", profile.diam.to_string(), "2".into(), profile.diam == 2),
                    ("c4_free", c4.to_string(), "true".into(), c4),
                ]
            } else {
                vec![
                    ("n", n.to_string(), (q * q + q).to_string(), n == q * q + q),
                    ("delta", delta.to_string(), format!(">={}", q - 1), delta + 1 >= q),
                    ("diam", profile.diam.to_string(), "4".into(), profile.diam == 4),
                    ("c4_free", c4.to_string(), "true".into(), c4),
                ]
            }
        }
    };
    let (report, ok) = compare(&rows);
    let report = format!("{} {report}\n", if ok { "verified:" } else { "MISMATCH:" });
    sink.emit(Outcome {
        stderr: report,
        failed: !ok,
        ..Outcome::default()
    })?;
    Ok(())
}

/// Expands `a`, `a,b,c` or `a..b[:step]` (inclusive).
fn parse_range(range: &str) -> std::result::Result<Vec<u64>, String> {
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| format!("bad number {s:?}"));
    if let Some((lo, rest)) = range.split_once("..") {
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (num(hi)?, num(step)?),
            None => (num(rest)?, 1),
        };
        let lo = num(lo)?;
        if step == 0 || lo > hi {
            return Err(format!("empty range {range:?}"));
        }
        return Ok((lo..=hi).step_by(step as usize).collect());
    }
    range.split(',').map(num).collect()
}

fn sweep(s: &SweepArgs, sink: &mut Sink<'_>) -> std::result::Result<(), Status> {
    let (mut deltas, mut maxes, mut ks) = (None, None, None);
    for item in &s.grid {
        let (key, values) = item
            .split_once('=')
            .ok_or_else(|| Usage(format!("grid entry {item:?} is not key=values")))?;
        let values = parse_range(values).map_err(Usage)?;
        match key {
            "delta" => deltas = Some(values),
            "Delta" => maxes = Some(values),
            "k" => ks = Some(values),
            other => return Err(Usage(format!("unknown grid key {other:?}")).into()),
        }
    }
    let missing = |name: &str| Usage(format!("--grid needs {name}=..."));
    let (deltas, maxes, ks) = (
        deltas.ok_or_else(|| missing("delta"))?,
        maxes.ok_or_else(|| missing("Delta"))?,
        ks.ok_or_else(|| missing("k"))?,
    );
    let mut points = Vec::new();
    for &d in &deltas {
        for &dm in &maxes {
            for &k in &ks {
                points.push(match s.family {
                    SweepFamily::Chain => FamilyParams::Chain { delta: d, max_delta: dm, k },
                    SweepFamily::Layered => FamilyParams::Layered { delta: d, max_delta: dm, k },
                });
            }
        }
    }
    let mut header: Vec<String> = ["family", "delta", "Delta", "k", "n", "EX_formula", "EX_bfs", "avec", "bound", "gap"]
        .map(String::from)
        .to_vec();
    if s.approx {
        header.extend(["avec_approx", "gap_approx"].map(String::from));
    }
    sink.out(&csv_line(&header))?;
    let (family, bound_id) = match s.family {
        SweepFamily::Chain => ("chain", BoundId::Thm1),
        SweepFamily::Layered => ("layered", BoundId::Thm2),
    };
    let outcomes: Vec<Outcome> = points
        .par_iter()
        .map(|p| {
            let row = || -> Result<Vec<String>> {
                let g = p.build()?;
                let profile = eccentricity_profile(&g)?;
                let summary = g.degree_summary()?;
                let bound = evaluate_bound(bound_id, g.n() as u64, summary.min_degree as u64, summary.max_degree as u64)?;
                let gap = &bound - &profile.avec;
                let (d, dm, k) = match *p {
                    FamilyParams::Chain { delta, max_delta, k } | FamilyParams::Layered { delta, max_delta, k } => (delta, max_delta, k),
                    FamilyParams::C4Chain { .. } => unreachable!("not swept"),
                };
                let mut row = vec![
                    family.to_string(),
                    d.to_string(),
                    dm.to_string(),
                    k.to_string(),
                    g.n().to_string(),
                    render(&closed_form_ex(p)?),
                    profile.total.to_string(),
                    render(&profile.avec),
                    render(&bound),
                    render(&gap),
                ];
                if s.approx {
                    row.push(approx(&profile.avec).to_string());
                    row.push(approx(&gap).to_string());
                }
                Ok(row)
            };
            match row() {
                Ok(r) => Outcome {
                    stdout: csv_line(&r),
                    ..Outcome::default()
                },
                Err(e) => Outcome::data_error(&p.to_string(), &e),
            }
        })
        .collect();
    for o in outcomes {
        sink.emit(o)?;
    }
    Ok(())
}

fn convert(c: &ConvertArgs, stdin: &mut dyn BufRead, sink: &mut Sink<'_>) -> std::result::Result<(), Status> {
    let write = |g: &Graph| match c.to {
        GraphFormat::Graph6 => write_graph6(g) + "\n",
        GraphFormat::Edgelist => write_edge_list(g),
    };
    for path in &c.inputs {
        let name = source_name(path);
        with_input(path, stdin, |reader| {
            match c.from {
                GraphFormat::Edgelist => {
                    let mut text = String::new();
                    reader.read_to_string(&mut text)?;
                    match parse_edge_list(&text) {
                        Ok(g) => sink.out(&write(&g))?,
                        Err(e) => sink.emit(Outcome::data_error(name, &e))?,
                    }
                }
                GraphFormat::Graph6 => {
                    let mut first = true;
                    let flow = reader.lines().enumerate().try_for_each(|(i, line)| {
                        let line = match line {
                            Ok(l) => l,
                            Err(e) => return ControlFlow::Break(e),
                        };
                        if line.trim().is_empty() {
                            return ControlFlow::Continue(());
                        }
                        let outcome = match parse_graph6(&line) {
                            Ok(g) => {
                                let sep = if c.to == GraphFormat::Edgelist && !first { "\n" } else { "" };
                                first = false;
                                Outcome {
                                    stdout: format!("{sep}{}", write(&g)),
                                    ..Outcome::default()
                                }
                            }
                            Err(e) => Outcome::data_error(&format!("{name}:{}", i + 1), &e),
                        };
                        match sink.emit(outcome) {
                            Ok(()) => ControlFlow::Continue(()),
                            Err(e) => ControlFlow::Break(e),
                        }
                    });
                    if let ControlFlow::Break(e) = flow {
                        return Err(e.into());
                    }
                }
            }
            Ok(())
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = io::Cursor::new(input.as_bytes().to_vec());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["avec"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..12:4").unwrap(), vec![4, 8, 12]);
        assert_eq!(parse_range("3").unwrap(), vec![3]);
        assert_eq!(parse_range("1,5").unwrap(), vec![1, 5]);
        assert!(parse_range("5..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_with(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(run_with(&["generate", "chain", "--delta", "3"], "").0, EXIT_USAGE);
        assert_eq!(run_with(&["certify", "--theorem", "thm9"], "").0, EXIT_USAGE);
        assert_eq!(run_with(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn analyze_c5() {
        let (code, out, _) = run_with(&["analyze", "-"], "Dhc\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!((v["n"].as_u64(), v["avec"].as_str(), v["triangle_free"].as_bool()), (Some(5), Some("2"), Some(true)));
        assert_eq!(v["source"], "stdin:1");
    }

    #[test]
    fn malformed_line_is_data_error() {
        let (code, out, err) = run_with(&["analyze"], "Dhc\nA\nA_\n");
        assert_eq!(code, EXIT_DATA);
        assert_eq!(out.lines().count(), 2);
        assert!(err.contains("stdin:2"));
    }

    #[test]
    fn generate_expect() {
        let (code, out, err) = run_with(&["generate", "chain", "--delta", "3", "--Delta", "8", "--k", "6", "--expect"], "");
        assert_eq!(code, 0, "{err}");
        assert_eq!(parse_graph6(out.trim()).unwrap().n(), 28);
        assert!(err.contains("n=28") && err.contains("EX=346"), "{err}");
    }
}
