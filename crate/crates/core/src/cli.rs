//! Batch front-end behind the `lpstlab` binary.
//!
//! ```text
//! lpstlab construct --graph 'star(3)' --blowup 2 --out b2.edges
//! lpstlab analyze   --graph 'star(3)' --blowup 2 --vertex 0
//! lpstlab simulate  --graph b2.edges --pair 0,4 --tmax 3.14159 --steps 512 --out trace.csv
//! lpstlab verify    --graph 'cycle(5)' --graph 'path(4)' --blowup 2
//! lpstlab perturb   --graph 'complete(3)' --blowup 4 --block 0 --match 0:0,2:0 --match 1:0,3:0 --out k3.edges
//! ```
//!
//! `--graph` takes a family expression or, failing that, an edge-list path.
//! Blow-up vertices are given as an index `j*|V|+v` or as `j:v`. Exit status
//! is 1 for precondition violations and 2 for I/O failures; either way one
//! line `lpstlab: <kind>: <reason>` goes to stderr.

use std::f64::consts::TAU;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{add_matching, blow_up, read_edge_list, write_edge_list, Family, Graph, Matching};
use crate::spectra::{decompose_with, laplacian, SpectralData, Tolerances};
use crate::transfer::{analyze_pair, analyze_vertex, perturbation_plan, strong_cospectrality_numeric, Answer, Question, Verdict};
use crate::walk::{fidelity, fidelity_trace};

const SCHEMA_VERSION: &str = "1.0.0";

/// Version string embedded as `"schema"` in every JSON report.
pub fn report_schema_version() -> &'static str {
    SCHEMA_VERSION
}

/// Families checked by `verify` when no `--graph` is given.
pub const DEFAULT_VERIFY_FAMILIES: &[&str] = &[
    "complete(2)", "complete(3)", "complete(4)", "complete(5)",
    "cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)", "cycle(7)", "cycle(8)",
    "path(2)", "path(3)", "path(4)", "path(5)", "path(6)", "path(7)", "path(8)",
    "hypercube(1)", "hypercube(2)", "hypercube(3)",
];

/// Fidelity a certified transfer or return must reach in `verify`.
pub const ORACLE_HIT: f64 = 1.0 - 1e-8;
/// Sampled fidelity a refuted transfer must stay below in `verify`.
pub const ORACLE_MISS: f64 = 1.0 - 1e-6;
/// Grid points per window when sampling refuted transfers.
pub const REFUTATION_GRID: usize = 2048;

#[derive(Debug, Parser)]
#[command(name = "lpstlab", version, about = "Laplacian state transfer on blow-up graphs")]
pub struct JobConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the edge list of B_n(G).
    Construct {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        blowup: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide periodicity, strong cospectrality, LPST and LPGST.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 2)]
        blowup: usize,
        /// Base vertex u, analysed as the pair (0,u),(1,u). Repeatable.
        #[arg(long)]
        vertex: Vec<usize>,
        /// Two blow-up vertices `a,b`. Repeatable.
        #[arg(long)]
        pair: Vec<String>,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the fidelity between two vertices of B_n(G).
    Simulate {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        blowup: usize,
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = TAU)]
        tmax: f64,
        #[arg(long, default_value_t = 2048)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare analytic verdicts with the dense walk, vertex by vertex.
    Verify {
        /// Repeatable; defaults to small complete graphs, cycles, paths and cubes.
        #[arg(long)]
        graph: Vec<String>,
        #[arg(long, default_value_t = 2)]
        blowup: usize,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Insert a matching inside twin blocks of B_n(G), n divisible by 4.
    Perturb {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        blowup: usize,
        /// Comma-separated base vertices forming one block. Repeatable.
        #[arg(long, required = true)]
        block: Vec<String>,
        /// Matching edge `a,b` in blow-up coordinates. Repeatable.
        #[arg(long = "match")]
        matching: Vec<String>,
        /// Edge list of the perturbed graph.
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON verdict (stdout if absent).
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct Source {
    /// Family expression such as `star(3)`, or a path to an edge list.
    #[arg(long)]
    pub graph: String,
}

#[derive(Debug, Args)]
pub struct TolArgs {
    #[arg(long)]
    pub tol_group: Option<f64>,
    #[arg(long)]
    pub tol_int: Option<f64>,
    #[arg(long)]
    pub tol_mat: Option<f64>,
}

impl TolArgs {
    fn resolve(&self) -> Result<Tolerances, CliError> {
        let mut tol = Tolerances::default();
        for (value, slot) in [(self.tol_group, &mut tol.group), (self.tol_int, &mut tol.int), (self.tol_mat, &mut tol.mat)] {
            if let Some(v) = value {
                if !(v.is_finite() && v > 0.0) {
                    return Err(CliError::precondition(format!("tolerance {v} must be positive")));
                }
                *slot = v;
            }
        }
        Ok(tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Precondition(String),
    Io(String),
}

impl CliError {
    fn precondition(reason: impl ToString) -> CliError {
        CliError::Precondition(reason.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 1,
            CliError::Io(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Precondition(r) => write!(f, "precondition: {r}"),
            CliError::Io(r) => write!(f, "io: {r}"),
        }
    }
}

fn io_error(path: &Path, e: io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

fn load_graph(spec: &str) -> Result<(String, Graph), CliError> {
    match spec.parse::<Family>() {
        Ok(family) => {
            let g = crate::graph::make_family(&family).map_err(CliError::precondition)?;
            Ok((family.to_string(), g))
        }
        Err(parse_err) => {
            let path = Path::new(spec);
            if !path.exists() && !spec.contains(['/', '.']) {
                return Err(CliError::precondition(format!("`{spec}` is neither a family ({parse_err}) nor a file")));
            }
            let g = read_edge_list(path).map_err(|e| io_error(path, e))?.map_err(CliError::precondition)?;
            Ok((spec.to_string(), g))
        }
    }
}

fn spectrum(g: &Graph, tol: Tolerances) -> Result<SpectralData, CliError> {
    decompose_with(&laplacian(g), tol).map_err(CliError::precondition)
}

fn parse_vertex(token: &str, order: usize, n: usize) -> Result<usize, CliError> {
    let bad = || CliError::precondition(format!("bad vertex `{token}`"));
    let index = match token.trim().split_once(':') {
        Some((j, v)) => {
            let (j, v): (usize, usize) = (j.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?);
            if v >= order || j >= n {
                return Err(CliError::precondition(format!("vertex `{token}` out of range")));
            }
            j * order + v
        }
        None => token.trim().parse().map_err(|_| bad())?,
    };
    if index >= order * n {
        return Err(CliError::precondition(format!("vertex `{token}` out of range")));
    }
    Ok(index)
}

fn parse_pair(text: &str, order: usize, n: usize) -> Result<(usize, usize), CliError> {
    let (a, b) = text.split_once(',').ok_or_else(|| CliError::precondition(format!("pair `{text}` must look like `a,b`")))?;
    Ok((parse_vertex(a, order, n)?, parse_vertex(b, order, n)?))
}

fn check_blowup(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::precondition("--blowup must be at least 1"));
    }
    Ok(())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct AnalyzeReport {
    schema: &'static str,
    command: &'static str,
    graph: String,
    order: usize,
    blowup: usize,
    tolerances: Tolerances,
    verdicts: Vec<Verdict>,
}

#[derive(Serialize)]
struct TraceReport {
    schema: &'static str,
    command: &'static str,
    graph: String,
    blowup: usize,
    source: usize,
    target: usize,
    times: Vec<f64>,
    fidelities: Vec<f64>,
    re: Vec<f64>,
    im: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Agree,
    Disagree,
    Unchecked,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub question: Question,
    pub analytic: Answer,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Answer>,
    /// Fidelity (or return probability) measured by the oracle.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<f64>,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub graph: String,
    pub vertex: usize,
    pub source: usize,
    pub target: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    schema: &'static str,
    command: &'static str,
    blowup: usize,
    tolerances: Tolerances,
    pairs: Vec<PairReport>,
    disagreements: usize,
}

#[derive(Serialize)]
struct PerturbReport {
    schema: &'static str,
    command: &'static str,
    graph: String,
    blowup: usize,
    verdict: Verdict,
}

fn check(question: Question, analytic: Answer, oracle: Option<(Answer, Option<f64>)>) -> Check {
    let status = match oracle {
        None => CheckStatus::Unchecked,
        Some((o, _)) if o == analytic => CheckStatus::Agree,
        Some(_) => CheckStatus::Disagree,
    };
    Check { question, analytic, oracle: oracle.map(|o| o.0), measured: oracle.and_then(|o| o.1), status }
}

/// Analytic verdicts for `(0,u),(1,u)` in `B_n(g)` against the dense walk on
/// `B_n(g)`: returns at the certified period, transfer at the certified time,
/// sampled refutation of "no" transfer verdicts, and numeric strong cospectrality.
pub fn verify_vertex(name: &str, g: &Graph, sd: &SpectralData, blown: &SpectralData, n: usize, u: usize) -> Result<PairReport, CliError> {
    let verdicts = analyze_vertex(g, sd, n, u).map_err(CliError::precondition)?;
    let (a, b) = (u, g.vertex_count() + u);
    let yes_no = |hit: bool| if hit { Answer::Yes } else { Answer::No };
    let mut checks = Vec::new();
    let period = verdicts[0].period();
    checks.push(check(
        Question::Periodic,
        verdicts[0].answer,
        period.map(|p| {
            let f = fidelity(blown, a, a, p);
            (yes_no(f >= ORACLE_HIT), Some(f))
        }),
    ));
    if n >= 2 {
        let numeric = strong_cospectrality_numeric(blown, a, b).map_err(CliError::precondition)?;
        checks.push(check(Question::StronglyCospectral, verdicts[1].answer, Some((numeric.answer, None))));
        let lpst = &verdicts[2];
        let oracle = match lpst.answer {
            Answer::Yes => lpst.time().map(|t| {
                let f = fidelity(blown, a, b, t);
                (yes_no(f >= ORACLE_HIT), Some(f))
            }),
            Answer::No => {
                let window = period.unwrap_or(TAU);
                let peak = fidelity_trace(blown, a, b, window, REFUTATION_GRID).peak().map_or(0.0, |p| p.1);
                Some((if peak >= ORACLE_MISS { Answer::Yes } else { Answer::No }, Some(peak)))
            }
            Answer::Undecided => None,
        };
        checks.push(check(Question::Lpst, lpst.answer, oracle));
        let oracle = (verdicts[3].answer == Answer::No && numeric.answer == Answer::No).then_some((Answer::No, None));
        checks.push(check(Question::Lpgst, verdicts[3].answer, oracle));
    }
    let pass = checks.iter().all(|c| c.status != CheckStatus::Disagree);
    Ok(PairReport { graph: name.to_string(), vertex: u, source: a, target: b, checks, pass })
}

fn with_threads<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("LPSTLAB_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()).filter(|&t| t > 0);
    match threads.and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// Executes one job, writing its outputs.
pub fn run(config: &JobConfig) -> Result<(), CliError> {
    with_threads(|| run_inner(config))
}

fn run_inner(config: &JobConfig) -> Result<(), CliError> {
    match &config.command {
        Command::Construct { source, blowup, out } => {
            check_blowup(*blowup)?;
            let (_, g) = load_graph(&source.graph)?;
            let b = blow_up(&g, *blowup).map_err(CliError::precondition)?;
            emit(out.as_deref(), &write_edge_list(&b))
        }
        Command::Analyze { source, blowup, vertex, pair, tol, out } => {
            check_blowup(*blowup)?;
            let (name, g) = load_graph(&source.graph)?;
            let tol = tol.resolve()?;
            let sd = spectrum(&g, tol)?;
            let order = g.vertex_count();
            let pairs = pair.iter().map(|p| parse_pair(p, order, *blowup)).collect::<Result<Vec<_>, _>>()?;
            let vertices: Vec<usize> = if vertex.is_empty() && pairs.is_empty() { (0..order).collect() } else { vertex.clone() };
            if let Some(&u) = vertices.iter().find(|&&u| u >= order) {
                return Err(CliError::precondition(format!("vertex {u} out of range")));
            }
            let mut verdicts: Vec<Verdict> = vertices
                .par_iter()
                .map(|&u| analyze_vertex(&g, &sd, *blowup, u))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::precondition)?
                .into_iter()
                .flatten()
                .collect();
            for (a, b) in pairs {
                verdicts.extend(analyze_pair(&g, &sd, *blowup, a, b).map_err(CliError::precondition)?);
            }
            let report = AnalyzeReport { schema: SCHEMA_VERSION, command: "analyze", graph: name, order, blowup: *blowup, tolerances: tol, verdicts };
            emit(out.as_deref(), &to_json(&report))
        }
        Command::Simulate { source, blowup, pair, tmax, steps, format, tol, out } => {
            check_blowup(*blowup)?;
            if *steps < 2 {
                return Err(CliError::precondition("--steps must be at least 2"));
            }
            if !(tmax.is_finite() && *tmax >= 0.0) {
                return Err(CliError::precondition("--tmax must be a non-negative number"));
            }
            let (name, g) = load_graph(&source.graph)?;
            let (a, b) = parse_pair(pair, g.vertex_count(), *blowup)?;
            let blown = blow_up(&g, *blowup).map_err(CliError::precondition)?;
            let sd = spectrum(&blown, tol.resolve()?)?;
            let trace = fidelity_trace(&sd, a, b, *tmax, *steps);
            let text = match format {
                Format::Csv => trace.to_csv(),
                Format::Json => to_json(&TraceReport {
                    schema: SCHEMA_VERSION,
                    command: "simulate",
                    graph: name,
                    blowup: *blowup,
                    source: a,
                    target: b,
                    re: trace.amplitudes.iter().map(|z| z.re).collect(),
                    im: trace.amplitudes.iter().map(|z| z.im).collect(),
                    times: trace.times,
                    fidelities: trace.fidelities,
                }),
            };
            emit(out.as_deref(), &text)
        }
        Command::Verify { graph, blowup, tol, out } => {
            check_blowup(*blowup)?;
            let tol = tol.resolve()?;
            let specs: Vec<String> =
                if graph.is_empty() { DEFAULT_VERIFY_FAMILIES.iter().map(|s| s.to_string()).collect() } else { graph.clone() };
            let mut pairs = Vec::new();
            for spec in &specs {
                let (name, g) = load_graph(spec)?;
                let sd = spectrum(&g, tol)?;
                let blown = spectrum(&blow_up(&g, *blowup).map_err(CliError::precondition)?, tol)?;
                let reports = (0..g.vertex_count())
                    .into_par_iter()
                    .map(|u| verify_vertex(&name, &g, &sd, &blown, *blowup, u))
                    .collect::<Result<Vec<_>, _>>()?;
                pairs.extend(reports);
            }
            let disagreements = pairs.iter().filter(|p| !p.pass).count();
            let report = VerifyReport { schema: SCHEMA_VERSION, command: "verify", blowup: *blowup, tolerances: tol, pairs, disagreements };
            emit(out.as_deref(), &to_json(&report))
        }
        Command::Perturb { source, blowup, block, matching, out, report } => {
            check_blowup(*blowup)?;
            let (name, g) = load_graph(&source.graph)?;
            let order = g.vertex_count();
            let blocks = block
                .iter()
                .map(|b| {
                    b.split(',')
                        .map(|v| v.trim().parse::<usize>().map_err(|_| CliError::precondition(format!("bad block `{b}`"))))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let edges = matching.iter().map(|p| parse_pair(p, order, *blowup)).collect::<Result<Vec<_>, _>>()?;
            let m = Matching::new(edges).map_err(CliError::precondition)?;
            let verdict = perturbation_plan(&g, *blowup, &blocks, &m).map_err(CliError::precondition)?;
            let perturbed = add_matching(&blow_up(&g, *blowup).map_err(CliError::precondition)?, &m).map_err(CliError::precondition)?;
            if let Some(path) = out {
                fs::write(path, write_edge_list(&perturbed)).map_err(|e| io_error(path, e))?;
            }
            let text = to_json(&PerturbReport { schema: SCHEMA_VERSION, command: "perturb", graph: name, blowup: *blowup, verdict });
            emit(report.as_deref(), &text)
        }
    }
}

/// Parses arguments, runs the job and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match JobConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            let first = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
            eprintln!("lpstlab: precondition: {first}");
            return 1;
        }
    };
    match run(&config) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("lpstlab: {}", e.to_string().replace('\n', " "));
            e.exit_code()
        }
    }
}
