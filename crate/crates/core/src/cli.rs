//! Command-line surface: `check`, `verify`, `discharge` and `gen`.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 hypothesis failure,
//! 3 verification failure, 4 internal invariant violation.

use std::fs;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::discharging::{apply_discharging, initial_charges};
use crate::generate::{apexed_quadrangulation, apexed_triangulation, plane_2conn};
use crate::graph::format::{parse_adjacency_list, parse_any, parse_graph6, to_adjacency_list, to_graph6};
use crate::graph::{find_k4_minus, vertex_connectivity, Graph, K4Minus};
use crate::hammock::Hammock;
use crate::pipeline::{
    check_certificate, construct, construct_through_apex, validate_input, Outcome, PipelineError, Tk5Certificate,
};
use crate::planar::planar_embed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Ok = 0,
    Io = 1,
    Hypothesis = 2,
    Verification = 3,
    Internal = 4,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Parser, Debug)]
#[command(name = "tk5", version, about = "Subdivided-K5 certificates for 5-connected apex graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the hypotheses and optionally run the construction.
    Check(CheckArgs),
    /// Verify a certificate (JSON) against a graph.
    Verify { graph: PathBuf, certificate: PathBuf },
    /// Charge and discharge a 2-connected plane graph taken as a 4-hammock.
    Discharge {
        graph: PathBuf,
        /// Four boundary vertices, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        boundary: Vec<usize>,
    },
    /// Print a seeded random instance.
    Gen {
        kind: GenKind,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Minimum degree of a triangulation base (4 or 5).
        #[arg(long, default_value_t = 4)]
        min_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// Run the construction and report its outcome.
    #[arg(long)]
    pub construct: bool,
    /// Build the TK5 through this apex vertex, even if a K4- is present.
    #[arg(long)]
    pub apex: Option<usize>,
    /// Build the TK5 through the first apex vertex that succeeds, even if a K4- is present.
    #[arg(long)]
    pub wheel_branch: bool,
    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub json: bool,
    /// Number of files checked concurrently.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Adj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    ApexedTriangulation,
    ApexedQuadrangulation,
    Plane2conn,
}

/// Text for stdout and stderr plus the exit status.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit: Option<Exit>,
}

impl Output {
    fn exit(&self) -> Exit {
        self.exit.unwrap_or(Exit::Ok)
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.stdout.push_str(s.as_ref());
        self.stdout.push('\n');
    }

    fn fail(mut self, code: Exit, msg: impl AsRef<str>) -> Self {
        self.stderr.push_str(msg.as_ref());
        self.stderr.push('\n');
        self.exit = Some(code);
        self
    }
}

pub fn run(cli: Cli) -> Output {
    match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Verify { graph, certificate } => cmd_verify(&graph, &certificate),
        Command::Discharge { graph, boundary } => cmd_discharge(&graph, &boundary),
        Command::Gen { kind, size, seed, min_degree, format } => cmd_gen(kind, size, seed, min_degree, format),
    }
}

fn read_graph(path: &FsPath, format: Option<Format>) -> Result<Graph, Output> {
    let text = fs::read_to_string(path)
        .map_err(|e| Output::default().fail(Exit::Io, format!("{}: {e}", path.display())))?;
    let parsed = match format {
        None => parse_any(&text),
        Some(Format::G6) => parse_graph6(&text),
        Some(Format::Adj) => parse_adjacency_list(&text),
    };
    parsed.map_err(|e| Output::default().fail(Exit::Io, format!("{}: parse error: {e}", path.display())))
}

fn show_k4(k: &K4Minus) -> String {
    let [x, y, a, b] = k.vertices();
    format!("{{{x}, {y}, {a}, {b}}}")
}

#[derive(Serialize)]
struct CheckReport<'a> {
    file: String,
    vertices: usize,
    edges: usize,
    connectivity: usize,
    planar: bool,
    apexes: Vec<usize>,
    hypotheses: Option<String>,
    k4_minus: Option<K4Minus>,
    outcome: Option<&'a Outcome>,
    error: Option<String>,
}

pub fn cmd_check(args: &CheckArgs) -> Output {
    let jobs = args.jobs.max(1);
    let mut results: Vec<Output> = Vec::with_capacity(args.files.len());
    for chunk in args.files.chunks(jobs) {
        let outs: Vec<Output> = std::thread::scope(|s| {
            let handles: Vec<_> = chunk.iter().map(|f| s.spawn(move || check_one(f, args))).collect();
            handles
                .into_iter()
                .map(|h| h.join().unwrap_or_else(|_| Output::default().fail(Exit::Internal, "worker panicked")))
                .collect()
        });
        results.extend(outs);
    }
    let mut total = Output::default();
    for r in results {
        total.stdout.push_str(&r.stdout);
        total.stderr.push_str(&r.stderr);
        total.exit = Some(total.exit().max(r.exit()));
    }
    total
}

fn through_any_apex(g: &Graph, apexes: &[usize]) -> Result<Outcome, PipelineError> {
    let mut last = None;
    for &v in apexes {
        match construct_through_apex(g, v) {
            Ok(o) => return Ok(o),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or(PipelineError::NotApex))
}

fn check_one(path: &FsPath, args: &CheckArgs) -> Output {
    let g = match read_graph(path, args.format) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut out = Output::default();
    let connectivity = if g.n() < 2 { 0 } else { vertex_connectivity(&g).unwrap_or(0) };
    let planar = crate::planar::is_planar(&g);
    let mut report = CheckReport {
        file: path.display().to_string(),
        vertices: g.n(),
        edges: g.m(),
        connectivity,
        planar,
        apexes: Vec::new(),
        hypotheses: None,
        k4_minus: None,
        outcome: None,
        error: None,
    };
    let mut text = vec![
        format!("{}: {} vertices, {} edges", report.file, g.n(), g.m()),
        format!("connectivity: {connectivity}"),
    ];
    let apexes = match validate_input(&g) {
        Ok(a) => a,
        Err(e) => {
            let msg = match e {
                PipelineError::NotFiveConnected(_) => "not 5-connected".to_string(),
                PipelineError::Planar => "planar".to_string(),
                PipelineError::NotApex => "not apex".to_string(),
                other => other.to_string(),
            };
            text.push(msg.clone());
            report.hypotheses = Some(msg);
            emit(&mut out, args.json, &report, &text);
            out.exit = Some(Exit::Hypothesis);
            return out;
        }
    };
    report.apexes = apexes.clone();
    text.push("5-connected nonplanar apex graph".into());
    text.push(format!("apex vertices: {apexes:?}"));
    report.k4_minus = find_k4_minus(&g);
    text.push(match &report.k4_minus {
        Some(k) => format!("K4- found: {}", show_k4(k)),
        None => "K4- free".into(),
    });
    if !(args.construct || args.wheel_branch || args.apex.is_some()) {
        emit(&mut out, args.json, &report, &text);
        return out;
    }
    let result = match args.apex {
        Some(v) => construct_through_apex(&g, v),
        None if args.wheel_branch => through_any_apex(&g, &apexes),
        None => construct(&g),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let code = match e {
                PipelineError::NotAnApexVertex(_) | PipelineError::Graph(_) => Exit::Hypothesis,
                _ => Exit::Internal,
            };
            text.push(format!("construction failed: {e}"));
            report.error = Some(e.to_string());
            emit(&mut out, args.json, &report, &text);
            out.exit = Some(code);
            return out;
        }
    };
    match &outcome {
        Outcome::K4MinusFound(k) => text.push(format!("outcome: K4- found: {}", show_k4(k))),
        Outcome::Tk5Built { certificate, trace } => {
            text.push(format!(
                "outcome: TK5 built through apex {} (hub {}, w {})",
                trace.apex.unwrap_or_default(),
                trace.wheel_hub.unwrap_or_default(),
                trace.w.unwrap_or_default()
            ));
            text.push(certificate.to_json());
        }
        Outcome::SmallGraphTk5(certificate) => {
            text.push("outcome: TK5 found by exhaustive search".into());
            text.push(certificate.to_json());
        }
    }
    let bad = outcome.certificate().and_then(|c| check_certificate(&g, c).err());
    report.outcome = Some(&outcome);
    if let Some(e) = &bad {
        text.push(format!("certificate rejected: {e}"));
        report.error = Some(e.to_string());
    }
    emit(&mut out, args.json, &report, &text);
    if bad.is_some() {
        out.exit = Some(Exit::Verification);
    }
    out
}

fn emit(out: &mut Output, json: bool, report: &CheckReport, text: &[String]) {
    if json {
        out.line(serde_json::to_string_pretty(report).expect("report serializes"));
    } else {
        for t in text {
            out.line(t);
        }
    }
}

pub fn cmd_verify(graph: &FsPath, cert: &FsPath) -> Output {
    let g = match read_graph(graph, None) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let text = match fs::read_to_string(cert) {
        Ok(t) => t,
        Err(e) => return Output::default().fail(Exit::Io, format!("{}: {e}", cert.display())),
    };
    let c: Tk5Certificate = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => return Output::default().fail(Exit::Io, format!("{}: bad certificate: {e}", cert.display())),
    };
    let mut out = Output::default();
    match check_certificate(&g, &c) {
        Ok(()) => {
            out.line("valid");
            out
        }
        Err(e) => {
            out.line(format!("invalid: {e}"));
            out.exit = Some(Exit::Verification);
            out
        }
    }
}

pub fn cmd_discharge(graph: &FsPath, boundary: &[usize]) -> Output {
    let g = match read_graph(graph, None) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let hyp = |msg: String| Output::default().fail(Exit::Hypothesis, msg);
    if boundary.len() != 4 {
        return hyp(format!("--boundary needs 4 vertices, got {}", boundary.len()));
    }
    if g.n() < 3 || !g.is_biconnected() {
        return hyp("graph is not 2-connected".into());
    }
    let e = match planar_embed(&g) {
        Ok(Some(e)) => e,
        Ok(None) => return hyp("graph is not planar".into()),
        Err(err) => return hyp(err.to_string()),
    };
    // outer face: the one holding most boundary vertices, lowest index on ties
    let outer = (0..e.faces().len())
        .max_by_key(|&f| {
            let hits = boundary.iter().filter(|&&b| e.face(f).contains(b)).count();
            (hits, std::cmp::Reverse(f))
        })
        .expect("a connected plane graph has a face");
    let e = e.with_outer(outer);
    let h = match Hammock::with_boundary(g.clone(), (0..g.n()).collect(), boundary.to_vec()) {
        Ok(h) => h,
        Err(err) => return hyp(err.to_string()),
    };
    let ledger = match initial_charges(&e, &h).and_then(|l| apply_discharging(&l, &e, &h)) {
        Ok(l) => l,
        Err(err) => return hyp(err.to_string()),
    };
    let mut out = Output::default();
    out.stdout.push_str(&ledger.dump());
    out
}

pub fn cmd_gen(kind: GenKind, size: usize, seed: u64, min_degree: usize, format: Format) -> Output {
    let g = match kind {
        GenKind::ApexedTriangulation => apexed_triangulation(size, min_degree, seed),
        GenKind::ApexedQuadrangulation => apexed_quadrangulation(size, seed),
        GenKind::Plane2conn => plane_2conn(size, seed).map(|p| p.graph),
    };
    match g {
        Ok(g) => {
            let mut out = Output::default();
            match format {
                Format::G6 => out.line(to_graph6(&g)),
                Format::Adj => out.stdout.push_str(&to_adjacency_list(&g)),
            }
            out
        }
        Err(e) => Output::default().fail(Exit::Hypothesis, e.to_string()),
    }
}
