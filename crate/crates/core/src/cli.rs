//! The `tgg` command line.
//!
//! Exit codes: 0 success, 1 validation violations reported by `validate`
//! (or an oracle disagreement), 2 unreadable or malformed input, 3 a
//! well-formed complex that fails validation, 4 oracle inconclusive.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::complex::{CellCounts, TubularComplex};
use crate::dot;
use crate::engine::{self, EngineError, Outcome, TraceEvent};
use crate::freewords::{self, WhiteheadGraph, WordSet};
use crate::io::{self, canonical_string, ComplexDocument};
use crate::sl_move;

pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "tgg", version, about = "Tubular graphs of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a complex and list violated conditions.
    Validate { file: PathBuf },
    /// Normalize and report the outcome.
    Analyze {
        file: PathBuf,
        /// Stream trace events to stderr as JSON lines.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Grushko decomposition; pieces are written next to the input.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide separability of a word set via its double.
    Separable {
        #[arg(short = 'n', long = "rank")]
        rank: usize,
        #[arg(short = 'w', long = "words")]
        words: String,
        /// Also run the Whitehead minimization oracle and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the link of a vertex.
    Link {
        file: PathBuf,
        #[arg(long)]
        graph: usize,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Print the Whitehead graph of a word set.
    Whitehead {
        #[arg(short = 'n', long = "rank")]
        rank: usize,
        #[arg(short = 'w', long = "words")]
        words: String,
        #[arg(long)]
        dot: bool,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Failure {
        Failure::new(EXIT_INVALID, e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_PARSE } else { 0 };
        }
    };
    match run(&cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn main() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    main_with(&args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn load(path: &Path) -> Result<TubularComplex, Failure> {
    io::read_complex(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_valid(path: &Path) -> Result<TubularComplex, Failure> {
    let c = load(path)?;
    let report = c.validate();
    if !report.is_empty() {
        return Err(Failure::new(
            EXIT_INVALID,
            format!("{} is not a valid complex:\n{report}", path.display()),
        ));
    }
    Ok(c)
}

fn words(rank: usize, text: &str) -> Result<WordSet, Failure> {
    WordSet::parse(rank, text).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))
}

fn w(out: &mut dyn Write, s: &str) -> Result<(), Failure> {
    out.write_all(s.as_bytes())
        .map_err(|e| Failure::new(EXIT_PARSE, format!("write failed: {e}")))
}

fn trace_line(err: &mut dyn Write, e: &TraceEvent) {
    let line = serde_json::to_string(&serde_json::to_value(e).expect("serializable")).expect("serializable");
    let _ = writeln!(err, "{line}");
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub outcome: Outcome,
    pub moves: usize,
    pub sl_moves: usize,
    pub squares_at_loop: usize,
    pub input: CellCounts,
    pub output: CellCounts,
    pub betti1: usize,
    pub euler_characteristic: i64,
    pub normal_form: ComplexDocument,
}

#[derive(Debug, Serialize)]
pub struct PieceReport {
    pub file: String,
    pub squares: usize,
    pub betti1: usize,
}

#[derive(Debug, Serialize)]
pub struct DecomposeReport {
    pub pieces: Vec<PieceReport>,
    pub free_rank: usize,
    pub betti1_input: usize,
    pub betti1_pieces: usize,
    pub betti1_identity_holds: bool,
    pub cuts: Vec<engine::CutRecord>,
}

#[derive(Debug, Serialize)]
pub struct SeparableReport {
    #[serde(flatten)]
    pub summary: freewords::SeparabilitySummary,
    pub certificate: Vec<TraceEvent>,
    pub cuts: Vec<engine::CutRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<freewords::OracleVerdict>,
}

fn piece_path(input: &Path, k: usize) -> PathBuf {
    let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("complex");
    input.with_file_name(format!("{stem}.piece{k}.tgg"))
}

pub fn run(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Validate { file } => {
            let c = load(file)?;
            let report = c.validate();
            if report.is_empty() {
                w(out, "valid\n")?;
                Ok(0)
            } else {
                w(out, &format!("{} violation(s)\n{report}", report.violations.len()))?;
                Ok(EXIT_VIOLATIONS)
            }
        }
        Command::Analyze { file, trace, json } => {
            let c = load_valid(file)?;
            let nf = engine::normalize_observed(&c, &mut |e| {
                if *trace {
                    trace_line(err, e)
                }
            })?;
            let report = AnalyzeReport {
                outcome: nf.outcome.clone(),
                moves: nf.move_count(),
                sl_moves: nf.sl_moves(),
                squares_at_loop: nf.squares_at_loop,
                input: c.cell_counts(),
                output: nf.complex.cell_counts(),
                betti1: c.betti1(),
                euler_characteristic: c.euler_characteristic(),
                normal_form: ComplexDocument::from_complex(&nf.complex),
            };
            if *json {
                w(out, &canonical_string(&report))?;
            } else {
                let mut s = format!("outcome: {}\n", nf.outcome.label());
                match &nf.outcome {
                    Outcome::WedgeLike { witness } => s += &format!("witness: {witness}\n"),
                    Outcome::FreeGraph { rank } => s += &format!("free rank: {rank}\n"),
                    _ => {}
                }
                s += &format!(
                    "moves: {} ({} SL-moves)\nsquares: {}\nbetti1: {}\neuler characteristic: {}\n",
                    report.moves, report.sl_moves, report.input.squares, report.betti1, report.euler_characteristic
                );
                w(out, &s)?;
            }
            Ok(0)
        }
        Command::Decompose { file, trace, json } => {
            let c = load_valid(file)?;
            let d = engine::grushko_observed(&c, &mut |e| {
                if *trace {
                    trace_line(err, e)
                }
            })?;
            let mut pieces = Vec::new();
            for (k, p) in d.pieces.iter().enumerate() {
                let path = piece_path(file, k);
                io::write_complex(&path, p).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
                pieces.push(PieceReport {
                    file: path.file_name().unwrap_or_default().to_string_lossy().into_owned(),
                    squares: p.square_count(),
                    betti1: p.betti1(),
                });
            }
            let betti1_pieces: usize = pieces.iter().map(|p| p.betti1).sum();
            let report = DecomposeReport {
                betti1_input: c.betti1(),
                betti1_pieces,
                betti1_identity_holds: c.betti1() == betti1_pieces + d.free_rank,
                free_rank: d.free_rank,
                pieces,
                cuts: d.cut_log.clone(),
            };
            if *json {
                w(out, &canonical_string(&report))?;
            } else {
                let mut s = format!("pieces: {}\n", report.pieces.len());
                for p in &report.pieces {
                    s += &format!("  {} (squares {}, betti1 {})\n", p.file, p.squares, p.betti1);
                }
                s += &format!(
                    "free rank: {}\nbetti1: {} = {} + {}\n",
                    report.free_rank, report.betti1_input, report.betti1_pieces, report.free_rank
                );
                w(out, &s)?;
            }
            Ok(0)
        }
        Command::Separable {
            rank,
            words: text,
            oracle,
            json,
        } => {
            let ws = words(*rank, text)?;
            let sep = freewords::is_separable(&ws)?;
            let verdict = if *oracle {
                match freewords::whitehead_oracle(&ws, freewords::DEFAULT_BUDGET) {
                    Ok(v) => Some(v),
                    Err(e) => {
                        w(out, &format!("{}\n", verdict_text(sep.separable)))?;
                        return Err(Failure::new(EXIT_INCONCLUSIVE, format!("oracle inconclusive: {e}")));
                    }
                }
            } else {
                None
            };
            let agrees = verdict.as_ref().is_none_or(|v| v.separable == sep.separable);
            let report = SeparableReport {
                summary: sep.summary(&ws),
                certificate: sep.normal_form.trace.clone(),
                cuts: sep.decomposition.as_ref().map(|d| d.cut_log.clone()).unwrap_or_default(),
                oracle: verdict,
            };
            if *json {
                w(out, &canonical_string(&report))?;
            } else {
                let mut s = format!("{}\n", verdict_text(sep.separable));
                match &sep.normal_form.outcome {
                    Outcome::WedgeLike { witness } => s += &format!("certificate: {witness}\n"),
                    Outcome::FreeGraph { rank } => s += &format!("certificate: free graph of rank {rank}\n"),
                    Outcome::BradyMeier => {
                        s += &format!("certificate: Brady-Meier after {} SL-moves\n", sep.normal_form.sl_moves())
                    }
                    Outcome::Point => s += "certificate: contractible\n",
                }
                if let (Some(p), Some(r)) = (report.summary.pieces, report.summary.free_rank) {
                    s += &format!("double splits into {p} piece(s) and free rank {r}\n");
                }
                if let Some(v) = &report.oracle {
                    let minimized: Vec<String> = v.minimized.iter().map(|x| x.to_string()).collect();
                    s += &format!(
                        "oracle: {} (minimized to {}), {}\n",
                        verdict_text(v.separable),
                        minimized.join(" "),
                        if agrees { "agrees" } else { "DISAGREES" }
                    );
                }
                w(out, &s)?;
            }
            Ok(if agrees { 0 } else { EXIT_VIOLATIONS })
        }
        Command::Link {
            file,
            graph,
            vertex,
            dot: as_dot,
        } => {
            let c = load_valid(file)?;
            let link = c
                .vertex_link(*graph, *vertex)
                .map_err(|e| Failure::new(EXIT_INVALID, e.to_string()))?;
            if *as_dot {
                w(out, &dot::link_to_dot(&link))?;
            } else {
                let mut s = format!(
                    "vertices: {} ({} vertical)\nedges: {}\n",
                    link.vertices.len(),
                    link.vertical_count(),
                    link.graph.edge_count()
                );
                for &[a, b] in link.graph.edges() {
                    s += &format!(
                        "  {} -- {}\n",
                        dot::link_label(&link.vertices[a]),
                        dot::link_label(&link.vertices[b])
                    );
                }
                let cuts: Vec<String> = link
                    .vertical_cut_vertices()
                    .into_iter()
                    .map(|x| dot::link_label(&link.vertices[x]))
                    .collect();
                s += &format!(
                    "connected: {}\nbrady-meier: {}\nvertical cut vertices: {}\n",
                    link.is_connected(),
                    sl_move::satisfies_bm1(&link) && sl_move::satisfies_bm2(&link),
                    if cuts.is_empty() { "none".to_string() } else { cuts.join(" ") }
                );
                w(out, &s)?;
            }
            Ok(0)
        }
        Command::Whitehead {
            rank,
            words: text,
            dot: as_dot,
        } => {
            let wh = WhiteheadGraph::new(&words(*rank, text)?);
            if *as_dot {
                w(out, &dot::whitehead_to_dot(&wh))?;
            } else {
                let sum = wh.summary();
                let mut s = format!("vertices: {}\nedges: {}\n", sum.vertices.join(" "), sum.edges.len());
                for [a, b] in &sum.edges {
                    s += &format!("  {a} -- {b}\n");
                }
                s += &format!(
                    "connected: {}\ncut vertices: {}\n",
                    sum.connected,
                    if sum.cut_vertices.is_empty() { "none".to_string() } else { sum.cut_vertices.join(" ") }
                );
                w(out, &s)?;
            }
            Ok(0)
        }
    }
}

fn verdict_text(separable: bool) -> &'static str {
    if separable {
        "separable"
    } else {
        "not separable"
    }
}

