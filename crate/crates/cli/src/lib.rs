//! Command-line front end: reads instance files, runs one query and writes a
//! JSON result (and optionally an SVG picture).
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input or I/O failure,
//! 3 brute-force oracle over budget.

pub mod io;
pub mod output;
pub mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};

use bottleneck_voronoi::oracle::{brute_force_e, brute_force_lex_all, grid_cover_radius, oracle_optimal_translation};
use bottleneck_voronoi::{
    bottleneck_path_in, cover_radius_in, erode_polygon, eval_e, optimal_translation_in, Diagram, Instance, LabelMode,
    LabeledDiagram, OracleError, Point, Selection,
};
use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::io::{parse_point, read_instance, read_polygon};
use crate::output::*;
use crate::svg::{render_svg, Overlays};

/// Failures after argument parsing; usage errors come from the parser.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("over budget: {0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TooLarge { .. } => CliError::Budget(e.to_string()),
            OracleError::EmptyRegion => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "bvd", version, about = "Bottleneck partial-matching Voronoi diagrams under translation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build and label the diagram; print a summary with every cell label.
    Diagram {
        input: PathBuf,
        /// Also label every face, edge and vertex with a lex-bottleneck matching.
        #[arg(long)]
        lex: bool,
        /// Build on every bisector instead of the used ones.
        #[arg(long)]
        all: bool,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Translation minimizing the bottleneck matching cost.
    Match {
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Path between two translations minimizing the largest cost along it.
    Path {
        input: PathBuf,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, value_name = "X,Y")]
        from: Point,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, value_name = "X,Y")]
        to: Point,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Largest bottleneck cost over translations keeping B inside a convex polygon.
    Cover {
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        polygon: PathBuf,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Bottleneck cost and an optimal matching at one translation.
    Eval {
        input: PathBuf,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, value_name = "X,Y")]
        t: Point,
    },
    /// Brute-force references, for testing.
    #[command(hide = true)]
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Debug, Subcommand)]
enum OracleOp {
    /// Bottleneck cost by enumerating all injections.
    Eval {
        input: PathBuf,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        t: Point,
    },
    /// Lex-bottleneck cost and every optimal matching.
    Lex {
        input: PathBuf,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        t: Point,
    },
    /// Optimal translation by exhaustive candidate evaluation.
    Match { input: PathBuf },
    /// Grid lower bound on the cover radius.
    Cover {
        input: PathBuf,
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, default_value_t = 16)]
        resolution: u32,
    },
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("results serialize") + "\n"
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn labeled(inst: &Instance, selection: Selection, extra: &[Point]) -> Result<LabeledDiagram, CliError> {
    LabeledDiagram::new(Diagram::build(inst, selection, extra), LabelMode::Recompute)
        .map_err(|e| CliError::Input(e.to_string()))
}

/// Runs one command; returns the JSON document to print.
fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Diagram { input, lex, all, svg, output } => {
            let inst = read_instance(&input)?;
            let selection = if all { Selection::All } else { Selection::Used };
            let mut ld = labeled(&inst, selection, &[])?;
            if lex {
                ld = ld.with_lex();
            }
            if let Some(path) = svg {
                write_file(&path, &render_svg(&ld, &Overlays::default()))?;
            }
            let doc = DiagramOutput::new(&ld, lex);
            match output {
                // The full document goes to the file; only the summary is printed.
                Some(path) => {
                    write_file(&path, &to_json(&doc))?;
                    Ok(to_json(&doc.summary))
                }
                None => Ok(to_json(&doc)),
            }
        }
        Command::Match { input, svg } => {
            let inst = read_instance(&input)?;
            let ld = labeled(&inst, Selection::Used, &[])?;
            let best = optimal_translation_in(&ld);
            if let Some(path) = svg {
                write_file(&path, &render_svg(&ld, &Overlays { marker: Some(&best.t), ..Overlays::default() }))?;
            }
            Ok(to_json(&MatchOutput::new(&best)))
        }
        Command::Path { input, from, to, svg } => {
            let inst = read_instance(&input)?;
            let ld = labeled(&inst, Selection::Used, &[from.clone(), to.clone()])?;
            let path = bottleneck_path_in(&ld, &from, &to).map_err(|e| CliError::Input(e.to_string()))?;
            if let Some(file) = svg {
                write_file(&file, &render_svg(&ld, &Overlays { path: Some(&path.polyline), ..Overlays::default() }))?;
            }
            Ok(to_json(&PathOutput::new(&path)))
        }
        Command::Cover { input, polygon, svg } => {
            let inst = read_instance(&input)?;
            let q = read_polygon(&polygon)?;
            let Some(region) = erode_polygon(&q, inst.b()) else {
                return Ok(to_json(&CoverOutput::new(None)));
            };
            let ld = labeled(&inst, Selection::Used, region.vertices())?;
            let r = cover_radius_in(&ld, &q).map_err(|e| CliError::Input(e.to_string()))?;
            if let (Some(file), Some(res)) = (svg, &r) {
                let overlays = Overlays { polygon: Some(&res.region), marker: Some(&res.witness), ..Overlays::default() };
                write_file(&file, &render_svg(&ld, &overlays))?;
            }
            Ok(to_json(&CoverOutput::new(r.as_ref())))
        }
        Command::Eval { input, t } => {
            let inst = read_instance(&input)?;
            let (value, m) = eval_e(&inst, &t);
            Ok(to_json(&EvalOutput::new(&t, &value, &m)))
        }
        Command::Oracle { op } => oracle(op),
    }
}

fn oracle(op: OracleOp) -> Result<String, CliError> {
    match op {
        OracleOp::Eval { input, t } => {
            let inst = read_instance(&input)?;
            let (value, m) = brute_force_e(&inst, &t)?;
            Ok(to_json(&EvalOutput::new(&t, &value, &m)))
        }
        OracleOp::Lex { input, t } => {
            let inst = read_instance(&input)?;
            let (cost, all) = brute_force_lex_all(&inst, &t)?;
            Ok(to_json(&LexOutput {
                t: ExactPoint::new(&t),
                cost: cost.values().iter().map(Exact::new).collect(),
                matchings: all.iter().map(pairs).collect(),
            }))
        }
        OracleOp::Match { input } => {
            let inst = read_instance(&input)?;
            let (t, value) = oracle_optimal_translation(&inst)?;
            let (_, m) = brute_force_e(&inst, &t)?;
            Ok(to_json(&MatchOutput::new(&bottleneck_voronoi::Translation { t, matching: m, value })))
        }
        OracleOp::Cover { input, polygon, resolution } => {
            let inst = read_instance(&input)?;
            let q = read_polygon(&polygon)?;
            let v = grid_cover_radius(&inst, &q, resolution)?;
            Ok(to_json(&GridOutput { resolution, value: v.to_string(), approx: v.to_f64() }))
        }
    }
}

/// Parses `argv` (including the program name), runs the command, prints the
/// result to `out` and diagnostics to `err`, and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "bvd: {e}");
            e.exit_code()
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
