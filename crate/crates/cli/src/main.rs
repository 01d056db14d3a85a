//! `gb`: build tangent graphs, run the verification suites and export the
//! curvature operator.
//!
//! Exit status is 0 when everything passes, 1 on a verification failure and
//! 2 on an input error.

mod input;
mod suites;

use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use gb_core::bochner::{
    b_matrix, bochner_terms, curvature_spectrum, spectrum_residual, BochnerContext, SPECTRUM_TOLERANCE,
};
use gb_core::graph::Graph;
use gb_core::tangent::{build_cubical, iterate_tangent, lambda_line_graph, section_count};
use gb_core::TangentGraph;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use suites::{run_suite, CheckOutcome, Suite};

#[derive(Parser, Debug)]
#[command(name = "gb", version, about = "Tangent graphs and the discrete Bochner identity")]
struct Cli {
    /// Write stdout to this file instead.
    #[arg(short, long, global = true)]
    output: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct InputArg {
    /// Edge-list path, `-` for stdin, or `er:n:p:seed`.
    #[arg(value_name = "INPUT")]
    positional: Option<String>,

    #[arg(short, long, value_name = "INPUT", conflicts_with = "positional")]
    input: Option<String>,
}

impl InputArg {
    fn spec(&self) -> Option<&str> {
        self.input.as_deref().or(self.positional.as_deref())
    }

    fn load(&self) -> Result<(String, Graph), String> {
        let spec = self.spec().ok_or("no input given")?;
        Ok((spec.to_string(), input::load_graph(spec)?))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a tangent construction and print it.
    Build {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "t")]
        flavor: BuildFlavor,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run verification suites on a graph or a corpus; one JSON line per (graph, suite).
    Check {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// `small` or `random:count:n:p`.
        #[arg(long, conflicts_with_all = ["positional", "input"])]
        corpus: Option<String>,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Export the curvature operator B or evaluate the Bochner terms.
    Curvature {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "matrix")]
        mode: Mode,
        /// JSON array of rationals, one per vertex.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Summary counts of a graph and its tangent graphs.
    Info {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BuildFlavor {
    T,
    Tau,
    T2,
    #[value(name = "t_tau")]
    TTau,
    Gstar,
    Cubical,
    Lambda,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Matrix,
    Spectrum,
    Report,
}

enum Failure {
    Verification,
    Input(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Input(s)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("GB_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("gb: GB_THREADS={v:?} is not a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    let mut out = Output::new(cli.output.clone());
    let result = match &cli.command {
        Command::Build { input, flavor, format } => build(&mut out, input, *flavor, *format),
        Command::Check { input, suite, corpus, trials, seed } => {
            check(&mut out, input, *suite, corpus.as_deref(), *trials as usize, *seed)
        }
        Command::Curvature { input, mode, phi } => curvature(&mut out, input, *mode, phi.as_deref()),
        Command::Info { input } => info(&mut out, input),
    };
    let flushed = out.finish();
    match (result, flushed) {
        (_, Err(e)) => {
            eprintln!("gb: {e}");
            ExitCode::from(2)
        }
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Verification), Ok(())) => ExitCode::from(1),
        (Err(Failure::Input(msg)), Ok(())) => {
            eprintln!("gb: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Buffers stdout so `--output` only creates the file on success.
struct Output {
    path: Option<String>,
    buf: String,
}

impl Output {
    fn new(path: Option<String>) -> Self {
        Self { path, buf: String::new() }
    }

    fn push(&mut self, s: &str) {
        self.buf.push_str(s);
        if !s.ends_with('\n') {
            self.buf.push('\n');
        }
    }

    fn json(&mut self, value: &impl Serialize) {
        self.push(&serde_json::to_string(value).expect("serializable"));
    }

    fn finish(self) -> Result<(), String> {
        match self.path {
            Some(p) => fs::write(&p, self.buf).map_err(|e| format!("{p}: {e}")),
            None => std::io::stdout().write_all(self.buf.as_bytes()).map_err(|e| format!("stdout: {e}")),
        }
    }
}

fn build(out: &mut Output, input: &InputArg, flavor: BuildFlavor, format: Format) -> Outcome {
    let (_, g) = input.load()?;
    let tangent = |tg: TangentGraph, out: &mut Output| match format {
        Format::Json => out.json(&tg.to_json()),
        Format::Dot => out.push(&tg.to_dot()),
    };
    match flavor {
        BuildFlavor::T => tangent(TangentGraph::t(&g), out),
        BuildFlavor::Tau => tangent(TangentGraph::tau(&g), out),
        BuildFlavor::Gstar => tangent(TangentGraph::gstar(&g), out),
        BuildFlavor::T2 => tangent(iterate_tangent(&TangentGraph::t(&g)).map_err(|e| e.to_string())?, out),
        BuildFlavor::TTau => tangent(iterate_tangent(&TangentGraph::tau(&g)).map_err(|e| e.to_string())?, out),
        BuildFlavor::Cubical => {
            let cx = build_cubical(&TangentGraph::t(&g)).map_err(|e| e.to_string())?;
            match format {
                Format::Json => out.json(&cx.to_json()),
                Format::Dot => {
                    return Err(Failure::Input("the cubical complex has no DOT form; use --format json".into()))
                }
            }
        }
        BuildFlavor::Lambda => {
            let l = lambda_line_graph(&TangentGraph::t(&g)).map_err(|e| e.to_string())?;
            let names: Vec<String> = g.edges().iter().map(|&(i, j)| format!("{}-{}", g.label(i), g.label(j))).collect();
            let lambda_names: Vec<String> = l.bijection.iter().map(|&e| names[e].clone()).collect();
            let lambda = l.lambda.clone().with_labels(lambda_names).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    let line = l.line.clone().with_labels(names).map_err(|e| e.to_string())?;
                    out.json(&json!({
                        "lambda": lambda.to_json(),
                        "line": line.to_json(),
                        "bijection": l.bijection,
                        "matched": l.matched,
                    }))
                }
                Format::Dot => out.push(&lambda.to_dot()),
            }
        }
    }
    Ok(())
}

fn check(out: &mut Output, input: &InputArg, suite: Suite, corpus: Option<&str>, trials: usize, seed: u64) -> Outcome {
    let graphs: Vec<(String, Graph)> = match corpus {
        Some(spec) => input::load_corpus(spec, seed)?.into_iter().map(|e| (e.id, e.graph)).collect(),
        None => vec![input.load()?],
    };
    let suites = suite.expand();
    let jobs: Vec<(usize, Suite)> = (0..graphs.len()).flat_map(|i| suites.iter().map(move |&s| (i, s))).collect();
    let outcomes: Vec<CheckOutcome> = jobs
        .par_iter()
        .map(|&(i, s)| {
            let (id, g) = &graphs[i];
            let start = Instant::now();
            let report = run_suite(s, g, i, trials, seed);
            CheckOutcome::new(s, id.clone(), report, start.elapsed().as_millis())
        })
        .collect();
    let mut all_passed = true;
    for o in &outcomes {
        eprintln!("{} {} {} ms", o.suite, o.graph, o.elapsed_ms);
        out.json(o);
        all_passed &= o.passed;
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Rounded so that output is reproducible across platforms.
fn round_eigenvalue(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn curvature(out: &mut Output, input: &InputArg, mode: Mode, phi: Option<&str>) -> Outcome {
    let (_, g) = input.load()?;
    match mode {
        Mode::Matrix => out.push(&b_matrix(&g).to_csv()),
        Mode::Spectrum => {
            let cm = b_matrix(&g);
            let ev: Vec<f64> = curvature_spectrum(&cm).into_iter().map(round_eigenvalue).collect();
            let norm = cm.to_f64().norm();
            let residual = spectrum_residual(&cm);
            out.json(&ev);
            if residual > SPECTRUM_TOLERANCE * norm.max(1.0) {
                eprintln!("gb: eigenpair residual {residual:e} exceeds tolerance");
                return Err(Failure::Verification);
            }
        }
        Mode::Report => {
            let path = phi.ok_or_else(|| "--mode report requires --phi".to_string())?;
            let phi = input::load_phi(path, g.n())?;
            let report = bochner_terms(&BochnerContext::new(&g), &phi).map_err(|e| e.to_string())?;
            out.json(&report.to_json());
            if !report.report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn info(out: &mut Output, input: &InputArg) -> Outcome {
    let (_, g) = input.load()?;
    let (t, tau) = (TangentGraph::t(&g), TangentGraph::tau(&g));
    out.json(&json!({
        "n": g.n(),
        "E": g.edge_count(),
        "degree_sequence": g.degree_sequence(),
        "V_tG": t.graph().n(),
        "E_tG": t.graph().edge_count(),
        "E_tauG": tau.graph().edge_count(),
        "star": g.is_star(),
        "star_forest": g.is_star_forest(),
        "tG_equals_tauG": t.graph().same_structure(tau.graph()),
        "sections": section_count(&g).to_string(),
    }));
    Ok(())
}
