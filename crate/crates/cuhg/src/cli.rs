//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when `check`
//! finds a failing verdict.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};

use crate::analysis::{self, CheckReport, Verdict};
use crate::eigen::{eig_via_similarity, hermitian_eig, nullity_from, NullityPolicy, Spectrum};
use crate::generate::{gen_random, PhaseMode};
use crate::hypergraph::{Hypergraph, SwitchingFunction};
use crate::operators::{
    adjacency_matrix, dual_kirchhoff, dual_normalized, kirchhoff, normalized, sym_normalized,
};
use crate::phase::Phase;
use crate::{io, Error, Result};

#[derive(Parser)]
#[command(
    name = "cuhg",
    version,
    about = "Spectra of complex unit hypergraphs",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Eigenvalues (and optionally eigenvectors) of one operator
    Spectrum {
        /// Hypergraph file
        file: PathBuf,
        /// Operator: A, K, Kstar, L, Lstar or calL
        #[arg(long, value_enum, default_value = "K")]
        operator: Op,
        /// Also print an orthonormal eigenbasis
        #[arg(long)]
        vectors: bool,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
    },
    /// Run the full verification suite; exits 2 if any check fails
    Check {
        file: PathBuf,
        /// Seed for the sampled deletions and switchings
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Eigenvalue bounds from max degree and max edge size
    Bounds {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Apply a transformation and emit the resulting hypergraph
    Transform {
        file: PathBuf,
        /// One of: dual | underlying | delete-vertices LIST |
        /// delete-edges LIST | vswitch FILE | eswitch FILE
        #[arg(long = "op", num_args = 1..=2, required = true)]
        op: Vec<String>,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a random hypergraph
    Gen {
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Number of edges
        #[arg(long)]
        m: usize,
        /// Incidence probability in (0, 1]
        #[arg(long)]
        p: f64,
        /// Phase model: "continuous" or "roots:K"
        #[arg(long, default_value = "continuous")]
        phases: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    #[value(name = "A", alias = "a")]
    Adjacency,
    #[value(name = "K", alias = "k")]
    Kirchhoff,
    #[value(name = "Kstar", alias = "kstar")]
    DualKirchhoff,
    #[value(name = "L", alias = "l")]
    Normalized,
    #[value(name = "Lstar", alias = "lstar")]
    DualNormalized,
    #[value(name = "calL", alias = "call")]
    SymNormalized,
}

impl Op {
    fn label(self) -> &'static str {
        match self {
            Op::Adjacency => "A",
            Op::Kirchhoff => "K",
            Op::DualKirchhoff => "Kstar",
            Op::Normalized => "L",
            Op::DualNormalized => "Lstar",
            Op::SymNormalized => "calL",
        }
    }
}

pub fn run<I>(args: I) -> i32
where
    I: IntoIterator,
    I::Item: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Spectrum {
            file,
            operator,
            vectors,
            json,
        } => cmd_spectrum(&file, operator, vectors, json),
        Cmd::Check { file, seed, json } => cmd_check(&file, seed, json),
        Cmd::Bounds { file, json } => cmd_bounds(&file, json),
        Cmd::Transform { file, op, output } => cmd_transform(&file, &op, output.as_deref()),
        Cmd::Gen {
            n,
            m,
            p,
            phases,
            seed,
            output,
        } => cmd_gen(n, m, p, &phases, seed, output.as_deref()),
    }
}

fn load(file: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(file)?;
    io::parse(&text)
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, format!("{text}\n"))?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

/// 12 significant digits, shortest form.
fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap();
    if rounded == 0.0 {
        return "0".to_string();
    }
    let magnitude = rounded.abs();
    if (1e-4..1e15).contains(&magnitude) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

fn solve_operator(g: &Hypergraph, operator: Op) -> Result<Spectrum> {
    match operator {
        Op::Adjacency => hermitian_eig(&adjacency_matrix(g), true),
        Op::Kirchhoff => hermitian_eig(&kirchhoff(g), true),
        Op::DualKirchhoff => hermitian_eig(&dual_kirchhoff(g), true),
        Op::Normalized => {
            let l = normalized(g)?;
            let degrees: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
            eig_via_similarity(&l, &degrees, true)
        }
        Op::DualNormalized => hermitian_eig(&dual_normalized(g)?, true),
        Op::SymNormalized => hermitian_eig(&sym_normalized(g)?, true),
    }
}

#[derive(Serialize)]
struct SpectrumOutput {
    schema_version: u32,
    operator: &'static str,
    dim: usize,
    values: Vec<f64>,
    nullity: usize,
    max_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    vectors: Option<Vec<Vec<[f64; 2]>>>,
}

fn cmd_spectrum(file: &Path, operator: Op, vectors: bool, json: bool) -> Result<i32> {
    let g = load(file)?;
    let spectrum = solve_operator(&g, operator)?;
    let nullity = nullity_from(&spectrum, &NullityPolicy::default());
    if json {
        let out = SpectrumOutput {
            schema_version: io::SCHEMA_VERSION,
            operator: operator.label(),
            dim: spectrum.values.len(),
            values: spectrum.values.clone(),
            nullity,
            max_residual: spectrum.max_residual,
            vectors: vectors.then(|| {
                spectrum
                    .vectors
                    .as_ref()
                    .unwrap()
                    .iter()
                    .map(|x| x.iter().map(|z| [z.re, z.im]).collect())
                    .collect()
            }),
        };
        println!("{}", serde_json::to_string(&out).unwrap());
        return Ok(0);
    }
    println!("operator {}  dim {}", operator.label(), spectrum.values.len());
    println!(
        "eigenvalues: [{}]",
        spectrum
            .values
            .iter()
            .map(|v| fmt_sig(*v))
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("nullity: {nullity}");
    println!("max residual: {}", fmt_sig(spectrum.max_residual));
    if vectors {
        for (lambda, x) in spectrum
            .values
            .iter()
            .zip(spectrum.vectors.as_ref().unwrap())
        {
            let comps: Vec<String> = x
                .iter()
                .map(|z| format!("{}{}{}i", fmt_sig(z.re), if z.im < 0.0 { "-" } else { "+" }, fmt_sig(z.im.abs())))
                .collect();
            println!("lambda {} : [{}]", fmt_sig(*lambda), comps.join(", "));
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct CheckOutput {
    schema_version: u32,
    seed: u64,
    passed: usize,
    failed: usize,
    skipped: usize,
    reports: Vec<CheckReport>,
}

fn cmd_check(file: &Path, seed: u64, json: bool) -> Result<i32> {
    let g = load(file)?;
    let reports = analysis::run_full_suite(&g, seed);
    let (passed, failed, skipped) = analysis::summarize(&reports);
    if json {
        let out = CheckOutput {
            schema_version: io::SCHEMA_VERSION,
            seed,
            passed,
            failed,
            skipped,
            reports,
        };
        println!("{}", serde_json::to_string(&out).unwrap());
    } else {
        for r in &reports {
            match &r.verdict {
                Verdict::Pass => println!("PASS {} [{}]", r.check_name, r.inputs_digest),
                Verdict::Skipped(reason) => {
                    println!("SKIP {} [{}]: {reason}", r.check_name, r.inputs_digest)
                }
                Verdict::Fail => {
                    println!("FAIL {} [{}]", r.check_name, r.inputs_digest);
                    for m in &r.measured {
                        println!("     {} = {}", m.label, fmt_sig(m.value));
                    }
                }
            }
        }
        println!("{passed} passed, {failed} failed, {skipped} skipped");
    }
    Ok(if failed > 0 { 2 } else { 0 })
}

fn cmd_bounds(file: &Path, json: bool) -> Result<i32> {
    let g = load(file)?;
    let report = analysis::bound_report(&g);
    if json {
        println!("{}", serde_json::to_string(&report).unwrap());
        return Ok(0);
    }
    println!(
        "max degree {}  max edge size {}  regular: {}  uniform: {}",
        report.delta, report.nabla, report.is_regular, report.is_uniform
    );
    println!("rho(A)               = {}", fmt_sig(report.rho_a));
    println!("gershgorin(A)        = {}", fmt_sig(report.gershgorin_a));
    println!("lambda_max K         = {}", fmt_sig(report.lambda_max_k));
    println!(
        "lambda_max K (under) = {}",
        fmt_sig(report.lambda_max_k_underlying)
    );
    if let Some(l) = report.lambda_max_l {
        println!("lambda_max L         = {}", fmt_sig(l));
    }
    if let Some(l) = report.lambda_max_l_underlying {
        println!("lambda_max L (under) = {}", fmt_sig(l));
    }
    if let Some(alpha) = report.alpha {
        println!("alpha                = {alpha}");
    }
    if let Some(ratio) = report.vol_ratio {
        println!("vol(S)/|S|           = {}", fmt_sig(ratio));
    }
    for (name, verdict) in &report.verdicts {
        match verdict {
            Verdict::Pass => println!("PASS {name}"),
            Verdict::Fail => println!("FAIL {name}"),
            Verdict::Skipped(reason) => println!("SKIP {name}: {reason}"),
        }
    }
    Ok(0)
}

fn parse_index_list(text: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadParameter(format!("bad index list entry {part:?}")))
        })
        .collect()
}

fn load_switch_phases(file: &str) -> Result<Vec<Phase>> {
    let text = fs::read_to_string(file)?;
    let pairs: Vec<[f64; 2]> = serde_json::from_str(&text)
        .map_err(|e| Error::Schema(format!("switch file: {e}")))?;
    pairs.iter().map(|[re, im]| Phase::new(*re, *im)).collect()
}

fn cmd_transform(file: &Path, op: &[String], output: Option<&Path>) -> Result<i32> {
    let g = load(file)?;
    let arg = |what: &str| -> Result<&str> {
        op.get(1)
            .map(String::as_str)
            .ok_or_else(|| Error::BadParameter(format!("{} requires {what}", op[0])))
    };
    let no_arg = || -> Result<()> {
        if op.len() > 1 {
            Err(Error::BadParameter(format!(
                "{} takes no argument",
                op[0]
            )))
        } else {
            Ok(())
        }
    };
    let result = match op[0].as_str() {
        "dual" => {
            no_arg()?;
            g.dual()
        }
        "underlying" => {
            no_arg()?;
            g.underlying()
        }
        "delete-vertices" => {
            let list = parse_index_list(arg("a comma-separated vertex list")?)?;
            g.weak_delete_vertices(&list)?.0
        }
        "delete-edges" => {
            let list = parse_index_list(arg("a comma-separated edge list")?)?;
            g.weak_delete_edges(&list)?
        }
        "vswitch" => {
            let phases = load_switch_phases(arg("a phase file")?)?;
            g.switch(&SwitchingFunction::vertex(phases))?
        }
        "eswitch" => {
            let phases = load_switch_phases(arg("a phase file")?)?;
            g.switch(&SwitchingFunction::edge(phases))?
        }
        other => {
            return Err(Error::BadParameter(format!(
                "unknown transformation {other:?}"
            )))
        }
    };
    emit(output, &io::serialize(&result))?;
    Ok(0)
}

fn parse_phase_mode(text: &str) -> Result<PhaseMode> {
    if text == "continuous" {
        return Ok(PhaseMode::Continuous);
    }
    if let Some(k) = text.strip_prefix("roots:") {
        let k: u32 = k
            .parse()
            .map_err(|_| Error::BadParameter(format!("bad root count in {text:?}")))?;
        return Ok(PhaseMode::RootsOfUnity(k));
    }
    Err(Error::BadParameter(format!(
        "phase model must be \"continuous\" or \"roots:K\", got {text:?}"
    )))
}

fn cmd_gen(
    n: usize,
    m: usize,
    p: f64,
    phases: &str,
    seed: u64,
    output: Option<&Path>,
) -> Result<i32> {
    let mode = parse_phase_mode(phases)?;
    let generated = gen_random(n, m, p, mode, seed)?;
    if !generated.empty_edges.is_empty() {
        eprintln!(
            "warning: edges {:?} stayed empty after resampling",
            generated.empty_edges
        );
    }
    emit(output, &io::serialize(&generated.graph))?;
    Ok(0)
}
