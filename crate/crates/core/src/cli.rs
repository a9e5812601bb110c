//! The `pcsp` command line: one subcommand per operation, JSON in and out.
//!
//! Exit codes: 0 success or YES, 1 definite NO, 2 input or resource error,
//! 3 budget exhausted without an answer.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::aperiodicity::{digraph_aperiodicity, mixing_time_monic, Status};
use crate::boolmat::BoolMatrix;
use crate::consistency::{check_consistency_gap, lc_with, Answer, DeletionOrder, LcOptions};
use crate::error::{Error, Result};
use crate::generator::{generate_verified, paper_params, GenerateConfig};
use crate::hypergraph::{fibrosity_report, girth, ColoringLimits};
use crate::io::{hypergraph_to_string, read_hypergraph, read_structure, structure_to_string};
use crate::pipeline::{fooling_pipeline, FoolingConfig};
use crate::rational::{self, Rational};
use crate::structures::{monic_product, HomSearch};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug, Serialize)]
#[command(name = "pcsp", version, about = "Aperiodicity, sparsity and local-consistency experiments")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Common {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Work budget (partial maps, search nodes or checks, per command).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Parallelism hint; the current implementation runs sequentially.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Leave the timestamp out of reports.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Command {
    /// Decide aperiodicity and compute the mixing time.
    Aperiodicity(StructureArgs),
    /// Mixing time of a monic structure (its monic product otherwise).
    MixingTime(StructureArgs),
    /// Fibers, pendency, girth and sparsity of a hypergraph.
    HgStats(HgStatsArgs),
    /// Girth of a hypergraph.
    Girth(HypergraphArgs),
    /// Sample a hypergraph with verified girth, chromatic number and sparsity.
    Generate(GenerateArgs),
    /// Run κ-level local consistency.
    Lc(LcArgs),
    /// Search for a homomorphism.
    Hom(PairArgs),
    /// Check a (κ, γ) consistency gap.
    Gap(GapArgs),
    /// Search for an instance fooling local consistency.
    Fool(FoolArgs),
    /// Evaluate the parameter formulas behind the random construction.
    Params(ParamsArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct StructureArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Level cap for the mixing-time search.
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct HypergraphArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Args, Debug, Serialize)]
pub struct HgStatsArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub tau: usize,
    /// Sparsity threshold as `p/q`.
    #[arg(long)]
    pub beta: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Edge probability; defaults to the formula value when `--proof-faithful`.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    /// Girth target.
    #[arg(long, default_value_t = 3)]
    pub g: usize,
    /// Chromatic number target.
    #[arg(long, default_value_t = 3)]
    pub h: usize,
    #[arg(long, default_value = "3/2")]
    pub beta: String,
    #[arg(long, default_value = "1/10")]
    pub delta: String,
    #[arg(long, default_value_t = 100)]
    pub max_attempts: u64,
    /// Delete exactly n/2 vertices and use the formula edge probability.
    #[arg(long)]
    pub proof_faithful: bool,
    /// Accept instances whose sparsity check ran out of budget.
    #[arg(long)]
    pub allow_unknown: bool,
    /// Report sparsity without requiring it.
    #[arg(long)]
    pub no_sparsity: bool,
    /// Where the hypergraph goes; the report goes to `--out` or stdout.
    #[arg(long)]
    pub hypergraph_out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct PairArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long)]
    pub template: PathBuf,
}

#[derive(Args, Debug, Serialize)]
pub struct LcArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long)]
    pub kappa: usize,
    /// Process deletions in a seeded random order.
    #[arg(long)]
    pub shuffle: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct GapArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long)]
    pub kappa: usize,
    /// Tuple threshold as `p/q`.
    #[arg(long)]
    pub gamma: String,
}

#[derive(Args, Debug, Serialize)]
pub struct FoolArgs {
    #[arg(long)]
    pub template: PathBuf,
    #[arg(long)]
    pub weak: PathBuf,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    /// Levels to test: `a..b` (inclusive) or a comma list.
    #[arg(long, default_value = "0..3")]
    pub kappa: String,
    #[arg(long, default_value_t = 10)]
    pub runs: u64,
    #[arg(long, default_value_t = 20)]
    pub attempts: u64,
    /// Write the accepted instance as a structure here.
    #[arg(long)]
    pub instance_out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct ParamsArgs {
    #[arg(long)]
    pub g: usize,
    #[arg(long)]
    pub h: usize,
    #[arg(long)]
    pub beta: String,
    #[arg(long)]
    pub r: usize,
    /// Also report the edge probability at this n.
    #[arg(long)]
    pub n: Option<usize>,
}

fn parse_kappas(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Input(format!("cannot read levels from {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
}

fn parse_rational(name: &str, s: &str) -> Result<Rational> {
    rational::parse(s).map_err(|e| Error::Input(format!("--{name}: {e}")))
}

struct Outcome {
    code: i32,
    result: Value,
}

fn outcome(code: i32, result: impl Serialize) -> Result<Outcome> {
    Ok(Outcome {
        code,
        result: serde_json::to_value(result).expect("reports serialise"),
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let common = &cli.common;
    match &cli.command {
        Command::Aperiodicity(a) => {
            let s = read_structure(&a.input)?;
            let monic = if s.is_monic() { s.clone() } else { monic_product(&s) };
            let rep = mixing_time_monic(&monic, a.cap)?;
            let digraph = if monic.monic_arity() == Some(2) {
                let edges: Vec<(usize, usize)> = monic.relation(0).tuples().iter().map(|t| (t[0], t[1])).collect();
                Some(digraph_aperiodicity(&BoolMatrix::from_edges(monic.domain_size(), &edges))?)
            } else {
                None
            };
            let code = match rep.status {
                Status::Aperiodic => EXIT_OK,
                Status::NotAperiodic => EXIT_NO,
                Status::UndecidedAtCap => EXIT_BUDGET,
            };
            outcome(
                code,
                json!({
                    "aperiodic": rep.aperiodic,
                    "mixing_time": rep.mixing_time,
                    "converted_to_monic": !s.is_monic(),
                    "report": rep,
                    "digraph_criterion": digraph,
                }),
            )
        }
        Command::MixingTime(a) => {
            let s = read_structure(&a.input)?;
            let monic = if s.is_monic() { s } else { monic_product(&s) };
            let rep = mixing_time_monic(&monic, a.cap)?;
            let code = match rep.status {
                Status::Aperiodic => EXIT_OK,
                Status::NotAperiodic => EXIT_NO,
                Status::UndecidedAtCap => EXIT_BUDGET,
            };
            outcome(
                code,
                json!({
                    "mixing_time": rep.mixing_time,
                    "status": rep.status,
                    "levels_explored": rep.levels_explored,
                }),
            )
        }
        Command::HgStats(a) => {
            let h = read_hypergraph(&a.input)?;
            let beta = a.beta.as_deref().map(|b| parse_rational("beta", b)).transpose()?;
            outcome(EXIT_OK, fibrosity_report(&h, a.tau, beta.as_ref())?)
        }
        Command::Girth(a) => {
            let h = read_hypergraph(&a.input)?;
            let g = girth(&h);
            outcome(EXIT_OK, json!({ "girth": g, "acyclic": g.is_none() }))
        }
        Command::Generate(a) => {
            let beta = parse_rational("beta", &a.beta)?;
            let delta = parse_rational("delta", &a.delta)?;
            let p = match (a.p, a.proof_faithful) {
                (Some(p), _) => p,
                (None, true) => paper_params(a.g.max(1), a.h.max(1), &beta, a.r)?.edge_probability(a.n),
                (None, false) => return Err(Error::Input("--p is required unless --proof-faithful is set".into())),
            };
            let mut cfg = GenerateConfig::new(a.n, p, a.r, a.g, a.h);
            cfg.beta = beta;
            cfg.delta = delta;
            cfg.max_attempts = a.max_attempts;
            cfg.seed = common.seed;
            cfg.proof_faithful = a.proof_faithful;
            cfg.allow_unknown = a.allow_unknown;
            cfg.require_sparsity = !a.no_sparsity;
            if let Some(b) = common.budget {
                cfg.coloring = ColoringLimits { node_budget: b };
            }
            let gen = generate_verified(&cfg)?;
            if let (Some(path), Some(h)) = (&a.hypergraph_out, &gen.hypergraph) {
                write_file(path, &hypergraph_to_string(h))?;
            }
            let code = if gen.success() { EXIT_OK } else { EXIT_BUDGET };
            outcome(code, &gen.report)
        }
        Command::Lc(a) => {
            let x = read_structure(&a.pair.instance)?;
            let t = read_structure(&a.pair.template)?;
            let mut opts = LcOptions::default();
            if let Some(b) = common.budget {
                opts.budget = b as u128;
            }
            if a.shuffle {
                opts.order = DeletionOrder::Shuffled(common.seed);
            }
            let res = lc_with(&x, &t, a.kappa, &opts)?;
            let code = if res.answer == Answer::Yes { EXIT_OK } else { EXIT_NO };
            outcome(code, res.summary())
        }
        Command::Hom(a) => {
            let x = read_structure(&a.instance)?;
            let t = read_structure(&a.template)?;
            let mut search = HomSearch::new(&x, &t);
            if let Some(b) = common.budget {
                search = search.with_budget(b);
            }
            match search.find() {
                Ok(Some(map)) => outcome(EXIT_OK, json!({ "homomorphism": true, "map": map })),
                Ok(None) => outcome(EXIT_NO, json!({ "homomorphism": false })),
                Err(Error::Budget { .. }) => outcome(EXIT_BUDGET, json!({ "homomorphism": null })),
                Err(e) => Err(e),
            }
        }
        Command::Gap(a) => {
            let x = read_structure(&a.pair.instance)?;
            let t = read_structure(&a.pair.template)?;
            let gamma = parse_rational("gamma", &a.gamma)?;
            let budget = common.budget.map_or(10_000_000, u128::from);
            let v = check_consistency_gap(&x, &t, a.kappa, &gamma, budget)?;
            outcome(if v.holds { EXIT_OK } else { EXIT_NO }, v)
        }
        Command::Fool(a) => {
            let ta = read_structure(&a.template)?;
            let tb = read_structure(&a.weak)?;
            let mut cfg = FoolingConfig::new(a.n, a.p);
            cfg.kappas = parse_kappas(&a.kappa)?;
            cfg.seed = common.seed;
            cfg.runs = a.runs;
            cfg.attempts_per_run = a.attempts;
            if let Some(b) = common.budget {
                cfg.lc_budget = b as u128;
            }
            let rep = fooling_pipeline(&ta, &tb, &cfg)?;
            if let (Some(path), Some(x)) = (&a.instance_out, &rep.instance) {
                write_file(path, &structure_to_string(x.structure()))?;
            }
            outcome(if rep.fooled { EXIT_OK } else { EXIT_BUDGET }, &rep)
        }
        Command::Params(a) => {
            let beta = parse_rational("beta", &a.beta)?;
            let p = paper_params(a.g, a.h, &beta, a.r)?;
            let (first, second) = p.side_conditions();
            outcome(
                EXIT_OK,
                json!({
                    "params": p,
                    "side_conditions": { "mu_below_first_bound": first, "mu_theta_at_most_third": second },
                    "edge_probability": a.n.map(|n| p.edge_probability(n)),
                }),
            )
        }
    }
}

fn timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

/// Parses `args` (program name first), runs the command, writes its report
/// and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (code, body) = match dispatch(&cli) {
        Ok(o) => (o.code, json!({ "exit_code": o.code, "result": o.result })),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            let code = EXIT_ERROR;
            (code, json!({ "exit_code": code, "error": e.to_string() }))
        }
    };
    let mut report = json!({
        "tool": "pcsp",
        "version": env!("CARGO_PKG_VERSION"),
        "config": &cli,
    });
    let obj = report.as_object_mut().unwrap();
    for (k, v) in body.as_object().unwrap() {
        obj.insert(k.clone(), v.clone());
    }
    if !cli.common.no_timestamp {
        obj.insert("timestamp".into(), json!(timestamp()));
    }
    let text = serde_json::to_string_pretty(&report).expect("reports serialise") + "\n";
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(stderr, "error: {}: {e}", path.display());
                return EXIT_ERROR;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    code
}
