use std::path::PathBuf;

use bianchi_core::{KMode, ModelType, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bianchi", version, about = "Polynomial first integrals of the Bianchi class A cosmologies")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Nullspace solver.
    #[arg(long, global = true, default_value = "fraction-free")]
    pub solver: String,
    /// Add tool version and invocation metadata to JSON outputs.
    #[arg(long, global = true)]
    pub provenance: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print all six systems in canonical polynomial text.
    Catalog(CatalogArgs),
    /// Search for homogeneous polynomial first integrals degree by degree.
    Find(FindArgs),
    /// Check the known first integrals of a model exactly.
    Verify(VerifyArgs),
    /// Integrate a trajectory and monitor invariant drift.
    Simulate(SimulateArgs),
    /// Run one of the PDE lemma analyzers.
    Lemma(LemmaArgs),
    /// Sweep every model and k sample and compare with the classification.
    Report(ReportArgs),
}

pub fn parse_model(s: &str) -> Result<ModelType, String> {
    s.parse().map_err(|e: bianchi_core::Error| e.to_string())
}

pub fn parse_k(s: &str) -> Result<KMode, String> {
    s.parse().map_err(|e: bianchi_core::Error| e.to_string())
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: bianchi_core::Error| e.to_string())
}

/// A decimal or an exact `p/q`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    if s.contains('/') {
        return parse_rational(s).map(|r| r.to_f64());
    }
    s.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("invalid number {s:?}"))
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// A rational in [0, 1) or "symbolic".
    #[arg(long, default_value = "symbolic", value_parser = parse_k)]
    pub k: KMode,
}

#[derive(Debug, Args)]
pub struct FindArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: ModelType,
    #[arg(long, default_value = "1/2", value_parser = parse_k)]
    pub k: KMode,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=12))]
    pub max_degree: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: ModelType,
    #[arg(long, default_value = "symbolic", value_parser = parse_k)]
    pub k: KMode,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: ModelType,
    #[arg(long, default_value = "1/2", value_parser = parse_k)]
    pub k: KMode,
    /// Six comma-separated numbers; defaults depend on the model.
    #[arg(long, value_delimiter = ',', num_args = 1.., value_parser = parse_real)]
    pub x0: Option<Vec<f64>>,
    #[arg(long, default_value = "1", value_parser = parse_real)]
    pub t_end: f64,
    /// Relative and absolute tolerance.
    #[arg(long, default_value = "1e-12", value_parser = parse_real)]
    pub tol: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_steps: usize,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[command(subcommand)]
    pub which: LemmaCommand,
}

#[derive(Debug, Subcommand)]
pub enum LemmaCommand {
    /// Weighted first-order PDE in x4, x5, x6.
    Estrella {
        /// Three comma-separated rationals a1,a2,a3.
        #[arg(long, value_delimiter = ',', num_args = 1.., value_parser = parse_rational)]
        a: Vec<Rational>,
        #[arg(long, value_parser = parse_rational)]
        k: Rational,
        #[arg(long)]
        degree: u32,
    },
    /// Coupled PDE for (g, h).
    Dificil {
        #[arg(long, value_parser = parse_rational)]
        k: Rational,
        #[arg(long)]
        n: u32,
    },
    /// The S_n recursion identity.
    Sn {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=12))]
    pub max_degree: u32,
    /// Comma-separated rationals in [0, 1).
    #[arg(long, value_delimiter = ',', default_value = "0,1/2,2/3,9/10", value_parser = parse_k)]
    pub k_samples: Vec<KMode>,
    /// Skip the all-k symbolic sweep.
    #[arg(long)]
    pub no_symbolic: bool,
}
