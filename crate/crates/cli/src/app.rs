//! Command-line grammar. Everything here is shape only; flag combinations
//! that depend on the chosen model are checked in [`crate::models`].

use clap::{Args, Parser, Subcommand, ValueEnum};
use fockbeam_core::quantum::ModelTag;

fn parse_model(s: &str) -> Result<ModelTag, String> {
    s.parse().map_err(|_| {
        format!(
            "unknown model `{s}` (expected one of: {})",
            ModelTag::ALL.map(|t| t.as_str()).join(", ")
        )
    })
}

/// Counting statistics of a balanced beam splitter fed with Fock states.
#[derive(Parser)]
#[command(name = "fockbeam", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the counting distribution of one model.
    Dist(DistArgs),
    /// Compare two models of the same input counts (first one is the reference).
    Compare(CompareArgs),
    /// Draw seeded shots from a model and tally the outcomes.
    Sample(SampleArgs),
    /// Print the dataset behind one of the reference figures.
    Figure(FigureArgs),
}

/// Output format shared by every subcommand.
#[derive(ValueEnum, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Fock-state inputs, used by every photon-counting model.
#[derive(Args)]
pub struct CountArgs {
    /// Photon count in input mode alpha.
    #[arg(long)]
    pub na: Option<u32>,

    /// Photon count in input mode beta.
    #[arg(long)]
    pub nb: Option<u32>,

    /// Splitter phase in radians (affects amplitudes only, never probabilities).
    #[arg(long)]
    pub theta: Option<f64>,
}

/// Classical wave and coherent-state inputs.
#[derive(Args)]
pub struct WaveArgs {
    /// Mean intensity (photon number) of input mode alpha.
    #[arg(long)]
    pub i_alpha: Option<f64>,

    /// Mean intensity (photon number) of input mode beta.
    #[arg(long)]
    pub i_beta: Option<f64>,

    /// Relative phase between the two coherent inputs, in radians.
    #[arg(long)]
    pub phase: Option<f64>,

    /// Average the coherent model over a uniform relative phase.
    #[arg(long)]
    pub phase_averaged: bool,
}

#[derive(Args)]
pub struct DistArgs {
    /// Model tag (exact, quad, gauss, stirling, semiclassical, classical,
    /// coherent, lambda0, lambda0-literal, pair).
    #[arg(long, value_parser = parse_model)]
    pub model: ModelTag,

    #[command(flatten)]
    pub counts: CountArgs,

    #[command(flatten)]
    pub waves: WaveArgs,

    /// Number of quadrature nodes (default: enough for the photon number).
    #[arg(long)]
    pub nodes: Option<usize>,

    /// Print exact probabilities as num/den rationals instead of floats.
    #[arg(long)]
    pub exact_rationals: bool,

    /// Fail outside an approximation's validity region instead of
    /// substituting the exact value there.
    #[arg(long)]
    pub strict: bool,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args)]
pub struct CompareArgs {
    /// Reference model tag.
    #[arg(value_parser = parse_model)]
    pub first: ModelTag,

    /// Model tag compared against the reference.
    #[arg(value_parser = parse_model)]
    pub second: ModelTag,

    #[command(flatten)]
    pub counts: CountArgs,

    /// Number of quadrature nodes (default: enough for the photon number).
    #[arg(long)]
    pub nodes: Option<usize>,

    /// Denominator floor for the relative-error metric.
    #[arg(long, default_value_t = 1e-9)]
    pub rel_floor: f64,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args)]
pub struct SampleArgs {
    /// Model tag to draw from (must produce a normalized photon-count law).
    #[arg(long, value_parser = parse_model)]
    pub model: ModelTag,

    #[command(flatten)]
    pub counts: CountArgs,

    /// Number of quadrature nodes (default: enough for the photon number).
    #[arg(long)]
    pub nodes: Option<usize>,

    /// Number of shots to draw.
    #[arg(long)]
    pub shots: u64,

    /// RNG seed; equal seeds reproduce the tally byte for byte.
    #[arg(long)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args)]
pub struct FigureArgs {
    /// Figure id: 2a, 2b, 3, 4, 5, 6, 7, 8a, 8b, 9 or 10.
    pub id: String,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}
