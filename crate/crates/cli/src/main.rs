//! `fockbeam`: counting statistics of a balanced beam splitter on stdout.
//!
//! Exit codes: 0 on success, 2 for a bad invocation, 3 when a model rejects
//! its parameters (an approximation evaluated outside its validity region
//! under `--strict`, an unnormalizable sampling target, and similar).

mod app;
mod figures;
mod models;
mod output;

use std::process::ExitCode;

use clap::Parser;
use fockbeam_core::experiment::{compare_with_floor, sample};

use app::{Cli, Command, CompareArgs, DistArgs, FigureArgs, Format, SampleArgs};
use figures::FigureId;
use models::{build_distribution, CliError, ModelRequest};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Dist(args) => cmd_dist(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Figure(args) => cmd_figure(args),
    }
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

fn cmd_dist(args: DistArgs) -> Result<String, CliError> {
    if args.exact_rationals && !models::supports_exact_rationals(args.model) {
        return Err(usage(format!(
            "--exact-rationals needs an exactly rational model (exact, pair, lambda0-literal), got `{}`",
            args.model
        )));
    }
    if args.strict && !models::is_approximation(args.model) {
        return Err(usage(format!(
            "--strict only applies to the gauss and stirling approximations, got `{}`",
            args.model
        )));
    }
    let req = ModelRequest {
        model: args.model,
        na: args.counts.na,
        nb: args.counts.nb,
        theta: args.counts.theta,
        i_alpha: args.waves.i_alpha,
        i_beta: args.waves.i_beta,
        phase: args.waves.phase,
        phase_averaged: args.waves.phase_averaged,
        nodes: args.nodes,
        strict: args.strict,
    };
    let built = build_distribution(&req)?;
    Ok(match args.format {
        Format::Csv => output::dist_csv(&built, args.exact_rationals),
        Format::Json => output::dist_json(&built, args.exact_rationals),
    })
}

fn cmd_compare(args: CompareArgs) -> Result<String, CliError> {
    if !(args.rel_floor.is_finite() && args.rel_floor > 0.0) {
        return Err(usage(format!(
            "--rel-floor must be a positive finite number, got {}",
            args.rel_floor
        )));
    }
    let request = |model| {
        ModelRequest::counts_only(
            model,
            args.counts.na,
            args.counts.nb,
            args.counts.theta,
            args.nodes,
        )
    };
    let first = build_distribution(&request(args.first))?;
    let second = build_distribution(&request(args.second))?;
    let report = compare_with_floor(&first.distribution, &second.distribution, args.rel_floor)?;
    Ok(match args.format {
        Format::Csv => output::compare_csv(&report),
        Format::Json => {
            // Both models were built, so the counts were present and valid.
            let (na, nb) = (args.counts.na.unwrap(), args.counts.nb.unwrap());
            output::compare_json(args.first, args.second, na, nb, &report)
        }
    })
}

fn cmd_sample(args: SampleArgs) -> Result<String, CliError> {
    let req = ModelRequest::counts_only(
        args.model,
        args.counts.na,
        args.counts.nb,
        args.counts.theta,
        args.nodes,
    );
    let built = build_distribution(&req)?;
    let result = sample(&built.distribution, args.shots, args.seed)?;
    let total = built
        .distribution
        .conserved_total()
        .ok_or_else(|| usage(format!("model `{}` is not samplable by total count", args.model)))?;
    Ok(match args.format {
        Format::Csv => output::sample_csv(&result, total),
        Format::Json => output::sample_json(&built, &result, total),
    })
}

fn cmd_figure(args: FigureArgs) -> Result<String, CliError> {
    let id = FigureId::parse(&args.id).ok_or_else(|| {
        usage(format!(
            "unknown figure id `{}` (expected one of: {})",
            args.id,
            FigureId::ALL.map(FigureId::as_str).join(", ")
        ))
    })?;
    let data = figures::build_figure(id)?;
    Ok(match args.format {
        Format::Csv => output::figure_csv(&data),
        Format::Json => output::figure_json(&data),
    })
}
