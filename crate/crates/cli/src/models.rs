//! Turns a parsed command line into a distribution, enforcing which flags
//! each model accepts and which quadrature size applies.

use fockbeam_core::baselines::{
    classical_pdf, coherent_distribution, lambda0_closed_form, lambda0_distribution,
    pair_model_distribution, semiclassical_distribution, ClassicalWaveParams, CoherentParams,
};
use fockbeam_core::numerics::QuadratureSpec;
use fockbeam_core::quantum::{
    exact_distribution, exact_probability, quadrature_probability, BeamConfig, Distribution,
    ModelTag, Outcome, ProbValue,
};
use fockbeam_core::Error;

/// Environment variable overriding the default quadrature node count.
/// An explicit `--nodes` flag wins over it; figure datasets ignore both.
pub const NODES_ENV: &str = "FOCKBEAM_QUAD_NODES";

/// Command-line failure, split by exit code: 2 for a bad invocation,
/// 3 for a model rejecting parameters it was legitimately handed.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Domain(err.to_string())
    }
}

/// Everything a model might need, collected from whichever subcommand is
/// running. Fields a model does not accept must be empty.
pub struct ModelRequest {
    pub model: ModelTag,
    pub na: Option<u32>,
    pub nb: Option<u32>,
    pub theta: Option<f64>,
    pub i_alpha: Option<f64>,
    pub i_beta: Option<f64>,
    pub phase: Option<f64>,
    pub phase_averaged: bool,
    pub nodes: Option<usize>,
    pub strict: bool,
}

impl ModelRequest {
    /// Request with photon counts only, as `compare` and `sample` build it.
    pub fn counts_only(model: ModelTag, na: Option<u32>, nb: Option<u32>, theta: Option<f64>, nodes: Option<usize>) -> Self {
        ModelRequest {
            model,
            na,
            nb,
            theta,
            i_alpha: None,
            i_beta: None,
            phase: None,
            phase_averaged: false,
            nodes,
            strict: false,
        }
    }
}

/// The input parameters a distribution was built from, kept for the output
/// headers; wave models carry intensities instead of photon counts.
pub enum Inputs {
    Counts {
        n_alpha: u32,
        n_beta: u32,
        theta: Option<f64>,
    },
    Waves {
        i_alpha: f64,
        i_beta: f64,
        phase: Option<f64>,
        phase_averaged: bool,
    },
}

/// A distribution plus the bookkeeping the serializers need.
pub struct BuiltModel {
    pub distribution: Distribution,
    /// `m1` rows where an approximation was outside its validity region and
    /// the exact value was substituted. Always empty under `--strict`.
    pub substituted: Vec<u32>,
    pub inputs: Inputs,
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

/// Quadrature size: explicit flag, then the environment override, then the
/// crate default for this photon number.
fn resolve_spec(flag: Option<usize>, total: u32) -> Result<QuadratureSpec, CliError> {
    if let Some(nodes) = flag {
        return QuadratureSpec::new(nodes).map_err(|e| usage(format!("--nodes: {e}")));
    }
    if let Ok(raw) = std::env::var(NODES_ENV) {
        let nodes: usize = raw
            .trim()
            .parse()
            .map_err(|_| usage(format!("{NODES_ENV} must be a positive integer, got `{raw}`")))?;
        return QuadratureSpec::new(nodes).map_err(|e| usage(format!("{NODES_ENV}: {e}")));
    }
    Ok(QuadratureSpec::default_for_total(total))
}

fn reject_wave_flags(req: &ModelRequest) -> Result<(), CliError> {
    if req.i_alpha.is_some() || req.i_beta.is_some() || req.phase.is_some() || req.phase_averaged {
        return Err(usage(format!(
            "model `{}` takes photon counts (--na, --nb), not intensity or phase flags",
            req.model
        )));
    }
    Ok(())
}

fn require_counts(req: &ModelRequest) -> Result<BeamConfig, CliError> {
    reject_wave_flags(req)?;
    match (req.na, req.nb) {
        (Some(na), Some(nb)) => {
            let cfg = BeamConfig::new(na, nb);
            Ok(match req.theta {
                Some(theta) => cfg.with_phase(theta),
                None => cfg,
            })
        }
        _ => Err(usage(format!("model `{}` needs --na and --nb", req.model))),
    }
}

fn require_waves(req: &ModelRequest) -> Result<(f64, f64), CliError> {
    if req.na.is_some() || req.nb.is_some() || req.theta.is_some() {
        return Err(usage(format!(
            "model `{}` takes intensities (--i-alpha, --i-beta), not photon-count flags",
            req.model
        )));
    }
    match (req.i_alpha, req.i_beta) {
        (Some(ia), Some(ib)) => Ok((ia, ib)),
        _ => Err(usage(format!(
            "model `{}` needs --i-alpha and --i-beta",
            req.model
        ))),
    }
}

fn counts_inputs(cfg: &BeamConfig, theta: Option<f64>) -> Inputs {
    Inputs::Counts {
        n_alpha: cfg.n_alpha,
        n_beta: cfg.n_beta,
        theta,
    }
}

/// Fringe contrast of two Fock inputs treated as intensities.
fn count_contrast(na: u32, nb: u32) -> f64 {
    let n = na + nb;
    if n == 0 {
        return 0.0;
    }
    2.0 * ((na as f64) * (nb as f64)).sqrt() / n as f64
}

/// Full distribution over the conserved outcomes, one approximation row per
/// `m1`, substituting the exact value wherever the approximation refuses.
fn approximation_rows(
    req: &ModelRequest,
    cfg: &BeamConfig,
    approx_fn: impl Fn(&BeamConfig, Outcome) -> fockbeam_core::Result<f64>,
) -> Result<BuiltModel, CliError> {
    let total = cfg.total();
    let mut entries = Vec::with_capacity(total as usize + 1);
    let mut substituted = Vec::new();
    for m1 in 0..=total {
        let out = Outcome::new(m1, total - m1);
        let p = match approx_fn(cfg, out) {
            Ok(p) => p,
            Err(Error::OutsideValidity(_)) if !req.strict => {
                substituted.push(m1);
                exact_probability(cfg, out).to_f64()
            }
            Err(e) => return Err(e.into()),
        };
        entries.push((out, ProbValue::Float(p)));
    }
    Ok(BuiltModel {
        distribution: Distribution {
            model: req.model,
            entries,
            normalized: false,
        },
        substituted,
        inputs: counts_inputs(cfg, req.theta),
    })
}

/// Builds the distribution the request names. Every flag the model does not
/// understand is a usage error, never silently ignored.
pub fn build_distribution(req: &ModelRequest) -> Result<BuiltModel, CliError> {
    let plain = |distribution: Distribution, inputs: Inputs| BuiltModel {
        distribution,
        substituted: Vec::new(),
        inputs,
    };
    match req.model {
        ModelTag::Exact => {
            let cfg = require_counts(req)?;
            Ok(plain(exact_distribution(&cfg), counts_inputs(&cfg, req.theta)))
        }
        ModelTag::Quadrature => {
            let cfg = require_counts(req)?;
            let spec = resolve_spec(req.nodes, cfg.total())?;
            let total = cfg.total();
            let mut entries = Vec::with_capacity(total as usize + 1);
            for m1 in 0..=total {
                let out = Outcome::new(m1, total - m1);
                let p = quadrature_probability(&cfg, out, spec)?;
                entries.push((out, ProbValue::Float(p)));
            }
            Ok(plain(
                Distribution {
                    model: ModelTag::Quadrature,
                    entries,
                    normalized: true,
                },
                counts_inputs(&cfg, req.theta),
            ))
        }
        ModelTag::Gaussian => {
            let cfg = require_counts(req)?;
            approximation_rows(req, &cfg, fockbeam_core::approx::gaussian_probability)
        }
        ModelTag::Stirling => {
            let cfg = require_counts(req)?;
            approximation_rows(req, &cfg, fockbeam_core::approx::stirling_probability)
        }
        ModelTag::Semiclassical => {
            let cfg = require_counts(req)?;
            let total = cfg.total();
            let spec = resolve_spec(req.nodes, total)?;
            let contrast = count_contrast(cfg.n_alpha, cfg.n_beta);
            let dist = semiclassical_distribution(total, contrast, spec)?;
            Ok(plain(dist, counts_inputs(&cfg, req.theta)))
        }
        ModelTag::Classical => {
            let (ia, ib) = require_waves(req)?;
            if req.phase.is_some() || req.phase_averaged {
                return Err(usage(
                    "the classical model has no phase flags; its density is already phase-averaged"
                        .into(),
                ));
            }
            let params = ClassicalWaveParams::new(ia, ib)?;
            let grid_total = params.total_intensity().round() as u32;
            let mut entries = Vec::with_capacity(grid_total as usize + 1);
            for m1 in 0..=grid_total {
                let density = match classical_pdf(&params, m1 as f64) {
                    Ok(d) => d,
                    Err(Error::SingularPoint { .. }) => 0.0,
                    Err(e) => return Err(e.into()),
                };
                entries.push((
                    Outcome::new(m1, grid_total - m1),
                    ProbValue::Float(density),
                ));
            }
            Ok(plain(
                Distribution {
                    model: ModelTag::Classical,
                    entries,
                    normalized: false,
                },
                Inputs::Waves {
                    i_alpha: ia,
                    i_beta: ib,
                    phase: None,
                    phase_averaged: false,
                },
            ))
        }
        ModelTag::Coherent => {
            let (ia, ib) = require_waves(req)?;
            if req.phase_averaged && req.phase.is_some() {
                return Err(usage("--phase conflicts with --phase-averaged".into()));
            }
            let lambda = req.phase.unwrap_or(0.0);
            let params = CoherentParams::from_intensities(ia, ib, lambda)?;
            let spec = resolve_spec(req.nodes, params.total_intensity().round() as u32)?;
            let dist = coherent_distribution(&params, req.phase_averaged, spec)?;
            Ok(plain(
                dist,
                Inputs::Waves {
                    i_alpha: ia,
                    i_beta: ib,
                    phase: if req.phase_averaged { None } else { Some(lambda) },
                    phase_averaged: req.phase_averaged,
                },
            ))
        }
        ModelTag::Lambda0 => {
            let cfg = require_counts(req)?;
            let spec = resolve_spec(req.nodes, cfg.total())?;
            let dist = lambda0_distribution(&cfg, spec)?;
            Ok(plain(dist, counts_inputs(&cfg, req.theta)))
        }
        ModelTag::Lambda0Literal => {
            let cfg = require_counts(req)?;
            let dist = lambda0_closed_form(&cfg)?.distribution;
            Ok(plain(dist, counts_inputs(&cfg, req.theta)))
        }
        ModelTag::Pair => {
            let cfg = require_counts(req)?;
            let dist = pair_model_distribution(&cfg)?;
            Ok(plain(dist, counts_inputs(&cfg, req.theta)))
        }
    }
}

/// Models whose entries stay exact rationals end to end.
pub fn supports_exact_rationals(model: ModelTag) -> bool {
    matches!(
        model,
        ModelTag::Exact | ModelTag::Pair | ModelTag::Lambda0Literal
    )
}

/// Models with a validity region, the only ones `--strict` applies to.
pub fn is_approximation(model: ModelTag) -> bool {
    matches!(model, ModelTag::Gaussian | ModelTag::Stirling)
}
