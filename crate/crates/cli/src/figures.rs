//! Reference figure datasets. Each id maps to one fully pinned-down
//! (model, inputs) combination, so the output depends on nothing but the id;
//! in particular the quadrature size is always the library default and the
//! node-count environment variable is ignored here.

use std::f64::consts::{LN_2, PI};

use fockbeam_core::approx::{envelope_curves, gaussian_fit, q_function};
use fockbeam_core::baselines::{
    classical_pdf, pair_model_distribution, semiclassical_distribution, ClassicalWaveParams,
};
use fockbeam_core::numerics::{log_factorial, QuadratureSpec};
use fockbeam_core::quantum::{exact_distribution, BeamConfig, Distribution, Outcome};

use crate::models::CliError;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    BalancedOverlays,
    UnbalancedOverlays,
    PeakedIntegrand,
    FourFour,
    BalancedFiftyExact,
    OneExcess,
    TwoExcessEnvelopes,
    SixExcess,
    UnbalancedOverlaysExact,
    PairBalanced,
    PairOneExcess,
}

impl FigureId {
    pub const ALL: [FigureId; 11] = [
        FigureId::BalancedOverlays,
        FigureId::UnbalancedOverlays,
        FigureId::PeakedIntegrand,
        FigureId::FourFour,
        FigureId::BalancedFiftyExact,
        FigureId::OneExcess,
        FigureId::TwoExcessEnvelopes,
        FigureId::SixExcess,
        FigureId::UnbalancedOverlaysExact,
        FigureId::PairBalanced,
        FigureId::PairOneExcess,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FigureId::BalancedOverlays => "2a",
            FigureId::UnbalancedOverlays => "2b",
            FigureId::PeakedIntegrand => "3",
            FigureId::FourFour => "4",
            FigureId::BalancedFiftyExact => "5",
            FigureId::OneExcess => "6",
            FigureId::TwoExcessEnvelopes => "7",
            FigureId::SixExcess => "8a",
            FigureId::UnbalancedOverlaysExact => "8b",
            FigureId::PairBalanced => "9",
            FigureId::PairOneExcess => "10",
        }
    }

    pub fn parse(s: &str) -> Option<FigureId> {
        FigureId::ALL.into_iter().find(|id| id.as_str() == s)
    }
}

/// One table value; integers keep their own type so counts print without a
/// mantissa.
#[derive(Clone, Copy)]
pub enum Cell {
    Int(i64),
    Float(f64),
}

pub struct FigureData {
    pub id: &'static str,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Cell>>,
}

fn default_spec(total: u32) -> QuadratureSpec {
    QuadratureSpec::default_for_total(total)
}

/// Density value on the integer intensity grid; the singular support edges
/// print as zero, matching how the plots clip them.
fn density_at(params: &ClassicalWaveParams, intensity: f64) -> Result<f64, CliError> {
    match classical_pdf(params, intensity) {
        Ok(d) => Ok(d),
        Err(fockbeam_core::Error::SingularPoint { .. }) => Ok(0.0),
        Err(e) => Err(e.into()),
    }
}

fn count_rows(dist: &Distribution) -> Vec<Vec<Cell>> {
    dist.entries
        .iter()
        .map(|(out, p)| {
            vec![
                Cell::Int(out.m1 as i64),
                Cell::Int(out.m2 as i64),
                Cell::Float(p.to_f64()),
            ]
        })
        .collect()
}

/// Classical density and semiclassical counts for the same pair of mean
/// intensities, tabulated on the integer count grid.
fn overlay_rows(ia: f64, ib: f64) -> Result<Vec<Vec<Cell>>, CliError> {
    let params = ClassicalWaveParams::new(ia, ib)?;
    let total = params.total_intensity().round() as u32;
    let semi = semiclassical_distribution(total, params.contrast(), default_spec(total))?;
    let mut rows = Vec::with_capacity(total as usize + 1);
    for m1 in 0..=total {
        rows.push(vec![
            Cell::Int(m1 as i64),
            Cell::Float(density_at(&params, m1 as f64)?),
            Cell::Float(semi.prob(Outcome::new(m1, total - m1))),
        ]);
    }
    Ok(rows)
}

/// Exact law plus classical and semiclassical overlays on one grid.
fn exact_overlay_rows(na: u32, nb: u32) -> Result<Vec<Vec<Cell>>, CliError> {
    let cfg = BeamConfig::new(na, nb);
    let total = cfg.total();
    let exact = exact_distribution(&cfg);
    let params = ClassicalWaveParams::new(na as f64, nb as f64)?;
    let semi = semiclassical_distribution(total, params.contrast(), default_spec(total))?;
    let mut rows = Vec::with_capacity(total as usize + 1);
    for (out, p) in &exact.entries {
        rows.push(vec![
            Cell::Int(out.m1 as i64),
            Cell::Int(out.m2 as i64),
            Cell::Float(p.to_f64()),
            Cell::Float(density_at(&params, out.m1 as f64)?),
            Cell::Float(semi.prob(*out)),
        ]);
    }
    Ok(rows)
}

/// The integrand peak profile: Q(phibar) for the (17, 83) outcome, scaled so
/// the peaks reach exactly one.
fn integrand_rows() -> Result<Vec<Vec<Cell>>, CliError> {
    let out = Outcome::new(17, 83);
    let scale = gaussian_fit(out)?.prefactor;
    let steps = 800u32;
    let mut rows = Vec::with_capacity(steps as usize + 1);
    for k in 0..=steps {
        let phibar = -PI + f64::from(k) * (2.0 * PI / f64::from(steps));
        rows.push(vec![
            Cell::Int(k as i64),
            Cell::Float(phibar),
            Cell::Float(q_function(phibar, out) / scale),
        ]);
    }
    Ok(rows)
}

/// Smooth height of the saddle-point form at count m1: the full approximation
/// is this envelope scale times the parity branch factor, so the curve passes
/// through the tops of the oscillation. Zero at the edge counts, where the
/// saddle point degenerates.
fn envelope_scale(cfg: &BeamConfig, m1: u32) -> f64 {
    let total = cfg.total();
    if m1 == 0 || m1 == total {
        return 0.0;
    }
    let n = f64::from(total);
    let m1f = f64::from(m1);
    let m2f = f64::from(total - m1);
    let delta = cfg.delta() as f64;
    let log_scale = (n + 1.0) * LN_2 + log_factorial(cfg.n_alpha) + log_factorial(cfg.n_beta)
        - 2.0 * PI.ln()
        - (n + 1.0) * n.ln()
        + n
        - 0.5 * (m1f * m2f).ln()
        - delta * delta / (2.0 * n);
    log_scale.exp()
}

/// Exact law with the even- and odd-count envelope curves alongside.
fn envelope_figure_rows(na: u32, nb: u32) -> Vec<Vec<Cell>> {
    let cfg = BeamConfig::new(na, nb);
    let curves = envelope_curves(&cfg);
    let exact = exact_distribution(&cfg);
    exact
        .entries
        .iter()
        .map(|(out, p)| {
            let scale = envelope_scale(&cfg, out.m1);
            let x = f64::from(out.m1);
            vec![
                Cell::Int(out.m1 as i64),
                Cell::Int(out.m2 as i64),
                Cell::Float(p.to_f64()),
                Cell::Float(scale * curves.even_branch(x)),
                Cell::Float(scale * curves.odd_branch(x)),
            ]
        })
        .collect()
}

/// Exact and semiclassical laws side by side for balanced fifty-photon input.
fn balanced_fifty_rows() -> Result<Vec<Vec<Cell>>, CliError> {
    let cfg = BeamConfig::new(25, 25);
    let exact = exact_distribution(&cfg);
    let semi = semiclassical_distribution(50, 1.0, default_spec(50))?;
    Ok(exact
        .entries
        .iter()
        .map(|(out, p)| {
            vec![
                Cell::Int(out.m1 as i64),
                Cell::Int(out.m2 as i64),
                Cell::Float(p.to_f64()),
                Cell::Float(semi.prob(*out)),
            ]
        })
        .collect())
}

pub fn build_figure(id: FigureId) -> Result<FigureData, CliError> {
    let (columns, rows): (&'static [&'static str], Vec<Vec<Cell>>) = match id {
        FigureId::BalancedOverlays => (
            &["m1", "classical_density", "semiclassical_p"],
            overlay_rows(25.0, 25.0)?,
        ),
        FigureId::UnbalancedOverlays => (
            &["m1", "classical_density", "semiclassical_p"],
            overlay_rows(44.0, 6.0)?,
        ),
        FigureId::PeakedIntegrand => (&["k", "phibar", "q"], integrand_rows()?),
        FigureId::FourFour => (
            &["m1", "m2", "p"],
            count_rows(&exact_distribution(&BeamConfig::new(4, 4))),
        ),
        FigureId::BalancedFiftyExact => (
            &["m1", "m2", "exact_p", "semiclassical_p"],
            balanced_fifty_rows()?,
        ),
        FigureId::OneExcess => (
            &["m1", "m2", "p"],
            count_rows(&exact_distribution(&BeamConfig::new(26, 25))),
        ),
        FigureId::TwoExcessEnvelopes => (
            &["m1", "m2", "p", "envelope_even", "envelope_odd"],
            envelope_figure_rows(26, 24),
        ),
        FigureId::SixExcess => (
            &["m1", "m2", "p"],
            count_rows(&exact_distribution(&BeamConfig::new(28, 22))),
        ),
        FigureId::UnbalancedOverlaysExact => (
            &["m1", "m2", "exact_p", "classical_density", "semiclassical_p"],
            exact_overlay_rows(44, 6)?,
        ),
        FigureId::PairBalanced => (
            &["m1", "m2", "p"],
            count_rows(&pair_model_distribution(&BeamConfig::new(25, 25))?),
        ),
        FigureId::PairOneExcess => (
            &["m1", "m2", "p"],
            count_rows(&pair_model_distribution(&BeamConfig::new(26, 25))?),
        ),
    };
    Ok(FigureData {
        id: id.as_str(),
        columns,
        rows,
    })
}
