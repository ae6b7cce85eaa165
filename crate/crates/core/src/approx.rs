//! Saddle-point machinery: the amplitude integrand peaks sharply at two
//! symmetric angles, and fitting Gaussians there yields closed-form
//! approximations to the counting probabilities, plus the envelope curves
//! that the even-m1 and odd-m1 probabilities oscillate between.

use alloc::format;
use alloc::vec::Vec;

// Float must stay imported even when a std-enabled build graph makes
// f64's inherent methods shadow it: the no_std library target has only
// the trait.
#[allow(unused_imports)]
use num_traits::Float;

use crate::numerics::log_factorial;
use crate::quantum::{BeamConfig, Outcome};
use crate::{Error, Result};

/// Peak position of the amplitude integrand: 2 arccos(sqrt(m1 / total)),
/// in [0, pi]. Decreases from pi to 0 as m1 grows.
pub fn phi0(m1: u32, total: u32) -> Result<f64> {
    if total == 0 || m1 > total {
        return Err(Error::UndefinedPeakAngle { m1, total });
    }
    Ok(2.0 * (f64::from(m1) / f64::from(total)).sqrt().acos())
}

/// The amplitude integrand cos^m1(phi/2) sin^m2(phi/2), sign included.
///
/// Over [0, pi] its magnitude peaks at [`phi0`]; the lobe at negative angles
/// carries the relative sign (-1)^m2.
pub fn q_function(phibar: f64, out: Outcome) -> f64 {
    let half = 0.5 * phibar;
    half.cos().powi(out.m1 as i32) * half.sin().powi(out.m2 as i32)
}

/// The two-peak Gaussian fit to the amplitude integrand for one outcome:
/// Q(phi) ~ prefactor * [exp(-N (phi - phi0)^2 / 4) +- mirror peak].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianFit {
    /// Peak position in [0, pi].
    pub phi0: f64,
    /// Magnitude of the second derivative of -ln Q at the peak, taken with
    /// respect to the half angle phi/2; equals 2N.
    pub curvature: f64,
    /// Peak height Q(phi0) = (m1/N)^(m1/2) (m2/N)^(m2/2).
    pub prefactor: f64,
}

/// Fits the double Gaussian to the integrand of the given outcome.
pub fn gaussian_fit(out: Outcome) -> Result<GaussianFit> {
    let n = out.total();
    let peak = phi0(out.m1, n)?;
    // x ln(x/n) with the x = 0 limit taken as 0.
    let xlog = |x: u32| {
        if x == 0 {
            0.0
        } else {
            f64::from(x) * (f64::from(x) / f64::from(n)).ln()
        }
    };
    Ok(GaussianFit {
        phi0: peak,
        curvature: 2.0 * f64::from(n),
        prefactor: (0.5 * (xlog(out.m1) + xlog(out.m2))).exp(),
    })
}

/// The oscillation factor cos^2 or sin^2 of delta * phi0 / 2, chosen by the
/// parity of m2. Exactly 0 or 1 for equal inputs, where the angle vanishes.
fn parity_branch(delta: i64, out: Outcome) -> Result<f64> {
    let half_peak = 0.5 * phi0(out.m1, out.total())?;
    let angle = delta as f64 * half_peak;
    let factor = if out.m2 % 2 == 0 {
        angle.cos()
    } else {
        angle.sin()
    };
    Ok(factor * factor)
}

fn require_conserved(cfg: &BeamConfig, out: Outcome) -> Result<()> {
    if out.total() != cfg.total() {
        return Err(Error::CountMismatch {
            m1: out.m1,
            m2: out.m2,
            expected_total: cfg.total(),
        });
    }
    Ok(())
}

/// Closed form obtained by integrating the Gaussian fit and squaring:
///
///   P = [2^(N+2) n_alpha! n_beta! / (pi N^(N+1))] *
///       [m1^m1 m2^m2 / (m1! m2!)] * exp(-dN^2 / 2N) * branch
///
/// where branch is cos^2 or sin^2 of dN phi0 / 2 by the parity of m2. The
/// parity zeros of equal inputs (odd m2 makes the sine vanish at angle 0)
/// come out exactly 0. Valid for m1 >= 1 and m2 >= 1; the boundary outcomes
/// have no interior peak to expand around.
pub fn gaussian_probability(cfg: &BeamConfig, out: Outcome) -> Result<f64> {
    require_conserved(cfg, out)?;
    if out.m1 < 1 || out.m2 < 1 {
        return Err(Error::OutsideValidity(format!(
            "Gaussian fit needs m1 >= 1 and m2 >= 1, got ({}, {})",
            out.m1, out.m2
        )));
    }
    let branch = parity_branch(cfg.delta(), out)?;
    if branch == 0.0 {
        return Ok(0.0);
    }
    let n = f64::from(cfg.total());
    let (m1, m2) = (f64::from(out.m1), f64::from(out.m2));
    let delta = cfg.delta() as f64;
    let log_p = (n + 2.0) * core::f64::consts::LN_2
        + log_factorial(cfg.n_alpha)
        + log_factorial(cfg.n_beta)
        - core::f64::consts::PI.ln()
        - (n + 1.0) * n.ln()
        + m1 * m1.ln()
        + m2 * m2.ln()
        - log_factorial(out.m1)
        - log_factorial(out.m2)
        - delta * delta / (2.0 * n);
    Ok(log_p.exp() * branch)
}

/// [`gaussian_probability`] with the count factorials replaced by Stirling's
/// formula m! ~ sqrt(2 pi) m^(m + 1/2) e^(-m), which turns the m-dependence
/// into the characteristic 1 / sqrt(m1 m2) envelope:
///
///   P = [2^(N+1) n_alpha! n_beta! e^N / (pi^2 N^(N+1))] *
///       exp(-dN^2 / 2N) / sqrt(m1 m2) * branch.
///
/// The half-power in the exponent of Stirling's formula is what keeps this
/// accurate to within a few percent once both counts exceed 2, so the valid
/// region is m1 >= 3 and m2 >= 3.
pub fn stirling_probability(cfg: &BeamConfig, out: Outcome) -> Result<f64> {
    require_conserved(cfg, out)?;
    if out.m1 < 3 || out.m2 < 3 {
        return Err(Error::OutsideValidity(format!(
            "Stirling form needs m1 >= 3 and m2 >= 3, got ({}, {})",
            out.m1, out.m2
        )));
    }
    let branch = parity_branch(cfg.delta(), out)?;
    if branch == 0.0 {
        return Ok(0.0);
    }
    let n = f64::from(cfg.total());
    let (m1, m2) = (f64::from(out.m1), f64::from(out.m2));
    let delta = cfg.delta() as f64;
    let log_p = (n + 1.0) * core::f64::consts::LN_2
        + log_factorial(cfg.n_alpha)
        + log_factorial(cfg.n_beta)
        - 2.0 * core::f64::consts::PI.ln()
        - (n + 1.0) * n.ln()
        + n
        - 0.5 * (m1 * m2).ln()
        - delta * delta / (2.0 * n);
    Ok(log_p.exp() * branch)
}

/// The pair of modulation factors the probabilities oscillate between, as
/// continuous functions of m1. Entries at even m1 follow one factor and
/// entries at odd m1 the other; where the two curves cross, the discrete
/// oscillation has a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnvelopeCurves {
    delta_abs: u32,
    total: u32,
}

/// Builds the envelope pair for the given input populations.
pub fn envelope_curves(cfg: &BeamConfig) -> EnvelopeCurves {
    EnvelopeCurves {
        delta_abs: cfg.delta().unsigned_abs() as u32,
        total: cfg.total(),
    }
}

impl EnvelopeCurves {
    fn fraction(&self, m1: f64) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            m1 / f64::from(self.total)
        }
    }

    /// cos^2(|dN| phi0 / 2) as a function of m1; the factor applied to
    /// outcomes with even m2. Closed quadratics for |dN| <= 2 (1, then u,
    /// then (2u - 1)^2 with u = m1/N), the trigonometric form beyond.
    pub fn cos_branch(&self, m1: f64) -> f64 {
        let u = self.fraction(m1);
        match self.delta_abs {
            0 => 1.0,
            1 => u,
            2 => {
                let c = 2.0 * u - 1.0;
                c * c
            }
            d => {
                let c = (f64::from(d) * u.sqrt().acos()).cos();
                c * c
            }
        }
    }

    /// sin^2(|dN| phi0 / 2): the factor applied to outcomes with odd m2,
    /// complementary to [`EnvelopeCurves::cos_branch`].
    pub fn sin_branch(&self, m1: f64) -> f64 {
        let u = self.fraction(m1);
        match self.delta_abs {
            0 => 0.0,
            1 => 1.0 - u,
            2 => 4.0 * u * (1.0 - u),
            d => {
                let s = (f64::from(d) * u.sqrt().acos()).sin();
                s * s
            }
        }
    }

    /// The branch followed by even-m1 entries (m2 parity there equals the
    /// parity of N).
    pub fn even_branch(&self, m1: f64) -> f64 {
        if self.total % 2 == 0 {
            self.cos_branch(m1)
        } else {
            self.sin_branch(m1)
        }
    }

    /// The branch followed by odd-m1 entries.
    pub fn odd_branch(&self, m1: f64) -> f64 {
        if self.total % 2 == 0 {
            self.sin_branch(m1)
        } else {
            self.cos_branch(m1)
        }
    }

    /// Integer pairs (m1, m1 + 1) bracketing each crossing of the two
    /// branches, the nodes of the discrete oscillation. A crossing landing
    /// exactly on an integer is reported as (m1, m1).
    pub fn crossings(&self) -> Vec<(u32, u32)> {
        let mut found = Vec::new();
        if self.total == 0 {
            return found;
        }
        let diff = |m1: u32| {
            let x = f64::from(m1);
            self.even_branch(x) - self.odd_branch(x)
        };
        for m1 in 0..=self.total {
            let here = diff(m1);
            if here == 0.0 {
                found.push((m1, m1));
            } else if m1 < self.total && here * diff(m1 + 1) < 0.0 {
                found.push((m1, m1 + 1));
            }
        }
        found
    }
}
