//! Reference models that strip out multiparticle interference in different
//! ways: classical intensity waves, semiclassical particles riding a
//! classical field, independent coherent states, a single shared relative
//! phase, and pairwise-only interference. Comparing their predictions with
//! the exact ones isolates which features need the full quantum treatment.

use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
// Float must stay imported even when a std-enabled build graph makes
// f64's inherent methods shadow it: the no_std library target has only
// the trait.
#[allow(unused_imports)]
use num_traits::Float;

use crate::numerics::{
    binomial_exact, factorial_exact, log_factorial, periodic_mean, ExactProb, QuadratureSpec,
};
use crate::quantum::{BeamConfig, Distribution, ModelTag, Outcome, ProbValue};
use crate::{Error, Result};

/// Input intensities for the classical wave model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalWaveParams {
    i_alpha: f64,
    i_beta: f64,
}

impl ClassicalWaveParams {
    /// Validates and stores the two input intensities. The first must be
    /// positive, the second nonnegative, both finite.
    pub fn new(i_alpha: f64, i_beta: f64) -> Result<Self> {
        if !(i_alpha.is_finite() && i_beta.is_finite() && i_alpha > 0.0 && i_beta >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "classical wave intensities must be finite with i_alpha > 0 and \
                 i_beta >= 0, got ({i_alpha}, {i_beta})"
            )));
        }
        Ok(Self { i_alpha, i_beta })
    }

    /// Amplitude ratio sqrt(i_beta / i_alpha).
    pub fn amplitude_ratio(&self) -> f64 {
        (self.i_beta / self.i_alpha).sqrt()
    }

    /// Fringe contrast 2 sqrt(i_alpha i_beta) / (i_alpha + i_beta), in
    /// [0, 1]; this is the r parameter of the semiclassical model.
    pub fn contrast(&self) -> f64 {
        2.0 * (self.i_alpha * self.i_beta).sqrt() / self.total_intensity()
    }

    /// Endpoints (a, b) of the output intensity range, where a and b are
    /// (sqrt(i_alpha) -+ sqrt(i_beta))^2 / 2. The density lives on the open
    /// interval and diverges at both ends.
    pub fn support(&self) -> (f64, f64) {
        let (sa, sb) = (self.i_alpha.sqrt(), self.i_beta.sqrt());
        let lo = sa - sb;
        let hi = sa + sb;
        (0.5 * lo * lo, 0.5 * hi * hi)
    }

    pub fn total_intensity(&self) -> f64 {
        self.i_alpha + self.i_beta
    }
}

/// Probability density of one output intensity when two classical waves of
/// fixed intensity but uniformly random relative phase interfere:
///
///   p(i) = 1 / (pi sqrt((i - a)(b - i)))
///
/// on the open support (a, b), zero outside. The inverse square roots are
/// integrable, so the density normalizes despite diverging at the ends;
/// asking for the value exactly at a or b is an error rather than infinity.
pub fn classical_pdf(params: &ClassicalWaveParams, intensity: f64) -> Result<f64> {
    let (a, b) = params.support();
    if intensity == a || intensity == b {
        return Err(Error::SingularPoint { intensity });
    }
    if intensity < a || intensity > b {
        return Ok(0.0);
    }
    Ok(1.0 / (core::f64::consts::PI * ((intensity - a) * (b - intensity)).sqrt()))
}

fn check_contrast(r: f64) -> Result<()> {
    if !(r.is_finite() && (0.0..=1.0).contains(&r)) {
        return Err(Error::InvalidParameter(format!(
            "fringe contrast must lie in [0, 1], got {r}"
        )));
    }
    Ok(())
}

/// Distribution of n classical particles, each independently choosing an
/// output with probabilities (1 +- r cos(lambda)) / 2 set by the random
/// relative phase lambda of the underlying fields:
///
///   P(m1) = C(n, m1) <((1 + r cos l) / 2)^m1 ((1 - r cos l) / 2)^m2>_l
///
/// At r = 0 this collapses to the fair binomial; r is the fringe contrast
/// of [`ClassicalWaveParams::contrast`].
pub fn semiclassical_distribution(
    n: u32,
    r: f64,
    spec: QuadratureSpec,
) -> Result<Distribution> {
    check_contrast(r)?;
    let mut entries = Vec::with_capacity(n as usize + 1);
    for m1 in 0..=n {
        let m2 = n - m1;
        let weight = binomial_exact(n, m1)
            .to_f64()
            .expect("binomial coefficient fits in f64 range");
        let mean = periodic_mean(spec, |lambda| {
            let c = r * lambda.cos();
            (0.5 * (1.0 + c)).powi(m1 as i32) * (0.5 * (1.0 - c)).powi(m2 as i32)
        });
        entries.push((Outcome::new(m1, m2), ProbValue::Float(weight * mean)));
    }
    Ok(Distribution {
        model: ModelTag::Semiclassical,
        entries,
        normalized: true,
    })
}

/// The phase average of [`semiclassical_distribution`] carried out in closed
/// form: expanding both binomials in r cos(lambda) and averaging kills the
/// odd powers and turns even ones into central binomial ratios, leaving
///
///   P(m1) prop sum over p <= m1, q <= m2, p + q = 2h of
///     (-1)^q r^2h (2h)! / (4^h p! (m1-p)! q! (m2-q)! (h!)^2)
///
/// evaluated in exact rational arithmetic (r enters only through its square,
/// taken as the exact rational value of the given float) and normalized by
/// the total. Agreement with the quadrature route checks both.
pub fn semiclassical_closed_form(n: u32, r: f64) -> Result<Distribution> {
    check_contrast(r)?;
    let r_exact = BigRational::from_float(r)
        .expect("finite contrast converts to an exact rational");
    let r_sq = r_exact.clone() * r_exact;
    let mut powers = Vec::with_capacity(n as usize / 2 + 1);
    powers.push(BigRational::one());
    for h in 1..=(n as usize / 2) {
        powers.push(powers[h - 1].clone() * r_sq.clone());
    }

    let mut weights = Vec::with_capacity(n as usize + 1);
    let mut total = BigRational::zero();
    for m1 in 0..=n {
        let m2 = n - m1;
        let mut weight = BigRational::zero();
        for p in 0..=m1 {
            for q in 0..=m2 {
                if (p + q) % 2 != 0 {
                    continue;
                }
                let h = (p + q) / 2;
                let half_fact = factorial_exact(h);
                let numer = factorial_exact(p + q);
                let denom = factorial_exact(p)
                    * factorial_exact(m1 - p)
                    * factorial_exact(q)
                    * factorial_exact(m2 - q)
                    * (half_fact.clone() * half_fact)
                    * num_bigint::BigUint::from(4u32).pow(h);
                let term = powers[h as usize].clone()
                    * BigRational::new(numer.into(), denom.into());
                if q % 2 == 0 {
                    weight += term;
                } else {
                    weight -= term;
                }
            }
        }
        total += weight.clone();
        weights.push(weight);
    }

    let entries = weights
        .into_iter()
        .enumerate()
        .map(|(m1, weight)| {
            let m1 = m1 as u32;
            let prob = ExactProb::from_ratio(weight / total.clone())?;
            Ok((Outcome::new(m1, n - m1), ProbValue::Exact(prob)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Distribution {
        model: ModelTag::Semiclassical,
        entries,
        normalized: true,
    })
}

/// Coherent-state inputs, reduced to the three numbers the output statistics
/// depend on: the two mean photon numbers and the full relative phase
/// (source phase difference plus the splitter setting).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentParams {
    i_alpha: f64,
    i_beta: f64,
    lambda: f64,
}

impl CoherentParams {
    pub fn from_intensities(i_alpha: f64, i_beta: f64, lambda: f64) -> Result<Self> {
        if !(i_alpha.is_finite() && i_beta.is_finite() && lambda.is_finite())
            || i_alpha < 0.0
            || i_beta < 0.0
        {
            return Err(Error::InvalidParameter(format!(
                "coherent intensities must be finite and nonnegative with a \
                 finite phase, got ({i_alpha}, {i_beta}, {lambda})"
            )));
        }
        Ok(Self {
            i_alpha,
            i_beta,
            lambda,
        })
    }

    pub fn total_intensity(&self) -> f64 {
        self.i_alpha + self.i_beta
    }

    /// Mean photon numbers (mu1, mu2) at the two outputs for the stored
    /// phase; they swing by +-sqrt(i_alpha i_beta) around half the total.
    pub fn output_means(&self) -> (f64, f64) {
        let half = 0.5 * self.total_intensity();
        let swing = (self.i_alpha * self.i_beta).sqrt() * self.lambda.sin();
        (half + swing, half - swing)
    }
}

/// Poisson log-mass, safe at mu = 0 where the distribution degenerates to a
/// point at k = 0.
fn poisson_log_pmf(mu: f64, k: u32) -> f64 {
    if mu == 0.0 {
        return if k == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    -mu + f64::from(k) * mu.ln() - log_factorial(k)
}

/// Smallest count whose cumulative Poisson mass reaches 1 - tail.
fn poisson_truncation(mu: f64, tail: f64) -> u32 {
    let mut cum = 0.0;
    let mut compensation = 0.0;
    let mut k = 0u32;
    loop {
        let p = poisson_log_pmf(mu, k).exp();
        let fresh = cum + p;
        compensation += if cum.abs() >= p.abs() {
            (cum - fresh) + p
        } else {
            (p - fresh) + cum
        };
        cum = fresh;
        if cum + compensation >= 1.0 - tail && f64::from(k) >= mu {
            return k;
        }
        k += 1;
    }
}

/// Joint count distribution for two independent coherent beams: a product of
/// Poisson laws at the output means, optionally averaged over a uniform
/// relative phase. The support is truncated per mode so that the retained
/// mass is at least 1 - 1e-12; the total count is not conserved, so entries
/// range over a rectangle of (m1, m2) pairs.
pub fn coherent_distribution(
    params: &CoherentParams,
    phase_averaged: bool,
    spec: QuadratureSpec,
) -> Result<Distribution> {
    const MODE_TAIL: f64 = 5e-13;
    let half = 0.5 * params.total_intensity();
    let swing = (params.i_alpha * params.i_beta).sqrt();

    let entries = if phase_averaged {
        let bound = poisson_truncation(half + swing, MODE_TAIL);
        let width = bound as usize + 1;
        // The integrand is a trig polynomial of degree m1 + m2 in the phase,
        // so the node count must exceed the largest retained total.
        let nodes = QuadratureSpec::new(spec.nodes().max(2 * width))?;
        let mut grid = alloc::vec![0.0f64; width * width];
        let mut pmf1 = alloc::vec![0.0f64; width];
        let mut pmf2 = alloc::vec![0.0f64; width];
        let m = nodes.nodes() as f64;
        for node in 0..nodes.nodes() {
            let lambda = -core::f64::consts::PI
                + core::f64::consts::TAU * node as f64 / m;
            let shift = swing * lambda.sin();
            for k in 0..width {
                pmf1[k] = poisson_log_pmf(half + shift, k as u32).exp();
                pmf2[k] = poisson_log_pmf(half - shift, k as u32).exp();
            }
            for (m1, row) in grid.chunks_exact_mut(width).enumerate() {
                let w1 = pmf1[m1];
                for (cell, &w2) in row.iter_mut().zip(pmf2.iter()) {
                    *cell += w1 * w2;
                }
            }
        }
        grid.iter()
            .enumerate()
            .map(|(idx, &total)| {
                let out = Outcome::new((idx / width) as u32, (idx % width) as u32);
                (out, ProbValue::Float(total / m))
            })
            .collect()
    } else {
        let (mu1, mu2) = params.output_means();
        let bound1 = poisson_truncation(mu1, MODE_TAIL);
        let bound2 = poisson_truncation(mu2, MODE_TAIL);
        let mut entries = Vec::with_capacity((bound1 as usize + 1) * (bound2 as usize + 1));
        for m1 in 0..=bound1 {
            let w1 = poisson_log_pmf(mu1, m1).exp();
            for m2 in 0..=bound2 {
                let w2 = poisson_log_pmf(mu2, m2).exp();
                entries.push((Outcome::new(m1, m2), ProbValue::Float(w1 * w2)));
            }
        }
        entries
    };

    Ok(Distribution {
        model: ModelTag::Coherent,
        entries,
        normalized: true,
    })
}

/// Counting distribution when every particle shares one random relative
/// phase lambda but the conjugate collective variable is pinned to zero:
///
///   P(m1) prop [n_alpha! n_beta! / (m1! m2!)] <(1 + cos l)^m1 (1 - cos l)^m2>_l
///
/// normalized over m1. Pinning the collective variable removes every
/// multiparticle interference effect except the shared fringe, which makes
/// this coincide with the semiclassical model at full contrast.
pub fn lambda0_distribution(cfg: &BeamConfig, spec: QuadratureSpec) -> Result<Distribution> {
    let n = cfg.total();
    let mut weights = Vec::with_capacity(n as usize + 1);
    let mut total = 0.0;
    for m1 in 0..=n {
        let m2 = n - m1;
        let log_pref = log_factorial(cfg.n_alpha) + log_factorial(cfg.n_beta)
            - log_factorial(m1)
            - log_factorial(m2);
        let mean = periodic_mean(spec, |lambda| {
            let c = lambda.cos();
            (1.0 + c).powi(m1 as i32) * (1.0 - c).powi(m2 as i32)
        });
        let weight = log_pref.exp() * mean;
        total += weight;
        weights.push(weight);
    }
    let entries = weights
        .into_iter()
        .enumerate()
        .map(|(m1, weight)| {
            let m1 = m1 as u32;
            (Outcome::new(m1, n - m1), ProbValue::Float(weight / total))
        })
        .collect();
    Ok(Distribution {
        model: ModelTag::Lambda0,
        entries,
        normalized: true,
    })
}

/// A closed-form counting distribution evaluated in exact arithmetic,
/// together with its pointwise deviation from an independent numerical
/// route. Small deviations certify the printed formula.
#[derive(Debug, Clone)]
pub struct ClosedFormReport {
    /// The closed-form distribution, entries as exact rationals.
    pub distribution: Distribution,
    /// Per-m1 difference, closed form minus quadrature.
    pub deviations: Vec<(u32, f64)>,
    pub max_abs_deviation: f64,
}

/// Closed form of the shared-phase model, obtained by expanding the phase
/// average into factorial sums:
///
///   P(m1) = [N! (2 m1)! (2 m2)! / (4^N m1! m2!)] *
///           sum over p of (-1)^(m1 + p) / (p! (2 m1 - p)! (N - p)! (N - 2 m1 + p)!)
///
/// with p ranging over the values keeping all four arguments nonnegative.
/// Evaluated as exact rationals; the report carries the deviation from
/// [`lambda0_distribution`] at default quadrature so the two independent
/// routes vouch for each other.
pub fn lambda0_closed_form(cfg: &BeamConfig) -> Result<ClosedFormReport> {
    let n = cfg.total();
    let spec = QuadratureSpec::default_for_total(n);
    let quadrature = lambda0_distribution(cfg, spec)?;

    let mut entries = Vec::with_capacity(n as usize + 1);
    for m1 in 0..=n {
        let m2 = n - m1;
        let prefactor = BigRational::new(
            (factorial_exact(n) * factorial_exact(2 * m1) * factorial_exact(2 * m2)).into(),
            (num_bigint::BigUint::from(4u32).pow(n)
                * factorial_exact(m1)
                * factorial_exact(m2))
            .into(),
        );
        let lo = (2 * m1).saturating_sub(n);
        let hi = (2 * m1).min(n);
        let mut sum = BigRational::zero();
        for p in lo..=hi {
            let denom = factorial_exact(p)
                * factorial_exact(2 * m1 - p)
                * factorial_exact(n - p)
                * factorial_exact(n + p - 2 * m1);
            let term = BigRational::new(num_bigint::BigInt::one(), denom.into());
            if (m1 + p) % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let prob = ExactProb::from_ratio(prefactor * sum)?;
        entries.push((Outcome::new(m1, m2), ProbValue::Exact(prob)));
    }

    let distribution = Distribution {
        model: ModelTag::Lambda0Literal,
        entries,
        normalized: true,
    };
    let deviations: Vec<(u32, f64)> = distribution
        .m1_probs()
        .into_iter()
        .zip(quadrature.m1_probs())
        .map(|((m1, closed), (_, quad))| (m1, closed - quad))
        .collect();
    let max_abs_deviation = deviations
        .iter()
        .fold(0.0f64, |acc, &(_, d)| acc.max(d.abs()));
    Ok(ClosedFormReport {
        distribution,
        deviations,
        max_abs_deviation,
    })
}

/// Counting distribution when interference is allowed only within particle
/// pairs: the minority count pairs up with partners from the other beam, each
/// pair lands together in a random output, and the unpaired excess scatters
/// one by one. With d = |n_alpha - n_beta| excess singles and
/// k = min(n_alpha, n_beta) pairs,
///
///   P(m1) = sum over s of C(d, s) C(k, (m1 - s) / 2) / 2^(k + d)
///
/// where s runs over counts with the same parity as m1. Balanced inputs give
/// a parity-zero pattern at half the width of the exact distribution.
pub fn pair_model_distribution(cfg: &BeamConfig) -> Result<Distribution> {
    let pairs = cfg.n_alpha.min(cfg.n_beta);
    let singles = cfg.n_alpha.abs_diff(cfg.n_beta);
    let n = cfg.total();
    let denom = num_bigint::BigUint::from(1u32) << (pairs + singles);

    let mut entries = Vec::with_capacity(n as usize + 1);
    for m1 in 0..=n {
        let mut numer = num_bigint::BigUint::zero();
        let mut s = m1 % 2;
        while s <= singles && s <= m1 {
            let pair_hits = (m1 - s) / 2;
            if pair_hits <= pairs {
                numer += binomial_exact(singles, s) * binomial_exact(pairs, pair_hits);
            }
            s += 2;
        }
        let prob = ExactProb::new(numer.into(), denom.clone().into())?;
        entries.push((Outcome::new(m1, n - m1), ProbValue::Exact(prob)));
    }
    Ok(Distribution {
        model: ModelTag::Pair,
        entries,
        normalized: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    #[test]
    fn classical_support_and_center() {
        let params = ClassicalWaveParams::new(2.0, 2.0).unwrap();
        let (a, b) = params.support();
        assert_eq!(a, 0.0);
        assert!((b - 4.0).abs() < 1e-15);
        assert_eq!(params.contrast(), 1.0);
        let center = classical_pdf(&params, 2.0).unwrap();
        assert!((center - 1.0 / (2.0 * core::f64::consts::PI)).abs() < 1e-15);
    }

    #[test]
    fn classical_edges_and_outside() {
        let params = ClassicalWaveParams::new(44.0, 6.0).unwrap();
        let (a, b) = params.support();
        assert!(matches!(
            classical_pdf(&params, a),
            Err(Error::SingularPoint { .. })
        ));
        assert_eq!(classical_pdf(&params, b + 1.0).unwrap(), 0.0);
        assert_eq!(classical_pdf(&params, a - 1.0).unwrap(), 0.0);
        assert!(classical_pdf(&params, 25.0).unwrap() > 0.0);
    }

    #[test]
    fn classical_rejects_bad_intensities() {
        assert!(ClassicalWaveParams::new(0.0, 1.0).is_err());
        assert!(ClassicalWaveParams::new(1.0, -0.5).is_err());
        assert!(ClassicalWaveParams::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn zero_contrast_is_the_fair_binomial() {
        let n = 12;
        let spec = QuadratureSpec::default_for_total(n);
        let dist = semiclassical_distribution(n, 0.0, spec).unwrap();
        for (out, p) in &dist.entries {
            let expected = binomial_exact(n, out.m1).to_f64().unwrap() / f64::powi(2.0, 12);
            assert!((p.to_f64() - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn closed_form_single_particle_splits_evenly() {
        let dist = semiclassical_closed_form(1, 0.7).unwrap();
        let half = BigRational::from_f64(0.5).unwrap();
        for (_, p) in &dist.entries {
            assert_eq!(p.as_exact().unwrap().as_ratio(), &half);
        }
    }

    #[test]
    fn contrast_outside_unit_interval_is_rejected() {
        let spec = QuadratureSpec::new(16).unwrap();
        assert!(semiclassical_distribution(4, 1.5, spec).is_err());
        assert!(semiclassical_closed_form(4, -0.1).is_err());
    }

    #[test]
    fn coherent_point_mass_at_zero_intensity() {
        let params = CoherentParams::from_intensities(0.0, 0.0, 0.3).unwrap();
        let spec = QuadratureSpec::new(8).unwrap();
        let dist = coherent_distribution(&params, false, spec).unwrap();
        assert_eq!(dist.entries.len(), 1);
        assert_eq!(dist.entries[0].0, Outcome::new(0, 0));
        assert_eq!(dist.entries[0].1.to_f64(), 1.0);
    }

    #[test]
    fn coherent_single_beam_is_a_poisson_product() {
        let params = CoherentParams::from_intensities(1.0, 0.0, 1.2).unwrap();
        let spec = QuadratureSpec::new(8).unwrap();
        let dist = coherent_distribution(&params, false, spec).unwrap();
        let p00 = dist.prob(Outcome::new(0, 0));
        assert!((p00 - (-1.0f64).exp()).abs() < 1e-15);
        let p11 = dist.prob(Outcome::new(1, 1));
        assert!((p11 - 0.25 * (-1.0f64).exp()).abs() < 1e-15);
        assert!((dist.total_mass() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn truncation_reaches_the_requested_mass() {
        assert_eq!(poisson_truncation(0.0, 5e-13), 0);
        let bound = poisson_truncation(25.0, 5e-13);
        assert!(bound > 25);
        let mass: f64 = (0..=bound).map(|k| poisson_log_pmf(25.0, k).exp()).sum();
        assert!(mass >= 1.0 - 1e-12);
    }

    #[test]
    fn shared_phase_matches_hand_values_for_two_particles() {
        let report = lambda0_closed_form(&BeamConfig::new(1, 1)).unwrap();
        let probs = report.distribution.m1_probs();
        assert!((probs[0].1 - 0.375).abs() < 1e-15);
        assert!((probs[1].1 - 0.25).abs() < 1e-15);
        assert!((probs[2].1 - 0.375).abs() < 1e-15);
        assert!(report.max_abs_deviation < 1e-12);
    }

    #[test]
    fn shared_phase_closed_form_is_exactly_normalized() {
        for (na, nb) in [(1u32, 1u32), (3, 2), (7, 7), (6, 1)] {
            let report = lambda0_closed_form(&BeamConfig::new(na, nb)).unwrap();
            let total = report
                .distribution
                .entries
                .iter()
                .fold(BigRational::zero(), |acc, (_, p)| {
                    acc + p.as_exact().unwrap().as_ratio()
                });
            assert!(total.is_one(), "({na}, {nb}) sums to {total}");
        }
    }

    #[test]
    fn pair_model_balanced_two_pairs() {
        let dist = pair_model_distribution(&BeamConfig::new(2, 2)).unwrap();
        let expect = [(0u32, 0.25), (1, 0.0), (2, 0.5), (3, 0.0), (4, 0.25)];
        for ((out, p), (m1, want)) in dist.entries.iter().zip(expect) {
            assert_eq!(out.m1, m1);
            assert_eq!(p.to_f64(), want);
        }
    }

    #[test]
    fn pair_model_lone_particle_splits_evenly() {
        let dist = pair_model_distribution(&BeamConfig::new(1, 0)).unwrap();
        assert_eq!(dist.entries.len(), 2);
        assert_eq!(dist.entries[0].1.to_f64(), 0.5);
        assert_eq!(dist.entries[1].1.to_f64(), 0.5);
    }

    #[test]
    fn pair_model_is_input_order_symmetric() {
        let ab = pair_model_distribution(&BeamConfig::new(5, 2)).unwrap();
        let ba = pair_model_distribution(&BeamConfig::new(2, 5)).unwrap();
        assert_eq!(ab.m1_probs(), ba.m1_probs());
    }
}
