//! Simulated counting runs and distribution diagnostics: draw shot records
//! from a model with a seeded generator, and measure how far two models
//! disagree over the same outcome space.

use alloc::format;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};

use crate::quantum::Distribution;
use crate::{Error, Result};

/// Tallied outcome of a simulated counting run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleResult {
    /// Nonzero tallies keyed by m1, ascending; m1 values that were never
    /// drawn do not appear.
    pub counts: Vec<(u32, u64)>,
    pub shots: u64,
    pub seed: u64,
    /// Name of the generator, recorded so runs stay reproducible across
    /// versions.
    pub rng_algorithm: &'static str,
}

const RNG_ALGORITHM: &str = "chacha12";

/// Draws uniform doubles in [0, 1) from the top 53 bits of each word.
fn unit_double(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Draws `shots` outcomes from the m1 marginal of a normalized distribution
/// by inversion sampling and tallies them. The comparison is strict, so an
/// entry with zero probability can never be selected; a uniform draw landing
/// beyond the last cumulative value (possible through rounding) falls back to
/// the last positive entry.
pub fn sample(dist: &Distribution, shots: u64, seed: u64) -> Result<SampleResult> {
    if !dist.normalized {
        return Err(Error::Unnormalized);
    }
    let marginal = dist.m1_probs();
    let mut cumulative = Vec::with_capacity(marginal.len());
    let mut running = 0.0;
    let mut last_positive = None;
    for (idx, &(_, p)) in marginal.iter().enumerate() {
        running += p;
        cumulative.push(running);
        if p > 0.0 {
            last_positive = Some(idx);
        }
    }
    let last_positive = last_positive.ok_or(Error::Unnormalized)?;

    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
    let mut tallies = alloc::vec![0u64; marginal.len()];
    for _ in 0..shots {
        let u = unit_double(&mut rng);
        let idx = cumulative
            .iter()
            .position(|&edge| u < edge)
            .unwrap_or(last_positive);
        tallies[idx] += 1;
    }

    let counts = marginal
        .iter()
        .zip(tallies)
        .filter(|(_, tally)| *tally > 0)
        .map(|(&(m1, _), tally)| (m1, tally))
        .collect();
    Ok(SampleResult {
        counts,
        shots,
        seed,
        rng_algorithm: RNG_ALGORITHM,
    })
}

/// Summary of the pointwise disagreement between two distributions over
/// their merged m1 support.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonReport {
    /// Total variation distance, half the summed absolute differences.
    pub tvd: f64,
    /// Largest absolute pointwise difference.
    pub max_abs: f64,
    /// Largest relative difference, measured against the first distribution
    /// with small reference values clamped up to `rel_floor`.
    pub max_rel: f64,
    pub rel_floor: f64,
}

/// [`compare_with_floor`] with the reference floor at 1e-9.
pub fn compare(reference: &Distribution, other: &Distribution) -> Result<ComparisonReport> {
    compare_with_floor(reference, other, 1e-9)
}

/// Measures total variation, largest absolute and largest relative
/// difference between the m1 marginals of two distributions. Both must
/// conserve the same total count so the outcome spaces coincide; relative
/// differences are taken against the first argument, clamping its value up
/// to `rel_floor` so that spurious mass on near-zero entries still
/// registers without dividing by zero.
pub fn compare_with_floor(
    reference: &Distribution,
    other: &Distribution,
    rel_floor: f64,
) -> Result<ComparisonReport> {
    if !(rel_floor.is_finite() && rel_floor > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "relative floor must be positive and finite, got {rel_floor}"
        )));
    }
    let total_a = reference.conserved_total();
    let total_b = other.conserved_total();
    match (total_a, total_b) {
        (Some(a), Some(b)) if a == b => {}
        _ => {
            return Err(Error::IncomparableDistributions(format!(
                "need a common conserved total, got {total_a:?} and {total_b:?}"
            )));
        }
    }

    let probs_a = reference.m1_probs();
    let probs_b = other.m1_probs();
    let mut ia = 0;
    let mut ib = 0;
    let mut sum_abs = 0.0f64;
    let mut max_abs = 0.0f64;
    let mut max_rel = 0.0f64;
    while ia < probs_a.len() || ib < probs_b.len() {
        let next_a = probs_a.get(ia);
        let next_b = probs_b.get(ib);
        let (pa, pb) = match (next_a, next_b) {
            (Some(&(ma, pa)), Some(&(mb, pb))) if ma == mb => {
                ia += 1;
                ib += 1;
                (pa, pb)
            }
            (Some(&(ma, pa)), Some(&(mb, _))) if ma < mb => {
                ia += 1;
                (pa, 0.0)
            }
            (Some(_), Some(&(_, pb))) => {
                ib += 1;
                (0.0, pb)
            }
            (Some(&(_, pa)), None) => {
                ia += 1;
                (pa, 0.0)
            }
            (None, Some(&(_, pb))) => {
                ib += 1;
                (0.0, pb)
            }
            (None, None) => break,
        };
        let diff = (pa - pb).abs();
        sum_abs += diff;
        max_abs = max_abs.max(diff);
        max_rel = max_rel.max(diff / pa.max(rel_floor));
    }
    Ok(ComparisonReport {
        tvd: 0.5 * sum_abs,
        max_abs,
        max_rel,
        rel_floor,
    })
}
