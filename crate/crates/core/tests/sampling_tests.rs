//! Statistical behavior of the shot sampler: forbidden outcomes never fire,
//! empirical frequencies approach the model, and the spread over seeds stays
//! within binomial expectations.

use fockbeam_core::experiment::{compare, sample, SampleResult};
use fockbeam_core::quantum::{exact_distribution, BeamConfig, Distribution, ModelTag, Outcome, ProbValue};

fn empirical_tvd(dist: &Distribution, result: &SampleResult) -> f64 {
    let shots = result.shots as f64;
    let mut gap = 0.0;
    for (m1, p) in dist.m1_probs() {
        let count = result
            .counts
            .iter()
            .find(|&&(m, _)| m == m1)
            .map_or(0, |&(_, c)| c);
        gap += (count as f64 / shots - p).abs();
    }
    0.5 * gap
}

#[test]
fn forbidden_outcomes_never_fire_and_frequencies_settle() {
    let dist = exact_distribution(&BeamConfig::new(2, 2));
    let result = sample(&dist, 100_000, 20_260_819).unwrap();
    assert!(result.counts.iter().all(|&(m1, _)| m1 % 2 == 0));
    let frequency = |m1: u32| {
        result
            .counts
            .iter()
            .find(|&&(m, _)| m == m1)
            .map_or(0.0, |&(_, c)| c as f64 / 100_000.0)
    };
    assert!((frequency(0) - 0.375).abs() < 0.01);
    assert!((frequency(2) - 0.25).abs() < 0.01);
    assert!((frequency(4) - 0.375).abs() < 0.01);
}

#[test]
fn one_million_shots_land_close_to_the_model() {
    let dist = exact_distribution(&BeamConfig::new(4, 4));
    let result = sample(&dist, 1_000_000, 7).unwrap();
    // Five sigma on the per-entry binomial fluctuation scale.
    let bound = 5.0 * (5.0 / 1_000_000.0f64).sqrt();
    let tvd = empirical_tvd(&dist, &result);
    assert!(tvd < bound, "tvd = {tvd:.3e} > {bound:.3e}");
}

#[test]
fn nearly_every_seed_converges() {
    let dist = exact_distribution(&BeamConfig::new(4, 4));
    let bound = 5.0 * (5.0 / 100_000.0f64).sqrt();
    let converged = (0..20)
        .filter(|&seed| {
            let result = sample(&dist, 100_000, seed).unwrap();
            empirical_tvd(&dist, &result) < bound
        })
        .count();
    assert!(converged >= 19, "only {converged}/20 seeds within bound");
}

#[test]
fn sampling_is_reproducible_and_sensitive_to_the_seed() {
    let dist = exact_distribution(&BeamConfig::new(3, 3));
    let first = sample(&dist, 40_000, 11).unwrap();
    let again = sample(&dist, 40_000, 11).unwrap();
    assert_eq!(first, again);
    let other = sample(&dist, 40_000, 12).unwrap();
    assert_ne!(first.counts, other.counts);
}

#[test]
fn counts_stay_sorted_and_merged() {
    let dist = Distribution {
        model: ModelTag::Exact,
        entries: vec![
            (Outcome::new(2, 0), ProbValue::Float(0.25)),
            (Outcome::new(0, 2), ProbValue::Float(0.5)),
            (Outcome::new(2, 1), ProbValue::Float(0.25)),
        ],
        normalized: true,
    };
    let result = sample(&dist, 10_000, 3).unwrap();
    assert_eq!(result.counts.len(), 2);
    assert!(result.counts[0].0 < result.counts[1].0);
    let total: u64 = result.counts.iter().map(|&(_, c)| c).sum();
    assert_eq!(total, 10_000);
}

#[test]
fn comparing_a_sample_against_its_source_needs_matching_support() {
    let a = exact_distribution(&BeamConfig::new(2, 2));
    let b = exact_distribution(&BeamConfig::new(3, 3));
    assert!(compare(&a, &b).is_err());
}
