//! Randomized invariants: parity selection rules, exchange symmetries,
//! exact normalization, value formatting round trips, and the structural
//! guarantees of the approximation and baseline machinery.

use std::str::FromStr;

use fockbeam_core::approx::{envelope_curves, phi0};
use fockbeam_core::baselines::pair_model_distribution;
use fockbeam_core::numerics::{periodic_mean, ExactProb, QuadratureSpec};
use fockbeam_core::quantum::{
    exact_distribution, exact_probability, quadrature_probability, BeamConfig, Outcome,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

proptest! {
    #[test]
    fn balanced_inputs_never_produce_odd_counts(n in 1u32..=18, seed in 0u32..1000) {
        let cfg = BeamConfig::new(n, n);
        let odd_values: Vec<u32> = (0..=2 * n).filter(|m| m % 2 == 1).collect();
        let m1 = odd_values[seed as usize % odd_values.len()];
        let out = Outcome::new(m1, 2 * n - m1);
        prop_assert!(exact_probability(&cfg, out).is_zero());
        if n <= 8 {
            let spec = QuadratureSpec::default_for_total(2 * n);
            let quad = quadrature_probability(&cfg, out, spec).unwrap();
            prop_assert!(quad.abs() < 1e-13);
        }
    }

    #[test]
    fn swapping_sources_and_detectors_together_changes_nothing(
        n_alpha in 0u32..=14,
        n_beta in 0u32..=14,
        pick in 0u32..=28,
    ) {
        let total = n_alpha + n_beta;
        let m1 = pick % (total + 1);
        let direct = exact_probability(
            &BeamConfig::new(n_alpha, n_beta),
            Outcome::new(m1, total - m1),
        );
        let swapped = exact_probability(
            &BeamConfig::new(n_beta, n_alpha),
            Outcome::new(total - m1, m1),
        );
        prop_assert_eq!(direct.as_ratio(), swapped.as_ratio());
    }

    #[test]
    fn a_balanced_splitter_cannot_tell_its_outputs_apart(
        n_alpha in 0u32..=14,
        n_beta in 0u32..=14,
        pick in 0u32..=28,
    ) {
        let total = n_alpha + n_beta;
        let m1 = pick % (total + 1);
        let cfg = BeamConfig::new(n_alpha, n_beta);
        let one_way = exact_probability(&cfg, Outcome::new(m1, total - m1));
        let other_way = exact_probability(&cfg, Outcome::new(total - m1, m1));
        prop_assert_eq!(one_way.as_ratio(), other_way.as_ratio());
    }

    #[test]
    fn unconserved_outcomes_carry_no_probability(
        n_alpha in 0u32..=10,
        n_beta in 0u32..=10,
        m1 in 0u32..=12,
        m2 in 0u32..=12,
    ) {
        prop_assume!(m1 + m2 != n_alpha + n_beta);
        let p = exact_probability(&BeamConfig::new(n_alpha, n_beta), Outcome::new(m1, m2));
        prop_assert!(p.is_zero());
    }

    #[test]
    fn exact_distributions_sum_to_exactly_one(n_alpha in 0u32..=30, n_beta in 0u32..=30) {
        let dist = exact_distribution(&BeamConfig::new(n_alpha, n_beta));
        let total = dist.entries.iter().fold(BigRational::zero(), |acc, (_, p)| {
            acc + p.as_exact().unwrap().as_ratio()
        });
        prop_assert!(total.is_one());
    }

    #[test]
    fn probability_strings_round_trip(numer in 0u64..=1_000_000, denom in 1u64..=1_000_000) {
        prop_assume!(numer <= denom);
        let original = ExactProb::new(BigInt::from(numer), BigInt::from(denom)).unwrap();
        let reparsed = ExactProb::from_str(&original.to_string()).unwrap();
        prop_assert_eq!(original, reparsed);
    }

    #[test]
    fn peak_angle_decreases_with_the_first_count(total in 1u32..=400, pick in 0u32..=398) {
        let m1 = pick % total;
        let steeper = phi0(m1, total).unwrap();
        let shallower = phi0(m1 + 1, total).unwrap();
        prop_assert!(shallower < steeper);
    }

    #[test]
    fn envelope_branches_always_partition_unity(
        n_alpha in 0u32..=40,
        n_beta in 0u32..=40,
        pick in 0u32..=80,
    ) {
        let cfg = BeamConfig::new(n_alpha, n_beta);
        prop_assume!(cfg.total() > 0);
        let m1 = f64::from(pick % (cfg.total() + 1));
        let curves = envelope_curves(&cfg);
        let sum = curves.cos_branch(m1) + curves.sin_branch(m1);
        prop_assert!((sum - 1.0).abs() < 1e-9);
    }

    #[test]
    fn the_phase_mean_annihilates_every_resolvable_harmonic(
        harmonic in 1u32..=20,
        extra in 0usize..=10,
        phase in 0.0f64..6.2,
    ) {
        let spec = QuadratureSpec::new(harmonic as usize + 1 + extra).unwrap();
        let mean = periodic_mean(spec, |lambda| (f64::from(harmonic) * lambda + phase).cos());
        prop_assert!(mean.abs() < 1e-14);
    }

    #[test]
    fn pair_distributions_are_exactly_normalized(n_alpha in 0u32..=20, n_beta in 0u32..=20) {
        let dist = pair_model_distribution(&BeamConfig::new(n_alpha, n_beta)).unwrap();
        let total = dist.entries.iter().fold(BigRational::zero(), |acc, (_, p)| {
            acc + p.as_exact().unwrap().as_ratio()
        });
        prop_assert!(total.is_one());
        if n_alpha == n_beta {
            for (out, p) in &dist.entries {
                if out.m1 % 2 == 1 {
                    prop_assert!(p.as_exact().unwrap().is_zero());
                }
            }
        }
    }
}
