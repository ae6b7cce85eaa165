//! Cross-route and cross-model checks for the reference models: the two
//! semiclassical routes against each other, the classical density against
//! its normalization, coherent statistics against Poisson facts and the
//! semiclassical limit, the shared-phase model against its closed form, and
//! frozen distances between the pair model and the exact distribution.

use fockbeam_core::baselines::{
    classical_pdf, coherent_distribution, lambda0_closed_form, lambda0_distribution,
    pair_model_distribution, semiclassical_closed_form, semiclassical_distribution,
    ClassicalWaveParams, CoherentParams,
};
use fockbeam_core::experiment::compare;
use fockbeam_core::numerics::QuadratureSpec;
use fockbeam_core::quantum::{exact_distribution, BeamConfig};

fn contrast_for(i_alpha: f64, i_beta: f64) -> f64 {
    2.0 * (i_alpha * i_beta).sqrt() / (i_alpha + i_beta)
}

#[test]
fn semiclassical_quadrature_matches_the_closed_form() {
    for n in [1u32, 7, 50] {
        let spec = QuadratureSpec::default_for_total(n);
        for r in [0.0, 0.2, contrast_for(44.0, 6.0), 1.0] {
            let by_quadrature = semiclassical_distribution(n, r, spec).unwrap();
            let by_sum = semiclassical_closed_form(n, r).unwrap();
            for ((out, p), (_, q)) in
                by_quadrature.entries.iter().zip(&by_sum.entries)
            {
                let (p, q) = (p.to_f64(), q.to_f64());
                assert!(
                    (p - q).abs() <= 1e-10,
                    "n = {n}, r = {r}, m1 = {}: {p} vs {q}",
                    out.m1
                );
            }
        }
    }
}

#[test]
fn classical_density_normalizes_over_its_support() {
    // Midpoint rule in an angle variable that maps onto the support without
    // touching the endpoints; the substitution supplies the exact measure,
    // the density values come from the function under test.
    for (i_alpha, i_beta) in [(44.0, 6.0), (25.0, 25.0), (10.0, 0.5)] {
        let params = ClassicalWaveParams::new(i_alpha, i_beta).unwrap();
        let (a, b) = params.support();
        let center = 0.5 * (a + b);
        let half_width = 0.5 * (b - a);
        let cells = 4096;
        let step = core::f64::consts::PI / cells as f64;
        let mut mass = 0.0;
        for k in 0..cells {
            let angle = -core::f64::consts::FRAC_PI_2 + (k as f64 + 0.5) * step;
            let intensity = center + half_width * angle.sin();
            let density = classical_pdf(&params, intensity).unwrap();
            mass += density * half_width * angle.cos() * step;
        }
        assert!(
            (mass - 1.0).abs() < 1e-6,
            "({i_alpha}, {i_beta}): mass = {mass}"
        );
    }
}

#[test]
fn classical_density_is_symmetric_for_equal_inputs() {
    let params = ClassicalWaveParams::new(25.0, 25.0).unwrap();
    let center = 25.0;
    for offset in [1.0, 7.5, 20.0] {
        let above = classical_pdf(&params, center + offset).unwrap();
        let below = classical_pdf(&params, center - offset).unwrap();
        assert!((above - below).abs() < 1e-12 * above);
    }
}

#[test]
fn coherent_marginals_have_poisson_moments() {
    let params = CoherentParams::from_intensities(9.0, 4.0, 0.6).unwrap();
    let (mu1, mu2) = params.output_means();
    let spec = QuadratureSpec::new(64).unwrap();
    let dist = coherent_distribution(&params, false, spec).unwrap();
    let (mut mean1, mut mean2, mut var1) = (0.0, 0.0, 0.0);
    for (out, p) in &dist.entries {
        let p = p.to_f64();
        mean1 += f64::from(out.m1) * p;
        mean2 += f64::from(out.m2) * p;
        var1 += f64::from(out.m1) * f64::from(out.m1) * p;
    }
    var1 -= mean1 * mean1;
    assert!((dist.total_mass() - 1.0).abs() < 1e-12);
    assert!((mean1 - mu1).abs() < 1e-9);
    assert!((mean2 - mu2).abs() < 1e-9);
    // Poisson variance equals the mean.
    assert!((var1 - mu1).abs() < 1e-8);
}

#[test]
fn conditioned_coherent_counts_reproduce_the_semiclassical_law() {
    // Fixing the total count inside the phase-averaged coherent model leaves
    // a binomial in (1 + r sin l) / 2 averaged over the phase, which is the
    // semiclassical distribution at the matching contrast.
    for (i_alpha, i_beta, n) in [(12.5, 12.5, 25u32), (8.0, 2.0, 10)] {
        let params = CoherentParams::from_intensities(i_alpha, i_beta, 0.0).unwrap();
        let spec = QuadratureSpec::new(8).unwrap();
        let coherent = coherent_distribution(&params, true, spec).unwrap();
        let mut slice = vec![0.0f64; n as usize + 1];
        let mut slice_mass = 0.0;
        for (out, p) in &coherent.entries {
            if out.total() == n {
                slice[out.m1 as usize] = p.to_f64();
                slice_mass += p.to_f64();
            }
        }
        let reference =
            semiclassical_distribution(n, contrast_for(i_alpha, i_beta), QuadratureSpec::default_for_total(n))
                .unwrap();
        for (out, p) in &reference.entries {
            let conditioned = slice[out.m1 as usize] / slice_mass;
            assert!(
                (conditioned - p.to_f64()).abs() < 1e-12,
                "({i_alpha}, {i_beta}), m1 = {}: {conditioned} vs {}",
                out.m1,
                p.to_f64()
            );
        }
    }
}

#[test]
fn shared_phase_model_is_semiclassical_at_full_contrast() {
    let cfg = BeamConfig::new(25, 25);
    let spec = QuadratureSpec::default_for_total(50);
    let shared = lambda0_distribution(&cfg, spec).unwrap();
    let reference = semiclassical_distribution(50, 1.0, spec).unwrap();
    let report = compare(&reference, &shared).unwrap();
    assert!(report.tvd <= 1e-10, "tvd = {:.3e}", report.tvd);
}

#[test]
fn shared_phase_closed_form_tracks_the_quadrature_route() {
    for (n_alpha, n_beta) in [(1u32, 1u32), (25, 25), (26, 24), (6, 1)] {
        let report = lambda0_closed_form(&BeamConfig::new(n_alpha, n_beta)).unwrap();
        assert!(
            report.max_abs_deviation < 1e-12,
            "({n_alpha}, {n_beta}): {:.3e}",
            report.max_abs_deviation
        );
    }
}

#[test]
fn pair_model_keeps_its_frozen_distance_from_the_exact_law() {
    for (n_alpha, n_beta, expected) in [
        (25u32, 25u32, 0.700_313_073_617_309_1),
        (26, 25, 0.703_988_438_492_952_89),
    ] {
        let cfg = BeamConfig::new(n_alpha, n_beta);
        let exact = exact_distribution(&cfg);
        let pair = pair_model_distribution(&cfg).unwrap();
        let report = compare(&exact, &pair).unwrap();
        assert!(
            (report.tvd - expected).abs() < 1e-12,
            "({n_alpha}, {n_beta}): tvd = {:.17}",
            report.tvd
        );
    }
}

#[test]
fn pair_model_peaks_inside_while_the_exact_law_peaks_outside() {
    let cfg = BeamConfig::new(25, 25);
    let argmax = |probs: Vec<(u32, f64)>| -> Vec<u32> {
        let peak = probs.iter().map(|&(_, p)| p).fold(0.0f64, f64::max);
        probs
            .iter()
            .filter(|&&(_, p)| p >= peak * (1.0 - 1e-12))
            .map(|&(m1, _)| m1)
            .collect()
    };
    let pair_peaks = argmax(pair_model_distribution(&cfg).unwrap().m1_probs());
    assert_eq!(pair_peaks, vec![24, 26]);
    let exact_peaks = argmax(exact_distribution(&cfg).m1_probs());
    assert_eq!(exact_peaks, vec![0, 50]);
}
