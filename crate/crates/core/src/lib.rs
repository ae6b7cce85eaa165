//! Counting statistics of a lossless balanced beam splitter fed with photon
//! number (Fock) states.
//!
//! A 50/50 splitter mixes two input modes holding `n_alpha` and `n_beta`
//! photons and the two detectors behind it register `m1` and `m2` counts with
//! `m1 + m2 = n_alpha + n_beta`. This crate computes that joint distribution
//! several independent ways and provides the reference models it is usually
//! compared against:
//!
//! * [`quantum::exact_probability`]: exact arbitrary-precision rationals from
//!   the alternating combinatorial sum (squared after summation, so the
//!   destructive interference zeros are exact).
//! * [`quantum::quadrature_probability`] and [`quantum::amplitude`]: two
//!   further routes to the same numbers, a double phase-angle average and a
//!   single-integral transition amplitude, used as cross-checks.
//! * [`approx`]: saddle-point (Gaussian) and Stirling approximations plus the
//!   oscillation envelope curves of the imbalanced-input pattern.
//! * [`baselines`]: classical intensity statistics of interfering waves, the
//!   semiclassical random-phase binomial model, coherent (Poissonian) inputs,
//!   the suppressed-quantum-angle model, and the paired-photon toy model.
//! * [`experiment`]: seeded inverse-CDF sampling of any distribution and
//!   distance metrics between distributions.
//!
//! The crate is `no_std` (requires `alloc`); all file formats and the command
//! line front end live in the companion `fockbeam` CLI crate.
//!
//! # Example
//!
//! ```
//! use fockbeam_core::quantum::{BeamConfig, Outcome, exact_probability};
//!
//! // Two single photons never split up: the odd outcome (1,1) is forbidden.
//! let cfg = BeamConfig::new(1, 1);
//! assert!(exact_probability(&cfg, Outcome::new(1, 1)).is_zero());
//! assert_eq!(exact_probability(&cfg, Outcome::new(2, 0)).to_string(), "1/2");
//! ```

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod approx;
pub mod baselines;
mod error;
pub mod experiment;
pub mod numerics;
pub mod quantum;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
