//! Shared numeric plumbing: exact rational probabilities, factorials and
//! log-factorials, and the periodic (equally spaced) quadrature rule used by
//! every phase-average in the crate.

pub mod dd;

use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
// Float must stay imported even when a std-enabled build graph makes
// f64's inherent methods shadow it: the no_std library target has only
// the trait.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// An exact probability: an arbitrary-precision rational confined to [0, 1],
/// always stored in lowest terms with a positive denominator.
///
/// The string form is always `numerator/denominator`, including `0/1` and
/// `1/1`, and [`FromStr`] accepts exactly that shape back, so values
/// round-trip bit-exactly through text.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactProb(BigRational);

impl ExactProb {
    /// Builds a probability from an integer numerator and denominator.
    ///
    /// Fails when the denominator is zero or the reduced value leaves [0, 1].
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidProbability("zero denominator".into()));
        }
        Self::from_ratio(BigRational::new(numerator, denominator))
    }

    /// Wraps an already-formed rational, enforcing the [0, 1] range.
    pub fn from_ratio(r: BigRational) -> Result<Self> {
        if r.is_negative() || r > BigRational::one() {
            return Err(Error::InvalidProbability(r.to_string()));
        }
        Ok(ExactProb(r))
    }

    /// The impossible event.
    pub fn zero() -> Self {
        ExactProb(BigRational::zero())
    }

    /// The certain event.
    pub fn one() -> Self {
        ExactProb(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// The underlying reduced rational.
    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// Nearest double. Exact values are only rounded here, at the boundary to
    /// floating-point consumers; all arithmetic stays rational.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(0.0)
    }
}

impl fmt::Display for ExactProb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for ExactProb {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidProbability(s.into()))?;
        let num = BigInt::from_str(num).map_err(|_| Error::InvalidProbability(s.into()))?;
        let den = BigInt::from_str(den).map_err(|_| Error::InvalidProbability(s.into()))?;
        ExactProb::new(num, den)
    }
}

impl Add for ExactProb {
    type Output = ExactProb;

    /// Sum of two probabilities. Panics if the result exceeds 1; partial sums
    /// of a normalized distribution never do.
    fn add(self, rhs: ExactProb) -> ExactProb {
        ExactProb::from_ratio(self.0 + rhs.0).expect("probability sum exceeds 1")
    }
}

impl AddAssign for ExactProb {
    fn add_assign(&mut self, rhs: ExactProb) {
        *self = core::mem::replace(self, ExactProb::zero()) + rhs;
    }
}

impl Mul for ExactProb {
    type Output = ExactProb;

    fn mul(self, rhs: ExactProb) -> ExactProb {
        // [0,1] is closed under multiplication, so this cannot fail.
        ExactProb(self.0 * rhs.0)
    }
}

/// n! as an exact big integer.
pub fn factorial_exact(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=u64::from(n) {
        acc *= k;
    }
    acc
}

/// ln(n!) in double precision.
///
/// Computed as a compensated (Neumaier) sum of ln k, so the result carries
/// only rounding-level error (a few ulp) through at least n = 10^4. Small
/// arguments go through the exact integer factorial instead.
pub fn log_factorial(n: u32) -> f64 {
    const EXACT_LIMIT: u32 = 20; // 20! is the largest factorial a u64 holds
    if n <= EXACT_LIMIT {
        let mut f: u64 = 1;
        for k in 2..=u64::from(n) {
            f *= k;
        }
        return (f as f64).ln();
    }
    let mut sum = log_factorial(EXACT_LIMIT);
    let mut comp = 0.0;
    for k in (EXACT_LIMIT + 1)..=n {
        let term = f64::from(k).ln();
        let t = sum + term;
        comp += if sum.abs() >= term.abs() {
            (sum - t) + term
        } else {
            (term - t) + sum
        };
        sum = t;
    }
    sum + comp
}

/// An equally spaced quadrature rule for averages of 2 pi periodic functions.
///
/// With M nodes the rule integrates every trigonometric polynomial of degree
/// at most M - 1 exactly (frequencies below M never alias onto the constant),
/// which beats the M >= 2d + 2 sufficiency bound the callers rely on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureSpec {
    nodes: usize,
}

impl QuadratureSpec {
    /// A rule with `nodes` equally spaced points; at least one is required.
    pub fn new(nodes: usize) -> Result<Self> {
        if nodes == 0 {
            return Err(Error::EmptyQuadrature);
        }
        Ok(QuadratureSpec { nodes })
    }

    /// Default rule for a system of `total` photons: 4 * total + 8 nodes,
    /// comfortably above the exactness threshold of every integrand in this
    /// crate (their trigonometric degree never exceeds 2 * total).
    pub fn default_for_total(total: u32) -> Self {
        QuadratureSpec {
            nodes: 4 * total as usize + 8,
        }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    /// Largest trigonometric-polynomial degree integrated without error.
    pub fn exactness_degree(&self) -> usize {
        self.nodes - 1
    }
}

/// Mean of `f` over one period, (1/2pi) * integral of f d(lambda).
///
/// Uses `spec.nodes()` equally spaced samples starting at -pi and a
/// compensated sum, so trigonometric polynomials below the exactness degree
/// come out accurate to rounding level.
pub fn periodic_mean<F: FnMut(f64) -> f64>(spec: QuadratureSpec, mut f: F) -> f64 {
    let m = spec.nodes();
    let step = core::f64::consts::TAU / m as f64;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for k in 0..m {
        let x = -core::f64::consts::PI + step * k as f64;
        let term = f(x);
        let t = sum + term;
        comp += if sum.abs() >= term.abs() {
            (sum - t) + term
        } else {
            (term - t) + sum
        };
        sum = t;
    }
    (sum + comp) / m as f64
}

/// Exact binomial coefficient C(n, k), zero outside 0 <= k <= n.
pub(crate) fn binomial_exact(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}
