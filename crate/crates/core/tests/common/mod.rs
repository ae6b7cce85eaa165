//! Reference oracle for the exact splitter distribution, kept deliberately
//! independent of the library: it expands the input creation-operator
//! product into output-mode monomials one factor at a time, by convolution
//! with Gaussian-integer coefficients, and never forms a closed-form sum.
//! Agreement with the library's summation formula is then a real check of
//! the combinatorial identity behind it, not a reimplementation.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Gaussian integer a + b i, just enough arithmetic for the expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn zero() -> Self {
        GaussInt {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn one() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn i() -> Self {
        GaussInt {
            re: BigInt::zero(),
            im: BigInt::one(),
        }
    }

    fn add(&self, other: &Self) -> Self {
        GaussInt {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        GaussInt {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn norm_squared(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Multiplies a polynomial in the two output creation operators by
/// (c1 a1' + c2 a2'). Index k holds the coefficient of the monomial with k
/// powers of a1'; the a2' power is the degree minus k.
fn multiply_step(coeffs: &[GaussInt], c1: &GaussInt, c2: &GaussInt) -> Vec<GaussInt> {
    let mut next = vec![GaussInt::zero(); coeffs.len() + 1];
    for (k, coef) in coeffs.iter().enumerate() {
        next[k + 1] = next[k + 1].add(&coef.mul(c1));
        next[k] = next[k].add(&coef.mul(c2));
    }
    next
}

/// Exact m1 distribution for Fock inputs (n_alpha, n_beta) on a balanced
/// splitter, built from first principles.
///
/// Each input creation operator maps to a balanced combination of the two
/// output ones, one of the pair picking up the factor i; the splitter phase
/// only contributes a global phase, dropped here. After expanding the whole
/// product, the coefficient of the monomial with m1 and m2 powers gives the
/// counting probability through the Fock normalization factors:
///
///   P(m1) = |c(m1)|^2 m1! m2! / (2^N n_alpha! n_beta!)
pub fn oracle_distribution(n_alpha: u32, n_beta: u32) -> Vec<BigRational> {
    let total = n_alpha + n_beta;
    let mut coeffs = vec![GaussInt::one()];
    for _ in 0..n_alpha {
        coeffs = multiply_step(&coeffs, &GaussInt::one(), &GaussInt::i());
    }
    for _ in 0..n_beta {
        coeffs = multiply_step(&coeffs, &GaussInt::i(), &GaussInt::one());
    }

    let input_norm = factorial(n_alpha) * factorial(n_beta) * (BigInt::one() << total);
    coeffs
        .iter()
        .enumerate()
        .map(|(m1, coef)| {
            let m1 = m1 as u32;
            let numer = coef.norm_squared() * factorial(m1) * factorial(total - m1);
            BigRational::new(numer, input_norm.clone())
        })
        .collect()
}
