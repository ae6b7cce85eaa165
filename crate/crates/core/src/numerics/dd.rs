//! Double-double arithmetic: unevaluated sums of two doubles giving roughly
//! 32 significant digits.
//!
//! The quadrature routes sum terms as large as 2^N that cancel down to a
//! result near machine epsilon times the largest term, so plain doubles lose
//! most of their digits exactly where the distributions are interesting.
//! Carrying the sums in double-double keeps ~16 digits after that
//! cancellation. Only the handful of operations those kernels need are
//! implemented; this is not a general extended-precision library.
//!
//! Node angles are never formed as floats first: [`circle_cos_sin`] takes the
//! angle as an exact integer fraction of the circle and reduces it by integer
//! symmetry, so axis values (0, +-1) come out exact and every table entry has
//! full double-double accuracy.

/// Error-free sum: s + err == a + b exactly (Knuth).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Error-free sum assuming |a| >= |b| or a == 0 (Dekker).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// Splits a double into high and low halves of at most 26 bits each, so the
/// halves multiply exactly (Dekker, splitter 2^27 + 1). Safe for the
/// magnitudes this crate produces, far below the ~1e292 overflow threshold.
#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0;
    let t = SPLITTER * a;
    let hi = t - (t - a);
    let lo = a - hi;
    (hi, lo)
}

/// Error-free product: p + err == a * b exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ahi, alo) = split(a);
    let (bhi, blo) = split(b);
    let err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
    (p, err)
}

/// A double-double value `hi + lo` with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// 2 pi to double-double accuracy.
    pub const TAU: Dd = Dd {
        hi: 6.283185307179586,
        lo: 2.449_293_598_294_706_4e-16,
    };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Nearest double.
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let e = e + self.lo + o.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Divide by a double: one correction step on the quotient of the high
    /// parts, accurate to the last double-double digit.
    pub fn div_f64(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let r = (((self.hi - p) - e) + self.lo) / b;
        let (hi, lo) = quick_two_sum(q1, r);
        Dd { hi, lo }
    }

    /// Integer power by binary exponentiation.
    pub fn powi(self, mut n: u32) -> Dd {
        let mut base = self;
        let mut acc = Dd::ONE;
        loop {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            n >>= 1;
            if n == 0 {
                return acc;
            }
            base = base.mul(base);
        }
    }
}

/// cos and sin of the Taylor series at |x| <= pi/4; `neg_x2` is -x^2.
fn taylor_cos(neg_x2: Dd) -> Dd {
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut k = 0u32;
    loop {
        k += 1;
        term = term.mul(neg_x2).div_f64(((2 * k - 1) * (2 * k)) as f64);
        sum = sum.add(term);
        if term.hi.abs() < 1e-35 {
            return sum;
        }
    }
}

fn taylor_sin(x: Dd, neg_x2: Dd) -> Dd {
    let mut term = x;
    let mut sum = x;
    let mut k = 0u32;
    loop {
        k += 1;
        term = term.mul(neg_x2).div_f64(((2 * k) * (2 * k + 1)) as f64);
        sum = sum.add(term);
        if term.hi.abs() < 1e-35 {
            return sum;
        }
    }
}

/// cos and sin of 2 pi * index / denom to double-double accuracy.
///
/// The reduction to the first octant is pure integer arithmetic on the
/// fraction, so no precision is lost before the final small-angle Taylor
/// evaluation, and multiples of a quarter turn produce exact 0 and +-1.
pub fn circle_cos_sin(index: i64, denom: i64) -> (Dd, Dd) {
    assert!(denom > 0, "circle fraction needs a positive denominator");
    let mut j = index.rem_euclid(denom);
    let mut d = denom;
    let mut sin_sign = 1.0f64;
    let mut cos_sign = 1.0f64;
    let mut swapped = false;

    // Lower half-circle: reflect through the real axis.
    if 2 * j > d {
        j = d - j;
        sin_sign = -1.0;
    }
    // Left quadrant: reflect through the imaginary axis.
    if 4 * j > d {
        j = d - 2 * j;
        d *= 2;
        cos_sign = -1.0;
    }
    // Upper octant: swap to the co-function.
    if 8 * j > d {
        j = d - 4 * j;
        d *= 4;
        swapped = true;
    }

    debug_assert!(8 * j <= d);
    let x = Dd::TAU.mul_f64(j as f64).div_f64(d as f64);
    let neg_x2 = x.mul(x).neg();
    let c = taylor_cos(neg_x2);
    let s = taylor_sin(x, neg_x2);
    let (c, s) = if swapped { (s, c) } else { (c, s) };
    (c.mul_f64(cos_sign), s.mul_f64(sin_sign))
}
