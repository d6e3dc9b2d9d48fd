//! Real-root isolation for rational polynomials by Sturm sequences.
//!
//! Roots are first separated by counting sign variations of the Sturm chain
//! at rational points, then each isolating interval is shrunk by plain sign
//! bisection on the polynomial itself. All endpoints are exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::RationalPolynomial;

/// A half-open interval `(lo, hi]` holding exactly one real root, or the
/// degenerate interval `[r, r]` when the root was hit exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// The root as an exact rational, if it is the simplest rational in the
    /// interval. Rational roots with small denominators are always found once
    /// the interval is narrow enough.
    pub fn recognize_rational(&self, poly: &RationalPolynomial) -> Option<BigRational> {
        if self.is_exact() {
            return Some(self.lo.clone());
        }
        let candidate = simplest_rational_between(&self.lo, &self.hi);
        poly.eval(&candidate).is_zero().then_some(candidate)
    }
}

#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<RationalPolynomial>,
}

impl SturmSequence {
    /// Chain `p, p', -rem(p, p'), ...`. Intended for square-free `p`.
    pub fn new(p: &RationalPolynomial) -> Self {
        let mut chain = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            let (_, r) = chain.last().unwrap().div_rem(&next);
            chain.push(next);
            next = -&r;
        }
        SturmSequence { chain }
    }

    pub fn sign_variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut previous: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let positive = v.is_positive();
            if previous.is_some_and(|prev| prev != positive) {
                count += 1;
            }
            previous = Some(positive);
        }
        count
    }

    /// Number of distinct roots in `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_variations(a)
            .saturating_sub(self.sign_variations(b))
    }
}

/// Upper bound on the absolute value of every complex root (Cauchy).
pub fn cauchy_bound(p: &RationalPolynomial) -> BigRational {
    let Some(lead) = p.leading() else {
        return BigRational::one();
    };
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| (c / lead).abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    BigRational::one() + max
}

/// Isolates every real root of the square-free polynomial `p` inside
/// `(lo, hi]` and refines each interval to width at most `width`.
/// Intervals are returned in increasing order.
pub fn isolate_roots_in(
    p: &RationalPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> Vec<RootInterval> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sturm = SturmSequence::new(p);
    let two = BigInt::from(2);
    let mut pending = vec![(lo.clone(), hi.clone(), sturm.count_roots(lo, hi))];
    let mut isolated = Vec::new();
    while let Some((a, b, count)) = pending.pop() {
        match count {
            0 => {}
            1 => isolated.push(refine(p, a, b, width)),
            _ => {
                let mid = (&a + &b) / &two;
                let left = sturm.count_roots(&a, &mid);
                pending.push((mid.clone(), b, count - left));
                pending.push((a, mid, left));
            }
        }
    }
    isolated.sort_by(|x, y| x.lo.cmp(&y.lo));
    isolated
}

/// All real roots of a square-free polynomial.
pub fn isolate_real_roots(p: &RationalPolynomial, width: &BigRational) -> Vec<RootInterval> {
    let bound = cauchy_bound(p);
    isolate_roots_in(p, &-&bound, &bound, width)
}

/// Real roots of an arbitrary non-zero polynomial, with multiplicity, via
/// square-free decomposition. Returned in increasing order of root.
pub fn real_roots_with_multiplicity(
    p: &RationalPolynomial,
    width: &BigRational,
) -> Vec<(RootInterval, usize, RationalPolynomial)> {
    let mut out = Vec::new();
    for (factor, multiplicity) in p.square_free_decomposition() {
        for interval in isolate_real_roots(&factor, width) {
            out.push((interval, multiplicity, factor.clone()));
        }
    }
    out.sort_by(|x, y| x.0.lo.cmp(&y.0.lo));
    out
}

// Exactly one simple root r in (a, b], so p has the sign opposite to p(b)
// everywhere on (a, r); that sign drives the bisection even when p(a) = 0.
fn refine(
    p: &RationalPolynomial,
    mut a: BigRational,
    mut b: BigRational,
    width: &BigRational,
) -> RootInterval {
    let at_b = p.eval(&b);
    if at_b.is_zero() {
        return RootInterval {
            lo: b.clone(),
            hi: b,
        };
    }
    let b_positive = at_b.is_positive();
    let two = BigInt::from(2);
    while &(&b - &a) > width {
        let mid = (&a + &b) / &two;
        let v = p.eval(&mid);
        if v.is_zero() {
            return RootInterval {
                lo: mid.clone(),
                hi: mid,
            };
        }
        if v.is_positive() == b_positive {
            b = mid;
        } else {
            a = mid;
        }
    }
    RootInterval { lo: a, hi: b }
}

/// The rational with the smallest denominator (then smallest magnitude) in `[lo, hi]`.
pub fn simplest_rational_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo <= hi);
    if hi.is_negative() {
        return -simplest_rational_between(&-hi, &-lo);
    }
    if lo.is_negative() {
        return BigRational::zero();
    }
    let floor = lo.floor();
    if &floor == lo {
        return floor;
    }
    let next = &floor + BigRational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_rational_between(&(hi - &floor).recip(), &(lo - &floor).recip());
    floor + inner.recip()
}
