//! The characteristic polynomial of the normalized Laplacian of a tree,
//! assembled from the matching indices at `α = -1`.
//!
//! Every permutation contributing to `det(xI - 𝓛)` of a tree is a product of
//! disjoint transpositions along edges, that is, a matching. A matching of
//! size `i` contributes `(-1)^i (x-1)^(n-2i) ∏ 1/s(e)`, so
//!
//! ```text
//! φ(x) = Σ_i (-1)^i R^(i) (x - 1)^(n - 2i)
//! ```
//!
//! Substituting `y = (x - 1)^2` exposes the reduced polynomial
//! `ψ(y) = Σ_i (-1)^i R^(i) y^(k - i)`: the spectrum is `1` with multiplicity
//! `n - 2k` together with `1 ± √α` for every root `α` of `ψ`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::graph::Tree;
use crate::poly::RationalPolynomial;
use crate::randic::{randic_indices_tree, MatchingIndexVector};
use crate::roots::{isolate_roots_in, RootInterval};

/// Root isolation stops once an interval is at most `2^-DEFAULT_ISOLATION_BITS` wide.
pub const DEFAULT_ISOLATION_BITS: u32 = 40;

fn require_alpha_minus_one(indices: &MatchingIndexVector) -> Result<()> {
    match indices.alpha().as_integer() {
        Some(-1) => Ok(()),
        _ => Err(invalid(format!(
            "characteristic polynomial needs indices at alpha = -1, got {}",
            indices.alpha()
        ))),
    }
}

fn check_order(indices: &MatchingIndexVector, n: usize) -> Result<()> {
    require_alpha_minus_one(indices)?;
    if n == 0 {
        return Err(invalid("tree must have at least one vertex"));
    }
    if 2 * indices.k() > n {
        return Err(invalid(format!(
            "matching number {} impossible on {n} vertices",
            indices.k()
        )));
    }
    Ok(())
}

fn sign(i: usize) -> BigRational {
    if i.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn binom(a: i64, b: i64) -> BigRational {
    if b < 0 || b > a {
        return BigRational::zero();
    }
    BigRational::from_integer(binomial(BigInt::from(a), BigInt::from(b)))
}

/// One term `coeff · (x - 1)^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedTerm {
    pub power: usize,
    pub coeff: BigRational,
}

/// `φ` written in powers of `(x - 1)`: term `i` is `(-1)^i R^(i) (x-1)^(n-2i)`.
///
/// A single vertex has no edges and a zero diagonal, so `φ = x`, returned as
/// `(x - 1) + 1`.
pub fn charpoly_in_shifted_basis(
    indices: &MatchingIndexVector,
    n: usize,
) -> Result<Vec<ShiftedTerm>> {
    check_order(indices, n)?;
    if n == 1 {
        return Ok(vec![
            ShiftedTerm {
                power: 1,
                coeff: BigRational::one(),
            },
            ShiftedTerm {
                power: 0,
                coeff: BigRational::one(),
            },
        ]);
    }
    Ok(indices
        .values()
        .iter()
        .enumerate()
        .map(|(i, r)| ShiftedTerm {
            power: n - 2 * i,
            coeff: sign(i) * r,
        })
        .collect())
}

/// `φ(x) = a_0 x^n - a_1 x^(n-1) + a_2 x^(n-2) - ... + (-1)^n a_n`.
///
/// The `a_p` carry the alternating sign convention, so `a_0 = 1`, `a_1 = n`
/// and, for `n >= 2`, `a_n = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct CharacteristicPolynomial {
    signed: Vec<BigRational>,
}

impl CharacteristicPolynomial {
    pub fn order(&self) -> usize {
        self.signed.len() - 1
    }

    /// `a_p`; zero for `p > n`.
    pub fn a(&self, p: usize) -> BigRational {
        self.signed
            .get(p)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn signed_coefficients(&self) -> &[BigRational] {
        &self.signed
    }

    /// Plain monomial coefficients: `x^(n-p)` has coefficient `(-1)^p a_p`.
    pub fn to_polynomial(&self) -> RationalPolynomial {
        let n = self.order();
        RationalPolynomial::new(
            (0..=n)
                .map(|power| sign(n - power) * &self.signed[n - power])
                .collect(),
        )
    }
}

impl fmt::Debug for CharacteristicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharacteristicPolynomial({})", self.to_polynomial())
    }
}

/// Expands `φ` into the signed coefficients
/// `a_p = Σ_i (-1)^i C(n - 2i, p - 2i) R^(i)`.
pub fn expand_charpoly(
    indices: &MatchingIndexVector,
    n: usize,
) -> Result<CharacteristicPolynomial> {
    check_order(indices, n)?;
    if n == 1 {
        return Ok(CharacteristicPolynomial {
            signed: vec![BigRational::one(), BigRational::zero()],
        });
    }
    let signed = (0..=n as i64)
        .map(|p| {
            indices
                .values()
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (i, r)| {
                    let i64_i = i as i64;
                    acc + sign(i) * binom(n as i64 - 2 * i64_i, p - 2 * i64_i) * r
                })
        })
        .collect();
    Ok(CharacteristicPolynomial { signed })
}

/// `ψ(y) = y^k - R^(1) y^(k-1) + ... + (-1)^k R^(k)`.
pub fn reduced_polynomial(indices: &MatchingIndexVector) -> Result<RationalPolynomial> {
    require_alpha_minus_one(indices)?;
    let k = indices.k();
    let mut coeffs = vec![BigRational::zero(); k + 1];
    for (i, r) in indices.values().iter().enumerate() {
        coeffs[k - i] = sign(i) * r;
    }
    Ok(RationalPolynomial::new(coeffs))
}

/// `Σ (-1)^i R^(i)`, which is `ψ(1)`. Zero for every tree with an edge,
/// because `x = 0` is always an eigenvalue.
pub fn verify_zero_sum(indices: &MatchingIndexVector) -> BigRational {
    indices
        .values()
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (i, r)| acc + sign(i) * r)
}

/// A root `α` of `ψ`, giving the eigenvalue pair `1 ± √α`.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiRoot {
    pub interval: RootInterval,
    pub value: f64,
    pub multiplicity: usize,
    /// Set when `α` is recognised as an exact rational.
    pub exact: Option<BigRational>,
}

/// One distinct eigenvalue with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
    /// Exact closed form when available: a rational (`"9/5"`) if `α` is a
    /// rational square, otherwise `"1+√(5/12)"`/`"1-√(5/12)"`.
    pub sqrt_form: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactSpectrum {
    pub n: usize,
    pub k: usize,
    pub multiplicity_one: usize,
    pub psi: RationalPolynomial,
    /// Roots of `ψ` in increasing order.
    pub roots: Vec<PsiRoot>,
}

impl ExactSpectrum {
    /// Distinct eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Vec<Eigenvalue> {
        let mut out = Vec::with_capacity(2 * self.roots.len() + 1);
        for root in &self.roots {
            let s = root.value.max(0.0).sqrt();
            let (plus, minus) = match &root.exact {
                Some(alpha) => sqrt_forms(alpha),
                None => (None, None),
            };
            out.push(Eigenvalue {
                value: 1.0 + s,
                multiplicity: root.multiplicity,
                sqrt_form: plus,
            });
            out.push(Eigenvalue {
                value: 1.0 - s,
                multiplicity: root.multiplicity,
                sqrt_form: minus,
            });
        }
        if self.multiplicity_one > 0 {
            out.push(Eigenvalue {
                value: 1.0,
                multiplicity: self.multiplicity_one,
                sqrt_form: Some("1".into()),
            });
        }
        out.sort_by(|a, b| b.value.total_cmp(&a.value));
        out
    }

    /// Compact description such as `0, 2, 1^4, 1±√(5/12)` or
    /// `0, 2, (1±0.7071)^2`: the pair from `α = 1` first, then the eigenvalue
    /// 1, then the remaining pairs by decreasing `α`.
    pub fn summary(&self, decimals: usize) -> String {
        let mut parts = Vec::new();
        let mut pairs = Vec::new();
        for root in self.roots.iter().rev() {
            let one = BigRational::one();
            let text = match &root.exact {
                Some(alpha) if *alpha == one => {
                    parts.push(power("0", root.multiplicity));
                    parts.push(power("2", root.multiplicity));
                    continue;
                }
                Some(alpha) => match rational_sqrt(alpha) {
                    Some(s) => format!("1±{s}"),
                    None => format!("1±√({alpha})"),
                },
                None => format!("1±{:.*}", decimals, root.value.sqrt()),
            };
            pairs.push(if root.multiplicity > 1 {
                format!("({text})^{}", root.multiplicity)
            } else {
                text
            });
        }
        if self.multiplicity_one > 0 {
            parts.push(power("1", self.multiplicity_one));
        }
        parts.extend(pairs);
        parts.join(", ")
    }

    /// All `n` eigenvalues, repeated by multiplicity, descending.
    pub fn eigenvalue_list(&self) -> Vec<f64> {
        self.eigenvalues()
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }
}

fn power(base: &str, multiplicity: usize) -> String {
    if multiplicity == 1 {
        base.to_string()
    } else {
        format!("{base}^{multiplicity}")
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let root = |x: &BigInt| {
        let r = x.sqrt();
        (&r * &r == *x).then_some(r)
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

fn sqrt_forms(alpha: &BigRational) -> (Option<String>, Option<String>) {
    match rational_sqrt(alpha) {
        Some(s) => {
            let one = BigRational::one();
            (Some((&one + &s).to_string()), Some((&one - &s).to_string()))
        }
        None => (Some(format!("1+√({alpha})")), Some(format!("1-√({alpha})"))),
    }
}

/// Exact spectrum of a tree with at least two vertices.
pub fn exact_spectrum(t: &Tree) -> Result<ExactSpectrum> {
    exact_spectrum_with_precision(t, DEFAULT_ISOLATION_BITS)
}

/// As [`exact_spectrum`], refining roots of `ψ` to intervals of width `2^-bits`.
pub fn exact_spectrum_with_precision(t: &Tree, bits: u32) -> Result<ExactSpectrum> {
    let n = t.order();
    if n < 2 {
        return Err(invalid(
            "exact spectrum needs a tree with at least 2 vertices",
        ));
    }
    let indices = randic_indices_tree(t, -1)?;
    spectrum_from_indices(&indices, n, bits)
}

/// Spectrum from precomputed `α = -1` indices of a tree on `n >= 2` vertices.
pub fn spectrum_from_indices(
    indices: &MatchingIndexVector,
    n: usize,
    bits: u32,
) -> Result<ExactSpectrum> {
    check_order(indices, n)?;
    let k = indices.k();
    let psi = reduced_polynomial(indices)?;
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let (zero, one) = (BigRational::zero(), BigRational::one());

    let mut roots = Vec::new();
    for (factor, multiplicity) in psi.square_free_decomposition() {
        for interval in isolate_roots_in(&factor, &zero, &one, &width) {
            let exact = interval.recognize_rational(&factor);
            let value = match &exact {
                Some(q) => q.to_f64().unwrap_or(f64::NAN),
                None => interval.midpoint_f64(),
            };
            roots.push(PsiRoot {
                interval,
                value,
                multiplicity,
                exact,
            });
        }
    }
    roots.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo));

    let found: usize = roots.iter().map(|r| r.multiplicity).sum();
    if found != k {
        return Err(Error::Consistency(format!(
            "reduced polynomial {} has {found} roots in (0, 1], expected {k}",
            psi.display_with("y")
        )));
    }
    Ok(ExactSpectrum {
        n,
        k,
        multiplicity_one: n - 2 * k,
        psi,
        roots,
    })
}
