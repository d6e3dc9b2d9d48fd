//! Closed formulas for paths, starlike trees and the double starlike trees
//! `H_m(p, q)`.
//!
//! These are independent of the tree dynamic program in [`crate::randic`],
//! which makes them useful both as fast special cases and as cross-checks.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::graph::{build_path, DoubleStarlikeSpec, StarlikeSpec};
use crate::poly::{int, RationalPolynomial};
use crate::randic::{randic_indices_tree, Exponent, MatchingIndexVector};

fn big(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn quarter_pow(i: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(4).pow(i as u32))
}

/// Number of `i`-matchings of the path on `n` vertices, `C(n - i, i)`;
/// zero whenever the binomial is out of range.
pub fn path_matchings(i: i64, n: i64) -> BigInt {
    if i < 0 || n - i < i {
        return BigInt::zero();
    }
    binomial(BigInt::from(n - i), BigInt::from(i))
}

/// `R_{-1}^(i)(P_n) = C(i, n-2)/4^i + C(i-1, n-2)/4^(i-1)` where `C(i, m)`
/// counts the `i`-matchings of `P_m`. Paths shorter than 3 vertices are
/// computed by the tree recursion instead.
pub fn path_index(n: usize, i: usize) -> Result<BigRational> {
    if n < 3 {
        let path = build_path(n)?;
        return Ok(randic_indices_tree(&path, -1)?.get(i));
    }
    let m = n as i64 - 2;
    let i64_i = i as i64;
    let mut value = BigRational::from_integer(path_matchings(i64_i, m)) * quarter_pow(i);
    if i >= 1 {
        value += BigRational::from_integer(path_matchings(i64_i - 1, m)) * quarter_pow(i - 1);
    }
    Ok(value)
}

/// Full `α = -1` index vector of `P_n` from the path formula.
pub fn path_indices(n: usize) -> Result<MatchingIndexVector> {
    if n == 0 {
        return Err(invalid("a path needs at least one vertex"));
    }
    let values = (0..=n / 2)
        .map(|i| path_index(n, i))
        .collect::<Result<_>>()?;
    Ok(MatchingIndexVector::new(Exponent::Integer(-1), values))
}

/// `ψ_{P_n}(y) = (y - 1) Σ_{i<k} (-1)^i C(i, n-2)/4^i y^(k-1-i)`, with
/// `ψ_{P_1} = 1` and `ψ_{P_2} = y - 1`.
pub fn path_reduced_polynomial(n: usize) -> Result<RationalPolynomial> {
    match n {
        0 => Err(invalid("a path needs at least one vertex")),
        1 => Ok(RationalPolynomial::one()),
        2 => Ok(RationalPolynomial::linear_root(int(1))),
        _ => {
            let k = n / 2;
            let mut coeffs = vec![BigRational::zero(); k];
            for i in 0..k {
                let c = BigRational::from_integer(path_matchings(i as i64, n as i64 - 2))
                    * quarter_pow(i);
                coeffs[k - 1 - i] = if i % 2 == 0 { c } else { -c };
            }
            Ok(&RationalPolynomial::linear_root(int(1)) * &RationalPolynomial::new(coeffs))
        }
    }
}

/// Closed-form quantities of a starlike tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarlikeReport {
    /// Matching number.
    pub k: usize,
    /// First-order index `R_{-1}`.
    pub r_minus1: BigRational,
    /// Number of maximum matchings.
    pub max_matching_count: BigInt,
    /// Top-order index `R_{-1}^(k)`.
    pub r_top: BigRational,
    /// Multiplicity of the eigenvalue 1.
    pub mult_one: usize,
}

/// `R_{-1}` from the edge-strength census of a starlike tree:
/// `(n + 1)/4 + (t/4)(2/r - 1)` with `t` the number of branches of length 1.
///
/// Each length-1 branch is one edge of strength `r`; every longer branch has
/// one edge of strength `2r`, one of strength 2, and the rest strength 4.
pub fn starlike_randic(spec: &StarlikeSpec) -> BigRational {
    let t = spec.branch_lengths().iter().filter(|&&l| l == 1).count();
    starlike_first_order(spec, t)
}

/// The same expression with `t` replaced by the number of odd branches, as
/// the formula is commonly stated. It disagrees with the edge census as soon
/// as some odd branch has length at least 3; kept to document that.
pub fn starlike_randic_published(spec: &StarlikeSpec) -> BigRational {
    let m = odd_branches(spec).count();
    starlike_first_order(spec, m)
}

fn starlike_first_order(spec: &StarlikeSpec, count: usize) -> BigRational {
    let n = spec.order();
    let r = spec.branches();
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    &quarter * big(n + 1)
        + &quarter * big(count) * (BigRational::new(BigInt::from(2), BigInt::from(r)) - int(1))
}

fn odd_branches(spec: &StarlikeSpec) -> impl Iterator<Item = usize> + '_ {
    spec.branch_lengths().iter().copied().filter(|l| l % 2 == 1)
}

pub fn starlike_report(spec: &StarlikeSpec) -> StarlikeReport {
    let n = spec.order();
    let r = spec.branches();
    let odd: Vec<usize> = odd_branches(spec).collect();
    let m = odd.len();
    // product of all degrees: r at the center, 2 on internal branch vertices, 1 at leaves
    let internal: usize = spec.branch_lengths().iter().map(|l| l - 1).sum();
    let degree_product = big(r) * BigRational::from_integer(BigInt::from(2).pow(internal as u32));

    let (k, max_matching_count, r_top) = if m == 0 {
        let count = BigInt::from(n.div_ceil(2));
        ((n - 1) / 2, count, big(n - 1) / &degree_product)
    } else {
        let k = (n - m).div_ceil(2);
        let plus_one: BigRational = odd.iter().map(|&l| big(l + 1)).product();
        let inv_sum: BigRational = odd.iter().map(|&l| big(l + 1).recip()).sum();
        let halves = BigRational::from_integer(BigInt::from(2).pow(m as u32 - 1));
        let count = plus_one / halves * inv_sum;
        debug_assert!(count.is_integer());

        let product: BigRational = odd.iter().map(|&l| big(l)).product();
        let inv: BigRational = odd.iter().map(|&l| big(l).recip()).sum();
        (k, count.to_integer(), product / &degree_product * inv)
    };
    StarlikeReport {
        k,
        r_minus1: starlike_randic(spec),
        max_matching_count,
        r_top,
        mult_one: n - 2 * k,
    }
}

fn double_starlike_ratios(spec: &DoubleStarlikeSpec) -> (BigRational, BigRational) {
    let (p, q) = (spec.p(), spec.q());
    let denom = big((p + 1) * (q + 1));
    let r1 = big(p * q) / &denom;
    let r2 = big(p + q) / (int(2) * &denom);
    (r1, r2)
}

/// `α = -1` indices of `H_m(p, q)` from the path indices of `P_m` and `P_{m-1}`:
/// `R^(i) = R^(i)(P_m) + r1 R^(i-1)(P_m) + r2 R^(i-1)(P_{m-1})` for `m >= 3`
/// with `r1 = pq/((p+1)(q+1))`, `r2 = (p+q)/(2(p+1)(q+1))`. For `m = 2`
/// (a double star) the vector is `[1, 1 + r1, r1]`.
pub fn double_starlike_indices(spec: &DoubleStarlikeSpec) -> Result<MatchingIndexVector> {
    let m = spec.m();
    let (r1, r2) = double_starlike_ratios(spec);
    let k = m / 2 + 1;
    let values = if m == 2 {
        vec![int(1), int(1) + &r1, r1]
    } else {
        let mut values = Vec::with_capacity(k + 1);
        values.push(int(1));
        for i in 1..=k {
            values.push(
                path_index(m, i)? + &r1 * path_index(m, i - 1)? + &r2 * path_index(m - 1, i - 1)?,
            );
        }
        values
    };
    Ok(MatchingIndexVector::new(Exponent::Integer(-1), values))
}

/// `ψ` of `H_m(p, q)` built from `ψ_{P_m}` and `ψ_{P_{m-1}}`:
///
/// ```text
/// m odd:  (y - r1) ψ_{P_m} - r2 ψ_{P_{m-1}}
/// m even: y (ψ_{P_m} - r2 ψ_{P_{m-1}}) - r1 ψ_{P_m}
/// ```
///
/// For `m = 2` the `r2` term is absent and the result is `(y - r1)(y - 1)`.
pub fn double_starlike_reduced(spec: &DoubleStarlikeSpec) -> Result<RationalPolynomial> {
    let m = spec.m();
    let (r1, r2) = double_starlike_ratios(spec);
    let psi_m = path_reduced_polynomial(m)?;
    let y = RationalPolynomial::monomial(int(1), 1);
    if m == 2 {
        return Ok(&RationalPolynomial::linear_root(r1) * &psi_m);
    }
    let tail = path_reduced_polynomial(m - 1)?.scale(&r2);
    Ok(if m % 2 == 1 {
        &(&RationalPolynomial::linear_root(r1) * &psi_m) - &tail
    } else {
        &(&y * &(&psi_m - &tail)) - &psi_m.scale(&r1)
    })
}

/// `p + q - 2` for even `m`, `p + q - 1` for odd `m`.
pub fn eigenvalue_one_multiplicity_double_starlike(spec: &DoubleStarlikeSpec) -> usize {
    let s = spec.p() + spec.q();
    if spec.m().is_multiple_of(2) {
        s - 2
    } else {
        s - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cospectrality {
    Isomorphic,
    NotCospectral,
}

/// Decides whether two double starlike trees with the same path length have
/// the same normalized-Laplacian spectrum, by exact comparison of their
/// reduced polynomials and eigenvalue-1 multiplicities. Within the family,
/// equal spectra force `{p1, q1} = {p2, q2}`.
pub fn cospectral_double_starlike(
    a: &DoubleStarlikeSpec,
    b: &DoubleStarlikeSpec,
) -> Result<Cospectrality> {
    if a.m() != b.m() {
        return Err(invalid(format!(
            "path lengths differ: {} vs {}",
            a.m(),
            b.m()
        )));
    }
    let same_psi = double_starlike_reduced(a)? == double_starlike_reduced(b)?;
    let same_ones = eigenvalue_one_multiplicity_double_starlike(a)
        == eigenvalue_one_multiplicity_double_starlike(b);
    if !(same_psi && same_ones) {
        return Ok(Cospectrality::NotCospectral);
    }
    let mut x = [a.p(), a.q()];
    let mut y = [b.p(), b.q()];
    x.sort_unstable();
    y.sort_unstable();
    if x != y {
        return Err(Error::Consistency(format!(
            "{a} and {b} are cospectral but not isomorphic"
        )));
    }
    Ok(Cospectrality::Isomorphic)
}
