mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use tree_spectra::charpoly::{
    charpoly_in_shifted_basis, exact_spectrum, expand_charpoly, reduced_polynomial, verify_zero_sum,
};
use tree_spectra::poly::RationalPolynomial;
use tree_spectra::randic::randic_indices_tree;

#[test]
fn expansion_matches_shifted_basis() {
    let x_minus_one = RationalPolynomial::from_ratios(&[(-1, 1), (1, 1)]);
    for t in common::tree_corpus(10, 80, 5) {
        let n = t.order();
        let r = randic_indices_tree(&t, -1).unwrap();
        let symbolic = charpoly_in_shifted_basis(&r, n)
            .unwrap()
            .into_iter()
            .fold(RationalPolynomial::zero(), |acc, term| {
                &acc + &x_minus_one.pow(term.power).scale(&term.coeff)
            });
        let expanded = expand_charpoly(&r, n).unwrap();
        assert_eq!(expanded.to_polynomial(), symbolic, "{t:?}");
        assert_eq!(expanded.a(0), BigRational::one());
        // a single vertex is isolated: φ = x, so a_1 = 0 rather than n
        if n >= 2 {
            assert_eq!(expanded.a(1), BigRational::from_integer(BigInt::from(n)));
            assert!(expanded.a(n).is_zero());
        }
    }
}

#[test]
fn expansion_matches_fraction_free_determinant() {
    for t in common::tree_corpus(9, 150, 8) {
        if t.order() < 2 {
            continue;
        }
        let r = randic_indices_tree(&t, -1).unwrap();
        let phi = expand_charpoly(&r, t.order()).unwrap().to_polynomial();
        assert_eq!(phi, common::random_walk_charpoly(&t), "{t:?}");
    }
}

#[test]
fn second_coefficient_from_edge_strengths() {
    for t in common::random_trees(100, 2, 14, 77) {
        let n = t.order() as i64;
        let r = randic_indices_tree(&t, -1).unwrap();
        let a2 = expand_charpoly(&r, t.order()).unwrap().a(2);
        let inverse: BigRational = t
            .edges()
            .iter()
            .map(|&(u, v)| common::q(1, (t.degree(u) * t.degree(v)) as i64))
            .sum();
        assert_eq!(a2, common::q(n * (n - 1) / 2, 1) - inverse);
    }
}

#[test]
fn alternating_index_sum_vanishes() {
    for t in common::random_trees(600, 2, 16, 31337) {
        let r = randic_indices_tree(&t, -1).unwrap();
        assert!(verify_zero_sum(&r).is_zero(), "{t:?}");
    }
}

#[test]
fn spectra_are_symmetric_with_simple_extremes() {
    for t in common::tree_corpus(12, 150, 41) {
        if t.order() < 2 {
            continue;
        }
        let s = exact_spectrum(&t).unwrap();
        assert_eq!(s.multiplicity_one, t.order() - 2 * s.k);
        assert_eq!(s.eigenvalue_list().len(), t.order());
        assert!(s.roots.iter().all(|r| r.value >= 0.0 && r.value <= 1.0));

        // y = 1 is a simple root of ψ
        let psi = reduced_polynomial(&randic_indices_tree(&t, -1).unwrap()).unwrap();
        let one = BigRational::one();
        assert!(psi.eval(&one).is_zero());
        assert!(!psi.derivative().eval(&one).is_zero());
        let top = s.roots.last().unwrap();
        assert_eq!((top.exact.as_ref(), top.multiplicity), (Some(&one), 1));

        let values = s.eigenvalue_list();
        let mut mirrored: Vec<f64> = values.iter().map(|v| 2.0 - v).collect();
        mirrored.reverse();
        for (a, b) in values.iter().zip(&mirrored) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(values.iter().filter(|&&v| v == 2.0).count(), 1);
        assert_eq!(values.iter().filter(|&&v| v == 0.0).count(), 1);
    }
}
