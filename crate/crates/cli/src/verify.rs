//! Seeded cross-checks of every computational route.

use std::io::Write;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use tree_spectra::charpoly::{
    reduced_polynomial, spectrum_from_indices, verify_zero_sum, DEFAULT_ISOLATION_BITS,
};
use tree_spectra::closed_form::{double_starlike_indices, double_starlike_reduced, path_indices};
use tree_spectra::graph::{
    build_double_starlike, build_path, random_tree, DoubleStarlikeSpec, Tree,
};
use tree_spectra::io::serialize_edge_list;
use tree_spectra::randic::{randic_indices_bruteforce, randic_indices_tree, MatchingIndexVector};
use tree_spectra::spectra::{eigenvalues_jacobi, normalized_laplacian, DEFAULT_JACOBI_TOLERANCE};
use tree_spectra::{BigRational, Result};

use crate::{CliError, VerifyArgs, EXIT_FAILURE};

/// Brute-force enumeration is skipped above this order.
pub const BRUTE_FORCE_MAX_N: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    ZeroSum,
    Bruteforce,
    ClosedForm,
    Numeric,
}

impl Check {
    pub const ALL: [Check; 4] = [
        Check::ZeroSum,
        Check::Bruteforce,
        Check::ClosedForm,
        Check::Numeric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::ZeroSum => "zero-sum",
            Check::Bruteforce => "dp-vs-bruteforce",
            Check::ClosedForm => "closed-form-vs-dp",
            Check::Numeric => "exact-vs-jacobi",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    Skip,
    Fail(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub tree: usize,
    pub n: usize,
    pub tree_seed: u64,
    pub check: &'static str,
    pub detail: String,
    pub edge_list: String,
}

#[derive(Clone, Debug)]
pub struct TreeResult {
    pub n: usize,
    pub tree_seed: u64,
    pub tree: Tree,
    pub outcomes: [Outcome; 4],
}

/// Draws `(n, seed)` for each tree from one stream so the corpus depends
/// only on the master seed.
pub fn plan(trees: u64, max_n: u64, seed: u64) -> Vec<(usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trees)
        .map(|_| (rng.gen_range(2..=max_n) as usize, rng.gen()))
        .collect()
}

/// Double starlike tree used for the closed-form check of one corpus entry.
pub fn companion_double_starlike(tree_seed: u64) -> DoubleStarlikeSpec {
    let m = 2 + (tree_seed % 6) as usize;
    let p = 2 + ((tree_seed >> 8) % 4) as usize;
    let q = 2 + ((tree_seed >> 16) % 4) as usize;
    DoubleStarlikeSpec::new(m, p, q).expect("parameters are in range")
}

fn fault(indices: &MatchingIndexVector) -> MatchingIndexVector {
    let mut values = indices.values().to_vec();
    if values.len() > 1 {
        values[1] += BigRational::new(1.into(), 1000.into());
    }
    MatchingIndexVector::new(indices.alpha(), values)
}

fn outcome(r: Result<Option<String>>) -> Outcome {
    match r {
        Ok(None) => Outcome::Pass,
        Ok(Some(msg)) => Outcome::Fail(msg),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn join(v: &[BigRational]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn check_tree(n: usize, tree_seed: u64, tol: f64, inject_fault: bool) -> Result<TreeResult> {
    let tree = random_tree(n, tree_seed)?;
    let mut indices = randic_indices_tree(&tree, -1)?;
    if inject_fault {
        indices = fault(&indices);
    }

    let zero_sum = {
        let s = verify_zero_sum(&indices);
        if s.is_zero() {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("psi(1) = {s}"))
        }
    };

    let bruteforce = if n > BRUTE_FORCE_MAX_N {
        Outcome::Skip
    } else {
        outcome((|| {
            for (alpha, dp) in [(-1, indices.clone()), (1, randic_indices_tree(&tree, 1)?)] {
                let bf = randic_indices_bruteforce(&tree, alpha)?;
                if bf.values() != dp.values() {
                    return Ok(Some(format!(
                        "alpha = {alpha}: dp [{}] vs enumeration [{}]",
                        join(dp.values()),
                        join(bf.values())
                    )));
                }
            }
            Ok(None)
        })())
    };

    let closed_form = outcome((|| {
        let path = randic_indices_tree(&build_path(n)?, -1)?;
        let formula = path_indices(n)?;
        if path.values() != formula.values() {
            return Ok(Some(format!(
                "P_{n}: [{}] vs [{}]",
                join(formula.values()),
                join(path.values())
            )));
        }
        let spec = companion_double_starlike(tree_seed);
        let dp = randic_indices_tree(&build_double_starlike(&spec), -1)?;
        let formula = double_starlike_indices(&spec)?;
        if dp.values() != formula.values() {
            return Ok(Some(format!(
                "{spec}: [{}] vs [{}]",
                join(formula.values()),
                join(dp.values())
            )));
        }
        if double_starlike_reduced(&spec)? != reduced_polynomial(&dp)? {
            return Ok(Some(format!("{spec}: reduced polynomial differs")));
        }
        Ok(None)
    })());

    let numeric = outcome((|| {
        let exact = spectrum_from_indices(&indices, n, DEFAULT_ISOLATION_BITS)?.eigenvalue_list();
        let jacobi = eigenvalues_jacobi(&normalized_laplacian(&tree), DEFAULT_JACOBI_TOLERANCE)?;
        let worst = exact
            .iter()
            .zip(&jacobi)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        Ok((exact.len() != jacobi.len() || worst > tol)
            .then(|| format!("max residual {worst:e} exceeds {tol:e}")))
    })());

    Ok(TreeResult {
        n,
        tree_seed,
        tree,
        outcomes: [zero_sum, bruteforce, closed_form, numeric],
    })
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> std::result::Result<(), CliError> {
    let plan = plan(args.trees, args.max_n, args.seed);
    let results = plan
        .par_iter()
        .map(|&(n, s)| check_tree(n, s, args.tol, args.inject_fault))
        .collect::<Result<Vec<_>>>()?;

    writeln!(
        out,
        "verified {} trees, n in 2..={}, seed {}",
        results.len(),
        args.max_n,
        args.seed
    )?;
    for (c, check) in Check::ALL.iter().enumerate() {
        let count = |f: fn(&Outcome) -> bool| results.iter().filter(|r| f(&r.outcomes[c])).count();
        let passed = count(|o| *o == Outcome::Pass);
        let failed = count(|o| matches!(o, Outcome::Fail(_)));
        let skipped = count(|o| *o == Outcome::Skip);
        writeln!(
            out,
            "{:<20} passed {:>6}  failed {:>6}  skipped {:>6}",
            check.name(),
            passed,
            failed,
            skipped
        )?;
    }

    let first = results.iter().enumerate().find_map(|(i, r)| {
        r.outcomes
            .iter()
            .zip(Check::ALL)
            .find_map(|(o, check)| match o {
                Outcome::Fail(detail) => Some(Counterexample {
                    tree: i,
                    n: r.n,
                    tree_seed: r.tree_seed,
                    check: check.name(),
                    detail: detail.clone(),
                    edge_list: serialize_edge_list(&r.tree),
                }),
                _ => None,
            })
    });
    match first {
        None => {
            writeln!(out, "all checks passed")?;
            Ok(())
        }
        Some(cx) => {
            let json = serde_json::to_string_pretty(&cx).expect("counterexample serializes");
            writeln!(out, "counterexample:\n{json}")?;
            Err(CliError::new(
                EXIT_FAILURE,
                format!("{} failed on tree #{}", cx.check, cx.tree),
            ))
        }
    }
}
