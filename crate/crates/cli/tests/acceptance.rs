//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero on any unexpected outcome.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tree_spectra::charpoly::expand_charpoly;
use tree_spectra::closed_form::{
    cospectral_double_starlike, double_starlike_reduced, starlike_randic,
    starlike_randic_published, starlike_report, Cospectrality,
};
use tree_spectra::graph::{
    build_double_starlike, build_family, build_path, build_starlike, random_tree,
    DoubleStarlikeSpec, Family, Graph, StarlikeSpec, Tree,
};
use tree_spectra::poly::RationalPolynomial;
use tree_spectra::randic::{
    randic_indices_bruteforce, randic_indices_bruteforce_numeric, randic_indices_tree,
};
use tree_spectra::spectra::{eigenvalues_jacobi, normalized_laplacian, reconcile};
use tree_spectra::BigRational;
use tree_spectra_cli::compute::compute_record;
use tree_spectra_cli::record::OutputRecord;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    run: fn() -> Outcome,
}

/// Criteria whose stated expectation contradicts direct computation. They
/// are still run in full and reported as FAIL; see the ledger for analysis.
const KNOWN_DEFECTS: &[u32] = &[6, 10];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn big(n: usize) -> BigRational {
    BigRational::from_integer(n.into())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn seeded_trees(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Tree> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_tree(n, rng.gen()).unwrap()
        })
        .collect()
}

fn starlikes_up_to(max_n: usize) -> Vec<StarlikeSpec> {
    (4..=max_n).flat_map(StarlikeSpec::all_with_order).collect()
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn expand(record: &OutputRecord) -> Vec<f64> {
    record
        .eigenvalues
        .iter()
        .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
        .collect()
}

fn pm(center: f64, offsets: &[f64]) -> Vec<f64> {
    offsets
        .iter()
        .flat_map(|d| [center + d, center - d])
        .collect()
}

/// Row values of the n = 8 starlike table, with eigenvalues from their
/// printed closed forms.
fn starlike8_expected() -> Vec<(&'static str, Vec<BigRational>, Vec<f64>)> {
    let s = f64::sqrt;
    let base = |ones: usize, offsets: &[f64]| {
        let mut v = vec![0.0, 2.0];
        v.extend(std::iter::repeat_n(1.0, ones));
        v.extend(pm(1.0, offsets));
        sorted_desc(v)
    };
    vec![
        (
            "1,1,5",
            vec![q(25, 12), q(21, 16), q(11, 48)],
            base(
                2,
                &[
                    s(13.0 + s(37.0)) / (2.0 * s(6.0)),
                    s(13.0 - s(37.0)) / (2.0 * s(6.0)),
                ],
            ),
        ),
        (
            "1,2,4",
            vec![q(13, 6), q(3, 2), q(17, 48), q(1, 48)],
            base(0, &[0.876, 0.558, 0.295]),
        ),
        (
            "1,3,3",
            vec![q(13, 6), q(71, 48), q(5, 16)],
            base(2, &[s(3.0) / 2.0, s(5.0) / (2.0 * s(3.0))]),
        ),
        (
            "2,2,3",
            vec![q(9, 4), q(5, 3), q(7, 16), q(1, 48)],
            base(
                0,
                &[
                    1.0 / s(2.0),
                    s(9.0 + s(57.0)) / (2.0 * s(6.0)),
                    s(9.0 - s(57.0)) / (2.0 * s(6.0)),
                ],
            ),
        ),
        (
            "1,1,1,4",
            vec![q(15, 8), q(31, 32), q(3, 32)],
            base(2, &[s(3.0) / 2.0, 1.0 / (2.0 * s(2.0))]),
        ),
        (
            "1,1,2,3",
            vec![q(2, 1), q(39, 32), q(7, 32)],
            base(
                2,
                &[
                    s(4.0 + s(2.0)) / (2.0 * s(2.0)),
                    s(4.0 - s(2.0)) / (2.0 * s(2.0)),
                ],
            ),
        ),
        (
            "1,2,2,2",
            vec![q(17, 8), q(3, 2), q(13, 32), q(1, 32)],
            base(0, &[1.0 / s(2.0), 1.0 / s(2.0), 1.0 / (2.0 * s(2.0))]),
        ),
        (
            "1,1,1,1,3",
            vec![q(33, 20), q(13, 20)],
            base(4, &[s(13.0 / 20.0)]),
        ),
        (
            "1,1,1,2,2",
            vec![q(9, 5), q(19, 20), q(3, 20)],
            base(2, &[s(3.0 / 10.0), 1.0 / s(2.0)]),
        ),
        (
            "1,1,1,1,1,2",
            vec![q(17, 12), q(5, 12)],
            base(4, &[s(5.0 / 12.0)]),
        ),
    ]
}

fn c1_starlike_table() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = tree_spectra_cli::run_with_args(
        ["tree-spectra", "table", "starlike8", "--format", "json"],
        &mut out,
        &mut err,
    );
    ensure!(
        code == 0,
        "table exited {code}: {}",
        String::from_utf8_lossy(&err)
    );
    let rows: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let rows = rows.as_array().ok_or("table output is not an array")?;
    let expected = starlike8_expected();
    ensure!(rows.len() == expected.len(), "{} rows", rows.len());
    let (mut worst_print, mut worst_jacobi) = (0.0f64, 0.0f64);
    for (row, (partition, indices, eigen)) in rows.iter().zip(&expected) {
        ensure!(
            row["partition"] == *partition,
            "row order: {}",
            row["partition"]
        );
        let got: Vec<BigRational> = row["indices"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().parse().unwrap())
            .collect();
        ensure!(got == *indices, "{partition}: indices {got:?}");
        let values: Vec<f64> = row["eigenvalues"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_f64().unwrap())
            .collect();
        let lengths = partition.split(',').map(|l| l.parse().unwrap()).collect();
        let tree = build_starlike(&StarlikeSpec::new(lengths).unwrap());
        let jacobi =
            eigenvalues_jacobi(&normalized_laplacian(&tree), 1e-12).map_err(|e| e.to_string())?;
        worst_print = worst_print.max(max_gap(&values, eigen));
        worst_jacobi = worst_jacobi.max(max_gap(&values, &jacobi));
        ensure!(
            max_gap(&values, eigen) <= 1e-3,
            "{partition}: {values:?} vs printed {eigen:?}"
        );
        ensure!(
            max_gap(&values, &jacobi) <= 1e-9,
            "{partition}: {values:?} vs jacobi {jacobi:?}"
        );
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "10 rows exact; max gap {worst_print:.1e} to prints, {worst_jacobi:.1e} to Jacobi; {elapsed:.0?}"
    ))
}

fn c2_worked_examples() -> Outcome {
    let h244 = DoubleStarlikeSpec::new(2, 4, 4).unwrap();
    let r = compute_record(&build_double_starlike(&h244), h244.to_string(), 1e-9)
        .map_err(|e| e.to_string())?;
    ensure!(
        r.indices == ["1", "41/25", "16/25"],
        "H_2(4,4) indices {:?}",
        r.indices
    );
    let got = sorted_desc(expand(&r));
    let mut want = vec![0.0, 2.0, 0.2, 1.8];
    want.extend([1.0; 6]);
    let want = sorted_desc(want);
    ensure!(
        max_gap(&got, &want) <= 1e-12,
        "H_2(4,4) eigenvalues {got:?}"
    );
    let forms: Vec<_> = r
        .eigenvalues
        .iter()
        .filter_map(|e| e.sqrt_form.clone())
        .collect();
    ensure!(
        forms.contains(&"1/5".to_string()) && forms.contains(&"9/5".to_string()),
        "{forms:?}"
    );

    let h435 = DoubleStarlikeSpec::new(4, 3, 5).unwrap();
    let r = compute_record(&build_double_starlike(&h435), h435.to_string(), 1e-9)
        .map_err(|e| e.to_string())?;
    ensure!(
        r.indices == ["1", "49/24", "115/96", "5/32"],
        "H_4(3,5) indices {:?}",
        r.indices
    );
    let got = sorted_desc(expand(&r));
    let mut want = vec![0.0, 2.0];
    want.extend([1.0; 6]);
    want.extend(pm(1.0, &[0.4263, 0.9273]));
    let want = sorted_desc(want);
    let gap = max_gap(&got, &want);
    ensure!(gap <= 1e-3, "H_4(3,5) eigenvalues {got:?}");
    Ok(format!("H_2(4,4) exact, H_4(3,5) within {gap:.1e}"))
}

fn c3_zero_sum() -> Outcome {
    let start = Instant::now();
    let trees = seeded_trees(500, 2, 16, 0xC3);
    for t in &trees {
        let r = randic_indices_tree(t, -1).map_err(|e| e.to_string())?;
        let mut sum = BigRational::zero();
        for (i, v) in r.values().iter().enumerate() {
            if i % 2 == 0 {
                sum += v;
            } else {
                sum -= v;
            }
        }
        ensure!(sum.is_zero(), "alternating sum {sum} on {t:?}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(format!("{} trees, {elapsed:.0?}", trees.len()))
}

fn c4_dp_vs_enumeration() -> Outcome {
    let mut trees: Vec<Tree> = starlikes_up_to(12).iter().map(build_starlike).collect();
    let starlikes = trees.len();
    trees.extend(seeded_trees(200, 1, 12, 0xC4));
    for t in &trees {
        for alpha in [-1, 1] {
            let dp = randic_indices_tree(t, alpha).map_err(|e| e.to_string())?;
            let bf = randic_indices_bruteforce(t, alpha).map_err(|e| e.to_string())?;
            ensure!(dp.values() == bf.values(), "alpha {alpha} on {t:?}");
        }
    }
    Ok(format!(
        "{starlikes} starlike + 200 random trees, both exponents"
    ))
}

/// `det(xI - (I - D^{-1}A))` by Bareiss elimination over `Q[x]`.
fn random_walk_charpoly(g: &Graph) -> RationalPolynomial {
    let n = g.order();
    let shift = RationalPolynomial::new(vec![-BigRational::one(), BigRational::one()]);
    let mut m: Vec<Vec<RationalPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match () {
                    _ if i == j => shift.clone(),
                    _ if g.has_edge(i, j) => RationalPolynomial::constant(big(g.degree(i)).recip()),
                    _ => RationalPolynomial::zero(),
                })
                .collect()
        })
        .collect();
    let mut previous = RationalPolynomial::one();
    for k in 0..n.saturating_sub(1) {
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&previous);
            }
        }
        previous = m[k][k].clone();
    }
    m[n - 1][n - 1].clone()
}

fn c5_determinant_oracle() -> Outcome {
    let mut trees: Vec<Tree> = (2..=9).map(|n| build_path(n).unwrap()).collect();
    trees.extend(starlikes_up_to(9).iter().map(build_starlike));
    for m in 2..=5 {
        for p in 2..=5 {
            for qq in p..=5 {
                if m + p + qq <= 9 {
                    trees.push(build_double_starlike(
                        &DoubleStarlikeSpec::new(m, p, qq).unwrap(),
                    ));
                }
            }
        }
    }
    trees.extend(seeded_trees(150, 2, 9, 0xC5));
    for t in &trees {
        let indices = randic_indices_tree(t, -1).map_err(|e| e.to_string())?;
        let phi = expand_charpoly(&indices, t.order()).map_err(|e| e.to_string())?;
        ensure!(
            phi.to_polynomial() == random_walk_charpoly(t),
            "mismatch on {t:?}"
        );
    }
    Ok(format!("{} trees", trees.len()))
}

fn c6_known_graphs() -> Outcome {
    let r2 = |g: &Graph| randic_indices_bruteforce(g, -1).unwrap().get(2);
    let mut failures = Vec::new();
    let mut check = |label: String, got: BigRational, want: BigRational| {
        if got != want {
            failures.push(format!("{label}: {got} != {want}"));
        }
    };
    for n in 4..=9i64 {
        check(
            format!("P_{n}"),
            r2(&build_path(n as usize).unwrap()),
            q(n * n - n - 4, 32),
        );
        let c = build_family(Family::Cycle(n as usize)).unwrap();
        check(format!("C_{n}"), r2(&c), q(n * (n - 3), 32));
    }
    for n in 1..=9 {
        check(
            format!("S_{n}"),
            r2(&build_family(Family::Star(n)).unwrap()),
            BigRational::zero(),
        );
    }
    for n in 4..=7usize {
        let want = big(3 * binomial(n, 4)) / big((n - 1).pow(4));
        check(
            format!("K_{n}"),
            r2(&build_family(Family::Complete(n)).unwrap()),
            want,
        );
    }
    for p in 2..=4i64 {
        for qq in 2..=4i64 {
            let g = build_family(Family::CompleteBipartite(p as usize, qq as usize)).unwrap();
            check(
                format!("K_{p},{qq}"),
                r2(&g),
                q((p - 1) * (qq - 1), 4 * p * qq),
            );
        }
    }
    if failures.is_empty() {
        Ok("paths, cycles, stars, complete and complete bipartite graphs".into())
    } else {
        Err(format!(
            "{} mismatches: {}",
            failures.len(),
            failures.join("; ")
        ))
    }
}

fn graph_corpus(seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(build_family(Family::Star(n)).unwrap());
        out.push(build_family(Family::Complete(n)).unwrap());
    }
    for n in 3..=10 {
        out.push(build_family(Family::Cycle(n)).unwrap());
    }
    for p in 1..=4 {
        for qq in 1..=4 {
            out.push(build_family(Family::CompleteBipartite(p, qq)).unwrap());
        }
    }
    out.extend(
        seeded_trees(80, 1, 12, seed)
            .into_iter()
            .map(Tree::into_graph),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xff);
    while out.len() < 250 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.1..0.7);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if edges.len() <= 20 {
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}

fn c7_second_order_bound() -> Outcome {
    let corpus = graph_corpus(0xC7);
    let half = q(1, 2);
    for g in &corpus {
        for alpha in [-1, 1] {
            let a = randic_indices_bruteforce(g, alpha).map_err(|e| e.to_string())?;
            let twice = randic_indices_bruteforce(g, 2 * alpha).map_err(|e| e.to_string())?;
            let bound = &half * a.get(1) * a.get(1) - &half * twice.get(1);
            ensure!(
                a.get(2) >= BigRational::zero() && a.get(2) <= bound,
                "alpha {alpha} on {g:?}"
            );
        }
        let a = randic_indices_bruteforce_numeric(g, -0.5).map_err(|e| e.to_string())?;
        let twice = randic_indices_bruteforce_numeric(g, -1.0).map_err(|e| e.to_string())?;
        let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
        let (r1, r2, s1) = (at(a.values(), 1), at(a.values(), 2), at(twice.values(), 1));
        ensure!(
            r2 >= 0.0 && r2 <= 0.5 * r1 * r1 - 0.5 * s1 + 1e-12,
            "alpha -1/2 on {g:?}"
        );
    }
    Ok(format!("{} graphs, alpha in {{-1, -1/2, 1}}", corpus.len()))
}

fn c8_starlike_formula() -> Outcome {
    let specs = starlikes_up_to(14);
    for spec in &specs {
        let dp = randic_indices_tree(&build_starlike(spec), -1).map_err(|e| e.to_string())?;
        ensure!(
            starlike_randic(spec) == dp.get(1),
            "{spec}: R1 {} vs dp {}",
            starlike_randic(spec),
            dp.get(1)
        );
        let report = starlike_report(spec);
        ensure!(
            report.k == dp.k() && report.r_top == dp.get(dp.k()),
            "{spec}: top index"
        );
        ensure!(
            report.mult_one == spec.order() - 2 * dp.k(),
            "{spec}: multiplicity of 1"
        );
    }
    let t115 = StarlikeSpec::new(vec![1, 1, 5]).unwrap();
    let published = starlike_randic_published(&t115);
    let true_value = randic_indices_tree(&build_starlike(&t115), -1)
        .unwrap()
        .get(1);
    ensure!(
        published == q(2, 1),
        "odd-branch formula gives {published} on T(1,1,5)"
    );
    ensure!(
        true_value == q(25, 12) && published != true_value,
        "T(1,1,5) R1 = {true_value}"
    );
    Ok(format!(
        "{} specs; odd-branch formula gives 2 != 25/12 on T(1,1,5)",
        specs.len()
    ))
}

fn c9_reconciliation() -> Outcome {
    let trees = seeded_trees(200, 2, 16, 0xC9);
    let mut worst = 0.0f64;
    for t in &trees {
        let report = reconcile(t, 1e-9).map_err(|e| e.to_string())?;
        ensure!(
            report.matched,
            "residual {:e} on {t:?}",
            report.max_abs_residual
        );
        worst = worst.max(report.max_abs_residual);
        let values = report.exact.eigenvalue_list();
        let n = values.len();
        for i in 0..n {
            ensure!(
                (values[i] + values[n - 1 - i] - 2.0).abs() <= 1e-9,
                "asymmetric on {t:?}"
            );
        }
        let near = |x: f64| values.iter().filter(|v| (*v - x).abs() <= 1e-9).count();
        ensure!(near(0.0) == 1 && near(2.0) == 1, "extremes on {t:?}");
    }
    Ok(format!("{} trees, max residual {worst:.1e}", trees.len()))
}

fn c10_cospectrality() -> Outcome {
    let mut pairs = 0;
    let mut shared_psi = Vec::new();
    for m in 2..=5 {
        let specs: Vec<DoubleStarlikeSpec> = (2..=10)
            .flat_map(|p| (p..=12 - p).map(move |qq| (p, qq)))
            .map(|(p, qq)| DoubleStarlikeSpec::new(m, p, qq).unwrap())
            .collect();
        for (i, a) in specs.iter().enumerate() {
            let swapped = DoubleStarlikeSpec::new(m, a.q(), a.p()).unwrap();
            for same in [a, &swapped] {
                let verdict = cospectral_double_starlike(a, same).map_err(|e| e.to_string())?;
                ensure!(verdict == Cospectrality::Isomorphic, "{a} vs {same}");
            }
            for b in &specs[i + 1..] {
                let verdict = cospectral_double_starlike(a, b).map_err(|e| e.to_string())?;
                ensure!(verdict == Cospectrality::NotCospectral, "{a} vs {b}");
                if double_starlike_reduced(a).unwrap() == double_starlike_reduced(b).unwrap() {
                    // equal ψ with unequal order still separates the spectra
                    ensure!(a.order() != b.order(), "{a} and {b} share psi and order");
                    shared_psi.push(format!("{a}~{b}"));
                }
                pairs += 1;
            }
        }
    }
    ensure!(
        shared_psi.is_empty(),
        "all {pairs} pairs not cospectral, but {} pairs share psi (orders differ): {}",
        shared_psi.len(),
        shared_psi.join(", ")
    );
    Ok(format!("{pairs} distinct pairs over m in 2..=5"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "starlike n=8 table",
            run: c1_starlike_table,
        },
        Criterion {
            id: 2,
            name: "double starlike worked examples",
            run: c2_worked_examples,
        },
        Criterion {
            id: 3,
            name: "alternating index sum vanishes",
            run: c3_zero_sum,
        },
        Criterion {
            id: 4,
            name: "tree DP equals enumeration",
            run: c4_dp_vs_enumeration,
        },
        Criterion {
            id: 5,
            name: "characteristic polynomial vs determinant",
            run: c5_determinant_oracle,
        },
        Criterion {
            id: 6,
            name: "known-graph second-order indices",
            run: c6_known_graphs,
        },
        Criterion {
            id: 7,
            name: "second-order index bound",
            run: c7_second_order_bound,
        },
        Criterion {
            id: 8,
            name: "starlike first-order formula",
            run: c8_starlike_formula,
        },
        Criterion {
            id: 9,
            name: "exact vs Jacobi spectra",
            run: c9_reconciliation,
        },
        Criterion {
            id: 10,
            name: "double starlike cospectrality",
            run: c10_cospectrality,
        },
    ];
    let mut unexpected = 0;
    for c in &criteria {
        let outcome =
            catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let known = KNOWN_DEFECTS.contains(&c.id);
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        let note = match (outcome.is_ok(), known) {
            (false, true) => " [known defect in stated expectation]",
            (true, true) => " [expected failure did not occur]",
            _ => "",
        };
        if outcome.is_ok() == known {
            unexpected += 1;
        }
        println!("{status} C{:<2} {}: {detail}{note}", c.id, c.name);
    }
    println!(
        "{} criteria, {} unexpected outcome(s)",
        criteria.len(),
        unexpected
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
