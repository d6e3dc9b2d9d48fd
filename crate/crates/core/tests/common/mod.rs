//! Test-only oracles and corpora, independent of the library's computation paths.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tree_spectra::graph::{
    build_double_starlike, build_family, build_path, build_starlike, random_tree,
    DoubleStarlikeSpec, Family, Graph, StarlikeSpec, Tree,
};
use tree_spectra::poly::RationalPolynomial;

/// `count` random trees with orders drawn uniformly from `min_n..=max_n`.
pub fn random_trees(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Tree> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_tree(n, rng.gen()).unwrap()
        })
        .collect()
}

/// Erdős–Rényi style graph, rejected and redrawn until it has at most `max_edges` edges.
pub fn random_graph(n: usize, p: f64, max_edges: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if edges.len() <= max_edges {
            return Graph::from_edges(n, edges).unwrap();
        }
    }
}

/// Trees of every named shape plus random ones, all with at most `max_n` vertices.
pub fn tree_corpus(max_n: usize, random: usize, seed: u64) -> Vec<Tree> {
    let mut out: Vec<Tree> = (1..=max_n).map(|n| build_path(n).unwrap()).collect();
    for n in 4..=max_n {
        out.extend(StarlikeSpec::all_with_order(n).iter().map(build_starlike));
    }
    for m in 2..=max_n {
        for p in 2..=max_n {
            for q in p..=max_n {
                if m + p + q <= max_n {
                    out.push(build_double_starlike(
                        &DoubleStarlikeSpec::new(m, p, q).unwrap(),
                    ));
                }
            }
        }
    }
    out.extend(random_trees(random, 1, max_n, seed));
    out
}

/// Small graphs of mixed shape for inequalities that hold on every graph.
pub fn graph_corpus(seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(build_family(Family::Star(n)).unwrap());
        out.push(build_family(Family::Complete(n)).unwrap());
    }
    for n in 3..=10 {
        out.push(build_family(Family::Cycle(n)).unwrap());
    }
    for p in 1..=4 {
        for q in 1..=4 {
            out.push(build_family(Family::CompleteBipartite(p, q)).unwrap());
        }
    }
    out.extend(
        random_trees(60, 1, 12, seed)
            .into_iter()
            .map(Tree::into_graph),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for _ in 0..80 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.1..0.7);
        out.push(random_graph(n, p, 20, &mut rng));
    }
    out
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn big(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `det(xI - (I - D^{-1}A))` by fraction-free (Bareiss) elimination over
/// `Q[x]`. The random-walk Laplacian is similar to the normalized Laplacian
/// and has rational entries. Graphs must have no isolated vertices.
pub fn random_walk_charpoly(g: &Graph) -> RationalPolynomial {
    let n = g.order();
    let x_minus_one = RationalPolynomial::from_ratios(&[(-1, 1), (1, 1)]);
    let mut m: Vec<Vec<RationalPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        x_minus_one.clone()
                    } else if g.has_edge(i, j) {
                        RationalPolynomial::constant(big(g.degree(i)).recip())
                    } else {
                        RationalPolynomial::zero()
                    }
                })
                .collect()
        })
        .collect();
    bareiss_determinant(&mut m)
}

/// Bareiss elimination without pivoting; every leading principal minor of
/// `xI - B` is monic, so pivots never vanish.
pub fn bareiss_determinant(m: &mut [Vec<RationalPolynomial>]) -> RationalPolynomial {
    let n = m.len();
    if n == 0 {
        return RationalPolynomial::one();
    }
    let mut previous = RationalPolynomial::one();
    for k in 0..n - 1 {
        assert!(!m[k][k].is_zero(), "zero pivot");
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

/// Number of `i`-matchings by direct enumeration over edge subsets.
pub fn count_matchings_by_subsets(g: &Graph, i: usize) -> usize {
    let edges = g.edges();
    assert!(edges.len() <= 20, "subset oracle is exponential");
    (0u32..1 << edges.len())
        .filter(|mask| mask.count_ones() as usize == i)
        .filter(|mask| {
            let mut used = vec![false; g.order()];
            edges.iter().enumerate().all(|(b, &(u, v))| {
                if mask & (1 << b) == 0 {
                    return true;
                }
                let ok = !used[u] && !used[v];
                used[u] = true;
                used[v] = true;
                ok
            })
        })
        .count()
}

pub fn zero() -> BigRational {
    BigRational::zero()
}
