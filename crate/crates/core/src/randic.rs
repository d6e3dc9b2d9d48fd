//! Matchings and the general Randić indices for matching.
//!
//! For a graph with edge strengths `s(uv) = d_u d_v`, the index of order `p`
//! at exponent `α` sums `∏ s(e)^α` over every set of `p` pairwise disjoint
//! edges. Order 0 is 1 for any graph with a vertex and 0 for the graph with
//! no vertices.
//!
//! Two routes compute the full index vector: exhaustive enumeration, which
//! works on any small graph and serves as the reference, and a rooted-tree
//! dynamic program that is exact and fast on trees of any size.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{invalid, Error, Result};
use crate::graph::{Edge, Graph, Tree};

/// Largest edge count accepted by the enumeration routines.
pub const ENUMERATION_EDGE_LIMIT: usize = 64;

/// The exponent `α` applied to edge strengths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exponent {
    Integer(i32),
    Real(f64),
}

impl Exponent {
    /// The exponent as an integer, if it is integral.
    pub fn as_integer(self) -> Option<i32> {
        match self {
            Exponent::Integer(a) => Some(a),
            Exponent::Real(x)
                if x.fract() == 0.0 && x >= i32::MIN as f64 && x <= i32::MAX as f64 =>
            {
                Some(x as i32)
            }
            Exponent::Real(_) => None,
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Exponent::Integer(a) => a as f64,
            Exponent::Real(x) => x,
        }
    }

    fn exact(self) -> Result<i32> {
        self.as_integer()
            .ok_or_else(|| Error::Mode(self.as_f64().to_string()))
    }
}

impl From<i32> for Exponent {
    fn from(a: i32) -> Self {
        Exponent::Integer(a)
    }
}

impl From<f64> for Exponent {
    fn from(x: f64) -> Self {
        Exponent::Real(x)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Integer(a) => write!(f, "{a}"),
            Exponent::Real(x) => write!(f, "{x}"),
        }
    }
}

/// `R_α^(0), ..., R_α^(k)` for a graph with matching number `k`.
///
/// `V` is [`BigRational`] for exact results and `f64` for numeric ones.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchingIndexVector<V = BigRational> {
    alpha: Exponent,
    values: Vec<V>,
}

impl<V> MatchingIndexVector<V> {
    /// Wraps precomputed values; the matching number is `values.len() - 1`.
    pub fn new(alpha: Exponent, values: Vec<V>) -> Self {
        assert!(!values.is_empty(), "an index vector has at least R^(0)");
        MatchingIndexVector { alpha, values }
    }

    pub fn alpha(&self) -> Exponent {
        self.alpha
    }

    /// Matching number.
    pub fn k(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn into_values(self) -> Vec<V> {
        self.values
    }
}

impl<V: Clone + Zero> MatchingIndexVector<V> {
    /// `R^(p)`, zero for orders beyond the matching number.
    pub fn get(&self, p: usize) -> V {
        self.values.get(p).cloned().unwrap_or_else(V::zero)
    }
}

/// Product of the endpoint degrees.
pub fn edge_strength(g: &Graph, (u, v): Edge) -> Result<u64> {
    if !g.has_edge(u, v) {
        return Err(invalid(format!("{u}-{v} is not an edge")));
    }
    Ok((g.degree(u) * g.degree(v)) as u64)
}

fn check_capacity(g: &Graph) -> Result<()> {
    if g.size() > ENUMERATION_EDGE_LIMIT {
        return Err(Error::Capacity {
            edges: g.size(),
            limit: ENUMERATION_EDGE_LIMIT,
        });
    }
    Ok(())
}

/// Calls `visit` once for every matching (including the empty one), in
/// lexicographic order of the sorted edge list.
fn for_each_matching(g: &Graph, mut visit: impl FnMut(&[Edge])) {
    fn go(
        edges: &[Edge],
        start: usize,
        used: &mut [bool],
        current: &mut Vec<Edge>,
        visit: &mut dyn FnMut(&[Edge]),
    ) {
        visit(current);
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            current.push((u, v));
            go(edges, i + 1, used, current, visit);
            current.pop();
            used[u] = false;
            used[v] = false;
        }
    }
    let mut used = vec![false; g.order()];
    go(g.edges(), 0, &mut used, &mut Vec::new(), &mut visit);
}

/// Every set of `p` pairwise disjoint edges, each listed in sorted order.
pub fn enumerate_matchings(g: &Graph, p: usize) -> Result<Vec<Vec<Edge>>> {
    check_capacity(g)?;
    let mut out = Vec::new();
    for_each_matching(g, |m| {
        if m.len() == p {
            out.push(m.to_vec());
        }
    });
    Ok(out)
}

/// Size of a maximum matching. Forests use the leaf-greedy rule, which is
/// optimal on acyclic graphs; anything else falls back to enumeration.
pub fn matching_number(g: &Graph) -> Result<usize> {
    if is_forest(g) {
        return Ok(forest_matching_number(g));
    }
    check_capacity(g)?;
    let mut best = 0;
    for_each_matching(g, |m| best = best.max(m.len()));
    Ok(best)
}

fn is_forest(g: &Graph) -> bool {
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    g.edges().iter().all(|&(u, v)| {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
        a != b
    })
}

// Post-order sweep: match a vertex to its parent whenever both are free.
fn forest_matching_number(g: &Graph) -> usize {
    let n = g.order();
    let mut visited = vec![false; n];
    let mut matched = vec![false; n];
    let mut count = 0;
    for root in 0..n {
        if visited[root] {
            continue;
        }
        let (order, parent) = bfs_order(g, root, &mut visited);
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                if !matched[v] && !matched[p] {
                    matched[v] = true;
                    matched[p] = true;
                    count += 1;
                }
            }
        }
    }
    count
}

fn bfs_order(g: &Graph, root: usize, visited: &mut [bool]) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut parent = vec![None; g.order()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([root]);
    visited[root] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                visited[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    (order, parent)
}

fn exact_weight(alpha: i32) -> impl Fn(u64) -> BigRational {
    move |s| BigRational::from_integer(BigInt::from(s)).pow(alpha)
}

fn float_weight(alpha: f64) -> impl Fn(u64) -> f64 {
    move |s| (s as f64).powf(alpha)
}

fn bruteforce<V>(
    g: &Graph,
    alpha: Exponent,
    weight: impl Fn(u64) -> V,
) -> Result<MatchingIndexVector<V>>
where
    V: Clone + Zero + One,
    for<'a> &'a V: Mul<&'a V, Output = V>,
{
    check_capacity(g)?;
    if g.order() == 0 {
        return Ok(MatchingIndexVector::new(alpha, vec![V::zero()]));
    }
    let strengths: Vec<V> = g
        .edges()
        .iter()
        .map(|&(u, v)| weight((g.degree(u) * g.degree(v)) as u64))
        .collect();
    let index_of = |e: &Edge| g.edges().binary_search(e).expect("edge of g");
    let mut sums: Vec<V> = vec![V::zero(); g.order() / 2 + 1];
    let mut k = 0;
    for_each_matching(g, |m| {
        let product = m
            .iter()
            .fold(V::one(), |acc, e| &acc * &strengths[index_of(e)]);
        sums[m.len()] = sums[m.len()].clone() + product;
        k = k.max(m.len());
    });
    sums.truncate(k + 1);
    Ok(MatchingIndexVector::new(alpha, sums))
}

/// Exact indices by enumerating every matching. Requires an integer exponent.
pub fn randic_indices_bruteforce(
    g: &Graph,
    alpha: impl Into<Exponent>,
) -> Result<MatchingIndexVector> {
    let alpha = alpha.into();
    let a = alpha.exact()?;
    bruteforce(g, alpha, exact_weight(a))
}

/// Floating-point indices by enumeration; any real exponent.
pub fn randic_indices_bruteforce_numeric(
    g: &Graph,
    alpha: f64,
) -> Result<MatchingIndexVector<f64>> {
    bruteforce(g, Exponent::Real(alpha), float_weight(alpha))
}

fn mul_truncated<V>(a: &[V], b: &[V], len: usize) -> Vec<V>
where
    V: Clone + Zero,
    for<'x> &'x V: Mul<&'x V, Output = V>,
{
    let mut out = vec![V::zero(); (a.len() + b.len() - 1).min(len)];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len.saturating_sub(i)) {
            out[i + j] = out[i + j].clone() + x * y;
        }
    }
    out
}

fn add_padded<V: Clone + Zero>(a: &[V], b: &[V]) -> Vec<V> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(V::zero);
            let y = b.get(i).cloned().unwrap_or_else(V::zero);
            x + y
        })
        .collect()
}

// For each vertex v, two generating polynomials in the matching size over
// the subtree at v: `free` counts matchings leaving v uncovered, `covered`
// those that use an edge from v to one of its children.
fn tree_dp<V>(t: &Tree, alpha: Exponent, weight: impl Fn(u64) -> V) -> MatchingIndexVector<V>
where
    V: Clone + Zero + One + Add<Output = V>,
    for<'a> &'a V: Mul<&'a V, Output = V>,
{
    let n = t.order();
    let k = forest_matching_number(t);
    let len = n / 2 + 1;
    let mut visited = vec![false; n];
    let (order, parent) = bfs_order(t, 0, &mut visited);

    let mut free: Vec<Vec<V>> = vec![vec![V::one()]; n];
    let mut covered: Vec<Vec<V>> = vec![vec![V::zero()]; n];
    for &c in order.iter().rev() {
        let Some(v) = parent[c] else { continue };
        let child_free = std::mem::take(&mut free[c]);
        let child_covered = std::mem::take(&mut covered[c]);
        let child_total = add_padded(&child_free, &child_covered);
        let w = weight((t.degree(v) * t.degree(c)) as u64);

        let joined: Vec<V> = mul_truncated(&free[v], &child_free, len)
            .into_iter()
            .map(|x| &x * &w)
            .collect();
        let mut new_covered = mul_truncated(&covered[v], &child_total, len);
        new_covered = add_padded(&new_covered, &shift_truncated(joined, len));
        free[v] = mul_truncated(&free[v], &child_total, len);
        covered[v] = new_covered;
    }
    let mut values = add_padded(&free[0], &covered[0]);
    values.resize(k + 1, V::zero());
    MatchingIndexVector::new(alpha, values)
}

fn shift_truncated<V: Clone + Zero>(mut poly: Vec<V>, len: usize) -> Vec<V> {
    poly.insert(0, V::zero());
    poly.truncate(len);
    poly
}

/// Exact indices of a tree in `O(n·k)` polynomial-coefficient operations.
/// Requires an integer exponent.
pub fn randic_indices_tree(t: &Tree, alpha: impl Into<Exponent>) -> Result<MatchingIndexVector> {
    let alpha = alpha.into();
    let a = alpha.exact()?;
    Ok(tree_dp(t, alpha, exact_weight(a)))
}

pub fn randic_indices_tree_numeric(t: &Tree, alpha: f64) -> MatchingIndexVector<f64> {
    tree_dp(t, Exponent::Real(alpha), float_weight(alpha))
}

/// Second Zagreb index, the sum of edge strengths.
pub fn zagreb2(g: &Graph) -> BigRational {
    let total: u64 = g
        .edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) * g.degree(v)) as u64)
        .sum();
    BigRational::from_integer(BigInt::from(total))
}
