//! Simple undirected graphs, trees, and the named families used throughout
//! the crate.
//!
//! Vertices are always the dense range `0..n`. Edges are stored once, as
//! `(u, v)` with `u < v`, sorted lexicographically, so two graphs compare
//! equal exactly when they have the same labelled edge set.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::ops::Deref;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};

/// An undirected edge, normalized so that `.0 < .1`.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Endpoints may be given in either
    /// order; self-loops, duplicates and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut normalized: Vec<Edge> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge {u}-{v} out of range for n = {n}")));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("duplicate edge {}-{}", w[0].0, w[0].1)));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adjacency,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (sorted, `u < v`) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn isolated_vertices(&self) -> usize {
        self.adjacency.iter().filter(|a| a.is_empty()).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges).expect("union of valid graphs is valid")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A graph that has been checked to be connected with exactly `n - 1` edges.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tree(Graph);

impl Tree {
    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn as_graph(&self) -> &Graph {
        &self.0
    }
}

impl TryFrom<Graph> for Tree {
    type Error = Error;

    fn try_from(g: Graph) -> Result<Self> {
        if g.n == 0 {
            return Err(Error::NotATree("graph has no vertices".into()));
        }
        if g.size() != g.n - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices but {} edges",
                g.n,
                g.size()
            )));
        }
        if !g.is_connected() {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(Tree(g))
    }
}

impl Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

/// Branch lengths of a starlike tree: a center of degree `r >= 3` with a
/// path of `l_i` vertices hanging from it for each branch.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StarlikeSpec {
    branch_lengths: Vec<usize>,
}

impl StarlikeSpec {
    /// Lengths are sorted ascending; at least three branches, each of length >= 1.
    pub fn new(mut branch_lengths: Vec<usize>) -> Result<Self> {
        if branch_lengths.len() < 3 {
            return Err(invalid("a starlike tree needs at least 3 branches"));
        }
        if branch_lengths.contains(&0) {
            return Err(invalid("branch lengths must be positive"));
        }
        branch_lengths.sort_unstable();
        Ok(StarlikeSpec { branch_lengths })
    }

    pub fn branch_lengths(&self) -> &[usize] {
        &self.branch_lengths
    }

    /// Degree of the center.
    pub fn branches(&self) -> usize {
        self.branch_lengths.len()
    }

    pub fn order(&self) -> usize {
        1 + self.branch_lengths.iter().sum::<usize>()
    }

    /// Every starlike spec whose tree has exactly `n` vertices, in
    /// lexicographic order of the sorted branch lengths.
    pub fn all_with_order(n: usize) -> Vec<StarlikeSpec> {
        fn extend(rest: usize, min: usize, current: &mut Vec<usize>, out: &mut Vec<StarlikeSpec>) {
            if rest == 0 {
                if current.len() >= 3 {
                    out.push(StarlikeSpec {
                        branch_lengths: current.clone(),
                    });
                }
                return;
            }
            for l in min..=rest {
                current.push(l);
                extend(rest - l, l, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        if n >= 4 {
            extend(n - 1, 1, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for StarlikeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.branch_lengths.iter().map(|l| l.to_string()).collect();
        write!(f, "T({})", parts.join(","))
    }
}

/// `H_m(p, q)`: a path on `m` vertices with `p` pendant vertices on one end
/// and `q` on the other.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DoubleStarlikeSpec {
    m: usize,
    p: usize,
    q: usize,
}

impl DoubleStarlikeSpec {
    /// Requires `m >= 2` and `p, q >= 2`, so both path ends have degree above two.
    pub fn new(m: usize, p: usize, q: usize) -> Result<Self> {
        if m < 2 {
            return Err(invalid("the central path needs at least 2 vertices"));
        }
        if p < 2 || q < 2 {
            return Err(invalid(
                "both ends need at least 2 pendant vertices (degree > 2)",
            ));
        }
        Ok(DoubleStarlikeSpec { m, p, q })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn order(&self) -> usize {
        self.m + self.p + self.q
    }
}

impl fmt::Display for DoubleStarlikeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}({},{})", self.m, self.p, self.q)
    }
}

/// Path `P_n` with vertices labelled in path order.
pub fn build_path(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(invalid("a path needs at least one vertex"));
    }
    let g = Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?;
    Ok(Tree(g))
}

/// Vertex 0 is the center; branches are laid out consecutively in the
/// (sorted) order of the spec, each starting next to the center.
pub fn build_starlike(spec: &StarlikeSpec) -> Tree {
    let mut edges = Vec::with_capacity(spec.order() - 1);
    let mut next = 1;
    for &len in spec.branch_lengths() {
        edges.push((0, next));
        for v in next + 1..next + len {
            edges.push((v - 1, v));
        }
        next += len;
    }
    Tree(Graph::from_edges(spec.order(), edges).expect("starlike construction is valid"))
}

/// Path vertices are `0..m`; the `p` pendants hang off vertex 0 and the `q`
/// pendants off vertex `m - 1`.
pub fn build_double_starlike(spec: &DoubleStarlikeSpec) -> Tree {
    let DoubleStarlikeSpec { m, p, q } = *spec;
    let edges = (1..m)
        .map(|v| (v - 1, v))
        .chain((m..m + p).map(|v| (0, v)))
        .chain((m + p..m + p + q).map(|v| (m - 1, v)));
    Tree(Graph::from_edges(m + p + q, edges).expect("double starlike construction is valid"))
}

/// Classical graph families, conventionally labelled.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// `S_n`: vertex 0 joined to `n - 1` leaves.
    Star(usize),
    /// `C_n`, `n >= 3`, vertices in cyclic order.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{p,q}` with parts `0..p` and `p..p+q`.
    CompleteBipartite(usize, usize),
}

pub fn build_family(family: Family) -> Result<Graph> {
    match family {
        Family::Star(n) => {
            if n == 0 {
                return Err(invalid("a star needs at least one vertex"));
            }
            Graph::from_edges(n, (1..n).map(|v| (0, v)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("a cycle needs at least 3 vertices"));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::Complete(n) => {
            if n == 0 {
                return Err(invalid("a complete graph needs at least one vertex"));
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite(p, q) => {
            if p == 0 || q == 0 {
                return Err(invalid("both parts of K_{p,q} must be non-empty"));
            }
            Graph::from_edges(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
        }
    }
}

/// Uniformly random labelled tree on `n` vertices.
///
/// The Prüfer sequence is drawn from a ChaCha8 stream seeded with
/// `seed` via `SeedableRng::seed_from_u64`, so the result is a pure function
/// of `(n, seed)` on every platform.
pub fn random_tree(n: usize, seed: u64) -> Result<Tree> {
    if n == 0 {
        return Err(invalid("a tree needs at least one vertex"));
    }
    if n <= 2 {
        return build_path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sequence: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(Tree(decode_prufer(n, &sequence)))
}

fn decode_prufer(n: usize, sequence: &[usize]) -> Graph {
    let mut remaining = vec![1usize; n];
    for &v in sequence {
        remaining[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in sequence {
        let Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, v));
        remaining[v] -= 1;
        if remaining[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a valid tree")
}
