//! Simple and bipartite graphs, their degree sequences, degree enumerators
//! and bi-enumerators, and objective evaluation through inner products.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest vertex count for which objective values are guaranteed exact.
pub const MAX_OBJECTIVE_VERTICES: usize = 10_000;
/// Largest magnitude accepted for an objective entry.
pub const MAX_OBJECTIVE_ENTRY: i64 = 1 << 31;

/// A simple graph on the vertex set `{0, .., n-1}`.
///
/// Edges are stored as `(min, max)` pairs in lexicographic order, so two
/// graphs with the same edge set compare equal and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        bound: n,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Subgraph on the same vertex set keeping the edges selected by `keep`.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(idx, _)| keep(idx))
            .map(|(_, &e)| e)
            .collect();
        Graph { n: self.n, edges }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Entry `i` counts the vertices of degree `i`; the vector has length `n`.
    pub fn degree_enumerator(&self) -> Enumerator {
        let mut e = vec![0; self.n];
        for d in self.degree_sequence() {
            e[d] += 1;
        }
        Enumerator(e)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                what: "permutation",
                expected: self.n,
                got: perm.len(),
            });
        }
        Graph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }
}

/// A bipartite graph with `m` left vertices and `n` right vertices.
/// Edges are `(left, right)` pairs in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BipartiteGraph {
    m: usize,
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(
        m: usize,
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= m {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    bound: m,
                });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    bound: n,
                });
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(BipartiteGraph {
            m,
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn empty(m: usize, n: usize) -> Self {
        BipartiteGraph {
            m,
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(m: usize, n: usize) -> Self {
        let edges = (0..m).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
        BipartiteGraph { m, n, edges }
    }

    pub fn left_count(&self) -> usize {
        self.m
    }

    pub fn right_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> BipartiteGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(idx, _)| keep(idx))
            .map(|(_, &e)| e)
            .collect();
        BipartiteGraph {
            m: self.m,
            n: self.n,
            edges,
        }
    }

    /// Left degrees (length `m`, entries in `0..=n`) and right degrees
    /// (length `n`, entries in `0..=m`).
    pub fn degree_sequence(&self) -> (Vec<usize>, Vec<usize>) {
        let mut left = vec![0; self.m];
        let mut right = vec![0; self.n];
        for &(u, v) in &self.edges {
            left[u] += 1;
            right[v] += 1;
        }
        (left, right)
    }

    pub fn bi_enumerator(&self) -> BiEnumerator {
        let (left, right) = self.degree_sequence();
        let mut a = vec![0; self.n + 1];
        let mut c = vec![0; self.m + 1];
        for d in left {
            a[d] += 1;
        }
        for d in right {
            c[d] += 1;
        }
        BiEnumerator::new(a, c)
    }
}

/// Degree enumerator of an `n`-graph: entry `i` is the number of vertices of degree `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Enumerator(Vec<i64>);

impl Enumerator {
    pub fn new(counts: Vec<i64>) -> Self {
        Enumerator(counts)
    }

    /// `mult * 1_index` in dimension `len`.
    pub fn unit(len: usize, index: usize, mult: i64) -> Self {
        let mut v = vec![0; len];
        v[index] = mult;
        Enumerator(v)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, w: &[i64]) -> i64 {
        dot(&self.0, w)
    }
}

impl fmt::Display for Enumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Bi-enumerator `a ⊕ c` of a bipartite `(m, n)`-graph. `left` is `a`, of
/// length `n + 1`; `right` is `c`, of length `m + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BiEnumerator {
    pub left: Vec<i64>,
    pub right: Vec<i64>,
}

impl BiEnumerator {
    pub fn new(left: Vec<i64>, right: Vec<i64>) -> Self {
        BiEnumerator { left, right }
    }

    /// Concatenation `(a_0, .., a_n, c_0, .., c_m)`.
    pub fn flatten(&self) -> Vec<i64> {
        self.left.iter().chain(&self.right).copied().collect()
    }

    /// Inverse of [`flatten`](Self::flatten) given the left block length.
    pub fn from_flat(flat: &[i64], left_len: usize) -> Self {
        BiEnumerator {
            left: flat[..left_len].to_vec(),
            right: flat[left_len..].to_vec(),
        }
    }

    pub fn dot(&self, f: &[i64], g: &[i64]) -> i64 {
        dot(&self.left, f) + dot(&self.right, g)
    }
}

impl fmt::Display for BiEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.left)?;
        f.write_str("+")?;
        write_tuple(f, &self.right)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (idx, x) in v.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn check_objective(what: &'static str, f: &[i64], expected: usize) -> Result<()> {
    if f.len() != expected {
        return Err(Error::LengthMismatch {
            what,
            expected,
            got: f.len(),
        });
    }
    if let Some(&bad) = f.iter().find(|x| x.abs() > MAX_OBJECTIVE_ENTRY) {
        return Err(Error::ObjectiveOutOfRange(bad));
    }
    Ok(())
}

/// `f · e(G)`, cross-checked against `Σ_v f(deg(v))`.
pub fn objective_value(f: &[i64], g: &Graph) -> Result<i64> {
    if g.n > MAX_OBJECTIVE_VERTICES {
        return Err(Error::TooManyVertices(g.n));
    }
    check_objective("objective f", f, g.n)?;
    let via_enumerator = g.degree_enumerator().dot(f);
    let via_degrees: i64 = g.degree_sequence().iter().map(|&d| f[d]).sum();
    assert_eq!(via_enumerator, via_degrees);
    Ok(via_enumerator)
}

/// `<f ⊕ g, b(G)>` with `|f| = n + 1` and `|g| = m + 1`, cross-checked
/// against the per-vertex sum.
pub fn bi_objective_value(f: &[i64], g: &[i64], graph: &BipartiteGraph) -> Result<i64> {
    if graph.m + graph.n > MAX_OBJECTIVE_VERTICES {
        return Err(Error::TooManyVertices(graph.m + graph.n));
    }
    check_objective("left objective f", f, graph.n + 1)?;
    check_objective("right objective g", g, graph.m + 1)?;
    let via_enumerator = graph.bi_enumerator().dot(f, g);
    let (left, right) = graph.degree_sequence();
    let via_degrees: i64 =
        left.iter().map(|&d| f[d]).sum::<i64>() + right.iter().map(|&d| g[d]).sum::<i64>();
    assert_eq!(via_enumerator, via_degrees);
    Ok(via_enumerator)
}
