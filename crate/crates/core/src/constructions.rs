//! Explicit graph families realizing the extremal (bi-)enumerators.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{BipartiteGraph, Graph};

/// Parameters of an `r`-regular `n`-graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularSpec {
    pub n: usize,
    pub r: usize,
}

impl RegularSpec {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n == 0 || r >= n {
            return Err(invalid(format!(
                "degree r={r} must lie in [0, n-1] for n={n}"
            )));
        }
        if n % 2 == 1 && r % 2 == 1 {
            return Err(invalid(format!(
                "no {r}-regular graph on {n} vertices: n and r are both odd"
            )));
        }
        Ok(RegularSpec { n, r })
    }
}

/// Parameters of the almost regular graph on odd `n` where every vertex
/// has odd degree `r` except vertex `n-1`, which has even degree `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NearRegularSpec {
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

impl NearRegularSpec {
    pub fn new(n: usize, r: usize, s: usize) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(invalid(format!("near-regular graphs need odd n, got {n}")));
        }
        if r.is_multiple_of(2) || r == 0 || r + 1 >= n {
            return Err(invalid(format!(
                "near-regular degree r={r} must be odd with 0 < r < n-1 for n={n}"
            )));
        }
        if s % 2 == 1 || s >= n {
            return Err(invalid(format!(
                "special degree s={s} must be even with 0 <= s <= n-1 for n={n}"
            )));
        }
        Ok(NearRegularSpec { n, r, s })
    }
}

/// Parameters of a subgraph of `K_{2,n}`: left degrees `i <= j` and
/// neighborhood intersection size `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BipartiteSpec {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl BipartiteSpec {
    pub fn new(n: usize, i: usize, j: usize, k: usize) -> Result<Self> {
        if i > j || j > n {
            return Err(invalid(format!(
                "need 0 <= i <= j <= n, got i={i}, j={j}, n={n}"
            )));
        }
        let lo = (i + j).saturating_sub(n);
        if k < lo || k > i {
            return Err(invalid(format!(
                "intersection k={k} must lie in [{lo}, {i}] for i={i}, j={j}, n={n}"
            )));
        }
        Ok(BipartiteSpec { n, i, j, k })
    }

    /// Smallest feasible intersection size, `max(0, i + j - n)`.
    pub fn min_intersection(&self) -> usize {
        (self.i + self.j).saturating_sub(self.n)
    }
}

/// Circulant edges `{i, i + j mod n}` for `j = 1..=half`.
fn circulant_edges(n: usize, half: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (1..=half).map(move |j| (i, (i + j) % n)))
        .collect()
}

/// Perfect matching `{i, n/2 + i}` on even `n`.
fn opposite_matching(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n / 2).map(move |i| (i, n / 2 + i))
}

fn regular_edges(spec: RegularSpec) -> Vec<(usize, usize)> {
    let mut edges = circulant_edges(spec.n, spec.r / 2);
    if spec.r % 2 == 1 {
        edges.extend(opposite_matching(spec.n));
    }
    edges
}

/// `G_n(r)`: the circulant graph joining each vertex to its `r/2` nearest
/// neighbours on either side, plus the opposite matching when `r` is odd.
pub fn build_regular(spec: RegularSpec) -> Graph {
    Graph::new(spec.n, regular_edges(spec)).expect("circulant edges are simple")
}

/// `G_n(r, s)`: `G_{n-1}(r)` plus an isolated vertex `n-1`, after which the
/// first `s/2` opposite-matching edges are rerouted through `n-1`.
pub fn build_near_regular(spec: NearRegularSpec) -> Graph {
    let NearRegularSpec { n, r, s } = spec;
    let base = RegularSpec { n: n - 1, r };
    let half = (n - 1) / 2;
    let removed: Vec<(usize, usize)> = (0..s / 2).map(|i| (i, half + i)).collect();
    let mut edges: Vec<(usize, usize)> = regular_edges(base)
        .into_iter()
        .filter(|e| !removed.contains(e))
        .collect();
    for &(a, b) in &removed {
        edges.push((a, n - 1));
        edges.push((b, n - 1));
    }
    Graph::new(n, edges).expect("near-regular edges are simple")
}

/// `G_n(i, j, k) ⊆ K_{2,n}` with `N(u_1) = {0..i}` and
/// `N(u_2) = {i-k .. i-k+j}`.
pub fn build_bipartite_2n(spec: BipartiteSpec) -> BipartiteGraph {
    let BipartiteSpec { n, i, j, k } = spec;
    let first = (0..i).map(|v| (0, v));
    let second = (i - k..i - k + j).map(|v| (1, v));
    BipartiteGraph::new(2, n, first.chain(second)).expect("window neighborhoods fit in [0, n)")
}

/// Graph on `2k + 1` vertices whose first `k` enumerator entries encode the
/// strictly increasing choice `1 <= s_1 < .. < s_k <= 2k`.
///
/// Odd labels form `L`, even labels form `R`. `L` is cut into consecutive
/// blocks `L_i` of size `s_{i+1} - s_i - 1` (with `s_0 = 0`,
/// `s_{k+1} = 2k + 1`); each vertex of `L_i` is joined to the `i` smallest
/// vertices of `R`, and `R` is made a clique.
pub fn build_choice_graph(s: &[usize]) -> Result<Graph> {
    let k = s.len();
    if k == 0 {
        return Err(invalid("the choice sequence must be nonempty"));
    }
    if s[0] < 1 || s[k - 1] > 2 * k || s.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid(format!(
            "choice {s:?} must be strictly increasing within [1, {}]",
            2 * k
        )));
    }
    let left: Vec<usize> = (0..k).map(|t| 2 * t + 1).collect();
    let right: Vec<usize> = (0..=k).map(|t| 2 * t).collect();
    let mut bounds = Vec::with_capacity(k + 2);
    bounds.push(0);
    bounds.extend_from_slice(s);
    bounds.push(2 * k + 1);

    let mut edges = Vec::new();
    let mut next = left.iter();
    for (block, w) in bounds.windows(2).enumerate() {
        let size = w[1] - w[0] - 1;
        for &v in next.by_ref().take(size) {
            edges.extend(right[..block].iter().map(|&u| (v, u)));
        }
    }
    for (idx, &a) in right.iter().enumerate() {
        edges.extend(right[idx + 1..].iter().map(|&b| (a, b)));
    }
    Graph::new(2 * k + 1, edges)
}

/// Prefix `(e_0, .., e_{k-1})` with `e_i = s_{i+1} - s_i - 1`.
pub fn choice_prefix(s: &[usize]) -> Vec<i64> {
    let mut prev = 0;
    s.iter()
        .map(|&x| {
            let e = (x - prev - 1) as i64;
            prev = x;
            e
        })
        .collect()
}
