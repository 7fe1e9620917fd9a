//! Degree sequence optimization over `K_n` and `K_{2,n}` through the
//! closed-form vertex lists, and exhaustive optimizers over arbitrary host
//! graphs used as correctness oracles.

use serde::Serialize;

use crate::constructions::{build_near_regular, build_regular, NearRegularSpec, RegularSpec};
use crate::error::{invalid, Error, Result};
use crate::extremal::{self, VertexParams};
use crate::graph::{check_objective, BipartiteGraph, Graph};
use crate::subsets::{SubsetVisitor, WalkPlan};

/// Optimal value with a subgraph attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptResult<G> {
    pub value: i64,
    pub witness: G,
    /// Construction parameters of the witness, when it came from a closed form.
    pub params: Option<VertexParams>,
}

/// How [`optimize_complete_with`] selects the optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompleteStrategy {
    /// Direct selection from the largest entry and the largest even-index entry.
    #[default]
    Fast,
    /// Evaluate every vertex of the enumerator polytope.
    VertexScan,
}

pub const MAX_BRUTE_FORCE_EDGES: usize = 25;
pub const MAX_BRUTE_FORCE_COMPLETE: usize = 8;

/// First index attaining the maximum over `indices`.
fn argmax(f: &[i64], indices: impl Iterator<Item = usize>) -> usize {
    let mut best: Option<usize> = None;
    for i in indices {
        if best.is_none_or(|b| f[i] > f[b]) {
            best = Some(i);
        }
    }
    best.expect("nonempty index range")
}

pub fn optimize_complete(n: usize, f: &[i64]) -> Result<OptResult<Graph>> {
    optimize_complete_with(n, f, CompleteStrategy::Fast)
}

pub fn optimize_complete_with(
    n: usize,
    f: &[i64],
    strategy: CompleteStrategy,
) -> Result<OptResult<Graph>> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    check_objective("objective f", f, n)?;
    match strategy {
        CompleteStrategy::Fast => Ok(fast_complete(n, f)),
        CompleteStrategy::VertexScan => {
            let vertices = extremal::vertices_complete(n)?;
            let best = vertices
                .into_iter()
                .map(|v| (v.point.dot(f), v))
                .reduce(|a, b| if b.0 > a.0 { b } else { a })
                .expect("every n has a vertex");
            Ok(OptResult {
                value: best.0,
                witness: best.1.witness,
                params: Some(best.1.params),
            })
        }
    }
}

fn fast_complete(n: usize, f: &[i64]) -> OptResult<Graph> {
    let r = argmax(f, 0..n);
    let s = argmax(f, (0..n).step_by(2));
    let nn = n as i64;
    if n.is_multiple_of(2) {
        OptResult {
            value: nn * f[r],
            witness: build_regular(RegularSpec { n, r }),
            params: Some(VertexParams::Regular { r }),
        }
    } else if f[s] == f[r] {
        OptResult {
            value: nn * f[s],
            witness: build_regular(RegularSpec { n, r: s }),
            params: Some(VertexParams::Regular { r: s }),
        }
    } else {
        // r is odd here, and r < n - 1 since n - 1 is even
        OptResult {
            value: (nn - 1) * f[r] + f[s],
            witness: build_near_regular(NearRegularSpec { n, r, s }),
            params: Some(VertexParams::NearRegular { r, s }),
        }
    }
}

/// Best vertex of the `K_{2,n}` bi-enumerator polytope, first in canonical order on ties.
pub fn optimize_k2n(n: usize, f: &[i64], g: &[i64]) -> Result<OptResult<BipartiteGraph>> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    check_objective("left objective f", f, n + 1)?;
    check_objective("right objective g", g, 3)?;
    let best = extremal::b2_vertex_params(n)
        .into_iter()
        .map(|p| (extremal::b2n_point(p).dot(f, g), p))
        .reduce(|a, b| if b.0 > a.0 { b } else { a })
        .expect("every n has a vertex");
    let (value, spec) = best;
    Ok(OptResult {
        value,
        witness: crate::constructions::build_bipartite_2n(spec),
        params: Some(VertexParams::Bipartite {
            i: spec.i,
            j: spec.j,
            k: spec.k,
        }),
    })
}

struct BestValue<'a> {
    weights: &'a [i64],
    value: i64,
    best: Option<(i64, u64)>,
}

impl SubsetVisitor for BestValue<'_> {
    fn shift(&mut self, from: usize, to: usize) {
        self.value += self.weights[to] - self.weights[from];
    }

    fn visit(&mut self, _order: u64, mask: u64) {
        let cand = (self.value, mask);
        if self.best.is_none_or(|b| better(cand, b)) {
            self.best = Some(cand);
        }
    }
}

/// Higher value wins; equal values go to the smaller subset mask.
fn better(a: (i64, u64), b: (i64, u64)) -> bool {
    a.0 > b.0 || (a.0 == b.0 && a.1 < b.1)
}

/// Exhaustive maximum of `Σ weights[slot(v)]`; returns the value and the
/// smallest subset mask attaining it.
fn brute_force(endpoints: &[(usize, usize)], base: &[usize], weights: &[i64]) -> (i64, u64) {
    let initial: i64 = base.iter().map(|&b| weights[b]).sum();
    let plan = WalkPlan { endpoints, base };
    plan.walk(|| BestValue {
        weights,
        value: initial,
        best: None,
    })
    .into_iter()
    .filter_map(|v| v.best)
    .reduce(|a, b| if better(b, a) { b } else { a })
    .expect("the empty subgraph is always visited")
}

fn subgraph_optimum(h: &Graph, f: &[i64]) -> Result<OptResult<Graph>> {
    check_objective("objective f", f, h.vertex_count())?;
    let base = vec![0; h.vertex_count()];
    let (value, mask) = brute_force(h.edges(), &base, f);
    Ok(OptResult {
        value,
        witness: h.edge_subgraph(|e| mask >> e & 1 == 1),
        params: None,
    })
}

/// Exhaustive optimum over all `2^C(n,2)` subgraphs of `K_n`, `n <= 8`.
pub fn brute_force_complete(n: usize, f: &[i64]) -> Result<OptResult<Graph>> {
    if n > MAX_BRUTE_FORCE_COMPLETE {
        return Err(Error::TooLarge {
            what: "complete graph order for brute force",
            limit: MAX_BRUTE_FORCE_COMPLETE,
            got: n,
        });
    }
    subgraph_optimum(&Graph::complete(n), f)
}

/// Exhaustive optimum of `f · e(G)` over subgraphs `G ⊆ H`.
pub fn brute_force_subgraph(h: &Graph, f: &[i64]) -> Result<OptResult<Graph>> {
    if h.edge_count() > MAX_BRUTE_FORCE_EDGES {
        return Err(Error::TooLarge {
            what: "host graph edge count",
            limit: MAX_BRUTE_FORCE_EDGES,
            got: h.edge_count(),
        });
    }
    subgraph_optimum(h, f)
}

/// Exhaustive optimum of `<f ⊕ g, b(G)>` over subgraphs `G ⊆ H`.
pub fn brute_force_bipartite(
    h: &BipartiteGraph,
    f: &[i64],
    g: &[i64],
) -> Result<OptResult<BipartiteGraph>> {
    if h.edge_count() > MAX_BRUTE_FORCE_EDGES {
        return Err(Error::TooLarge {
            what: "host graph edge count",
            limit: MAX_BRUTE_FORCE_EDGES,
            got: h.edge_count(),
        });
    }
    let (m, n) = (h.left_count(), h.right_count());
    check_objective("left objective f", f, n + 1)?;
    check_objective("right objective g", g, m + 1)?;
    let endpoints: Vec<(usize, usize)> = h.edges().iter().map(|&(u, v)| (u, m + v)).collect();
    let base: Vec<usize> = (0..m).map(|_| 0).chain((0..n).map(|_| n + 1)).collect();
    let weights: Vec<i64> = f.iter().chain(g).copied().collect();
    let (value, mask) = brute_force(&endpoints, &base, &weights);
    Ok(OptResult {
        value,
        witness: h.edge_subgraph(|e| mask >> e & 1 == 1),
        params: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bi_objective_value, objective_value};

    #[test]
    fn fast_complete_examples() {
        let r = optimize_complete(7, &[0, 0, 0, 0, 1, 0, 0]).unwrap();
        assert_eq!(r.value, 7);
        assert_eq!(r.params, Some(VertexParams::Regular { r: 4 }));
        assert_eq!(r.witness, build_regular(RegularSpec { n: 7, r: 4 }));

        let r = optimize_complete(7, &[0, 0, 1, 2, 0, 0, 0]).unwrap();
        assert_eq!(r.value, 13);
        assert_eq!(r.params, Some(VertexParams::NearRegular { r: 3, s: 2 }));
        assert_eq!(
            objective_value(&[0, 0, 1, 2, 0, 0, 0], &r.witness).unwrap(),
            13
        );

        for n in 1..9 {
            assert_eq!(optimize_complete(n, &vec![0; n]).unwrap().value, 0);
        }
        assert!(optimize_complete(3, &[1, 2]).is_err());
        assert!(optimize_complete(0, &[]).is_err());
    }

    #[test]
    fn scan_agrees_with_fast_path() {
        let f = [3, -1, 4, 1, -5, 9, 2, 6, 5];
        for n in 1..=f.len() {
            let fast = optimize_complete(n, &f[..n]).unwrap();
            let scan = optimize_complete_with(n, &f[..n], CompleteStrategy::VertexScan).unwrap();
            assert_eq!(fast.value, scan.value, "n={n}");
        }
    }

    #[test]
    fn k2n_examples() {
        let r = optimize_k2n(6, &[0; 7], &[0, 0, 1]).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.witness, BipartiteGraph::complete(2, 6));

        let r = optimize_k2n(6, &[0; 7], &[1, 0, 0]).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.witness.edge_count(), 0);

        let big = 76;
        let r = optimize_k2n(5, &[0, 0, big, 0, big, 0], &[0, 2, 1]).unwrap();
        assert_eq!(r.value, 161);
        assert_eq!(r.params, Some(VertexParams::Bipartite { i: 2, j: 4, k: 1 }));
        assert!(optimize_k2n(5, &[0; 5], &[0; 3]).is_err());
        assert!(optimize_k2n(5, &[0; 6], &[0; 2]).is_err());
    }

    #[test]
    fn brute_force_complete_examples() {
        let r = brute_force_complete(3, &[0, 0, 1]).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness, Graph::complete(3));
        let r = brute_force_complete(7, &[0, 0, 0, 0, 1, 0, 0]).unwrap();
        assert_eq!(r.value, 7);
        let r = brute_force_complete(4, &[1, 0, 0, 0]).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.witness.edge_count(), 0);
        assert!(brute_force_complete(9, &[0; 9]).is_err());
    }

    #[test]
    fn brute_force_subgraph_examples() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let r = brute_force_subgraph(&path, &[0, 1, 0]).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(objective_value(&[0, 1, 0], &r.witness).unwrap(), 2);

        let r = brute_force_subgraph(&Graph::empty(4), &[5, 1, 1, 1]).unwrap();
        assert_eq!(r.value, 20);

        let r = brute_force_subgraph(&Graph::complete(4), &[3, 0, 0, 4]).unwrap();
        assert!(r.value >= 13);

        let big = Graph::complete(8);
        assert!(matches!(
            brute_force_subgraph(&big, &[0; 8]),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn brute_force_bipartite_examples() {
        let r =
            brute_force_bipartite(&BipartiteGraph::complete(2, 6), &[0; 7], &[0, 0, 1]).unwrap();
        assert_eq!(r.value, 6);
        for k in 0..=4 {
            let mut f = vec![0; 5];
            f[k] = 1;
            let r = brute_force_bipartite(&BipartiteGraph::complete(1, 4), &f, &[0, 0]).unwrap();
            assert_eq!(r.value, 1);
        }
        let h = BipartiteGraph::complete(2, 2);
        let r = brute_force_bipartite(&h, &[0, 0, 1], &[0, 0, 1]).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(
            bi_objective_value(&[0, 0, 1], &[0, 0, 1], &r.witness).unwrap(),
            4
        );
    }
}
