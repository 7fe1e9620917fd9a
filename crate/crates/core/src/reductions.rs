//! The two hardness reductions: nonempty cubic subgraphs via a single
//! degree objective, and exact cover by 3-sets via bipartite bi-optimization.
//! Both are wired to the exhaustive optimizers only.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::optimize::{brute_force_bipartite, brute_force_subgraph, MAX_BRUTE_FORCE_EDGES};

/// `f(0) = n - 1`, `f(3) = n`, zero elsewhere, on `0..n`.
pub fn cubic_objective(n: usize) -> Result<Vec<i64>> {
    if n < 4 {
        return Err(invalid(format!("cubic objective needs n >= 4, got {n}")));
    }
    let mut f = vec![0; n];
    f[0] = n as i64 - 1;
    f[3] = n as i64;
    Ok(f)
}

/// Score a subgraph must reach to contain a nonempty cubic part: `n^2 - n + 1`.
pub fn cubic_threshold(n: usize) -> i64 {
    let n = n as i64;
    n * n - n + 1
}

/// Whether `H` has a nonempty subgraph with every degree in `{0, 3}`,
/// decided by comparing the exhaustive optimum against the threshold.
pub fn decide_cubic_subgraph(h: &Graph) -> Result<bool> {
    let n = h.vertex_count();
    if n < 4 {
        // no vertex can reach degree 3
        return Ok(false);
    }
    let f = cubic_objective(n)?;
    Ok(brute_force_subgraph(h, &f)?.value >= cubic_threshold(n))
}

/// Exact cover by 3-sets: `subsets` of the ground set `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3CInstance {
    pub n: usize,
    pub subsets: Vec<[usize; 3]>,
}

impl X3CInstance {
    pub fn new(n: usize, subsets: Vec<[usize; 3]>) -> Result<Self> {
        let inst = X3CInstance { n, subsets };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        for s in &self.subsets {
            if s.iter().any(|&x| x >= self.n) || s[0] == s[1] || s[0] == s[2] || s[1] == s[2] {
                return Err(invalid(format!(
                    "subset {s:?} must hold 3 distinct elements of [0, {})",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// The reduction output: host graph and left/right objectives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct X3CReduction {
    pub graph: BipartiteGraph,
    pub f: Vec<i64>,
    pub g: Vec<i64>,
}

/// Left vertex per subset joined to its three elements; `f(x) = x(x-3)` on
/// `0..=n` and `g(x) = -(x-1)^2` on `0..=m`. The bi-optimum is at most zero,
/// with equality exactly when some subsets partition the ground set.
pub fn x3c_to_bipartite(inst: &X3CInstance) -> Result<X3CReduction> {
    inst.validate()?;
    if !inst.n.is_multiple_of(3) {
        return Err(invalid(format!(
            "ground set size {} is not divisible by 3",
            inst.n
        )));
    }
    let m = inst.subsets.len();
    let graph = BipartiteGraph::new(
        m,
        inst.n,
        inst.subsets
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v))),
    )?;
    let f = (0..=inst.n as i64).map(|x| x * (x - 3)).collect();
    let g = (0..=m as i64).map(|x| -(x - 1) * (x - 1)).collect();
    Ok(X3CReduction { graph, f, g })
}

pub fn decide_x3c(inst: &X3CInstance) -> Result<bool> {
    if 3 * inst.subsets.len() > MAX_BRUTE_FORCE_EDGES {
        return Err(Error::TooLarge {
            what: "X3C edge count 3m",
            limit: MAX_BRUTE_FORCE_EDGES,
            got: 3 * inst.subsets.len(),
        });
    }
    let red = x3c_to_bipartite(inst)?;
    Ok(brute_force_bipartite(&red.graph, &red.f, &red.g)?.value == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_objective_examples() {
        assert_eq!(cubic_objective(7).unwrap(), vec![6, 0, 0, 7, 0, 0, 0]);
        assert_eq!(cubic_objective(4).unwrap(), vec![3, 0, 0, 4]);
        assert_eq!(cubic_objective(5).unwrap(), vec![4, 0, 0, 5, 0]);
        assert!(cubic_objective(3).is_err());
    }

    #[test]
    fn cubic_decisions() {
        assert!(decide_cubic_subgraph(&Graph::complete(4)).unwrap());
        let path = Graph::new(5, (0..4).map(|i| (i, i + 1))).unwrap();
        assert!(!decide_cubic_subgraph(&path).unwrap());
        let k33 = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert!(decide_cubic_subgraph(&k33).unwrap());
    }

    #[test]
    fn x3c_objectives() {
        let inst = X3CInstance::new(6, vec![[0, 1, 2], [3, 4, 5], [1, 2, 3]]).unwrap();
        let red = x3c_to_bipartite(&inst).unwrap();
        assert_eq!(red.f, vec![0, -2, -2, 0, 4, 10, 18]);
        assert_eq!(red.g, vec![-1, 0, -1, -4]);
        assert_eq!(red.graph.edge_count(), 9);
        assert!(x3c_to_bipartite(&X3CInstance {
            n: 4,
            subsets: vec![[0, 1, 2]]
        })
        .is_err());
        assert!(X3CInstance::new(6, vec![[0, 0, 1]]).is_err());
        assert!(X3CInstance::new(6, vec![[0, 1, 6]]).is_err());
    }

    #[test]
    fn x3c_decisions() {
        let single = X3CInstance::new(3, vec![[0, 1, 2]]).unwrap();
        let red = x3c_to_bipartite(&single).unwrap();
        assert_eq!(
            brute_force_bipartite(&red.graph, &red.f, &red.g)
                .unwrap()
                .value,
            0
        );
        assert!(decide_x3c(&single).unwrap());
        assert!(decide_x3c(&X3CInstance::new(6, vec![[0, 1, 2], [3, 4, 5]]).unwrap()).unwrap());
        assert!(!decide_x3c(&X3CInstance::new(6, vec![[0, 1, 2], [2, 3, 4]]).unwrap()).unwrap());
        assert!(
            decide_x3c(&X3CInstance::new(6, vec![[0, 1, 2], [1, 2, 3], [3, 4, 5]]).unwrap())
                .unwrap()
        );
        let too_many = X3CInstance::new(3, vec![[0, 1, 2]; 9]).unwrap();
        assert!(decide_x3c(&too_many).is_err());
    }
}
