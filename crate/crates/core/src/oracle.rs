//! Independent verification machinery: exhaustive enumeration of all
//! (bi-)enumerators of a host graph, an exact point-in-convex-hull test, and
//! comparison of the resulting extreme points against the closed forms.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal;
use crate::graph::{BipartiteGraph, Graph};
use crate::lp::{self, Feasibility};
use crate::subsets::{SubsetVisitor, WalkPlan};

/// Host edge limit for exhaustive enumeration; `K_8` has 28 edges.
pub const MAX_ENUMERATION_EDGES: usize = 28;
pub const MAX_EXTREMAL_POINTS: usize = 2000;
pub const MAX_EXTREMAL_DIM: usize = 16;

/// A duplicate-free set of integer points of a common dimension, kept in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl PointSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            set.insert(p);
        }
        Ok(PointSet {
            dim,
            points: set.into_iter().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points
            .binary_search_by(|q| q.as_slice().cmp(p))
            .is_ok()
    }

    pub fn translate(&self, offset: &[i64]) -> Result<PointSet> {
        self.check_dim(offset.len())?;
        PointSet::new(
            self.dim,
            self.points
                .iter()
                .map(|p| p.iter().zip(offset).map(|(a, b)| a + b).collect()),
        )
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got,
            });
        }
        Ok(())
    }
}

struct PackedCollector {
    key: u128,
    width: u32,
    last: Option<u128>,
    seen: HashSet<u128>,
}

impl SubsetVisitor for PackedCollector {
    fn shift(&mut self, from: usize, to: usize) {
        self.key -= 1 << (from as u32 * self.width);
        self.key += 1 << (to as u32 * self.width);
    }

    fn visit(&mut self, _order: u64, _mask: u64) {
        if self.last != Some(self.key) {
            self.seen.insert(self.key);
            self.last = Some(self.key);
        }
    }
}

struct VecCollector {
    counts: Vec<i64>,
    seen: HashSet<Vec<i64>>,
}

impl SubsetVisitor for VecCollector {
    fn shift(&mut self, from: usize, to: usize) {
        self.counts[from] -= 1;
        self.counts[to] += 1;
    }

    fn visit(&mut self, _order: u64, _mask: u64) {
        if !self.seen.contains(&self.counts) {
            self.seen.insert(self.counts.clone());
        }
    }
}

/// Distinct flat enumerators over all edge subsets. `initial` is the
/// enumerator of the empty subgraph.
fn collect_points(
    endpoints: &[(usize, usize)],
    base: &[usize],
    initial: Vec<i64>,
) -> Result<PointSet> {
    if endpoints.len() > MAX_ENUMERATION_EDGES {
        return Err(Error::TooLarge {
            what: "host graph edge count",
            limit: MAX_ENUMERATION_EDGES,
            got: endpoints.len(),
        });
    }
    let dim = initial.len();
    let plan = WalkPlan { endpoints, base };
    let max_count = initial.iter().copied().max().unwrap_or(0) as u64;
    let width = 64 - max_count.leading_zeros();
    if width > 0 && dim as u32 * width <= 128 {
        let key = initial.iter().enumerate().fold(0u128, |acc, (slot, &c)| {
            acc + ((c as u128) << (slot as u32 * width))
        });
        let parts = plan.walk(|| PackedCollector {
            key,
            width,
            last: None,
            seen: HashSet::new(),
        });
        let mask = (1u128 << width) - 1;
        let keys: HashSet<u128> = parts.into_iter().flat_map(|p| p.seen).collect();
        PointSet::new(
            dim,
            keys.into_iter().map(|k| {
                (0..dim)
                    .map(|slot| ((k >> (slot as u32 * width)) & mask) as i64)
                    .collect()
            }),
        )
    } else {
        let parts = plan.walk(|| VecCollector {
            counts: initial.clone(),
            seen: HashSet::new(),
        });
        PointSet::new(dim, parts.into_iter().flat_map(|p| p.seen))
    }
}

/// All distinct degree enumerators `e(G)` over subgraphs `G ⊆ H`.
pub fn enumerate_enumerators(h: &Graph) -> Result<PointSet> {
    let n = h.vertex_count();
    let mut initial = vec![0; n];
    if n > 0 {
        initial[0] = n as i64;
    }
    collect_points(h.edges(), &vec![0; n], initial)
}

/// All distinct bi-enumerators over subgraphs `G ⊆ H`, flattened as `a` then `c`.
pub fn enumerate_bi_enumerators(h: &BipartiteGraph) -> Result<PointSet> {
    let (m, n) = (h.left_count(), h.right_count());
    let endpoints: Vec<(usize, usize)> = h.edges().iter().map(|&(u, v)| (u, m + v)).collect();
    let base: Vec<usize> = (0..m).map(|_| 0).chain((0..n).map(|_| n + 1)).collect();
    let mut initial = vec![0; n + m + 2];
    initial[0] = m as i64;
    initial[n + 1] = n as i64;
    collect_points(&endpoints, &base, initial)
}

fn check_member(p: &[i64], s: &PointSet) -> Result<()> {
    s.check_dim(p.len())?;
    if !s.contains(p) {
        return Err(Error::PointNotInSet);
    }
    Ok(())
}

fn affine_system(p: &[i64], s: &PointSet) -> Result<(Vec<Vec<i64>>, Vec<i64>)> {
    check_member(p, s)?;
    let columns = s
        .points
        .iter()
        .filter(|q| q.as_slice() != p)
        .map(|q| q.iter().copied().chain([1]).collect())
        .collect();
    let rhs = p.iter().copied().chain([1]).collect();
    Ok((columns, rhs))
}

/// Some `q` in `s` with `2p - q` also in `s`, making `p` a midpoint.
fn midpoint_partner<'a>(p: &[i64], s: &'a PointSet) -> Option<&'a [i64]> {
    let mut mirror = vec![0; p.len()];
    s.points.iter().map(Vec::as_slice).find(|q| {
        if *q == p {
            return false;
        }
        for ((m, &a), &b) in mirror.iter_mut().zip(p).zip(q.iter()) {
            *m = 2 * a - b;
        }
        s.contains(&mirror)
    })
}

/// True iff `p` is not a convex combination of the other points of `s`.
pub fn is_vertex(p: &[i64], s: &PointSet) -> Result<bool> {
    check_member(p, s)?;
    if midpoint_partner(p, s).is_some() {
        return Ok(false);
    }
    let (columns, rhs) = affine_system(p, s)?;
    Ok(!lp::feasibility(&columns, &rhs).is_feasible())
}

/// Positive weights paired with the points they multiply.
pub type Combination = Vec<(BigRational, Vec<i64>)>;

/// Convex weights on `S \ {p}` reproducing `p`, when `p` is not a vertex.
pub fn convex_decomposition(p: &[i64], s: &PointSet) -> Result<Option<Combination>> {
    let (columns, rhs) = affine_system(p, s)?;
    Ok(match lp::feasibility(&columns, &rhs) {
        Feasibility::Feasible(lambda) => Some(
            lambda
                .into_iter()
                .zip(columns)
                .filter(|(l, _)| !l.is_zero())
                .map(|(l, mut q)| {
                    q.pop();
                    (l, q)
                })
                .collect(),
        ),
        Feasibility::Infeasible(_) => None,
    })
}

/// An integer vector `w` for which `p` is the unique maximizer of `w · q`
/// over `s`, read off the Farkas certificate when `p` is a vertex.
pub fn separating_functional(p: &[i64], s: &PointSet) -> Result<Option<Vec<BigInt>>> {
    let (columns, rhs) = affine_system(p, s)?;
    Ok(match lp::feasibility(&columns, &rhs) {
        Feasibility::Feasible(_) => None,
        Feasibility::Infeasible(mut y) => {
            y.pop();
            Some(clear_denominators(&y))
        }
    })
}

fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let denom = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&denom / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// The extreme points of `conv S`, in the order of `S`.
pub fn extremal_set(s: &PointSet) -> Result<PointSet> {
    if s.len() > MAX_EXTREMAL_POINTS {
        return Err(Error::TooLarge {
            what: "point set size",
            limit: MAX_EXTREMAL_POINTS,
            got: s.len(),
        });
    }
    if s.dim > MAX_EXTREMAL_DIM {
        return Err(Error::TooLarge {
            what: "point dimension",
            limit: MAX_EXTREMAL_DIM,
            got: s.dim,
        });
    }
    let keep: Vec<bool> = s
        .points
        .par_iter()
        .map(|p| is_vertex(p, s))
        .collect::<Result<_>>()?;
    Ok(PointSet {
        dim: s.dim,
        points: s
            .points
            .iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(p, _)| p.clone())
            .collect(),
    })
}

/// The point strictly maximizing `w · p`, or `None` on a tie or an empty set.
pub fn unique_maximizer(w: &[i64], s: &PointSet) -> Result<Option<Vec<i64>>> {
    s.check_dim(w.len())?;
    let mut best: Option<(i128, usize)> = None;
    let mut unique = false;
    for (idx, p) in s.points.iter().enumerate() {
        let v: i128 = p.iter().zip(w).map(|(&a, &b)| a as i128 * b as i128).sum();
        match best {
            Some((bv, _)) if v < bv => {}
            Some((bv, _)) if v == bv => unique = false,
            _ => {
                best = Some((v, idx));
                unique = true;
            }
        }
    }
    Ok(best
        .filter(|_| unique)
        .map(|(_, idx)| s.points[idx].clone()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

/// Closed-form vertex set versus the oracle's extreme points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub expected_count: usize,
    pub oracle_count: usize,
    pub enumerator_count: usize,
    /// Closed-form vertices the oracle did not find extreme.
    pub missing: Vec<Vec<i64>>,
    /// Oracle extreme points absent from the closed form.
    pub extra: Vec<Vec<i64>>,
    pub status: Status,
}

impl VerificationReport {
    fn compare(theorem: String, expected: Vec<Vec<i64>>, all: &PointSet) -> Result<Self> {
        let oracle = extremal_set(all)?;
        let expected: BTreeSet<Vec<i64>> = expected.into_iter().collect();
        let found: BTreeSet<Vec<i64>> = oracle.points.iter().cloned().collect();
        let missing: Vec<_> = expected.difference(&found).cloned().collect();
        let extra: Vec<_> = found.difference(&expected).cloned().collect();
        let status = if missing.is_empty() && extra.is_empty() {
            Status::Match
        } else {
            Status::Mismatch
        };
        Ok(VerificationReport {
            theorem,
            expected_count: expected.len(),
            oracle_count: found.len(),
            enumerator_count: all.len(),
            missing,
            extra,
            status,
        })
    }

    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }
}

pub const MAX_VERIFY_COMPLETE: usize = 8;
pub const MAX_VERIFY_B2: usize = 7;

/// Extreme points of all enumerators of `K_n` against the closed-form vertex list.
pub fn verify_theorem_complete(n: usize) -> Result<VerificationReport> {
    if n == 0 || n > MAX_VERIFY_COMPLETE {
        return Err(Error::TooLarge {
            what: "complete graph order for verification",
            limit: MAX_VERIFY_COMPLETE,
            got: n,
        });
    }
    let all = enumerate_enumerators(&Graph::complete(n))?;
    let expected = extremal::vertices_complete(n)?
        .into_iter()
        .map(|v| v.point.into_inner())
        .collect();
    VerificationReport::compare(format!("en:{n}"), expected, &all)
}

/// Extreme points of all bi-enumerators of `K_{2,n}` against the closed-form vertex list.
pub fn verify_theorem_b2(n: usize) -> Result<VerificationReport> {
    if n == 0 || n > MAX_VERIFY_B2 {
        return Err(Error::TooLarge {
            what: "right side size for verification",
            limit: MAX_VERIFY_B2,
            got: n,
        });
    }
    let all = enumerate_bi_enumerators(&BipartiteGraph::complete(2, n))?;
    let expected = extremal::vertices_b2(n)?
        .into_iter()
        .map(|v| v.point.flatten())
        .collect();
    VerificationReport::compare(format!("b2n:{n}"), expected, &all)
}
