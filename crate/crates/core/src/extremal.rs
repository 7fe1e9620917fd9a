//! Closed-form vertex sets of the degree enumerator polytope of `K_n` and
//! the bi-enumerator polytopes of `K_{1,n}` and `K_{2,n}`, with witness
//! graphs, counting formulas, unique-maximizer certificates, and explicit
//! convex combinations for the non-vertices of `K_{2,n}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::constructions::{
    build_bipartite_2n, build_near_regular, build_regular, BipartiteSpec, NearRegularSpec,
    RegularSpec,
};
use crate::error::{invalid, Error, Result};
use crate::graph::{BiEnumerator, BipartiteGraph, Enumerator, Graph};

/// Construction parameters identifying a vertex and its witness graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexParams {
    Regular { r: usize },
    NearRegular { r: usize, s: usize },
    Star { k: usize },
    Bipartite { i: usize, j: usize, k: usize },
}

/// A point together with the parameters and graph that realize it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexWitness<P, G> {
    pub point: P,
    pub params: VertexParams,
    pub witness: G,
}

pub type CompleteVertex = VertexWitness<Enumerator, Graph>;
pub type BipartiteVertex = VertexWitness<BiEnumerator, BipartiteGraph>;

/// Objective making `target` the strict unique maximizer. `g` is present
/// for bipartite certificates; `target` is flattened `a ⊕ c` there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub f: Vec<i64>,
    pub g: Option<Vec<i64>>,
    pub target: Vec<i64>,
}

impl Certificate {
    /// `f ⊕ g` as one weight vector, aligned with flattened points.
    pub fn weights(&self) -> Vec<i64> {
        let mut w = self.f.clone();
        if let Some(g) = &self.g {
            w.extend_from_slice(g);
        }
        w
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    Ok(())
}

/// `e_n(r, s) = (n-1)·1_r + 1_s`.
fn near_regular_point(n: usize, r: usize, s: usize) -> Enumerator {
    let mut v = vec![0; n];
    v[r] = n as i64 - 1;
    v[s] += 1;
    Enumerator::new(v)
}

/// Vertices of the degree enumerator polytope of `K_n`: regular points by
/// `r`, then (odd `n` only) near-regular points by `(r, s)`.
pub fn vertices_complete(n: usize) -> Result<Vec<CompleteVertex>> {
    check_n(n)?;
    let mut out = Vec::with_capacity(vertex_count_complete(n));
    let step = if n.is_multiple_of(2) { 1 } else { 2 };
    for r in (0..n).step_by(step) {
        out.push(VertexWitness {
            point: Enumerator::unit(n, r, n as i64),
            params: VertexParams::Regular { r },
            witness: build_regular(RegularSpec { n, r }),
        });
    }
    if n % 2 == 1 {
        for r in (1..n.saturating_sub(1)).step_by(2) {
            for s in (0..n).step_by(2) {
                out.push(VertexWitness {
                    point: near_regular_point(n, r, s),
                    params: VertexParams::NearRegular { r, s },
                    witness: build_near_regular(NearRegularSpec { n, r, s }),
                });
            }
        }
    }
    Ok(out)
}

/// `n` for even `n`, `((n+1)/2)^2` for odd `n`.
pub fn vertex_count_complete(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n
    } else {
        let h = n.div_ceil(2);
        h * h
    }
}

/// `1_r` certifies `n·1_r`; `2·1_r + 1_s` certifies `(n-1)·1_r + 1_s`.
pub fn certificate_complete(n: usize, params: VertexParams) -> Result<Certificate> {
    check_n(n)?;
    match params {
        VertexParams::Regular { r } if r < n && (n.is_multiple_of(2) || r % 2 == 0) => {
            Ok(Certificate {
                f: Enumerator::unit(n, r, 1).into_inner(),
                g: None,
                target: Enumerator::unit(n, r, n as i64).into_inner(),
            })
        }
        VertexParams::NearRegular { r, s } if NearRegularSpec::new(n, r, s).is_ok() => {
            let mut f = vec![0; n];
            f[r] = 2;
            f[s] = 1;
            Ok(Certificate {
                f,
                g: None,
                target: near_regular_point(n, r, s).into_inner(),
            })
        }
        other => Err(Error::NotAVertex(format!("{other:?} for n={n}"))),
    }
}

/// All `n + 1` bi-enumerators `1_k ⊕ (n-k, k)` of `K_{1,n}`, each a vertex.
pub fn vertices_b1(n: usize) -> Result<Vec<BipartiteVertex>> {
    check_n(n)?;
    Ok((0..=n)
        .map(|k| {
            let mut left = vec![0; n + 1];
            left[k] = 1;
            VertexWitness {
                point: BiEnumerator::new(left, vec![(n - k) as i64, k as i64]),
                params: VertexParams::Star { k },
                witness: BipartiteGraph::new(1, n, (0..k).map(|v| (0, v)))
                    .expect("star edges are in range"),
            }
        })
        .collect())
}

/// `b_n(i, j, k) = (1_i + 1_j) ⊕ (n - (i+j) + k, (i+j) - 2k, k)`.
pub fn b2n_point(spec: BipartiteSpec) -> BiEnumerator {
    let BipartiteSpec { n, i, j, k } = spec;
    let mut left = vec![0; n + 1];
    left[i] += 1;
    left[j] += 1;
    let right = vec![(n + k - i - j) as i64, (i + j - 2 * k) as i64, k as i64];
    BiEnumerator::new(left, right)
}

fn b2n_vertex(spec: BipartiteSpec) -> BipartiteVertex {
    VertexWitness {
        point: b2n_point(spec),
        params: VertexParams::Bipartite {
            i: spec.i,
            j: spec.j,
            k: spec.k,
        },
        witness: build_bipartite_2n(spec),
    }
}

/// Every valid `(i, j, k)` for `K_{2,n}`, in `(i, j, k)` order.
pub fn b2n_params(n: usize) -> impl Iterator<Item = BipartiteSpec> {
    (0..=n).flat_map(move |i| {
        (i..=n).flat_map(move |j| {
            ((i + j).saturating_sub(n)..=i).map(move |k| BipartiteSpec { n, i, j, k })
        })
    })
}

/// All bi-enumerators of subgraphs of `K_{2,n}` with their witnesses.
pub fn all_bi_enumerators_2n(n: usize) -> Result<Vec<BipartiteVertex>> {
    check_n(n)?;
    Ok(b2n_params(n).map(b2n_vertex).collect())
}

pub fn bi_enumerator_count_2n(n: usize) -> usize {
    if n.is_multiple_of(2) {
        (n + 2) * (n + 4) * (2 * n + 3) / 24
    } else {
        (n + 1) * (n + 3) * (2 * n + 7) / 24
    }
}

/// Vertex parameters of the bi-enumerator polytope of `K_{2,n}`: equal
/// degrees with extreme intersection, by `(i, k)`; then unequal degrees
/// straddling `n/2` with minimum intersection, by `(i, j)`.
pub fn b2_vertex_params(n: usize) -> Vec<BipartiteSpec> {
    let mut out = Vec::new();
    for i in 0..=n {
        let lo = (2 * i).saturating_sub(n);
        out.push(BipartiteSpec { n, i, j: i, k: lo });
        if lo != i {
            out.push(BipartiteSpec { n, i, j: i, k: i });
        }
    }
    for i in 0..=(n.saturating_sub(1) / 2) {
        for j in (n / 2 + 1)..=n {
            out.push(BipartiteSpec {
                n,
                i,
                j,
                k: (i + j).saturating_sub(n),
            });
        }
    }
    out
}

pub fn vertices_b2(n: usize) -> Result<Vec<BipartiteVertex>> {
    check_n(n)?;
    Ok(b2_vertex_params(n).into_iter().map(b2n_vertex).collect())
}

/// `(n/2)^2 + 2n` for even `n`, `((n+1)/2)^2 + 2n` for odd `n`.
pub fn vertex_count_b2(n: usize) -> usize {
    let h = n.div_ceil(2);
    h * h + 2 * n
}

pub fn is_b2_vertex(spec: BipartiteSpec) -> bool {
    let BipartiteSpec { n, i, j, k } = spec;
    let lo = (i + j).saturating_sub(n);
    if i == j {
        k == lo || k == i
    } else {
        2 * i < n && 2 * j > n && k == lo
    }
}

/// Scaling used by the bipartite certificates; it dominates every bounded
/// remainder term of the form `N + 3n^2`.
pub fn certificate_scale(n: usize) -> i64 {
    3 * (n as i64) * (n as i64) + 1
}

/// Certificate for a vertex `b_n(i, j, k)` of the `K_{2,n}` polytope,
/// checked against every bi-enumerator before it is returned.
pub fn certificate_b2(n: usize, i: usize, j: usize, k: usize) -> Result<Certificate> {
    check_n(n)?;
    let spec = BipartiteSpec::new(n, i, j, k)?;
    if !is_b2_vertex(spec) {
        return Err(Error::NotAVertex(format!("b_{n}({i},{j},{k})")));
    }
    let big = certificate_scale(n);
    let mut f = vec![0; n + 1];
    f[i] += big;
    f[j] += big;
    let (ii, jj, nn) = (i as i64, j as i64, n as i64);
    let g = if i == j {
        if k == i {
            vec![0, 0, 1]
        } else {
            vec![0, 1, 0]
        }
    } else if i + j <= n {
        vec![0, 2 * jj - nn, ii + jj - nn]
    } else {
        let excess = ii + jj - nn;
        vec![0, 2 * excess, 2 * excess - 1]
    };
    let cert = Certificate {
        f,
        g: Some(g),
        target: b2n_point(spec).flatten(),
    };
    let w = cert.weights();
    let target_value = dot(&cert.target, &w);
    let rivals = b2n_params(n)
        .filter(|&p| p != spec)
        .any(|p| dot(&b2n_point(p).flatten(), &w) >= target_value);
    if rivals {
        return Err(invalid(format!(
            "certificate for b_{n}({i},{j},{k}) does not isolate its target"
        )));
    }
    Ok(cert)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// One weighted term of a convex combination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexTerm {
    pub coefficient: BigRational,
    pub params: BipartiteSpec,
    pub point: BiEnumerator,
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Expresses a non-vertex `b_n(i, j, k)` as a convex combination of other
/// bi-enumerators of `K_{2,n}`, with exact nonnegative coefficients summing
/// to one. Zero-weight terms are dropped.
pub fn convex_witness_b2(n: usize, i: usize, j: usize, k: usize) -> Result<Vec<ConvexTerm>> {
    check_n(n)?;
    let spec = BipartiteSpec::new(n, i, j, k)?;
    if is_b2_vertex(spec) {
        return Err(Error::IsAVertex(format!("b_{n}({i},{j},{k})")));
    }
    let lo = spec.min_intersection();
    let b = |i, j, k| BipartiteSpec { n, i, j, k };
    let half = ratio(1, 2);

    let terms: Vec<(BigRational, BipartiteSpec)> = if lo < k && k < i {
        vec![(half.clone(), b(i, j, k - 1)), (half, b(i, j, k + 1))]
    } else if 2 * j <= n {
        // both degrees at most n/2
        if k == 0 {
            vec![(half.clone(), b(i, i, 0)), (half, b(j, j, 0))]
        } else {
            vec![
                (half, b(i, i, i)),
                (ratio(j - i, 2 * j), b(j, j, 0)),
                (ratio(i, 2 * j), b(j, j, j)),
            ]
        }
    } else if 2 * i >= n {
        // both degrees at least n/2
        if k == lo {
            vec![
                (half.clone(), b(i, i, 2 * i - n)),
                (half, b(j, j, 2 * j - n)),
            ]
        } else {
            vec![
                (ratio(n - j, 2 * (n - i)), b(i, i, i)),
                (ratio(j - i, 2 * (n - i)), b(i, i, 2 * i - n)),
                (half, b(j, j, j)),
            ]
        }
    } else if j <= 2 * i {
        // straddling n/2 with k = i
        vec![
            (ratio(j - i, 2 * i), b(i, i, 0)),
            (ratio(2 * i - j, 2 * i), b(i, i, i)),
            (half, b(j, j, j)),
        ]
    } else if i + j <= n {
        vec![
            (ratio(i, j), b(i, i, 0)),
            (ratio(i, j), b(j, j, j)),
            (ratio(j - 2 * i, j), b(i, j, 0)),
        ]
    } else {
        vec![
            (ratio(n - j, n - i), b(i, i, i)),
            (ratio(n - j, n - i), b(j, j, 2 * j - n)),
            (ratio((i + j - n) + (j - 2 * i), n - i), b(i, j, i + j - n)),
        ]
    };

    let out: Vec<ConvexTerm> = terms
        .into_iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(coefficient, params)| ConvexTerm {
            coefficient,
            params,
            point: b2n_point(params),
        })
        .collect();
    debug_assert_eq!(
        out.iter()
            .map(|t| t.coefficient.clone())
            .sum::<BigRational>(),
        BigRational::one()
    );
    Ok(out)
}

/// Evaluates `Σ λ_t · point_t` coordinate-wise over the flattened points.
pub fn evaluate_combination(terms: &[ConvexTerm]) -> Vec<BigRational> {
    let dim = terms.first().map_or(0, |t| t.point.flatten().len());
    let mut acc = vec![BigRational::zero(); dim];
    for t in terms {
        for (a, x) in acc.iter_mut().zip(t.point.flatten()) {
            *a += &t.coefficient * BigRational::from_integer(x.into());
        }
    }
    acc
}
