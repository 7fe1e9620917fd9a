//! Degree sequence optimization over complete and complete bipartite graphs.
//!
//! A subgraph's objective `Σ_v f(deg(v))` equals the inner product of `f`
//! with its degree enumerator (the count of vertices at each degree), so
//! optimizing over subgraphs of `K_n` or `K_{2,n}` reduces to scanning the
//! vertices of the corresponding enumerator polytope. This crate builds
//! those vertex lists in closed form together with witness graphs and
//! certificates ([`extremal`]), the resulting fast optimizers
//! ([`optimize`]), and an exhaustive enumerator plus exact rational LP
//! ([`oracle`], [`lp`]) that re-derives every vertex set independently.

pub mod constructions;
pub mod error;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod lp;
pub mod optimize;
pub mod oracle;
pub mod reductions;
mod subsets;

pub use error::{Error, Result};
pub use graph::{
    bi_objective_value, objective_value, BiEnumerator, BipartiteGraph, Enumerator, Graph,
};
