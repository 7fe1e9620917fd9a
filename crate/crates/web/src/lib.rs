//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes plain numbers or strings and returns a string, JSON
//! for structured results. Errors surface as thrown JS strings.

use degenum::constructions::{build_near_regular, build_regular, NearRegularSpec, RegularSpec};
use degenum::extremal;
use degenum::extremal::VertexParams;
use degenum::format::{format_bi_matrix, format_matrix};
use degenum::optimize;
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Drawing<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    degrees: Vec<usize>,
}

/// Edge list of the regular graph `G_n(r)`, or of the near-regular `G_n(r, s)`
/// when `s` is given.
pub fn graph_json(n: usize, r: usize, s: Option<usize>) -> Result<String, String> {
    let g = match s {
        None => build_regular(RegularSpec::new(n, r).map_err(|e| e.to_string())?),
        Some(s) => build_near_regular(NearRegularSpec::new(n, r, s).map_err(|e| e.to_string())?),
    };
    Ok(serde_json::to_string(&Drawing {
        n,
        edges: g.edges(),
        degrees: g.degree_sequence(),
    })
    .expect("drawings serialize"))
}

/// Column matrix of a vertex list: `en`, `b1n`, `b2n`, or `all2n`.
pub fn matrix_text(polytope: &str, n: usize) -> Result<String, String> {
    let err = |e: degenum::Error| e.to_string();
    Ok(match polytope {
        "en" => {
            let cols: Vec<Vec<i64>> = extremal::vertices_complete(n)
                .map_err(err)?
                .into_iter()
                .map(|v| v.point.into_inner())
                .collect();
            format_matrix(&cols)
        }
        "b1n" | "b2n" | "all2n" => {
            let list = match polytope {
                "b1n" => extremal::vertices_b1(n),
                "b2n" => extremal::vertices_b2(n),
                _ => extremal::all_bi_enumerators_2n(n),
            }
            .map_err(err)?;
            let cols: Vec<_> = list.into_iter().map(|v| v.point).collect();
            format_bi_matrix(&cols, true)
        }
        other => {
            return Err(format!(
                "unknown polytope {other:?}; use en, b1n, b2n or all2n"
            ))
        }
    })
}

fn parse_list(raw: &str) -> Result<Vec<i64>, String> {
    raw.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| format!("expected an integer, found {t:?}"))
        })
        .collect()
}

#[derive(Serialize)]
struct Optimum {
    value: i64,
    params: Option<VertexParams>,
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Maximum of `Σ f(deg v)` over subgraphs of `K_n`, with `n = |f|`.
pub fn optimize_json(f: &str) -> Result<String, String> {
    let f = parse_list(f)?;
    let r = optimize::optimize_complete(f.len(), &f).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&Optimum {
        value: r.value,
        params: r.params,
        n: f.len(),
        edges: r.witness.edges().to_vec(),
    })
    .expect("optima serialize"))
}

#[wasm_bindgen]
pub fn regular_graph(n: usize, r: usize, s: i32) -> Result<String, JsValue> {
    let s = usize::try_from(s).ok();
    graph_json(n, r, s).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn vertex_matrix(polytope: &str, n: usize) -> Result<String, JsValue> {
    matrix_text(polytope, n).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn optimize_complete(f: &str) -> Result<String, JsValue> {
    optimize_json(f).map_err(JsValue::from)
}
