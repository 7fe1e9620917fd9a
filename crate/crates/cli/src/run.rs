use std::fs;
use std::path::Path;

use degenum::constructions::{
    build_bipartite_2n, build_choice_graph, build_near_regular, build_regular, BipartiteSpec,
    NearRegularSpec, RegularSpec,
};
use degenum::extremal::{self, BipartiteVertex, CompleteVertex, VertexParams};
use degenum::format::{
    format_bi_matrix, format_matrix, parse_edge_list, write_bipartite, write_graph, AnyGraph,
};
use degenum::optimize::{self, CompleteStrategy, OptResult};
use degenum::oracle::{self, PointSet};
use degenum::reductions::{self, X3CInstance};
use degenum::{BiEnumerator, BipartiteGraph, Enumerator, Graph};
use serde::Serialize;
use thiserror::Error;

use crate::args::{
    Command, ConstructArgs, EnumerateArgs, Family, GraphFormat, HostArg, ListFormat, Method,
    OptimizeArgs, Polytope, ReduceArgs, ReductionKind, TableFormat, Theorem, VerifyArgs,
    VerticesArgs,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] degenum::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Text for stdout plus the exit status.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn run(command: Command) -> Result<Output> {
    match command {
        Command::Construct(a) => construct(a).map(Output::ok),
        Command::Vertices(a) => vertices(a).map(Output::ok),
        Command::Optimize(a) => optimize_cmd(a).map(Output::ok),
        Command::Enumerate(a) => enumerate(a).map(Output::ok),
        Command::Verify(a) => verify(a),
        Command::Reduce(a) => reduce(a).map(Output::ok),
    }
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --family {family}")))
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GraphJson<'a> {
    Graph {
        n: usize,
        edges: &'a [(usize, usize)],
        degree_enumerator: Enumerator,
    },
    Bigraph {
        m: usize,
        n: usize,
        edges: &'a [(usize, usize)],
        bi_enumerator: BiEnumerator,
    },
}

impl<'a> GraphJson<'a> {
    fn graph(g: &'a Graph) -> Self {
        GraphJson::Graph {
            n: g.vertex_count(),
            edges: g.edges(),
            degree_enumerator: g.degree_enumerator(),
        }
    }

    fn bigraph(g: &'a BipartiteGraph) -> Self {
        GraphJson::Bigraph {
            m: g.left_count(),
            n: g.right_count(),
            edges: g.edges(),
            bi_enumerator: g.bi_enumerator(),
        }
    }
}

fn construct(a: ConstructArgs) -> Result<String> {
    let built = match a.family {
        Family::Regular => {
            let spec = RegularSpec::new(need(a.n, "n", "regular")?, need(a.r, "r", "regular")?)?;
            AnyGraph::Graph(build_regular(spec))
        }
        Family::NearRegular => {
            let fam = "near-regular";
            let spec = NearRegularSpec::new(
                need(a.n, "n", fam)?,
                need(a.r, "r", fam)?,
                need(a.s, "s", fam)?,
            )?;
            AnyGraph::Graph(build_near_regular(spec))
        }
        Family::Bipartite => {
            let fam = "bipartite";
            let spec = BipartiteSpec::new(
                need(a.n, "n", fam)?,
                need(a.i, "i", fam)?,
                need(a.j, "j", fam)?,
                need(a.k, "k", fam)?,
            )?;
            AnyGraph::Bipartite(build_bipartite_2n(spec))
        }
        Family::Choice => {
            let raw = a.choice.ok_or_else(|| {
                CliError::Usage("--choice is required for --family choice".into())
            })?;
            let s = raw
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| {
                    CliError::Input(format!(
                        "--choice: expected comma-separated integers, found {raw:?}"
                    ))
                })?;
            AnyGraph::Graph(build_choice_graph(&s)?)
        }
    };
    Ok(match (a.format, &built) {
        (GraphFormat::Edges, AnyGraph::Graph(g)) => write_graph(g),
        (GraphFormat::Edges, AnyGraph::Bipartite(g)) => write_bipartite(g),
        (GraphFormat::Json, AnyGraph::Graph(g)) => json(&GraphJson::graph(g)),
        (GraphFormat::Json, AnyGraph::Bipartite(g)) => json(&GraphJson::bigraph(g)),
    })
}

#[derive(Serialize)]
struct VertexRecord<P> {
    point: P,
    params: VertexParams,
    witness_edges: Vec<(usize, usize)>,
}

fn complete_records(list: Vec<CompleteVertex>) -> Vec<VertexRecord<Enumerator>> {
    list.into_iter()
        .map(|v| VertexRecord {
            witness_edges: v.witness.edges().to_vec(),
            point: v.point,
            params: v.params,
        })
        .collect()
}

fn bipartite_records(list: Vec<BipartiteVertex>) -> Vec<VertexRecord<BiEnumerator>> {
    list.into_iter()
        .map(|v| VertexRecord {
            witness_edges: v.witness.edges().to_vec(),
            point: v.point,
            params: v.params,
        })
        .collect()
}

fn vertices(a: VerticesArgs) -> Result<String> {
    let n = a.n;
    if let Polytope::En = a.polytope {
        let list = extremal::vertices_complete(n)?;
        return Ok(match a.format {
            ListFormat::Json => json(&complete_records(list)),
            ListFormat::Matrix => {
                let cols: Vec<Vec<i64>> = list.into_iter().map(|v| v.point.into_inner()).collect();
                format_matrix(&cols)
            }
        });
    }
    let list = match a.polytope {
        Polytope::B1n => extremal::vertices_b1(n)?,
        Polytope::B2n => extremal::vertices_b2(n)?,
        Polytope::All2n => extremal::all_bi_enumerators_2n(n)?,
        Polytope::En => unreachable!(),
    };
    Ok(match a.format {
        ListFormat::Json => json(&bipartite_records(list)),
        ListFormat::Matrix => {
            let cols: Vec<BiEnumerator> = list.into_iter().map(|v| v.point).collect();
            format_bi_matrix(&cols, a.unicode)
        }
    })
}

/// An integer list given inline as `1,-2,3` or as the path of a file holding one.
fn objective(raw: &str, flag: &str) -> Result<Vec<i64>> {
    let inline = raw
        .chars()
        .all(|c| c.is_ascii_digit() || c == '-' || c == ',' || c.is_whitespace());
    let text = if inline {
        raw.to_string()
    } else {
        read(Path::new(raw))?
    };
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Input(format!("--{flag}: expected an integer, found {t:?}")))
        })
        .collect()
}

#[derive(Serialize)]
struct OptimizeJson {
    value: i64,
    params: Option<VertexParams>,
    witness_edges: Vec<(usize, usize)>,
}

impl From<OptResult<Graph>> for OptimizeJson {
    fn from(r: OptResult<Graph>) -> Self {
        OptimizeJson {
            value: r.value,
            params: r.params,
            witness_edges: r.witness.edges().to_vec(),
        }
    }
}

impl From<OptResult<BipartiteGraph>> for OptimizeJson {
    fn from(r: OptResult<BipartiteGraph>) -> Self {
        OptimizeJson {
            value: r.value,
            params: r.params,
            witness_edges: r.witness.edges().to_vec(),
        }
    }
}

fn load_host(arg: &HostArg) -> Result<AnyGraph> {
    Ok(match arg {
        HostArg::Complete(n) => AnyGraph::Graph(Graph::complete(*n)),
        HostArg::K2n(n) => AnyGraph::Bipartite(BipartiteGraph::complete(2, *n)),
        HostArg::File(p) => parse_edge_list(&read(p)?)?,
    })
}

fn optimize_cmd(a: OptimizeArgs) -> Result<String> {
    let f = objective(&a.f, "f")?;
    let g = a.g.as_deref().map(|raw| objective(raw, "g")).transpose()?;
    let bipartite = matches!(a.graph, HostArg::K2n(_))
        || matches!(&a.graph, HostArg::File(_))
            && matches!(load_host(&a.graph)?, AnyGraph::Bipartite(_));
    if bipartite && g.is_none() {
        return Err(CliError::Usage(
            "--g is required for bipartite hosts".into(),
        ));
    }
    if !bipartite && g.is_some() {
        return Err(CliError::Usage(
            "--g only applies to bipartite hosts".into(),
        ));
    }
    let result: OptimizeJson = match (&a.graph, a.method) {
        (HostArg::Complete(n), Method::Fast) => optimize::optimize_complete(*n, &f)?.into(),
        (HostArg::Complete(n), Method::Scan) => {
            optimize::optimize_complete_with(*n, &f, CompleteStrategy::VertexScan)?.into()
        }
        (HostArg::Complete(n), Method::Brute) => optimize::brute_force_complete(*n, &f)?.into(),
        (HostArg::K2n(n), Method::Fast) => {
            optimize::optimize_k2n(*n, &f, g.as_deref().unwrap_or_default())?.into()
        }
        (HostArg::K2n(n), Method::Brute) => optimize::brute_force_bipartite(
            &BipartiteGraph::complete(2, *n),
            &f,
            g.as_deref().unwrap_or_default(),
        )?
        .into(),
        (HostArg::File(_), Method::Brute) => match load_host(&a.graph)? {
            AnyGraph::Graph(h) => optimize::brute_force_subgraph(&h, &f)?.into(),
            AnyGraph::Bipartite(h) => {
                optimize::brute_force_bipartite(&h, &f, g.as_deref().unwrap_or_default())?.into()
            }
        },
        (HostArg::K2n(_), Method::Scan) => {
            return Err(CliError::Usage(
                "--method scan applies to complete:N hosts only".into(),
            ))
        }
        (HostArg::File(_), _) => {
            return Err(CliError::Usage(
                "edge-list hosts have no closed form; use --method brute".into(),
            ))
        }
    };
    Ok(json(&result))
}

#[derive(Serialize)]
struct PointsJson<'a> {
    dim: usize,
    /// Length of the left block for bipartite hosts.
    left_len: Option<usize>,
    count: usize,
    points: &'a [Vec<i64>],
}

fn enumerate(a: EnumerateArgs) -> Result<String> {
    let (points, left_len): (PointSet, Option<usize>) = match load_host(&a.graph)? {
        AnyGraph::Graph(h) => (oracle::enumerate_enumerators(&h)?, None),
        AnyGraph::Bipartite(h) => (
            oracle::enumerate_bi_enumerators(&h)?,
            Some(h.right_count() + 1),
        ),
    };
    Ok(match a.format {
        TableFormat::Json => json(&PointsJson {
            dim: points.dim(),
            left_len,
            count: points.len(),
            points: points.points(),
        }),
        TableFormat::Csv => {
            let header: Vec<String> = match left_len {
                None => (0..points.dim()).map(|i| format!("e{i}")).collect(),
                Some(l) => (0..l)
                    .map(|i| format!("a{i}"))
                    .chain((0..points.dim() - l).map(|j| format!("c{j}")))
                    .collect(),
            };
            let mut out = header.join(",");
            out.push('\n');
            for p in points.points() {
                let row: Vec<String> = p.iter().map(i64::to_string).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
    })
}

fn verify(a: VerifyArgs) -> Result<Output> {
    let report = match a.theorem {
        Theorem::Complete(n) => oracle::verify_theorem_complete(n)?,
        Theorem::B2(n) => oracle::verify_theorem_b2(n)?,
    };
    Ok(Output {
        code: if report.is_match() { 0 } else { 1 },
        text: json(&report),
    })
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ReduceJson<'a> {
    Cubic {
        graph: GraphJson<'a>,
        f: Vec<i64>,
        threshold: i64,
        #[serde(skip_serializing_if = "Option::is_none")]
        decision: Option<bool>,
    },
    X3c {
        graph: GraphJson<'a>,
        f: Vec<i64>,
        g: Vec<i64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        decision: Option<bool>,
    },
}

fn reduce(a: ReduceArgs) -> Result<String> {
    match a.kind {
        ReductionKind::Cubic => {
            let path = a.graph.as_deref().expect("clap requires --graph for cubic");
            let AnyGraph::Graph(h) = parse_edge_list(&read(path)?)? else {
                return Err(CliError::Input(format!(
                    "{}: the cubic reduction takes a \"graph n\" file",
                    path.display()
                )));
            };
            let n = h.vertex_count();
            let decision = a
                .decide
                .then(|| reductions::decide_cubic_subgraph(&h))
                .transpose()?;
            Ok(json(&ReduceJson::Cubic {
                graph: GraphJson::graph(&h),
                f: reductions::cubic_objective(n)?,
                threshold: reductions::cubic_threshold(n),
                decision,
            }))
        }
        ReductionKind::X3c => {
            let path = a
                .instance
                .as_deref()
                .expect("clap requires --instance for x3c");
            let inst: X3CInstance = serde_json::from_str(&read(path)?)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let red = reductions::x3c_to_bipartite(&inst)?;
            let decision = a
                .decide
                .then(|| reductions::decide_x3c(&inst))
                .transpose()?;
            Ok(json(&ReduceJson::X3c {
                graph: GraphJson::bigraph(&red.graph),
                f: red.f,
                g: red.g,
                decision,
            }))
        }
    }
}
