use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "degenum",
    version,
    about = "Degree enumerator polytopes and degree-sequence optimization"
)]
pub struct Cli {
    /// Cap on worker threads for exhaustive searches (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a witness graph and print it as an edge list.
    Construct(ConstructArgs),
    /// List the vertices of a degree enumerator polytope.
    Vertices(VerticesArgs),
    /// Maximize a degree objective over subgraphs of a host graph.
    Optimize(OptimizeArgs),
    /// List every distinct (bi-)enumerator of a host graph's subgraphs.
    Enumerate(EnumerateArgs),
    /// Compare a closed-form vertex list with the exhaustive oracle.
    Verify(VerifyArgs),
    /// Build a hardness-reduction instance, optionally deciding it.
    Reduce(ReduceArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    /// r-regular circulant on n vertices
    Regular,
    /// odd n, degree r everywhere except degree s at vertex n-1
    NearRegular,
    /// subgraph of K_{2,n} with left degrees i <= j sharing k neighbours
    Bipartite,
    /// graph on 2k+1 vertices encoding an increasing choice sequence
    Choice,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum GraphFormat {
    #[default]
    Edges,
    Json,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated increasing sequence for the `choice` family.
    #[arg(long, value_name = "S1,S2,..")]
    pub choice: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: GraphFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Polytope {
    /// vertices for K_n
    En,
    /// vertices for K_{1,n}
    B1n,
    /// vertices for K_{2,n}
    B2n,
    /// every bi-enumerator of K_{2,n}, vertex or not
    All2n,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum ListFormat {
    #[default]
    Json,
    Matrix,
}

#[derive(Debug, Args)]
pub struct VerticesArgs {
    #[arg(long, value_enum)]
    pub polytope: Polytope,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: ListFormat,
    /// Use `⊕` instead of a dash row between bipartite blocks.
    #[arg(long)]
    pub unicode: bool,
}

/// `complete:n`, `k2n:n`, or a path to an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HostArg {
    Complete(usize),
    K2n(usize),
    File(PathBuf),
}

impl FromStr for HostArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let number = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| format!("expected a nonnegative integer after ':', found {rest:?}"))
        };
        if let Some(rest) = s.strip_prefix("complete:") {
            Ok(HostArg::Complete(number(rest)?))
        } else if let Some(rest) = s.strip_prefix("k2n:") {
            Ok(HostArg::K2n(number(rest)?))
        } else if s.is_empty() {
            Err("empty graph argument".into())
        } else {
            Ok(HostArg::File(PathBuf::from(s)))
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// closed-form vertex list (complete and K_{2,n} hosts only)
    #[default]
    Fast,
    /// evaluate every vertex of the K_n polytope
    Scan,
    /// exhaustive search over all edge subsets
    Brute,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[arg(long, value_name = "complete:N|k2n:N|FILE")]
    pub graph: HostArg,
    /// Left (or only) objective as `v0,v1,..` or a file holding that list.
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// Right objective for bipartite hosts, same syntax as `--f`.
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub method: Method,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum TableFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_name = "complete:N|k2n:N|FILE")]
    pub graph: HostArg,
    #[arg(long, value_enum, default_value_t)]
    pub format: TableFormat,
}

/// `e7`, `en:n`, or `b2n:n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    Complete(usize),
    B2(usize),
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let number = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| format!("expected a positive integer after ':', found {rest:?}"))
        };
        if s == "e7" {
            Ok(Theorem::Complete(7))
        } else if let Some(rest) = s.strip_prefix("en:") {
            Ok(Theorem::Complete(number(rest)?))
        } else if let Some(rest) = s.strip_prefix("b2n:") {
            Ok(Theorem::B2(number(rest)?))
        } else {
            Err(format!("expected e7, en:N or b2n:N, found {s:?}"))
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_name = "e7|en:N|b2n:N")]
    pub theorem: Theorem,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ReductionKind {
    /// nonempty subgraph with all degrees in {0, 3}
    Cubic,
    /// exact cover by 3-sets
    X3c,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, value_enum)]
    pub kind: ReductionKind,
    /// Edge-list file of the host graph (cubic).
    #[arg(long, required_if_eq("kind", "cubic"))]
    pub graph: Option<PathBuf>,
    /// JSON file `{"n": .., "subsets": [[a, b, c], ..]}` (x3c).
    #[arg(long, required_if_eq("kind", "x3c"))]
    pub instance: Option<PathBuf>,
    /// Also solve the instance by exhaustive search.
    #[arg(long)]
    pub decide: bool,
}
