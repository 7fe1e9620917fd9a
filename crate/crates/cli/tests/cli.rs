use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;

use degenum::constructions::{build_near_regular, build_regular, NearRegularSpec, RegularSpec};
use degenum::format::{parse_edge_list, parse_matrix, AnyGraph};
use serde_json::Value;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn degenum(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_degenum"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let r = degenum(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

fn validate(schema_file: &str, doc: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(schema_file);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let value: Value = serde_json::from_str(doc).expect("output is JSON");
    if let Err(errors) = compiled.validate(&value) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("{schema_file}: {msgs:?}");
    }
    value
}

const E7: [&str; 7] = [
    "7 0 0 0 1 0 0 0 1 0 0 0 1 0 0 0",
    "0 0 0 0 6 6 6 6 0 0 0 0 0 0 0 0",
    "0 7 0 0 0 1 0 0 0 1 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 6 6 6 6 0 0 0 0",
    "0 0 7 0 0 0 1 0 0 0 1 0 0 0 1 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 6 6 6 6",
    "0 0 0 7 0 0 0 1 0 0 0 1 0 0 0 1",
];

const B26: [&str; 10] = [
    "2 0 0 0 0 0 0 0 0 0 0 0 1 1 1 0 0 0 0 0 0",
    "0 2 2 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 0 0 0",
    "0 0 0 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1",
    "0 0 0 0 0 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 2 2 0 0 0 1 0 0 1 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 0 2 2 0 0 1 0 0 1 0 0 1 0",
    "0 0 0 0 0 0 0 0 0 0 0 2 0 0 1 0 0 1 0 0 1",
    "6 5 4 4 2 3 0 2 0 1 0 0 2 1 0 1 0 0 0 0 0",
    "0 0 2 0 4 0 6 0 4 0 2 0 4 5 6 5 6 5 6 5 4",
    "0 1 0 2 0 3 0 4 2 5 4 6 0 0 0 0 0 1 0 1 2",
];

fn column_set(rows: &[&str]) -> BTreeSet<Vec<i64>> {
    parse_matrix(&rows.join("\n"))
        .unwrap()
        .into_iter()
        .collect()
}

#[test]
fn e7_matrix_matches_the_known_display() {
    let text = ok(&[
        "vertices",
        "--polytope",
        "en",
        "--n",
        "7",
        "--format",
        "matrix",
    ]);
    let cols = parse_matrix(&text).unwrap();
    assert_eq!(cols.len(), 16);
    assert_eq!(cols.into_iter().collect::<BTreeSet<_>>(), column_set(&E7));
}

#[test]
fn b26_matrix_matches_the_known_display() {
    let text = ok(&[
        "vertices",
        "--polytope",
        "b2n",
        "--n",
        "6",
        "--format",
        "matrix",
    ]);
    assert!(text.lines().nth(7).unwrap().chars().all(|c| c == '-'));
    let cols = parse_matrix(&text).unwrap();
    assert_eq!(cols.len(), 21);
    assert_eq!(cols.into_iter().collect::<BTreeSet<_>>(), column_set(&B26));

    let unicode = ok(&[
        "vertices",
        "--polytope",
        "b2n",
        "--n",
        "6",
        "--format",
        "matrix",
        "--unicode",
    ]);
    assert!(unicode.lines().nth(7).unwrap().contains('⊕'));
    assert_eq!(
        parse_matrix(&unicode).unwrap(),
        parse_matrix(&text).unwrap()
    );
}

#[test]
fn vertex_json_validates() {
    for (poly, n, count) in [
        ("en", "7", 16),
        ("en", "6", 6),
        ("b1n", "4", 5),
        ("b2n", "6", 21),
        ("all2n", "6", 50),
    ] {
        let doc = ok(&["vertices", "--polytope", poly, "--n", n]);
        let v = validate("vertices.schema.json", &doc);
        assert_eq!(v.as_array().unwrap().len(), count, "{poly} {n}");
    }
}

#[test]
fn verify_reports_match() {
    let r = degenum(&["verify", "--theorem", "b2n:6"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = validate("verify.schema.json", &r.stdout);
    assert_eq!(v["status"], "match");
    assert_eq!(v["expected_count"], 21);
    assert_eq!(v["oracle_count"], 21);

    let v = validate("verify.schema.json", &ok(&["verify", "--theorem", "e7"]));
    assert_eq!(v["oracle_count"], 16);
    assert_eq!(v["enumerator_count"], 342);

    let r = degenum(&["verify", "--theorem", "en:12"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("limit"), "{}", r.stderr);
}

#[test]
fn optimize_examples() {
    let v = validate(
        "optimize.schema.json",
        &ok(&["optimize", "--graph", "complete:1", "--f", "0"]),
    );
    assert_eq!(v["value"], 0);
    assert_eq!(v["witness_edges"].as_array().unwrap().len(), 0);

    let f = "-3,5,-1,7,2,-8";
    let fast = validate(
        "optimize.schema.json",
        &ok(&["optimize", "--graph", "complete:6", "--f", f]),
    );
    let brute = validate(
        "optimize.schema.json",
        &ok(&[
            "optimize",
            "--graph",
            "complete:6",
            "--f",
            f,
            "--method",
            "brute",
        ]),
    );
    let scan = validate(
        "optimize.schema.json",
        &ok(&[
            "optimize",
            "--graph",
            "complete:6",
            "--f",
            f,
            "--method",
            "scan",
        ]),
    );
    assert_eq!(fast["value"], 42);
    assert_eq!(fast["value"], brute["value"]);
    assert_eq!(fast["value"], scan["value"]);
    assert!(brute["params"].is_null());

    let fast = ok(&[
        "optimize",
        "--graph",
        "k2n:4",
        "--f",
        "1,-2,3,0,-1",
        "--g",
        "2,-1,1",
    ]);
    let brute = ok(&[
        "optimize",
        "--graph",
        "k2n:4",
        "--f",
        "1,-2,3,0,-1",
        "--g",
        "2,-1,1",
        "--method",
        "brute",
    ]);
    let (fast, brute) = (
        validate("optimize.schema.json", &fast),
        validate("optimize.schema.json", &brute),
    );
    assert_eq!(fast["value"], brute["value"]);
    assert_eq!(fast["params"]["kind"], "bipartite");
}

#[test]
fn optimize_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c5.txt");
    std::fs::write(
        &graph,
        ok(&["construct", "--family", "regular", "--n", "5", "--r", "2"]),
    )
    .unwrap();
    let f = dir.path().join("f.txt");
    std::fs::write(&f, "0 0 3\n1 1\n").unwrap();
    let v = validate(
        "optimize.schema.json",
        &ok(&[
            "optimize",
            "--graph",
            graph.to_str().unwrap(),
            "--f",
            f.to_str().unwrap(),
            "--method",
            "brute",
        ]),
    );
    assert_eq!(v["value"], 15);
    assert_eq!(v["witness_edges"].as_array().unwrap().len(), 5);

    let r = degenum(&[
        "optimize",
        "--graph",
        graph.to_str().unwrap(),
        "--f",
        "0,0,3,1,1",
    ]);
    assert_eq!(
        r.code, 2,
        "closed-form methods need a complete or K_2,n host"
    );
}

#[test]
fn construct_round_trips() {
    let text = ok(&["construct", "--family", "regular", "--n", "8", "--r", "3"]);
    assert_eq!(
        parse_edge_list(&text).unwrap(),
        AnyGraph::Graph(build_regular(RegularSpec::new(8, 3).unwrap()))
    );
    let text = ok(&[
        "construct",
        "--family",
        "near-regular",
        "--n",
        "9",
        "--r",
        "5",
        "--s",
        "6",
    ]);
    assert_eq!(
        parse_edge_list(&text).unwrap(),
        AnyGraph::Graph(build_near_regular(NearRegularSpec::new(9, 5, 6).unwrap()))
    );
    let text = ok(&[
        "construct",
        "--family",
        "bipartite",
        "--n",
        "6",
        "--i",
        "2",
        "--j",
        "5",
        "--k",
        "1",
    ]);
    let AnyGraph::Bipartite(b) = parse_edge_list(&text).unwrap() else {
        panic!("expected a bigraph");
    };
    assert_eq!(b.bi_enumerator().right, vec![0, 5, 1]);

    let doc = ok(&[
        "construct",
        "--family",
        "choice",
        "--choice",
        "1,3,4",
        "--format",
        "json",
    ]);
    let v = validate("graph.schema.json", &doc);
    assert_eq!(v["n"], 7);
    assert_eq!(&v["degree_enumerator"].as_array().unwrap()[..3], &[0, 1, 0]);
    let doc = ok(&[
        "construct",
        "--family",
        "bipartite",
        "--n",
        "3",
        "--i",
        "1",
        "--j",
        "2",
        "--k",
        "0",
        "--format",
        "json",
    ]);
    validate("graph.schema.json", &doc);
}

#[test]
fn enumerate_formats() {
    let v = validate(
        "enumerate.schema.json",
        &ok(&["enumerate", "--graph", "complete:7"]),
    );
    assert_eq!(v["count"], 342);
    let v = validate(
        "enumerate.schema.json",
        &ok(&["enumerate", "--graph", "k2n:6"]),
    );
    assert_eq!(v["count"], 50);
    assert_eq!(v["left_len"], 7);
    let csv = ok(&["enumerate", "--graph", "complete:3", "--format", "csv"]);
    assert_eq!(csv, "e0,e1,e2\n0,0,3\n0,2,1\n1,2,0\n3,0,0\n");
}

#[test]
fn reduce_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("x3c.json");
    std::fs::write(&inst, r#"{"n": 6, "subsets": [[0,1,2],[3,4,5],[1,2,3]]}"#).unwrap();
    let v = validate(
        "reduce.schema.json",
        &ok(&[
            "reduce",
            "--kind",
            "x3c",
            "--instance",
            inst.to_str().unwrap(),
            "--decide",
        ]),
    );
    assert_eq!(v["decision"], true);
    assert_eq!(v["graph"]["m"], 3);
    assert_eq!(v["f"].as_array().unwrap().len(), 7);

    let graph = dir.path().join("k4.txt");
    std::fs::write(&graph, "graph 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let v = validate(
        "reduce.schema.json",
        &ok(&[
            "reduce",
            "--kind",
            "cubic",
            "--graph",
            graph.to_str().unwrap(),
            "--decide",
        ]),
    );
    assert_eq!(v["decision"], true);
    assert_eq!(v["threshold"], 13);
    let v = validate(
        "reduce.schema.json",
        &ok(&[
            "reduce",
            "--kind",
            "cubic",
            "--graph",
            graph.to_str().unwrap(),
        ]),
    );
    assert!(v.get("decision").is_none());
}

#[test]
fn exit_codes() {
    assert_eq!(degenum(&["frobnicate"]).code, 2);
    assert_eq!(degenum(&["vertices", "--polytope", "en"]).code, 2);
    assert_eq!(
        degenum(&["construct", "--family", "regular", "--n", "7"]).code,
        2
    );
    assert_eq!(
        degenum(&["optimize", "--graph", "complete:3", "--f", "1,2"]).code,
        1
    );
    assert_eq!(
        degenum(&["optimize", "--graph", "k2n:3", "--f", "1,2,3,4"]).code,
        2
    );
    assert_eq!(
        degenum(&["--jobs", "0", "verify", "--theorem", "en:3"]).code,
        2
    );
    let r = degenum(&["construct", "--family", "regular", "--n", "7", "--r", "3"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("both odd"), "{}", r.stderr);
    let r = degenum(&[
        "reduce",
        "--kind",
        "x3c",
        "--instance",
        "/nonexistent/x.json",
    ]);
    assert_eq!(r.code, 1);
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let cases: [&[&str]; 3] = [
        &["enumerate", "--graph", "complete:6"],
        &[
            "optimize",
            "--graph",
            "complete:7",
            "--f",
            "0,1,0,1,0,1,0",
            "--method",
            "brute",
        ],
        &["vertices", "--polytope", "all2n", "--n", "5"],
    ];
    for args in cases {
        let base = ok(args);
        assert_eq!(ok(args), base);
        let mut one = vec!["--jobs", "1"];
        one.extend_from_slice(args);
        assert_eq!(ok(&one), base);
        let mut four = vec!["--jobs", "4"];
        four.extend_from_slice(args);
        assert_eq!(ok(&four), base);
    }
}
