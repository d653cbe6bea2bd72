use std::io::Cursor;

use bipaug::cli::{run, Io};
use bipaug::{parse_edges, parse_graph, serialize};
use bipaug_core::{augment, BipartiteGraph, Side};
use proptest::prelude::*;

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut io = Io {
        stdin: &mut input,
        stdout: &mut out,
        stderr: &mut err,
    };
    let code = run(std::iter::once("bipaug").chain(args.iter().copied()), &mut io);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const M4: &str = "A r r2\nB c c2\nE r c\n";
const P4: &str = "A a1 a2\nB b1 b2\nE a1 b1\nE a2 b1\nE a2 b2\n";

#[test]
fn augment_prints_edges_and_size() {
    let (code, out, err) = call(&["augment"], M4);
    assert_eq!((code, err.as_str()), (0, ""));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[..3].iter().all(|l| l.starts_with("ADD ")));
    assert_eq!(lines[3], "SIZE 3");
}

#[test]
fn augment_trace_and_verify() {
    let (code, out, _) = call(&["augment", "--trace", "--verify"], P4);
    assert_eq!(code, 0);
    assert_eq!(out, "ADD a1 b2 # M1/S1 matched-pair\nSIZE 1\nVERIFY ok\n");
}

#[test]
fn single_vertex_side_exits_two() {
    let (code, out, err) = call(&["augment"], "A x\nB y1 y2\nE x y1\nE x y2\n");
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.starts_with("error: ") && err.contains("no biconnector exists"), "{err}");
}

#[test]
fn parse_errors_exit_one() {
    let (code, _, err) = call(&["augment"], "A a\nA a\n");
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = call(&["augment"], "A a\nB b\nE a c\n");
    assert_eq!(code, 1);
    let (code, _, _) = call(&["frob"], "");
    assert_eq!(code, 1);
}

#[test]
fn verify_reports_witness_and_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let none = dir.path().join("none.txt");
    let good = dir.path().join("good.txt");
    std::fs::write(&graph, P4).unwrap();
    std::fs::write(&none, "").unwrap();
    std::fs::write(&good, "ADD a1 b2\nSIZE 1\n").unwrap();
    let g = graph.to_str().unwrap();

    let (code, out, _) = call(&["verify", g, none.to_str().unwrap()], "");
    assert_eq!(code, 3);
    assert!(out.contains("BICONNECTED no\nWITNESS cut vertex"), "{out}");
    assert!(out.ends_with("RESULT fail\n"));

    let (code, out, _) = call(&["verify", "--oracle", g, good.to_str().unwrap()], "");
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("BICONNECTED yes") && out.ends_with("RESULT ok\n"), "{out}");
}

#[test]
fn json_output_parses() {
    let (code, out, _) = call(&["augment", "--json", "--stats", "--verify"], P4);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["size"], 1);
    assert_eq!(doc["added_edges"].as_array().unwrap().len(), 1);
    assert_eq!(doc["stats"]["s_case"], "S1");
}

#[test]
fn gen_feeds_augment() {
    let (code, text, _) = call(&["gen", "spider", "--chains", "1,1,2,2"], "");
    assert_eq!(code, 0);
    let (code, out, _) = call(&["augment"], &text);
    assert_eq!(code, 0);
    assert!(out.ends_with("SIZE 3\n"), "{out}");
}

#[test]
fn tree_is_dot() {
    let (code, out, _) = call(&["tree"], P4);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph psi {") && out.ends_with("}\n"));
    assert_eq!(out.matches(" -- ").count(), 6);
}

#[test]
fn bench_without_timings() {
    let (code, out, _) = call(&["bench", "--no-time", "--kind", "broom", "--sizes", "100,200", "--repeat", "1"], "");
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0][0], "family");
    assert_eq!(&rows[1][..5], ["broom", "100", "100", "99", "49"]);
}

fn graph_from(na: usize, nb: usize, bits: &[bool]) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    for i in 0..na {
        g.add_vertex(format!("a{i}"), Side::A);
    }
    for j in 0..nb {
        g.add_vertex(format!("b{j}"), Side::B);
    }
    for i in 0..na {
        for j in 0..nb {
            if bits[i * nb + j] {
                g.add_edge(i, na + j).unwrap();
            }
        }
    }
    g
}

proptest! {
    #[test]
    fn serialize_round_trips(na in 1usize..6, nb in 1usize..6, bits in prop::collection::vec(any::<bool>(), 25)) {
        let g = graph_from(na, nb, &bits);
        let text = serialize(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn augment_output_reads_back(na in 2usize..6, nb in 2usize..6, bits in prop::collection::vec(any::<bool>(), 25)) {
        let g = graph_from(na, nb, &bits);
        let (code, out, _) = call(&["augment"], &serialize(&g));
        prop_assert_eq!(code, 0);
        let edges = parse_edges(&g, &out).unwrap();
        prop_assert_eq!(edges, augment(&g).unwrap().added_edges);
    }
}
