//! JSON documents written by the command-line tool. Every document carries
//! `"schema": 1`; object keys come out sorted.

use bipaug_core::bounds::{component_class, ComponentClass};
use bipaug_core::{
    build_block_tree, census, classify_m, classify_s, criticality, decompose, eta, lower_bound,
    matching_profile, AugmentationResult, BipartiteGraph, Edge, OpCounters, TreeNode, VerifyReport,
    WitnessKind,
};
use serde_json::{json, Value};

pub const SCHEMA: u64 = 1;

fn edge(g: &BipartiteGraph, e: Edge) -> Value {
    json!([g.label(e.a), g.label(e.b)])
}

pub fn counters(c: &OpCounters) -> Value {
    json!({
        "dfs_steps": c.dfs_steps,
        "recomputes": c.recomputes,
        "tree_edge_traversals": c.tree_edge_traversals,
        "list_links": c.list_links,
        "list_unlinks": c.list_unlinks,
        "full_rebuilds": c.full_rebuilds,
        "reductions": c.reductions,
        "total": c.total(),
    })
}

fn witness(g: &BipartiteGraph, report: &VerifyReport) -> Value {
    match report.witness {
        None => Value::Null,
        Some(w) => {
            let (kind, at) = match w.kind {
                WitnessKind::TwoVertexComponent(e) => ("two-vertex-component", edge(g, e)),
                WitnessKind::CutVertex(v) => ("cut-vertex", json!(g.label(v))),
                WitnessKind::CutEdge(e) => ("cut-edge", edge(g, e)),
            };
            json!({"component": g.label(w.component), "kind": kind, "at": at})
        }
    }
}

pub fn verify_report(g: &BipartiteGraph, report: &VerifyReport) -> Value {
    json!({
        "legal": report.legal,
        "componentwise_biconnected": report.componentwise_biconnected,
        "witness": witness(g, report),
        "size": report.size,
        "oracle_size": report.oracle_size,
        "agreement": report.agreement,
    })
}

/// Census, matching profile and, for a graph with one non-block component,
/// its criticality and case.
pub fn stats(g: &BipartiteGraph) -> Value {
    let dec = decompose(g);
    let cen = census(&dec);
    let profile = matching_profile(&dec.pendant_blocks);
    let mut out = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "components": dec.components.count(),
        "census": {
            "c_total": cen.c_total,
            "c1": cen.c1,
            "c2": cen.c2,
            "c3": cen.c3,
            "isolated_vertices": cen.isolated_vertices,
        },
        "profile": {
            "n_a": profile.n_a,
            "n_b": profile.n_b,
            "n_ab": profile.n_ab,
            "alpha": profile.alpha,
            "beta": profile.beta,
            "gamma": profile.gamma,
            "m": profile.m,
            "r": profile.r,
        },
        "lower_bound": lower_bound(&dec),
    });
    if g.count_a() < 2 || g.count_b() < 2 {
        return out;
    }
    let m_case = classify_m(&cen, &profile);
    out["m_case"] = json!(m_case.to_string());
    if let Ok(k) = eta(g, &dec) {
        out["eta"] = json!(k);
    }
    let other = (0..dec.components.count()).find(|&c| component_class(&dec, c) == ComponentClass::Other);
    if let (1, Some(c)) = (cen.c1, other) {
        let tree = build_block_tree(&dec, c).expect("non-block component has a tree");
        let report = criticality(&tree, &profile);
        let cut_label = |x: usize| match tree.nodes[x] {
            TreeNode::Cut(v) => json!(g.label(v)),
            TreeNode::Bridge(e) => edge(g, e),
            TreeNode::Block(_) => Value::Null,
        };
        out["s_case"] = json!(classify_s(&tree, &profile, &report).to_string());
        out["criticality"] = json!({
            "d_max": report.d_max,
            "massive": report.massive.map(|v| g.label(v)),
            "critical": report.critical.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
            "c_star": report.c_star.map(cut_label),
        });
    }
    out
}

pub fn augment_document(
    g: &BipartiteGraph,
    result: &AugmentationResult,
    verify: Option<&VerifyReport>,
    with_stats: bool,
) -> Value {
    let trace: Vec<Value> = result
        .trace
        .iter()
        .map(|t| {
            json!({
                "edge": edge(g, t.edge),
                "case": t.label.to_string(),
                "rule": t.rule.name(),
                "pivot": t.pivot.map(|v| g.label(v)),
            })
        })
        .collect();
    let mut out = json!({
        "schema": SCHEMA,
        "size": result.size(),
        "target": result.target,
        "added_edges": result.added_edges.iter().map(|&e| edge(g, e)).collect::<Vec<_>>(),
        "trace": trace,
        "counters": counters(&result.counters),
    });
    if let Some(r) = verify {
        out["verify"] = verify_report(g, r);
    }
    if with_stats {
        out["stats"] = stats(g);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_graph;

    #[test]
    fn spider_stats() {
        let g = parse_graph("A x a1 a2 a3\nB b1 b2 b3 b4\nE x b1\nE x b2\nE x b3\nE x b4\nE a1 b3\nE a2 b4\nE a3 b1\n")
            .unwrap();
        let s = stats(&g);
        assert_eq!(s["components"], 1);
        assert_eq!(s["m_case"], "M1");
        assert!(s["eta"].is_u64());
        assert!(s["criticality"]["d_max"].as_u64().unwrap() >= 4);
    }

    #[test]
    fn single_side_has_no_case() {
        let g = parse_graph("A a\nB b\nE a b\n").unwrap();
        let s = stats(&g);
        assert!(s.get("m_case").is_none());
        assert_eq!(s["census"]["c2"], 1);
    }
}
