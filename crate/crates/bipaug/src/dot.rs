//! Graphviz export of the block trees. Blocks and degree-one vertices are
//! drawn as boxes, cut vertices and cut edges as circles.

use std::fmt::Write as _;

use bipaug_core::tree::build_block_forest;
use bipaug_core::{decompose, BipartiteGraph, TreeNode};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn block_tree_dot(g: &BipartiteGraph) -> String {
    let dec = decompose(g);
    let mut out = String::from("graph psi {\n");
    let mut base = 0;
    for tree in build_block_forest(&dec).into_iter().flatten() {
        let _ = writeln!(out, "  subgraph cluster_{} {{", tree.component);
        let _ = writeln!(out, "    label={};", quote(&format!("component {}", tree.component)));
        for (x, node) in tree.nodes.iter().enumerate() {
            let (shape, label) = match *node {
                TreeNode::Block(id) => {
                    let names: Vec<&str> = dec.block_vertices(id).iter().map(|&v| g.label(v)).collect();
                    ("box", names.join(" "))
                }
                TreeNode::Cut(v) => ("circle", g.label(v).to_string()),
                TreeNode::Bridge(e) => ("circle", format!("{}-{}", g.label(e.a), g.label(e.b))),
            };
            let _ = writeln!(out, "    n{} [shape={shape}, label={}];", base + x, quote(&label));
        }
        for x in 0..tree.len() {
            for &y in tree.neighbors(x).iter().filter(|&&y| y > x) {
                let _ = writeln!(out, "    n{} -- n{};", base + x, base + y);
            }
        }
        out.push_str("  }\n");
        base += tree.len();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_graph;

    #[test]
    fn p4_tree() {
        let g = parse_graph("A a1 a2\nB b1 b2\nE a1 b1\nE a2 b1\nE a2 b2\n").unwrap();
        let dot = block_tree_dot(&g);
        assert_eq!(dot.matches("shape=box").count(), 2);
        assert_eq!(dot.matches("shape=circle").count(), 5);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(dot.contains("label=\"a2-b1\""));
    }

    #[test]
    fn quotes_are_escaped() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
