#![allow(dead_code)]

use std::collections::HashMap;

use bipaug_core::{BipartiteGraph, Side};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The bipartite graph on `na + nb` vertices whose edges are the set bits
/// of `mask`, bit `i * nb + j` standing for `a_i b_j`.
pub fn from_mask(na: usize, nb: usize, mask: u64) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    for i in 0..na {
        g.add_vertex(format!("a{i}"), Side::A);
    }
    for j in 0..nb {
        g.add_vertex(format!("b{j}"), Side::B);
    }
    for i in 0..na {
        for j in 0..nb {
            if mask >> (i * nb + j) & 1 == 1 {
                g.add_edge(i, na + j).unwrap();
            }
        }
    }
    g
}

pub fn all_graphs(na: usize, nb: usize) -> impl Iterator<Item = BipartiteGraph> {
    (0..1u64 << (na * nb)).map(move |m| from_mask(na, nb, m))
}

/// Random tree on `n` vertices plus up to `extra` chords.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    g.add_vertex("v0", Side::A);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let side = g.side(u).opposite();
        g.add_vertex(format!("v{v}"), side);
        g.add_edge(u, v).unwrap();
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let _ = g.add_edge(u, v);
    }
    g
}

/// Sides fixed up front, a random forest over them, then `extra` random
/// edges. Often disconnected.
pub fn random_forest(rng: &mut ChaCha8Rng, na: usize, nb: usize, extra: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    for i in 0..na {
        g.add_vertex(format!("a{i}"), Side::A);
    }
    for j in 0..nb {
        g.add_vertex(format!("b{j}"), Side::B);
    }
    for v in 1..na + nb {
        let cands: Vec<usize> = (0..v).filter(|&u| g.side(u) != g.side(v)).collect();
        if cands.is_empty() || rng.gen_bool(0.1) {
            continue;
        }
        let u = cands[rng.gen_range(0..cands.len())];
        let _ = g.add_edge(u, v);
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..na);
        let b = na + rng.gen_range(0..nb);
        let _ = g.add_edge(a, b);
    }
    g
}

/// A center with several arms: bare chains, chains with extra leaves and
/// chains ending in a 4-cycle. Most of these have a massive center.
pub fn random_hub(rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    g.add_vertex("c", Side::A);
    for _ in 0..rng.gen_range(3..12) {
        let len = rng.gen_range(1..5);
        let mut prev = 0;
        let mut chain = Vec::new();
        for _ in 0..len {
            let v = g.add_vertex(format!("v{}", g.vertex_count()), g.side(prev).opposite());
            g.add_edge(prev, v).unwrap();
            chain.push(v);
            prev = v;
        }
        if rng.gen_bool(0.3) {
            let at = chain[rng.gen_range(0..chain.len())];
            for _ in 0..rng.gen_range(1..3) {
                let v = g.add_vertex(format!("v{}", g.vertex_count()), g.side(at).opposite());
                g.add_edge(at, v).unwrap();
            }
        }
        if len >= 3 && rng.gen_bool(0.3) {
            let v = g.add_vertex(format!("v{}", g.vertex_count()), g.side(chain[len - 2]));
            g.add_edge(chain[len - 3], v).unwrap();
            g.add_edge(v, chain[len - 1]).unwrap();
        }
    }
    g
}

/// Largest legal matching on a multiset of pendant types, by trying every
/// partner for the first remaining element. A, B and AB counts in order.
pub fn brute_force_matching(counts: [usize; 3]) -> usize {
    fn legal(x: usize, y: usize) -> bool {
        // A=0, B=1, AB=2; only A-A and B-B are illegal
        !(x == y && x < 2)
    }
    fn go(c: [usize; 3], memo: &mut HashMap<[usize; 3], usize>) -> usize {
        if let Some(&k) = memo.get(&c) {
            return k;
        }
        let Some(first) = (0..3).find(|&t| c[t] > 0) else {
            return 0;
        };
        let mut rest = c;
        rest[first] -= 1;
        let mut best = go(rest, memo);
        for t in 0..3 {
            if rest[t] > 0 && legal(first, t) {
                let mut r = rest;
                r[t] -= 1;
                best = best.max(1 + go(r, memo));
            }
        }
        memo.insert(c, best);
        best
    }
    go(counts, &mut HashMap::new())
}

/// Number of components the component of `v` falls into once `v` is
/// deleted, found by plain searches.
pub fn naive_branch_count(g: &BipartiteGraph, v: usize) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    seen[v] = true;
    let mut count = 0;
    for &s in g.neighbors(v) {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Whether `g` is connected with at least one edge.
pub fn is_connected(g: &BipartiteGraph) -> bool {
    g.vertex_count() >= 2 && g.connected_components().count() == 1
}
