//! Deterministic instance generators for tests and benchmarks.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{BipartiteGraph, Side};

#[derive(Clone, Debug, PartialEq)]
pub enum InstanceKind {
    /// Path on `length` vertices, alternating sides and starting in `A`.
    Path { length: usize },
    /// Even cycle on `length` vertices.
    Cycle { length: usize },
    /// Center `x` in `A` with one hanging path per entry of `chains`.
    Spider { chains: Vec<usize> },
    /// Adjacent hubs `a0`, `b0`, each carrying `bristles` leaves.
    Broom { bristles: usize },
    /// Path of `spine` vertices, each with `legs` leaves.
    Caterpillar { spine: usize, legs: usize },
    /// Each pair of `A x B` becomes an edge with probability `p`.
    Random { a: usize, b: usize, p: f64 },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(&'static str),
}

pub fn generate_instance(kind: &InstanceKind, seed: u64) -> Result<BipartiteGraph, GenerateError> {
    match kind {
        InstanceKind::Path { length } => Ok(path(*length)),
        InstanceKind::Cycle { length } => {
            if *length < 4 || length % 2 != 0 {
                return Err(GenerateError::InvalidParams("cycle length must be even and >= 4"));
            }
            let mut g = path(*length);
            g.add_edge(0, length - 1).expect("closing edge is legal");
            Ok(g)
        }
        InstanceKind::Spider { chains } => {
            if chains.contains(&0) {
                return Err(GenerateError::InvalidParams("spider chains must be nonempty"));
            }
            Ok(spider(chains))
        }
        InstanceKind::Broom { bristles } => Ok(broom(*bristles)),
        InstanceKind::Caterpillar { spine, legs } => {
            if *spine == 0 {
                return Err(GenerateError::InvalidParams("caterpillar spine must be nonempty"));
            }
            Ok(caterpillar(*spine, *legs))
        }
        InstanceKind::Random { a, b, p } => {
            if !(0.0..=1.0).contains(p) {
                return Err(GenerateError::InvalidParams("edge probability must lie in [0, 1]"));
            }
            Ok(random(*a, *b, *p, seed))
        }
    }
}

// A vertices are declared before B vertices: a1..ak, then b1..bk.
fn path(length: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    let na = length.div_ceil(2);
    let ids: Vec<usize> = (0..na)
        .map(|i| g.add_vertex(format!("a{}", i + 1), Side::A))
        .collect();
    let idb: Vec<usize> = (0..length / 2)
        .map(|i| g.add_vertex(format!("b{}", i + 1), Side::B))
        .collect();
    let at = |k: usize| if k.is_multiple_of(2) { ids[k / 2] } else { idb[k / 2] };
    for k in 1..length {
        g.add_edge(at(k - 1), at(k)).expect("path edge is legal");
    }
    g
}

fn spider(chains: &[usize]) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    let x = g.add_vertex("x", Side::A);
    let label = |i: usize, level: usize| {
        let side = if level % 2 == 1 { 'b' } else { 'a' };
        if level <= 2 {
            format!("{side}{}", i + 1)
        } else {
            format!("{side}{}_{level}", i + 1)
        }
    };
    // Declaration order: every A vertex, then every B vertex.
    let mut ids: Vec<Vec<usize>> = chains.iter().map(|&len| vec_of(len)).collect();
    for (i, &len) in chains.iter().enumerate() {
        for level in (2..=len).step_by(2) {
            ids[i][level - 1] = g.add_vertex(label(i, level), Side::A);
        }
    }
    for (i, &len) in chains.iter().enumerate() {
        for level in (1..=len).step_by(2) {
            ids[i][level - 1] = g.add_vertex(label(i, level), Side::B);
        }
    }
    for chain in &ids {
        g.add_edge(x, chain[0]).expect("leg edge is legal");
    }
    for chain in &ids {
        for w in chain.windows(2) {
            g.add_edge(w[0], w[1]).expect("chain edge is legal");
        }
    }
    g
}

fn vec_of(len: usize) -> Vec<usize> {
    alloc::vec![usize::MAX; len]
}

fn broom(bristles: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    let a: Vec<usize> = (0..=bristles)
        .map(|i| g.add_vertex(format!("a{i}"), Side::A))
        .collect();
    let b: Vec<usize> = (0..=bristles)
        .map(|i| g.add_vertex(format!("b{i}"), Side::B))
        .collect();
    for &leaf in &b[1..] {
        g.add_edge(a[0], leaf).expect("bristle edge is legal");
    }
    g.add_edge(a[0], b[0]).expect("handle edge is legal");
    for &leaf in &a[1..] {
        g.add_edge(b[0], leaf).expect("bristle edge is legal");
    }
    g
}

fn caterpillar(spine: usize, legs: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    let side_of = |k: usize| if k.is_multiple_of(2) { Side::A } else { Side::B };
    let spine_ids: Vec<usize> = (0..spine)
        .map(|k| g.add_vertex(format!("s{k}"), side_of(k)))
        .collect();
    for k in 1..spine {
        g.add_edge(spine_ids[k - 1], spine_ids[k]).expect("spine edge is legal");
    }
    for (k, &s) in spine_ids.iter().enumerate() {
        for j in 0..legs {
            let leaf = g.add_vertex(format!("l{k}_{j}"), side_of(k).opposite());
            g.add_edge(s, leaf).expect("leg edge is legal");
        }
    }
    g
}

fn random(na: usize, nb: usize, p: f64, seed: u64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = BipartiteGraph::new();
    let a: Vec<usize> = (0..na)
        .map(|i| g.add_vertex(format!("a{}", i + 1), Side::A))
        .collect();
    let b: Vec<usize> = (0..nb)
        .map(|i| g.add_vertex(format!("b{}", i + 1), Side::B))
        .collect();
    for &u in &a {
        for &v in &b {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("random edge is legal");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn path_four_is_p4() {
        let g = generate_instance(&InstanceKind::Path { length: 4 }, 0).unwrap();
        let labels: Vec<&str> = g.vertices().map(|v| g.label(v)).collect();
        assert_eq!(labels, vec!["a1", "a2", "b1", "b2"]);
        let edges: Vec<(&str, &str)> = g
            .edges()
            .iter()
            .map(|e| (g.label(e.a), g.label(e.b)))
            .collect();
        assert_eq!(edges, vec![("a1", "b1"), ("a2", "b1"), ("a2", "b2")]);
    }

    #[test]
    fn spider_fixture() {
        let g = generate_instance(&InstanceKind::Spider { chains: vec![1, 1, 2, 2] }, 0).unwrap();
        let labels: Vec<&str> = g.vertices().map(|v| g.label(v)).collect();
        assert_eq!(labels, vec!["x", "a3", "a4", "b1", "b2", "b3", "b4"]);
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(1, 5) && g.has_edge(2, 6));
    }

    #[test]
    fn random_is_reproducible() {
        let kind = InstanceKind::Random { a: 3, b: 3, p: 0.5 };
        assert_eq!(generate_instance(&kind, 7), generate_instance(&kind, 7));
    }

    #[test]
    fn bad_params() {
        assert!(generate_instance(&InstanceKind::Cycle { length: 5 }, 0).is_err());
        assert!(generate_instance(&InstanceKind::Random { a: 1, b: 1, p: 2.0 }, 0).is_err());
        assert!(generate_instance(&InstanceKind::Spider { chains: vec![1, 0] }, 0).is_err());
    }
}
