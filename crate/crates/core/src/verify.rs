//! Deletion-based checks and an exhaustive optimum.
//!
//! Nothing here uses the lowpoint decomposition: connectivity is tested by
//! plain searches after deleting each vertex and each edge in turn.

use alloc::vec;
use alloc::vec::Vec;

use crate::augment::AugmentationResult;
use crate::graph::{BipartiteGraph, Edge, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// A component made of one edge.
    TwoVertexComponent(Edge),
    CutVertex(usize),
    CutEdge(Edge),
}

/// Why a component is not biconnected. `component` is the smallest vertex
/// of the component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub component: usize,
    pub kind: WitnessKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// Every edge joins `A` to `B`, is new and appears once.
    pub legal: bool,
    pub componentwise_biconnected: bool,
    pub witness: Option<Witness>,
    pub size: usize,
    pub oracle_size: Option<usize>,
    /// Legal, biconnecting and, when the oracle ran, of optimal size.
    pub agreement: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{count} legal edges exceed the enumeration limit of {limit}")]
    TooManyLegalEdges { count: usize, limit: usize },
    #[error("cap {cap} exceeds the enumeration limit of {limit}")]
    CapTooLarge { cap: usize, limit: usize },
    #[error("no biconnecting set of at most {cap} edges")]
    CapExceeded { cap: usize },
}

pub const MAX_LEGAL_EDGES: usize = 30;
pub const MAX_CAP: usize = 8;

fn components(g: &BipartiteGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Vertices of `comp` reached from `start` with `skip_vertex` and
/// `skip_edge` removed.
fn reach_count(g: &BipartiteGraph, start: usize, skip_vertex: Option<usize>, skip_edge: Option<Edge>) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    if let Some(v) = skip_vertex {
        seen[v] = true;
    }
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if seen[w] {
                continue;
            }
            if let Some(e) = skip_edge {
                if (e.a == u && e.b == w) || (e.a == w && e.b == u) {
                    continue;
                }
            }
            seen[w] = true;
            count += 1;
            stack.push(w);
        }
    }
    count
}

/// Every component is an isolated vertex or stays connected after deleting
/// any one vertex or any one edge.
pub fn check_componentwise_biconnected(g: &BipartiteGraph) -> Result<(), Witness> {
    for comp in components(g) {
        let root = comp[0];
        let fail = |kind| Err(Witness { component: root, kind });
        match comp.len() {
            1 => continue,
            2 => {
                return fail(WitnessKind::TwoVertexComponent(
                    g.edge_between(comp[0], comp[1]).expect("edge of a two-vertex component"),
                ))
            }
            _ => {}
        }
        for &v in &comp {
            let start = if v == comp[0] { comp[1] } else { comp[0] };
            if reach_count(g, start, Some(v), None) != comp.len() - 1 {
                return fail(WitnessKind::CutVertex(v));
            }
        }
        for e in g.edges().iter().filter(|e| comp.binary_search(&e.a).is_ok()) {
            if reach_count(g, e.a, None, Some(*e)) != comp.len() {
                return fail(WitnessKind::CutEdge(*e));
            }
        }
    }
    Ok(())
}

/// Whether `u` and `v` stay connected after deleting any one edge or any
/// one vertex other than themselves.
pub fn naive_biconnected_pair(g: &BipartiteGraph, u: usize, v: usize) -> bool {
    let joined = |skip_vertex: Option<usize>, skip_edge: Option<Edge>| {
        let mut seen = vec![false; g.vertex_count()];
        if let Some(x) = skip_vertex {
            seen[x] = true;
        }
        seen[u] = true;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for &w in g.neighbors(x) {
                let cut = skip_edge.is_some_and(|e| (e.a == x && e.b == w) || (e.a == w && e.b == x));
                if !seen[w] && !cut {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen[v] && skip_vertex != Some(v)
    };
    if u == v || !joined(None, None) {
        return false;
    }
    g.vertices().filter(|&w| w != u && w != v).all(|w| joined(Some(w), None))
        && g.edges().iter().all(|&e| joined(None, Some(e)))
}

/// Bit-set version of the componentwise check for graphs with at most 64
/// vertices.
fn masks_ok(adj: &mut [u64]) -> bool {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let reach = |adj: &[u64], start: usize, allowed: u64| {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[u];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    };
    let mut remaining = all;
    while remaining != 0 {
        let s = remaining.trailing_zeros() as usize;
        let comp = reach(adj, s, all);
        remaining &= !comp;
        match comp.count_ones() {
            1 => continue,
            2 => return false,
            _ => {}
        }
        let mut vs = comp;
        while vs != 0 {
            let v = vs.trailing_zeros() as usize;
            vs &= vs - 1;
            let allowed = comp & !(1u64 << v);
            if reach(adj, allowed.trailing_zeros() as usize, allowed) != allowed {
                return false;
            }
        }
        let mut vs = comp;
        while vs != 0 {
            let u = vs.trailing_zeros() as usize;
            vs &= vs - 1;
            let mut nb = adj[u] & !((1u64 << u) | ((1u64 << u) - 1));
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                adj[u] &= !(1u64 << w);
                adj[w] &= !(1u64 << u);
                let ok = reach(adj, u, comp) == comp;
                adj[u] |= 1u64 << w;
                adj[w] |= 1u64 << u;
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Legal edges of `g` ordered by `A` endpoint, then `B` endpoint.
pub fn legal_edges(g: &BipartiteGraph) -> Vec<Edge> {
    let bs: Vec<usize> = g.vertices_on(Side::B).collect();
    let mut out = Vec::new();
    for a in g.vertices_on(Side::A) {
        for &b in &bs {
            if !g.has_edge(a, b) {
                out.push(Edge { a, b });
            }
        }
    }
    out
}

/// Smallest biconnecting set of legal edges, found by trying all subsets of
/// size `0, 1, ..., cap` in lexicographic order.
pub fn brute_force_optimal(g: &BipartiteGraph, cap: usize) -> Result<(usize, Vec<Edge>), OracleError> {
    let legal = legal_edges(g);
    if legal.len() > MAX_LEGAL_EDGES {
        return Err(OracleError::TooManyLegalEdges {
            count: legal.len(),
            limit: MAX_LEGAL_EDGES,
        });
    }
    if cap > MAX_CAP {
        return Err(OracleError::CapTooLarge { cap, limit: MAX_CAP });
    }
    let n = g.vertex_count();
    let small = n <= 64;
    let mut base = vec![0u64; if small { n } else { 0 }];
    if small {
        for e in g.edges() {
            base[e.a] |= 1u64 << e.b;
            base[e.b] |= 1u64 << e.a;
        }
    }
    let test = |pick: &[usize]| -> bool {
        if small {
            let mut adj = base.clone();
            for &i in pick {
                let e = legal[i];
                adj[e.a] |= 1u64 << e.b;
                adj[e.b] |= 1u64 << e.a;
            }
            masks_ok(&mut adj)
        } else {
            let edges: Vec<Edge> = pick.iter().map(|&i| legal[i]).collect();
            let h = g.add_edges(&edges).expect("legal edges");
            check_componentwise_biconnected(&h).is_ok()
        }
    };
    for k in 0..=cap.min(legal.len()) {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            if test(&pick) {
                return Ok((k, pick.iter().map(|&i| legal[i]).collect()));
            }
            // next combination in lexicographic order
            let mut i = k;
            while i > 0 && pick[i - 1] == legal.len() - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            pick[i - 1] += 1;
            for j in i..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Err(OracleError::CapExceeded { cap })
}

/// Checks a proposed edge set for `g`, optionally against the oracle.
pub fn verify_edges(g: &BipartiteGraph, edges: &[Edge], use_oracle: bool) -> VerifyReport {
    let augmented = g.add_edges(edges);
    let legal = augmented.is_ok();
    let witness = augmented
        .as_ref()
        .ok()
        .and_then(|h| check_componentwise_biconnected(h).err());
    let componentwise_biconnected = legal && witness.is_none();
    let oracle_size = if use_oracle {
        brute_force_optimal(g, MAX_CAP).ok().map(|(k, _)| k)
    } else {
        None
    };
    let agreement = componentwise_biconnected && oracle_size.is_none_or(|k| k == edges.len());
    VerifyReport {
        legal,
        componentwise_biconnected,
        witness,
        size: edges.len(),
        oracle_size,
        agreement,
    }
}

pub fn verify_result(g: &BipartiteGraph, result: &AugmentationResult, use_oracle: bool) -> VerifyReport {
    verify_edges(g, &result.added_edges, use_oracle)
}
