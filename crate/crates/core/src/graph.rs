//! Bipartite graph storage, legality checks and connected components.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Side of the bipartition a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// An edge stored with its A endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn other(self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("vertex `{0}` declared on both sides")]
    SideConflict(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("self loop on vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) joins two vertices of the same side")]
    BipartitenessViolation(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) is not a legal edge")]
    IllegalEdge(usize, usize),
}

/// `G = (A, B, E)` with dense vertex indices in declaration order.
///
/// Adjacency lists are kept in edge insertion order, so two graphs built by
/// the same sequence of calls compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BipartiteGraph {
    labels: Vec<String>,
    sides: Vec<Side>,
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    count_a: usize,
}

impl BipartiteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a vertex and returns its index. Labels are not checked for
    /// uniqueness here; the text parser does that.
    pub fn add_vertex(&mut self, label: impl Into<String>, side: Side) -> usize {
        let id = self.sides.len();
        self.labels.push(label.into());
        self.sides.push(side);
        self.adj.push(Vec::new());
        if side == Side::A {
            self.count_a += 1;
        }
        id
    }

    /// Inserts the edge `{u, v}` after checking that it keeps the graph
    /// simple and bipartite.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<Edge, GraphError> {
        let e = self.edge_between(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(e.a, e.b));
        }
        self.push_edge(e);
        Ok(e)
    }

    pub(crate) fn push_edge(&mut self, e: Edge) {
        self.adj[e.a].push(e.b);
        self.adj[e.b].push(e.a);
        self.edges.push(e);
    }

    /// Appends edges known to be legal and absent, growing each adjacency
    /// list at most once.
    pub(crate) fn extend_edges(&mut self, edges: &[Edge]) {
        let mut extra = vec![0usize; self.adj.len()];
        for e in edges {
            extra[e.a] += 1;
            extra[e.b] += 1;
        }
        for (list, &k) in self.adj.iter_mut().zip(&extra) {
            if k > 0 {
                list.reserve_exact(k);
            }
        }
        self.edges.reserve(edges.len());
        for &e in edges {
            self.push_edge(e);
        }
    }

    /// Normalizes `{u, v}` into an [`Edge`], rejecting self loops and
    /// same-side pairs. Does not look at `E`.
    pub fn edge_between(&self, u: usize, v: usize) -> Result<Edge, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match (self.sides[u], self.sides[v]) {
            (Side::A, Side::B) => Ok(Edge { a: u, b: v }),
            (Side::B, Side::A) => Ok(Edge { a: v, b: u }),
            _ => Err(GraphError::BipartitenessViolation(u, v)),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.sides.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Scans the shorter of the two adjacency lists.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.adj.len() || v >= self.adj.len() {
            return false;
        }
        let (x, y) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[x].contains(&y)
    }

    /// True iff exactly one endpoint is in `A` and `{u, v}` is not yet an edge.
    pub fn is_legal_edge(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(u != v && self.sides[u] != self.sides[v] && !self.has_edge(u, v))
    }

    /// Returns `G ∪ L`. Every edge of `L` must be legal in `self` and `L`
    /// must not repeat an edge.
    pub fn add_edges(&self, edges: &[Edge]) -> Result<BipartiteGraph, GraphError> {
        let mut out = self.clone();
        for &e in edges {
            if !self.is_legal_edge(e.a, e.b)? || self.sides[e.a] != Side::A {
                return Err(GraphError::IllegalEdge(e.a, e.b));
            }
            if out.has_edge(e.a, e.b) {
                return Err(GraphError::DuplicateEdge(e.a, e.b));
            }
            out.push_edge(e);
        }
        Ok(out)
    }

    pub fn vertex_count(&self) -> usize {
        self.sides.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn count_a(&self) -> usize {
        self.count_a
    }

    pub fn count_b(&self) -> usize {
        self.sides.len() - self.count_a
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.sides.len()
    }

    pub fn vertices_on(&self, side: Side) -> impl Iterator<Item = usize> + '_ {
        self.vertices().filter(move |&v| self.sides[v] == side)
    }

    pub fn connected_components(&self) -> ComponentPartition {
        ComponentPartition::of(self)
    }

    /// The subgraph induced by `members` (which must be sorted), with
    /// vertices renumbered in that order.
    /// Copy with every label empty, for internal work on the structure.
    pub(crate) fn unlabeled(&self) -> BipartiteGraph {
        BipartiteGraph {
            labels: vec![String::new(); self.labels.len()],
            sides: self.sides.clone(),
            adj: self.adj.clone(),
            edges: self.edges.clone(),
            count_a: self.count_a,
        }
    }

    pub fn induced(&self, members: &[usize]) -> BipartiteGraph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        let mut sub = BipartiteGraph::new();
        for &v in members {
            local[v] = sub.add_vertex(self.labels[v].clone(), self.sides[v]);
        }
        for e in &self.edges {
            if local[e.a] != usize::MAX && local[e.b] != usize::MAX {
                sub.push_edge(Edge {
                    a: local[e.a],
                    b: local[e.b],
                });
            }
        }
        sub
    }
}

/// Exact partition of the vertex set into connected components, indexed by
/// the smallest vertex of each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub component_of: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn of(g: &BipartiteGraph) -> Self {
        let n = g.vertex_count();
        let mut component_of = vec![usize::MAX; n];
        let mut members = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if component_of[s] != usize::MAX {
                continue;
            }
            let id = members.len();
            members.push(Vec::new());
            component_of[s] = id;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in g.neighbors(u) {
                    if component_of[w] == usize::MAX {
                        component_of[w] = id;
                        stack.push(w);
                    }
                }
            }
        }
        for v in 0..n {
            members[component_of[v]].push(v);
        }
        ComponentPartition {
            component_of,
            members,
        }
    }

    pub fn count(&self) -> usize {
        self.members.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> BipartiteGraph {
        let mut g = BipartiteGraph::new();
        let a1 = g.add_vertex("a1", Side::A);
        let a2 = g.add_vertex("a2", Side::A);
        let b1 = g.add_vertex("b1", Side::B);
        let b2 = g.add_vertex("b2", Side::B);
        g.add_edge(a1, b1).unwrap();
        g.add_edge(a2, b1).unwrap();
        g.add_edge(a2, b2).unwrap();
        g
    }

    #[test]
    fn p4_degrees() {
        let g = p4();
        assert_eq!((g.count_a(), g.count_b(), g.edge_count()), (2, 2, 3));
        let deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(deg, vec![1, 2, 2, 1]);
    }

    #[test]
    fn legality() {
        let g = p4();
        assert!(g.is_legal_edge(0, 3).unwrap());
        assert!(!g.is_legal_edge(0, 2).unwrap());
        assert!(!g.is_legal_edge(0, 1).unwrap());
        assert_eq!(g.is_legal_edge(0, 9), Err(GraphError::UnknownVertex(9)));
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = p4();
        assert_eq!(g.add_edge(0, 1), Err(GraphError::BipartitenessViolation(0, 1)));
        assert_eq!(g.add_edge(2, 2), Err(GraphError::SelfLoop(2)));
        assert_eq!(g.add_edge(2, 0), Err(GraphError::DuplicateEdge(0, 2)));
    }

    #[test]
    fn add_edges_value_semantics() {
        let g = p4();
        let c4 = g.add_edges(&[Edge { a: 0, b: 3 }]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        assert_eq!(g.add_edges(&[]).unwrap(), g);
        assert_eq!(
            g.add_edges(&[Edge { a: 0, b: 2 }]),
            Err(GraphError::IllegalEdge(0, 2))
        );
        let e = Edge { a: 0, b: 3 };
        assert_eq!(g.add_edges(&[e, e]), Err(GraphError::DuplicateEdge(0, 3)));
    }

    #[test]
    fn components() {
        let mut g = p4().add_edges(&[Edge { a: 0, b: 3 }]).unwrap();
        assert_eq!(g.connected_components().count(), 1);
        g.add_vertex("a3", Side::A);
        let parts = g.connected_components();
        assert_eq!(parts.count(), 2);
        assert_eq!(parts.members[1], vec![4]);
        assert_eq!(BipartiteGraph::new().connected_components().count(), 0);
    }
}
