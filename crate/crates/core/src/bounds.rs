//! Lower bounds, component census and case classification.

use alloc::vec::Vec;
use core::fmt;

use crate::blocks::BlockDecomposition;
use crate::graph::BipartiteGraph;
use crate::matching::{matching_profile, MatchingProfile};
use crate::tree::{BlockTree, TreeNode};

/// Counts of the multi-vertex components of a graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ComponentCensus {
    /// `C = C1 + C2`.
    pub c_total: usize,
    /// Components that are neither blocks nor isolated edges.
    pub c1: usize,
    /// Isolated edges.
    pub c2: usize,
    /// Components that are nonsingular blocks.
    pub c3: usize,
    pub isolated_vertices: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentClass {
    IsolatedVertex,
    IsolatedEdge,
    Block,
    Other,
}

pub fn component_class(dec: &BlockDecomposition, component: usize) -> ComponentClass {
    match dec.components.members[component].len() {
        1 => ComponentClass::IsolatedVertex,
        2 => ComponentClass::IsolatedEdge,
        _ if dec.component_is_block(component) => ComponentClass::Block,
        _ => ComponentClass::Other,
    }
}

pub fn census(dec: &BlockDecomposition) -> ComponentCensus {
    let mut c = ComponentCensus::default();
    for comp in 0..dec.components.count() {
        match component_class(dec, comp) {
            ComponentClass::IsolatedVertex => c.isolated_vertices += 1,
            ComponentClass::IsolatedEdge => c.c2 += 1,
            ComponentClass::Block => c.c3 += 1,
            ComponentClass::Other => c.c1 += 1,
        }
    }
    c.c_total = c.c1 + c.c2;
    c
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("the graph has {0} connected components, expected one")]
    NotConnected(usize),
}

/// `max{ max_u D(G, u) + C - 2, M + R }`, clamped at zero.
pub fn lower_bound(dec: &BlockDecomposition) -> usize {
    let d_max = dec.bcc_count.iter().copied().max().unwrap_or(0);
    let c = census(dec).c_total;
    let p = matching_profile(&dec.pendant_blocks);
    (d_max + c).saturating_sub(2).max(p.m_plus_r())
}

/// The lower bound `η(G)` of a connected graph.
pub fn eta(g: &BipartiteGraph, dec: &BlockDecomposition) -> Result<usize, BoundsError> {
    let count = dec.components.count();
    if count != 1 || g.vertex_count() == 0 {
        return Err(BoundsError::NotConnected(count));
    }
    Ok(lower_bound(dec))
}

/// Cut vertices whose degree in the block tree is at or above `M + R + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CriticalityReport {
    pub d_max: usize,
    /// A cut vertex with `D - 1 > M + R`; the one of largest degree.
    pub massive: Option<usize>,
    /// Cut vertices with `D - 1 = M + R`, in vertex order.
    pub critical: Vec<usize>,
    /// Tree node of a c-vertex of maximum degree.
    pub c_star: Option<usize>,
}

pub fn criticality(t: &BlockTree, profile: &MatchingProfile) -> CriticalityReport {
    let mr = profile.m_plus_r();
    let mut report = CriticalityReport {
        d_max: 1,
        ..Default::default()
    };
    let mut best_massive = 0;
    let mut best_c = 0;
    for (x, node) in t.nodes.iter().enumerate() {
        let d = t.degree(x);
        match *node {
            TreeNode::Cut(v) => {
                report.d_max = report.d_max.max(d);
                if d > mr + 1 && d > best_massive {
                    best_massive = d;
                    report.massive = Some(v);
                }
                if d == mr + 1 {
                    report.critical.push(v);
                }
            }
            TreeNode::Bridge(_) => {}
            TreeNode::Block(_) => continue,
        }
        if d > best_c {
            best_c = d;
            report.c_star = Some(x);
        }
    }
    report
}

/// Cases of the disconnected reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MCase {
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
}

/// Cases of the connected construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SCase {
    S1,
    S2,
    S3,
    S4_1,
    S4_2,
    S5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseLabel {
    pub m_case: MCase,
    pub s_case: Option<SCase>,
}

impl fmt::Display for MCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}", *self as usize + 1)
    }
}

impl fmt::Display for SCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SCase::S1 => "S1",
            SCase::S2 => "S2",
            SCase::S3 => "S3",
            SCase::S4_1 => "S4_1",
            SCase::S4_2 => "S4_2",
            SCase::S5 => "S5",
        })
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.s_case {
            Some(s) => write!(f, "{}/{}", self.m_case, s),
            None => write!(f, "{}/-", self.m_case),
        }
    }
}

/// Case of a graph with at least two vertices on each side.
pub fn classify_m(census: &ComponentCensus, profile: &MatchingProfile) -> MCase {
    match (census.c1, census.c2) {
        (0, 0) => MCase::M6,
        (1, 0) => MCase::M1,
        (0, 1) if census.c3 == 0 => MCase::M4,
        (0, 1) => MCase::M5,
        _ if profile.m == 0 => MCase::M2,
        _ => MCase::M3,
    }
}

/// Case of a connected graph that is not a block.
pub fn classify_s(t: &BlockTree, profile: &MatchingProfile, report: &CriticalityReport) -> SCase {
    if profile.total() <= 3 {
        SCase::S1
    } else if profile.m == 0 {
        SCase::S2
    } else if report.massive.is_some() {
        SCase::S5
    } else if report.critical.len() >= 2 {
        SCase::S3
    } else if t.branching_nodes() > 1 {
        SCase::S4_2
    } else {
        SCase::S4_1
    }
}
