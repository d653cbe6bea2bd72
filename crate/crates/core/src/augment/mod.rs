//! The augmentation driver.
//!
//! A graph is first classified by its multi-vertex components (cases M1 to
//! M6). Disconnected inputs are reduced to a single connected non-block
//! component, which is then handled by the connected construction (cases S1
//! to S5). Every inserted edge is recorded in a trace together with the
//! case and the rule that produced it.

mod connected;
mod disconnected;

use alloc::vec::Vec;
use core::fmt;

use crate::blocks::decompose_counted;
use crate::bounds::{census, classify_m, lower_bound, CaseLabel, MCase, SCase};
use crate::counters::OpCounters;
use crate::graph::{BipartiteGraph, Edge, Side};
use crate::matching::matching_profile;

/// The rule that produced one inserted edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Binding edge of a pair in a maximum legal matching.
    MatchedPair,
    /// A leftover pendant block joined to a matched one.
    CoverLeftover,
    /// Degree-one vertex joined to the neighbor of the first one.
    ToHub,
    /// Degree-one vertex joined to the alternate hub.
    ToAlternateHub,
    /// Pair of leaves clinging to different critical vertices.
    CrossCling,
    /// Pair chosen by the rooted tree index.
    BranchPair,
    /// Two single-leaf branches of the massive vertex.
    MergeChains,
    /// A single-leaf branch joined to a multi-leaf branch.
    ChainIntoBranch,
    StarHub,
    StarSplit,
    RoundRobin,
    JoinComponents,
    EdgeAndVertices,
    EdgeToBlock,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::MatchedPair => "matched-pair",
            Rule::CoverLeftover => "cover-leftover",
            Rule::ToHub => "to-hub",
            Rule::ToAlternateHub => "to-alternate-hub",
            Rule::CrossCling => "cross-cling",
            Rule::BranchPair => "branch-pair",
            Rule::MergeChains => "merge-chains",
            Rule::ChainIntoBranch => "chain-into-branch",
            Rule::StarHub => "star-hub",
            Rule::StarSplit => "star-split",
            Rule::RoundRobin => "round-robin",
            Rule::JoinComponents => "join-components",
            Rule::EdgeAndVertices => "edge-and-vertices",
            Rule::EdgeToBlock => "edge-to-block",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub edge: Edge,
    pub label: CaseLabel,
    pub rule: Rule,
    /// The massive cut vertex during its reduction phase.
    pub pivot: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentationResult {
    pub added_edges: Vec<Edge>,
    pub trace: Vec<TraceEntry>,
    /// Lower bound the construction meets.
    pub target: usize,
    pub counters: OpCounters,
}

impl AugmentationResult {
    pub fn size(&self) -> usize {
        self.added_edges.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AugmentError {
    #[error("side {side} has a single vertex: no biconnector exists")]
    NoBiconnector { side: Side },
    #[error("leaves do not split evenly between critical vertices {first} and {second}")]
    ClingPartitionViolation { first: usize, second: usize },
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Check the incremental indices against from-scratch rebuilds after
    /// every step. Quadratic; meant for tests.
    pub audit: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            audit: cfg!(debug_assertions),
        }
    }
}

pub fn augment(g: &BipartiteGraph) -> Result<AugmentationResult, AugmentError> {
    augment_with(g, &SolveOptions::default())
}

/// Graphs with an empty side or no edges are already componentwise
/// biconnected and get an empty result. Otherwise a side with a single
/// vertex admits no biconnector.
pub fn augment_with(g: &BipartiteGraph, opts: &SolveOptions) -> Result<AugmentationResult, AugmentError> {
    if g.count_a() == 0 || g.count_b() == 0 || g.edge_count() == 0 {
        return Ok(AugmentationResult {
            added_edges: Vec::new(),
            trace: Vec::new(),
            target: 0,
            counters: OpCounters::default(),
        });
    }
    for side in [Side::A, Side::B] {
        let count = if side == Side::A { g.count_a() } else { g.count_b() };
        if count == 1 {
            return Err(AugmentError::NoBiconnector { side });
        }
    }
    let mut solver = Solver::new(g.unlabeled(), *opts);
    let target = solver.solve()?;
    Ok(AugmentationResult {
        added_edges: solver.trace.iter().map(|t| t.edge).collect(),
        trace: solver.trace,
        target,
        counters: solver.ops,
    })
}

pub(crate) struct Solver {
    /// Working graph; holds the first `applied` trace edges.
    pub(crate) g: BipartiteGraph,
    applied: usize,
    pub(crate) trace: Vec<TraceEntry>,
    pub(crate) ops: OpCounters,
    pub(crate) opts: SolveOptions,
}

impl Solver {
    pub(crate) fn new(g: BipartiteGraph, opts: SolveOptions) -> Self {
        Solver {
            g,
            applied: 0,
            trace: Vec::new(),
            ops: OpCounters::default(),
            opts,
        }
    }

    pub(crate) fn push(&mut self, edge: Edge, m_case: MCase, s_case: Option<SCase>, rule: Rule, pivot: Option<usize>) {
        debug_assert!(!self.g.has_edge(edge.a, edge.b), "inserted edge already present");
        debug_assert!(self.g.side(edge.a) == Side::A && self.g.side(edge.b) == Side::B);
        self.trace.push(TraceEntry {
            edge,
            label: CaseLabel { m_case, s_case },
            rule,
            pivot,
        });
    }

    /// Brings the working graph up to date with the trace.
    pub(crate) fn sync(&mut self) {
        let new: Vec<Edge> = self.trace[self.applied..].iter().map(|t| t.edge).collect();
        self.g.extend_edges(&new);
        self.applied = self.trace.len();
    }

    /// Classifies the whole graph, emits its edges and returns the target.
    fn solve(&mut self) -> Result<usize, AugmentError> {
        let dec = decompose_counted(&self.g, &mut self.ops);
        self.ops.recomputes += 1;
        let m_case = classify_m(&census(&dec), &matching_profile(&dec.pendant_blocks));
        let target = match m_case {
            MCase::M4 => 3,
            MCase::M5 => 2,
            MCase::M6 => 0,
            _ => lower_bound(&dec),
        };
        self.solve_case(m_case, dec)?;
        Ok(target)
    }
}
