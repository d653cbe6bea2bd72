//! Incremental indices driving the two reduction phases.

pub mod chain;
pub mod delta;
pub mod list;

pub use chain::{ChainIndex, ChainMove};
pub use delta::{AugTreeIndex, IndexNode, PairPath};

use crate::blocks::PendantType;

/// A leaf of an index with its smallest noncut vertex on each side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeafInfo {
    pub ptype: PendantType,
    pub rep_a: Option<usize>,
    pub rep_b: Option<usize>,
}

impl LeafInfo {
    /// Leaf standing for the block formed by binding two leaves that hang
    /// from the same cut vertex.
    pub fn merged(x: &LeafInfo, y: &LeafInfo) -> LeafInfo {
        let min = |p: Option<usize>, q: Option<usize>| match (p, q) {
            (Some(p), Some(q)) => Some(p.min(q)),
            (p, q) => p.or(q),
        };
        LeafInfo {
            ptype: PendantType::AB,
            rep_a: min(x.rep_a, y.rep_a),
            rep_b: min(x.rep_b, y.rep_b),
        }
    }
}
