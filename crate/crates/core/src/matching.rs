//! Legal pairs of pendant blocks and their maximum matchings.
//!
//! Two pendant blocks form a legal pair unless both are of type `A` or both
//! of type `B`. Every legal pair is realised by one binding edge between
//! noncut vertices of opposite sides.

use alloc::vec::Vec;

use crate::blocks::{BlockDecomposition, BlockError, BlockId, PendantBlock, PendantType};
use crate::graph::{BipartiteGraph, Edge};

/// Size data of a maximum legal matching over `n_a` A-type, `n_b` B-type
/// and `n_ab` AB-type pendant blocks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MatchingProfile {
    pub n_a: usize,
    pub n_b: usize,
    pub n_ab: usize,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    /// Size of a maximum legal matching.
    pub m: usize,
    /// Pendant blocks left unmatched by it.
    pub r: usize,
}

impl MatchingProfile {
    pub fn from_counts(n_a: usize, n_b: usize, n_ab: usize) -> Self {
        let alpha = n_a.min(n_b);
        let beta = n_a.abs_diff(n_b).min(n_ab);
        let gamma = (n_ab - beta) / 2;
        let m = alpha + beta + gamma;
        MatchingProfile {
            n_a,
            n_b,
            n_ab,
            alpha,
            beta,
            gamma,
            m,
            r: n_a + n_b + n_ab - 2 * m,
        }
    }

    pub fn count(&self, t: PendantType) -> usize {
        match t {
            PendantType::A => self.n_a,
            PendantType::B => self.n_b,
            PendantType::AB => self.n_ab,
        }
    }

    /// Number of pendant blocks `|Λ|`.
    pub fn total(&self) -> usize {
        self.n_a + self.n_b + self.n_ab
    }

    /// `M + R`.
    pub fn m_plus_r(&self) -> usize {
        self.m + self.r
    }

    /// Profile after one block of each given type is removed.
    pub fn without(&self, t1: PendantType, t2: PendantType) -> Option<Self> {
        let mut c = [self.n_a, self.n_b, self.n_ab];
        for t in [t1, t2] {
            c[t.index()] = c[t.index()].checked_sub(1)?;
        }
        Some(Self::from_counts(c[0], c[1], c[2]))
    }

    /// Whether binding a `t1`-`t2` pair lowers `M` by exactly one.
    pub fn drops_by_one(&self, t1: PendantType, t2: PendantType) -> bool {
        t1.pairs_with(t2) && self.without(t1, t2).is_some_and(|p| p.m + 1 == self.m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LegalPair {
    pub first: BlockId,
    pub second: BlockId,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MatchingError {
    #[error("no legal pair spans the two sets")]
    NoCrossPair,
    #[error(transparent)]
    Block(#[from] BlockError),
}

/// Preference order of type pairs when searching for a pair that keeps the
/// rest optimally matchable.
pub(crate) const PAIR_ORDER: [(PendantType, PendantType); 7] = [
    (PendantType::A, PendantType::B),
    (PendantType::B, PendantType::A),
    (PendantType::A, PendantType::AB),
    (PendantType::B, PendantType::AB),
    (PendantType::AB, PendantType::A),
    (PendantType::AB, PendantType::B),
    (PendantType::AB, PendantType::AB),
];

pub fn matching_profile(blocks: &[PendantBlock]) -> MatchingProfile {
    let mut c = [0usize; 3];
    for b in blocks {
        c[b.ptype.index()] += 1;
    }
    MatchingProfile::from_counts(c[0], c[1], c[2])
}

fn by_type(blocks: &[PendantBlock]) -> [Vec<BlockId>; 3] {
    let mut lists: [Vec<BlockId>; 3] = Default::default();
    for b in blocks {
        lists[b.ptype.index()].push(b.id);
    }
    for l in &mut lists {
        l.sort_unstable();
    }
    lists
}

/// Greedy maximum legal matching: A with B first, then the surplus side with
/// AB, then AB with AB. Blocks of one type are taken in id order.
pub fn maximum_legal_matching(blocks: &[PendantBlock]) -> Vec<LegalPair> {
    let [a, b, ab] = by_type(blocks);
    let mut pairs = Vec::new();
    let k = a.len().min(b.len());
    for i in 0..k {
        pairs.push(LegalPair {
            first: a[i],
            second: b[i],
        });
    }
    let surplus = if a.len() > k { &a[k..] } else { &b[k..] };
    let j = surplus.len().min(ab.len());
    for i in 0..j {
        pairs.push(LegalPair {
            first: surplus[i],
            second: ab[i],
        });
    }
    for w in ab[j..].chunks_exact(2) {
        pairs.push(LegalPair {
            first: w[0],
            second: w[1],
        });
    }
    pairs
}

/// A legal pair `(x, y)` with `x` in `w1` and `y` in `w2` whose removal
/// leaves a maximum legal matching one smaller.
pub fn cross_split_pair(w1: &[PendantBlock], w2: &[PendantBlock]) -> Result<LegalPair, MatchingError> {
    let p1 = matching_profile(w1);
    let p2 = matching_profile(w2);
    let all = MatchingProfile::from_counts(p1.n_a + p2.n_a, p1.n_b + p2.n_b, p1.n_ab + p2.n_ab);
    let (l1, l2) = (by_type(w1), by_type(w2));
    for (t1, t2) in PAIR_ORDER {
        if p1.count(t1) > 0 && p2.count(t2) > 0 && all.drops_by_one(t1, t2) {
            return Ok(LegalPair {
                first: l1[t1.index()][0],
                second: l2[t2.index()][0],
            });
        }
    }
    Err(MatchingError::NoCrossPair)
}

/// The edge joining the two blocks of a legal pair through their smallest
/// noncut vertices. For two AB blocks the `A` end comes from the block with
/// the lower id.
pub fn find_binding_edge(
    g: &BipartiteGraph,
    dec: &BlockDecomposition,
    pair: LegalPair,
) -> Result<Edge, MatchingError> {
    let first = dec.pendant(pair.first).ok_or(BlockError::NotALeaf(pair.first))?;
    let second = dec.pendant(pair.second).ok_or(BlockError::NotALeaf(pair.second))?;
    let e = binding_edge(
        (first.rep_a(), first.rep_b()),
        (second.rep_a(), second.rep_b()),
        pair.first < pair.second,
    )
    .ok_or(BlockError::NotALegalPair(pair.first, pair.second))?;
    if first.component == second.component && g.has_edge(e.a, e.b) {
        return Err(BlockError::NotALegalPair(pair.first, pair.second).into());
    }
    Ok(e)
}

/// Chooses the binding edge between two leaves given their `(A, B)`
/// representatives. `first_lower` breaks the tie between two AB leaves.
pub(crate) fn binding_edge(
    first: (Option<usize>, Option<usize>),
    second: (Option<usize>, Option<usize>),
    first_lower: bool,
) -> Option<Edge> {
    let forward = first.0.zip(second.1).map(|(a, b)| Edge { a, b });
    let backward = second.0.zip(first.1).map(|(a, b)| Edge { a, b });
    match (forward, backward) {
        (Some(f), Some(b)) => Some(if first_lower { f } else { b }),
        (f, b) => f.or(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::BlockKind;
    use alloc::vec;

    fn block(id: usize, ptype: PendantType) -> PendantBlock {
        PendantBlock {
            id: BlockId(id),
            kind: BlockKind::Singular,
            ptype,
            noncut_a: Vec::new(),
            noncut_b: Vec::new(),
            component: 0,
        }
    }

    fn blocks(types: &[PendantType]) -> Vec<PendantBlock> {
        types.iter().enumerate().map(|(i, &t)| block(i, t)).collect()
    }

    #[test]
    fn profile_examples() {
        let p = MatchingProfile::from_counts(3, 1, 2);
        assert_eq!((p.alpha, p.beta, p.gamma, p.m, p.r), (1, 2, 0, 3, 0));
        let p = MatchingProfile::from_counts(0, 0, 5);
        assert_eq!((p.m, p.r), (2, 1));
        let p = MatchingProfile::from_counts(4, 0, 0);
        assert_eq!((p.m, p.r), (0, 4));
    }

    #[test]
    fn greedy_matches_profile() {
        use PendantType::*;
        let bs = blocks(&[A, A, A, B, AB, AB]);
        let m = maximum_legal_matching(&bs);
        assert_eq!(m.len(), matching_profile(&bs).m);
        assert_eq!(m[0], LegalPair { first: BlockId(0), second: BlockId(3) });
        assert_eq!(m[1], LegalPair { first: BlockId(1), second: BlockId(4) });
        assert_eq!(m[2], LegalPair { first: BlockId(2), second: BlockId(5) });
    }

    #[test]
    fn cross_pair() {
        use PendantType::*;
        let w1 = vec![block(0, A), block(1, A)];
        let w2 = vec![block(2, B), block(3, AB)];
        let p = cross_split_pair(&w1, &w2).unwrap();
        assert_eq!(p, LegalPair { first: BlockId(0), second: BlockId(2) });
        assert_eq!(
            cross_split_pair(&[block(0, A)], &[block(1, A)]),
            Err(MatchingError::NoCrossPair)
        );
    }

    #[test]
    fn binding_orientation() {
        assert_eq!(binding_edge((Some(1), None), (None, Some(7)), true), Some(Edge { a: 1, b: 7 }));
        assert_eq!(binding_edge((None, Some(7)), (Some(1), None), true), Some(Edge { a: 1, b: 7 }));
        let ab1 = (Some(1), Some(2));
        let ab2 = (Some(3), Some(4));
        assert_eq!(binding_edge(ab1, ab2, true), Some(Edge { a: 1, b: 4 }));
        assert_eq!(binding_edge(ab1, ab2, false), Some(Edge { a: 3, b: 2 }));
        assert_eq!(binding_edge((Some(1), None), (Some(3), None), true), None);
    }
}
