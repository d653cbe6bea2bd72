//! Leaves around a massive cut vertex `r`.
//!
//! Each branch of `r` is either a chain, holding exactly one leaf, or holds
//! several leaves. `D(r)` is the number of chains plus the number of other
//! branches, so both are kept as counters next to typed leaf lists.

use alloc::vec::Vec;

use super::list::{Links, ListHead, NIL};
use super::LeafInfo;
use crate::blocks::PendantType;
use crate::counters::OpCounters;
use crate::matching::MatchingProfile;
use crate::tree::BlockTree;

/// One reduction step around `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainMove {
    /// Bind two chain leaves; they become one chain leaf of type AB.
    MergeChains { x: u32, y: u32 },
    /// Bind a chain leaf to a leaf of a multi-leaf branch.
    IntoBranch { x: u32, y: u32 },
}

#[derive(Clone, Debug)]
pub struct ChainIndex {
    root_vertex: usize,
    info: Vec<LeafInfo>,
    branch: Vec<u32>,
    typed: Links,
    in_branch: Links,
    /// Chain leaves by type.
    q: [ListHead; 3],
    /// Leaves of multi-leaf branches by type.
    nc: [ListHead; 3],
    branches: Vec<ListHead>,
    nc_branches: usize,
    counts: [usize; 3],
    traversals: u64,
}

impl ChainIndex {
    /// `r_node` is the tree node of `r`; `leaf` gives the leaf data of each
    /// tree leaf.
    pub fn build(
        tree: &BlockTree,
        r_node: usize,
        root_vertex: usize,
        leaf: impl Fn(usize) -> LeafInfo,
    ) -> Self {
        let mut ix = ChainIndex {
            root_vertex,
            info: Vec::new(),
            branch: Vec::new(),
            typed: Links::default(),
            in_branch: Links::default(),
            q: [ListHead::EMPTY; 3],
            nc: [ListHead::EMPTY; 3],
            branches: Vec::new(),
            nc_branches: 0,
            counts: [0; 3],
            traversals: 0,
        };
        let mut stack = Vec::new();
        for &start in tree.neighbors(r_node) {
            let mut found = Vec::new();
            stack.push((start, r_node));
            while let Some((x, from)) = stack.pop() {
                ix.traversals += 1;
                if tree.degree(x) == 1 {
                    found.push(x);
                }
                for &w in tree.neighbors(x).iter().rev() {
                    if w != from {
                        stack.push((w, x));
                    }
                }
            }
            let b = if found.len() == 1 {
                NIL
            } else {
                ix.branches.push(ListHead::EMPTY);
                ix.nc_branches += 1;
                (ix.branches.len() - 1) as u32
            };
            for x in found {
                ix.add_leaf(leaf(x), b);
            }
        }
        ix
    }

    fn add_leaf(&mut self, info: LeafInfo, b: u32) -> u32 {
        let id = self.info.len() as u32;
        self.info.push(info);
        self.branch.push(b);
        self.typed.grow(self.info.len());
        self.in_branch.grow(self.info.len());
        let t = info.ptype.index();
        self.counts[t] += 1;
        if b == NIL {
            self.typed.push_back(&mut self.q[t], id);
        } else {
            self.typed.push_back(&mut self.nc[t], id);
            self.in_branch.push_back(&mut self.branches[b as usize], id);
        }
        id
    }

    fn remove_leaf(&mut self, id: u32) {
        let t = self.info[id as usize].ptype.index();
        self.counts[t] -= 1;
        let b = self.branch[id as usize];
        if b == NIL {
            self.typed.unlink(&mut self.q[t], id);
        } else {
            self.typed.unlink(&mut self.nc[t], id);
            self.in_branch.unlink(&mut self.branches[b as usize], id);
        }
    }

    pub fn root_vertex(&self) -> usize {
        self.root_vertex
    }

    pub fn leaf(&self, id: u32) -> LeafInfo {
        self.info[id as usize]
    }

    pub fn chain_count(&self) -> usize {
        self.q.iter().map(|l| l.len as usize).sum()
    }

    /// `D(G, r)`.
    pub fn root_degree(&self) -> usize {
        self.chain_count() + self.nc_branches
    }

    pub fn profile(&self) -> MatchingProfile {
        let [a, b, ab] = self.counts;
        MatchingProfile::from_counts(a, b, ab)
    }

    /// More than three leaves, a positive matching and `r` still massive.
    pub fn in_massive_case(&self) -> bool {
        let p = self.profile();
        p.total() > 3 && p.m > 0 && self.root_degree() > p.m_plus_r() + 1
    }

    pub fn pick(&self) -> Option<ChainMove> {
        let [qa, qb, qab] = self.q;
        let chain_pair = if !qa.is_empty() && !qb.is_empty() {
            Some((qa.head, qb.head))
        } else if !qab.is_empty() && !qa.is_empty() {
            Some((qab.head, qa.head))
        } else if !qab.is_empty() && !qb.is_empty() {
            Some((qab.head, qb.head))
        } else if qab.len >= 2 {
            Some((qab.head, self.typed.next(qab.head)))
        } else {
            None
        };
        if let Some((x, y)) = chain_pair {
            return Some(ChainMove::MergeChains { x, y });
        }
        let (x, wanted) = if !qa.is_empty() {
            (qa.head, PendantType::B)
        } else if !qb.is_empty() {
            (qb.head, PendantType::A)
        } else {
            return None;
        };
        let [na, nb, nab] = self.nc;
        let other = match wanted {
            PendantType::B => nb,
            _ => na,
        };
        let y = if !other.is_empty() { other.head } else { nab.head };
        (y != NIL).then_some(ChainMove::IntoBranch { x, y })
    }

    /// Updates the lists after the binding edge of `mv` is inserted.
    pub fn apply(&mut self, mv: ChainMove) {
        match mv {
            ChainMove::MergeChains { x, y } => {
                self.remove_leaf(x);
                self.remove_leaf(y);
                let merged = LeafInfo::merged(&self.info[x as usize], &self.info[y as usize]);
                self.add_leaf(merged, NIL);
            }
            ChainMove::IntoBranch { x, y } => {
                self.remove_leaf(x);
                self.remove_leaf(y);
                let b = self.branch[y as usize] as usize;
                if self.branches[b].len == 1 {
                    let last = self.branches[b].head;
                    let info = self.info[last as usize];
                    self.remove_leaf(last);
                    self.nc_branches -= 1;
                    self.info[last as usize] = info;
                    self.branch[last as usize] = NIL;
                    self.counts[info.ptype.index()] += 1;
                    self.typed.push_back(&mut self.q[info.ptype.index()], last);
                }
            }
        }
    }

    pub fn add_counters(&self, ops: &mut OpCounters) {
        ops.tree_edge_traversals += self.traversals;
        ops.list_links += self.typed.linked + self.in_branch.linked;
        ops.list_unlinks += self.typed.unlinked + self.in_branch.unlinked;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::decompose;
    use crate::generate::{generate_instance, InstanceKind};
    use crate::tree::{build_block_tree, TreeNode};
    use alloc::vec;

    #[test]
    fn spider_chains() {
        let g = generate_instance(&InstanceKind::Spider { chains: vec![1, 1, 2, 2] }, 0).unwrap();
        let dec = decompose(&g);
        let t = build_block_tree(&dec, 0).unwrap();
        let r = t.find(TreeNode::Cut(0)).unwrap();
        let info = |x: usize| {
            let TreeNode::Block(id) = t.nodes[x] else { unreachable!() };
            let p = dec.pendant(id).unwrap();
            LeafInfo {
                ptype: p.ptype,
                rep_a: p.rep_a(),
                rep_b: p.rep_b(),
            }
        };
        let mut ix = ChainIndex::build(&t, r, 0, info);
        assert_eq!((ix.chain_count(), ix.root_degree()), (4, 4));
        assert!(ix.in_massive_case());
        let mv = ix.pick().unwrap();
        let ChainMove::MergeChains { x, y } = mv else { panic!("expected a chain merge") };
        assert_eq!((ix.leaf(x).ptype, ix.leaf(y).ptype), (PendantType::A, PendantType::B));
        ix.apply(mv);
        assert_eq!(ix.root_degree(), 3);
        assert_eq!(ix.profile().n_ab, 1);
        assert!(!ix.in_massive_case());
    }
}
