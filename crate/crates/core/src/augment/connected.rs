//! Cases S1 to S5: a connected graph that is not a block.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{AugmentError, Rule, Solver};
use crate::blocks::{decompose_counted, BlockDecomposition, PendantBlock, PendantType};
use crate::bounds::{classify_s, criticality, CriticalityReport, MCase, SCase};
use crate::graph::Edge;
use crate::index::{AugTreeIndex, ChainIndex, ChainMove, IndexNode, LeafInfo};
use crate::matching::{binding_edge, find_binding_edge, matching_profile, maximum_legal_matching, LegalPair, MatchingProfile};
use crate::tree::{build_block_tree, BlockTree, TreeNode};

pub(crate) struct Analysis {
    pub dec: BlockDecomposition,
    pub tree: BlockTree,
    pub profile: MatchingProfile,
    pub report: CriticalityReport,
    /// `None` once the graph is a block.
    pub case: Option<SCase>,
}

fn leaf_info(p: &PendantBlock) -> LeafInfo {
    LeafInfo {
        ptype: p.ptype,
        rep_a: p.rep_a(),
        rep_b: p.rep_b(),
    }
}

fn bind(x: &LeafInfo, y: &LeafInfo, x_first: bool) -> Edge {
    binding_edge((x.rep_a, x.rep_b), (y.rep_a, y.rep_b), x_first).expect("legal leaf pair")
}

impl Solver {
    fn analyze(&mut self, known: Option<BlockDecomposition>) -> Analysis {
        debug_assert!(known.is_none() || self.applied == self.trace.len());
        let dec = known.unwrap_or_else(|| {
            self.sync();
            self.ops.recomputes += 1;
            decompose_counted(&self.g, &mut self.ops)
        });
        let tree = build_block_tree(&dec, 0).expect("connected graph with an edge");
        let profile = matching_profile(&dec.pendant_blocks);
        let report = criticality(&tree, &profile);
        let case = (!dec.component_is_block(0)).then(|| classify_s(&tree, &profile, &report));
        Analysis {
            dec,
            tree,
            profile,
            report,
            case,
        }
    }

    fn tree_leaf(st: &Analysis, x: usize) -> LeafInfo {
        match st.tree.nodes[x] {
            TreeNode::Block(id) => leaf_info(st.dec.pendant(id).expect("leaf is a pendant block")),
            _ => unreachable!("tree leaves are blocks"),
        }
    }

    /// Solves a connected graph with at least two vertices on each side.
    /// `known` is a decomposition of the current graph, if one is at hand.
    pub(super) fn solve_connected(&mut self, m_case: MCase, mut known: Option<BlockDecomposition>) -> Result<(), AugmentError> {
        for _ in 0..8 {
            let st = self.analyze(known.take());
            let Some(case) = st.case else { return Ok(()) };
            match case {
                SCase::S5 => self.reduce_massive(&st, m_case)?,
                SCase::S4_2 => self.reduce_pairs(&st, m_case)?,
                SCase::S1 => return self.small(&st, m_case),
                SCase::S2 => return self.hub_edges(&st, m_case, SCase::S2),
                SCase::S3 => return self.cross_cling(&st, m_case),
                SCase::S4_1 => return self.matched_cover(&st, m_case, SCase::S4_1),
            }
        }
        Err(AugmentError::Internal("reduction phases did not settle"))
    }

    /// At most three leaves.
    fn small(&mut self, st: &Analysis, m_case: MCase) -> Result<(), AugmentError> {
        let pend = &st.dec.pendant_blocks;
        match pend.len() {
            0 | 1 => Ok(()),
            2 if pend[0].ptype.pairs_with(pend[1].ptype) => {
                let pair = LegalPair {
                    first: pend[0].id,
                    second: pend[1].id,
                };
                let e = find_binding_edge(&self.g, &st.dec, pair)
                    .map_err(|_| AugmentError::Internal("binding edge of a legal pair"))?;
                self.push(e, m_case, Some(SCase::S1), Rule::MatchedPair, None);
                Ok(())
            }
            _ if st.profile.m == 0 => self.hub_edges(st, m_case, SCase::S1),
            _ => self.matched_cover(st, m_case, SCase::S1),
        }
    }

    /// All leaves are degree-one vertices on one side. With `y1` the first of
    /// them and `x1` its neighbor, every leaf joins `x1` unless it is cut off
    /// from the alternate hub `xj` by `x1`, in which case it joins `xj`.
    fn hub_edges(&mut self, st: &Analysis, m_case: MCase, s_case: SCase) -> Result<(), AugmentError> {
        let leaves: Vec<usize> = st
            .dec
            .pendant_blocks
            .iter()
            .map(|p| p.rep_a().or(p.rep_b()).expect("pendant vertex"))
            .collect();
        let x1 = self.g.neighbors(leaves[0])[0];
        let side = self.g.side(x1);
        let xj = self
            .g
            .vertices_on(side)
            .find(|&v| v != x1)
            .ok_or(AugmentError::Internal("hub side has one vertex"))?;
        let mut seen = vec![false; self.g.vertex_count()];
        seen[x1] = true;
        seen[xj] = true;
        let mut queue = VecDeque::from([xj]);
        while let Some(u) = queue.pop_front() {
            for &w in self.g.neighbors(u) {
                self.ops.dfs_steps += 1;
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        for &y in &leaves {
            let (hub, rule) = if seen[y] { (x1, Rule::ToHub) } else { (xj, Rule::ToAlternateHub) };
            let e = self.g.edge_between(y, hub).expect("opposite sides");
            self.push(e, m_case, Some(s_case), rule, None);
        }
        Ok(())
    }

    /// Two critical cut vertices: each leaf clings to one of them, the two
    /// halves have equal size and a perfect legal matching across them.
    fn cross_cling(&mut self, st: &Analysis, m_case: MCase) -> Result<(), AugmentError> {
        let (u1, u2) = (st.report.critical[0], st.report.critical[1]);
        let violation = AugmentError::ClingPartitionViolation { first: u1, second: u2 };
        let n1 = st.tree.find(TreeNode::Cut(u1)).expect("cut vertex node");
        let n2 = st.tree.find(TreeNode::Cut(u2)).expect("cut vertex node");
        let mut halves: [[Vec<usize>; 3]; 2] = Default::default();
        for leaf in st.tree.leaves() {
            let (mut prev, mut at) = (leaf, st.tree.neighbors(leaf)[0]);
            while st.tree.degree(at) == 2 {
                let next = st.tree.neighbors(at).iter().copied().find(|&w| w != prev).expect("degree two");
                prev = at;
                at = next;
                self.ops.tree_edge_traversals += 1;
            }
            let side = if at == n1 {
                0
            } else if at == n2 {
                1
            } else {
                return Err(violation);
            };
            let TreeNode::Block(id) = st.tree.nodes[leaf] else { unreachable!("leaf is a block") };
            let p = st.dec.pendant(id).expect("pendant");
            halves[side][p.ptype.index()].push(p.id.0);
        }
        let size = |h: &[Vec<usize>; 3]| h.iter().map(Vec::len).sum::<usize>();
        if size(&halves[0]) != size(&halves[1]) {
            return Err(violation);
        }
        for h in halves.iter_mut() {
            for l in h.iter_mut() {
                debug_assert!(l.windows(2).all(|w| w[0] < w[1]));
                l.reverse();
            }
        }
        let [mut h1, mut h2] = halves;
        let (a, b, ab) = (PendantType::A.index(), PendantType::B.index(), PendantType::AB.index());
        let mut pairs = Vec::new();
        let mut take = |h1: &mut [Vec<usize>; 3], t1: usize, h2: &mut [Vec<usize>; 3], t2: usize| {
            while !h1[t1].is_empty() && !h2[t2].is_empty() {
                pairs.push((h1[t1].pop().unwrap(), h2[t2].pop().unwrap()));
            }
        };
        take(&mut h1, a, &mut h2, b);
        take(&mut h1, b, &mut h2, a);
        take(&mut h1, a, &mut h2, ab);
        take(&mut h1, b, &mut h2, ab);
        take(&mut h1, ab, &mut h2, a);
        take(&mut h1, ab, &mut h2, b);
        take(&mut h1, ab, &mut h2, ab);
        if size(&h1) + size(&h2) != 0 {
            return Err(AugmentError::Internal("no perfect legal matching across critical vertices"));
        }
        for (x, y) in pairs {
            let px = st.dec.pendant(crate::blocks::BlockId(x)).expect("pendant");
            let py = st.dec.pendant(crate::blocks::BlockId(y)).expect("pendant");
            let e = bind(&leaf_info(px), &leaf_info(py), x < y);
            self.push(e, m_case, Some(SCase::S3), Rule::CrossCling, None);
        }
        Ok(())
    }

    /// Binding edges of a maximum legal matching, then every leftover block
    /// joined to the lowest matched block it pairs with.
    fn matched_cover(&mut self, st: &Analysis, m_case: MCase, s_case: SCase) -> Result<(), AugmentError> {
        let pend = &st.dec.pendant_blocks;
        let matching = maximum_legal_matching(pend);
        let mut matched = vec![false; st.dec.block_count()];
        for p in &matching {
            matched[p.first.0] = true;
            matched[p.second.0] = true;
        }
        let mut lowest: [Option<&PendantBlock>; 3] = [None; 3];
        for p in pend.iter().filter(|p| matched[p.id.0]) {
            lowest[p.ptype.index()].get_or_insert(p);
        }
        let mut edges = Vec::new();
        for p in &matching {
            let x = leaf_info(st.dec.pendant(p.first).expect("pendant"));
            let y = leaf_info(st.dec.pendant(p.second).expect("pendant"));
            edges.push((bind(&x, &y, p.first < p.second), Rule::MatchedPair));
        }
        for p in pend.iter().filter(|p| !matched[p.id.0]) {
            let partner = PendantType::ALL
                .iter()
                .filter(|t| p.ptype.pairs_with(**t))
                .filter_map(|t| lowest[t.index()])
                .min_by_key(|q| q.id)
                .ok_or(AugmentError::Internal("leftover block without a partner"))?;
            edges.push((bind(&leaf_info(p), &leaf_info(partner), p.id < partner.id), Rule::CoverLeftover));
        }
        for (e, rule) in edges {
            self.push(e, m_case, Some(s_case), rule, None);
        }
        Ok(())
    }

    /// While a cut vertex `r` has `D(r) - 1 > M + R`, binds leaves of two
    /// branches of `r`, lowering `D(r)` by one each time.
    fn reduce_massive(&mut self, st: &Analysis, m_case: MCase) -> Result<(), AugmentError> {
        let r = st.report.massive.expect("massive vertex");
        let r_node = st.tree.find(TreeNode::Cut(r)).expect("cut vertex node");
        let mut ix = ChainIndex::build(&st.tree, r_node, r, |x| Self::tree_leaf(st, x));
        while ix.in_massive_case() {
            let mv = ix.pick().ok_or(AugmentError::Internal("massive vertex without a pair"))?;
            let (x, y, rule) = match mv {
                ChainMove::MergeChains { x, y } => (x, y, Rule::MergeChains),
                ChainMove::IntoBranch { x, y } => (x, y, Rule::ChainIntoBranch),
            };
            let e = bind(&ix.leaf(x), &ix.leaf(y), x < y);
            self.push(e, m_case, Some(SCase::S5), rule, Some(r));
            self.ops.reductions += 1;
            ix.apply(mv);
        }
        ix.add_counters(&mut self.ops);
        Ok(())
    }

    /// While the tree has several branching nodes, binds a pair of leaves
    /// picked by the rooted index; each step lowers the lower bound by one.
    fn reduce_pairs(&mut self, st: &Analysis, m_case: MCase) -> Result<(), AugmentError> {
        let kinds: Vec<IndexNode> = st
            .tree
            .nodes
            .iter()
            .map(|n| match *n {
                TreeNode::Block(_) => IndexNode::Block,
                TreeNode::Cut(v) => IndexNode::Cut(v),
                TreeNode::Bridge(_) => IndexNode::Bridge,
            })
            .collect();
        let leaves: Vec<Option<LeafInfo>> = (0..st.tree.len())
            .map(|x| (st.tree.degree(x) == 1).then(|| Self::tree_leaf(st, x)))
            .collect();
        let mut ix = AugTreeIndex::build(kinds, |x| st.tree.neighbors(x), leaves, st.tree.root);
        while ix.in_pair_reduction_case() {
            ix.prepare_root();
            let pair = ix.find_pair().ok_or(AugmentError::Internal("no reducing pair"))?;
            let (l1, l2) = (ix.leaf(pair.w1).unwrap(), ix.leaf(pair.w2).unwrap());
            let e = bind(&l1, &l2, pair.w1 < pair.w2);
            self.push(e, m_case, Some(SCase::S4_2), Rule::BranchPair, None);
            self.ops.reductions += 1;
            ix.collapse(&pair);
            if self.opts.audit {
                ix.audit().map_err(|_| AugmentError::Internal("index drifted from rebuild"))?;
                self.sync();
                self.audit_against_graph(&ix)?;
            }
        }
        ix.add_counters(&mut self.ops);
        Ok(())
    }

    /// The index must describe the block tree of the current graph.
    fn audit_against_graph(&self, ix: &AugTreeIndex) -> Result<(), AugmentError> {
        let dec = crate::blocks::decompose(&self.g);
        let tree = build_block_tree(&dec, 0).expect("connected");
        let fail = AugmentError::Internal("index disagrees with the graph");
        let p = matching_profile(&dec.pendant_blocks);
        if ix.leaf_counts() != [p.n_a, p.n_b, p.n_ab] || ix.branching_nodes() != tree.branching_nodes() {
            return Err(fail);
        }
        let mut cuts: Vec<(usize, usize)> = (0..ix.node_count() as u32)
            .filter(|&x| ix.is_alive(x))
            .filter_map(|x| match ix.kind(x) {
                IndexNode::Cut(v) => Some((v, ix.degree(x) as usize)),
                _ => None,
            })
            .collect();
        cuts.sort_unstable();
        let expected: Vec<(usize, usize)> = dec.cut_vertices.iter().map(|&v| (v, dec.bcc_count[v])).collect();
        if cuts != expected {
            return Err(fail);
        }
        Ok(())
    }
}
