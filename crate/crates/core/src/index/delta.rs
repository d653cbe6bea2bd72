//! Rooted block-tree index for the pair-reduction phase.
//!
//! Every node carries a four-bit code `σ0 σ1 σ2 σ3`: `σ0` is set when its
//! subtree holds more than one leaf, `σ1`, `σ2`, `σ3` when the subtree holds
//! a leaf of type `A`, `B`, `AB`. Children are kept in one list per code, so
//! a child with a given property is found in constant time. Nodes store no
//! parent pointer; the reduction only ever walks downward from the root.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::mem;

use super::list::{Links, ListHead, NIL};
use super::LeafInfo;
use crate::blocks::PendantType;
use crate::counters::OpCounters;
use crate::matching::{MatchingProfile, PAIR_ORDER};

pub const MULTI: u8 = 8;

/// Codes in slot order: the three single-leaf codes, then the seven codes
/// with `σ0` set.
pub const SLOT_CODES: [u8; 10] = [4, 2, 1, 9, 10, 11, 12, 13, 14, 15];
const FIRST_MULTI_SLOT: usize = 3;

pub fn type_bit(t: PendantType) -> u8 {
    match t {
        PendantType::A => 4,
        PendantType::B => 2,
        PendantType::AB => 1,
    }
}

pub fn slot_of(code: u8) -> usize {
    match code {
        4 => 0,
        2 => 1,
        1 => 2,
        9..=15 => code as usize - 6,
        _ => panic!("invalid subtree code {code}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexNode {
    Block,
    Cut(usize),
    Bridge,
}

/// The two leaves picked for one reduction step, each with its downward
/// path from a child of the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPath {
    pub w1: u32,
    pub w2: u32,
    pub down1: Vec<u32>,
    pub down2: Vec<u32>,
}

/// Adjacency lists packed into one array.
struct Flat {
    start: Vec<u32>,
    items: Vec<u32>,
}

impl Flat {
    fn from_degrees(degree: &[u32]) -> Self {
        let mut start = Vec::with_capacity(degree.len() + 1);
        let mut at = 0;
        start.push(0);
        for &d in degree {
            at += d;
            start.push(at);
        }
        Flat { start, items: vec![0; at as usize] }
    }

    fn of(&self, x: u32) -> &[u32] {
        &self.items[self.start[x as usize] as usize..self.start[x as usize + 1] as usize]
    }

    fn len(&self) -> usize {
        self.start.len() - 1
    }
}

#[derive(Clone, Debug)]
pub struct AugTreeIndex {
    kind: Vec<IndexNode>,
    alive: Vec<bool>,
    degree: Vec<u32>,
    code: Vec<u8>,
    child_count: Vec<u32>,
    children: Vec<[ListHead; 10]>,
    leaf: Vec<Option<LeafInfo>>,
    sib: Links,
    grp: Links,
    /// Cut-vertex nodes of degree at least three, grouped by degree.
    groups: Vec<ListHead>,
    group_chain: Links,
    /// Nonempty groups in increasing degree order.
    chain: ListHead,
    leaf_counts: [usize; 3],
    branching: usize,
    root: u32,
    /// Surviving cut vertices attached to the root by the last collapse.
    recent: Vec<u32>,
    traversals: u64,
    rebuilds: u64,
}

impl AugTreeIndex {
    /// `adj(x)` lists the neighbors of node `x`.
    pub fn build<'a>(
        kind: Vec<IndexNode>,
        adj: impl Fn(usize) -> &'a [usize],
        leaf: Vec<Option<LeafInfo>>,
        root: usize,
    ) -> Self {
        let n = kind.len();
        let alive = vec![true; n];
        let degree: Vec<u32> = (0..n).map(|x| adj(x).len() as u32).collect();
        let mut flat = Flat::from_degrees(&degree);
        for x in 0..n {
            let l = adj(x);
            let at = flat.start[x] as usize;
            for (slot, &w) in flat.items[at..at + l.len()].iter_mut().zip(l) {
                *slot = w as u32;
            }
        }
        let mut index = Self::from_adjacency(kind, alive, &flat, degree, leaf, root as u32);
        // every collapse adds one node and removes two leaves
        index.reserve(index.leaf_counts.iter().sum::<usize>() / 2 + 1);
        index
    }

    fn reserve(&mut self, extra: usize) {
        self.kind.reserve(extra);
        self.alive.reserve(extra);
        self.degree.reserve(extra);
        self.code.reserve(extra);
        self.child_count.reserve(extra);
        self.children.reserve(extra);
        self.leaf.reserve(extra);
        self.sib.reserve(extra);
        self.grp.reserve(extra);
    }

    fn from_adjacency(
        kind: Vec<IndexNode>,
        alive: Vec<bool>,
        adj: &Flat,
        degree: Vec<u32>,
        leaf: Vec<Option<LeafInfo>>,
        root: u32,
    ) -> Self {
        let n = kind.len();
        let max_degree = degree.iter().copied().max().unwrap_or(0) as usize;
        let mut index = AugTreeIndex {
            kind,
            alive,
            degree,
            code: vec![0; n],
            child_count: vec![0; n],
            children: vec![[ListHead::EMPTY; 10]; n],
            leaf,
            sib: Links::with_len(n),
            grp: Links::with_len(n),
            groups: vec![ListHead::EMPTY; max_degree + 1],
            group_chain: Links::with_len(max_degree + 1),
            chain: ListHead::EMPTY,
            leaf_counts: [0; 3],
            branching: 0,
            root,
            recent: Vec::new(),
            traversals: 0,
            rebuilds: 0,
        };
        for x in 0..n {
            if !index.alive[x] {
                continue;
            }
            if let Some(info) = index.leaf[x] {
                index.leaf_counts[info.ptype.index()] += 1;
            }
            let d = index.degree[x] as usize;
            if d >= 3 {
                index.branching += 1;
                if matches!(index.kind[x], IndexNode::Cut(_)) {
                    index.grp.push_back(&mut index.groups[d], x as u32);
                }
            }
        }
        for d in 0..=max_degree {
            if !index.groups[d].is_empty() {
                index.group_chain.push_back(&mut index.chain, d as u32);
            }
        }
        index.orient(adj, root);
        index
    }

    /// Fills child lists and codes for the tree given by `adj` rooted at
    /// `root`. Child lists must be empty.
    fn orient(&mut self, adj: &Flat, root: u32) {
        let mut parent = vec![NIL; self.kind.len()];
        let mut order = Vec::with_capacity(adj.len());
        let mut queue = VecDeque::from([root]);
        parent[root as usize] = root;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &w in adj.of(x) {
                if parent[w as usize] == NIL {
                    parent[w as usize] = x;
                    self.traversals += 1;
                    queue.push_back(w);
                }
            }
        }
        for &x in order.iter().rev() {
            let p = parent[x as usize];
            if x != root {
                self.child_count[p as usize] += 1;
            }
        }
        for &x in order.iter().rev() {
            self.code[x as usize] = self.compute_code_from(x, adj, &parent);
        }
        for &x in &order {
            if x != root {
                let p = parent[x as usize];
                let s = slot_of(self.code[x as usize]);
                self.sib.push_back(&mut self.children[p as usize][s], x);
            }
        }
        self.root = root;
    }

    fn compute_code_from(&self, x: u32, adj: &Flat, parent: &[u32]) -> u8 {
        if let Some(info) = self.leaf[x as usize] {
            return type_bit(info.ptype);
        }
        let mut code = if self.child_count[x as usize] >= 2 { MULTI } else { 0 };
        for &w in adj.of(x) {
            if parent[w as usize] == x && w != x {
                code |= self.code[w as usize];
            }
        }
        code
    }

    fn compute_code(&self, x: u32) -> u8 {
        if let Some(info) = self.leaf[x as usize] {
            return type_bit(info.ptype);
        }
        let lists = &self.children[x as usize];
        let mut code = if self.child_count[x as usize] >= 2 { MULTI } else { 0 };
        for (s, list) in lists.iter().enumerate() {
            if !list.is_empty() {
                code |= SLOT_CODES[s];
            }
        }
        code
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn kind(&self, x: u32) -> IndexNode {
        self.kind[x as usize]
    }

    pub fn is_alive(&self, x: u32) -> bool {
        self.alive[x as usize]
    }

    pub fn degree(&self, x: u32) -> u32 {
        self.degree[x as usize]
    }

    pub fn code(&self, x: u32) -> u8 {
        self.code[x as usize]
    }

    pub fn leaf(&self, x: u32) -> Option<LeafInfo> {
        self.leaf[x as usize]
    }

    pub fn node_count(&self) -> usize {
        self.kind.len()
    }

    pub fn branching_nodes(&self) -> usize {
        self.branching
    }

    pub fn leaf_counts(&self) -> [usize; 3] {
        self.leaf_counts
    }

    pub fn profile(&self) -> MatchingProfile {
        let [a, b, ab] = self.leaf_counts;
        MatchingProfile::from_counts(a, b, ab)
    }

    /// Children of `x` in slot order.
    pub fn children(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        self.children[x as usize].iter().flat_map(move |l| self.sib.iter(l))
    }

    /// Number of cut-vertex nodes of degree `d`, for `d >= 3`.
    pub fn cuts_of_degree(&self, d: usize) -> usize {
        self.groups.get(d).map_or(0, |l| l.len as usize)
    }

    /// A cut-vertex node of maximum degree among those of degree at least
    /// three.
    pub fn c_star(&self) -> Option<u32> {
        (self.chain.tail != NIL).then(|| self.groups[self.chain.tail as usize].head)
    }

    fn max_cut_degree(&self) -> usize {
        if self.chain.tail == NIL {
            0
        } else {
            self.chain.tail as usize
        }
    }

    /// More than three leaves, a positive matching, no massive cut vertex,
    /// at most one critical one and more than one branching node.
    pub fn in_pair_reduction_case(&self) -> bool {
        let p = self.profile();
        if p.total() <= 3 || p.m == 0 {
            return false;
        }
        let mr = p.m_plus_r();
        self.max_cut_degree() <= mr + 1 && self.cuts_of_degree(mr + 1) < 2 && self.branching > 1
    }

    /// Moves the root to where a good pair can be read off the codes: the
    /// critical cut vertex if there is one, otherwise a node of degree at
    /// least three or a degree-two node with no single-leaf child.
    pub fn prepare_root(&mut self) {
        let mr = self.profile().m_plus_r();
        if let Some(c) = self.c_star().filter(|&c| self.degree[c as usize] as usize == mr + 1) {
            if self.root == c {
                return;
            }
            if self.recent.contains(&c) {
                let path = [self.root, c];
                self.reroot_along(&path);
            } else {
                self.full_rebuild(c);
            }
            return;
        }
        let r = self.root;
        if self.degree[r as usize] >= 3 || !self.has_chain_child(r) {
            return;
        }
        let mut x = self
            .first_in_slots(r, FIRST_MULTI_SLOT..10)
            .expect("a two-child root with a single-leaf child has a branching child");
        let mut path = vec![r, x];
        while self.degree[x as usize] < 3 {
            x = self.first_in_slots(x, 0..10).expect("inner node has a child");
            self.traversals += 1;
            path.push(x);
        }
        self.reroot_along(&path);
    }

    fn has_chain_child(&self, x: u32) -> bool {
        self.children[x as usize][..FIRST_MULTI_SLOT]
            .iter()
            .any(|l| !l.is_empty())
    }

    fn first_in_slots(&self, x: u32, slots: core::ops::Range<usize>) -> Option<u32> {
        let lists = &self.children[x as usize];
        slots.map(|s| lists[s].head).find(|&h| h != NIL)
    }

    /// Reverses the parent-child relation along `path`, which starts at the
    /// root and descends through children.
    fn reroot_along(&mut self, path: &[u32]) {
        for w in path.windows(2) {
            let (p, c) = (w[0], w[1]);
            self.unlink_child(p, c);
            self.code[p as usize] = self.compute_code(p);
            let s = slot_of(self.code[p as usize]);
            self.sib.push_back(&mut self.children[c as usize][s], p);
            self.child_count[c as usize] += 1;
            self.traversals += 1;
        }
        let r = *path.last().expect("nonempty path");
        self.code[r as usize] = self.compute_code(r);
        self.root = r;
        self.recent.clear();
    }

    fn unlink_child(&mut self, p: u32, c: u32) {
        let s = slot_of(self.code[c as usize]);
        self.sib.unlink(&mut self.children[p as usize][s], c);
        self.child_count[p as usize] -= 1;
    }

    /// Current tree as adjacency lists over all node slots, with the
    /// degrees.
    fn adjacency(&self) -> (Flat, Vec<u32>) {
        let n = self.kind.len();
        let mut degree = vec![0u32; n];
        for x in 0..n as u32 {
            if self.alive[x as usize] {
                for c in self.children(x) {
                    degree[x as usize] += 1;
                    degree[c as usize] += 1;
                }
            }
        }
        let mut adj = Flat::from_degrees(&degree);
        let mut fill: Vec<u32> = adj.start[..n].to_vec();
        for x in 0..n as u32 {
            if self.alive[x as usize] {
                for c in self.children(x) {
                    adj.items[fill[x as usize] as usize] = c;
                    fill[x as usize] += 1;
                    adj.items[fill[c as usize] as usize] = x;
                    fill[c as usize] += 1;
                }
            }
        }
        (adj, degree)
    }

    fn full_rebuild(&mut self, new_root: u32) {
        let (adj, _) = self.adjacency();
        for x in 0..self.kind.len() {
            self.children[x] = [ListHead::EMPTY; 10];
            self.child_count[x] = 0;
        }
        self.orient(&adj, new_root);
        self.rebuilds += 1;
        self.recent.clear();
    }

    /// Picks two leaves whose binding edge lowers the lower bound by one:
    /// one from the subtree `T*` of a chosen root child, one from another
    /// root child, with types chosen so that `M` drops by exactly one.
    pub fn find_pair(&mut self) -> Option<PairPath> {
        let h = self.root;
        let t_star = if self.degree[h as usize] == 2 {
            self.first_in_slots(h, 0..10)?
        } else {
            self.first_in_slots(h, FIRST_MULTI_SLOT..10)?
        };
        let code1 = self.code[t_star as usize];
        let mut code2 = 0u8;
        for (s, list) in self.children[h as usize].iter().enumerate() {
            if list.len > 1 || (list.len == 1 && list.head != t_star) {
                code2 |= SLOT_CODES[s];
            }
        }
        let profile = self.profile();
        for (t1, t2) in PAIR_ORDER {
            let (b1, b2) = (type_bit(t1), type_bit(t2));
            if code1 & b1 == 0 || code2 & b2 == 0 || !profile.drops_by_one(t1, t2) {
                continue;
            }
            let other = self.child_with(h, b2, t_star)?;
            let down1 = self.descend(t_star, b1);
            let down2 = self.descend(other, b2);
            return Some(PairPath {
                w1: *down1.last().expect("nonempty"),
                w2: *down2.last().expect("nonempty"),
                down1,
                down2,
            });
        }
        None
    }

    fn child_with(&self, x: u32, bit: u8, skip: u32) -> Option<u32> {
        for (s, list) in self.children[x as usize].iter().enumerate() {
            if SLOT_CODES[s] & bit == 0 {
                continue;
            }
            let mut at = list.head;
            if at != NIL && at == skip {
                at = self.sib.next(at);
            }
            if at != NIL {
                return Some(at);
            }
        }
        None
    }

    fn descend(&mut self, mut x: u32, bit: u8) -> Vec<u32> {
        let mut path = vec![x];
        while self.leaf[x as usize].is_none() {
            x = self.child_with(x, bit, NIL).expect("code promises a matching leaf");
            self.traversals += 1;
            path.push(x);
        }
        path
    }

    /// Applies the binding edge of `pair`: nodes on the path merge into a
    /// new root block, surviving cut vertices hang from it one degree lower.
    pub fn collapse(&mut self, pair: &PairPath) -> u32 {
        let h = self.root;
        self.unlink_child(h, pair.down1[0]);
        self.unlink_child(h, pair.down2[0]);
        for down in [&pair.down1, &pair.down2] {
            for w in down.windows(2) {
                self.unlink_child(w[0], w[1]);
            }
        }
        let y = self.kind.len() as u32;
        self.kind.push(IndexNode::Block);
        self.alive.push(true);
        self.degree.push(0);
        self.code.push(0);
        self.child_count.push(0);
        self.children.push([ListHead::EMPTY; 10]);
        self.leaf.push(None);
        self.sib.grow(self.kind.len());
        self.grp.grow(self.kind.len());

        let mut survivors = mem::take(&mut self.recent);
        survivors.clear();
        let path = core::iter::once(h)
            .chain(pair.down1.iter().copied())
            .chain(pair.down2.iter().copied());
        for x in path {
            let xi = x as usize;
            if let Some(info) = self.leaf[xi] {
                self.leaf_counts[info.ptype.index()] -= 1;
                self.alive[xi] = false;
                continue;
            }
            if matches!(self.kind[xi], IndexNode::Cut(_)) && self.degree[xi] >= 3 {
                self.lower_degree(x);
                survivors.push(x);
                continue;
            }
            if self.degree[xi] >= 3 {
                self.branching -= 1;
            }
            for s in 0..10 {
                let mut src = mem::take(&mut self.children[xi][s]);
                let mut dst = self.children[y as usize][s];
                self.sib.append(&mut dst, &mut src);
                self.children[y as usize][s] = dst;
            }
            self.child_count[y as usize] += mem::take(&mut self.child_count[xi]);
            self.alive[xi] = false;
        }
        for &s in &survivors {
            self.code[s as usize] = self.compute_code(s);
            let slot = slot_of(self.code[s as usize]);
            self.sib.push_back(&mut self.children[y as usize][slot], s);
            self.child_count[y as usize] += 1;
        }
        let d = self.child_count[y as usize];
        debug_assert!(d >= 2, "collapsed block became a leaf");
        self.degree[y as usize] = d;
        if d >= 3 {
            self.branching += 1;
        }
        self.code[y as usize] = self.compute_code(y);
        self.root = y;
        self.recent = survivors;
        y
    }

    fn lower_degree(&mut self, x: u32) {
        let d = self.degree[x as usize] as usize;
        if d >= 3 {
            self.grp.unlink(&mut self.groups[d], x);
            if d > 3 {
                if self.groups[d - 1].is_empty() {
                    self.group_chain
                        .insert_before(&mut self.chain, d as u32, (d - 1) as u32);
                }
                self.grp.push_back(&mut self.groups[d - 1], x);
            } else {
                self.branching -= 1;
            }
            if self.groups[d].is_empty() {
                self.group_chain.unlink(&mut self.chain, d as u32);
            }
        }
        self.degree[x as usize] -= 1;
    }

    pub fn add_counters(&self, ops: &mut OpCounters) {
        ops.tree_edge_traversals += self.traversals;
        ops.full_rebuilds += self.rebuilds;
        ops.list_links += self.sib.linked + self.grp.linked + self.group_chain.linked;
        ops.list_unlinks += self.sib.unlinked + self.grp.unlinked + self.group_chain.unlinked;
    }

    /// Compares every maintained field with an index rebuilt from scratch
    /// over the same tree and root.
    pub fn audit(&self) -> Result<(), &'static str> {
        let (adj, degree) = self.adjacency();
        let fresh = Self::from_adjacency(
            self.kind.clone(),
            self.alive.clone(),
            &adj,
            degree,
            self.leaf.clone(),
            self.root,
        );
        if self.leaf_counts != fresh.leaf_counts {
            return Err("leaf counters");
        }
        if self.branching != fresh.branching {
            return Err("branching-node counter");
        }
        for x in 0..self.kind.len() {
            if !self.alive[x] {
                continue;
            }
            if self.degree[x] != fresh.degree[x] {
                return Err("degree");
            }
            if self.code[x] != fresh.code[x] {
                return Err("subtree code");
            }
            if self.child_count[x] != fresh.child_count[x] {
                return Err("child count");
            }
            for s in 0..10 {
                let mut mine: Vec<u32> = self.sib.iter(&self.children[x][s]).collect();
                let mut theirs: Vec<u32> = fresh.sib.iter(&fresh.children[x][s]).collect();
                if mine.len() != self.children[x][s].len as usize {
                    return Err("child list length");
                }
                mine.sort_unstable();
                theirs.sort_unstable();
                if mine != theirs {
                    return Err("child list contents");
                }
            }
        }
        let groups = |ix: &Self| -> Vec<(u32, Vec<u32>)> {
            ix.group_chain
                .iter(&ix.chain)
                .map(|d| {
                    let mut m: Vec<u32> = ix.grp.iter(&ix.groups[d as usize]).collect();
                    m.sort_unstable();
                    (d, m)
                })
                .collect()
        };
        if groups(self) != groups(&fresh) {
            return Err("degree groups");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(t: PendantType, v: usize) -> Option<LeafInfo> {
        Some(LeafInfo {
            ptype: t,
            rep_a: (t != PendantType::B).then_some(v),
            rep_b: (t != PendantType::A).then_some(v + 100),
        })
    }

    // Star: cut vertex 0 with four leaves (A, A, B, AB).
    fn star() -> AugTreeIndex {
        let kind = vec![IndexNode::Cut(0), IndexNode::Block, IndexNode::Block, IndexNode::Block, IndexNode::Block];
        let adj = [vec![1, 2, 3, 4], vec![0], vec![0], vec![0], vec![0]];
        let leaves = vec![
            None,
            leaf(PendantType::A, 1),
            leaf(PendantType::A, 2),
            leaf(PendantType::B, 3),
            leaf(PendantType::AB, 4),
        ];
        AugTreeIndex::build(kind, |x| adj[x].as_slice(), leaves, 0)
    }

    #[test]
    fn slots_round_trip() {
        for (s, &c) in SLOT_CODES.iter().enumerate() {
            assert_eq!(slot_of(c), s);
        }
    }

    #[test]
    fn codes_of_star() {
        let ix = star();
        assert_eq!(ix.code(0), 8 | 4 | 2 | 1);
        assert_eq!(ix.code(1), 4);
        assert_eq!(ix.c_star(), Some(0));
        assert_eq!(ix.cuts_of_degree(4), 1);
        assert_eq!(ix.branching_nodes(), 1);
        assert!(ix.audit().is_ok());
    }

    // c1 = 0 with leaves A, B; bridge 3; c2 = 4 with leaves A, B.
    fn two_hubs() -> AugTreeIndex {
        let kind = vec![
            IndexNode::Cut(0),
            IndexNode::Block,
            IndexNode::Block,
            IndexNode::Bridge,
            IndexNode::Cut(4),
            IndexNode::Block,
            IndexNode::Block,
        ];
        let adj = [vec![1, 2, 3], vec![0], vec![0], vec![0, 4], vec![3, 5, 6], vec![4], vec![4]];
        let leaves = vec![
            None,
            leaf(PendantType::A, 1),
            leaf(PendantType::B, 2),
            None,
            None,
            leaf(PendantType::A, 5),
            leaf(PendantType::B, 6),
        ];
        AugTreeIndex::build(kind, |x| adj[x].as_slice(), leaves, 0)
    }

    #[test]
    fn pair_and_collapse() {
        let mut ix = two_hubs();
        assert_eq!(ix.code(3), 8 | 4 | 2);
        ix.prepare_root();
        assert_eq!(ix.root(), 0);
        let pair = ix.find_pair().unwrap();
        assert_eq!(pair.down1, vec![3, 4, 5]);
        assert_eq!(pair.down2, vec![2]);
        let y = ix.collapse(&pair);
        assert_eq!(ix.root(), y);
        assert_eq!(ix.degree(y), 2);
        assert_eq!((ix.degree(0), ix.degree(4)), (2, 2));
        assert_eq!(ix.branching_nodes(), 0);
        assert_eq!(ix.leaf_counts(), [1, 1, 0]);
        assert_eq!(ix.c_star(), None);
        ix.audit().unwrap();
    }

    #[test]
    fn reroot_to_recent_child() {
        let mut ix = two_hubs();
        ix.full_rebuild(4);
        assert_eq!(ix.root(), 4);
        ix.audit().unwrap();
        ix.reroot_along(&[4, 3, 0]);
        assert_eq!(ix.root(), 0);
        ix.audit().unwrap();
        assert_eq!(ix.code(4), 8 | 4 | 2);
    }
}
