//! Cut vertices, cut edges and blocks.
//!
//! Two vertices are biconnected when they stay connected after deleting any
//! single edge or any single other vertex. Under this definition an isolated
//! vertex is a block on its own while a lone edge is not, so a standard
//! two-vertex biconnected component is reported as a cut edge and its
//! endpoints end up in singular blocks or as cut vertices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::counters::OpCounters;
use crate::graph::{BipartiteGraph, ComponentPartition, Edge, Side};
use crate::order::{counting_sort, sort_lists};

/// Identifier of a block within one [`BlockDecomposition`]. Nonsingular
/// blocks come first, ordered by their sorted vertex lists; singular blocks
/// follow in vertex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKind {
    Singular,
    Nonsingular,
}

/// Sides of the noncut vertices of a pendant block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PendantType {
    A,
    B,
    AB,
}

impl PendantType {
    pub const ALL: [PendantType; 3] = [PendantType::A, PendantType::B, PendantType::AB];

    pub fn of_side(side: Side) -> Self {
        match side {
            Side::A => PendantType::A,
            Side::B => PendantType::B,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// A pairs with B or AB, B with A or AB, AB with anything.
    pub fn pairs_with(self, other: PendantType) -> bool {
        !matches!(
            (self, other),
            (PendantType::A, PendantType::A) | (PendantType::B, PendantType::B)
        )
    }
}

impl fmt::Display for PendantType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PendantType::A => "A",
            PendantType::B => "B",
            PendantType::AB => "AB",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantBlock {
    pub id: BlockId,
    pub kind: BlockKind,
    pub ptype: PendantType,
    /// Sorted noncut vertices in `A`.
    pub noncut_a: Vec<usize>,
    /// Sorted noncut vertices in `B`.
    pub noncut_b: Vec<usize>,
    pub component: usize,
}

impl PendantBlock {
    pub fn rep_a(&self) -> Option<usize> {
        self.noncut_a.first().copied()
    }

    pub fn rep_b(&self) -> Option<usize> {
        self.noncut_b.first().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BlockError {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("a vertex is not paired with itself")]
    SameVertex,
    #[error("component {0} is a single vertex and has no block tree")]
    SingularComponent(usize),
    #[error("no component {0}")]
    UnknownComponent(usize),
    #[error("tree node {0} does not exist")]
    UnknownNode(usize),
    #[error("block {0:?} is not a leaf of the block tree")]
    NotALeaf(BlockId),
    #[error("blocks {0:?} and {1:?} do not form a legal pair")]
    NotALegalPair(BlockId, BlockId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub is_cut: Vec<bool>,
    pub cut_vertices: Vec<usize>,
    pub cut_edges: Vec<Edge>,
    /// Sorted vertex lists of the nonsingular blocks; entry `i` is `BlockId(i)`.
    pub nonsingular_blocks: Vec<Vec<usize>>,
    /// Vertices in no nonsingular block; entry `i` is
    /// `BlockId(nonsingular_blocks.len() + i)`.
    pub singular_blocks: Vec<usize>,
    /// Pendant blocks sorted by id.
    pub pendant_blocks: Vec<PendantBlock>,
    pub block_of_noncut: Vec<Option<BlockId>>,
    /// Number of standard biconnected components (bridges included) that
    /// contain each vertex. This equals the number of components left in a
    /// vertex's component after deleting it.
    pub bcc_count: Vec<usize>,
    pub components: ComponentPartition,
    /// Position in `pendant_blocks` by block id.
    pendant_slot: Vec<usize>,
}

impl BlockDecomposition {
    pub fn block_count(&self) -> usize {
        self.nonsingular_blocks.len() + self.singular_blocks.len()
    }

    pub fn kind_of(&self, id: BlockId) -> BlockKind {
        if id.0 < self.nonsingular_blocks.len() {
            BlockKind::Nonsingular
        } else {
            BlockKind::Singular
        }
    }

    pub fn block_vertices(&self, id: BlockId) -> &[usize] {
        let nb = self.nonsingular_blocks.len();
        if id.0 < nb {
            &self.nonsingular_blocks[id.0]
        } else {
            core::slice::from_ref(&self.singular_blocks[id.0 - nb])
        }
    }

    pub fn singular_id(&self, v: usize) -> Option<BlockId> {
        self.singular_blocks
            .binary_search(&v)
            .ok()
            .map(|i| BlockId(self.nonsingular_blocks.len() + i))
    }

    pub fn pendant(&self, id: BlockId) -> Option<&PendantBlock> {
        match self.pendant_slot.get(id.0) {
            Some(&i) if i != usize::MAX => Some(&self.pendant_blocks[i]),
            _ => None,
        }
    }

    pub fn pendants_of_component(&self, component: usize) -> impl Iterator<Item = &PendantBlock> {
        self.pendant_blocks
            .iter()
            .filter(move |p| p.component == component)
    }

    /// `D(G, u)`: components of `X - {u}` where `X` is the component of `u`.
    pub fn branch_count(&self, u: usize) -> usize {
        self.bcc_count[u]
    }

    /// Whether the component is a block: an isolated vertex or a single
    /// nonsingular block spanning it.
    pub fn component_is_block(&self, component: usize) -> bool {
        let members = &self.components.members[component];
        members.len() == 1 || members.iter().all(|&v| !self.is_cut[v] && self.bcc_count[v] == 1)
            && members.len() >= 3
    }

    /// `u` and `v` are biconnected iff some nonsingular block holds both.
    pub fn are_biconnected(&self, u: usize, v: usize) -> Result<bool, BlockError> {
        let n = self.is_cut.len();
        for x in [u, v] {
            if x >= n {
                return Err(BlockError::UnknownVertex(x));
            }
        }
        if u == v {
            return Err(BlockError::SameVertex);
        }
        let holds = |block: &Vec<usize>| block.binary_search(&u).is_ok() && block.binary_search(&v).is_ok();
        if !self.is_cut[u] {
            return Ok(match self.block_of_noncut[u] {
                Some(id) if id.0 < self.nonsingular_blocks.len() => holds(&self.nonsingular_blocks[id.0]),
                _ => false,
            });
        }
        Ok(self.nonsingular_blocks.iter().any(holds))
    }

    /// Derives ids, pendant blocks and the noncut-to-block map from the raw
    /// parts. Returns the decomposition and, for every input block, its new
    /// id.
    pub(crate) fn assemble(
        sides: &[Side],
        is_cut: Vec<bool>,
        mut cut_edges: Vec<Edge>,
        blocks: Vec<Vec<usize>>,
        pendant_vertex: &[bool],
        bcc_count: Vec<usize>,
        components: ComponentPartition,
    ) -> (Self, Vec<BlockId>) {
        let n = sides.len();
        cut_edges = counting_sort(&cut_edges, n, |e| e.b);
        cut_edges = counting_sort(&cut_edges, n, |e| e.a);
        let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();

        // Block lists are sorted and two blocks share at most one vertex, so
        // the first two vertices decide the order.
        debug_assert!(blocks.iter().all(|b| b.len() >= 3 && b.windows(2).all(|w| w[0] < w[1])));
        let order: Vec<usize> = (0..blocks.len()).collect();
        let order = counting_sort(&order, n, |&i| blocks[i][1]);
        let order = counting_sort(&order, n, |&i| blocks[i][0]);
        let mut new_id = vec![BlockId(0); blocks.len()];
        for (rank, &old) in order.iter().enumerate() {
            new_id[old] = BlockId(rank);
        }
        let mut blocks = blocks;
        let mut nonsingular_blocks: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for &old in &order {
            nonsingular_blocks.push(core::mem::take(&mut blocks[old]));
        }

        let mut block_of_noncut = vec![None; n];
        for (i, block) in nonsingular_blocks.iter().enumerate() {
            for &v in block {
                if !is_cut[v] {
                    block_of_noncut[v] = Some(BlockId(i));
                }
            }
        }
        let nb = nonsingular_blocks.len();
        let mut in_block = vec![false; n];
        for &v in nonsingular_blocks.iter().flatten() {
            in_block[v] = true;
        }
        let singular_blocks: Vec<usize> = (0..n).filter(|&v| !in_block[v]).collect();
        for (i, &v) in singular_blocks.iter().enumerate() {
            if !is_cut[v] {
                block_of_noncut[v] = Some(BlockId(nb + i));
            }
        }

        let mut pendant_blocks = Vec::new();
        for (i, block) in nonsingular_blocks.iter().enumerate() {
            let cuts = block.iter().filter(|&&v| is_cut[v]).count();
            if cuts == 1 {
                let (noncut_a, noncut_b) = split_noncut(block, &is_cut, sides);
                pendant_blocks.push(PendantBlock {
                    id: BlockId(i),
                    kind: BlockKind::Nonsingular,
                    ptype: PendantType::AB,
                    noncut_a,
                    noncut_b,
                    component: components.component_of[block[0]],
                });
            }
        }
        for (i, &v) in singular_blocks.iter().enumerate() {
            if pendant_vertex[v] {
                let (noncut_a, noncut_b) = match sides[v] {
                    Side::A => (vec![v], Vec::new()),
                    Side::B => (Vec::new(), vec![v]),
                };
                pendant_blocks.push(PendantBlock {
                    id: BlockId(nb + i),
                    kind: BlockKind::Singular,
                    ptype: PendantType::of_side(sides[v]),
                    noncut_a,
                    noncut_b,
                    component: components.component_of[v],
                });
            }
        }

        let mut pendant_slot = vec![usize::MAX; nb + singular_blocks.len()];
        for (i, p) in pendant_blocks.iter().enumerate() {
            pendant_slot[p.id.0] = i;
        }
        let dec = BlockDecomposition {
            pendant_slot,
            is_cut,
            cut_vertices,
            cut_edges,
            nonsingular_blocks,
            singular_blocks,
            pendant_blocks,
            block_of_noncut,
            bcc_count,
            components,
        };
        (dec, new_id)
    }
}

fn split_noncut(block: &[usize], is_cut: &[bool], sides: &[Side]) -> (Vec<usize>, Vec<usize>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &v in block.iter().filter(|&&v| !is_cut[v]) {
        match sides[v] {
            Side::A => a.push(v),
            Side::B => b.push(v),
        }
    }
    (a, b)
}

pub fn decompose(g: &BipartiteGraph) -> BlockDecomposition {
    decompose_counted(g, &mut OpCounters::default())
}

/// Iterative Hopcroft-Tarjan lowpoint search over an edge stack.
pub(crate) fn decompose_counted(g: &BipartiteGraph, ops: &mut OpCounters) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut next = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut bcc_count = vec![0usize; n];
    let mut stamp = vec![usize::MAX; n];
    let mut cut_edges = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut verts: Vec<usize> = Vec::new();
    let mut clock = 0usize;
    let mut bcc_serial = 0usize;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut root_children = 0usize;
        stack.push(root);
        while let Some(&v) = stack.last() {
            if next[v] < g.degree(v) {
                let w = g.neighbors(v)[next[v]];
                next[v] += 1;
                ops.dfs_steps += 1;
                if disc[w] == UNSEEN {
                    parent[w] = v;
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    edge_stack.push((v, w));
                    stack.push(w);
                    if v == root {
                        root_children += 1;
                    }
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(&p) = stack.last() else { break };
            low[p] = low[p].min(low[v]);
            if low[v] < disc[p] {
                continue;
            }
            if p != root {
                is_cut[p] = true;
            }
            verts.clear();
            let mut edges = 0usize;
            while let Some((x, y)) = edge_stack.pop() {
                edges += 1;
                for z in [x, y] {
                    if stamp[z] != bcc_serial {
                        stamp[z] = bcc_serial;
                        verts.push(z);
                        bcc_count[z] += 1;
                    }
                }
                if (x, y) == (p, v) {
                    break;
                }
            }
            bcc_serial += 1;
            if edges == 1 {
                cut_edges.push(g.edge_between(p, v).expect("graph edges are bipartite"));
            } else {
                blocks.push(verts.clone());
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    sort_lists(&mut blocks, n);
    let pendant_vertex: Vec<bool> = g.vertices().map(|v| g.degree(v) == 1).collect();
    let sides: Vec<Side> = g.vertices().map(|v| g.side(v)).collect();
    BlockDecomposition::assemble(
        &sides,
        is_cut,
        cut_edges,
        blocks,
        &pendant_vertex,
        bcc_count,
        g.connected_components(),
    )
    .0
}

/// `D(G, u)` for a vertex of `g`.
pub fn branch_count(dec: &BlockDecomposition, u: usize) -> usize {
    dec.branch_count(u)
}

/// Whether `u` and `v` are biconnected in `g`.
pub fn is_biconnected_pair(g: &BipartiteGraph, u: usize, v: usize) -> Result<bool, BlockError> {
    decompose(g).are_biconnected(u, v)
}
