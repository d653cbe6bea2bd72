//! The block tree of one connected component.
//!
//! Nodes are the nonsingular blocks, the degree-one vertices, the cut
//! vertices and the cut edges of the component. Blocks and degree-one
//! vertices are b-vertices; cut vertices and cut edges are c-vertices. A cut
//! edge node always has degree two, the leaves are exactly the pendant blocks
//! and a cut vertex node has degree `D(G, v)`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::blocks::{BlockDecomposition, BlockError, BlockId, BlockKind};
use crate::graph::{BipartiteGraph, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TreeNode {
    Block(BlockId),
    Cut(usize),
    Bridge(Edge),
}

impl TreeNode {
    pub fn is_b_vertex(self) -> bool {
        matches!(self, TreeNode::Block(_))
    }
}

/// Nodes are sorted, so lookups are binary searches. Adjacency lists are
/// sorted too; two trees describing the same structure compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTree {
    pub component: usize,
    pub nodes: Vec<TreeNode>,
    /// Neighbors of node `x` are `adj[start[x]..start[x + 1]]`.
    start: Vec<usize>,
    adj: Vec<usize>,
    /// Lowest-index node of degree at least two, or node 0.
    pub root: usize,
}

impl BlockTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn degree(&self, x: usize) -> usize {
        self.start[x + 1] - self.start[x]
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[self.start[x]..self.start[x + 1]]
    }

    pub fn find(&self, node: TreeNode) -> Option<usize> {
        self.nodes.binary_search(&node).ok()
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&x| self.degree(x) == 1)
    }

    /// Nodes of degree at least three.
    pub fn branching_nodes(&self) -> usize {
        (0..self.nodes.len()).filter(|&x| self.degree(x) >= 3).count()
    }

    fn from_parts(component: usize, nodes: Vec<TreeNode>, edges: &[(TreeNode, TreeNode)]) -> Self {
        let mut adj = vec![Vec::new(); nodes.len()];
        let at = |x: &TreeNode| nodes.binary_search(x).expect("edge endpoint is a node");
        for (x, y) in edges {
            let (i, j) = (at(x), at(y));
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut start = Vec::with_capacity(nodes.len() + 1);
        let mut flat = Vec::new();
        start.push(0);
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            flat.extend_from_slice(list);
            start.push(flat.len());
        }
        BlockTree::from_flat(component, nodes, start, flat)
    }

    fn from_flat(component: usize, nodes: Vec<TreeNode>, start: Vec<usize>, adj: Vec<usize>) -> Self {
        let root = (0..nodes.len()).find(|&x| start[x + 1] - start[x] >= 2).unwrap_or(0);
        BlockTree {
            component,
            nodes,
            start,
            adj,
            root,
        }
    }
}

/// Builds `Ψ` for one component of the decomposed graph.
pub fn build_block_tree(dec: &BlockDecomposition, component: usize) -> Result<BlockTree, BlockError> {
    let members = dec
        .components
        .members
        .get(component)
        .ok_or(BlockError::UnknownComponent(component))?;
    if members.len() == 1 {
        return Err(BlockError::SingularComponent(component));
    }
    let comp = &dec.components.component_of;
    let blocks: Vec<usize> = (0..dec.nonsingular_blocks.len())
        .filter(|&i| comp[dec.nonsingular_blocks[i][0]] == component)
        .collect();
    let bridges: Vec<Edge> = dec
        .cut_edges
        .iter()
        .copied()
        .filter(|e| comp[e.a] == component)
        .collect();
    let mut node_of = vec![usize::MAX; comp.len()];
    Ok(tree_from(dec, component, &blocks, &bridges, &mut node_of))
}

/// Block trees of every component with more than one vertex, in one pass.
pub fn build_block_forest(dec: &BlockDecomposition) -> Vec<Option<BlockTree>> {
    let count = dec.components.count();
    let comp = &dec.components.component_of;
    let mut blocks = vec![Vec::new(); count];
    let mut bridges = vec![Vec::new(); count];
    for (i, b) in dec.nonsingular_blocks.iter().enumerate() {
        blocks[comp[b[0]]].push(i);
    }
    for &e in &dec.cut_edges {
        bridges[comp[e.a]].push(e);
    }
    let mut node_of = vec![usize::MAX; comp.len()];
    (0..count)
        .map(|c| {
            (dec.components.members[c].len() > 1)
                .then(|| tree_from(dec, c, &blocks[c], &bridges[c], &mut node_of))
        })
        .collect()
}

// Nodes are produced already sorted: nonsingular blocks by id, degree-one
// vertices by id, cut vertices by vertex, cut edges in the decomposition's
// order. `node_of` maps a cut vertex or degree-one vertex to its node.
fn tree_from(
    dec: &BlockDecomposition,
    component: usize,
    blocks: &[usize],
    bridges: &[Edge],
    node_of: &mut [usize],
) -> BlockTree {
    let members = &dec.components.members[component];
    let nb = dec.nonsingular_blocks.len();
    let is_leaf_vertex = |v: usize| !dec.is_cut[v] && dec.block_of_noncut[v].is_some_and(|id| id.0 >= nb);
    let mut nodes: Vec<TreeNode> = blocks.iter().map(|&i| TreeNode::Block(BlockId(i))).collect();
    for &v in members {
        if is_leaf_vertex(v) {
            node_of[v] = nodes.len();
            nodes.push(TreeNode::Block(dec.block_of_noncut[v].expect("noncut vertex has a block")));
        }
    }
    for &v in members {
        if dec.is_cut[v] {
            node_of[v] = nodes.len();
            nodes.push(TreeNode::Cut(v));
        }
    }
    let first_bridge = nodes.len();
    nodes.extend(bridges.iter().map(|&e| TreeNode::Bridge(e)));
    debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));

    let mut start = Vec::with_capacity(nodes.len() + 1);
    start.push(0);
    for (x, node) in nodes.iter().enumerate() {
        let d = match *node {
            TreeNode::Cut(v) => dec.bcc_count[v],
            TreeNode::Bridge(_) => 2,
            TreeNode::Block(_) if x < blocks.len() => {
                dec.nonsingular_blocks[blocks[x]].iter().filter(|&&v| dec.is_cut[v]).count()
            }
            TreeNode::Block(_) => 1,
        };
        start.push(start[x] + d);
    }
    let mut adj = vec![0; start[nodes.len()]];
    let mut fill = start.clone();
    let mut link = |x: usize, y: usize| {
        adj[fill[x]] = y;
        fill[x] += 1;
    };
    for (k, &i) in blocks.iter().enumerate() {
        for &v in &dec.nonsingular_blocks[i] {
            if dec.is_cut[v] {
                link(k, node_of[v]);
                link(node_of[v], k);
            }
        }
    }
    for (j, e) in bridges.iter().enumerate() {
        let x = first_bridge + j;
        let (p, q) = (node_of[e.a], node_of[e.b]);
        link(p, x);
        link(q, x);
        link(x, p.min(q));
        link(x, p.max(q));
    }
    debug_assert!((0..nodes.len()).all(|x| fill[x] == start[x + 1]));
    BlockTree::from_flat(component, nodes, start, adj)
}

/// The unique path from `x` to `y`, both ends included.
pub fn tree_path(t: &BlockTree, x: usize, y: usize) -> Result<Vec<usize>, BlockError> {
    for z in [x, y] {
        if z >= t.len() {
            return Err(BlockError::UnknownNode(z));
        }
    }
    let mut parent = vec![usize::MAX; t.len()];
    parent[x] = x;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            break;
        }
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![y];
    let mut u = y;
    while u != x {
        u = parent[u];
        path.push(u);
    }
    path.reverse();
    Ok(path)
}

/// Tree and decomposition after the binding edge of a legal leaf pair is
/// added to `g`.
///
/// Every b-vertex, cut edge and degree-two cut vertex on the tree path
/// between the two leaves merges into one new block. Cut vertices of degree
/// at least three on the path stay, one degree lower, attached to it.
pub fn collapse_path(
    g: &BipartiteGraph,
    tree: &BlockTree,
    dec: &BlockDecomposition,
    pair: (BlockId, BlockId),
) -> Result<(BlockTree, BlockDecomposition), BlockError> {
    let leaf_of = |id: BlockId| {
        let p = dec.pendant(id).ok_or(BlockError::NotALeaf(id))?;
        match tree.find(TreeNode::Block(id)) {
            Some(x) if tree.degree(x) == 1 && p.component == tree.component => Ok((x, p.ptype)),
            _ => Err(BlockError::NotALeaf(id)),
        }
    };
    let (y1, t1) = leaf_of(pair.0)?;
    let (y2, t2) = leaf_of(pair.1)?;
    if y1 == y2 || !t1.pairs_with(t2) {
        return Err(BlockError::NotALegalPair(pair.0, pair.1));
    }
    let path = tree_path(tree, y1, y2)?;
    let n = g.vertex_count();
    let mut on_path = vec![false; tree.len()];
    for &x in &path {
        on_path[x] = true;
    }
    let survives = |x: usize| matches!(tree.nodes[x], TreeNode::Cut(_)) && tree.degree(x) >= 3;

    let mut in_new = vec![false; n];
    let mut new_block = Vec::new();
    let mut add = |v: usize, in_new: &mut Vec<bool>| {
        if !in_new[v] {
            in_new[v] = true;
            new_block.push(v);
        }
    };
    let mut is_cut = dec.is_cut.clone();
    let mut bcc_count = dec.bcc_count.clone();
    let mut merged_blocks = vec![false; dec.nonsingular_blocks.len()];
    let mut merged_bridges = Vec::new();
    for &x in &path {
        match tree.nodes[x] {
            TreeNode::Block(id) => {
                if dec.kind_of(id) == BlockKind::Nonsingular {
                    merged_blocks[id.0] = true;
                }
                for &v in dec.block_vertices(id) {
                    add(v, &mut in_new);
                }
            }
            TreeNode::Cut(v) => {
                add(v, &mut in_new);
                if survives(x) {
                    bcc_count[v] -= 1;
                } else {
                    is_cut[v] = false;
                }
            }
            TreeNode::Bridge(e) => {
                merged_bridges.push(e);
                add(e.a, &mut in_new);
                add(e.b, &mut in_new);
            }
        }
    }
    new_block.sort_unstable();
    for &v in &new_block {
        if !is_cut[v] {
            bcc_count[v] = 1;
        }
    }
    let cut_edges: Vec<Edge> = dec
        .cut_edges
        .iter()
        .copied()
        .filter(|e| !merged_bridges.contains(e))
        .collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut kept_old = Vec::new();
    for (i, b) in dec.nonsingular_blocks.iter().enumerate() {
        if !merged_blocks[i] {
            kept_old.push(i);
            blocks.push(b.clone());
        }
    }
    blocks.push(new_block);
    let pendant_vertex: Vec<bool> = (0..n).map(|v| g.degree(v) == 1 && !in_new[v]).collect();
    let sides: Vec<_> = g.vertices().map(|v| g.side(v)).collect();
    let (new_dec, ids) = BlockDecomposition::assemble(
        &sides,
        is_cut,
        cut_edges,
        blocks,
        &pendant_vertex,
        bcc_count,
        dec.components.clone(),
    );
    let y = TreeNode::Block(*ids.last().expect("new block present"));

    let mut old_rank = vec![usize::MAX; dec.nonsingular_blocks.len()];
    for (k, &i) in kept_old.iter().enumerate() {
        old_rank[i] = k;
    }
    let remap = |x: usize| -> TreeNode {
        if on_path[x] && !survives(x) {
            return y;
        }
        match tree.nodes[x] {
            TreeNode::Block(id) if dec.kind_of(id) == BlockKind::Nonsingular => TreeNode::Block(ids[old_rank[id.0]]),
            TreeNode::Block(id) => {
                let v = dec.block_vertices(id)[0];
                TreeNode::Block(new_dec.singular_id(v).expect("untouched singular block"))
            }
            other => other,
        }
    };
    let mut nodes: Vec<TreeNode> = (0..tree.len()).map(remap).collect();
    nodes.sort_unstable();
    nodes.dedup();
    let mut edges = Vec::new();
    for x in 0..tree.len() {
        for &w in tree.neighbors(x) {
            if x < w {
                let (p, q) = (remap(x), remap(w));
                if p != q {
                    edges.push((p, q));
                }
            }
        }
    }
    Ok((BlockTree::from_parts(tree.component, nodes, &edges), new_dec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::decompose;
    use crate::generate::{generate_instance, InstanceKind};
    use crate::graph::Side;

    #[test]
    fn p4_tree_shape() {
        let g = generate_instance(&InstanceKind::Path { length: 4 }, 0).unwrap();
        let dec = decompose(&g);
        let t = build_block_tree(&dec, 0).unwrap();
        // two leaves, three cut edges, two cut vertices
        assert_eq!(t.len(), 7);
        assert_eq!(t.leaves().count(), 2);
        assert!(t
            .nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| matches!(n, TreeNode::Bridge(_)))
            .all(|(x, _)| t.degree(x) == 2));
        let (l1, l2) = (t.leaves().next().unwrap(), t.leaves().nth(1).unwrap());
        assert_eq!(tree_path(&t, l1, l2).unwrap().len(), 7);
    }

    #[test]
    fn singular_component_has_no_tree() {
        let mut g = BipartiteGraph::new();
        g.add_vertex("a", Side::A);
        let dec = decompose(&g);
        assert_eq!(build_block_tree(&dec, 0), Err(BlockError::SingularComponent(0)));
        assert_eq!(build_block_forest(&dec), vec![None]);
    }

    #[test]
    fn p4_collapses_to_cycle() {
        let g = generate_instance(&InstanceKind::Path { length: 4 }, 0).unwrap();
        let dec = decompose(&g);
        let t = build_block_tree(&dec, 0).unwrap();
        let ids = (dec.pendant_blocks[0].id, dec.pendant_blocks[1].id);
        let g2 = g.add_edges(&[Edge { a: 0, b: 3 }]).unwrap();
        let (t2, dec2) = collapse_path(&g2, &t, &dec, ids).unwrap();
        let fresh = decompose(&g2);
        assert_eq!(dec2, fresh);
        assert_eq!(t2, build_block_tree(&fresh, 0).unwrap());
        assert_eq!(t2.len(), 1);
    }

    #[test]
    fn spider_keeps_center() {
        let g = generate_instance(&InstanceKind::Spider { chains: vec![1, 1, 2, 2] }, 0).unwrap();
        let dec = decompose(&g);
        let t = build_block_tree(&dec, 0).unwrap();
        let center = t.find(TreeNode::Cut(0)).unwrap();
        assert_eq!(t.degree(center), 4);
        // b1 (type B) and a3 (type A)
        let pb = dec.pendant(dec.singular_id(3).unwrap()).unwrap().id;
        let pa = dec.pendant(dec.singular_id(1).unwrap()).unwrap().id;
        let g2 = g.add_edges(&[Edge { a: 1, b: 3 }]).unwrap();
        let (t2, dec2) = collapse_path(&g2, &t, &dec, (pa, pb)).unwrap();
        let fresh = decompose(&g2);
        assert_eq!(dec2, fresh);
        assert_eq!(t2, build_block_tree(&fresh, 0).unwrap());
        assert_eq!(t2.degree(t2.find(TreeNode::Cut(0)).unwrap()), 3);
    }

    #[test]
    fn collapse_rejects_bad_pairs() {
        let g = generate_instance(&InstanceKind::Spider { chains: vec![1, 1, 2, 2] }, 0).unwrap();
        let dec = decompose(&g);
        let t = build_block_tree(&dec, 0).unwrap();
        let b1 = dec.singular_id(3).unwrap();
        let b2 = dec.singular_id(4).unwrap();
        assert_eq!(collapse_path(&g, &t, &dec, (b1, b2)), Err(BlockError::NotALegalPair(b1, b2)));
    }
}
