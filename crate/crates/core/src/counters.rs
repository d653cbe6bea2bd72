//! Operation counters reported by the solver.

/// Counts of the elementary steps taken by one solve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounters {
    /// Adjacency entries scanned by block decompositions.
    pub dfs_steps: u64,
    /// From-scratch analyses (decomposition, tree and bounds).
    pub recomputes: u64,
    /// Tree edges walked by the incremental indices.
    pub tree_edge_traversals: u64,
    pub list_links: u64,
    pub list_unlinks: u64,
    /// Linear-time rebuilds of the rooted augmentation-tree index.
    pub full_rebuilds: u64,
    /// Edges inserted by reduction steps.
    pub reductions: u64,
}

impl OpCounters {
    pub fn total(&self) -> u64 {
        self.dfs_steps
            + self.tree_edge_traversals
            + self.list_links
            + self.list_unlinks
            + self.reductions
    }

    pub fn absorb(&mut self, other: &OpCounters) {
        self.dfs_steps += other.dfs_steps;
        self.recomputes += other.recomputes;
        self.tree_edge_traversals += other.tree_edge_traversals;
        self.list_links += other.list_links;
        self.list_unlinks += other.list_unlinks;
        self.full_rebuilds += other.full_rebuilds;
        self.reductions += other.reductions;
    }
}
