//! Optimal bipartite biconnectivity augmentation.
//!
//! Given a bipartite graph `G = (A, B, E)`, [`augment`] returns a smallest set
//! of new `A`-`B` edges after which every connected component is either an
//! isolated vertex or biconnected. The solver runs in linear time.
//!
//! ```
//! use bipaug_core::{augment, generate_instance, InstanceKind};
//!
//! let g = generate_instance(&InstanceKind::Path { length: 4 }, 0).unwrap();
//! let result = augment(&g).unwrap();
//! assert_eq!(result.size(), 1);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod augment;
pub mod blocks;
pub mod bounds;
pub mod counters;
pub mod generate;
pub mod graph;
pub mod index;
pub mod matching;
mod order;
pub mod tree;
pub mod verify;

pub use augment::{augment, augment_with, AugmentError, AugmentationResult, Rule, SolveOptions, TraceEntry};
pub use blocks::{
    branch_count, decompose, is_biconnected_pair, BlockDecomposition, BlockError, BlockId, BlockKind,
    PendantBlock, PendantType,
};
pub use bounds::{
    census, classify_m, classify_s, criticality, eta, lower_bound, CaseLabel, ComponentCensus,
    CriticalityReport, MCase, SCase,
};
pub use counters::OpCounters;
pub use generate::{generate_instance, GenerateError, InstanceKind};
pub use graph::{BipartiteGraph, ComponentPartition, Edge, GraphError, Side};
pub use matching::{
    cross_split_pair, find_binding_edge, matching_profile, maximum_legal_matching, LegalPair,
    MatchingError, MatchingProfile,
};
pub use tree::{build_block_tree, collapse_path, tree_path, BlockTree, TreeNode};
pub use verify::{
    brute_force_optimal, check_componentwise_biconnected, verify_result, OracleError, VerifyReport,
    Witness, WitnessKind,
};
