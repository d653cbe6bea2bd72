mod common;

use std::collections::BTreeSet;

use bipaug_core::{
    build_block_tree, collapse_path, criticality, decompose, find_binding_edge, matching_profile,
    maximum_legal_matching, BipartiteGraph, BlockId, LegalPair, MatchingProfile, PendantType, TreeNode,
};
use common::{brute_force_matching, naive_branch_count, random_forest, random_hub, random_tree};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(shape: u8, seed: u64, n: usize, extra: usize) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match shape % 3 {
        0 => random_tree(&mut rng, n, extra),
        1 => random_forest(&mut rng, n / 2 + 1, n - n / 2 + 1, extra),
        _ => random_hub(&mut rng),
    }
}

#[test]
fn matching_profile_is_the_maximum() {
    for na in 0..=6 {
        for nb in 0..=6 {
            for nab in 0..=6 {
                let p = MatchingProfile::from_counts(na, nb, nab);
                let best = brute_force_matching([na, nb, nab]);
                assert_eq!(p.m, best, "({na}, {nb}, {nab})");
                assert_eq!(p.r, na + nb + nab - 2 * best);
                assert_eq!(p.alpha + p.beta + p.gamma, p.m);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn leaves_are_pendant_blocks(shape in 0u8..3, seed in any::<u64>(), n in 3usize..40, extra in 0usize..6) {
        let g = graph(shape, seed, n, extra);
        let dec = decompose(&g);
        for c in 0..dec.components.count() {
            let Ok(t) = build_block_tree(&dec, c) else { continue };
            let leaves: BTreeSet<BlockId> = t
                .leaves()
                .map(|x| match t.nodes[x] {
                    TreeNode::Block(id) => id,
                    other => panic!("leaf {other:?} is not a block"),
                })
                .collect();
            let pendants: BTreeSet<BlockId> = dec.pendants_of_component(c).map(|p| p.id).collect();
            if t.len() > 1 {
                prop_assert_eq!(leaves, pendants);
            }
        }
        for v in g.vertices() {
            if g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) > 1 {
                let id = dec.singular_id(v).expect("degree-one vertex is singular");
                prop_assert_eq!(dec.pendant(id).map(|p| p.ptype), Some(PendantType::of_side(g.side(v))));
            }
        }
    }

    #[test]
    fn cut_degree_is_branch_count(shape in 0u8..3, seed in any::<u64>(), n in 3usize..40, extra in 0usize..6) {
        let g = graph(shape, seed, n, extra);
        let dec = decompose(&g);
        for v in g.vertices() {
            let naive = naive_branch_count(&g, v);
            prop_assert_eq!(dec.is_cut[v], naive >= 2, "vertex {}", v);
            if dec.is_cut[v] {
                let t = build_block_tree(&dec, dec.components.component_of[v]).unwrap();
                let x = t.find(TreeNode::Cut(v)).unwrap();
                prop_assert_eq!(t.degree(x), naive);
                prop_assert_eq!(dec.branch_count(v), naive);
            }
        }
    }

    #[test]
    fn collapse_equals_recompute(seed in any::<u64>(), n in 4usize..40, extra in 0usize..4, pick in any::<u64>()) {
        let g = graph(0, seed, n, extra);
        let dec = decompose(&g);
        let t = build_block_tree(&dec, 0).unwrap();
        let pend = &dec.pendant_blocks;
        let pairs: Vec<(usize, usize)> = (0..pend.len())
            .flat_map(|i| (i + 1..pend.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| pend[i].ptype.pairs_with(pend[j].ptype))
            .collect();
        prop_assume!(!pairs.is_empty());
        let (i, j) = pairs[(pick % pairs.len() as u64) as usize];
        let pair = LegalPair { first: pend[i].id, second: pend[j].id };
        let Ok(e) = find_binding_edge(&g, &dec, pair) else { return Ok(()) };
        let g2 = g.add_edges(&[e]).unwrap();
        let (t2, dec2) = collapse_path(&g2, &t, &dec, (pair.first, pair.second)).unwrap();
        let fresh = decompose(&g2);
        prop_assert_eq!(&dec2, &fresh);
        prop_assert_eq!(t2, build_block_tree(&fresh, 0).unwrap());
    }

    #[test]
    fn criticality_counts(shape in 0u8..3, seed in any::<u64>(), n in 4usize..40, extra in 0usize..4) {
        let g = graph(shape, seed, n, extra);
        let dec = decompose(&g);
        prop_assume!(dec.components.count() == 1 && !dec.component_is_block(0));
        let t = build_block_tree(&dec, 0).unwrap();
        let profile = matching_profile(&dec.pendant_blocks);
        let mut counts = [0; 3];
        for p in &dec.pendant_blocks {
            counts[p.ptype.index()] += 1;
        }
        let m = brute_force_matching(counts);
        let mr = m + (dec.pendant_blocks.len() - 2 * m);
        let d: Vec<usize> = g.vertices().map(|v| naive_branch_count(&g, v)).collect();
        let report = criticality(&t, &profile);
        let critical: Vec<usize> = g.vertices().filter(|&v| d[v] >= 2 && d[v] - 1 == mr).collect();
        let massive: Vec<usize> = g.vertices().filter(|&v| d[v] >= 2 && d[v] - 1 > mr).collect();
        prop_assert_eq!(&report.critical, &critical);
        prop_assert_eq!(report.massive.is_some(), !massive.is_empty());
        if let Some(r) = report.massive {
            prop_assert!(massive.contains(&r));
            prop_assert_eq!(d[r], massive.iter().map(|&v| d[v]).max().unwrap());
        }
        prop_assert!(massive.len() <= 1, "two massive vertices");
        prop_assert_eq!(report.d_max, d.iter().copied().max().unwrap().max(1));
    }

    #[test]
    fn greedy_matching_is_maximum(shape in 0u8..3, seed in any::<u64>(), n in 3usize..40, extra in 0usize..6) {
        let g = graph(shape, seed, n, extra);
        let dec = decompose(&g);
        let pairs = maximum_legal_matching(&dec.pendant_blocks);
        prop_assert_eq!(pairs.len(), matching_profile(&dec.pendant_blocks).m);
        let mut used = BTreeSet::new();
        for p in &pairs {
            let (x, y) = (dec.pendant(p.first).unwrap(), dec.pendant(p.second).unwrap());
            prop_assert!(x.ptype.pairs_with(y.ptype));
            prop_assert!(used.insert(p.first) && used.insert(p.second));
        }
    }
}
