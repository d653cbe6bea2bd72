mod common;

use bipaug_core::verify::brute_force_optimal;
use bipaug_core::{augment, check_componentwise_biconnected, generate_instance, AugmentError, InstanceKind};
use common::all_graphs;

fn agrees(g: &bipaug_core::BipartiteGraph) -> Result<(), String> {
    let single = g.edge_count() > 0 && (g.count_a() == 1 || g.count_b() == 1);
    match augment(g) {
        Err(AugmentError::NoBiconnector { .. }) if single => match brute_force_optimal(g, 8) {
            Ok(_) => Err(format!("oracle found a biconnector for {:?}", g.edges())),
            Err(_) => Ok(()),
        },
        Err(e) => Err(format!("{e} on {:?}", g.edges())),
        Ok(_) if single => Err(format!("expected no biconnector on {:?}", g.edges())),
        Ok(r) => {
            let h = g.add_edges(&r.added_edges).map_err(|e| format!("{e} on {:?}", g.edges()))?;
            check_componentwise_biconnected(&h).map_err(|w| format!("{w:?} after {:?} on {:?}", r.added_edges, g.edges()))?;
            let (k, _) = brute_force_optimal(g, 8).map_err(|e| e.to_string())?;
            if k != r.size() {
                return Err(format!("size {} but optimum {k} on {:?} (added {:?})", r.size(), g.edges(), r.trace));
            }
            if r.target != k {
                return Err(format!("target {} but optimum {k} on {:?}", r.target, g.edges()));
            }
            Ok(())
        }
    }
}

#[test]
fn exhaustive_up_to_three_per_side() {
    let mut failures = Vec::new();
    for na in 0..=3 {
        for nb in 0..=3 {
            for g in all_graphs(na, nb) {
                if let Err(e) = agrees(&g) {
                    failures.push(e);
                }
            }
        }
    }
    assert!(failures.is_empty(), "{} failures, first: {:#?}", failures.len(), &failures[..failures.len().min(5)]);
}

#[test]
fn random_up_to_four_per_side() {
    let mut failures = Vec::new();
    for seed in 0..2000u64 {
        let na = 2 + (seed % 3) as usize;
        let nb = 2 + (seed / 3 % 3) as usize;
        let p = [0.2, 0.35, 0.5, 0.65][(seed / 9 % 4) as usize];
        let g = generate_instance(&InstanceKind::Random { a: na, b: nb, p }, seed).unwrap();
        if let Err(e) = agrees(&g) {
            failures.push(e);
        }
    }
    assert!(failures.is_empty(), "{} failures, first: {:#?}", failures.len(), &failures[..failures.len().min(5)]);
}
