//! Tree-engine integration tests against the exhaustive oracles: frozen
//! expected values derived by scanning, oracle equivalence, monotone child
//! growth, the counterexample regression, and the max-number witnesses.

use num_bigint::BigInt;
use vieta_core::cubic::{CubicParams, Triple};
use vieta_core::export;
use vieta_core::tree::{
    brute_force, brute_force_reference, generate, max_number_witnesses, membership_path,
    verify_uniqueness, EnumBound, FamilySpec, WitnessOutcome,
};

#[test]
fn oracle_equivalence_on_a_grid() {
    for (k1, k2, k3) in [(0, 0, 0), (0, 1, 2), (1, 1, 1), (2, 1, 0)] {
        let spec = FamilySpec::cubic(k1, k2, k3);
        let tree: std::collections::BTreeSet<Triple> = generate(&spec, &EnumBound::max_entry_u64(500))
            .into_iter()
            .map(|n| n.triple)
            .collect();
        assert_eq!(tree, brute_force(&spec, 500).unwrap(), "({k1},{k2},{k3})");
    }
    for k in 0..=2 {
        let spec = FamilySpec::quartic(k);
        let tree: std::collections::BTreeSet<Triple> = generate(&spec, &EnumBound::max_entry_u64(300))
            .into_iter()
            .map(|n| n.triple)
            .collect();
        assert_eq!(tree, brute_force(&spec, 300).unwrap(), "quartic {k}");
    }
}

#[test]
fn reference_loop_agrees_with_accelerated_scan() {
    for spec in [
        FamilySpec::cubic(0, 1, 2),
        FamilySpec::cubic(1, 2, 2),
        FamilySpec::quartic(2),
    ] {
        assert_eq!(
            brute_force_reference(&spec, 100).unwrap(),
            brute_force(&spec, 100).unwrap()
        );
    }
}

#[test]
fn child_maxima_grow_monotonically() {
    // Below depth 1 every child has a strictly larger maximum (cubic); the
    // quartic comparison happens in the conjugate space, so its raw maxima
    // are only nondecreasing.
    let spec = FamilySpec::cubic(0, 1, 2);
    let nodes = generate(&spec, &EnumBound::MaxDepth(5));
    for node in &nodes {
        if let Some(pi) = node.parent {
            let parent = &nodes[pi];
            if parent.depth >= 1 {
                assert!(node.triple.max_entry() > parent.triple.max_entry());
            }
        }
    }
    let spec = FamilySpec::quartic(1);
    let nodes = generate(&spec, &EnumBound::MaxDepth(5));
    for node in &nodes {
        if let Some(pi) = node.parent {
            assert!(node.triple.max_entry() >= nodes[pi].triple.max_entry());
        }
    }
}

#[test]
fn every_enumerated_node_descends_to_the_root() {
    let spec = FamilySpec::quartic(1);
    let nodes = generate(&spec, &EnumBound::MaxDepth(4));
    for node in &nodes {
        let path = membership_path(&spec, &node.triple).unwrap();
        assert_eq!(path.len() as u32, node.depth);
        if let (Some(pi), Some((_, first_dir))) = (node.parent, path.first()) {
            // The first descent step is the edge back to the parent.
            assert_eq!(node.dir.unwrap(), *first_dir);
            let down = match &spec {
                FamilySpec::Quartic(q) => {
                    vieta_core::quartic::quartic_jump(q, &node.triple, *first_dir).unwrap()
                }
                _ => unreachable!(),
            };
            assert_eq!(down, nodes[pi].triple);
        }
    }
}

#[test]
fn markov_counterexample_regression() {
    let spec = FamilySpec::cubic(0, 1, 2);
    let nodes = generate(&spec, &EnumBound::max_entry_u64(100));
    let a = Triple::from_u64(1, 81, 17);
    let b = Triple::from_u64(7, 81, 2);
    let triples: Vec<&Triple> = nodes.iter().map(|n| &n.triple).collect();
    assert!(triples.contains(&&a));
    assert!(triples.contains(&&b));
    assert_eq!(a.max_entry(), b.max_entry());
    assert_ne!(a.sorted(), b.sorted());
}

#[test]
fn uniqueness_bounds_from_the_operation_examples() {
    assert!(verify_uniqueness(&FamilySpec::cubic(0, 1, 2), 500).unwrap());
    assert!(verify_uniqueness(&FamilySpec::quartic(1), 800).unwrap());
    assert!(verify_uniqueness(&FamilySpec::cubic(2, 2, 2), 900).unwrap());
}

#[test]
fn witness_search_reports_inconclusive_when_capped() {
    let p = CubicParams::from_u64(0, 1, 2);
    // With a generous cap every value is witnessed...
    let ok = max_number_witnesses(&p, 30, 200).unwrap();
    assert!(ok
        .iter()
        .all(|(_, o)| matches!(o, WitnessOutcome::Witnessed(_))));
    // ...with a cap below some values, the report says inconclusive
    // rather than erroring.
    let capped = max_number_witnesses(&p, 30, 10).unwrap();
    assert!(capped
        .iter()
        .any(|(_, o)| matches!(o, WitnessOutcome::Inconclusive)));
    let values: Vec<&BigInt> = capped.iter().map(|(v, _)| v).collect();
    assert!(values.iter().any(|v| **v == BigInt::from(21)));
}

#[test]
fn export_round_trip_and_dot_shape() {
    let spec = FamilySpec::quartic(1);
    let nodes = generate(&spec, &EnumBound::MaxDepth(3));
    assert_eq!(nodes.len(), 22);
    let json = export::to_json(&nodes);
    assert_eq!(export::from_json(&json).unwrap(), nodes);
    let dot = export::to_dot(&nodes);
    assert!(dot.contains("n0 [label=\"(1,1,1)\"];"));
    assert!(dot.contains("[label=\"(741,2,5)\"];"));
    assert_eq!(dot.matches("->").count(), 21);
}
