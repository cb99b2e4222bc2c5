//! The acceptance gate: eight end-to-end checks pinning the results the
//! library must reproduce exactly.  Expected counts marked "frozen" were
//! confirmed by running the unpruned reference search ([`enumerate_frameworks_naive`])
//! alongside the production search and comparing the rendered class lists
//! byte for byte; criterion 8 keeps a slice of that comparison in-tree.
//!
//! Each test ends with a single `ACCEPTANCE <n>: PASS` line (visible under
//! `--nocapture`); failures panic through the ordinary assert machinery.

use std::collections::BTreeSet;

use quasigraph_core::io::{class_records, render_records};
use quasigraph_core::{
    analyze, decide_quasi_graphic, enumerate_frameworks, enumerate_frameworks_naive, fat_theta,
    is_excluded_minor, pinch, simple_curling, BiasedGraph, EnumOptions, EnumerationResult,
    Matroid, Multigraph, Signature, TwistPart,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn opts() -> EnumOptions {
    EnumOptions { jobs: 4, ..EnumOptions::default() }
}

fn enumerate(n: &Matroid) -> EnumerationResult {
    enumerate_frameworks(n, &opts()).expect("ground set is within the search limit")
}

/// The triangle with every edge doubled, labelled to match a 6-element
/// uniform ground set.
fn doubled_triangle() -> Multigraph {
    let mut g = Multigraph::new(3);
    let edges = [("e1", 0, 1), ("e2", 0, 1), ("e3", 0, 2), ("e4", 0, 2), ("e5", 1, 2), ("e6", 1, 2)];
    for (label, u, v) in edges {
        g.add_edge(label, u, v).expect("labels are fresh");
    }
    g
}

/// The cubic multigraph on four vertices besides K4: a doubled 4-cycle with
/// one copy of each of two opposite sides removed.
fn k_graph() -> Multigraph {
    let mut g = Multigraph::new(4);
    let edges = [
        ("a", 0, 1),
        ("b1", 1, 2),
        ("b2", 1, 2),
        ("c", 2, 3),
        ("d1", 3, 0),
        ("d2", 3, 0),
    ];
    for (label, u, v) in edges {
        g.add_edge(label, u, v).expect("labels are fresh");
    }
    g
}

fn assert_excluded_minor(n: &Matroid, name: &str) {
    let report = is_excluded_minor(n, &opts()).expect("ground set is within the search limit");
    assert_eq!(report.base.decided(), Some(false), "{name} must not be quasi-graphic");
    assert_eq!(report.excluded, Some(true), "{name} must be an excluded minor");
    assert_eq!(
        report.minors.len(),
        2 * n.ground_size(),
        "{name}: one deletion and one contraction per element"
    );
    assert!(
        report.minors.iter().all(|m| m.verdict.decided() == Some(true)),
        "{name}: every single-element minor must be quasi-graphic"
    );
}

#[test]
fn acceptance_1_rank_three_uniform_frameworks() {
    let result = enumerate(&Matroid::uniform(3, 6));
    assert!(!result.bounded, "the U(3,6) search must exhaust its space");
    assert!(!result.classes.is_empty(), "U(3,6) must be quasi-graphic");
    let shape = doubled_triangle();
    for class in &result.classes {
        assert!(
            class.graph.shape_isomorphic(&shape),
            "U(3,6) framework on an unexpected graph: {:?}",
            class.graph
        );
    }
    assert_eq!(result.classes.len(), 15); // frozen

    let u37 = Matroid::uniform(3, 7);
    let verdict = decide_quasi_graphic(&u37, &opts()).expect("seven elements is within the limit");
    assert_eq!(verdict.decided(), Some(false), "U(3,7) must not be quasi-graphic");
    assert_excluded_minor(&u37, "U(3,7)");

    println!("ACCEPTANCE 1: PASS - U(3,6): 15 classes, all on the doubled triangle; U(3,7): excluded minor");
}

#[test]
fn acceptance_2_rank_four_uniform_frameworks() {
    let result = enumerate(&Matroid::uniform(4, 6));
    assert!(!result.bounded, "the U(4,6) search must exhaust its space");
    let k4 = Multigraph::complete(4);
    let k = k_graph();
    let (mut on_k4, mut on_k) = (0usize, 0usize);
    for class in &result.classes {
        if class.graph.shape_isomorphic(&k4) {
            on_k4 += 1;
        } else if class.graph.shape_isomorphic(&k) {
            on_k += 1;
        } else {
            panic!("U(4,6) framework on an unexpected graph: {:?}", class.graph);
        }
    }
    assert!(on_k4 > 0, "some U(4,6) framework must live on K4");
    assert!(on_k > 0, "some U(4,6) framework must live on the second cubic graph");
    assert_eq!((on_k4, on_k), (30, 45)); // frozen

    let u47 = Matroid::uniform(4, 7);
    let verdict = decide_quasi_graphic(&u47, &opts()).expect("seven elements is within the limit");
    assert_eq!(verdict.decided(), Some(false), "U(4,7) must not be quasi-graphic");
    assert_excluded_minor(&u47, "U(4,7)");

    println!("ACCEPTANCE 2: PASS - U(4,6): 75 classes split 30 on K4 and 45 on the second cubic graph; U(4,7): excluded minor");
}

#[test]
fn acceptance_3_excluded_minors_and_the_wheel() {
    assert_excluded_minor(&Matroid::uniform(3, 7), "U(3,7)");
    assert_excluded_minor(&Matroid::uniform(4, 7), "U(4,7)");

    let wheel = Matroid::from_graph(&Multigraph::wheel(4)).expect("eight elements is within the limit");
    let result = enumerate(&wheel);
    assert!(!result.bounded, "the wheel search must exhaust its space");
    assert!(
        result.classes.len() >= 16,
        "the rank-4 wheel must admit at least 16 classes, found {}",
        result.classes.len()
    );
    assert_eq!(result.classes.len(), 27); // frozen

    println!("ACCEPTANCE 3: PASS - U(3,7) and U(4,7) are excluded minors; the rank-4 wheel admits 27 >= 16 classes");
}

#[test]
fn acceptance_4_graphicness_classifier() {
    let graphic = [
        ("M(K4)", Matroid::from_graph(&Multigraph::complete(4)).unwrap()),
        ("M(K5)", Matroid::from_graph(&Multigraph::complete(5)).unwrap()),
        ("M(W4)", Matroid::from_graph(&Multigraph::wheel(4)).unwrap()),
    ];
    for (name, m) in &graphic {
        assert!(
            m.is_graphic().expect("within the graphic test limit"),
            "{name} must test graphic"
        );
    }
    let non_graphic = [
        ("U(2,4)", Matroid::uniform(2, 4)),
        ("F7", Matroid::fano()),
        ("F7*", Matroid::fano_dual()),
        ("M*(K5)", Matroid::k5_bond()),
        ("M*(K3,3)", Matroid::k33_bond()),
    ];
    for (name, m) in &non_graphic {
        assert!(
            !m.is_graphic().expect("within the graphic test limit"),
            "{name} must test non-graphic"
        );
    }

    println!("ACCEPTANCE 4: PASS - graphicness agrees on all eight reference matroids");
}

#[test]
fn acceptance_5_constructions_represent_their_graphs() {
    let bases = [
        Multigraph::complete(4),
        Multigraph::complete(5),
        Multigraph::wheel(4),
        Multigraph::prism(),
    ];
    for g in bases {
        let m = Matroid::from_graph(&g).expect("within the element limit");
        let n = g.vertex_count();
        for v1 in 0..n {
            for v2 in (v1 + 1)..n {
                let (bias, _) = pinch(g.clone(), v1, v2).expect("vertices are in range");
                let frame = bias.frame_matroid().expect("within the element limit");
                assert!(
                    frame.is_isomorphic(&m),
                    "pinching at ({v1},{v2}) must represent the cycle matroid"
                );
            }
        }
        for v in 0..n {
            let bias = simple_curling(g.clone(), v).expect("vertex is in range");
            let frame = bias.frame_matroid().expect("within the element limit");
            assert!(frame.is_isomorphic(&m), "curling at {v} must represent the cycle matroid");
        }
    }

    let edge = |label: &str| {
        let mut g = Multigraph::new(2);
        g.add_edge(label, 0, 1).expect("label is fresh");
        g
    };
    let parts = vec![
        TwistPart::marked(edge("p1"), 0, 1),
        TwistPart::marked(edge("p2"), 0, 1),
        TwistPart::marked(edge("p3"), 0, 1),
    ];
    let (bias, base) = fat_theta(parts).expect("three marked single-edge parts");
    let lift = bias.lift_matroid().expect("within the element limit");
    assert!(
        lift.is_isomorphic(&Matroid::uniform(2, 3)),
        "the single-edge fat theta must lift to U(2,3)"
    );
    let base_matroid = Matroid::from_graph(&base).expect("within the element limit");
    assert!(base_matroid.is_isomorphic(&Matroid::uniform(2, 3)));

    println!("ACCEPTANCE 5: PASS - pinches and curlings of K4, K5, W4 and the prism represent their cycle matroids; the single-edge fat theta lifts to U(2,3)");
}

#[test]
fn acceptance_6_enumerated_classes_satisfy_every_invariant() {
    let targets = [
        Matroid::uniform(3, 6),
        Matroid::uniform(4, 6),
        Matroid::from_graph(&Multigraph::wheel(4)).expect("within the element limit"),
    ];
    let mut analyzed = 0usize;
    for n in targets {
        let result = enumerate(&n);
        assert!(!result.bounded);
        for class in result.classes {
            let report =
                analyze(class.graph, n.clone()).expect("enumerated classes are valid frameworks");
            let violations = report.invariant_violations();
            assert!(
                violations.is_empty(),
                "invariant violations on an enumerated class: {violations:?}"
            );
            analyzed += 1;
        }
    }
    assert_eq!(analyzed, 15 + 75 + 27);

    println!("ACCEPTANCE 6: PASS - all 117 enumerated classes pass the full invariant suite");
}

#[test]
fn acceptance_7_signature_recovery_roundtrips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51_6e_a7_e5);
    for _ in 0..100 {
        let vertices = rng.gen_range(2usize..=7);
        let edges = rng.gen_range(1usize..=12.min(3 * vertices));
        let mut g = Multigraph::new(vertices);
        for i in 0..edges {
            let u = rng.gen_range(0..vertices);
            let v = rng.gen_range(0..vertices);
            g.add_edge(format!("e{}", i + 1), u, v).expect("labels are fresh");
        }
        let sigma = Signature { edges: rng.gen::<u32>() & ((1u32 << g.edge_count()) - 1) };
        let signed = BiasedGraph::from_signature(g.clone(), sigma);
        let recovered = signed.find_signature().expect("signed biases always admit a signature");
        let rebuilt = BiasedGraph::from_signature(g, recovered);
        let original: BTreeSet<u32> = signed.balanced_cycles().map(|c| c.edges).collect();
        let roundtrip: BTreeSet<u32> = rebuilt.balanced_cycles().map(|c| c.edges).collect();
        assert_eq!(original, roundtrip, "recovered signature changed the balanced cycles");
    }

    let contrabalanced = BiasedGraph::derived(doubled_triangle(), &Matroid::uniform(3, 6))
        .expect("labels match the ground set");
    assert!(
        contrabalanced.find_signature().is_none(),
        "the contrabalanced doubled triangle must not be a signed bias"
    );

    println!("ACCEPTANCE 7: PASS - 100 random signatures round-trip exactly; the contrabalanced doubled triangle admits none");
}

#[test]
fn acceptance_8_pruned_search_matches_the_reference_search() {
    for n in 0..=5usize {
        for r in 0..=n {
            let m = Matroid::uniform(r, n);
            let pruned = enumerate_frameworks(&m, &opts()).expect("within the element limit");
            let naive = enumerate_frameworks_naive(&m, &EnumOptions::default())
                .expect("within the element limit");
            assert_eq!(pruned.bounded, naive.bounded, "U({r},{n}): bounded flags differ");
            let pruned_text = render_records(&class_records(&pruned.classes));
            let naive_text = render_records(&class_records(&naive.classes));
            assert_eq!(pruned_text, naive_text, "U({r},{n}): class lists differ");
        }
    }

    println!("ACCEPTANCE 8: PASS - pruned and reference searches agree byte-for-byte on every uniform matroid with at most 5 elements");
}
