//! Frameworks: graphs certifying that a matroid is quasi-graphic.
//!
//! A graph `H` is a framework for a matroid `N` when
//!
//! 1. `E(H) = E(N)`;
//! 2. every component `H'` of `H` has `r_N(E(H')) <= |V(H')|`;
//! 3. for every vertex `v`, `cl_N(E(H-v))` stays inside
//!    `E(H-v) ∪ loops_H(v)`;
//! 4. every circuit of `N` induces a subgraph with at most two components.
//!
//! The verifier also checks the necessary bias condition first — every cycle
//! of `H` must be a circuit of `N` or independent in it, and the resulting
//! balanced-cycle family must satisfy the theta property — because both the
//! search pruning and all downstream analysis rely on the derived bias.

mod search;

pub use search::{
    classify_representation, decide_quasi_graphic, enumerate_frameworks,
    enumerate_frameworks_naive, is_excluded_minor, EnumOptions, EnumerationResult,
    ExclusionReport, FrameworkClass, MinorEvidence, MinorOp, QgVerdict, Representation,
    SearchStats,
};

use crate::bias::{element_permutation, translate_mask, BiasError, BiasedGraph};
use crate::graph::Multigraph;
use crate::matroid::{bit_indices, Matroid};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrameworkError {
    #[error("enumeration supports at most {limit} elements, got {size}")]
    TooManyElements { size: usize, limit: usize },
    #[error(transparent)]
    Matroid(#[from] crate::matroid::MatroidError),
}

/// Why a (graph, matroid) pair fails to be a framework.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomFailure {
    /// Edge labels and ground set differ.
    Qg1 { only_in_graph: Vec<String>, only_in_matroid: Vec<String> },
    /// A cycle that is neither a circuit nor independent.
    BiasCycle { cycle: Vec<String> },
    /// The derived balanced-cycle family breaks the theta property.
    BiasTheta { branch: (usize, usize) },
    /// A component spanning more rank than vertices.
    Qg2 { vertices: Vec<usize>, edges: Vec<String>, rank: usize },
    /// Elements closed in from outside `E(H-v) ∪ loops(v)`.
    Qg3 { vertex: usize, escaped: Vec<String> },
    /// A circuit inducing three or more components.
    Qg4 { circuit: Vec<String>, components: usize },
}

impl AxiomFailure {
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomFailure::Qg1 { .. } => "QG1",
            AxiomFailure::BiasCycle { .. } | AxiomFailure::BiasTheta { .. } => "BIAS",
            AxiomFailure::Qg2 { .. } => "QG2",
            AxiomFailure::Qg3 { .. } => "QG3",
            AxiomFailure::Qg4 { .. } => "QG4",
        }
    }

    pub fn describe(&self) -> String {
        match self {
            AxiomFailure::Qg1 { only_in_graph, only_in_matroid } => format!(
                "edge labels and ground set differ (graph-only: {}; matroid-only: {})",
                only_in_graph.join(","),
                only_in_matroid.join(",")
            ),
            AxiomFailure::BiasCycle { cycle } => format!(
                "cycle {{{}}} is neither a circuit nor independent",
                cycle.join(",")
            ),
            AxiomFailure::BiasTheta { branch } => format!(
                "derived bias gives a theta at vertices {} and {} exactly two balanced cycles",
                branch.0, branch.1
            ),
            AxiomFailure::Qg2 { vertices, edges, rank } => format!(
                "component on vertices {:?} has rank {} > {} (edges {{{}}})",
                vertices,
                rank,
                vertices.len(),
                edges.join(",")
            ),
            AxiomFailure::Qg3 { vertex, escaped } => format!(
                "closure of E(H-{}) reaches {{{}}} outside E(H-{}) and its loops",
                vertex,
                escaped.join(","),
                vertex
            ),
            AxiomFailure::Qg4 { circuit, components } => format!(
                "circuit {{{}}} induces {} components",
                circuit.join(","),
                components
            ),
        }
    }
}

/// Outcome of checking the framework axioms.
#[derive(Debug, Clone)]
pub struct FrameworkReport {
    pub valid: bool,
    /// The derived bias, present whenever the bias stage passed.
    pub derived: Option<BiasedGraph>,
    pub failure: Option<AxiomFailure>,
}

impl FrameworkReport {
    fn fail(failure: AxiomFailure, derived: Option<BiasedGraph>) -> FrameworkReport {
        FrameworkReport { valid: false, derived, failure: Some(failure) }
    }
}

/// Checks the axioms in order: label equality, bias consistency, the
/// per-component rank bound, vertex closures, and circuit components.
pub fn verify_framework(h: &Multigraph, n: &Matroid) -> FrameworkReport {
    // QG1: same labels
    if element_permutation(h, n).is_none() {
        let graph_labels: Vec<&str> = h.labels().collect();
        let only_in_graph: Vec<String> = graph_labels
            .iter()
            .filter(|l| n.element_index(l).is_none())
            .map(|l| l.to_string())
            .collect();
        let only_in_matroid: Vec<String> = n
            .element_names()
            .iter()
            .filter(|e| !graph_labels.contains(&e.as_str()))
            .cloned()
            .collect();
        return FrameworkReport::fail(AxiomFailure::Qg1 { only_in_graph, only_in_matroid }, None);
    }
    let perm = element_permutation(h, n).expect("checked above");

    // bias consistency: necessary for frameworks, and it yields the derived
    // bias for the report
    let derived = match BiasedGraph::derived(h.clone(), n) {
        Ok(bg) => bg,
        Err(BiasError::InconsistentCycle(mask)) => {
            return FrameworkReport::fail(
                AxiomFailure::BiasCycle { cycle: labels_of(h, mask) },
                None,
            );
        }
        Err(BiasError::ThetaViolation { u, v }) => {
            return FrameworkReport::fail(AxiomFailure::BiasTheta { branch: (u, v) }, None);
        }
        Err(other) => unreachable!("derive on label-matched input: {other}"),
    };

    // QG2: rank of each component at most its vertex count
    for comp in h.components() {
        let rank = n.rank_of(translate_mask(comp.edge_mask, &perm));
        if rank > comp.vertices.len() {
            return FrameworkReport::fail(
                AxiomFailure::Qg2 {
                    vertices: comp.vertices.clone(),
                    edges: labels_of(h, comp.edge_mask),
                    rank,
                },
                Some(derived),
            );
        }
    }

    // QG3: closures of vertex-deleted edge sets stay put
    for v in 0..h.vertex_count() {
        let away = h.full_edge_mask() & !h.star_mask(v);
        let allowed = translate_mask(away | h.loop_mask_at(v), &perm);
        let closure = n.closure(translate_mask(away, &perm));
        if closure & !allowed != 0 {
            let escaped = bit_indices(closure & !allowed)
                .map(|e| n.element_names()[e].clone())
                .collect();
            return FrameworkReport::fail(
                AxiomFailure::Qg3 { vertex: v, escaped },
                Some(derived),
            );
        }
    }

    // QG4: circuits induce at most two components
    let mut inverse = vec![0usize; perm.len()];
    for (edge, &element) in perm.iter().enumerate() {
        inverse[element] = edge;
    }
    for &circuit in n.circuits() {
        let edge_mask = translate_mask(circuit, &inverse);
        let covered = h.vertices_of(edge_mask);
        let removed: u32 = (0..h.vertex_count())
            .filter(|v| !covered.contains(v))
            .fold(0, |m, v| m | 1 << v);
        let components = h.components_in(edge_mask, removed).len();
        if components > 2 {
            return FrameworkReport::fail(
                AxiomFailure::Qg4 {
                    circuit: bit_indices(circuit).map(|e| n.element_names()[e].clone()).collect(),
                    components,
                },
                Some(derived),
            );
        }
    }

    FrameworkReport { valid: true, derived: Some(derived), failure: None }
}

fn labels_of(h: &Multigraph, mask: u32) -> Vec<String> {
    bit_indices(mask).map(|e| h.label(e).to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k3() -> Multigraph {
        Multigraph::complete(3).k_multiply(2).unwrap()
    }

    fn u36_on(labels: &Multigraph) -> Matroid {
        let names: Vec<String> = labels.labels().map(|l| l.to_string()).collect();
        let circuits = (0u32..64).filter(|m| m.count_ones() == 4).collect();
        Matroid::from_circuits(names, circuits).unwrap()
    }

    #[test]
    fn doubled_triangle_is_a_framework_for_u36() {
        let h = two_k3();
        let n = u36_on(&h);
        let report = verify_framework(&h, &n);
        assert!(report.valid, "failure: {:?}", report.failure);
        assert!(report.derived.unwrap().is_contrabalanced());
    }

    #[test]
    fn k4_fails_u36_at_qg3() {
        // triangles of K4 are independent 3-sets and 4-cycles are circuits,
        // so the bias stage passes; but deleting a vertex leaves a spanning
        // triangle whose closure is the whole ground set
        let k4 = Multigraph::complete(4);
        let n = Matroid::uniform(3, 6);
        let report = verify_framework(&k4, &n);
        assert!(!report.valid);
        assert!(report.derived.is_some());
        match report.failure.unwrap() {
            AxiomFailure::Qg3 { vertex, escaped } => {
                assert_eq!(vertex, 0);
                assert_eq!(escaped, vec!["e1", "e2", "e3"]);
            }
            other => panic!("expected QG3, got {other:?}"),
        }
    }

    #[test]
    fn bias_failure_reports_the_offending_cycle() {
        // a triangle carrying U_{2,3}-with-a-free-element: make the triangle
        // {e1,e2,e3} dependent but not a circuit by declaring {e1,e2} a
        // circuit; the 2-cycle... a triangle has no 2-cycles, so the
        // triangle itself is the inconsistent cycle
        let g = Multigraph::complete(3);
        let n = Matroid::from_circuits(vec!["e1", "e2", "e3"], vec![0b011]).unwrap();
        let report = verify_framework(&g, &n);
        assert!(!report.valid);
        assert!(report.derived.is_none());
        match report.failure.unwrap() {
            AxiomFailure::BiasCycle { cycle } => assert_eq!(cycle, vec!["e1", "e2", "e3"]),
            other => panic!("expected a bias failure, got {other:?}"),
        }
    }

    #[test]
    fn balanced_graph_is_a_framework_of_its_cycle_matroid() {
        for g in [Multigraph::complete(4), Multigraph::wheel(4), Multigraph::prism()] {
            let n = Matroid::from_graph(&g).unwrap();
            let report = verify_framework(&g, &n);
            assert!(report.valid, "failure: {:?}", report.failure);
            assert!(report.derived.unwrap().is_balanced());
        }
    }

    #[test]
    fn qg1_reports_label_mismatches() {
        let mut g = Multigraph::new(2);
        g.add_edge("x", 0, 1).unwrap();
        let n = Matroid::uniform(1, 1);
        let report = verify_framework(&g, &n);
        assert!(!report.valid);
        match report.failure.unwrap() {
            AxiomFailure::Qg1 { only_in_graph, only_in_matroid } => {
                assert_eq!(only_in_graph, vec!["x"]);
                assert_eq!(only_in_matroid, vec!["e1"]);
            }
            other => panic!("expected QG1, got {other:?}"),
        }
    }

    #[test]
    fn qg2_catches_overloaded_components() {
        // a triangle carrying U_{3,3}: every cycle is independent (fine for
        // bias) but rank 3 exceeds... it does not: 3 vertices. Use U_{3,3}
        // on a triangle plus isolated vertex instead: still fine. The real
        // case: two disjoint edges carrying a rank-2 uniform matroid on one
        // component is impossible, so build the failure directly: a path
        // with 3 edges on 4 vertices carrying U_{3,3} passes; squeeze the
        // path onto 3 vertices as a triangle with U_{3,3} passes too (rank
        // 3 = vertices 3). QG2 must fail when rank exceeds vertices: put
        // all three elements as parallel edges on two vertices.
        let mut g = Multigraph::new(2);
        for l in ["e1", "e2", "e3"] {
            g.add_edge(l, 0, 1).unwrap();
        }
        let free = Matroid::uniform(3, 3);
        let report = verify_framework(&g, &free);
        assert!(!report.valid);
        // every 2-cycle among parallel edges is independent in the free
        // matroid, so bias passes and QG2 is the failing axiom
        match report.failure.unwrap() {
            AxiomFailure::Qg2 { vertices, rank, .. } => {
                assert_eq!(vertices, vec![0, 1]);
                assert_eq!(rank, 3);
            }
            other => panic!("expected QG2, got {other:?}"),
        }
    }

    #[test]
    fn qg3_catches_escaping_closures() {
        // U_{1,2} on a path of two edges: deleting the middle vertex leaves
        // no edges... deleting an END vertex leaves one edge whose closure
        // (rank 1) pulls in the other element, which is neither in E(H-v)
        // nor a loop at v
        let mut g = Multigraph::new(3);
        g.add_edge("e1", 0, 1).unwrap();
        g.add_edge("e2", 1, 2).unwrap();
        let n = Matroid::uniform(1, 2);
        let report = verify_framework(&g, &n);
        assert!(!report.valid);
        match report.failure.unwrap() {
            AxiomFailure::Qg3 { escaped, .. } => assert_eq!(escaped.len(), 1),
            other => panic!("expected QG3, got {other:?}"),
        }
    }

    #[test]
    fn qg4_catches_scattered_circuits() {
        // three loops on three vertices carrying U_{2,3}: each loop is an
        // independent singleton (bias passes, each is unbalanced), each
        // component has rank 1 on one vertex (QG2 passes), and closures of
        // 2-element sets reach the third element but that element is a loop
        // at the deleted vertex (QG3 passes).  The lone circuit — all three
        // elements — induces three components.
        let mut g = Multigraph::new(3);
        for (i, l) in ["e1", "e2", "e3"].iter().enumerate() {
            g.add_edge(*l, i, i).unwrap();
        }
        let n = Matroid::uniform(2, 3);
        let report = verify_framework(&g, &n);
        assert!(!report.valid);
        match report.failure.unwrap() {
            AxiomFailure::Qg4 { circuit, components } => {
                assert_eq!(circuit.len(), 3);
                assert_eq!(components, 3);
            }
            other => panic!("expected QG4, got {other:?}"),
        }
    }

    #[test]
    fn loops_legitimize_escaping_closures() {
        // single element as an unbalanced loop: closure of the empty set in
        // U_{1,1} is empty, fine; and for the loop vertex the deleted star
        // leaves nothing to close in
        let mut g = Multigraph::new(1);
        g.add_edge("e1", 0, 0).unwrap();
        let n = Matroid::uniform(1, 1);
        assert!(verify_framework(&g, &n).valid);
    }
}
