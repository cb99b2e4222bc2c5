//! Structural analysis of a verified framework.
//!
//! [`analyze`] checks the framework axioms once, classifies whether the bias
//! reproduces the matroid as a frame or lift matroid, and caches the loopless
//! companion graph that the star and blocking operations are defined on.
//! From there the [`AnalyzedFramework`] exposes blocking vertices and pairs,
//! fixed vertices, mixed balancing sets, and a suite of `check_*` invariants
//! tying the graph structure to the matroid.

use itertools::Itertools;
use thiserror::Error;

use crate::bias::{element_permutation, translate_mask, BiasedGraph};
use crate::framework::{
    classify_representation, verify_framework, AxiomFailure, FrameworkError, Representation,
};
use crate::graph::Multigraph;
use crate::matroid::{bit_indices, Matroid, MatroidError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("not a framework: {}", .0.describe())]
    NotAFramework(AxiomFailure),
    #[error("fixed vertices are only defined on connected graphs")]
    DisconnectedGraph,
    #[error("fixed vertices are only defined under a 3-connected matroid")]
    NotThreeConnected,
    #[error(transparent)]
    Framework(#[from] FrameworkError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// How a circuit of the matroid sits inside the framework graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircuitShape {
    /// A single balanced cycle.
    BalancedCycle,
    /// Connected, no balanced cycle inside, minimum degree two, and exactly
    /// one more edge than it has vertices.
    Contrabalanced,
    /// Two unbalanced cycles sharing at most one vertex.
    UnbalancedPair,
}

/// A named structural invariant that failed, with the offending detail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantViolation {
    pub check: &'static str,
    pub detail: String,
}

impl std::fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

/// A set of vertices and edges whose removal leaves the graph balanced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedBalancingSet {
    pub vertices: Vec<usize>,
    /// Edge mask over the framework graph.
    pub edges: u32,
}

impl MixedBalancingSet {
    pub fn size(&self) -> usize {
        self.vertices.len() + self.edges.count_ones() as usize
    }
}

/// A framework together with everything derived from it once.
#[derive(Debug, Clone)]
pub struct AnalyzedFramework {
    pub h: Multigraph,
    pub n: Matroid,
    /// The bias the matroid induces on `h`.
    pub derived: BiasedGraph,
    /// `h` without its loops when the bias lift-represents `n`, else `h`
    /// itself; stars and blocking structure are read off this graph.
    pub h_prime: Multigraph,
    pub representation: Representation,
    /// True when `h_prime` actually dropped loops.
    pub loops_dropped: bool,
    prime_bias: BiasedGraph,
    /// Edge index to element index.
    perm: Vec<usize>,
    /// Element index to edge index.
    inverse: Vec<usize>,
}

/// Verifies the framework axioms and prepares the analysis caches.
pub fn analyze(h: Multigraph, n: Matroid) -> Result<AnalyzedFramework, AnalysisError> {
    let report = verify_framework(&h, &n);
    if let Some(failure) = report.failure {
        return Err(AnalysisError::NotAFramework(failure));
    }
    let derived = report.derived.expect("a valid report carries its bias");
    let representation = classify_representation(&derived, &n)?;
    let perm = element_permutation(&h, &n).expect("a valid framework matches labels");
    let mut inverse = vec![0usize; perm.len()];
    for (edge, &element) in perm.iter().enumerate() {
        inverse[element] = edge;
    }
    let loops_dropped = representation.is_lift && h.loop_mask() != 0;
    let (h_prime, prime_bias) = if loops_dropped {
        drop_loops(&h, &derived)
    } else {
        (h.clone(), derived.clone())
    };
    Ok(AnalyzedFramework {
        h,
        n,
        derived,
        h_prime,
        representation,
        loops_dropped,
        prime_bias,
        perm,
        inverse,
    })
}

/// Rebuilds the graph without its loops and restricts the bias to it.
fn drop_loops(h: &Multigraph, derived: &BiasedGraph) -> (Multigraph, BiasedGraph) {
    let loops = h.loop_mask();
    let mut pruned = Multigraph::new(h.vertex_count());
    let mut new_index = vec![usize::MAX; h.edge_count()];
    for e in 0..h.edge_count() {
        if loops & (1 << e) != 0 {
            continue;
        }
        let (u, v) = h.endpoints(e);
        new_index[e] = pruned.edge_count();
        pruned.add_edge(h.label(e), u, v).expect("re-adding surviving edges");
    }
    let balanced: Vec<u32> = derived
        .balanced_cycles()
        .filter(|c| c.edges & loops == 0)
        .map(|c| bit_indices(c.edges).fold(0, |m, e| m | 1 << new_index[e]))
        .collect();
    let bias = BiasedGraph::new(pruned.clone(), &balanced)
        .expect("restricting a valid bias keeps it valid");
    (pruned, bias)
}

impl AnalyzedFramework {
    /// Translates an edge mask of `h` into an element mask of `n`.
    pub fn element_mask(&self, edge_mask: u32) -> u32 {
        translate_mask(edge_mask, &self.perm)
    }

    /// Translates an element mask of `n` into an edge mask of `h`.
    pub fn edge_mask(&self, element_mask: u32) -> u32 {
        translate_mask(element_mask, &self.inverse)
    }

    /// The star of `v` in the loopless companion graph, as an edge mask of
    /// `h`.  Equal to the plain star unless the lift convention dropped the
    /// loops.
    pub fn star_star(&self, v: usize) -> u32 {
        assert!(v < self.h.vertex_count(), "vertex {v} out of range");
        let star = self.h.star_mask(v);
        if self.loops_dropped {
            star & !self.h.loop_mask()
        } else {
            star
        }
    }

    /// Vertices meeting every unbalanced cycle of the companion graph.
    pub fn framework_blocking_vertices(&self) -> Vec<usize> {
        self.prime_bias.blocking_vertices()
    }

    /// Unordered pairs `{a, b}` where each vertex meets every unbalanced
    /// cycle that survives deleting the other (and at least one survives).
    /// No blocking vertex can appear in a pair: deleting it balances the
    /// graph, leaving its partner nothing to block.
    pub fn blocking_pairs(&self) -> Vec<(usize, usize)> {
        let g = self.prime_bias.graph();
        let cycles: Vec<Vec<usize>> =
            self.prime_bias.unbalanced_cycles().map(|c| c.vertices(g)).collect();
        let mut pairs = Vec::new();
        for a in 0..g.vertex_count() {
            for b in a + 1..g.vertex_count() {
                if blocks_without(&cycles, a, b) && blocks_without(&cycles, b, a) {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }

    /// Whether deleting the star of `v` leaves a 3-connected non-graphic
    /// matroid.  Only defined for connected frameworks of 3-connected
    /// matroids; anything else is rejected.
    pub fn is_fixed(&self, v: usize) -> Result<bool, AnalysisError> {
        assert!(v < self.h.vertex_count(), "vertex {v} out of range");
        if !self.h.is_connected() {
            return Err(AnalysisError::DisconnectedGraph);
        }
        if !self.n.is_k_connected(3) {
            return Err(AnalysisError::NotThreeConnected);
        }
        let rest = self.n.delete(self.element_mask(self.star_star(v)));
        if !rest.is_k_connected(3) {
            return Ok(false);
        }
        Ok(!rest.is_graphic()?)
    }

    pub fn fixed_vertices(&self) -> Result<Vec<usize>, AnalysisError> {
        (0..self.h.vertex_count())
            .filter_map(|v| match self.is_fixed(v) {
                Ok(true) => Some(Ok(v)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect()
    }

    /// All inclusion-minimal balancing sets of vertices and edges with at
    /// most `max_size` members, smallest first.  A minimal set never pairs a
    /// deleted vertex with one of its own incident edges.
    pub fn minimal_balancing_sets_mixed(&self, max_size: usize) -> Vec<MixedBalancingSet> {
        let n_v = self.h.vertex_count();
        let n_e = self.h.edge_count();
        let mut found: Vec<MixedBalancingSet> = Vec::new();
        for size in 0..=max_size {
            for combo in (0..n_v + n_e).combinations(size) {
                let vertices: Vec<usize> =
                    combo.iter().copied().filter(|&i| i < n_v).collect();
                let edges: u32 = combo
                    .iter()
                    .filter(|&&i| i >= n_v)
                    .fold(0, |m, &i| m | 1 << (i - n_v));
                if !self.is_balancing(&vertices, edges) {
                    continue;
                }
                // balancing is preserved by taking supersets, so minimality
                // only needs a containment test against smaller hits
                let dominated = found.iter().any(|s| {
                    s.edges & !edges == 0 && s.vertices.iter().all(|v| vertices.contains(v))
                });
                if dominated {
                    continue;
                }
                let covered: u32 =
                    vertices.iter().fold(0, |m, &v| m | self.h.star_mask(v));
                assert_eq!(edges & covered, 0, "minimal balancing set kept a covered edge");
                found.push(MixedBalancingSet { vertices, edges });
            }
        }
        found
    }

    fn is_balancing(&self, vertices: &[usize], edges: u32) -> bool {
        let stars: u32 = vertices.iter().fold(0, |m, &v| m | self.h.star_mask(v));
        let remaining = self.h.full_edge_mask() & !edges & !stars;
        self.derived.is_balanced_subgraph(remaining)
    }

    /// Classifies how a circuit (given as an element mask) sits in the
    /// graph; `None` means it fits no admissible shape.
    pub fn circuit_shape(&self, elements: u32) -> Option<CircuitShape> {
        let mask = self.edge_mask(elements);
        if self.derived.is_balanced_cycle(mask) == Some(true) {
            return Some(CircuitShape::BalancedCycle);
        }
        if self.is_tight_contrabalanced(mask) {
            return Some(CircuitShape::Contrabalanced);
        }
        if self.is_unbalanced_pair(mask) {
            return Some(CircuitShape::UnbalancedPair);
        }
        None
    }

    fn is_tight_contrabalanced(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        let covered = self.h.vertices_of(mask);
        if mask.count_ones() as usize != covered.len() + 1 {
            return false;
        }
        let removed: u32 = (0..self.h.vertex_count())
            .filter(|v| !covered.contains(v))
            .fold(0, |m, v| m | 1 << v);
        if self.h.components_in(mask, removed).len() != 1 {
            return false;
        }
        let mut degree = vec![0usize; self.h.vertex_count()];
        for e in bit_indices(mask) {
            let (u, v) = self.h.endpoints(e);
            degree[u] += 1;
            degree[v] += 1;
        }
        if covered.iter().any(|&v| degree[v] < 2) {
            return false;
        }
        !self.derived.balanced_cycles().any(|c| c.edges & !mask == 0)
    }

    fn is_unbalanced_pair(&self, mask: u32) -> bool {
        let inside: Vec<(u32, Vec<usize>)> = self
            .derived
            .unbalanced_cycles()
            .filter(|c| c.edges & !mask == 0)
            .map(|c| (c.edges, c.vertices(&self.h)))
            .collect();
        for (i, (m1, v1)) in inside.iter().enumerate() {
            for (m2, v2) in inside.iter().skip(i + 1) {
                if m1 | m2 == mask
                    && m1 & m2 == 0
                    && v1.iter().filter(|x| v2.contains(x)).count() <= 1
                {
                    return true;
                }
            }
        }
        false
    }

    /// Every circuit of the matroid matches one of the three shapes.
    pub fn check_circuit_shapes(&self) -> Result<(), InvariantViolation> {
        for &circuit in self.n.circuits() {
            if self.circuit_shape(circuit).is_none() {
                return Err(InvariantViolation {
                    check: "circuit-shapes",
                    detail: format!("circuit {{{}}} fits no shape", self.name_elements(circuit)),
                });
            }
        }
        Ok(())
    }

    /// A connected framework of a `k`-connected matroid is a
    /// `(k-1)`-vertex-connected graph (capped at `|V|-1`).
    pub fn check_connectivity_inheritance(&self) -> Result<(), InvariantViolation> {
        if !self.h.is_connected() {
            return Ok(());
        }
        let cap = self.h.vertex_count().saturating_sub(1);
        let target = match self.n.separation_report().tutte_connectivity {
            None => cap,
            Some(k) => cap.min(k.saturating_sub(1)),
        };
        if self.h.is_k_vertex_connected(target) {
            Ok(())
        } else {
            Err(InvariantViolation {
                check: "connectivity-inheritance",
                detail: format!("graph is not {target}-vertex-connected"),
            })
        }
    }

    /// Minimal balancing edge sets of a connected unbalanced framework are
    /// cocircuits.
    pub fn check_balancing_cocircuits(&self) -> Result<(), InvariantViolation> {
        if !self.h.is_connected() || self.derived.is_balanced() {
            return Ok(());
        }
        let cocircuits = self.n.cocircuits();
        for mask in self.derived.minimal_balancing_edge_sets() {
            let elements = self.element_mask(mask);
            if !cocircuits.contains(&elements) {
                return Err(InvariantViolation {
                    check: "balancing-cocircuits",
                    detail: format!(
                        "minimal balancing set {{{}}} is not a cocircuit",
                        self.name_elements(elements)
                    ),
                });
            }
        }
        Ok(())
    }

    /// In a connected framework of a 3-connected matroid with at least four
    /// elements, every vertex star is a union of cocircuits.
    pub fn check_star_cocircuit_unions(&self) -> Result<(), InvariantViolation> {
        if !self.blocking_preconditions() {
            return Ok(());
        }
        let cocircuits = self.n.cocircuits();
        for v in 0..self.h.vertex_count() {
            let star = self.element_mask(self.star_star(v));
            for x in bit_indices(star) {
                let covered = cocircuits
                    .iter()
                    .any(|&c| c & !star == 0 && c & (1 << x) != 0);
                if !covered {
                    return Err(InvariantViolation {
                        check: "star-cocircuit-unions",
                        detail: format!(
                            "element {} of the star of vertex {v} lies in no cocircuit inside it",
                            self.n.element_names()[x]
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// In the same setting, a vertex blocks exactly when its star is not
    /// itself a cocircuit.
    pub fn check_blocking_star_criterion(&self) -> Result<(), InvariantViolation> {
        if !self.blocking_preconditions() {
            return Ok(());
        }
        let blocking = self.framework_blocking_vertices();
        let cocircuits = self.n.cocircuits();
        for v in 0..self.h.vertex_count() {
            let star = self.element_mask(self.star_star(v));
            let is_cocircuit = cocircuits.contains(&star);
            let blocks = blocking.contains(&v);
            if blocks == is_cocircuit {
                return Err(InvariantViolation {
                    check: "blocking-star",
                    detail: format!(
                        "vertex {v}: blocking={blocks} but star-is-cocircuit={is_cocircuit}"
                    ),
                });
            }
        }
        Ok(())
    }

    fn blocking_preconditions(&self) -> bool {
        self.h.is_connected() && self.n.ground_size() >= 4 && self.n.is_k_connected(3)
    }

    /// When deleting an edge keeps the graph connected and unbalanced, that
    /// edge lies on a circuit.
    pub fn check_deleted_edge_circuits(&self) -> Result<(), InvariantViolation> {
        for e in 0..self.h.edge_count() {
            let bit = 1u32 << e;
            let rest = self.h.full_edge_mask() & !bit;
            let connected = self.h.components_in(rest, 0).len() == 1;
            let unbalanced = self.derived.unbalanced_cycles().any(|c| c.edges & bit == 0);
            if !(connected && unbalanced) {
                continue;
            }
            let element = 1u32 << self.perm[e];
            if !self.n.circuits().iter().any(|&c| c & element != 0) {
                return Err(InvariantViolation {
                    check: "deleted-edge-circuits",
                    detail: format!("edge {} lies on no circuit", self.h.label(e)),
                });
            }
        }
        Ok(())
    }

    /// Unions of two unbalanced cycles meeting in at most one vertex are
    /// circuits: directly when they share a vertex, and through every
    /// minimal connecting path when they are vertex-disjoint.
    pub fn check_unbalanced_pair_circuits(&self) -> Result<(), InvariantViolation> {
        let cycles: Vec<(u32, Vec<usize>)> = self
            .derived
            .unbalanced_cycles()
            .map(|c| (c.edges, c.vertices(&self.h)))
            .collect();
        for (i, (m1, v1)) in cycles.iter().enumerate() {
            for (m2, v2) in cycles.iter().skip(i + 1) {
                if m1 & m2 != 0 {
                    continue;
                }
                let shared = v1.iter().filter(|x| v2.contains(x)).count();
                let union = self.element_mask(m1 | m2);
                match shared {
                    1 => {
                        if !self.n.is_circuit(union) {
                            return Err(self.pair_violation(union));
                        }
                    }
                    0 => {
                        if self.n.is_circuit(union) {
                            continue;
                        }
                        for path in self.minimal_linking_paths(v1, v2) {
                            let with_path = self.element_mask(m1 | m2 | path);
                            if !self.n.is_circuit(with_path) {
                                return Err(self.pair_violation(with_path));
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    fn pair_violation(&self, elements: u32) -> InvariantViolation {
        InvariantViolation {
            check: "unbalanced-pair-circuits",
            detail: format!(
                "cycle-pair union {{{}}} is not a circuit",
                self.name_elements(elements)
            ),
        }
    }

    /// All simple paths from one vertex set to the other whose interior
    /// avoids both, as edge masks.
    fn minimal_linking_paths(&self, from: &[usize], to: &[usize]) -> Vec<u32> {
        let mut paths = Vec::new();
        for &start in from {
            let mut visited = vec![false; self.h.vertex_count()];
            visited[start] = true;
            self.extend_path(start, 0, &mut visited, from, to, &mut paths);
        }
        paths.sort_unstable();
        paths.dedup();
        paths
    }

    fn extend_path(
        &self,
        at: usize,
        edges: u32,
        visited: &mut Vec<bool>,
        from: &[usize],
        to: &[usize],
        out: &mut Vec<u32>,
    ) {
        for e in bit_indices(self.h.star_mask(at) & !self.h.loop_mask()) {
            if edges & (1 << e) != 0 {
                continue;
            }
            let (a, b) = self.h.endpoints(e);
            let next = if a == at { b } else { a };
            if to.contains(&next) {
                out.push(edges | 1 << e);
                continue;
            }
            if visited[next] || from.contains(&next) {
                continue;
            }
            visited[next] = true;
            self.extend_path(next, edges | 1 << e, visited, from, to, out);
            visited[next] = false;
        }
    }

    /// A 3-connected matroid with at least four elements and no isolated
    /// vertices forces a connected graph, or a lift split into one ordinary
    /// component plus one single-vertex component carrying loops.
    pub fn check_component_shape(&self) -> Result<(), InvariantViolation> {
        if self.n.ground_size() < 4 || !self.n.is_k_connected(3) {
            return Ok(());
        }
        if (0..self.h.vertex_count()).any(|v| self.h.degree(v) == 0) {
            return Ok(());
        }
        let comps = self.h.components();
        if comps.len() == 1 {
            return Ok(());
        }
        let allowed = self.representation.is_lift
            && comps.len() == 2
            && comps.iter().any(|c| c.vertices.len() == 1 && c.edge_mask != 0);
        if allowed {
            Ok(())
        } else {
            Err(InvariantViolation {
                check: "component-shape",
                detail: format!("{} components without the lifted loop shape", comps.len()),
            })
        }
    }

    /// Minimal balancing edge sets have rank at least the matroid
    /// connectivity (capped at the vertex count).
    pub fn check_balancing_rank(&self) -> Result<(), InvariantViolation> {
        if !self.h.is_connected() || self.derived.is_balanced() {
            return Ok(());
        }
        let cap = self.h.vertex_count();
        let k = match self.n.separation_report().tutte_connectivity {
            None => cap,
            Some(t) => cap.min(t),
        };
        for mask in self.derived.minimal_balancing_edge_sets() {
            let rank = self.n.rank_of(self.element_mask(mask));
            if rank < k {
                return Err(InvariantViolation {
                    check: "balancing-rank",
                    detail: format!(
                        "balancing set {{{}}} has rank {rank} < {k}",
                        self.name_elements(self.element_mask(mask))
                    ),
                });
            }
        }
        Ok(())
    }

    /// For vertex-disjoint balancing sets whose joint removal leaves the
    /// graph connected, their edges plus the edges spanned by their vertices
    /// already balance the graph.
    pub fn check_balancing_union(&self, max_size: usize) -> Result<(), InvariantViolation> {
        let sets = self.minimal_balancing_sets_mixed(max_size);
        for (i, x1) in sets.iter().enumerate() {
            for x2 in sets.iter().skip(i + 1) {
                if x1.vertices.iter().any(|v| x2.vertices.contains(v)) {
                    continue;
                }
                let vunion: Vec<usize> =
                    x1.vertices.iter().chain(&x2.vertices).copied().collect();
                let vmask: u32 = vunion.iter().fold(0, |m, &v| m | 1 << v);
                let stars: u32 =
                    vunion.iter().fold(0, |m, &v| m | self.h.star_mask(v));
                let remaining = self.h.full_edge_mask() & !x1.edges & !x2.edges & !stars;
                if self.h.components_in(remaining, vmask).len() != 1 {
                    continue;
                }
                let spanned: u32 = (0..self.h.edge_count())
                    .filter(|&e| {
                        let (u, v) = self.h.endpoints(e);
                        vunion.contains(&u) && vunion.contains(&v)
                    })
                    .fold(0, |m, e| m | 1 << e);
                let combined = x1.edges | x2.edges | spanned;
                if !self.derived.is_balancing_edge_set(combined) {
                    return Err(InvariantViolation {
                        check: "balancing-union",
                        detail: format!(
                            "edge sets of {:?}+{:?} with their spanned edges do not balance",
                            x1.vertices, x2.vertices
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// If removing one edge balances the graph while some balanced cycle
    /// uses that edge, the graph was balanced to begin with.
    pub fn check_balance_restoration(&self) -> Result<(), InvariantViolation> {
        let full = self.h.full_edge_mask();
        for e in 0..self.h.edge_count() {
            let bit = 1u32 << e;
            let rest_balanced = self.derived.is_balanced_subgraph(full & !bit);
            let on_balanced = self.derived.balanced_cycles().any(|c| c.edges & bit != 0);
            if rest_balanced && on_balanced && !self.derived.is_balanced() {
                return Err(InvariantViolation {
                    check: "balance-restoration",
                    detail: format!(
                        "edge {} balances the rest yet lies on a balanced cycle",
                        self.h.label(e)
                    ),
                });
            }
        }
        Ok(())
    }

    /// A vertex fixed after deleting an edge from both the graph and the
    /// matroid stays fixed in the full framework.
    pub fn check_fixed_persistence(&self) -> Result<(), InvariantViolation> {
        if !self.h.is_connected() || !self.n.is_k_connected(3) {
            return Ok(());
        }
        for e in 0..self.h.edge_count() {
            let mut g = Multigraph::new(self.h.vertex_count());
            for f in 0..self.h.edge_count() {
                if f != e {
                    let (u, v) = self.h.endpoints(f);
                    g.add_edge(self.h.label(f), u, v).expect("copying edges");
                }
            }
            let sub_n = self.n.delete(1 << self.perm[e]);
            let Ok(sub) = analyze(g, sub_n) else { continue };
            if !sub.h.is_connected() || !sub.n.is_k_connected(3) {
                continue;
            }
            for v in 0..self.h.vertex_count() {
                if !matches!(sub.is_fixed(v), Ok(true)) {
                    continue;
                }
                match self.is_fixed(v) {
                    Ok(true) | Err(_) => {}
                    Ok(false) => {
                        return Err(InvariantViolation {
                            check: "fixed-persistence",
                            detail: format!(
                                "vertex {v} is fixed without edge {} but not with it",
                                self.h.label(e)
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Runs the standard invariant suite; an empty result is a clean pass.
    pub fn invariant_violations(&self) -> Vec<InvariantViolation> {
        [
            self.check_circuit_shapes(),
            self.check_connectivity_inheritance(),
            self.check_balancing_cocircuits(),
            self.check_star_cocircuit_unions(),
            self.check_blocking_star_criterion(),
        ]
        .into_iter()
        .filter_map(Result::err)
        .collect()
    }

    fn name_elements(&self, mask: u32) -> String {
        bit_indices(mask)
            .map(|e| self.n.element_names()[e].as_str())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn blocks_without(cycles: &[Vec<usize>], v: usize, deleted: usize) -> bool {
    let mut any = false;
    for vs in cycles.iter().filter(|vs| !vs.contains(&deleted)) {
        if !vs.contains(&v) {
            return false;
        }
        any = true;
    }
    any
}
