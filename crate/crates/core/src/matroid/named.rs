//! Stock matroids: uniform ones, cycle matroids of graphs, and the handful
//! of named matroids the graphicness test needs.

use super::{bit_indices, Matroid, MatroidError, MAX_ELEMENTS};
use crate::graph::Multigraph;

impl Matroid {
    /// The uniform matroid of the given rank on `n` elements `e1..en`;
    /// circuits are the `(rank+1)`-subsets.
    pub fn uniform(rank: usize, n: usize) -> Matroid {
        assert!(n <= MAX_ELEMENTS, "uniform matroid too large");
        assert!(rank <= n, "rank exceeds ground set");
        let elements = standard_names(n);
        let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
        let circuits = (0..=full)
            .filter(|m| m.count_ones() as usize == rank + 1)
            .collect();
        Matroid::from_circuits_unchecked(elements, circuits)
    }

    /// The cycle matroid of a graph: elements are the edge labels, circuits
    /// are the edge sets of cycles.
    pub fn from_graph(g: &Multigraph) -> Result<Matroid, MatroidError> {
        if g.edge_count() > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(g.edge_count()));
        }
        let elements: Vec<String> = g.labels().map(|s| s.to_string()).collect();
        let circuits = g.all_cycles().iter().map(|c| c.edges).collect();
        Matroid::from_circuits(elements, circuits)
    }

    /// Builds a matroid from an independence predicate by a full subset
    /// scan; circuits are the minimal dependent sets.
    pub fn from_independence<F: Fn(u32) -> bool>(n: usize, independent: F) -> Matroid {
        assert!(n <= MAX_ELEMENTS);
        let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
        let mut circuits = Vec::new();
        for mask in 1u32..=full {
            if independent(mask) {
                continue;
            }
            let minimal = bit_indices(mask).all(|e| independent(mask & !(1u32 << e)));
            if minimal {
                circuits.push(mask);
            }
        }
        Matroid::from_circuits_unchecked(standard_names(n), circuits)
    }

    /// The Fano plane: rank 3 on seven points whose lines are the triples
    /// `{i, i+1, i+3}` modulo 7.
    pub fn fano() -> Matroid {
        let lines: Vec<u32> = (0u32..7)
            .map(|i| (1 << i) | (1 << ((i + 1) % 7)) | (1 << ((i + 3) % 7)))
            .collect();
        Matroid::from_independence(7, |mask| {
            let k = mask.count_ones();
            k <= 2 || (k == 3 && !lines.contains(&mask))
        })
    }

    pub fn fano_dual() -> Matroid {
        Matroid::fano().dual()
    }

    /// The dual of the cycle matroid of the complete graph on five vertices.
    pub fn k5_bond() -> Matroid {
        Matroid::from_graph(&Multigraph::complete(5)).expect("K5 fits").dual()
    }

    /// The dual of the cycle matroid of the complete bipartite graph K_{3,3}.
    pub fn k33_bond() -> Matroid {
        Matroid::from_graph(&Multigraph::complete_bipartite(3, 3)).expect("K33 fits").dual()
    }
}

fn standard_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_has_the_expected_circuit_spectrum() {
        let f7 = Matroid::fano();
        assert_eq!(f7.rank(), 3);
        assert_eq!(f7.ground_size(), 7);
        let threes = f7.circuits().iter().filter(|c| c.count_ones() == 3).count();
        let fours = f7.circuits().iter().filter(|c| c.count_ones() == 4).count();
        assert_eq!(threes, 7); // the lines
        assert_eq!(fours, 7); // complements of lines
        assert_eq!(f7.circuits().len(), 14);
    }

    #[test]
    fn fano_dual_parameters() {
        let dual = Matroid::fano_dual();
        assert_eq!(dual.rank(), 4);
        assert_eq!(dual.ground_size(), 7);
        assert_eq!(dual.dual(), Matroid::fano());
    }

    #[test]
    fn bond_matroids_of_small_complete_graphs() {
        let k5 = Matroid::k5_bond();
        assert_eq!(k5.ground_size(), 10);
        assert_eq!(k5.rank(), 6);
        // its circuits are the minimal edge cuts of K5: five stars and ten
        // 6-edge cuts splitting the vertices 2-3
        assert_eq!(k5.circuits().iter().filter(|c| c.count_ones() == 4).count(), 5);
        assert_eq!(k5.circuits().iter().filter(|c| c.count_ones() == 6).count(), 10);

        let k33 = Matroid::k33_bond();
        assert_eq!(k33.ground_size(), 9);
        assert_eq!(k33.rank(), 4);
    }

    #[test]
    fn from_independence_matches_direct_uniform_construction() {
        let direct = Matroid::uniform(2, 5);
        let scanned = Matroid::from_independence(5, |m| m.count_ones() <= 2);
        assert_eq!(direct, scanned);
    }

    #[test]
    fn graph_matroid_of_forest_has_no_circuits() {
        let path = Multigraph::path(5);
        let m = Matroid::from_graph(&path).unwrap();
        assert_eq!(m.rank(), 5);
        assert!(m.circuits().is_empty());
    }
}
