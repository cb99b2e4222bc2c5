//! Matroids presented by their circuit lists.
//!
//! Ground sets stay small (at most 20 elements), so element subsets are `u32`
//! bitmasks throughout and ranks come from the greedy algorithm.  Everything
//! else (closure, duals, minors, connectivity) is derived from circuits and
//! the rank function rather than from any particular representation.

mod connectivity;
mod iso;
mod minors;
mod named;

pub use connectivity::{Separation, SeparationReport};

use std::fmt;
use thiserror::Error;

/// Hard cap on ground set size so subsets fit comfortably in `u32` and the
/// subset scans stay feasible.
pub const MAX_ELEMENTS: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set has {0} elements, limit is {MAX_ELEMENTS}")]
    TooManyElements(usize),
    #[error("duplicate element name {0:?}")]
    DuplicateElement(String),
    #[error("unknown element name {0:?}")]
    UnknownElement(String),
    #[error("the empty set cannot be a circuit")]
    EmptyCircuit,
    #[error("circuit {inner} is contained in circuit {outer}")]
    NestedCircuits { inner: String, outer: String },
    #[error("circuit elimination fails for {a} and {b} at element {element:?}")]
    EliminationFailure { a: String, b: String, element: String },
    #[error("graphicness test supports at most {limit} elements, got {size}")]
    TooLargeForGraphicTest { size: usize, limit: usize },
}

/// A matroid with named elements, presented by its full circuit list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    elements: Vec<String>,
    circuits: Vec<u32>,
    rank: usize,
}

impl Matroid {
    /// Builds a matroid after checking the circuit axioms: no empty circuit,
    /// circuits form an antichain, and weak elimination holds.
    pub fn from_circuits<S: Into<String>>(
        elements: Vec<S>,
        circuits: Vec<u32>,
    ) -> Result<Matroid, MatroidError> {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.len() > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(elements.len()));
        }
        for (i, name) in elements.iter().enumerate() {
            if elements[..i].contains(name) {
                return Err(MatroidError::DuplicateElement(name.clone()));
            }
        }
        let full: u32 = if elements.is_empty() { 0 } else { (1u32 << elements.len()) - 1 };
        let mut circuits = circuits;
        circuits.sort_unstable_by_key(|c| (c.count_ones(), *c));
        circuits.dedup();
        let render = |mask: u32| render_mask(&elements, mask);
        for &c in &circuits {
            if c == 0 {
                return Err(MatroidError::EmptyCircuit);
            }
            assert_eq!(c & !full, 0, "circuit uses out-of-range elements");
        }
        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                if a != b && a & b == a {
                    return Err(MatroidError::NestedCircuits { inner: render(a), outer: render(b) });
                }
                if a != b && a & b == b {
                    return Err(MatroidError::NestedCircuits { inner: render(b), outer: render(a) });
                }
            }
        }
        for (i, &a) in circuits.iter().enumerate() {
            for &b in circuits[i + 1..].iter() {
                let common = a & b;
                if common == 0 {
                    continue;
                }
                for e in bit_indices(common) {
                    let union_minus = (a | b) & !(1u32 << e);
                    if !circuits.iter().any(|&c| c & union_minus == c) {
                        return Err(MatroidError::EliminationFailure {
                            a: render(a),
                            b: render(b),
                            element: elements[e].clone(),
                        });
                    }
                }
            }
        }
        Ok(Self::from_circuits_unchecked(elements, circuits))
    }

    /// For circuit lists already known to satisfy the axioms (duals, minors
    /// of validated matroids).  Debug builds re-check.
    pub(crate) fn from_circuits_unchecked(elements: Vec<String>, mut circuits: Vec<u32>) -> Matroid {
        circuits.sort_unstable_by_key(|c| (c.count_ones(), *c));
        circuits.dedup();
        let mut m = Matroid { elements, circuits, rank: 0 };
        m.rank = m.rank_of(m.full_mask());
        m
    }

    pub fn ground_size(&self) -> usize {
        self.elements.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn full_mask(&self) -> u32 {
        if self.elements.is_empty() {
            0
        } else {
            (1u32 << self.elements.len()) - 1
        }
    }

    /// Bitmask of the named elements.
    pub fn mask_of(&self, names: &[&str]) -> Result<u32, MatroidError> {
        let mut mask = 0;
        for name in names {
            let i = self
                .element_index(name)
                .ok_or_else(|| MatroidError::UnknownElement((*name).to_string()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn render_set(&self, mask: u32) -> String {
        render_mask(&self.elements, mask)
    }

    pub fn circuits(&self) -> &[u32] {
        &self.circuits
    }

    pub fn is_circuit(&self, mask: u32) -> bool {
        self.circuits.binary_search_by_key(&(mask.count_ones(), mask), |c| (c.count_ones(), *c)).is_ok()
    }

    pub fn is_independent(&self, mask: u32) -> bool {
        self.circuits.iter().all(|&c| c & mask != c)
    }

    pub fn is_dependent(&self, mask: u32) -> bool {
        !self.is_independent(mask)
    }

    /// Greedy rank: grow an independent subset of `mask` element by element.
    pub fn rank_of(&self, mask: u32) -> usize {
        let mut indep = 0u32;
        for e in bit_indices(mask) {
            let candidate = indep | 1 << e;
            if self.is_independent(candidate) {
                indep = candidate;
            }
        }
        indep.count_ones() as usize
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank_of(&self, mask: u32) -> usize {
        mask.count_ones() as usize + self.rank_of(self.full_mask() & !mask) - self.rank
    }

    pub fn closure(&self, mask: u32) -> u32 {
        let r = self.rank_of(mask);
        let mut cl = mask;
        for e in bit_indices(self.full_mask() & !mask) {
            if self.rank_of(mask | 1 << e) == r {
                cl |= 1 << e;
            }
        }
        cl
    }

    pub fn is_flat(&self, mask: u32) -> bool {
        self.closure(mask) == mask
    }

    /// Elements that lie in every basis of the restriction to `mask`.
    pub fn coloops_within(&self, mask: u32) -> u32 {
        let r = self.rank_of(mask);
        bit_indices(mask)
            .filter(|&e| self.rank_of(mask & !(1u32 << e)) < r)
            .fold(0, |m, e| m | 1 << e)
    }

    /// All hyperplanes (flats of rank one less than the matroid).
    pub fn hyperplanes(&self) -> Vec<u32> {
        if self.rank == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut stack = vec![(0u32, 0usize)];
        // closures of independent sets of size rank-1 cover all hyperplanes
        while let Some((set, next)) = stack.pop() {
            if set.count_ones() as usize == self.rank - 1 {
                out.push(self.closure(set));
                continue;
            }
            for e in next..self.ground_size() {
                let candidate = set | 1 << e;
                if self.is_independent(candidate) {
                    stack.push((candidate, e + 1));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn cocircuits(&self) -> Vec<u32> {
        let full = self.full_mask();
        let mut out: Vec<u32> = self.hyperplanes().iter().map(|h| full & !h).collect();
        out.sort_unstable_by_key(|c| (c.count_ones(), *c));
        out
    }

    pub fn is_cocircuit(&self, mask: u32) -> bool {
        if mask == 0 || self.rank == 0 {
            return false;
        }
        let complement = self.full_mask() & !mask;
        self.rank_of(complement) == self.rank - 1 && self.is_flat(complement)
    }

    /// A set is a union of cocircuits exactly when its complement is a flat;
    /// the empty set counts (an empty union).
    pub fn is_union_of_cocircuits(&self, mask: u32) -> bool {
        self.is_flat(self.full_mask() & !mask)
    }

    pub fn dual(&self) -> Matroid {
        Matroid::from_circuits_unchecked(self.elements.clone(), self.cocircuits())
    }

    /// Deletes the masked elements, keeping the others' names.
    pub fn delete(&self, mask: u32) -> Matroid {
        let keep: Vec<usize> = bit_indices(self.full_mask() & !mask).collect();
        let elements: Vec<String> = keep.iter().map(|&e| self.elements[e].clone()).collect();
        let circuits = self
            .circuits
            .iter()
            .filter(|&&c| c & mask == 0)
            .map(|&c| remap_mask(c, &keep))
            .collect();
        Matroid::from_circuits_unchecked(elements, circuits)
    }

    /// Contracts the masked elements: circuits of the result are the minimal
    /// nonempty sets `C - mask` over circuits `C`.
    pub fn contract(&self, mask: u32) -> Matroid {
        let keep: Vec<usize> = bit_indices(self.full_mask() & !mask).collect();
        let elements: Vec<String> = keep.iter().map(|&e| self.elements[e].clone()).collect();
        let mut reduced: Vec<u32> = self
            .circuits
            .iter()
            .map(|&c| c & !mask)
            .filter(|&c| c != 0)
            .collect();
        reduced.sort_unstable_by_key(|c| c.count_ones());
        let mut minimal: Vec<u32> = Vec::new();
        for c in reduced {
            if minimal.iter().all(|&m| m & c != m) {
                minimal.push(c);
            }
        }
        let circuits = minimal.into_iter().map(|c| remap_mask(c, &keep)).collect();
        Matroid::from_circuits_unchecked(elements, circuits)
    }

    pub fn restrict(&self, mask: u32) -> Matroid {
        self.delete(self.full_mask() & !mask)
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matroid on {} elements, rank {}, {} circuits",
            self.ground_size(),
            self.rank,
            self.circuits.len()
        )
    }
}

/// Indices of the set bits, ascending.
pub(crate) fn bit_indices(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask & (1 << i) != 0)
}

/// Rewrites a mask over the original indices into one over `keep` positions.
fn remap_mask(mask: u32, keep: &[usize]) -> u32 {
    keep.iter()
        .enumerate()
        .filter(|(_, &old)| mask & (1 << old) != 0)
        .fold(0, |m, (new, _)| m | 1 << new)
}

fn render_mask(elements: &[String], mask: u32) -> String {
    let names: Vec<&str> = bit_indices(mask).map(|e| elements[e].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    #[test]
    fn uniform_basics() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(u24.rank(), 2);
        assert_eq!(u24.circuits().len(), 4); // the four 3-subsets
        assert!(u24.is_independent(u24.mask_of(&["e1", "e3"]).unwrap()));
        assert!(u24.is_dependent(0b0111));
        assert_eq!(u24.rank_of(0b0111), 2);
        assert_eq!(u24.closure(0b0011), u24.full_mask());
        assert_eq!(u24.closure(0b0001), 0b0001);

        let u36 = Matroid::uniform(3, 6);
        assert_eq!(u36.rank(), 3);
        assert_eq!(u36.circuits().len(), 15);
        assert!(u36.circuits().iter().all(|c| c.count_ones() == 4));
        assert_eq!(u36.closure(0b000011), 0b000011);
    }

    #[test]
    fn free_and_rank_zero_edge_cases() {
        let free = Matroid::from_circuits::<&str>(vec!["a", "b"], vec![]).unwrap();
        assert_eq!(free.rank(), 2);
        assert!(free.cocircuits().iter().eq([&0b01u32, &0b10].into_iter()));

        let loops = Matroid::from_circuits(vec!["a", "b"], vec![0b01, 0b10]).unwrap();
        assert_eq!(loops.rank(), 0);
        assert!(loops.cocircuits().is_empty());
        assert!(!loops.is_cocircuit(0b01));
        assert!(loops.is_union_of_cocircuits(0)); // complement E is a flat
    }

    #[test]
    fn validation_rejects_bad_circuit_families() {
        let nested = Matroid::from_circuits(vec!["a", "b", "c"], vec![0b011, 0b111]);
        assert!(matches!(nested, Err(MatroidError::NestedCircuits { .. })));

        let no_elimination = Matroid::from_circuits(vec!["a", "b", "c", "d"], vec![0b0111, 0b1011]);
        assert!(matches!(no_elimination, Err(MatroidError::EliminationFailure { .. })));

        let empty = Matroid::from_circuits(vec!["a"], vec![0]);
        assert_eq!(empty, Err(MatroidError::EmptyCircuit));

        let dup = Matroid::from_circuits(vec!["a", "a"], vec![]);
        assert!(matches!(dup, Err(MatroidError::DuplicateElement(_))));
    }

    #[test]
    fn graphic_k4_ranks_and_closures() {
        let k4 = Matroid::from_graph(&Multigraph::complete(4)).unwrap();
        assert_eq!(k4.rank(), 3);
        assert_eq!(k4.circuits().len(), 7);
        // a triangle is closed; a spanning tree spans
        let triangle = k4.mask_of(&["e1", "e2", "e4"]).unwrap();
        assert!(k4.is_circuit(triangle));
        assert_eq!(k4.closure(triangle), triangle);
        let tree = k4.mask_of(&["e1", "e2", "e3"]).unwrap();
        assert_eq!(k4.closure(tree), k4.full_mask());
        assert_eq!(k4.rank_of(triangle), 2);
    }

    #[test]
    fn hyperplanes_and_cocircuits_of_small_matroids() {
        let u36 = Matroid::uniform(3, 6);
        let hyperplanes = u36.hyperplanes();
        assert_eq!(hyperplanes.len(), 15);
        assert!(hyperplanes.iter().all(|h| h.count_ones() == 2));
        let cocircuits = u36.cocircuits();
        assert_eq!(cocircuits.len(), 15);
        assert!(cocircuits.iter().all(|c| c.count_ones() == 4));
        assert!(u36.is_cocircuit(0b001111));
        assert!(!u36.is_cocircuit(0b000111));
        assert!(u36.is_union_of_cocircuits(0b011111));

        // graphic K4: four vertex stars and three balanced 4-edge cuts
        let k4 = Matroid::from_graph(&Multigraph::complete(4)).unwrap();
        let cocircuits = k4.cocircuits();
        assert_eq!(cocircuits.len(), 7);
        assert_eq!(cocircuits.iter().filter(|c| c.count_ones() == 3).count(), 4);
        assert_eq!(cocircuits.iter().filter(|c| c.count_ones() == 4).count(), 3);
        let g = Multigraph::complete(4);
        for v in 0..4 {
            assert!(k4.is_cocircuit(g.star_mask(v)));
        }
    }

    #[test]
    fn duality_involutes_and_swaps_uniform_parameters() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(u24.dual(), u24);

        let u25 = Matroid::uniform(2, 5);
        assert_eq!(u25.dual(), Matroid::uniform(3, 5));
        assert_eq!(u25.dual().dual(), u25);

        let k4 = Matroid::from_graph(&Multigraph::complete(4)).unwrap();
        assert_eq!(k4.dual().dual(), k4);
        assert_eq!(k4.dual().rank(), 3);
    }

    #[test]
    fn minors_of_graphic_matroids_match_graph_operations() {
        let k4 = Matroid::from_graph(&Multigraph::complete(4)).unwrap();
        // deleting one edge of K4 leaves a 4-cycle with a chord
        let e1 = k4.mask_of(&["e1"]).unwrap();
        let deleted = k4.delete(e1);
        assert_eq!(deleted.ground_size(), 5);
        assert_eq!(deleted.rank(), 3);
        assert_eq!(deleted.circuits().len(), 3);

        // contracting one edge doubles up two vertex pairs
        let contracted = k4.contract(e1);
        assert_eq!(contracted.rank(), 2);
        let mut merged = Multigraph::new(3);
        // vertices 0 and 1 of K4 become vertex 0 here
        merged.add_edge("e2", 0, 1).unwrap(); // was 0-2
        merged.add_edge("e3", 0, 2).unwrap(); // was 0-3
        merged.add_edge("e4", 0, 1).unwrap(); // was 1-2
        merged.add_edge("e5", 0, 2).unwrap(); // was 1-3
        merged.add_edge("e6", 1, 2).unwrap();
        let expected = Matroid::from_graph(&merged).unwrap();
        assert_eq!(contracted, expected);
        assert_eq!(contracted.circuits().len(), 6);

        // a loop created by contraction becomes a one-element circuit
        let triangle_minus_edge = k4.contract(k4.mask_of(&["e1", "e2"]).unwrap());
        assert!(triangle_minus_edge.circuits().iter().any(|c| c.count_ones() == 1));
    }

    #[test]
    fn corank_tracks_dual_rank() {
        let u36 = Matroid::uniform(3, 6);
        let dual = u36.dual();
        for mask in 0..=u36.full_mask() {
            assert_eq!(u36.corank_of(mask), dual.rank_of(mask));
        }
    }

    #[test]
    fn restriction_keeps_names() {
        let u36 = Matroid::uniform(3, 6);
        let sub = u36.restrict(u36.mask_of(&["e2", "e4", "e5", "e6"]).unwrap());
        assert_eq!(sub.element_names(), &["e2", "e4", "e5", "e6"]);
        assert_eq!(sub.circuits(), Matroid::uniform(3, 4).circuits());
        assert_eq!(sub.rank(), 3);
    }
}
