//! The frame and lift matroids of a biased graph.
//!
//! Both are defined here through their independent sets and materialized by
//! a subset scan, which keeps the definitions readable and is plenty fast
//! for 20-edge graphs:
//!
//! * frame: each component of the subgraph holds at most one cycle, and a
//!   component whose edge and vertex counts tie carries an unbalanced cycle;
//! * lift: the whole subgraph holds at most one cycle, and that cycle is
//!   unbalanced.

use super::BiasedGraph;
use crate::matroid::{Matroid, MatroidError};

impl BiasedGraph {
    pub fn frame_matroid(&self) -> Result<Matroid, MatroidError> {
        self.matroid_from(|bg, mask| bg.frame_independent(mask))
    }

    pub fn lift_matroid(&self) -> Result<Matroid, MatroidError> {
        self.matroid_from(|bg, mask| bg.lift_independent(mask))
    }

    /// An edge set is independent in the frame matroid when every component
    /// it spans is a tree or carries exactly one cycle, unbalanced.
    pub fn frame_independent(&self, mask: u32) -> bool {
        for comp in self.graph().components_in(mask, 0) {
            let edges = comp.edge_mask.count_ones() as usize;
            if edges > comp.vertices.len() {
                return false;
            }
            if edges == comp.vertices.len() && !self.component_cycle_is_unbalanced(comp.edge_mask) {
                return false;
            }
        }
        true
    }

    /// An edge set is independent in the lift matroid when it has at most
    /// one cycle in total, and that cycle is unbalanced.
    pub fn lift_independent(&self, mask: u32) -> bool {
        let comps = self.graph().components_in(mask, 0);
        let covered: usize = comps
            .iter()
            .filter(|c| c.edge_mask != 0)
            .map(|c| c.vertices.len())
            .sum();
        let nonempty = comps.iter().filter(|c| c.edge_mask != 0).count();
        let edges = mask.count_ones() as usize;
        let cyclomatic = (edges + nonempty).saturating_sub(covered);
        match cyclomatic {
            0 => true,
            1 => self
                .cycles()
                .iter()
                .find(|c| c.edges & mask == c.edges)
                .map(|c| self.is_balanced_cycle(c.edges) == Some(false))
                .unwrap_or(false),
            _ => false,
        }
    }

    fn component_cycle_is_unbalanced(&self, comp_mask: u32) -> bool {
        // a connected subgraph with as many edges as vertices has a unique
        // cycle
        self.cycles()
            .iter()
            .find(|c| c.edges & comp_mask == c.edges)
            .map(|c| self.is_balanced_cycle(c.edges) == Some(false))
            .unwrap_or(false)
    }

    fn matroid_from<F: Fn(&BiasedGraph, u32) -> bool>(
        &self,
        independent: F,
    ) -> Result<Matroid, MatroidError> {
        let g = self.graph();
        let elements: Vec<String> = g.labels().map(|l| l.to_string()).collect();
        let full = g.full_edge_mask();
        let mut circuits = Vec::new();
        for mask in 1u32..=full {
            if independent(self, mask) {
                continue;
            }
            let minimal = (0..g.edge_count())
                .filter(|&e| mask & (1 << e) != 0)
                .all(|e| independent(self, mask & !(1u32 << e)));
            if minimal {
                circuits.push(mask);
            }
        }
        Matroid::from_circuits(elements, circuits)
    }
}
