//! Balancing sets and vertex covers of the unbalanced cycles.

use super::BiasedGraph;
use crate::matroid::bit_indices;

impl BiasedGraph {
    /// Whether deleting this edge set leaves a balanced graph, i.e. every
    /// unbalanced cycle loses at least one edge.
    pub fn is_balancing_edge_set(&self, mask: u32) -> bool {
        self.unbalanced_cycles().all(|c| c.edges & mask != 0)
    }

    /// All inclusion-minimal balancing edge sets.
    pub fn minimal_balancing_edge_sets(&self) -> Vec<u32> {
        let full = self.graph().full_edge_mask();
        let mut out = Vec::new();
        for mask in 0u32..=full {
            if !self.is_balancing_edge_set(mask) {
                continue;
            }
            let minimal = bit_indices(mask).all(|e| !self.is_balancing_edge_set(mask & !(1u32 << e)));
            if minimal {
                out.push(mask);
            }
        }
        out.sort_unstable_by_key(|m| (m.count_ones(), *m));
        out
    }

    /// Whether every unbalanced cycle passes through one of the vertices.
    pub fn vertices_cover_unbalanced_cycles(&self, vertices: &[usize]) -> bool {
        self.unbalanced_cycles().all(|c| {
            let cycle_vertices = c.vertices(self.graph());
            vertices.iter().any(|v| cycle_vertices.contains(v))
        })
    }

    /// Whether deleting the vertex leaves a balanced graph.
    pub fn is_balancing_vertex(&self, v: usize) -> bool {
        self.vertices_cover_unbalanced_cycles(&[v])
    }
}
