//! Blocking vertices and the vertex-split construction.
//!
//! A blocking vertex lies on every unbalanced cycle.  Around such a vertex
//! the non-loop star edges fall into a canonical partition: two edges are
//! equivalent when every cycle through both is balanced.  When that
//! partition has exactly two classes and the bias comes from a signature,
//! splitting the vertex along the partition turns the lift matroid into the
//! cycle matroid of an ordinary graph.

use super::{BiasError, BiasedGraph};
use crate::graph::Multigraph;

impl BiasedGraph {
    /// Vertices on every unbalanced cycle, empty for balanced graphs.
    pub fn blocking_vertices(&self) -> Vec<usize> {
        if self.is_balanced() {
            return Vec::new();
        }
        (0..self.graph.vertex_count())
            .filter(|&v| {
                self.unbalanced_cycles().all(|c| self.graph.vertices_of(c.edges).contains(&v))
            })
            .collect()
    }

    /// The standard partition of the non-loop edges at a blocking vertex
    /// `v`: classes of the relation "every cycle containing both edges is
    /// balanced".  Classes hold edge indices, ordered by smallest member.
    ///
    /// Requires `v` to be a blocking vertex and the graph minus `v` to be
    /// connected; under those hypotheses the relation is an equivalence
    /// relation, which is re-checked here.
    pub fn standard_partition(&self, v: usize) -> Result<Vec<Vec<usize>>, BiasError> {
        if !self.blocking_vertices().contains(&v) {
            return Err(BiasError::NotBlocking(v));
        }
        let star = self.graph.star_mask(v);
        let rest = self.graph.full_edge_mask() & !star;
        if self.graph.components_in(rest, 1 << v).len() > 1 {
            return Err(BiasError::DeletionDisconnects(v));
        }
        let members: Vec<usize> = (0..self.graph.edge_count())
            .filter(|&e| star & (1 << e) != 0 && !self.graph.is_loop(e))
            .collect();
        let related = |e: usize, f: usize| {
            self.cycles
                .iter()
                .zip(&self.balanced)
                .all(|(c, &b)| b || c.edges & (1 << e) == 0 || c.edges & (1 << f) == 0)
        };
        let mut parent: Vec<usize> = (0..members.len()).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if related(members[i], members[j]) {
                    let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of_root: Vec<Option<usize>> = vec![None; members.len()];
        for i in 0..members.len() {
            let r = root(&mut parent, i);
            match class_of_root[r] {
                Some(k) => classes[k].push(members[i]),
                None => {
                    class_of_root[r] = Some(classes.len());
                    classes.push(vec![members[i]]);
                }
            }
        }
        classes.sort_by_key(|c| c[0]);
        for class in &classes {
            for (i, &e) in class.iter().enumerate() {
                for &f in &class[i + 1..] {
                    assert!(
                        related(e, f),
                        "standard-partition relation failed transitivity at vertex {v}"
                    );
                }
            }
        }
        Ok(classes)
    }

    /// Splits blocking vertex `v` in two along its standard partition,
    /// turning unbalanced loops at `v` into links between the halves.  The
    /// resulting plain graph has the lift matroid as its cycle matroid.
    ///
    /// Requires a signature to exist and the standard partition to have
    /// exactly two classes; the first class (by edge order) stays at `v`,
    /// the second moves to the new vertex.
    pub fn split_blocking_vertex(&self, v: usize) -> Result<Multigraph, BiasError> {
        if self.find_signature().is_none() {
            return Err(BiasError::NoSignature);
        }
        let classes = self.standard_partition(v)?;
        if classes.len() != 2 {
            return Err(BiasError::SplitNeedsTwoClasses(classes.len()));
        }
        let moved: u32 = classes[1].iter().fold(0, |m, &e| m | 1 << e);
        let fresh = self.graph.vertex_count();
        let mut g = Multigraph::new(fresh + 1);
        for e in 0..self.graph.edge_count() {
            let (a, b) = self.graph.endpoints(e);
            let (a, b) = if a == v && b == v {
                if self.is_balanced_cycle(1 << e) == Some(true) {
                    (v, v)
                } else {
                    (v, fresh)
                }
            } else if moved & (1 << e) != 0 {
                (if a == v { fresh } else { a }, if b == v { fresh } else { b })
            } else {
                (a, b)
            };
            g.add_edge(self.graph.label(e).to_string(), a, b)
                .expect("edges of a valid biased graph transfer to the split graph");
        }
        Ok(g)
    }
}
