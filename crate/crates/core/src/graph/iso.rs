//! Graph isomorphism, in two flavours.
//!
//! *Labeled* isomorphism fixes every edge label pointwise and asks only for a
//! vertex bijection; it is the equality notion for graphs whose edges name
//! matroid elements.  *Shape* isomorphism forgets the labels entirely.
//!
//! The labeled canonical code exploits that the edge order is fixed: vertex
//! numberings that list new vertices in order of first appearance are the
//! only candidates for the lexicographic minimum, and there are at most
//! `2^t` of them, where `t` counts edges introducing two new vertices.

use super::Multigraph;

impl Multigraph {
    /// Canonical form under vertex relabeling with the labeled edge list
    /// fixed.  Returns the code (normalized endpoint pairs in edge order,
    /// then the vertex count) and one permutation `perm[old] = new`
    /// achieving it.  Vertices on no edge take the trailing numbers.
    pub fn canonical_labeled_code(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.vertex_count();
        let m = self.edge_count();
        let mut best: Option<Vec<usize>> = None;
        let mut best_perm: Vec<usize> = (0..n).collect();
        let mut perm = vec![usize::MAX; n];
        self.label_canon_walk(0, 0, &mut perm, &mut Vec::with_capacity(2 * m), &mut best, &mut best_perm);
        let mut code = best.unwrap_or_default();
        code.push(n);
        (code, best_perm)
    }

    fn label_canon_walk(
        &self,
        edge: usize,
        next_id: usize,
        perm: &mut Vec<usize>,
        code: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
        best_perm: &mut Vec<usize>,
    ) {
        if let Some(b) = best {
            // prune: the partial code already decides the comparison
            if code.as_slice() > &b[..code.len()] {
                return;
            }
        }
        if edge == self.edge_count() {
            let better = match best {
                Some(b) => code.as_slice() < b.as_slice(),
                None => true,
            };
            if better {
                *best = Some(code.clone());
                let mut full = perm.clone();
                let mut id = next_id;
                for slot in full.iter_mut() {
                    if *slot == usize::MAX {
                        *slot = id;
                        id += 1;
                    }
                }
                *best_perm = full;
            }
            return;
        }
        let (u, v) = self.endpoints(edge);
        let assigned = (perm[u] != usize::MAX, perm[v] != usize::MAX);
        let choices: Vec<(Option<usize>, Option<usize>)> = match assigned {
            (true, true) => vec![(None, None)],
            (true, false) => vec![(None, Some(next_id))],
            (false, true) => vec![(Some(next_id), None)],
            (false, false) => {
                if u == v {
                    vec![(Some(next_id), None)]
                } else {
                    // the only genuine tie: either endpoint may come first
                    vec![(Some(next_id), Some(next_id + 1)), (Some(next_id + 1), Some(next_id))]
                }
            }
        };
        for (pu, pv) in choices {
            let mut added = 0;
            if let Some(id) = pu {
                perm[u] = id;
                added += 1;
            }
            if let Some(id) = pv {
                perm[v] = id;
                added += 1;
            }
            let (a, b) = (perm[u], perm[v]);
            code.push(a.min(b));
            code.push(a.max(b));
            self.label_canon_walk(edge + 1, next_id + added, perm, code, best, best_perm);
            code.pop();
            code.pop();
            if pu.is_some() {
                perm[u] = usize::MAX;
            }
            if pv.is_some() {
                perm[v] = usize::MAX;
            }
        }
    }

    /// Vertex bijection sending every labeled edge of `self` onto the edge
    /// of `other` with the same label, if one exists.  Returns
    /// `map[self_vertex] = other_vertex`.
    pub fn labeled_isomorphic(&self, other: &Multigraph) -> Option<Vec<usize>> {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return None;
        }
        // align the other graph's edge order with ours, label by label
        let mut aligned = Multigraph::new(other.vertex_count());
        for e in 0..self.edge_count() {
            let idx = other.edge_index(self.label(e))?;
            let (u, v) = other.endpoints(idx);
            aligned.add_edge(self.label(e), u, v).ok()?;
        }
        let (code_a, perm_a) = self.canonical_labeled_code();
        let (code_b, perm_b) = aligned.canonical_labeled_code();
        if code_a != code_b {
            return None;
        }
        // map = perm_b^{-1} . perm_a
        let mut inv_b = vec![0; perm_b.len()];
        for (old, &new) in perm_b.iter().enumerate() {
            inv_b[new] = old;
        }
        Some(perm_a.iter().map(|&new| inv_b[new]).collect())
    }

    fn adjacency_counts(&self) -> Vec<Vec<u8>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0u8; n]; n];
        for e in 0..self.edge_count() {
            let (u, v) = self.endpoints(e);
            if u == v {
                m[u][u] += 1;
            } else {
                m[u][v] += 1;
                m[v][u] += 1;
            }
        }
        m
    }

    /// Canonical code of the unlabeled shape: the lexicographically smallest
    /// lower-triangular adjacency-count matrix (diagonal holds loop counts)
    /// over all vertex orderings, found by branch and bound.
    pub fn canonical_shape_code(&self) -> Vec<u8> {
        let n = self.vertex_count();
        let adj = self.adjacency_counts();
        let mut best: Option<Vec<u8>> = None;
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        shape_canon_walk(&adj, &mut order, &mut used, &mut Vec::new(), &mut best);
        best.unwrap_or_default()
    }

    /// Isomorphism of underlying multigraphs, labels ignored.
    pub fn shape_isomorphic(&self, other: &Multigraph) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut degs_a: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        let mut degs_b: Vec<usize> = (0..other.vertex_count()).map(|v| other.degree(v)).collect();
        degs_a.sort_unstable();
        degs_b.sort_unstable();
        if degs_a != degs_b {
            return false;
        }
        self.canonical_shape_code() == other.canonical_shape_code()
    }
}

fn shape_canon_walk(
    adj: &[Vec<u8>],
    order: &mut Vec<usize>,
    used: &mut [bool],
    code: &mut Vec<u8>,
    best: &mut Option<Vec<u8>>,
) {
    let n = adj.len();
    if order.len() == n {
        let better = match best {
            Some(b) => code.as_slice() < b.as_slice(),
            None => true,
        };
        if better {
            *best = Some(code.clone());
        }
        return;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        let start = code.len();
        code.push(adj[v][v]);
        for &w in order.iter() {
            code.push(adj[v][w]);
        }
        let keep = match best {
            Some(b) => code.as_slice() <= &b[..code.len()],
            None => true,
        };
        if keep {
            used[v] = true;
            order.push(v);
            shape_canon_walk(adj, order, used, code, best);
            order.pop();
            used[v] = false;
        }
        code.truncate(start);
    }
}
