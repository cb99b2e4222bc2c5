//! Signatures: edge sets whose parity explains the bias.
//!
//! A signature declares a cycle balanced exactly when the cycle meets it in
//! an even number of edges.  A biased graph admits one if and only if it has
//! no contrabalanced theta; the search below finds one by propagating
//! parities over a spanning forest and then double-checking every cycle.

use super::BiasedGraph;

/// An edge set read as a parity functional on cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub edges: u32,
}

impl Signature {
    /// Whether the signature calls this edge set balanced (even overlap).
    pub fn balances(&self, cycle_mask: u32) -> bool {
        (self.edges & cycle_mask).count_ones() % 2 == 0
    }

    /// Whether the signature reproduces the bias of the given graph.
    pub fn classifies(&self, bg: &BiasedGraph) -> bool {
        bg.cycles()
            .iter()
            .all(|c| Some(self.balances(c.edges)) == bg.is_balanced_cycle(c.edges))
    }
}

impl BiasedGraph {
    /// Finds a signature inducing exactly this bias, if one exists.
    ///
    /// Forest edges are assigned parity zero; each remaining edge closes a
    /// fundamental cycle, which forces its parity.  The candidate is then
    /// checked against every cycle, so a `Some` answer is always correct and
    /// a `None` answer means no signature exists (the fundamental cycles
    /// determine any candidate up to re-rooting, which never changes cycle
    /// parities).
    pub fn find_signature(&self) -> Option<Signature> {
        let g = self.graph();
        let n = g.vertex_count();
        // BFS forest: parent edge per vertex, usize::MAX at roots
        let mut parent_edge = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut forest = 0u32;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(at) = queue.pop_front() {
                for e in 0..g.edge_count() {
                    if g.is_loop(e) {
                        continue;
                    }
                    let (u, v) = g.endpoints(e);
                    let next = match (u == at, v == at) {
                        (true, _) => v,
                        (_, true) => u,
                        _ => continue,
                    };
                    if !seen[next] {
                        seen[next] = true;
                        parent[next] = at;
                        parent_edge[next] = e;
                        depth[next] = depth[at] + 1;
                        forest |= 1 << e;
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut sigma = 0u32;
        for e in 0..g.edge_count() {
            if forest & (1 << e) != 0 {
                continue;
            }
            let (u, v) = g.endpoints(e);
            let fundamental = (1u32 << e) | forest_path(&parent, &parent_edge, &depth, u, v);
            let balanced = self
                .is_balanced_cycle(fundamental)
                .expect("fundamental cycles are cycles");
            if !balanced {
                sigma |= 1 << e;
            }
        }
        let candidate = Signature { edges: sigma };
        candidate.classifies(self).then_some(candidate)
    }
}

/// Edge mask of the forest path between two vertices of one tree.
fn forest_path(parent: &[usize], parent_edge: &[usize], depth: &[usize], u: usize, v: usize) -> u32 {
    let (mut a, mut b) = (u, v);
    let mut mask = 0u32;
    while depth[a] > depth[b] {
        mask |= 1 << parent_edge[a];
        a = parent[a];
    }
    while depth[b] > depth[a] {
        mask |= 1 << parent_edge[b];
        b = parent[b];
    }
    while a != b {
        mask |= 1 << parent_edge[a];
        mask |= 1 << parent_edge[b];
        a = parent[a];
        b = parent[b];
    }
    mask
}
