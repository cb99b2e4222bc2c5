//! Cycle and theta enumeration.
//!
//! A cycle is a connected 2-regular subgraph, so a loop is a 1-edge cycle and
//! a pair of parallel edges is a 2-edge cycle.  A theta consists of two
//! branch vertices joined by three internally disjoint paths; two parallel
//! edges form two of those paths just fine.
//!
//! Enumeration is a rooted path search: every cycle is reported exactly once,
//! rooted at its smallest vertex with a direction tie-break.  The test module
//! keeps an independent subset-scan oracle for both enumerations.

use super::Multigraph;

/// An edge subset forming a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleSubgraph {
    pub edges: u32,
}

impl CycleSubgraph {
    pub fn len(self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.edges == 0
    }

    pub fn contains(self, e: usize) -> bool {
        self.edges & (1 << e) != 0
    }

    pub fn edge_indices(self) -> Vec<usize> {
        (0..32).filter(|i| self.edges & (1 << i) != 0).collect()
    }

    /// Vertices of the cycle in the host graph.
    pub fn vertices(self, g: &Multigraph) -> Vec<usize> {
        g.vertices_of(self.edges)
    }
}

/// Two branch vertices joined by three internally disjoint paths.  Each path
/// is a sequence of edge indices from `branch.0` to `branch.1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta {
    pub branch: (usize, usize),
    pub paths: [Vec<usize>; 3],
}

impl Theta {
    pub fn path_mask(&self, i: usize) -> u32 {
        self.paths[i].iter().fold(0, |m, &e| m | 1 << e)
    }

    pub fn edge_mask(&self) -> u32 {
        self.path_mask(0) | self.path_mask(1) | self.path_mask(2)
    }

    /// The three cycles of the theta: unions of the path pairs.
    pub fn cycles(&self) -> [CycleSubgraph; 3] {
        [
            CycleSubgraph { edges: self.path_mask(0) | self.path_mask(1) },
            CycleSubgraph { edges: self.path_mask(0) | self.path_mask(2) },
            CycleSubgraph { edges: self.path_mask(1) | self.path_mask(2) },
        ]
    }
}

impl Multigraph {
    /// All cycles, sorted by (length, edge mask).
    pub fn all_cycles(&self) -> Vec<CycleSubgraph> {
        let mut out = Vec::new();
        // loops
        for e in 0..self.edge_count() {
            if self.is_loop(e) {
                out.push(CycleSubgraph { edges: 1 << e });
            }
        }
        // cycles with >= 2 edges, rooted at their smallest vertex
        for root in 0..self.vertex_count() {
            let mut visited = 1u32 << root;
            self.cycle_walk(root, root, 0, &mut visited, usize::MAX, &mut out);
        }
        out.sort_by_key(|c| (c.len(), c.edges));
        out
    }

    fn cycle_walk(
        &self,
        root: usize,
        at: usize,
        used_edges: u32,
        visited: &mut u32,
        first_step: usize,
        out: &mut Vec<CycleSubgraph>,
    ) {
        for e in 0..self.edge_count() {
            if used_edges & (1 << e) != 0 || self.is_loop(e) {
                continue;
            }
            let (u, v) = self.endpoints(e);
            if u != at && v != at {
                continue;
            }
            let next = if u == at { v } else { u };
            let path_len = used_edges.count_ones() as usize;
            if next == root {
                if path_len == 0 {
                    continue; // would re-walk a link back along itself
                }
                // direction / duplicate tie-breaks
                if path_len == 1 {
                    // parallel pair: count each unordered pair once
                    let first_edge = used_edges.trailing_zeros() as usize;
                    if e <= first_edge {
                        continue;
                    }
                } else if first_step > at {
                    // one direction only for longer cycles
                    continue;
                }
                out.push(CycleSubgraph { edges: used_edges | 1 << e });
            } else if *visited & (1 << next) == 0 && next > root {
                *visited |= 1 << next;
                let first = if path_len == 0 { next } else { first_step };
                self.cycle_walk(root, next, used_edges | 1 << e, visited, first, out);
                *visited &= !(1 << next);
            }
        }
    }

    /// All simple paths from `from` to `to` that avoid `forbidden` vertices
    /// internally; each path is an edge index sequence.
    fn simple_paths(&self, from: usize, to: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut visited = 1u32 << from;
        let mut path = Vec::new();
        self.path_walk(from, to, &mut visited, &mut path, &mut out);
        out
    }

    fn path_walk(
        &self,
        at: usize,
        to: usize,
        visited: &mut u32,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for e in 0..self.edge_count() {
            if path.contains(&e) || self.is_loop(e) {
                continue;
            }
            let (u, v) = self.endpoints(e);
            if u != at && v != at {
                continue;
            }
            let next = if u == at { v } else { u };
            if next == to {
                path.push(e);
                out.push(path.clone());
                path.pop();
            } else if *visited & (1 << next) == 0 {
                *visited |= 1 << next;
                path.push(e);
                self.path_walk(next, to, visited, path, out);
                path.pop();
                *visited &= !(1 << next);
            }
        }
    }

    /// All theta subgraphs, each reported once with its branch pair.
    pub fn all_thetas(&self) -> Vec<Theta> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in (u + 1)..self.vertex_count() {
                let paths = self.simple_paths(u, v);
                let internals: Vec<u32> = paths
                    .iter()
                    .map(|p| {
                        let mask = p.iter().fold(0u32, |m, &e| m | 1 << e);
                        let mut verts = 0u32;
                        for w in self.vertices_of(mask) {
                            if w != u && w != v {
                                verts |= 1 << w;
                            }
                        }
                        verts
                    })
                    .collect();
                for i in 0..paths.len() {
                    for j in (i + 1)..paths.len() {
                        if internals[i] & internals[j] != 0 {
                            continue;
                        }
                        for k in (j + 1)..paths.len() {
                            if internals[i] & internals[k] != 0 || internals[j] & internals[k] != 0
                            {
                                continue;
                            }
                            out.push(Theta {
                                branch: (u, v),
                                paths: [paths[i].clone(), paths[j].clone(), paths[k].clone()],
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent cycle oracle: scan every edge subset for "connected and
    /// 2-regular on its own vertices".
    fn cycle_oracle(g: &Multigraph) -> Vec<u32> {
        let mut out = Vec::new();
        for mask in 1u32..=g.full_edge_mask() {
            let verts = g.vertices_of(mask);
            if verts.is_empty() {
                continue;
            }
            let two_regular = verts.iter().all(|&v| {
                (0..g.edge_count())
                    .filter(|&e| mask & (1 << e) != 0)
                    .map(|e| {
                        let (a, b) = g.endpoints(e);
                        (a == v) as usize + (b == v) as usize
                    })
                    .sum::<usize>()
                    == 2
            });
            if !two_regular {
                continue;
            }
            let removed: u32 = (0..g.vertex_count())
                .filter(|v| !verts.contains(v))
                .fold(0, |m, v| m | 1 << v);
            if g.components_in(mask, removed).len() == 1 {
                out.push(mask);
            }
        }
        out.sort_unstable();
        out
    }

    /// Independent theta oracle: connected subgraph, |E| = |V| + 1, degree
    /// multiset {3,3,2,...}, and no bridge (which rules out dumbbells).
    fn theta_oracle(g: &Multigraph) -> Vec<u32> {
        let mut out = Vec::new();
        for mask in 1u32..=g.full_edge_mask() {
            let verts = g.vertices_of(mask);
            if verts.is_empty() || mask.count_ones() as usize != verts.len() + 1 {
                continue;
            }
            let mut degs: Vec<usize> = verts
                .iter()
                .map(|&v| {
                    (0..g.edge_count())
                        .filter(|&e| mask & (1 << e) != 0)
                        .map(|e| {
                            let (a, b) = g.endpoints(e);
                            (a == v) as usize + (b == v) as usize
                        })
                        .sum()
                })
                .collect();
            degs.sort_unstable();
            let expected: Vec<usize> = std::iter::repeat(2)
                .take(verts.len().saturating_sub(2))
                .chain([3, 3])
                .collect();
            if degs != expected {
                continue;
            }
            let removed: u32 = (0..g.vertex_count())
                .filter(|v| !verts.contains(v))
                .fold(0, |m, v| m | 1 << v);
            if g.components_in(mask, removed).len() != 1 {
                continue;
            }
            let bridgeless = (0..g.edge_count())
                .filter(|&e| mask & (1 << e) != 0)
                .all(|e| {
                    let sub = mask & !(1 << e);
                    let sub_verts = g.vertices_of(mask);
                    let rem: u32 = (0..g.vertex_count())
                        .filter(|v| !sub_verts.contains(v))
                        .fold(0, |m, v| m | 1 << v);
                    g.components_in(sub, rem).len() == 1
                });
            if bridgeless {
                out.push(mask);
            }
        }
        out.sort_unstable();
        out
    }

    fn masks(cycles: &[CycleSubgraph]) -> Vec<u32> {
        let mut v: Vec<u32> = cycles.iter().map(|c| c.edges).collect();
        v.sort_unstable();
        v
    }

    fn theta_masks(thetas: &[Theta]) -> Vec<u32> {
        let mut v: Vec<u32> = thetas.iter().map(|t| t.edge_mask()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn k4_has_seven_cycles_and_six_thetas() {
        let k4 = Multigraph::complete(4);
        let cycles = k4.all_cycles();
        assert_eq!(masks(&cycles), cycle_oracle(&k4));
        assert_eq!(cycles.len(), 7); // 4 triangles + 3 quadrilaterals
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);

        let thetas = k4.all_thetas();
        assert_eq!(theta_masks(&thetas), theta_oracle(&k4));
        assert_eq!(thetas.len(), 6);
    }

    #[test]
    fn doubled_triangle_counts() {
        let two_k3 = Multigraph::complete(3).k_multiply(2).unwrap();
        let cycles = two_k3.all_cycles();
        assert_eq!(masks(&cycles), cycle_oracle(&two_k3));
        // 3 parallel pairs + 2^3 triangles
        assert_eq!(cycles.len(), 11);
        assert_eq!(cycles.iter().filter(|c| c.len() == 2).count(), 3);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 8);

        let thetas = two_k3.all_thetas();
        assert_eq!(theta_masks(&thetas), theta_oracle(&two_k3));
        // per vertex pair: the two parallel edges plus one of four 2-paths
        assert_eq!(thetas.len(), 12);
        let parallel_pair = two_k3.edge_mask(&["e1_1", "e1_2"]).unwrap();
        assert!(thetas
            .iter()
            .any(|t| t.edge_mask() & parallel_pair == parallel_pair
                && t.paths.iter().filter(|p| p.len() == 1).count() == 2));
    }

    #[test]
    fn loops_and_parallels_are_short_cycles() {
        let mut g = Multigraph::new(2);
        g.add_edge("l", 0, 0).unwrap();
        g.add_edge("a", 0, 1).unwrap();
        g.add_edge("b", 0, 1).unwrap();
        g.add_edge("c", 0, 1).unwrap();
        let cycles = g.all_cycles();
        assert_eq!(masks(&cycles), cycle_oracle(&g));
        // the loop + C(3,2) parallel pairs
        assert_eq!(cycles.len(), 4);
        assert_eq!(cycles[0].edges, 1);

        // triple link is one theta
        let thetas = g.all_thetas();
        assert_eq!(theta_masks(&thetas), theta_oracle(&g));
        assert_eq!(thetas.len(), 1);
        assert_eq!(thetas[0].edge_mask(), 0b1110);
    }

    #[test]
    fn wheel_and_bigger_graphs_agree_with_oracle() {
        for g in [
            Multigraph::wheel(4),
            Multigraph::complete(5),
            Multigraph::prism(),
            Multigraph::complete_bipartite(3, 3),
        ] {
            assert_eq!(masks(&g.all_cycles()), cycle_oracle(&g), "cycles differ");
            assert_eq!(theta_masks(&g.all_thetas()), theta_oracle(&g), "thetas differ");
        }
        assert_eq!(Multigraph::wheel(4).all_cycles().len(), 13);
        assert_eq!(Multigraph::complete(5).all_cycles().len(), 37);
    }

    #[test]
    fn dumbbell_has_no_theta() {
        // two triangles joined by a bridge
        let mut g = Multigraph::new(6);
        for (i, (u, v)) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
            .into_iter()
            .enumerate()
        {
            g.add_edge(format!("e{i}"), u, v).unwrap();
        }
        assert_eq!(g.all_thetas().len(), 0);
        assert_eq!(theta_oracle(&g).len(), 0);
        assert_eq!(g.all_cycles().len(), 2);
    }

    #[test]
    fn theta_cycles_are_cycles_of_the_graph() {
        let g = Multigraph::wheel(4);
        let cycles = masks(&g.all_cycles());
        for theta in g.all_thetas() {
            for c in theta.cycles() {
                assert!(cycles.binary_search(&c.edges).is_ok());
            }
        }
    }

    mod random {
        use super::*;
        use proptest::prelude::*;

        fn arbitrary_multigraph() -> impl Strategy<Value = Multigraph> {
            (1usize..=5, proptest::collection::vec((0usize..5, 0usize..5), 0..=8)).prop_map(
                |(n, pairs)| {
                    let mut g = Multigraph::new(n);
                    for (i, (u, v)) in pairs.into_iter().enumerate() {
                        let _ = g.add_edge(format!("e{i}"), u.min(n - 1), v.min(n - 1));
                    }
                    g
                },
            )
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn cycles_match_subset_scan(g in arbitrary_multigraph()) {
                prop_assert_eq!(masks(&g.all_cycles()), cycle_oracle(&g));
            }

            #[test]
            fn thetas_match_subset_scan(g in arbitrary_multigraph()) {
                prop_assert_eq!(theta_masks(&g.all_thetas()), theta_oracle(&g));
            }

            #[test]
            fn reported_cycles_are_two_regular_and_connected(g in arbitrary_multigraph()) {
                for c in g.all_cycles() {
                    let verts = c.vertices(&g);
                    for &v in &verts {
                        let deg: usize = c.edge_indices().iter().map(|&e| {
                            let (a, b) = g.endpoints(e);
                            (a == v) as usize + (b == v) as usize
                        }).sum();
                        prop_assert_eq!(deg, 2);
                    }
                }
            }
        }
    }
}
