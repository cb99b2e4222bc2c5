//! Labelled multigraphs: loops and parallel edges allowed, vertices are dense
//! indices `0..vertex_count`, every edge carries a distinct string label.
//!
//! Edge subsets are passed around as `u32` bitmasks over edge indices (the
//! index an edge got when it was added), vertex subsets as `u32` bitmasks over
//! vertex indices.  Both are capped at 32; practical inputs here stay far
//! below that.

mod cycles;
mod iso;

pub use cycles::{CycleSubgraph, Theta};

use thiserror::Error;

/// Hard cap on vertices (vertex subsets are `u32` masks).
pub const MAX_VERTICES: usize = 32;
/// Hard cap on edges (edge subsets are `u32` masks).
pub const MAX_EDGES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("duplicate edge label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown edge label `{0}`")]
    UnknownLabel(String),
    #[error("too many edges ({0}); at most {MAX_EDGES} supported")]
    TooManyEdges(usize),
    #[error("too many vertices ({0}); at most {MAX_VERTICES} supported")]
    TooManyVertices(usize),
    #[error("graph must be simple but `{0}` is a loop or has a parallel partner")]
    NotSimple(String),
    #[error("flip side shares vertex {0} with its complement outside the flip pair")]
    SharedVertexOutsideFlipPair(usize),
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Edge {
    label: String,
    u: usize,
    v: usize,
}

/// A labelled multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

/// One connected piece of a graph: its vertices (sorted) and the mask of the
/// edges it contains.  An isolated vertex forms a component with no edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edge_mask: u32,
}

impl Multigraph {
    /// An edgeless graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        assert!(
            vertex_count <= MAX_VERTICES,
            "vertex count {vertex_count} exceeds {MAX_VERTICES}"
        );
        Multigraph { vertex_count, edges: Vec::new() }
    }

    /// Adds an edge between `u` and `v` (`u == v` makes a loop) and returns
    /// its index.  Labels must be unique within the graph.
    pub fn add_edge(
        &mut self,
        label: impl Into<String>,
        u: usize,
        v: usize,
    ) -> Result<usize, GraphError> {
        let label = label.into();
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count: self.vertex_count });
            }
        }
        if self.edges.iter().any(|e| e.label == label) {
            return Err(GraphError::DuplicateLabel(label));
        }
        if self.edges.len() >= MAX_EDGES {
            return Err(GraphError::TooManyEdges(self.edges.len() + 1));
        }
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        self.edges.push(Edge { label, u, v });
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e`, normalised so the smaller vertex comes first.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let edge = &self.edges[e];
        (edge.u, edge.v)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let edge = &self.edges[e];
        edge.u == edge.v
    }

    pub fn label(&self, e: usize) -> &str {
        &self.edges[e].label
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.edges.iter().map(|e| e.label.as_str())
    }

    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    /// Translates a list of labels into an edge mask.
    pub fn edge_mask(&self, labels: &[&str]) -> Result<u32, GraphError> {
        let mut mask = 0u32;
        for l in labels {
            let idx = self
                .edge_index(l)
                .ok_or_else(|| GraphError::UnknownLabel(l.to_string()))?;
            mask |= 1 << idx;
        }
        Ok(mask)
    }

    /// Mask of all edges.
    pub fn full_edge_mask(&self) -> u32 {
        if self.edges.is_empty() {
            0
        } else {
            (u32::MAX) >> (32 - self.edges.len())
        }
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }

    /// Mask of edges incident with `v` (loops included).
    pub fn star_mask(&self, v: usize) -> u32 {
        let mut mask = 0;
        for (i, e) in self.edges.iter().enumerate() {
            if e.u == v || e.v == v {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Mask of loops attached to `v`.
    pub fn loop_mask_at(&self, v: usize) -> u32 {
        let mut mask = 0;
        for (i, e) in self.edges.iter().enumerate() {
            if e.u == v && e.v == v {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Mask of all loops in the graph.
    pub fn loop_mask(&self) -> u32 {
        let mut mask = 0;
        for (i, e) in self.edges.iter().enumerate() {
            if e.u == e.v {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Vertices touched by the edges in `mask`.
    pub fn vertices_of(&self, mask: u32) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                seen[e.u] = true;
                seen[e.v] = true;
            }
        }
        (0..self.vertex_count).filter(|&v| seen[v]).collect()
    }

    /// Connected components of the whole graph; isolated vertices count as
    /// singleton components.
    pub fn components(&self) -> Vec<Component> {
        self.components_in(self.full_edge_mask(), 0)
    }

    /// Components of the subgraph with edge set `edge_mask` on the vertices
    /// not in `removed_vertices`.  Edges touching a removed vertex are
    /// dropped; surviving vertices with no surviving edge form singleton
    /// components.
    pub fn components_in(&self, edge_mask: u32, removed_vertices: u32) -> Vec<Component> {
        let alive = |v: usize| removed_vertices & (1 << v) == 0;
        let mut comp_of = vec![usize::MAX; self.vertex_count];
        let mut comps: Vec<(Vec<usize>, u32)> = Vec::new();
        for start in 0..self.vertex_count {
            if !alive(start) || comp_of[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut verts = vec![start];
            let mut edges = 0u32;
            comp_of[start] = id;
            let mut queue = vec![start];
            while let Some(w) = queue.pop() {
                for (i, e) in self.edges.iter().enumerate() {
                    if edge_mask & (1 << i) == 0 || !alive(e.u) || !alive(e.v) {
                        continue;
                    }
                    if e.u != w && e.v != w {
                        continue;
                    }
                    edges |= 1 << i;
                    let other = if e.u == w { e.v } else { e.u };
                    if comp_of[other] == usize::MAX {
                        comp_of[other] = id;
                        verts.push(other);
                        queue.push(other);
                    }
                }
            }
            verts.sort_unstable();
            comps.push((verts, edges));
        }
        comps
            .into_iter()
            .map(|(vertices, edge_mask)| Component { vertices, edge_mask })
            .collect()
    }

    /// True when the graph has at most one component (edgeless graphs on zero
    /// vertices count as connected).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Literal k-connectivity: every vertex subset `S` with `|S| < k` leaves
    /// exactly one component after removal.  Removing all vertices leaves
    /// zero components, so no graph is more than `|V|`-connected, and a
    /// disconnected graph is not k-connected for any k >= 1.
    pub fn is_k_vertex_connected(&self, k: usize) -> bool {
        if self.vertex_count >= 26 {
            // subset scan; keep it honest about its own limits
            panic!("vertex connectivity scan limited to graphs with < 26 vertices");
        }
        let full = self.full_edge_mask();
        for s in 0u32..(1u32 << self.vertex_count) {
            if (s.count_ones() as usize) < k
                && self.components_in(full, s).len() != 1
            {
                return false;
            }
        }
        true
    }

    /// Swaps the attachments of the edge set `x1` at the two gluing vertices:
    /// every endpoint of an `x1`-edge equal to `u1` becomes `u2` and vice
    /// versa.  Rejects the call if `x1` and its complement share a vertex
    /// other than `u1`/`u2` (the flip would not be well defined there).
    pub fn whitney_flip(&self, u1: usize, u2: usize, x1: u32) -> Result<Multigraph, GraphError> {
        for w in [u1, u2] {
            if w >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count: self.vertex_count });
            }
        }
        let inside = self.vertices_of(x1);
        let outside = self.vertices_of(self.full_edge_mask() & !x1);
        for &w in &inside {
            if w != u1 && w != u2 && outside.contains(&w) {
                return Err(GraphError::SharedVertexOutsideFlipPair(w));
            }
        }
        let swap = |w: usize| {
            if w == u1 {
                u2
            } else if w == u2 {
                u1
            } else {
                w
            }
        };
        let mut out = Multigraph::new(self.vertex_count);
        for (i, e) in self.edges.iter().enumerate() {
            let (u, v) = if x1 & (1 << i) != 0 {
                (swap(e.u), swap(e.v))
            } else {
                (e.u, e.v)
            };
            out.add_edge(e.label.clone(), u, v)?;
        }
        Ok(out)
    }

    /// Replaces every edge of a simple graph by `k` parallel copies.  With
    /// `k == 1` the graph is returned unchanged; otherwise copy `i` of edge
    /// `l` is labelled `l_i`.
    pub fn k_multiply(&self, k: usize) -> Result<Multigraph, GraphError> {
        if k == 0 {
            return Err(GraphError::ZeroMultiplicity);
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.u == e.v {
                return Err(GraphError::NotSimple(e.label.clone()));
            }
            if self.edges[..i].iter().any(|f| (f.u, f.v) == (e.u, e.v)) {
                return Err(GraphError::NotSimple(e.label.clone()));
            }
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let mut out = Multigraph::new(self.vertex_count);
        for e in &self.edges {
            for i in 1..=k {
                out.add_edge(format!("{}_{i}", e.label), e.u, e.v)?;
            }
        }
        Ok(out)
    }

    // ---- named graphs; edges are labelled e1, e2, ... in construction order

    fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Multigraph {
        let mut g = Multigraph::new(vertex_count);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            g.add_edge(format!("e{}", i + 1), u, v)
                .expect("named graph construction is in bounds");
        }
        g
    }

    /// Complete graph on `n` vertices; edges in lexicographic endpoint order.
    pub fn complete(n: usize) -> Multigraph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                pairs.push((u, v));
            }
        }
        Multigraph::from_pairs(n, &pairs)
    }

    /// Cycle on `n >= 1` vertices (`n == 1` is a single loop, `n == 2` a
    /// parallel pair).
    pub fn cycle(n: usize) -> Multigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_pairs(n, &pairs)
    }

    /// Path with `n` edges on `n + 1` vertices.
    pub fn path(n: usize) -> Multigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
        Multigraph::from_pairs(n + 1, &pairs)
    }

    /// Star with `leaves` edges from the centre vertex 0.
    pub fn star(leaves: usize) -> Multigraph {
        let pairs: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Multigraph::from_pairs(leaves + 1, &pairs)
    }

    /// Wheel with `rim` rim vertices: hub 0, spokes first, then the rim cycle.
    pub fn wheel(rim: usize) -> Multigraph {
        let mut pairs: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
        for i in 0..rim {
            pairs.push((1 + i, 1 + (i + 1) % rim));
        }
        Multigraph::from_pairs(rim + 1, &pairs)
    }

    /// Triangular prism: two triangles 0,1,2 and 3,4,5 joined by a matching.
    pub fn prism() -> Multigraph {
        Multigraph::from_pairs(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
    }

    /// Complete bipartite graph on parts of size `a` (vertices `0..a`) and
    /// `b` (vertices `a..a+b`).
    pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
        let mut pairs = Vec::new();
        for u in 0..a {
            for v in 0..b {
                pairs.push((u, a + v));
            }
        }
        Multigraph::from_pairs(a + b, &pairs)
    }
}
