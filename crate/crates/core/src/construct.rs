//! Constructions turning ordinary graphs into biased graphs that represent
//! the original cycle matroid.
//!
//! Pinches, simple curlings and the two twisting families output signed
//! graphs whose frame matroid is the cycle matroid of a base graph; fat
//! thetas output a biased graph (generally not signature-representable)
//! whose lift matroid is the base cycle matroid.  Constructions built from
//! several parts return the glued biased graph together with the base
//! graph, so callers can compare the two matroids directly: both share the
//! same edge labels in the same order.

use crate::bias::{BiasError, BiasedGraph, Signature};
use crate::graph::{GraphError, Multigraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("pinch endpoints must differ, got vertex {0} twice")]
    SamePinchVertex(usize),
    #[error("part {part}: marked vertex {vertex} out of range")]
    MarkOutOfRange { part: usize, vertex: usize },
    #[error("part {part}: marked vertices must be pairwise distinct")]
    MarksNotDistinct { part: usize },
    #[error("part {part}: this construction needs a third mark")]
    MissingThirdMark { part: usize },
    #[error("part {part}: this construction needs a part with at least one edge")]
    EmptyPart { part: usize },
    #[error("{construction} takes {expected} parts, got {found}")]
    WrongPartCount { construction: &'static str, expected: &'static str, found: usize },
    #[error("curled vertex {vertex} carries loop `{label}`")]
    LoopAtCurledVertex { vertex: usize, label: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bias(#[from] BiasError),
}

/// One building block of a twisting or fat theta: a graph with marked
/// attachment vertices.  The twistings use all three marks; fat thetas use
/// only `x` and `y`.
#[derive(Debug, Clone)]
pub struct TwistPart {
    pub graph: Multigraph,
    pub x: usize,
    pub y: usize,
    pub z: Option<usize>,
}

impl TwistPart {
    pub fn marked(graph: Multigraph, x: usize, y: usize) -> Self {
        TwistPart { graph, x, y, z: None }
    }

    pub fn marked3(graph: Multigraph, x: usize, y: usize, z: usize) -> Self {
        TwistPart { graph, x, y, z: Some(z) }
    }

    fn validate(&self, part: usize, needs_z: bool) -> Result<(), ConstructError> {
        let n = self.graph.vertex_count();
        let mut marks = vec![self.x, self.y];
        if needs_z {
            marks.push(self.z.ok_or(ConstructError::MissingThirdMark { part })?);
        }
        for &v in &marks {
            if v >= n {
                return Err(ConstructError::MarkOutOfRange { part, vertex: v });
            }
        }
        let mut sorted = marks.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != marks.len() {
            return Err(ConstructError::MarksNotDistinct { part });
        }
        Ok(())
    }
}

/// Identifies `v1` and `v2` and declares the edges originally at `v1`
/// negative; an edge joining the pair becomes an unbalanced loop.  The
/// frame matroid of the result represents the cycle matroid of `g`, which
/// is returned unchanged as the base graph.
pub fn pinch(g: Multigraph, v1: usize, v2: usize) -> Result<(BiasedGraph, Multigraph), ConstructError> {
    let n = g.vertex_count();
    for v in [v1, v2] {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n }.into());
        }
    }
    if v1 == v2 {
        return Err(ConstructError::SamePinchVertex(v1));
    }
    let merged = v1.min(v2);
    let dropped = v1.max(v2);
    let map = |w: usize| {
        let w = if w == v1 || w == v2 { merged } else { w };
        w - (w > dropped) as usize
    };
    let mut h = Multigraph::new(n - 1);
    let mut sigma = 0u32;
    for e in 0..g.edge_count() {
        let (u, w) = g.endpoints(e);
        if u == v1 || w == v1 {
            sigma |= 1 << e;
        }
        h.add_edge(g.label(e).to_string(), map(u), map(w))?;
    }
    Ok((BiasedGraph::from_signature(h, Signature { edges: sigma }), g))
}

/// Curls every edge at `v` into a negative loop at its other endpoint and
/// removes `v`.  The frame matroid of the result represents the cycle
/// matroid of the input.  Loops already at `v` are rejected: the operation
/// is not defined for them.
pub fn simple_curling(g: Multigraph, v: usize) -> Result<BiasedGraph, ConstructError> {
    let n = g.vertex_count();
    if v >= n {
        return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n }.into());
    }
    let map = |w: usize| w - (w > v) as usize;
    let mut h = Multigraph::new(n - 1);
    let mut sigma = 0u32;
    for e in 0..g.edge_count() {
        let (u, w) = g.endpoints(e);
        if u == v && w == v {
            return Err(ConstructError::LoopAtCurledVertex {
                vertex: v,
                label: g.label(e).to_string(),
            });
        }
        let (u, w) = if u == v {
            sigma |= 1 << e;
            (map(w), map(w))
        } else if w == v {
            sigma |= 1 << e;
            (map(u), map(u))
        } else {
            (map(u), map(w))
        };
        h.add_edge(g.label(e).to_string(), u, w)?;
    }
    Ok(BiasedGraph::from_signature(h, Signature { edges: sigma }))
}

/// Glues four three-marked parts into a signed graph on special vertices
/// {x, y, z} (negative edges: those at the first part's x, the second
/// part's y, the third part's z) and into the base graph on {w_1..w_4},
/// where part i attaches to w_i, w_{3-i}, w_{i+2} (indices modulo 4).
pub fn four_twisting(parts: Vec<TwistPart>) -> Result<(BiasedGraph, Multigraph), ConstructError> {
    if parts.len() != 4 {
        return Err(ConstructError::WrongPartCount {
            construction: "a 4-twisting",
            expected: "exactly 4",
            found: parts.len(),
        });
    }
    for (p, part) in parts.iter().enumerate() {
        part.validate(p, true)?;
    }
    let h_graph = glue(&parts, 3, |_p, part| {
        vec![(part.x, 0), (part.y, 1), (part.z.unwrap(), 2)]
    })?;
    let sigma = edges_at(&parts, &[(0, parts[0].x), (1, parts[1].y), (2, parts[2].z.unwrap())]);
    let h = BiasedGraph::from_signature(h_graph, Signature { edges: sigma });
    // 1-based targets: x_i -> w_i, y_i -> w_{3-i}, z_i -> w_{i+2}
    let base = glue(&parts, 4, |p, part| {
        vec![
            (part.x, p),
            (part.y, (1isize - p as isize).rem_euclid(4) as usize),
            (part.z.unwrap(), (p + 2) % 4),
        ]
    })?;
    Ok((h, base))
}

/// Glues k three-marked parts (k >= 3) around a ring of special vertices
/// u_1..u_k, part i attaching via x_i -> u_{i-1}, z_i -> u_i, y_i ->
/// u_{i+1}; negative edges are those at the first part's y or the second
/// part's x.  The base graph identifies all z_i to a hub and y_{i-1} with
/// x_i to ring vertices w_i.
pub fn consecutive_twisting(
    parts: Vec<TwistPart>,
) -> Result<(BiasedGraph, Multigraph), ConstructError> {
    let k = parts.len();
    if k < 3 {
        return Err(ConstructError::WrongPartCount {
            construction: "a consecutive twisting",
            expected: "at least 3",
            found: k,
        });
    }
    for (p, part) in parts.iter().enumerate() {
        part.validate(p, true)?;
    }
    let h_graph = glue(&parts, k, |p, part| {
        vec![
            (part.x, (p + k - 1) % k),
            (part.z.unwrap(), p),
            (part.y, (p + 1) % k),
        ]
    })?;
    let sigma = edges_at(&parts, &[(0, parts[0].y), (1, parts[1].x)]);
    let h = BiasedGraph::from_signature(h_graph, Signature { edges: sigma });
    // hub z at 0, ring w_1..w_k at 1..k; x_i -> w_i, y_i -> w_{i+1}
    let base = glue(&parts, k + 1, |p, part| {
        vec![(part.z.unwrap(), 0), (part.x, p + 1), (part.y, (p + 1) % k + 1)]
    })?;
    Ok((h, base))
}

/// The result of [`fat_theta`]: the glued biased graph and its base graph.
///
/// Glues three two-marked parts into a graph on special vertices {x, y},
/// balancing exactly the cycles that stay inside a single part; the base
/// graph rings the parts together through w_1..w_3 (y_i and x_{i+1}
/// identified).  The lift matroid of the result represents the base cycle
/// matroid.
pub fn fat_theta(parts: Vec<TwistPart>) -> Result<(BiasedGraph, Multigraph), ConstructError> {
    if parts.len() != 3 {
        return Err(ConstructError::WrongPartCount {
            construction: "a fat theta",
            expected: "exactly 3",
            found: parts.len(),
        });
    }
    for (p, part) in parts.iter().enumerate() {
        part.validate(p, false)?;
        if part.graph.edge_count() == 0 {
            return Err(ConstructError::EmptyPart { part: p });
        }
    }
    let h_graph = glue(&parts, 2, |_, part| vec![(part.x, 0), (part.y, 1)])?;
    // cycles inside a single part are the balanced ones
    let mut part_masks = Vec::new();
    let mut offset = 0;
    for part in &parts {
        let edges = part.graph.edge_count();
        let mask = ((1u64 << edges) - 1) as u32;
        part_masks.push(mask << offset);
        offset += edges;
    }
    let balanced: Vec<u32> = h_graph
        .all_cycles()
        .iter()
        .map(|c| c.edges)
        .filter(|&c| part_masks.iter().any(|&m| c & m == c))
        .collect();
    let h = BiasedGraph::new(h_graph, &balanced)?;
    let base = glue(&parts, 3, |p, part| vec![(part.y, p), (part.x, (p + 2) % 3)])?;
    Ok((h, base))
}

/// Builds the glued graph over `specials` reserved low vertex ids plus
/// fresh ids for unmarked part vertices (parts in order, vertices in
/// order).  `marks(p, part)` lists the (part vertex, special id) pins.
fn glue(
    parts: &[TwistPart],
    specials: usize,
    marks: impl Fn(usize, &TwistPart) -> Vec<(usize, usize)>,
) -> Result<Multigraph, GraphError> {
    let mut maps = Vec::with_capacity(parts.len());
    let mut next = specials;
    for (p, part) in parts.iter().enumerate() {
        let mut map = vec![usize::MAX; part.graph.vertex_count()];
        for (v, target) in marks(p, part) {
            map[v] = target;
        }
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        maps.push(map);
    }
    let mut g = Multigraph::new(next);
    for (part, map) in parts.iter().zip(&maps) {
        for e in 0..part.graph.edge_count() {
            let (u, v) = part.graph.endpoints(e);
            g.add_edge(part.graph.label(e).to_string(), map[u], map[v])?;
        }
    }
    Ok(g)
}

/// Mask (over the glued edge order) of edges incident, inside their own
/// part, with any of the given (part index, part vertex) pairs.
fn edges_at(parts: &[TwistPart], targets: &[(usize, usize)]) -> u32 {
    let mut mask = 0u32;
    let mut offset = 0;
    for (p, part) in parts.iter().enumerate() {
        for e in 0..part.graph.edge_count() {
            let (u, v) = part.graph.endpoints(e);
            if targets.iter().any(|&(tp, tv)| tp == p && (u == tv || v == tv)) {
                mask |= 1 << (offset + e);
            }
        }
        offset += part.graph.edge_count();
    }
    mask
}
