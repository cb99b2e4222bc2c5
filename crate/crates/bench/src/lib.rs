//! Fixtures shared by the benchmark suite: the small graphs and matroids the
//! searches are exercised on.

use quasigraph_core::{BiasedGraph, Matroid, Multigraph, Signature};

/// The triangle with every edge doubled; the canonical U_{3,6} framework.
pub fn doubled_triangle() -> Multigraph {
    Multigraph::complete(3).k_multiply(2).expect("doubling a triangle")
}

/// K_4 with one negative edge.
pub fn signed_k4() -> BiasedGraph {
    let k4 = Multigraph::complete(4);
    let edges = k4.edge_mask(&["e1"]).expect("K4 labels its first edge e1");
    BiasedGraph::from_signature(k4, Signature { edges })
}

/// The cycle matroid of the rank-4 wheel.
pub fn wheel_matroid() -> Matroid {
    Matroid::from_graph(&Multigraph::wheel(4)).expect("8 edges fit the element limit")
}
