//! Biased graphs: a multigraph together with a list of balanced cycles
//! satisfying the theta property (no theta subgraph has exactly two balanced
//! cycles).  Cycles not in the list are unbalanced.

mod balancing;
mod blocking;
mod matroids;
mod signature;

pub use signature::Signature;

use crate::graph::{CycleSubgraph, Multigraph, Theta};
use crate::matroid::Matroid;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BiasError {
    #[error("edge set {0:#b} is not a cycle of the graph")]
    NotACycle(u32),
    #[error("theta with branch vertices {u} and {v} has exactly two balanced cycles")]
    ThetaViolation { u: usize, v: usize },
    #[error("graph edge labels do not match the matroid elements")]
    LabelMismatch,
    #[error("cycle {0:#b} is neither a circuit of the matroid nor independent")]
    InconsistentCycle(u32),
    #[error("vertex {0} is not a blocking vertex")]
    NotBlocking(usize),
    #[error("deleting vertex {0} disconnects the graph")]
    DeletionDisconnects(usize),
    #[error("no signature reproduces the balanced cycles")]
    NoSignature,
    #[error("the standard partition has {0} classes, the split needs exactly 2")]
    SplitNeedsTwoClasses(usize),
    #[error(transparent)]
    Matroid(#[from] crate::matroid::MatroidError),
}

/// A multigraph with a distinguished family of balanced cycles.
#[derive(Debug, Clone)]
pub struct BiasedGraph {
    graph: Multigraph,
    cycles: Vec<CycleSubgraph>,
    thetas: Vec<Theta>,
    balanced: Vec<bool>,
}

impl BiasedGraph {
    /// Declares exactly the given cycles balanced, then checks the theta
    /// property.
    pub fn new(graph: Multigraph, balanced_cycles: &[u32]) -> Result<BiasedGraph, BiasError> {
        let cycles = graph.all_cycles();
        let mut balanced = vec![false; cycles.len()];
        for &mask in balanced_cycles {
            let i = cycles
                .iter()
                .position(|c| c.edges == mask)
                .ok_or(BiasError::NotACycle(mask))?;
            balanced[i] = true;
        }
        let thetas = graph.all_thetas();
        let bg = BiasedGraph { graph, cycles, thetas, balanced };
        bg.check_theta_property()?;
        Ok(bg)
    }

    /// Every cycle balanced; this is how an ordinary graph embeds.
    pub fn balanced(graph: Multigraph) -> BiasedGraph {
        let cycles = graph.all_cycles();
        let thetas = graph.all_thetas();
        let balanced = vec![true; cycles.len()];
        BiasedGraph { graph, cycles, thetas, balanced }
    }

    /// No cycle balanced (contrabalanced).
    pub fn contrabalanced(graph: Multigraph) -> BiasedGraph {
        let cycles = graph.all_cycles();
        let thetas = graph.all_thetas();
        let balanced = vec![false; cycles.len()];
        BiasedGraph { graph, cycles, thetas, balanced }
    }

    /// Balanced cycles are those meeting the signature evenly.  The theta
    /// property holds automatically for these.
    pub fn from_signature(graph: Multigraph, signature: Signature) -> BiasedGraph {
        let cycles = graph.all_cycles();
        let thetas = graph.all_thetas();
        let balanced = cycles
            .iter()
            .map(|c| (c.edges & signature.edges).count_ones() % 2 == 0)
            .collect();
        BiasedGraph { graph, cycles, thetas, balanced }
    }

    /// The bias a matroid induces on a graph sharing its element names: a
    /// cycle is balanced when its edge set is a circuit.  Fails if some
    /// cycle is neither a circuit nor independent, or if the resulting
    /// family breaks the theta property.
    pub fn derived(graph: Multigraph, matroid: &Matroid) -> Result<BiasedGraph, BiasError> {
        let perm = element_permutation(&graph, matroid).ok_or(BiasError::LabelMismatch)?;
        let cycles = graph.all_cycles();
        let thetas = graph.all_thetas();
        let mut balanced = Vec::with_capacity(cycles.len());
        for c in &cycles {
            let mask = translate_mask(c.edges, &perm);
            if matroid.is_circuit(mask) {
                balanced.push(true);
            } else if matroid.is_independent(mask) {
                balanced.push(false);
            } else {
                return Err(BiasError::InconsistentCycle(c.edges));
            }
        }
        let bg = BiasedGraph { graph, cycles, thetas, balanced };
        bg.check_theta_property()?;
        Ok(bg)
    }

    fn check_theta_property(&self) -> Result<(), BiasError> {
        for theta in &self.thetas {
            let balanced_count = theta
                .cycles()
                .iter()
                .filter(|c| self.is_balanced_cycle(c.edges) == Some(true))
                .count();
            if balanced_count == 2 {
                return Err(BiasError::ThetaViolation { u: theta.branch.0, v: theta.branch.1 });
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn cycles(&self) -> &[CycleSubgraph] {
        &self.cycles
    }

    pub fn thetas(&self) -> &[Theta] {
        &self.thetas
    }

    /// `Some(true)` / `Some(false)` for a cycle, `None` for a non-cycle.
    pub fn is_balanced_cycle(&self, mask: u32) -> Option<bool> {
        self.cycles
            .iter()
            .position(|c| c.edges == mask)
            .map(|i| self.balanced[i])
    }

    pub fn balanced_cycles(&self) -> impl Iterator<Item = CycleSubgraph> + '_ {
        self.cycles
            .iter()
            .zip(&self.balanced)
            .filter(|(_, &b)| b)
            .map(|(c, _)| *c)
    }

    pub fn unbalanced_cycles(&self) -> impl Iterator<Item = CycleSubgraph> + '_ {
        self.cycles
            .iter()
            .zip(&self.balanced)
            .filter(|(_, &b)| !b)
            .map(|(c, _)| *c)
    }

    /// A subgraph is balanced when every cycle inside it is balanced.
    pub fn is_balanced_subgraph(&self, edge_mask: u32) -> bool {
        self.cycles
            .iter()
            .zip(&self.balanced)
            .all(|(c, &b)| b || c.edges & edge_mask != c.edges)
    }

    pub fn is_balanced(&self) -> bool {
        self.balanced.iter().all(|&b| b)
    }

    pub fn is_contrabalanced(&self) -> bool {
        self.balanced.iter().all(|&b| !b)
    }

    /// A theta none of whose three cycles is balanced, if present.
    pub fn contrabalanced_theta(&self) -> Option<&Theta> {
        self.thetas.iter().find(|t| {
            t.cycles()
                .iter()
                .all(|c| self.is_balanced_cycle(c.edges) == Some(false))
        })
    }

    /// Translates this graph's edge masks into masks over the matroid's
    /// element order, when the label sets agree.
    pub fn element_permutation(&self, matroid: &Matroid) -> Option<Vec<usize>> {
        element_permutation(&self.graph, matroid)
    }
}

/// `perm[edge_index] = element_index`, defined when labels match exactly.
pub(crate) fn element_permutation(graph: &Multigraph, matroid: &Matroid) -> Option<Vec<usize>> {
    if graph.edge_count() != matroid.ground_size() {
        return None;
    }
    (0..graph.edge_count())
        .map(|e| matroid.element_index(graph.label(e)))
        .collect()
}

pub(crate) fn translate_mask(mask: u32, perm: &[usize]) -> u32 {
    perm.iter()
        .enumerate()
        .filter(|(e, _)| mask & (1 << e) != 0)
        .fold(0, |m, (_, &i)| m | 1 << i)
}
