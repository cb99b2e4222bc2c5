//! Tutte connectivity from the rank function.
//!
//! The connectivity function is `lambda(X) = r(X) + r(E-X) - r(E)`.  A
//! `j`-separation is a bipartition `(X, E-X)` with both sides of size at
//! least `j` and `lambda(X) <= j-1`; the matroid is `k`-connected when no
//! `j`-separation exists for any `j < k`.  Everything here is an exhaustive
//! scan over bipartitions, which is fine for 20-element ground sets.

use super::Matroid;

/// One side of a separation, with its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    /// The smaller-or-equal side (as a mask over the ground set).
    pub side: u32,
    /// `lambda` of that side.
    pub lambda: usize,
    /// The separation order: the least `j` this bipartition witnesses.
    pub order: usize,
}

/// Summary of the exhaustive separation scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    /// Least `j` for which a `j`-separation exists, if any; the matroid is
    /// `k`-connected exactly for `k <= tutte_connectivity` when `Some`, and
    /// for every `k` when `None`.
    pub tutte_connectivity: Option<usize>,
    /// A witnessing separation of that least order.
    pub witness: Option<Separation>,
}

impl SeparationReport {
    pub fn is_k_connected(&self, k: usize) -> bool {
        match self.tutte_connectivity {
            None => true,
            Some(j) => k <= j,
        }
    }
}

impl Matroid {
    /// The connectivity function `lambda(X) = r(X) + r(E-X) - r(E)`.
    pub fn lambda(&self, mask: u32) -> usize {
        let complement = self.full_mask() & !mask;
        self.rank_of(mask) + self.rank_of(complement) - self.rank()
    }

    /// The local connectivity `r(X) + r(Y) - r(X ∪ Y)`; coincides with
    /// [`Matroid::lambda`] when `Y` is the complement of `X`.
    pub fn local_connectivity(&self, x: u32, y: u32) -> usize {
        self.rank_of(x) + self.rank_of(y) - self.rank_of(x | y)
    }

    /// Whether some bipartition with both sides of size at least `j` has
    /// `lambda <= j - 1`.
    pub fn has_j_separation(&self, j: usize) -> bool {
        self.best_separation_of_order(j).is_some()
    }

    fn best_separation_of_order(&self, j: usize) -> Option<Separation> {
        if j == 0 {
            return None;
        }
        let n = self.ground_size();
        if n < 2 * j {
            return None;
        }
        let full = self.full_mask();
        // each bipartition appears once: scan sides avoiding the top element
        for side in 0u32..(1 << (n - 1)) {
            let sizes = (side.count_ones() as usize, n - side.count_ones() as usize);
            if sizes.0 < j || sizes.1 < j {
                continue;
            }
            let lambda = self.lambda(side);
            if lambda <= j - 1 {
                let small = if sizes.0 <= sizes.1 { side } else { full & !side };
                return Some(Separation { side: small, lambda, order: j });
            }
        }
        None
    }

    /// Exhaustive Tutte connectivity scan.
    pub fn separation_report(&self) -> SeparationReport {
        let n = self.ground_size();
        for j in 1..=(n / 2) {
            if let Some(sep) = self.best_separation_of_order(j) {
                return SeparationReport { tutte_connectivity: Some(j), witness: Some(sep) };
            }
        }
        SeparationReport { tutte_connectivity: None, witness: None }
    }

    pub fn is_k_connected(&self, k: usize) -> bool {
        (1..k).all(|j| !self.has_j_separation(j))
    }
}
