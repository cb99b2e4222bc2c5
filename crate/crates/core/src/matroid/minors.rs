//! Minor containment and the graphicness test.
//!
//! A minor `M/I\D` can always be reached by contracting an independent set,
//! so the search walks independent sets of the right size, then restricts
//! to every candidate ground set and compares up to isomorphism.

use super::{bit_indices, Matroid, MatroidError};

/// Largest ground set the excluded-minor graphicness test accepts; the two
/// bond-matroid minors alone need ten elements, and the subset walks grow
/// quickly past this.
pub const GRAPHIC_TEST_LIMIT: usize = 12;

impl Matroid {
    /// Whether `target` is isomorphic to a minor of `self`.
    pub fn has_minor(&self, target: &Matroid) -> bool {
        self.find_minor(target).is_some()
    }

    /// A witness `(contract, delete)` pair of element masks, both addressed
    /// in `self`'s element positions, such that `self.minor(contract,
    /// delete)` is isomorphic to `target`.
    pub fn find_minor(&self, target: &Matroid) -> Option<(u32, u32)> {
        let n = self.ground_size();
        let nt = target.ground_size();
        if nt > n || target.rank() > self.rank() {
            return None;
        }
        let contract_size = self.rank() - target.rank();
        if n - nt < contract_size {
            return None;
        }
        let mut contracts = Vec::new();
        independent_sets_of_size(self, contract_size, &mut contracts);
        for contract in contracts {
            let reduced = self.contract(contract);
            debug_assert_eq!(reduced.rank(), target.rank());
            // choose which elements survive
            let m = reduced.ground_size();
            let mut keep_sets = Vec::new();
            subsets_of_size(m, nt, &mut keep_sets);
            for keep in keep_sets {
                let candidate = reduced.restrict(keep);
                if candidate.is_isomorphic(target) {
                    let keep_original = expand_mask(keep, self.full_mask() & !contract);
                    let delete = self.full_mask() & !contract & !keep_original;
                    return Some((contract, delete));
                }
            }
        }
        None
    }

    /// The minor obtained by contracting `contract` and deleting `delete`,
    /// with both masks addressed in `self`'s element positions.
    ///
    /// `contract` and `delete` must be disjoint. This exists because
    /// `self.contract(c)` renumbers the surviving elements, so a delete mask
    /// computed against `self` cannot be passed to the contracted matroid
    /// directly.
    pub fn minor(&self, contract: u32, delete: u32) -> Matroid {
        debug_assert_eq!(contract & delete, 0, "contract and delete overlap");
        let contracted = self.contract(contract);
        let survivors = self.full_mask() & !contract;
        contracted.delete(compress_mask(delete, survivors))
    }

    /// Tutte's excluded-minor characterization: a matroid is graphic exactly
    /// when it has no minor among U_{2,4}, the Fano plane, its dual, and the
    /// bond matroids of K5 and K_{3,3}.
    pub fn is_graphic(&self) -> Result<bool, MatroidError> {
        if self.ground_size() > GRAPHIC_TEST_LIMIT {
            return Err(MatroidError::TooLargeForGraphicTest {
                size: self.ground_size(),
                limit: GRAPHIC_TEST_LIMIT,
            });
        }
        let excluded = [
            Matroid::uniform(2, 4),
            Matroid::fano(),
            Matroid::fano_dual(),
            Matroid::k5_bond(),
            Matroid::k33_bond(),
        ];
        Ok(excluded.iter().all(|x| !self.has_minor(x)))
    }

    /// Tutte's excluded-minor characterization of binary matroids: no
    /// U_{2,4} minor.
    pub fn is_binary(&self) -> Result<bool, MatroidError> {
        if self.ground_size() > GRAPHIC_TEST_LIMIT {
            return Err(MatroidError::TooLargeForGraphicTest {
                size: self.ground_size(),
                limit: GRAPHIC_TEST_LIMIT,
            });
        }
        Ok(!self.has_minor(&Matroid::uniform(2, 4)))
    }
}

fn independent_sets_of_size(m: &Matroid, size: usize, out: &mut Vec<u32>) {
    fn walk(m: &Matroid, set: u32, next: usize, left: usize, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(set);
            return;
        }
        for e in next..m.ground_size() {
            let candidate = set | 1 << e;
            if m.is_independent(candidate) {
                walk(m, candidate, e + 1, left - 1, out);
            }
        }
    }
    walk(m, 0, 0, size, out);
}

fn subsets_of_size(n: usize, size: usize, out: &mut Vec<u32>) {
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    for mask in 0u32..=full {
        if mask.count_ones() as usize == size {
            out.push(mask);
        }
    }
}

/// Inverse of [`expand_mask`]: gathers the bits of `mask` that sit on set
/// positions of `slots` down into a dense low-order mask.
fn compress_mask(mask: u32, slots: u32) -> u32 {
    bit_indices(slots)
        .enumerate()
        .filter(|(_, slot)| mask & (1 << slot) != 0)
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Spreads a mask over positions of `slots` (ascending): bit `i` of `mask`
/// lands on the `i`-th set bit of `slots`.
fn expand_mask(mask: u32, slots: u32) -> u32 {
    bit_indices(slots)
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .fold(0, |m, (_, slot)| m | 1 << slot)
}
