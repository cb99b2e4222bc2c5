//! Matroid isomorphism by backtracking on element bijections.
//!
//! Two circuit-presented matroids are isomorphic when some bijection of the
//! ground sets carries circuits onto circuits.  The search assigns elements
//! one at a time, filtering candidates by a per-element invariant (the
//! multiset of sizes of circuits through the element) and rejecting a
//! partial map as soon as a fully-mapped circuit misses.

use super::{bit_indices, Matroid};

impl Matroid {
    pub fn is_isomorphic(&self, other: &Matroid) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// An element bijection `map[self_index] = other_index` carrying the
    /// circuit family of `self` onto that of `other`, if one exists.
    pub fn find_isomorphism(&self, other: &Matroid) -> Option<Vec<usize>> {
        if self.ground_size() != other.ground_size()
            || self.rank() != other.rank()
            || self.circuits().len() != other.circuits().len()
        {
            return None;
        }
        let mut sizes_a: Vec<u32> = self.circuits().iter().map(|c| c.count_ones()).collect();
        let mut sizes_b: Vec<u32> = other.circuits().iter().map(|c| c.count_ones()).collect();
        sizes_a.sort_unstable();
        sizes_b.sort_unstable();
        if sizes_a != sizes_b {
            return None;
        }
        let profile_a = element_profiles(self);
        let profile_b = element_profiles(other);
        {
            let mut pa = profile_a.clone();
            let mut pb = profile_b.clone();
            pa.sort_unstable();
            pb.sort_unstable();
            if pa != pb {
                return None;
            }
        }
        let n = self.ground_size();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if assign(self, other, &profile_a, &profile_b, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }
}

/// For each element, the sorted list of sizes of circuits through it.
fn element_profiles(m: &Matroid) -> Vec<Vec<u32>> {
    (0..m.ground_size())
        .map(|e| {
            let mut sizes: Vec<u32> = m
                .circuits()
                .iter()
                .filter(|&&c| c & (1 << e) != 0)
                .map(|c| c.count_ones())
                .collect();
            sizes.sort_unstable();
            sizes
        })
        .collect()
}

fn assign(
    a: &Matroid,
    b: &Matroid,
    profile_a: &[Vec<u32>],
    profile_b: &[Vec<u32>],
    e: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.ground_size();
    if e == n {
        return true;
    }
    let assigned_after: u32 = ((e as u32 + 1)..n as u32).fold(0, |m, i| m | 1 << i);
    for target in 0..n {
        if used[target] || profile_a[e] != profile_b[target] {
            continue;
        }
        map[e] = target;
        used[target] = true;
        // every circuit of `a` contained in the assigned prefix must land on
        // a circuit of `b`
        let consistent = a.circuits().iter().all(|&c| {
            if c & assigned_after != 0 {
                return true;
            }
            let image = bit_indices(c).fold(0u32, |m, i| m | 1 << map[i]);
            b.is_circuit(image)
        });
        if consistent && assign(a, b, profile_a, profile_b, e + 1, map, used) {
            return true;
        }
        map[e] = usize::MAX;
        used[target] = false;
    }
    false
}
