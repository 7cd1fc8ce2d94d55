//! Exact subset searches: the zero forcing number and the full
//! enumeration of minimal zero forcing sets.
//!
//! Both run on per-vertex adjacency bitmasks. The enumeration visits all
//! 2^n seeds, so it is gated by an explicit cap; the zero forcing number
//! dispatches to the minimum-path-cover route on forests and searches
//! subsets in increasing cardinality otherwise.

use std::collections::BTreeSet;

use crate::graph::{classify, Graph, VertexSet};
use crate::tree::minimum_path_cover;

use super::{ForcingError, SearchLimits};

/// Hard ceiling for full enumeration: the result table holds one bit per
/// subset, so memory (and time) become unreasonable beyond this even if
/// the caller raises the cap.
pub const ENUMERATION_CEILING: usize = 26;

/// Mask-based closure fixpoint for graphs on at most 64 vertices.
fn mask_closure(adj: &[u64], seed: u64) -> u64 {
    let mut blue = seed;
    loop {
        let mut changed = false;
        let mut pending = blue;
        while pending != 0 {
            let v = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            let whites = adj[v] & !blue;
            if whites != 0 && whites & whites.wrapping_sub(1) == 0 {
                blue |= whites;
                changed = true;
            }
        }
        if !changed {
            return blue;
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The zero forcing number and one witness minimum zero forcing set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZfnResult {
    pub number: usize,
    pub witness: VertexSet,
}

/// Computes Z(G) exactly. Forests go through the minimum path cover (one
/// end vertex per path is a minimum zero forcing set); other graphs search
/// subsets in increasing cardinality, which is capped.
pub fn zero_forcing_number(g: &Graph, limits: &SearchLimits) -> Result<ZfnResult, ForcingError> {
    if classify(g).is_forest() {
        let cover = minimum_path_cover(g).expect("classified as a forest");
        let witness = VertexSet::with_members(g.n(), cover.iter().map(|p| p[0]));
        return Ok(ZfnResult {
            number: cover.len(),
            witness,
        });
    }
    zfn_brute_force(g, limits.zfn_cap)
}

/// Subset search for Z(G), independent of any structural shortcut:
/// cardinalities k = 0, 1, 2, ... with lexicographic combinations inside
/// each k. The first zero forcing set found is the witness.
pub fn zfn_brute_force(g: &Graph, cap: usize) -> Result<ZfnResult, ForcingError> {
    let n = g.n();
    if n > cap.min(64) {
        return Err(ForcingError::InstanceTooLarge { n, cap: cap.min(64) });
    }
    if n == 0 {
        return Ok(ZfnResult {
            number: 0,
            witness: VertexSet::new(0),
        });
    }
    let adj = g.adjacency_masks().expect("n <= 64");
    let full = full_mask(n);
    for k in 1..=n {
        let mut found = None;
        for_each_combination(n, k, |mask| {
            if found.is_none() && mask_closure(&adj, mask) == full {
                found = Some(mask);
            }
            found.is_some()
        });
        if let Some(mask) = found {
            return Ok(ZfnResult {
                number: k,
                witness: VertexSet::from_low_mask(n, mask),
            });
        }
    }
    unreachable!("the full vertex set forces trivially");
}

/// Calls `visit` with every k-subset of {0,..,n-1} as a bitmask, in
/// lexicographic order of the sorted vertex lists. Stops early when
/// `visit` returns true.
fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &v| m | 1 << v);
        if visit(mask) {
            return;
        }
        // Advance to the next combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All minimal zero forcing sets plus the spectrum of cardinalities they
/// achieve.
#[derive(Debug, Clone)]
pub struct MinimalZfsEnumeration {
    /// Every minimal zero forcing set, ordered by cardinality and then
    /// lexicographically.
    pub sets: Vec<VertexSet>,
    /// The distinct cardinalities among minimal sets. A graph is
    /// well-forced exactly when this is a singleton.
    pub spectrum: BTreeSet<usize>,
}

impl MinimalZfsEnumeration {
    /// A smallest and a largest minimal set; the sets are sorted by
    /// cardinality, so these are the first and last entries.
    pub fn extremes(&self) -> Option<(&VertexSet, &VertexSet)> {
        Some((self.sets.first()?, self.sets.last()?))
    }
}

/// One bit per subset of V(G): whether that seed forces the whole graph.
/// Shared by the enumeration and by verification checks that quantify
/// over all zero forcing sets.
pub(crate) fn zfs_mask_table(g: &Graph, cap: usize) -> Result<Vec<u64>, ForcingError> {
    let n = g.n();
    let effective_cap = cap.min(ENUMERATION_CEILING);
    if n > effective_cap {
        return Err(ForcingError::InstanceTooLarge {
            n,
            cap: effective_cap,
        });
    }
    let adj = g.adjacency_masks().expect("n <= 64");
    let full = full_mask(n);
    let total: usize = 1 << n;
    let mut table = vec![0u64; total.div_ceil(64)];
    for mask in 0..total as u64 {
        if mask_closure(&adj, mask) == full {
            table[mask as usize / 64] |= 1 << (mask % 64);
        }
    }
    Ok(table)
}

/// Enumerates exactly the subsets that are minimal zero forcing sets, by
/// testing every seed against the closure and keeping the sets from which
/// no single vertex can be dropped.
pub fn enumerate_minimal_zfs(g: &Graph, cap: usize) -> Result<MinimalZfsEnumeration, ForcingError> {
    let n = g.n();
    let zfs_table = zfs_mask_table(g, cap)?;
    let total: usize = 1 << n;
    let is_zfs_mask = |m: u64| zfs_table[m as usize / 64] >> (m % 64) & 1 == 1;

    let mut sets = Vec::new();
    let mut spectrum = BTreeSet::new();
    for mask in 0..total as u64 {
        if !is_zfs_mask(mask) {
            continue;
        }
        let mut bits = mask;
        let mut minimal = true;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if is_zfs_mask(mask ^ low) {
                minimal = false;
                break;
            }
            bits ^= low;
        }
        if minimal {
            spectrum.insert(mask.count_ones() as usize);
            sets.push(VertexSet::from_low_mask(n, mask));
        }
    }
    sets.sort_by_key(|s| (s.card(), s.to_vec()));
    Ok(MinimalZfsEnumeration { sets, spectrum })
}
