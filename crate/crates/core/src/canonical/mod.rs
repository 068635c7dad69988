//! Isomorphism machinery: weight-based canonicity for the orderly driver,
//! canonical labelling and automorphisms for the canonical-path driver.

mod group;
mod search;

use std::cmp::Ordering;

use crate::bits::{self, bit, Mask};
use crate::lattice::Lattice;

pub use group::{
    antichain_orbit_representatives, automorphism_generators, automorphisms, automorphisms_capped, compose,
    inverse, orbits, AutGroup, Perm, DEFAULT_GROUP_CAP,
};
pub(crate) use group::orbit_representatives;

use search::{level_cells, refine, Search};

/// The weight vector `(w_2, ..., w_{n-1})` with `w_i = Σ_{i ≺ j} 2^j`,
/// compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<u64>);

pub fn weight(l: &Lattice) -> Weight {
    // the cover mask of i is exactly Σ 2^j over its covers
    Weight((2..l.size()).map(|i| l.upper_cover_mask(i)).collect())
}

/// Whether no level-preserving relabelling of `l` (fixing 0 and 1) has a
/// smaller weight. `l` must be levelized.
pub fn is_weight_canonical(l: &Lattice) -> bool {
    debug_assert!(l.is_levelized());
    let n = l.size();
    if n <= 3 {
        return true;
    }
    let mut sigma = [0u8; 64];
    sigma[1] = 1;
    let levels: Vec<Mask> = (0..=l.level_count()).map(|d| l.level_mask(d)).collect();
    !finds_smaller(l, &levels, 2, 0, &mut sigma)
}

/// Assigns `σ⁻¹(p)` for positions `p, p+1, ...` and reports whether some
/// completion gives a smaller weight than the identity.
fn finds_smaller(l: &Lattice, levels: &[Mask], p: usize, used: Mask, sigma: &mut [u8; 64]) -> bool {
    if p == l.size() {
        return false;
    }
    let target = l.upper_cover_mask(p);
    let block = levels[l.dep(p)] & !used;
    let mut tried: Vec<usize> = Vec::new();
    for x in bits::iter(block) {
        // swapping twins is an automorphism; their subtrees coincide
        if tried
            .iter()
            .any(|&t| l.upper_cover_mask(t) == l.upper_cover_mask(x) && l.lower_cover_mask(t) == l.lower_cover_mask(x))
        {
            continue;
        }
        tried.push(x);
        let value = bits::iter(l.upper_cover_mask(x)).fold(0u64, |acc, y| acc | bit(sigma[y] as usize));
        match value.cmp(&target) {
            Ordering::Less => return true,
            Ordering::Greater => continue,
            Ordering::Equal => {
                sigma[x] = p as u8;
                if finds_smaller(l, levels, p + 1, used | bit(x), sigma) {
                    return true;
                }
            }
        }
    }
    false
}

/// A canonicalising permutation: element `x` moves to `perm[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub perm: Perm,
}

impl Labeling {
    /// The element sent to position `p`.
    pub fn preimage(&self, p: usize) -> usize {
        self.perm.iter().position(|&x| x as usize == p).expect("labeling is a bijection")
    }
}

/// Canonical labelling: two lattices get the same relabelled order exactly
/// when they are isomorphic.
pub fn canonical_labeling(l: &Lattice) -> Labeling {
    let r = Search::new(l).run(level_cells(l));
    Labeling { perm: inverse(&r.order) }
}

/// The canonical relabelling of `l`.
pub fn canonical_form(l: &Lattice) -> Lattice {
    l.relabel(&canonical_labeling(l).perm)
}

/// Cover-list text of the canonical form; equal keys mean isomorphic lattices.
pub fn canonical_key(l: &Lattice) -> String {
    canonical_form(l).to_cover_list()
}

/// Outcome of the canonical-deletion test on an extension.
#[derive(Clone, Debug)]
pub(crate) struct ExtensionCheck {
    pub accepted: bool,
    /// Automorphism generators of the extension, when the test computed them.
    pub generators: Option<Vec<Perm>>,
}

/// Canonical-deletion test for the newest element `n - 1` of `ext`.
pub(crate) fn check_extension(ext: &Lattice) -> ExtensionCheck {
    let n = ext.size();
    let newest = n - 1;
    let mut cells = level_cells(ext);
    refine(ext, &mut cells);
    // the canonical victim lies in the last cell of every refinement
    let last = *cells.last().expect("partition is nonempty");
    if !bits::contains(last, newest) {
        return ExtensionCheck {
            accepted: false,
            generators: None,
        };
    }
    if last == bit(newest) {
        return ExtensionCheck {
            accepted: true,
            generators: None,
        };
    }
    let r = Search::new(ext).run(cells);
    let victim = r.order[n - 1] as usize;
    let orbit = orbits(n, &r.generators);
    ExtensionCheck {
        accepted: orbit[victim] == orbit[newest],
        generators: Some(r.generators),
    }
}

/// Whether the newest element of `ext` lies in the automorphism orbit of the
/// element that the canonical labelling places last.
pub fn is_canonical_extension(ext: &Lattice) -> bool {
    ext.size() <= 2 || check_extension(ext).accepted
}
