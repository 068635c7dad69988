//! Automorphism groups and orbits.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::EnumError;
use crate::extension::Antichain;
use crate::lattice::Lattice;

use super::search::{level_cells, Search};

/// A permutation of the elements: `p[x]` is the image of `x`.
pub type Perm = Vec<u8>;

/// Default cap on the number of explicitly stored automorphisms.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// The automorphism group of a lattice, listed element by element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    perms: Vec<Perm>,
}

impl AutGroup {
    /// Closes a generating set under composition.
    pub fn from_generators(n: usize, generators: &[Perm], cap: usize) -> Result<AutGroup, EnumError> {
        let identity: Perm = (0..n as u8).collect();
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = compose(g, &p);
                if !seen.contains(&q) {
                    if seen.len() >= cap {
                        return Err(EnumError::GroupTooLarge { cap });
                    }
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
        }
        let mut perms: Vec<Perm> = seen.into_iter().collect();
        perms.sort();
        Ok(AutGroup { perms })
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn contains(&self, p: &[u8]) -> bool {
        self.perms.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }
}

/// `(a ∘ b)(x) = a(b(x))`.
pub fn compose(a: &[u8], b: &[u8]) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn inverse(p: &[u8]) -> Perm {
    let mut inv = vec![0u8; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y as usize] = x as u8;
    }
    inv
}

/// A generating set of the automorphism group of `l`.
pub fn automorphism_generators(l: &Lattice) -> Vec<Perm> {
    Search::new(l).run(level_cells(l)).generators
}

/// Every automorphism of `l`, failing once more than `cap` are found.
pub fn automorphisms_capped(l: &Lattice, cap: usize) -> Result<AutGroup, EnumError> {
    AutGroup::from_generators(l.size(), &automorphism_generators(l), cap)
}

/// Every automorphism of `l`, with the default cap of one million.
pub fn automorphisms(l: &Lattice) -> Result<AutGroup, EnumError> {
    automorphisms_capped(l, DEFAULT_GROUP_CAP)
}

/// Element orbits under the group generated by `generators`, as the least
/// element of each orbit.
pub fn orbits(n: usize, generators: &[Perm]) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for g in generators {
        for x in 0..n {
            uf.union(x, g[x] as usize);
        }
    }
    (0..n).map(|x| uf.find(x)).collect()
}

/// One antichain from each orbit of `Aut(L)` on `antichains`: the
/// lexicographically least member. The result is sorted.
pub fn antichain_orbit_representatives(l: &Lattice, antichains: &[Antichain]) -> Vec<Antichain> {
    orbit_representatives(&automorphism_generators(l), antichains)
}

pub(crate) fn orbit_representatives(generators: &[Perm], antichains: &[Antichain]) -> Vec<Antichain> {
    let mut sorted: Vec<Antichain> = antichains.to_vec();
    sorted.sort();
    sorted.dedup();
    if generators.is_empty() {
        return sorted;
    }
    let index: HashMap<u64, usize> = sorted.iter().enumerate().map(|(i, a)| (a.mask(), i)).collect();
    let mut uf = UnionFind::new(sorted.len());
    for (i, a) in sorted.iter().enumerate() {
        for g in generators {
            if let Some(&j) = index.get(&a.map(g).mask()) {
                uf.union(i, j);
            }
        }
    }
    // roots are the least index, hence the lexicographically least member
    sorted
        .iter()
        .enumerate()
        .filter(|&(i, _)| uf.find(i) == i)
        .map(|(_, &a)| a)
        .collect()
}

/// Union-find whose roots are always the least member of their class.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
