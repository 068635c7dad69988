//! The α-β family: `2^(n-3)` pairwise nonisomorphic modular lattices of
//! size `n`, grown from the three-element chain.
//!
//! An α step adds a new atom below every current atom. A β step adds a new
//! atom next to the newest one, under one of its upper covers.

use std::collections::HashSet;
use std::fmt;

use crate::bits::{self, bit};
use crate::canonical::canonical_key;
use crate::error::LatticeError;
use crate::lattice::Lattice;
use crate::predicates::is_modular;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Alpha,
    Beta,
}

/// A word over {α, β}, applied left to right to the three-element chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaBetaWord(pub Vec<Step>);

impl AlphaBetaWord {
    /// The word whose steps are the bits of `code`, most significant first;
    /// a set bit is β.
    pub fn from_code(code: u64, len: usize) -> AlphaBetaWord {
        AlphaBetaWord(
            (0..len)
                .rev()
                .map(|i| if code >> i & 1 == 1 { Step::Beta } else { Step::Alpha })
                .collect(),
        )
    }

    /// Size of the resulting lattice.
    pub fn lattice_size(&self) -> usize {
        self.0.len() + 3
    }

    pub fn apply(&self) -> Result<Lattice, LatticeError> {
        self.0.iter().try_fold(Lattice::chain(3), |l, step| match step {
            Step::Alpha => Ok(alpha_step(&l)),
            Step::Beta => beta_step(&l),
        })
    }
}

impl fmt::Display for AlphaBetaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::Alpha => "a",
                Step::Beta => "b",
            })?;
        }
        Ok(())
    }
}

/// Adds a new element below all atoms; the result has exactly one atom.
pub fn alpha_step(l: &Lattice) -> Lattice {
    assert!(l.size() >= 2, "alpha step needs a lattice with distinct bounds");
    // the atoms always form a lattice-antichain
    l.with_new_atom(l.atoms())
}

/// Adds a new atom covered by `b`, the least-labelled upper cover of the
/// newest element `n-1`.
///
/// The newest element must be an atom. If it has several upper covers it must
/// also be the only atom (the lattice came from an α step); otherwise the
/// choice of `b` would matter and the lattice is outside the construction.
pub fn beta_step(l: &Lattice) -> Result<Lattice, LatticeError> {
    let n = l.size();
    if n < 3 {
        return Err(LatticeError::Unsupported(format!("beta step needs at least 3 elements, got {n}")));
    }
    let newest = n - 1;
    if l.atoms() & bit(newest) == 0 {
        return Err(LatticeError::Unsupported(format!("newest element {newest} is not an atom")));
    }
    let covers = l.upper_cover_mask(newest);
    if covers.count_ones() > 1 && l.atoms() != bit(newest) {
        return Err(LatticeError::Unsupported(format!(
            "newest element {newest} has {} covers but the lattice has {} atoms",
            covers.count_ones(),
            l.atoms().count_ones()
        )));
    }
    let b = covers.trailing_zeros() as usize;
    crate::extension::extend(l, &crate::extension::Antichain::from_elements([b]))
}

/// All `2^(n-3)` α-β lattices of size `n`, ordered by word code (α before β).
pub fn generate_alpha_beta(n: usize) -> Vec<Lattice> {
    assert!(n >= 3, "the construction starts at size 3");
    let len = n - 3;
    (0..1u64 << len)
        .map(|code| {
            AlphaBetaWord::from_code(code, len)
                .apply()
                .expect("alpha-beta words stay inside the construction")
        })
        .collect()
}

/// Checks the lower bound at size `n`: all `2^(n-3)` lattices are modular and
/// pairwise nonisomorphic, and, when `modular_count` is given, their number
/// does not exceed it.
pub fn verify_lower_bound(n: usize, modular_count: Option<u64>) -> bool {
    let family = generate_alpha_beta(n);
    let expected = 1u64 << (n - 3);
    if family.len() as u64 != expected {
        return false;
    }
    if !family.iter().all(|l| l.size() == n && is_modular(l)) {
        return false;
    }
    let keys: HashSet<String> = family.iter().map(canonical_key).collect();
    if keys.len() as u64 != expected {
        return false;
    }
    modular_count.is_none_or(|m| expected <= m)
}

/// Number of atoms covered by `b` that, together with 0 and `b`, form an
/// `M_k` sublattice (pairwise joins `b`, pairwise meets 0).
pub fn bottom_mk_width(l: &Lattice, b: usize) -> usize {
    let atoms: Vec<usize> = bits::iter(l.atoms() & l.lower_cover_mask(b)).collect();
    let ok = atoms.iter().all(|&x| {
        atoms
            .iter()
            .all(|&y| x == y || (l.join(x, y) == b && l.meet(x, y) == 0))
    });
    if ok {
        atoms.len()
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::is_modular_by_law;

    fn lat(s: &str) -> Lattice {
        s.parse().unwrap()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_step(&Lattice::chain(3)), Lattice::chain(4));
        let d = lat("4;0<2,0<3,2<1,3<1");
        let a = alpha_step(&d);
        assert_eq!(a.to_cover_list(), "5;0<4,2<1,3<1,4<2,4<3");
        assert_eq!(a.atoms().count_ones(), 1);
        assert!(is_modular(&a));
    }

    #[test]
    fn beta_examples() {
        let d = beta_step(&Lattice::chain(3)).unwrap();
        assert_eq!(d, lat("4;0<2,0<3,2<1,3<1"));
        let m3 = beta_step(&d).unwrap();
        assert_eq!(m3, lat("5;0<2,0<3,0<4,2<1,3<1,4<1"));
        assert_eq!(bottom_mk_width(&m3, 1), 3);
        assert!(beta_step(&Lattice::two()).is_err());
        // newest element not an atom
        let c = Lattice::from_covers(4, [(0, 2), (2, 3), (3, 1)]).unwrap();
        assert!(beta_step(&c).is_err());
        // newest atom with two covers while another atom exists
        let l = Lattice::from_covers(6, [(0, 5), (0, 4), (5, 2), (5, 3), (4, 3), (2, 1), (3, 1)]).unwrap();
        assert!(beta_step(&l).is_err());
    }

    #[test]
    fn beta_grows_bottom_mk() {
        for k in 1..=4 {
            let mut l = alpha_step(&Lattice::chain(3));
            for _ in 0..k {
                l = beta_step(&l).unwrap();
            }
            let b = l.upper_covers(l.size() - 1)[0];
            assert_eq!(bottom_mk_width(&l, b), k + 1);
            assert!(is_modular_by_law(&l));
        }
    }

    #[test]
    fn family_sizes() {
        assert_eq!(generate_alpha_beta(3), vec![Lattice::chain(3)]);
        assert_eq!(generate_alpha_beta(5).len(), 4);
        let ten = generate_alpha_beta(10);
        assert_eq!(ten.len(), 128);
        assert!(ten.iter().all(|l| l.size() == 10));
        assert!(verify_lower_bound(5, Some(4)));
        assert!(!verify_lower_bound(5, Some(3)));
    }

    #[test]
    fn word_codes() {
        let w = AlphaBetaWord::from_code(0b10, 2);
        assert_eq!(w.to_string(), "ba");
        assert_eq!(w.lattice_size(), 5);
    }
}
