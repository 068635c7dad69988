//! One-element extensions: lattice-antichains, the atom extension `L^A`, and
//! the filters that decide which extensions the search explores.
//!
//! Every filter here is a statement about levels, covers, joins and meets, so
//! each one is invariant under automorphisms of the host lattice. The
//! canonical-path driver relies on that when it picks one antichain per orbit.

use std::cmp::Ordering;
use std::fmt;

use crate::bits::{self, bit, Mask, MAX_ELEMENTS};
use crate::error::LatticeError;
use crate::lattice::Lattice;

/// Which family of lattices is being generated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeClass {
    All,
    Semimodular,
    Modular,
}

impl LatticeClass {
    pub const ALL: [LatticeClass; 3] = [LatticeClass::All, LatticeClass::Semimodular, LatticeClass::Modular];

    /// Whether `l` belongs to the class.
    pub fn contains(self, l: &Lattice) -> bool {
        match self {
            LatticeClass::All => true,
            LatticeClass::Semimodular => crate::predicates::is_semimodular(l),
            LatticeClass::Modular => crate::predicates::is_modular(l),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LatticeClass::All => "all",
            LatticeClass::Semimodular => "semimodular",
            LatticeClass::Modular => "modular",
        }
    }
}

impl fmt::Display for LatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A nonempty antichain of nonzero elements, stored as a mask.
///
/// Antichains order lexicographically by their sorted element lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Antichain(Mask);

impl Antichain {
    pub fn from_mask(mask: Mask) -> Antichain {
        Antichain(mask)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(items: I) -> Antichain {
        Antichain(bits::from_iter(items))
    }

    #[inline]
    pub fn mask(self) -> Mask {
        self.0
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        bits::iter(self.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Image under a permutation of the elements.
    pub fn map(self, perm: &[u8]) -> Antichain {
        Antichain(bits::iter(self.0).fold(0, |acc, x| acc | bit(perm[x] as usize)))
    }
}

impl Ord for Antichain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements().cmp(other.elements())
    }
}

impl PartialOrd for Antichain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

/// Which filters are active when choosing extensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FilterProfile {
    pub class: LatticeClass,
    pub vi_only: bool,
    /// The extension produces a lattice of the target size.
    pub last_step: bool,
}

impl FilterProfile {
    pub fn new(class: LatticeClass) -> FilterProfile {
        FilterProfile {
            class,
            vi_only: false,
            last_step: false,
        }
    }
}

/// Whether `A` is a lattice-antichain of `L`: a nonempty antichain of nonzero
/// elements such that every meet of two elements of `↑A` lies in `{0} ∪ ↑A`.
pub fn is_lattice_antichain(l: &Lattice, a: Mask) -> bool {
    if a == 0 || bits::contains(a, 0) || a & !bits::full(l.size()) != 0 {
        return false;
    }
    if bits::iter(a).any(|x| l.up_set(x) & a != bit(x)) {
        return false;
    }
    closure_holds(l, l.up_closure(a))
}

/// `U` is an up-set containing the top. The condition fails exactly when some
/// nonzero `x` outside `U` is the meet of the elements of `U` above it.
#[inline]
fn closure_holds(l: &Lattice, up: Mask) -> bool {
    let outside = bits::full(l.size()) & !up & !bit(0);
    for x in bits::iter(outside) {
        let above = up & l.up_set(x);
        let mut common = Mask::MAX;
        for s in bits::iter(above) {
            common &= l.down_set(s);
        }
        if common & l.up_set(x) == bit(x) {
            return false;
        }
    }
    true
}

/// All lattice-antichains of `L`, in lexicographic order.
pub fn lattice_antichains(l: &Lattice) -> Vec<Antichain> {
    let mut out = Vec::new();
    let candidates = bits::full(l.size()) & !bit(0);
    grow_all(l, 0, candidates, &mut |a| {
        if closure_holds(l, l.up_closure(a)) {
            out.push(Antichain(a));
        }
    });
    out
}

/// Depth-first growth of antichains: `chosen` is extended by members of
/// `allowed` (all incomparable with `chosen`) in increasing order.
fn grow_all(l: &Lattice, chosen: Mask, allowed: Mask, visit: &mut impl FnMut(Mask)) {
    for x in bits::iter(allowed) {
        let next = chosen | bit(x);
        visit(next);
        let comparable = l.up_set(x) | l.down_set(x);
        let rest = allowed & !bits::full(x + 1) & !comparable;
        if rest != 0 {
            grow_all(l, next, rest, visit);
        }
    }
}

/// Adds a new atom labelled `n` whose upper covers are exactly `A`.
pub fn extend(l: &Lattice, a: &Antichain) -> Result<Lattice, LatticeError> {
    if l.size() >= MAX_ELEMENTS {
        return Err(LatticeError::TooLarge(l.size() + 1));
    }
    if !is_lattice_antichain(l, a.mask()) {
        return Err(LatticeError::NotLatticeAntichain(format!("{a:?}")));
    }
    Ok(l.with_new_atom(a.mask()))
}

/// Bottom level and the one above it, `(lev_k, lev_{k-1})`.
fn bottom_levels(l: &Lattice) -> (Mask, Mask) {
    let k = l.level_count();
    (l.level_mask(k), if k >= 1 { l.level_mask(k - 1) } else { 0 })
}

/// `A` meets one of the two bottom levels, which is exactly when `L^A` stays
/// levelized.
pub fn filter_levelized(l: &Lattice, a: &Antichain) -> bool {
    let (bottom, second) = bottom_levels(l);
    a.mask() & (bottom | second) != 0
}

/// A1: `A` lies inside one of the two bottom levels.
pub fn filter_a1(l: &Lattice, a: &Antichain) -> bool {
    let (bottom, second) = bottom_levels(l);
    a.mask() & !bottom == 0 || a.mask() & !second == 0
}

/// A2: if `A ⊆ lev_k` then `lev_{k-1}` holds no atom.
pub fn filter_a2(l: &Lattice, a: &Antichain) -> bool {
    let (bottom, second) = bottom_levels(l);
    a.mask() & !bottom != 0 || second & l.atoms() == 0
}

/// A3: every two elements of `A` have a common upper cover.
pub fn filter_a3(l: &Lattice, a: &Antichain) -> bool {
    let m = a.mask();
    bits::iter(m).all(|x| bits::iter(m & !bits::full(x + 1)).all(|y| l.upper_cover_mask(x) & l.upper_cover_mask(y) != 0))
}

/// Lower semimodularity restricted to pairs inside `level`.
fn level_lower_semimodular(l: &Lattice, level: Mask) -> bool {
    bits::iter(level).all(|x| {
        bits::iter(level & !bits::full(x + 1)).all(|y| {
            let j = l.join(x, y);
            if !(l.covers(x, j) && l.covers(y, j)) {
                return true;
            }
            let m = l.meet(x, y);
            l.covers(m, x) && l.covers(m, y)
        })
    })
}

/// A4: if `A ⊆ lev_k` then `lev_{k-1}` satisfies lower semimodularity.
pub fn filter_a4(l: &Lattice, a: &Antichain) -> bool {
    let (bottom, second) = bottom_levels(l);
    a.mask() & !bottom != 0 || level_lower_semimodular(l, second)
}

/// At the final step only `A ⊆ lev_{k-1}` or `A = lev_k` can give a modular
/// lattice.
pub fn filter_last_step(l: &Lattice, a: &Antichain, target_reached: bool) -> bool {
    if !target_reached {
        return true;
    }
    let (bottom, second) = bottom_levels(l);
    a.mask() & !second == 0 || a.mask() == bottom
}

/// Rejects `A = lev_k` when the bottom level is the unique atom of `L` and
/// not its top: every descendant of that extension is vertically
/// decomposable.
pub fn filter_vi(l: &Lattice, a: &Antichain) -> bool {
    let (bottom, _) = bottom_levels(l);
    !(vi_blocked(l, bottom) && a.mask() == bottom)
}

fn vi_blocked(l: &Lattice, bottom: Mask) -> bool {
    bottom.count_ones() == 1 && l.atoms() == bottom && bottom != bit(1)
}

/// Whether `A` passes every filter selected by `profile`.
pub fn admissible(l: &Lattice, a: &Antichain, profile: &FilterProfile) -> bool {
    if !filter_levelized(l, a) {
        return false;
    }
    if profile.class != LatticeClass::All && !(filter_a1(l, a) && filter_a2(l, a) && filter_a3(l, a)) {
        return false;
    }
    if profile.class == LatticeClass::Modular && !(filter_a4(l, a) && filter_last_step(l, a, profile.last_step)) {
        return false;
    }
    !profile.vi_only || filter_vi(l, a)
}

/// The lattice-antichains of `L` that pass the filters of `profile`, in
/// lexicographic order. Equal to `lattice_antichains(L)` filtered by
/// [`admissible`], but candidates are grown inside the permitted levels.
pub fn admissible_antichains(l: &Lattice, profile: &FilterProfile) -> Vec<Antichain> {
    let mut out = Vec::new();
    for_each_admissible(l, profile, |a| out.push(a));
    out.sort();
    out
}

pub(crate) fn for_each_admissible(l: &Lattice, profile: &FilterProfile, mut visit: impl FnMut(Antichain)) {
    if l.size() < 2 {
        return;
    }
    let (bottom, second) = bottom_levels(l);
    let vi_blocked = profile.vi_only && vi_blocked(l, bottom);
    let mut emit = |a: Mask| {
        if vi_blocked && a == bottom {
            return;
        }
        if closure_holds(l, l.up_closure(a)) {
            visit(Antichain(a));
        }
    };

    if profile.class == LatticeClass::All {
        let low = bottom | second;
        let candidates = bits::full(l.size()) & !bit(0);
        grow_levelized(l, 0, candidates, low, &mut emit);
        return;
    }

    // Elements of one level are pairwise incomparable, so every subset is an
    // antichain; only the common-cover condition constrains the growth.
    let modular = profile.class == LatticeClass::Modular;
    let second_allowed = second != 0;
    let bottom_allowed = second & l.atoms() == 0 && (!modular || level_lower_semimodular(l, second));
    let last = modular && profile.last_step;
    if second_allowed && second != bottom {
        grow_common_cover(l, 0, second, &mut emit);
    }
    if bottom_allowed {
        if last {
            if filter_a3(l, &Antichain(bottom)) {
                emit(bottom);
            }
        } else {
            grow_common_cover(l, 0, bottom, &mut emit);
        }
    }
}

/// Antichains that meet `low`, grown in increasing element order.
fn grow_levelized(l: &Lattice, chosen: Mask, allowed: Mask, low: Mask, visit: &mut impl FnMut(Mask)) {
    for x in bits::iter(allowed) {
        let next = chosen | bit(x);
        let comparable = l.up_set(x) | l.down_set(x);
        let rest = allowed & !bits::full(x + 1) & !comparable;
        if next & low != 0 {
            visit(next);
        } else if rest & low == 0 {
            // no way left to reach the bottom two levels from here
            continue;
        }
        if rest != 0 {
            grow_levelized(l, next, rest, low, visit);
        }
    }
}

/// Subsets of `allowed` (pairwise incomparable) whose members pairwise share
/// an upper cover.
fn grow_common_cover(l: &Lattice, chosen: Mask, allowed: Mask, visit: &mut impl FnMut(Mask)) {
    for x in bits::iter(allowed) {
        let next = chosen | bit(x);
        visit(next);
        let mut rest = allowed & !bits::full(x + 1);
        let ux = l.upper_cover_mask(x);
        for y in bits::iter(rest) {
            if l.upper_cover_mask(y) & ux == 0 {
                rest &= !bit(y);
            }
        }
        if rest != 0 {
            grow_common_cover(l, next, rest, visit);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(s: &str) -> Lattice {
        s.parse().unwrap()
    }

    fn ac(items: &[usize]) -> Antichain {
        Antichain::from_elements(items.iter().copied())
    }

    fn diamond() -> Lattice {
        lat("4;0<2,0<3,2<1,3<1")
    }

    fn pentagon() -> Lattice {
        Lattice::from_covers(5, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 1)]).unwrap()
    }

    fn hexagon() -> Lattice {
        Lattice::from_covers(6, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)]).unwrap()
    }

    #[test]
    fn antichains_of_small_lattices() {
        assert_eq!(lattice_antichains(&Lattice::two()), vec![ac(&[1])]);
        assert_eq!(
            lattice_antichains(&diamond()),
            vec![ac(&[1]), ac(&[2]), ac(&[2, 3]), ac(&[3])]
        );
        let p = lattice_antichains(&pentagon());
        assert!(p.contains(&ac(&[3, 4])));
        assert!(p.contains(&ac(&[2, 4])));
    }

    #[test]
    fn antichain_order_is_lexicographic() {
        let mut v = vec![ac(&[3]), ac(&[2, 3]), ac(&[1]), ac(&[2])];
        v.sort();
        assert_eq!(v, vec![ac(&[1]), ac(&[2]), ac(&[2, 3]), ac(&[3])]);
    }

    #[test]
    fn extend_examples() {
        let c3 = Lattice::chain(3);
        assert_eq!(extend(&c3, &ac(&[2])).unwrap(), Lattice::chain(4));
        assert_eq!(extend(&c3, &ac(&[1])).unwrap(), diamond());
        let e = extend(&diamond(), &ac(&[2, 3])).unwrap();
        assert_eq!(e.to_cover_list(), "5;0<4,2<1,3<1,4<2,4<3");
        assert!(extend(&diamond(), &ac(&[0])).is_err());
        assert!(extend(&c3, &ac(&[1, 2])).is_err());
    }

    #[test]
    fn non_lattice_antichain_rejected() {
        // a hexagon over the extra element 6
        let l = Lattice::from_covers(
            7,
            [(0, 6), (6, 2), (6, 4), (2, 3), (4, 5), (3, 1), (5, 1)],
        )
        .unwrap();
        // 3∧5 = 6 which is outside {0} ∪ ↑{3,5}
        assert!(!is_lattice_antichain(&l, ac(&[3, 5]).mask()));
        assert!(extend(&l, &ac(&[3, 5])).is_err());
        // 2∧4 = 6 as well
        assert!(!is_lattice_antichain(&l, ac(&[2, 4]).mask()));
        assert!(is_lattice_antichain(&l, ac(&[2]).mask()));
        assert!(is_lattice_antichain(&l, ac(&[6]).mask()));
    }

    #[test]
    fn levelized_filter() {
        let c4 = Lattice::chain(4);
        assert!(filter_levelized(&c4, &ac(&[3])));
        assert!(!filter_levelized(&c4, &ac(&[1])));
    }

    #[test]
    fn a1_a2() {
        let p = pentagon();
        assert!(filter_a1(&p, &ac(&[2])));
        assert!(filter_a1(&p, &ac(&[3, 4])));
        assert!(!filter_a1(&p, &ac(&[2, 4])));
        assert!(!filter_a2(&p, &ac(&[2])));
        assert!(filter_a2(&p, &ac(&[3, 4])));
        assert!(filter_a2(&diamond(), &ac(&[2, 3])));
        assert!(filter_a1(&Lattice::chain(5), &ac(&[4])));
    }

    #[test]
    fn a3() {
        assert!(filter_a3(&diamond(), &ac(&[2])));
        assert!(filter_a3(&diamond(), &ac(&[2, 3])));
        let h = hexagon();
        assert!(filter_a3(&h, &ac(&[3, 5])));
        assert!(!filter_a3(&h, &ac(&[2, 4])));
    }

    #[test]
    fn a4() {
        assert!(filter_a4(&diamond(), &ac(&[2, 3])));
        let h = hexagon();
        assert!(filter_a4(&h, &ac(&[3])));
        // hexagon plus 6 below 3: lev_2 = {3,5} with 3∨5 = 1 covering both,
        // but 3∧5 = 0 covered by neither
        let l = Lattice::from_covers(
            7,
            [(0, 2), (0, 4), (0, 6), (2, 3), (6, 3), (4, 5), (3, 1), (5, 1)],
        )
        .unwrap();
        assert_eq!(l.level_mask(2), bit(3) | bit(5));
        assert!(!filter_a4(&l, &ac(&[2])));
        assert!(filter_a4(&l, &ac(&[3])));
    }

    #[test]
    fn last_step() {
        let d = diamond();
        assert!(!filter_last_step(&d, &ac(&[2]), true));
        assert!(filter_last_step(&d, &ac(&[2, 3]), true));
        assert!(filter_last_step(&d, &ac(&[1]), true));
        assert!(filter_last_step(&d, &ac(&[2]), false));
    }

    #[test]
    fn vi_rule() {
        let c3 = Lattice::chain(3);
        assert!(!filter_vi(&c3, &ac(&[2])));
        assert!(filter_vi(&Lattice::two(), &ac(&[1])));
        assert!(filter_vi(&c3, &ac(&[1])));
        assert!(filter_vi(&diamond(), &ac(&[2, 3])));
    }

    #[test]
    fn admissible_matches_filtered_list() {
        let all = FilterProfile::new(LatticeClass::All);
        assert_eq!(admissible_antichains(&diamond(), &all), lattice_antichains(&diamond()));

        let p = pentagon();
        let modular = FilterProfile::new(LatticeClass::Modular);
        let got = admissible_antichains(&p, &modular);
        assert!(!got.contains(&ac(&[2])));
        assert!(got.contains(&ac(&[3, 4])));

        let last = FilterProfile {
            last_step: true,
            ..modular
        };
        assert_eq!(admissible_antichains(&diamond(), &last), vec![ac(&[1]), ac(&[2, 3])]);
    }
}
