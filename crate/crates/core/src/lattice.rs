//! Finite lattices on the labels `0..n`, with `0` the bottom and `1` the top.
//!
//! The order is kept as one up-set and one down-set bitmask per element, and
//! the cover relation (its transitive reduction) as upper/lower cover masks.
//! Joins and meets are read off the bitsets on demand.

use std::fmt;
use std::str::FromStr;

use crate::bits::{self, bit, Mask, MAX_ELEMENTS};
use crate::error::LatticeError;

/// A finite lattice with elements `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    n: usize,
    /// `up[a]` holds every `b` with `a <= b`.
    up: Vec<Mask>,
    /// `down[b]` holds every `a` with `a <= b`.
    down: Vec<Mask>,
    upper: Vec<Mask>,
    lower: Vec<Mask>,
    /// Level index of each element; `dep[0] == 0` since the bottom is not levelled.
    dep: Vec<u8>,
}

/// The level structure of a lattice: `blocks[m]` holds the elements of the
/// `(m+1)`-th level, obtained by repeatedly peeling the maximal elements of
/// `L \ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPartition {
    dep: Vec<usize>,
    blocks: Vec<Mask>,
}

impl LevelPartition {
    /// Level number of `p` (1-based). Returns 0 for the bottom element.
    pub fn dep(&self, p: usize) -> usize {
        self.dep[p]
    }

    /// Number of levels `k`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Level `m` as a mask, 1-based; level 0 and levels past `k` are empty.
    pub fn level(&self, m: usize) -> Mask {
        if m == 0 || m > self.blocks.len() {
            0
        } else {
            self.blocks[m - 1]
        }
    }

    /// The bottom level `lev_k`.
    pub fn bottom(&self) -> Mask {
        self.level(self.len())
    }

    /// The level directly above the bottom, `lev_{k-1}`.
    pub fn second_bottom(&self) -> Mask {
        self.level(self.len().wrapping_sub(1))
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    /// The levels as sorted element lists.
    pub fn block_lists(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|&b| bits::iter(b).collect())
            .collect()
    }
}

impl Lattice {
    /// The one-element lattice.
    pub fn trivial() -> Lattice {
        Lattice {
            n: 1,
            up: vec![1],
            down: vec![1],
            upper: vec![0],
            lower: vec![0],
            dep: vec![0],
        }
    }

    /// The two-element lattice `0 < 1`.
    pub fn two() -> Lattice {
        Lattice::chain(2)
    }

    /// The `n`-element chain labelled `0 < n-1 < n-2 < ... < 2 < 1`, which is
    /// the levelled labelling.
    pub fn chain(n: usize) -> Lattice {
        assert!((1..=MAX_ELEMENTS).contains(&n));
        if n == 1 {
            return Lattice::trivial();
        }
        // rank 0 is the bottom, rank n-1 the top
        let label = |rank: usize| -> usize {
            match rank {
                0 => 0,
                r if r == n - 1 => 1,
                r => n - r,
            }
        };
        let covers = (0..n - 1).map(|r| (label(r), label(r + 1)));
        Lattice::from_covers(n, covers).expect("chains are lattices")
    }

    /// Checks that `leq` is the order relation of a lattice with bottom 0 and
    /// top 1 and builds it.
    pub fn from_relation(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Lattice, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeError::TooLarge(n));
        }
        let mut up = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    up[a] |= bit(b);
                }
            }
        }
        let mut down = vec![0; n];
        for a in 0..n {
            for b in bits::iter(up[a]) {
                down[b] |= bit(a);
            }
        }
        for a in 0..n {
            if !bits::contains(up[a], a) {
                return Err(LatticeError::NotReflexive(a));
            }
        }
        for a in 0..n {
            for b in bits::iter(up[a]) {
                if b != a && bits::contains(up[b], a) {
                    return Err(LatticeError::NotAntisymmetric(a.min(b), a.max(b)));
                }
            }
        }
        for a in 0..n {
            for b in bits::iter(up[a]) {
                let missing = up[b] & !up[a];
                if missing != 0 {
                    return Err(LatticeError::NotTransitive(a, b, missing.trailing_zeros() as usize));
                }
            }
        }
        let all = bits::full(n);
        if up[0] != all {
            let x = (all & !up[0]).trailing_zeros() as usize;
            return Err(LatticeError::BottomNotZero(x));
        }
        if n >= 2 && down[1] != all {
            let x = (all & !down[1]).trailing_zeros() as usize;
            return Err(LatticeError::TopNotOne(x));
        }
        for a in 0..n {
            for b in a + 1..n {
                if least_of(&up, up[a] & up[b]).is_none() {
                    return Err(LatticeError::NoJoin(a, b));
                }
                if greatest_of(&down, down[a] & down[b]).is_none() {
                    return Err(LatticeError::NoMeet(a, b));
                }
            }
        }
        Ok(Lattice::from_order(up, down))
    }

    /// Builds a lattice from an `n x n` boolean order matrix.
    pub fn from_matrix(leq: &[Vec<bool>]) -> Result<Lattice, LatticeError> {
        let n = leq.len();
        for (row, r) in leq.iter().enumerate() {
            if r.len() != n {
                return Err(LatticeError::NotSquare { row, len: r.len(), n });
            }
        }
        Lattice::from_relation(n, |a, b| leq[a][b])
    }

    /// Builds a lattice from its cover pairs `(a, b)` meaning `a ≺ b`.
    ///
    /// Every listed pair must be a cover of the generated order.
    pub fn from_covers(
        n: usize,
        covers: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Lattice, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeError::TooLarge(n));
        }
        let mut upper = vec![0u64; n];
        let mut pairs = Vec::new();
        for (a, b) in covers {
            for e in [a, b] {
                if e >= n {
                    return Err(LatticeError::OutOfRange { element: e, n });
                }
            }
            if a == b {
                return Err(LatticeError::Cyclic);
            }
            if bits::contains(upper[a], b) {
                return Err(LatticeError::DuplicateCover(a, b));
            }
            upper[a] |= bit(b);
            pairs.push((a, b));
        }
        // reflexive-transitive closure by repeated propagation
        let mut up: Vec<Mask> = (0..n).map(|a| upper[a] | bit(a)).collect();
        loop {
            let mut changed = false;
            for a in 0..n {
                let mut acc = up[a];
                for b in bits::iter(up[a]) {
                    acc |= up[b];
                }
                if acc != up[a] {
                    up[a] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let lattice = Lattice::from_relation(n, |a, b| bits::contains(up[a], b)).map_err(|e| match e {
            LatticeError::NotAntisymmetric(..) => LatticeError::Cyclic,
            other => other,
        })?;
        for (a, b) in pairs {
            if !bits::contains(lattice.upper[a], b) {
                return Err(LatticeError::NotACover(a, b));
            }
        }
        Ok(lattice)
    }

    /// Assembles a lattice from a verified order.
    pub(crate) fn from_order(up: Vec<Mask>, down: Vec<Mask>) -> Lattice {
        let n = up.len();
        let mut upper = vec![0; n];
        let mut lower = vec![0; n];
        for a in 0..n {
            for b in bits::iter(up[a] & !bit(a)) {
                if up[a] & down[b] == bit(a) | bit(b) {
                    upper[a] |= bit(b);
                    lower[b] |= bit(a);
                }
            }
        }
        let dep = compute_dep(n, &up, &upper);
        Lattice {
            n,
            up,
            down,
            upper,
            lower,
            dep,
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        bits::contains(self.up[a], b)
    }

    #[inline]
    pub fn covers(&self, a: usize, b: usize) -> bool {
        bits::contains(self.upper[a], b)
    }

    /// Elements `>= a`.
    #[inline]
    pub fn up_set(&self, a: usize) -> Mask {
        self.up[a]
    }

    /// Elements `<= a`.
    #[inline]
    pub fn down_set(&self, a: usize) -> Mask {
        self.down[a]
    }

    #[inline]
    pub fn upper_cover_mask(&self, a: usize) -> Mask {
        self.upper[a]
    }

    #[inline]
    pub fn lower_cover_mask(&self, a: usize) -> Mask {
        self.lower[a]
    }

    /// Upper covers of `a` in increasing label order.
    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        bits::iter(self.upper[a]).collect()
    }

    pub fn lower_covers(&self, a: usize) -> Vec<usize> {
        bits::iter(self.lower[a]).collect()
    }

    /// The atoms, i.e. the upper covers of the bottom.
    #[inline]
    pub fn atoms(&self) -> Mask {
        self.upper[0]
    }

    /// All cover pairs `(a, b)` with `a ≺ b`, sorted lexicographically.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| bits::iter(self.upper[a]).map(move |b| (a, b)))
            .collect()
    }

    /// The up-set `↑A` of a set of elements.
    pub fn up_closure(&self, set: Mask) -> Mask {
        bits::iter(set).fold(0, |acc, a| acc | self.up[a])
    }

    /// Least upper bound.
    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        least_of(&self.up, self.up[a] & self.up[b]).expect("lattice invariant: joins exist")
    }

    /// Greatest lower bound.
    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        greatest_of(&self.down, self.down[a] & self.down[b]).expect("lattice invariant: meets exist")
    }

    /// Level number of a nonzero element (1 for the top).
    #[inline]
    pub fn dep(&self, p: usize) -> usize {
        self.dep[p] as usize
    }

    /// Number of levels of `L \ {0}`.
    pub fn level_count(&self) -> usize {
        self.dep.iter().copied().max().unwrap_or(0) as usize
    }

    /// Elements of level `m` (1-based).
    pub fn level_mask(&self, m: usize) -> Mask {
        (1..self.n)
            .filter(|&p| self.dep[p] as usize == m)
            .fold(0, |acc, p| acc | bit(p))
    }

    /// The levels of `L \ {0}`.
    pub fn compute_levels(&self) -> LevelPartition {
        let k = self.level_count();
        let mut blocks = vec![0; k];
        for p in 1..self.n {
            blocks[self.dep[p] as usize - 1] |= bit(p);
        }
        LevelPartition {
            dep: self.dep.iter().map(|&d| d as usize).collect(),
            blocks,
        }
    }

    /// True when the levels, read from the top, are consecutive label ranges
    /// `{1}, {2..m_2}, {m_2+1..m_3}, ...`.
    pub fn is_levelized(&self) -> bool {
        (2..self.n).all(|p| self.dep[p] >= self.dep[p - 1])
    }

    /// Relabels element `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[u8]) -> Lattice {
        assert_eq!(perm.len(), self.n, "permutation length must match lattice size");
        let map = |m: Mask| bits::iter(m).fold(0, |acc, x| acc | bit(perm[x] as usize));
        let mut up = vec![0; self.n];
        let mut down = vec![0; self.n];
        let mut upper = vec![0; self.n];
        let mut lower = vec![0; self.n];
        let mut dep = vec![0; self.n];
        for x in 0..self.n {
            let y = perm[x] as usize;
            up[y] = map(self.up[x]);
            down[y] = map(self.down[x]);
            upper[y] = map(self.upper[x]);
            lower[y] = map(self.lower[x]);
            dep[y] = self.dep[x];
        }
        Lattice {
            n: self.n,
            up,
            down,
            upper,
            lower,
            dep,
        }
    }

    /// Adds a new atom `n` whose upper covers are `covers`. The caller
    /// guarantees that `covers` is a lattice-antichain.
    pub(crate) fn with_new_atom(&self, covers: Mask) -> Lattice {
        let n = self.n;
        debug_assert!(n < MAX_ELEMENTS);
        let new = bit(n);
        let above = self.up_closure(covers);
        let mut up = self.up.clone();
        let mut down = self.down.clone();
        let mut upper = self.upper.clone();
        let mut lower = self.lower.clone();
        let mut dep = self.dep.clone();
        up.push(above | new);
        down.push(bit(0) | new);
        up[0] |= new;
        for u in bits::iter(above) {
            down[u] |= new;
        }
        // former atoms in `covers` now sit above the new element
        let displaced = covers & self.upper[0];
        upper[0] = (upper[0] & !displaced) | new;
        for a in bits::iter(covers) {
            lower[a] = (lower[a] & !bit(0)) | new;
        }
        upper.push(covers);
        lower.push(bit(0));
        let d = bits::iter(covers).map(|a| self.dep[a]).max().unwrap_or(0) + 1;
        dep.push(d);
        Lattice {
            n: n + 1,
            up,
            down,
            upper,
            lower,
            dep,
        }
    }

    /// The `n x n` order matrix.
    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.leq(a, b)).collect())
            .collect()
    }

    /// Serialises to the cover-list line `n;a<b,a<b,...`.
    pub fn to_cover_list(&self) -> String {
        let mut s = format!("{};", self.n);
        let mut first = true;
        for (a, b) in self.cover_pairs() {
            if !first {
                s.push(',');
            }
            first = false;
            s.push_str(&a.to_string());
            s.push('<');
            s.push_str(&b.to_string());
        }
        s
    }

    /// Parses a cover-list line as produced by [`Lattice::to_cover_list`].
    pub fn parse_cover_list(line: &str) -> Result<Lattice, LatticeError> {
        let (head, body) = line
            .split_once(';')
            .ok_or_else(|| LatticeError::Parse(format!("missing ';' in {line:?}")))?;
        let n: usize = parse_label(head)?;
        let mut pairs = Vec::new();
        if !body.is_empty() {
            for item in body.split(',') {
                let (a, b) = item
                    .split_once('<')
                    .ok_or_else(|| LatticeError::Parse(format!("bad cover pair {item:?}")))?;
                pairs.push((parse_label(a)?, parse_label(b)?));
            }
        }
        Lattice::from_covers(n, pairs)
    }
}

fn parse_label(s: &str) -> Result<usize, LatticeError> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return Err(LatticeError::Parse(format!("bad number {s:?}")));
    }
    s.parse().map_err(|_| LatticeError::Parse(format!("bad number {s:?}")))
}

/// The element `j` of `set` with `set ⊆ ↑j`, if any.
#[inline]
fn least_of(up: &[Mask], set: Mask) -> Option<usize> {
    bits::iter(set).find(|&j| up[j] == set)
}

#[inline]
fn greatest_of(down: &[Mask], set: Mask) -> Option<usize> {
    bits::iter(set).find(|&j| down[j] == set)
}

fn compute_dep(n: usize, up: &[Mask], upper: &[Mask]) -> Vec<u8> {
    let mut dep = vec![0u8; n];
    if n < 2 {
        return dep;
    }
    // fewer elements above means processed earlier; covers come first
    let mut order: Vec<usize> = (1..n).collect();
    order.sort_by_key(|&x| up[x].count_ones());
    for x in order {
        dep[x] = bits::iter(upper[x]).map(|y| dep[y]).max().unwrap_or(0) + 1;
    }
    dep
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cover_list())
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice({})", self.to_cover_list())
    }
}

impl FromStr for Lattice {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Lattice::parse_cover_list(s)
    }
}

/// Checks a relation given as a boolean matrix and returns the lattice.
pub fn validate_lattice(leq: &[Vec<bool>]) -> Result<Lattice, LatticeError> {
    Lattice::from_matrix(leq)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn diamond() -> Lattice {
        "4;0<2,0<3,2<1,3<1".parse().unwrap()
    }

    fn pentagon() -> Lattice {
        // 0 < 2 < 3 < 1, 0 < 4 < 1
        Lattice::from_covers(5, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn one_element_relation() {
        let l = validate_lattice(&[vec![true]]).unwrap();
        assert_eq!(l.size(), 1);
        assert_eq!(l.to_cover_list(), "1;");
        assert_eq!(l, Lattice::trivial());
    }

    #[test]
    fn diamond_from_relation() {
        let rel = [(0, 2), (2, 1), (0, 3), (3, 1), (0, 1)];
        let l = Lattice::from_relation(4, |a, b| a == b || rel.contains(&(a, b))).unwrap();
        assert_eq!(l, diamond());
        assert_eq!(l.to_cover_list(), "4;0<2,0<3,2<1,3<1");
        assert_eq!(l.join(2, 3), 1);
        assert_eq!(l.meet(2, 3), 0);
    }

    #[test]
    fn bowtie_has_no_join() {
        // 0 < 2,3 < 4,5 < 1: 2 and 3 have the two minimal upper bounds 4 and 5
        let covers = [(0, 2), (0, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 1), (5, 1)];
        let err = Lattice::from_covers(6, covers).unwrap_err();
        assert_eq!(err, LatticeError::NoJoin(2, 3));
    }

    #[test]
    fn rejects_bad_relations() {
        assert_eq!(Lattice::from_relation(0, |_, _| true), Err(LatticeError::Empty));
        assert_eq!(
            Lattice::from_relation(2, |a, b| a != b),
            Err(LatticeError::NotReflexive(0))
        );
        assert_eq!(
            Lattice::from_relation(2, |_, _| true),
            Err(LatticeError::NotAntisymmetric(0, 1))
        );
        // 0<2, 2<1 but missing 0<1
        let rel = [(0, 2), (2, 1)];
        assert_eq!(
            Lattice::from_relation(3, |a, b| a == b || rel.contains(&(a, b))),
            Err(LatticeError::NotTransitive(0, 2, 1))
        );
        // 1 is bottom instead of 0
        assert_eq!(
            Lattice::from_relation(2, |a, b| a == b || (a, b) == (1, 0)),
            Err(LatticeError::BottomNotZero(1))
        );
        // five elements, 0 bottom, but 4 is the top
        let l = Lattice::from_covers(5, [(0, 2), (0, 3), (2, 4), (3, 4), (1, 4), (0, 1)]);
        assert!(matches!(l, Err(LatticeError::TopNotOne(_)) | Err(LatticeError::NotACover(..))));
        let bad = [vec![true, true], vec![true]];
        assert!(matches!(validate_lattice(&bad), Err(LatticeError::NotSquare { .. })));
    }

    #[test]
    fn pentagon_joins_and_meets() {
        let l = pentagon();
        assert_eq!(l.join(2, 4), 1);
        assert_eq!(l.meet(3, 4), 0);
        assert_eq!(l.meet(2, 3), 2);
        for a in 0..5 {
            assert_eq!(l.join(a, a), a);
            assert_eq!(l.meet(a, a), a);
        }
    }

    #[test]
    fn levels() {
        let chain = Lattice::from_covers(4, [(0, 3), (3, 2), (2, 1)]).unwrap();
        let lv = chain.compute_levels();
        assert_eq!(lv.block_lists(), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(lv.dep(3), 3);
        assert_eq!(chain, Lattice::chain(4));
        assert!(chain.is_levelized());

        assert_eq!(diamond().compute_levels().block_lists(), vec![vec![1], vec![2, 3]]);
        assert_eq!(
            pentagon().compute_levels().block_lists(),
            vec![vec![1], vec![3, 4], vec![2]]
        );
        assert!(!pentagon().is_levelized());

        let relabelled = Lattice::from_covers(4, [(0, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!relabelled.is_levelized());
    }

    #[test]
    fn cover_list_errors() {
        assert!("4;0<2,0<3,2<1".parse::<Lattice>().is_err());
        assert!("4;0<2,0<3,2<1,3<1,0<1".parse::<Lattice>().is_err());
        assert!("x;".parse::<Lattice>().is_err());
        assert!("3;0<2,2<1,".parse::<Lattice>().is_err());
        assert!("3;0<2,2<9".parse::<Lattice>().is_err());
        assert!("3;0<2,0<2,2<1".parse::<Lattice>().is_err());
        assert_eq!("2;0<1".parse::<Lattice>().unwrap(), Lattice::two());
    }

    #[test]
    fn new_atom_matches_relation() {
        let d = diamond();
        let ext = d.with_new_atom(bit(2) | bit(3));
        let rebuilt = Lattice::from_relation(5, |a, b| ext.leq(a, b)).unwrap();
        assert_eq!(ext, rebuilt);
        assert_eq!(ext.to_cover_list(), "5;0<4,2<1,3<1,4<2,4<3");
    }
}
