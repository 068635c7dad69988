//! Structural predicates on finite lattices.

use crate::bits;
use crate::lattice::Lattice;

/// Upper semimodularity: `a∧b ≺ a,b` implies `a,b ≺ a∨b`.
///
/// Two distinct upper covers of a common element `c` always meet in `c`, so
/// it suffices to check pairs of covers of each element.
pub fn is_semimodular(l: &Lattice) -> bool {
    (0..l.size()).all(|c| {
        let covers = l.upper_cover_mask(c);
        pairs(covers).all(|(a, b)| {
            let j = l.join(a, b);
            l.covers(a, j) && l.covers(b, j)
        })
    })
}

/// Lower semimodularity: `a,b ≺ a∨b` implies `a∧b ≺ a,b`.
pub fn is_lower_semimodular(l: &Lattice) -> bool {
    (0..l.size()).all(|c| {
        let covers = l.lower_cover_mask(c);
        pairs(covers).all(|(a, b)| {
            let m = l.meet(a, b);
            l.covers(m, a) && l.covers(m, b)
        })
    })
}

/// Modularity via the semimodular / lower semimodular characterisation of
/// finite-length lattices. This is the route the enumerator uses.
pub fn is_modular(l: &Lattice) -> bool {
    is_semimodular(l) && is_lower_semimodular(l)
}

/// Modularity by the modular law `a >= c ⇒ a∧(b∨c) = (a∧b)∨c`, checked on
/// every triple with `c <= a`.
pub fn is_modular_by_law(l: &Lattice) -> bool {
    let n = l.size();
    for a in 0..n {
        for c in bits::iter(l.down_set(a)) {
            // c = a and c = 0 hold trivially
            if c == a || c == 0 {
                continue;
            }
            for b in 0..n {
                if l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), c) {
                    return false;
                }
            }
        }
    }
    true
}

/// All maximal chains from 0 to 1 have the same number of elements.
pub fn jordan_holder_holds(l: &Lattice) -> bool {
    let n = l.size();
    if n <= 2 {
        return true;
    }
    // shortest and longest cover-path length from each element to the top
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| l.up_set(x).count_ones());
    let mut lo = vec![0usize; n];
    let mut hi = vec![0usize; n];
    for x in order {
        if x == 1 {
            continue;
        }
        let covers = bits::iter(l.upper_cover_mask(x));
        let (mn, mx) = covers.fold((usize::MAX, 0), |(mn, mx), y| (mn.min(lo[y]), mx.max(hi[y])));
        lo[x] = mn + 1;
        hi[x] = mx + 1;
        if lo[x] != hi[x] {
            return false;
        }
    }
    true
}

/// Some element other than 0 and 1 is comparable to every element.
pub fn is_vertically_decomposable(l: &Lattice) -> bool {
    let all = bits::full(l.size());
    (2..l.size()).any(|x| l.up_set(x) | l.down_set(x) == all)
}

fn pairs(mask: u64) -> impl Iterator<Item = (usize, usize)> {
    bits::iter(mask).flat_map(move |a| bits::iter(mask & !bits::full(a + 1)).map(move |b| (a, b)))
}
