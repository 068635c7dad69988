//! Element sets as 64-bit masks.

/// A set of lattice elements; bit `i` stands for element `i`.
pub type Mask = u64;

/// Largest lattice the crate can represent.
pub const MAX_ELEMENTS: usize = 64;

#[inline]
pub const fn bit(i: usize) -> Mask {
    1u64 << i
}

/// Mask with the low `n` bits set.
#[inline]
pub const fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub const fn contains(mask: Mask, i: usize) -> bool {
    mask & bit(i) != 0
}

/// Iterates the members of a mask in increasing order.
#[inline]
pub fn iter(mask: Mask) -> Bits {
    Bits(mask)
}

#[derive(Clone, Copy, Debug)]
pub struct Bits(Mask);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

pub fn from_iter<I: IntoIterator<Item = usize>>(items: I) -> Mask {
    items.into_iter().fold(0, |m, i| m | bit(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_in_order() {
        let m = from_iter([5, 0, 63, 7]);
        assert_eq!(iter(m).collect::<Vec<_>>(), vec![0, 5, 7, 63]);
        assert_eq!(iter(m).len(), 4);
        assert_eq!(full(64), u64::MAX);
        assert_eq!(full(3), 0b111);
    }
}
