//! Canonical labelling by equitable partition refinement and
//! individualisation, in the style of nauty.
//!
//! The search starts from the ordered partition `{0} | lev_1 | lev_2 | ...`,
//! refines it against the cover digraph until it is equitable, and then
//! branches on the first smallest non-singleton cell. Each discrete partition
//! (a leaf) gives a relabelled cover relation; the least one is the canonical
//! form. Leaves that reproduce the first or best form yield automorphisms,
//! which prune sibling branches in the same orbit of the pointwise stabiliser
//! of the current path.

use std::cmp::Ordering;

use crate::bits::{self, bit, Mask};
use crate::lattice::Lattice;

use super::group::{Perm, UnionFind};

/// Outcome of one canonical labelling search.
#[derive(Clone, Debug)]
pub(crate) struct SearchResult {
    /// `order[p]` is the element placed at canonical position `p`.
    pub order: Vec<u8>,
    /// Automorphisms found during the search; they generate the full group.
    pub generators: Vec<Perm>,
}

struct Leaf {
    order: Vec<u8>,
    form: Vec<Mask>,
}

pub(crate) struct Search<'a> {
    lattice: &'a Lattice,
    first: Option<Leaf>,
    first_path: Vec<u8>,
    best: Option<Leaf>,
    generators: Vec<Perm>,
}

/// The level partition `{0} | lev_1 | ... | lev_k`.
pub(crate) fn level_cells(l: &Lattice) -> Vec<Mask> {
    let mut cells = vec![bit(0)];
    cells.extend_from_slice(l.compute_levels().blocks());
    cells
}

impl<'a> Search<'a> {
    pub fn new(lattice: &'a Lattice) -> Search<'a> {
        Search {
            lattice,
            first: None,
            first_path: Vec::new(),
            best: None,
            generators: Vec::new(),
        }
    }

    pub fn run(mut self, mut cells: Vec<Mask>) -> SearchResult {
        refine(self.lattice, &mut cells);
        let mut path = Vec::new();
        self.descend(cells, &mut path);
        let best = self.best.expect("search reaches at least one leaf");
        SearchResult {
            order: best.order,
            generators: self.generators,
        }
    }

    /// Returns `Some(d)` to abandon every node deeper than `d`.
    fn descend(&mut self, cells: Vec<Mask>, path: &mut Vec<u8>) -> Option<usize> {
        if cells.len() == self.lattice.size() {
            return self.leaf(&cells, path);
        }
        let (ti, target) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");

        let mut tried: Mask = 0;
        for v in bits::iter(target) {
            if tried != 0 && self.equivalent_to_tried(v, tried, path) {
                continue;
            }
            tried |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.lattice, &mut child);
            path.push(v as u8);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Whether `v` lies in the orbit of an already explored sibling under the
    /// known automorphisms that fix `path` pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: Mask, path: &[u8]) -> bool {
        let n = self.lattice.size();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for g in &self.generators {
            if path.iter().all(|&p| g[p as usize] == p) {
                any = true;
                for x in 0..n {
                    uf.union(x, g[x] as usize);
                }
            }
        }
        any && bits::iter(tried).any(|u| uf.find(u) == uf.find(v))
    }

    fn leaf(&mut self, cells: &[Mask], path: &[u8]) -> Option<usize> {
        let order: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let form = relabelled_form(self.lattice, &order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                order: order.clone(),
                form: form.clone(),
            });
            self.best = Some(Leaf { order, form });
            self.first_path = path.to_vec();
            return None;
        };
        if form == first.form {
            let g = automorphism_between(&first.order, &order);
            self.push_generator(g);
            let common = path
                .iter()
                .zip(&self.first_path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match form.cmp(&best.form) {
            Ordering::Less => self.best = Some(Leaf { order, form }),
            Ordering::Equal => {
                let g = automorphism_between(&best.order, &order);
                self.push_generator(g);
            }
            Ordering::Greater => {}
        }
        None
    }

    fn push_generator(&mut self, g: Perm) {
        if g.iter().enumerate().any(|(i, &x)| i != x as usize) && !self.generators.contains(&g) {
            self.generators.push(g);
        }
    }
}

/// The automorphism sending `from[p]` to `to[p]` for every position `p`.
fn automorphism_between(from: &[u8], to: &[u8]) -> Perm {
    let mut g = vec![0u8; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        g[a as usize] = b;
    }
    g
}

/// Upper-cover masks after placing `order[p]` at position `p`.
pub(crate) fn relabelled_form(l: &Lattice, order: &[u8]) -> Vec<Mask> {
    let n = l.size();
    let mut pos = [0u8; 64];
    for (p, &x) in order.iter().enumerate() {
        pos[x as usize] = p as u8;
    }
    (0..n)
        .map(|p| {
            let x = order[p] as usize;
            bits::iter(l.upper_cover_mask(x)).fold(0, |acc, y| acc | bit(pos[y] as usize))
        })
        .collect()
}

/// Refines an ordered partition until it is equitable with respect to the
/// upper and lower cover relations. Cells are split in place; fragments are
/// ordered by their counts into the splitting cell, so the result depends
/// only on the structure and not on element labels.
pub(crate) fn refine(l: &Lattice, cells: &mut Vec<Mask>) {
    let n = l.size();
    loop {
        let mut split_any = false;
        let mut s = 0;
        while s < cells.len() && cells.len() < n {
            let splitter = cells[s];
            let mut c = 0;
            while c < cells.len() {
                let cell = cells[c];
                if cell & cell.wrapping_sub(1) == 0 {
                    c += 1;
                    continue;
                }
                let mut keyed = [(0u16, 0u8); 64];
                let mut len = 0;
                let mut uniform = true;
                let mut key0 = None;
                for x in bits::iter(cell) {
                    let up = (l.upper_cover_mask(x) & splitter).count_ones() as u16;
                    let down = (l.lower_cover_mask(x) & splitter).count_ones() as u16;
                    let key = (up << 7) | down;
                    match key0 {
                        None => key0 = Some(key),
                        Some(k) if k != key => uniform = false,
                        _ => {}
                    }
                    keyed[len] = (key, x as u8);
                    len += 1;
                }
                if uniform {
                    c += 1;
                    continue;
                }
                let keyed = &mut keyed[..len];
                keyed.sort_unstable();
                let mut parts: Vec<Mask> = Vec::new();
                let mut prev = None;
                for &(k, x) in keyed.iter() {
                    if prev != Some(k) {
                        parts.push(0);
                        prev = Some(k);
                    }
                    *parts.last_mut().unwrap() |= bit(x as usize);
                }
                let added = parts.len();
                cells.splice(c..c + 1, parts);
                c += added;
                split_any = true;
            }
            s += 1;
        }
        if !split_any || cells.len() == n {
            break;
        }
    }
}
