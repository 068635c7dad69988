//! Brute-force oracles that only read the order relation.

#![allow(dead_code)]

use latgen::enumerate::CollectSink;
use latgen::{enumerate_with, Algorithm, EnumConfig, Lattice, LatticeClass};

pub fn collect(n: usize, class: LatticeClass, vi: bool, algorithm: Algorithm) -> Vec<Lattice> {
    let sink = CollectSink::new();
    enumerate_with(&EnumConfig::new(n, class).vi_only(vi).algorithm(algorithm), &sink).unwrap();
    sink.into_inner()
}

pub fn leq_matrix(l: &Lattice) -> Vec<Vec<bool>> {
    let n = l.size();
    (0..n).map(|a| (0..n).map(|b| l.leq(a, b)).collect()).collect()
}

/// Every permutation of `0..n` that fixes 0 and 1, in lexicographic order.
pub fn perms_fixing_bounds(n: usize) -> Vec<Vec<u8>> {
    fn go(rest: &mut Vec<u8>, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    if n <= 2 {
        out.push((0..n as u8).collect());
        return out;
    }
    let mut cur = vec![0, 1];
    go(&mut (2..n as u8).collect(), &mut cur, &mut out);
    out
}

/// Whether some bijection carries the order of `a` onto that of `b`.
pub fn isomorphic(a: &Lattice, b: &Lattice) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let n = a.size();
    let (ma, mb) = (leq_matrix(a), leq_matrix(b));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(k: usize, ma: &[Vec<bool>], mb: &[Vec<bool>], image: &mut [usize], used: &mut [bool]) -> bool {
        let n = ma.len();
        if k == n {
            return true;
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            if (0..k).all(|x| ma[x][k] == mb[image[x]][y] && ma[k][x] == mb[y][image[x]]) {
                image[k] = y;
                used[y] = true;
                if go(k + 1, ma, mb, image, used) {
                    return true;
                }
                used[y] = false;
            }
        }
        false
    }
    go(0, &ma, &mb, &mut image, &mut used)
}

fn meet_by_bounds(m: &[Vec<bool>], a: usize, b: usize) -> usize {
    let n = m.len();
    let lower: Vec<usize> = (0..n).filter(|&x| m[x][a] && m[x][b]).collect();
    *lower.iter().find(|&&g| lower.iter().all(|&x| m[x][g])).expect("lattice has meets")
}

/// The defining condition: for all `a, b` in `↑A`, `a∧b ∈ {0} ∪ ↑A`.
pub fn is_lattice_antichain_oracle(l: &Lattice, a: &[usize]) -> bool {
    let m = leq_matrix(l);
    let n = m.len();
    if a.is_empty() || a.contains(&0) {
        return false;
    }
    if a.iter().any(|&x| a.iter().any(|&y| x != y && m[x][y])) {
        return false;
    }
    let up: Vec<usize> = (0..n).filter(|&y| a.iter().any(|&x| m[x][y])).collect();
    up.iter().all(|&x| {
        up.iter().all(|&y| {
            let g = meet_by_bounds(&m, x, y);
            g == 0 || up.contains(&g)
        })
    })
}

/// Levels by peeling maximal elements of `L \ {0}`; entry `x` is its level.
pub fn levels_oracle(l: &Lattice) -> Vec<usize> {
    let m = leq_matrix(l);
    let n = m.len();
    let mut level = vec![0; n];
    let mut left: Vec<usize> = (1..n).collect();
    let mut d = 0;
    while !left.is_empty() {
        d += 1;
        let maximal: Vec<usize> = left
            .iter()
            .copied()
            .filter(|&x| !left.iter().any(|&y| y != x && m[x][y]))
            .collect();
        for &x in &maximal {
            level[x] = d;
        }
        left.retain(|x| !maximal.contains(x));
    }
    level
}

pub fn is_levelized_oracle(l: &Lattice) -> bool {
    let lev = levels_oracle(l);
    (2..l.size()).all(|x| lev[x - 1] <= lev[x])
}

/// Weight computed from scratch: `w_i = Σ 2^j` over the covers `j` of `i`.
pub fn weight_oracle(l: &Lattice) -> Vec<u64> {
    let m = leq_matrix(l);
    let n = m.len();
    (2..n)
        .map(|i| {
            (0..n)
                .filter(|&j| i != j && m[i][j] && !(0..n).any(|k| k != i && k != j && m[i][k] && m[k][j]))
                .map(|j| 1u64 << j)
                .sum()
        })
        .collect()
}

/// Least weight over all levelized relabellings.
pub fn min_levelized_weight(l: &Lattice) -> Vec<u64> {
    perms_fixing_bounds(l.size())
        .iter()
        .map(|p| l.relabel(p))
        .filter(is_levelized_oracle)
        .map(|r| weight_oracle(&r))
        .min()
        .unwrap()
}

/// Deterministic relabelling fixing 0 and 1: rotate `2..n` by `k`.
pub fn rotate(l: &Lattice, k: usize) -> Lattice {
    let n = l.size();
    let mut p: Vec<u8> = (0..n as u8).collect();
    if n > 2 {
        let len = n - 2;
        for x in 2..n {
            p[x] = (2 + (x - 2 + k) % len) as u8;
        }
    }
    l.relabel(&p)
}

pub fn is_modular_oracle(l: &Lattice) -> bool {
    let m = leq_matrix(l);
    let n = m.len();
    let join = |a: usize, b: usize| {
        let upper: Vec<usize> = (0..n).filter(|&x| m[a][x] && m[b][x]).collect();
        *upper.iter().find(|&&j| upper.iter().all(|&x| m[j][x])).unwrap()
    };
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| !m[c][a] || meet_by_bounds(&m, a, join(b, c)) == join(meet_by_bounds(&m, a, b), c)))
    })
}

pub fn is_semimodular_oracle(l: &Lattice) -> bool {
    let m = leq_matrix(l);
    let n = m.len();
    let covers = |a: usize, b: usize| a != b && m[a][b] && !(0..n).any(|k| k != a && k != b && m[a][k] && m[k][b]);
    let join = |a: usize, b: usize| {
        let upper: Vec<usize> = (0..n).filter(|&x| m[a][x] && m[b][x]).collect();
        *upper.iter().find(|&&j| upper.iter().all(|&x| m[j][x])).unwrap()
    };
    (0..n).all(|a| {
        (0..n).all(|b| {
            let g = meet_by_bounds(&m, a, b);
            !(a != b && covers(g, a) && covers(g, b)) || (covers(a, join(a, b)) && covers(b, join(a, b)))
        })
    })
}

/// Has an element other than 0 and 1 comparable to every element.
pub fn is_vd_oracle(l: &Lattice) -> bool {
    let m = leq_matrix(l);
    let n = m.len();
    (2..n).any(|x| (0..n).all(|y| m[x][y] || m[y][x]))
}
