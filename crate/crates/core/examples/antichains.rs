//! Walks through one extension step: the lattice-antichains of a lattice,
//! which of them survive each pruning rule, and the resulting extensions.

use latgen::extension::{
    filter_a1, filter_a2, filter_a3, filter_a4, filter_last_step, filter_levelized, filter_vi,
};
use latgen::predicates::{is_modular, is_semimodular};
use latgen::{extend, lattice_antichains, Lattice};

fn main() {
    let arg = std::env::args().nth(1);
    let l: Lattice = arg.as_deref().unwrap_or("5;0<2,0<4,2<3,3<1,4<1").parse().expect("cover list");
    println!("L = {l}");
    println!("levels {:?}", l.compute_levels().block_lists());
    println!();
    println!("{:<12} lev A1 A2 A3 A4 last vi  extension (semi/mod)", "A");
    let yes = |b: bool| if b { "y" } else { "." };
    for a in lattice_antichains(&l) {
        let e = extend(&l, &a).unwrap();
        println!(
            "{:<12} {:<3} {:<2} {:<2} {:<2} {:<2} {:<4} {:<3} {} ({}/{})",
            format!("{a:?}"),
            yes(filter_levelized(&l, &a)),
            yes(filter_a1(&l, &a)),
            yes(filter_a2(&l, &a)),
            yes(filter_a3(&l, &a)),
            yes(filter_a4(&l, &a)),
            yes(filter_last_step(&l, &a, true)),
            yes(filter_vi(&l, &a)),
            e,
            yes(is_semimodular(&e)),
            yes(is_modular(&e)),
        );
    }
}
