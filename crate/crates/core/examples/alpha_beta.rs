//! Builds the α-β family of modular lattices and compares its size with the
//! number of modular lattices.

use std::collections::HashSet;

use latgen::alphabeta::{generate_alpha_beta, AlphaBetaWord};
use latgen::predicates::is_modular;
use latgen::{canonical_key, enumerate, EnumConfig, LatticeClass};

fn main() {
    for (code, word) in (0..4).map(|c| (c, AlphaBetaWord::from_code(c, 2))) {
        println!("word {word} (code {code}): {}", word.apply().unwrap());
    }
    println!();
    println!("{:>3} {:>6} {:>6}", "n", "2^n-3", "m(n)");
    for n in 3..=12 {
        let family = generate_alpha_beta(n);
        assert!(family.iter().all(is_modular));
        let distinct: HashSet<String> = family.iter().map(canonical_key).collect();
        let m = enumerate(&EnumConfig::new(n, LatticeClass::Modular)).unwrap().total();
        println!("{n:>3} {:>6} {m:>6}", distinct.len());
    }
}
