//! Lists the modular lattices of a given size with a few invariants each.

use latgen::enumerate::CollectSink;
use latgen::predicates::is_vertically_decomposable;
use latgen::{automorphisms, enumerate_with, EnumConfig, LatticeClass};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let sink = CollectSink::new();
    let result = enumerate_with(&EnumConfig::new(n, LatticeClass::Modular), &sink).unwrap();
    let mut found = sink.into_inner();
    found.sort_by_key(|l| l.to_cover_list());

    println!("{} modular lattices with {n} elements ({:?})", found.len(), result.elapsed);
    for l in &found {
        let group = automorphisms(l).unwrap();
        println!(
            "levels={} atoms={} |Aut|={:<3} vd={:<5} {}",
            l.level_count(),
            l.atoms().count_ones(),
            group.order(),
            is_vertically_decomposable(l),
            l
        );
    }
}
