//! Recovers the modular counts from the vertically indecomposable ones.

use latgen::{counts_from_vi, enumerate, EnumConfig, LatticeClass};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(14);
    let m = enumerate(&EnumConfig::new(n, LatticeClass::Modular)).unwrap();
    let mv = enumerate(&EnumConfig::new(n, LatticeClass::Modular).vi_only(true)).unwrap();
    let derived = counts_from_vi(&mv.counts[2..]);
    println!("{:>3} {:>8} {:>8} {:>8}", "n", "vi", "derived", "counted");
    for k in 2..=n {
        println!("{k:>3} {:>8} {:>8} {:>8}", mv.count(k), derived[k - 2], m.count(k));
    }
    assert_eq!(derived, m.counts[2..]);
}
