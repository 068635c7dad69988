//! Prints the five count columns (all, semimodular, vertically indecomposable
//! semimodular, modular, vertically indecomposable modular).
//!
//! ```text
//! cargo run --release --example count_table -- 12
//! ```

use latgen::count_table;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let jobs = std::thread::available_parallelism().map_or(1, |p| p.get());
    let rows = count_table(n, jobs).expect("size within range");
    println!("{:>3} {:>10} {:>8} {:>8} {:>8} {:>8}", "n", "all", "semi", "vi-semi", "mod", "vi-mod");
    for r in rows {
        println!(
            "{:>3} {:>10} {:>8} {:>8} {:>8} {:>8}",
            r.n, r.all, r.semimodular, r.vi_semimodular, r.modular, r.vi_modular
        );
    }
}
