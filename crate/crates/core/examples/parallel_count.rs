//! Counts modular lattices with several worker counts and split depths and
//! checks that the results agree.
//!
//! `cargo run --release --example parallel_count -- 14`

use latgen::{enumerate, split_frontier, EnumConfig, LatticeClass};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(13);
    let base = EnumConfig::new(n, LatticeClass::Modular);
    let frontier = split_frontier(&base, n - 4).unwrap();
    println!("{} subtree roots at size {}", frontier.roots.len(), n - 4);

    let mut reference = None;
    for jobs in [1, 2, 4, 8] {
        for depth in [0, n / 2, n - 2] {
            let r = enumerate(&base.clone().jobs(jobs).split_depth(depth)).unwrap();
            println!(
                "jobs={jobs} depth={depth:<2} m({n})={} nodes={} time={:?}",
                r.total(),
                r.nodes,
                r.elapsed
            );
            let counts = r.counts.clone();
            assert_eq!(*reference.get_or_insert(counts.clone()), counts);
        }
    }
}
