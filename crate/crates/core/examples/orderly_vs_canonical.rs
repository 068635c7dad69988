//! Runs both generation strategies side by side: minimal weight
//! (orderly) and canonical construction path.

use std::collections::BTreeSet;

use latgen::enumerate::CollectSink;
use latgen::{canonical_key, enumerate_with, Algorithm, EnumConfig, LatticeClass};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    for class in LatticeClass::ALL {
        let mut keys = Vec::new();
        for alg in [Algorithm::Weight, Algorithm::CanonPath] {
            let sink = CollectSink::new();
            let r = enumerate_with(&EnumConfig::new(n, class).algorithm(alg), &sink).unwrap();
            let k: BTreeSet<String> = sink.into_inner().iter().map(canonical_key).collect();
            println!(
                "{:<12} {:<10} count={:<6} nodes={:<8} extensions={:<9} {:?}",
                class.name(),
                alg.name(),
                r.total(),
                r.nodes,
                r.extensions,
                r.elapsed
            );
            keys.push(k);
        }
        assert_eq!(keys[0], keys[1]);
    }
}
