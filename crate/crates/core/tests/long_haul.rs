//! Larger prefixes of the count table. Run with `cargo test --release -- --ignored`.

use latgen::{enumerate, EnumConfig, LatticeClass};

fn counts(n: usize, class: LatticeClass, vi: bool) -> Vec<u64> {
    let jobs = std::thread::available_parallelism().map_or(1, |p| p.get());
    enumerate(&EnumConfig::new(n, class).vi_only(vi).jobs(jobs)).unwrap().counts
}

#[test]
#[ignore]
fn all_lattices_thirteen() {
    assert_eq!(counts(13, LatticeClass::All, false)[12..], [262_776, 2_018_305]);
}

#[test]
#[ignore]
fn semimodular_sixteen() {
    assert_eq!(counts(16, LatticeClass::Semimodular, false)[15..], [29_231, 85_906]);
    assert_eq!(counts(16, LatticeClass::Semimodular, true)[12..], [384, 1_088, 3_186, 9_596, 29_601]);
}

#[test]
#[ignore]
fn modular_eighteen() {
    assert_eq!(counts(18, LatticeClass::Modular, false)[17..], [47_321, 110_024]);
    assert_eq!(counts(18, LatticeClass::Modular, true)[16..], [3_134, 7_091, 16_482]);
}
