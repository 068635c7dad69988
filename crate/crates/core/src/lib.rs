//! Isomorph-free generation of finite lattices.
//!
//! Lattices are grown one atom at a time from the two-element lattice. Each
//! step adds a new atom below a *lattice-antichain* of the current lattice;
//! isomorphic copies are rejected either by minimal weight (the orderly
//! driver) or by a canonical construction path built on the crate's own
//! canonical labelling. Level-based pruning rules restrict the search to
//! branches that can still produce semimodular or modular lattices, and a
//! further rule avoids most vertically decomposable ones.
//!
//! ```
//! use latgen::{enumerate, EnumConfig, LatticeClass};
//!
//! let r = enumerate(&EnumConfig::new(8, LatticeClass::Modular)).unwrap();
//! assert_eq!(r.total(), 34);
//! ```

pub mod alphabeta;
pub mod bits;
pub mod canonical;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod lattice;
pub mod predicates;

pub use canonical::{
    antichain_orbit_representatives, automorphisms, canonical_form, canonical_key, canonical_labeling, is_canonical_extension,
    is_weight_canonical, weight, AutGroup, Labeling, Weight,
};
pub use enumerate::{
    brute_force_reference, count_table, counts_from_vi, enumerate, enumerate_with, next_lattice_canon,
    next_lattice_weight, split_frontier, Algorithm, CountResult, CountSeries, EnumConfig, LatticeSink,
};
pub use error::{EnumError, LatticeError};
pub use extension::{admissible_antichains, extend, lattice_antichains, Antichain, FilterProfile, LatticeClass};
pub use lattice::{validate_lattice, Lattice, LevelPartition};
