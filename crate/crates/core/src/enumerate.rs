//! Search drivers: the weight-based orderly algorithm and the canonical
//! construction path, both rooted at the two-element lattice and growing one
//! atom at a time.
//!
//! Counts are kept for every size up to the target. The pruning filters do
//! not depend on the target except for the last-step rule, so every lattice of
//! the requested class at an intermediate size is still visited once.

use std::io::Write;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use crate::canonical::{automorphism_generators, check_extension, is_weight_canonical, orbit_representatives, Perm};
use crate::error::EnumError;
use crate::extension::{for_each_admissible, Antichain, FilterProfile, LatticeClass};
use crate::lattice::Lattice;
use crate::predicates::is_vertically_decomposable;

/// Which isomorph rejection strategy the search uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Orderly generation: keep an extension only if its weight is minimal.
    Weight,
    /// Canonical construction path: one antichain per orbit, and keep an
    /// extension only if its new element is a canonical deletion.
    CanonPath,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Weight => "weight",
            Algorithm::CanonPath => "canon-path",
        }
    }
}

/// Parameters of one enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub target_n: usize,
    pub class: LatticeClass,
    /// Count only vertically indecomposable lattices.
    pub vi_only: bool,
    pub algorithm: Algorithm,
    pub jobs: usize,
    /// Size at which the search tree is cut into independent subtrees;
    /// 0 picks a depth automatically when `jobs > 1`.
    pub split_depth: usize,
}

impl EnumConfig {
    pub fn new(target_n: usize, class: LatticeClass) -> EnumConfig {
        EnumConfig {
            target_n,
            class,
            vi_only: false,
            algorithm: Algorithm::CanonPath,
            jobs: 1,
            split_depth: 0,
        }
    }

    pub fn vi_only(mut self, vi_only: bool) -> Self {
        self.vi_only = vi_only;
        self
    }

    pub fn algorithm(mut self, algorithm: Algorithm) -> Self {
        self.algorithm = algorithm;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn split_depth(mut self, split_depth: usize) -> Self {
        self.split_depth = split_depth;
        self
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if self.target_n == 0 {
            return Err(EnumError::InvalidConfig("target size must be at least 1".into()));
        }
        if self.target_n > crate::bits::MAX_ELEMENTS {
            return Err(EnumError::InvalidConfig(format!(
                "target size {} exceeds the maximum of {}",
                self.target_n,
                crate::bits::MAX_ELEMENTS
            )));
        }
        if self.jobs == 0 {
            return Err(EnumError::InvalidConfig("jobs must be at least 1".into()));
        }
        if self.split_depth != 0 && self.split_depth >= self.target_n {
            return Err(EnumError::InvalidConfig(format!(
                "split depth {} must be below the target size {}",
                self.split_depth, self.target_n
            )));
        }
        Ok(())
    }

    fn profile(&self, size: usize) -> FilterProfile {
        FilterProfile {
            class: self.class,
            vi_only: self.vi_only,
            last_step: size + 1 == self.target_n,
        }
    }

    /// Whether a generated lattice is counted.
    fn counts(&self, l: &Lattice) -> bool {
        self.class.contains(l) && !(self.vi_only && is_vertically_decomposable(l))
    }

    fn effective_split_depth(&self) -> usize {
        if self.split_depth != 0 {
            self.split_depth
        } else if self.jobs > 1 && self.target_n > 3 {
            self.target_n.saturating_sub(4).max(2).min(self.target_n - 1)
        } else {
            0
        }
    }
}

/// Counters accumulated by a search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// `counts[m]` is the number of counted lattices of size `m`.
    pub counts: Vec<u64>,
    pub nodes: u64,
    pub extensions: u64,
}

impl SearchStats {
    pub fn new(target_n: usize) -> SearchStats {
        SearchStats {
            counts: vec![0; target_n + 1],
            nodes: 0,
            extensions: 0,
        }
    }

    fn merge(&mut self, other: &SearchStats) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.nodes += other.nodes;
        self.extensions += other.extensions;
    }
}

/// Result of [`enumerate`].
#[derive(Clone, Debug)]
pub struct CountResult {
    pub target_n: usize,
    /// `counts[m]` for `m` in `0..=target_n`; index 0 is unused.
    pub counts: Vec<u64>,
    pub elapsed: Duration,
    pub nodes: u64,
    pub extensions: u64,
}

impl CountResult {
    pub fn count(&self, size: usize) -> u64 {
        self.counts.get(size).copied().unwrap_or(0)
    }

    /// The count at the target size.
    pub fn total(&self) -> u64 {
        self.count(self.target_n)
    }

    /// `(size, count)` for sizes `1..=target_n`.
    pub fn rows(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        (1..=self.target_n).map(move |m| (m, self.count(m)))
    }

    /// Tab-separated `n<TAB>count` lines.
    pub fn to_tsv(&self) -> String {
        self.rows().map(|(m, c)| format!("{m}\t{c}\n")).collect()
    }
}

/// Receives every counted lattice of the target size.
pub trait LatticeSink: Sync {
    fn accept(&self, lattice: &Lattice);
}

impl<F: Fn(&Lattice) + Sync> LatticeSink for F {
    fn accept(&self, lattice: &Lattice) {
        self(lattice)
    }
}

/// Discards everything.
pub struct NoSink;

impl LatticeSink for NoSink {
    fn accept(&self, _: &Lattice) {}
}

/// Writes one cover-list line per lattice; writes are serialised.
pub struct WriterSink<W: Write + Send> {
    out: Mutex<(W, Option<std::io::Error>)>,
}

impl<W: Write + Send> WriterSink<W> {
    pub fn new(out: W) -> WriterSink<W> {
        WriterSink {
            out: Mutex::new((out, None)),
        }
    }

    /// Returns the writer, or the first write error.
    pub fn finish(self) -> std::io::Result<W> {
        let (mut w, err) = self.out.into_inner().unwrap_or_else(|e| e.into_inner());
        match err {
            Some(e) => Err(e),
            None => {
                w.flush()?;
                Ok(w)
            }
        }
    }
}

impl<W: Write + Send> LatticeSink for WriterSink<W> {
    fn accept(&self, lattice: &Lattice) {
        let mut guard = self.out.lock().unwrap_or_else(|e| e.into_inner());
        if guard.1.is_none() {
            if let Err(e) = writeln!(guard.0, "{}", lattice.to_cover_list()) {
                guard.1 = Some(e);
            }
        }
    }
}

/// Collects emitted lattices in memory.
#[derive(Default)]
pub struct CollectSink(Mutex<Vec<Lattice>>);

impl CollectSink {
    pub fn new() -> CollectSink {
        CollectSink::default()
    }

    pub fn into_inner(self) -> Vec<Lattice> {
        self.0.into_inner().unwrap_or_else(|e| e.into_inner())
    }
}

impl LatticeSink for CollectSink {
    fn accept(&self, lattice: &Lattice) {
        self.0.lock().unwrap_or_else(|e| e.into_inner()).push(lattice.clone());
    }
}

struct Node {
    lattice: Lattice,
    /// Automorphism generators, when already known.
    generators: Option<Vec<Perm>>,
}

struct Driver<'a> {
    cfg: &'a EnumConfig,
    sink: &'a dyn LatticeSink,
    stats: SearchStats,
    /// When set, nodes of this size are collected instead of expanded.
    stop_at: Option<usize>,
    roots: Vec<Lattice>,
}

impl<'a> Driver<'a> {
    fn new(cfg: &'a EnumConfig, sink: &'a dyn LatticeSink) -> Driver<'a> {
        Driver {
            cfg,
            sink,
            stats: SearchStats::new(cfg.target_n),
            stop_at: None,
            roots: Vec::new(),
        }
    }

    fn visit(&mut self, l: &Lattice) {
        let m = l.size();
        if self.cfg.counts(l) {
            self.stats.counts[m] += 1;
            if m == self.cfg.target_n {
                self.sink.accept(l);
            }
        }
    }

    fn expand(&mut self, node: Node) {
        if self.stop_at == Some(node.lattice.size()) {
            self.roots.push(node.lattice);
            return;
        }
        self.stats.nodes += 1;
        self.visit(&node.lattice);
        if node.lattice.size() >= self.cfg.target_n {
            return;
        }
        match self.cfg.algorithm {
            Algorithm::Weight => self.expand_weight(&node.lattice),
            Algorithm::CanonPath => self.expand_canon(node),
        }
    }

    fn expand_weight(&mut self, l: &Lattice) {
        let profile = self.cfg.profile(l.size());
        let mut children = Vec::new();
        let mut tested = 0;
        for_each_admissible(l, &profile, |a| {
            tested += 1;
            let child = l.with_new_atom(a.mask());
            if is_weight_canonical(&child) {
                children.push(child);
            }
        });
        self.stats.extensions += tested;
        for child in children {
            self.expand(Node {
                lattice: child,
                generators: None,
            });
        }
    }

    fn expand_canon(&mut self, node: Node) {
        let l = &node.lattice;
        let profile = self.cfg.profile(l.size());
        let mut candidates: Vec<Antichain> = Vec::new();
        for_each_admissible(l, &profile, |a| candidates.push(a));
        let reps = if candidates.len() > 1 {
            let generators = match node.generators {
                Some(g) => g,
                None => automorphism_generators(l),
            };
            orbit_representatives(&generators, &candidates)
        } else {
            candidates
        };
        let leaf = l.size() + 1 == self.cfg.target_n;
        for a in reps {
            self.stats.extensions += 1;
            let child = l.with_new_atom(a.mask());
            let check = check_extension(&child);
            if !check.accepted {
                continue;
            }
            if leaf && self.stop_at.is_none() {
                self.stats.nodes += 1;
                self.visit(&child);
            } else {
                self.expand(Node {
                    lattice: child,
                    generators: check.generators,
                });
            }
        }
    }
}

/// Runs the orderly (weight) driver below `l`, which must be a
/// weight-canonical levelized lattice. Counted lattices of the target size go
/// to `sink`; counters accumulate in `stats`.
pub fn next_lattice_weight(l: &Lattice, cfg: &EnumConfig, stats: &mut SearchStats, sink: &dyn LatticeSink) {
    let cfg = EnumConfig {
        algorithm: Algorithm::Weight,
        ..cfg.clone()
    };
    run_subtree(l, &cfg, stats, sink);
}

/// Runs the canonical-construction-path driver below `l`, which must have been
/// accepted by the canonical-deletion test (or be the two-element root).
pub fn next_lattice_canon(l: &Lattice, cfg: &EnumConfig, stats: &mut SearchStats, sink: &dyn LatticeSink) {
    let cfg = EnumConfig {
        algorithm: Algorithm::CanonPath,
        ..cfg.clone()
    };
    run_subtree(l, &cfg, stats, sink);
}

fn run_subtree(l: &Lattice, cfg: &EnumConfig, stats: &mut SearchStats, sink: &dyn LatticeSink) {
    let mut driver = Driver::new(cfg, sink);
    driver.expand(Node {
        lattice: l.clone(),
        generators: None,
    });
    if stats.counts.len() < driver.stats.counts.len() {
        stats.counts.resize(driver.stats.counts.len(), 0);
    }
    stats.merge(&driver.stats);
}

/// Independent subtree roots at a fixed size.
#[derive(Clone, Debug)]
pub struct Frontier {
    /// Accepted lattices of size `depth`.
    pub roots: Vec<Lattice>,
    /// Counters for the part of the tree above the roots.
    pub stats: SearchStats,
}

/// Runs the configured driver up to size `depth` and returns the accepted
/// lattices of that size. Enumerating each root to the target and adding the
/// frontier's own counters reproduces the sequential result.
pub fn split_frontier(cfg: &EnumConfig, depth: usize) -> Result<Frontier, EnumError> {
    cfg.validate()?;
    if depth >= cfg.target_n {
        return Err(EnumError::InvalidConfig(format!(
            "split depth {depth} must be below the target size {}",
            cfg.target_n
        )));
    }
    if depth <= 2 {
        return Ok(Frontier {
            roots: vec![Lattice::two()],
            stats: SearchStats::new(cfg.target_n),
        });
    }
    let mut driver = Driver::new(cfg, &NoSink);
    driver.stop_at = Some(depth);
    driver.expand(Node {
        lattice: Lattice::two(),
        generators: None,
    });
    Ok(Frontier {
        roots: driver.roots,
        stats: driver.stats,
    })
}

/// Counts the lattices described by `cfg`.
pub fn enumerate(cfg: &EnumConfig) -> Result<CountResult, EnumError> {
    enumerate_with(cfg, &NoSink)
}

/// Counts the lattices described by `cfg`, handing each counted lattice of the
/// target size to `sink`.
pub fn enumerate_with(cfg: &EnumConfig, sink: &dyn LatticeSink) -> Result<CountResult, EnumError> {
    cfg.validate()?;
    let start = Instant::now();
    let n = cfg.target_n;
    let mut stats = SearchStats::new(n);
    if n == 1 {
        sink.accept(&Lattice::trivial());
    } else {
        let depth = cfg.effective_split_depth();
        if depth <= 2 {
            let mut driver = Driver::new(cfg, sink);
            driver.expand(Node {
                lattice: Lattice::two(),
                generators: None,
            });
            stats = driver.stats;
        } else {
            let frontier = split_frontier(cfg, depth)?;
            stats.merge(&frontier.stats);
            let roots = frontier.roots;
            let next = AtomicUsize::new(0);
            let workers = cfg.jobs.min(roots.len()).max(1);
            let results: Vec<SearchStats> = thread::scope(|s| {
                let handles: Vec<_> = (0..workers)
                    .map(|_| {
                        s.spawn(|| {
                            let mut driver = Driver::new(cfg, sink);
                            loop {
                                let i = next.fetch_add(1, Ordering::Relaxed);
                                let Some(root) = roots.get(i) else { break };
                                driver.expand(Node {
                                    lattice: root.clone(),
                                    generators: None,
                                });
                            }
                            driver.stats
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("enumeration worker panicked"))
                    .collect()
            });
            for r in &results {
                stats.merge(r);
            }
        }
    }
    let mut counts = stats.counts;
    // sizes 1 and 2 hold exactly one lattice, which belongs to every class
    counts[1..=n.min(2)].fill(1);
    Ok(CountResult {
        target_n: n,
        counts,
        elapsed: start.elapsed(),
        nodes: stats.nodes,
        extensions: stats.extensions,
    })
}

/// Largest size accepted by [`brute_force_reference`].
pub const ORACLE_CAP: usize = 9;

/// Counts isomorphism classes of size `n` in `class` with the orderly driver,
/// filtering only by levelization and testing class membership at size `n`.
pub fn brute_force_reference(n: usize, class: LatticeClass) -> Result<u64, EnumError> {
    if n > ORACLE_CAP {
        return Err(EnumError::OracleCap { n, cap: ORACLE_CAP });
    }
    if n == 0 {
        return Err(EnumError::InvalidConfig("size must be at least 1".into()));
    }
    if n <= 2 {
        return Ok(1);
    }
    let cfg = EnumConfig::new(n, LatticeClass::All).algorithm(Algorithm::Weight);
    let found = AtomicU64::new(0);
    let sink = |l: &Lattice| {
        if class.contains(l) {
            found.fetch_add(1, Ordering::Relaxed);
        }
    };
    enumerate_with(&cfg, &sink)?;
    Ok(found.into_inner())
}

/// Modular counts `m(2..=N)` from vertically indecomposable counts
/// `mv(2..=N)` via `m(n) = Σ_{k=2}^{n} mv(k)·m(n-k+1)` with `m(1) = 1`.
pub fn counts_from_vi(mv: &[u64]) -> Vec<u64> {
    // m[i] is m(i + 1)
    let mut m = vec![1u64];
    for n in 2..=mv.len() + 1 {
        let total = (2..=n).map(|k| mv[k - 2] * m[n - k]).sum();
        m.push(total);
    }
    m.split_off(1)
}

/// A count sequence together with its vertically indecomposable part, both
/// starting at size 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeries {
    pub m: Vec<u64>,
    pub mv: Vec<u64>,
}

impl CountSeries {
    pub fn from_vi(mv: Vec<u64>) -> CountSeries {
        CountSeries {
            m: counts_from_vi(&mv),
            mv,
        }
    }

    /// Whether `m` and `mv` are linked by the vertical-sum convolution.
    pub fn is_consistent(&self) -> bool {
        self.m.len() == self.mv.len() && counts_from_vi(&self.mv) == self.m
    }
}

/// One row of the five-column count table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub all: u64,
    pub semimodular: u64,
    pub vi_semimodular: u64,
    pub modular: u64,
    pub vi_modular: u64,
}

/// Counts all lattices, semimodular, VI semimodular, modular and VI modular
/// lattices for sizes `1..=n`.
pub fn count_table(n: usize, jobs: usize) -> Result<Vec<TableRow>, EnumError> {
    let run = |class, vi| enumerate(&EnumConfig::new(n, class).vi_only(vi).jobs(jobs));
    let all = run(LatticeClass::All, false)?;
    let semi = run(LatticeClass::Semimodular, false)?;
    let vi_semi = run(LatticeClass::Semimodular, true)?;
    let modular = run(LatticeClass::Modular, false)?;
    let vi_mod = run(LatticeClass::Modular, true)?;
    Ok((1..=n)
        .map(|m| TableRow {
            n: m,
            all: all.count(m),
            semimodular: semi.count(m),
            vi_semimodular: vi_semi.count(m),
            modular: modular.count(m),
            vi_modular: vi_mod.count(m),
        })
        .collect())
}
