//! Command-line front end shared by the `latgen` binary and the tests.

use std::collections::HashSet;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::alphabeta::{generate_alpha_beta, verify_lower_bound};
use crate::canonical::canonical_key;
use crate::enumerate::{
    brute_force_reference, count_table, counts_from_vi, enumerate, enumerate_with, Algorithm, CollectSink,
    EnumConfig, WriterSink, ORACLE_CAP,
};
use crate::extension::LatticeClass;

/// Environment variable giving the default worker count.
pub const JOBS_ENV: &str = "LATGEN_JOBS";

#[derive(Parser, Debug)]
#[command(name = "latgen", about = "Count and generate finite lattices up to isomorphism")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print `n<TAB>count` for n = 1..=size.
    Count(EnumArgs),
    /// Write every counted lattice of the target size as a cover list.
    Emit {
        #[command(flatten)]
        args: EnumArgs,
        /// Output file (standard output when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print all five count columns for n = 1..=size.
    Table {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Emit or check the 2^(n-3) alpha-beta modular lattices.
    Alphabeta {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Cross-check drivers, pruning and the vertical-sum identity.
    Verify {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct EnumArgs {
    #[arg(long)]
    size: usize,
    #[arg(long, value_enum, default_value = "all")]
    class: ClassArg,
    /// Count vertically indecomposable lattices only.
    #[arg(long)]
    vi: bool,
    #[arg(long, value_enum, default_value = "canon-path")]
    algorithm: AlgorithmArg,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long = "split-depth", default_value_t = 0)]
    split_depth: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    All,
    Semimodular,
    Modular,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgorithmArg {
    Weight,
    CanonPath,
}

impl EnumArgs {
    fn config(&self) -> EnumConfig {
        let class = match self.class {
            ClassArg::All => LatticeClass::All,
            ClassArg::Semimodular => LatticeClass::Semimodular,
            ClassArg::Modular => LatticeClass::Modular,
        };
        let algorithm = match self.algorithm {
            AlgorithmArg::Weight => Algorithm::Weight,
            AlgorithmArg::CanonPath => Algorithm::CanonPath,
        };
        EnumConfig::new(self.size, class)
            .vi_only(self.vi)
            .algorithm(algorithm)
            .jobs(resolve_jobs(self.jobs))
            .split_depth(self.split_depth)
    }
}

fn resolve_jobs(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var(JOBS_ENV).ok().and_then(|v| v.trim().parse().ok()))
        .unwrap_or(1)
}

/// Runs the command line `args` (including the program name) and returns the
/// process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Count(args) => {
            let r = enumerate(&args.config()).map_err(|e| e.to_string())?;
            out.write_all(r.to_tsv().as_bytes()).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Emit { args, out: path } => {
            let cfg = args.config();
            let r = match &path {
                Some(p) => {
                    let file = File::create(p).map_err(|e| format!("{}: {e}", p.display()))?;
                    let sink = WriterSink::new(BufWriter::new(file));
                    let r = enumerate_with(&cfg, &sink).map_err(|e| e.to_string())?;
                    sink.finish().map_err(|e| e.to_string())?;
                    r
                }
                None => {
                    let sink = WriterSink::new(Vec::new());
                    let r = enumerate_with(&cfg, &sink).map_err(|e| e.to_string())?;
                    let buf = sink.finish().map_err(|e| e.to_string())?;
                    out.write_all(&buf).map_err(|e| e.to_string())?;
                    r
                }
            };
            // counts go to the diagnostic stream when lattices occupy stdout
            let table = r.to_tsv();
            if path.is_some() {
                out.write_all(table.as_bytes()).map_err(|e| e.to_string())?;
            } else {
                err.write_all(table.as_bytes()).map_err(|e| e.to_string())?;
            }
            Ok(0)
        }
        Command::Table { size, jobs } => {
            if size == 0 {
                return Err("size must be at least 1".into());
            }
            let rows = count_table(size, resolve_jobs(jobs)).map_err(|e| e.to_string())?;
            let mut text = String::from("n\tall\tsemimodular\tvi_semimodular\tmodular\tvi_modular\n");
            for r in rows {
                text.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.n, r.all, r.semimodular, r.vi_semimodular, r.modular, r.vi_modular
                ));
            }
            out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Alphabeta { size, verify } => {
            if !(3..=crate::bits::MAX_ELEMENTS).contains(&size) {
                return Err(format!("alpha-beta size must be between 3 and 64, got {size}"));
            }
            if verify {
                if size > 14 {
                    return Err(format!("alpha-beta verification is limited to size 14, got {size}"));
                }
                let modular = if size <= 12 {
                    Some(enumerate(&EnumConfig::new(size, LatticeClass::Modular)).map_err(|e| e.to_string())?.total())
                } else {
                    None
                };
                let ok = verify_lower_bound(size, modular);
                let shown = modular.map_or_else(|| "-".to_string(), |m| m.to_string());
                writeln!(
                    out,
                    "{size}\t{}\t{shown}\t{}",
                    1u64 << (size - 3),
                    if ok { "ok" } else { "FAIL" }
                )
                .map_err(|e| e.to_string())?;
                Ok(if ok { 0 } else { 1 })
            } else {
                if size > 30 {
                    return Err(format!("refusing to emit 2^{} lattices", size - 3));
                }
                for l in generate_alpha_beta(size) {
                    writeln!(out, "{l}").map_err(|e| e.to_string())?;
                }
                Ok(0)
            }
        }
        Command::Verify { max_n, jobs } => {
            if max_n > ORACLE_CAP {
                return Err(format!("verify is limited to --max-n {ORACLE_CAP}, got {max_n}"));
            }
            if max_n < 1 {
                return Err("--max-n must be at least 1".into());
            }
            let failures = verify(max_n, resolve_jobs(jobs), out).map_err(|e| e.to_string())?;
            if failures > 0 {
                writeln!(err, "{failures} check(s) failed").map_err(|e| e.to_string())?;
                Ok(1)
            } else {
                Ok(0)
            }
        }
    }
}

/// Runs the oracle cross-checks up to `max_n`, writing one line per check.
/// Returns the number of failed checks.
fn verify(max_n: usize, jobs: usize, out: &mut dyn Write) -> Result<usize, Box<dyn std::error::Error>> {
    let mut failures = 0;
    let mut report = |out: &mut dyn Write, name: &str, n: usize, detail: &str, ok: bool| -> std::io::Result<()> {
        if !ok {
            failures += 1;
        }
        writeln!(out, "{name}\t{n}\t{detail}\t{}", if ok { "ok" } else { "FAIL" })
    };
    for n in 3..=max_n {
        for class in LatticeClass::ALL {
            let mut keys = Vec::new();
            let mut counts = Vec::new();
            for alg in [Algorithm::Weight, Algorithm::CanonPath] {
                let cfg = EnumConfig::new(n, class).algorithm(alg).jobs(jobs);
                let sink = CollectSink::new();
                let r = enumerate_with(&cfg, &sink)?;
                let mut k: Vec<String> = sink.into_inner().iter().map(canonical_key).collect();
                k.sort();
                keys.push(k);
                counts.push(r.counts);
            }
            let distinct = keys[1].iter().collect::<HashSet<_>>().len() == keys[1].len();
            report(out, "driver-equivalence", n, class.name(), keys[0] == keys[1] && counts[0] == counts[1] && distinct)?;
            let oracle = brute_force_reference(n, class)?;
            let pruned = enumerate(&EnumConfig::new(n, class).jobs(jobs))?.total();
            report(out, "pruning-soundness", n, class.name(), oracle == pruned)?;
        }
    }
    if max_n >= 2 {
        let m = enumerate(&EnumConfig::new(max_n, LatticeClass::Modular).jobs(jobs))?;
        let mv = enumerate(&EnumConfig::new(max_n, LatticeClass::Modular).vi_only(true).jobs(jobs))?;
        let derived = counts_from_vi(&mv.counts[2..]);
        report(out, "convolution", max_n, "modular", derived == m.counts[2..])?;
    }
    Ok(failures)
}
