//! The `bfsp` command line: `solve`, `kernelize`, `generate` and `bench`.
//!
//! Exit codes: 0 for a yes answer (or success), 1 for a no answer, 2 for
//! errors, timeouts and bench failures.

mod bench;
mod run;

pub use bench::{corpus_files, render_table, run_bench, BenchFailure, BenchOutcome};
pub use run::{run_solver, RunResult, SolverKind, Status};

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use crate::graph::{parse_instance, serialize_instance, ColoredInstance};
use crate::kernel::{kernel_nd, kernel_ph_free, DEFAULT_H};
use crate::random::{random_instance, RandomParams, Shape};
use crate::reduction::{
    cross_compose_clique_cover, cross_compose_treedepth, gen_avg_distance, gen_exact_cover, gen_exact_hitting_set,
    gen_vertex_cover, GeneratorReport, SetSystem, VcInstance,
};
use crate::report::KeyValueReport;

pub const TIMEOUT_ENV: &str = "BFSP_TIMEOUT_MS";

#[derive(Debug, Parser)]
#[command(name = "bfsp", version, about = "Balance-fair shortest path solvers, kernels and generators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelKind {
    Nd,
    Ph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Ec,
    Vc,
    Ehs,
    ComposeTd,
    ComposeCc,
    Avgdist,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeArg {
    Sparse,
    Layered,
    Twins,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide an instance and print one JSON result line.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = SolverKind::Dp)]
        solver: SolverKind,
        /// Milliseconds; unlimited when absent.
        #[arg(long, env = TIMEOUT_ENV)]
        timeout: Option<u64>,
    },
    /// Shrink an instance to a kernel and write it with a `.report` file.
    Kernelize {
        path: PathBuf,
        #[arg(long, value_enum)]
        kernel: KernelKind,
        #[arg(long, default_value_t = DEFAULT_H)]
        h: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output instance; stdout when absent (the report then goes to stderr).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a generated instance and its `.report` file.
    Generate {
        #[arg(long, value_enum)]
        from: Source,
        /// Source problem file (ec, vc, ehs), instance (avgdist) or batch of
        /// instances (compose-td, compose-cc).
        sources: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Vertices, for `--from random`.
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Colors, for `--from random`.
        #[arg(long, default_value_t = 3)]
        colors: usize,
        #[arg(long, value_enum, default_value_t = ShapeArg::Sparse)]
        shape: ShapeArg,
        #[arg(long, default_value_t = 3)]
        extra_edges: usize,
    },
    /// Run solvers over every `*.bfsp` file in a directory.
    Bench {
        dir: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = vec![SolverKind::Dp, SolverKind::Fes])]
        solvers: Vec<SolverKind>,
        /// Per-run limit in milliseconds.
        #[arg(long, env = TIMEOUT_ENV, default_value_t = 10_000)]
        timeout: u64,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write one JSON line per run here.
        #[arg(long)]
        records: Option<PathBuf>,
    },
}

/// Parses arguments, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn read_instance(path: &Path) -> Result<ColoredInstance> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Writes `text` to `path` through a temporary sibling and a rename.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let tmp = path.with_extension("tmp-write");
    std::fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))
}

/// Instance to `out` and report next to it, or instance to stdout and report
/// to stderr.
fn emit(out: Option<&Path>, inst: &ColoredInstance, report: &KeyValueReport) -> Result<()> {
    match out {
        Some(path) => {
            write_atomic(path, &serialize_instance(inst))?;
            write_atomic(&path.with_extension("report"), &report.to_string())
        }
        None => {
            print!("{}", serialize_instance(inst));
            eprint!("{report}");
            Ok(())
        }
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Solve { path, solver, timeout } => {
            let inst = read_instance(&path)?;
            let mut result = run_solver(&inst, solver, timeout.map(Duration::from_millis));
            result.instance = Some(path.display().to_string());
            println!("{}", result.to_json_line());
            Ok(match result.status {
                Status::Yes => 0,
                Status::No => 1,
                Status::Timeout | Status::Capped => 2,
            })
        }
        Command::Kernelize {
            path,
            kernel,
            h,
            seed,
            out,
        } => {
            let inst = read_instance(&path)?;
            let (kern, report) = match kernel {
                KernelKind::Nd => kernel_nd(&inst),
                KernelKind::Ph => kernel_ph_free(&inst, h, seed)?,
            };
            let mut kv = report.to_report();
            kv.push("source", path.display());
            emit(out.as_deref(), &kern, &kv)?;
            Ok(0)
        }
        Command::Generate {
            from,
            sources,
            seed,
            out,
            n,
            colors,
            shape,
            extra_edges,
        } => {
            let (inst, report) = generate(from, &sources, seed, n, colors, shape, extra_edges)?;
            emit(out.as_deref(), &inst, &report)?;
            Ok(0)
        }
        Command::Bench {
            dir,
            solvers,
            timeout,
            jobs,
            records,
        } => {
            if solvers.is_empty() {
                bail!("no solvers selected");
            }
            let outcome = run_bench(&dir, &solvers, Duration::from_millis(timeout), jobs)?;
            if let Some(path) = records {
                let text: String = outcome.results.iter().map(|r| r.to_json_line() + "\n").collect();
                write_atomic(&path, &text)?;
            }
            print!("{}", render_table(&outcome.results));
            for f in &outcome.failures {
                eprintln!("FAILURE {}: {}\n  reproduce: {}", f.instance, f.reason, f.reproduce);
            }
            Ok(if outcome.failures.is_empty() { 0 } else { 2 })
        }
    }
}

fn one_source(sources: &[PathBuf]) -> Result<&Path> {
    match sources {
        [one] => Ok(one),
        _ => bail!("expected exactly one source file, got {}", sources.len()),
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn generate(
    from: Source,
    sources: &[PathBuf],
    seed: u64,
    n: usize,
    colors: usize,
    shape: ShapeArg,
    extra_edges: usize,
) -> Result<(ColoredInstance, KeyValueReport)> {
    let with_source = |r: GeneratorReport| {
        let mut kv = r.to_report();
        kv.push("sources", sources.iter().map(|p| p.display().to_string()).collect::<Vec<_>>().join(" "));
        kv
    };
    Ok(match from {
        Source::Ec => {
            let sys = SetSystem::parse(&read_text(one_source(sources)?)?)?;
            let (inst, r) = gen_exact_cover(&sys)?;
            (inst, with_source(r))
        }
        Source::Ehs => {
            let sys = SetSystem::parse(&read_text(one_source(sources)?)?)?;
            let (inst, r) = gen_exact_hitting_set(&sys)?;
            (inst, with_source(r))
        }
        Source::Vc => {
            let vc = VcInstance::parse(&read_text(one_source(sources)?)?)?;
            let (inst, r) = gen_vertex_cover(&vc)?;
            (inst, with_source(r))
        }
        Source::Avgdist => {
            let (inst, r) = gen_avg_distance(&read_instance(one_source(sources)?)?);
            (inst, with_source(r))
        }
        Source::ComposeTd | Source::ComposeCc => {
            let batch = sources.iter().map(|p| read_instance(p)).collect::<Result<Vec<_>>>()?;
            let (inst, r) = if from == Source::ComposeTd {
                cross_compose_treedepth(&batch)?
            } else {
                cross_compose_clique_cover(&batch)?
            };
            (inst, with_source(r))
        }
        Source::Random => {
            if !sources.is_empty() {
                bail!("--from random takes no source files");
            }
            let shape = match shape {
                ShapeArg::Sparse => Shape::Sparse,
                ShapeArg::Layered => Shape::Layered,
                ShapeArg::Twins => Shape::Twins,
            };
            let params = RandomParams {
                n,
                num_colors: colors,
                extra_edges,
                shape,
            };
            let inst = random_instance(params, seed);
            let mut kv = KeyValueReport::new();
            kv.push("construction", "random")
                .push("seed", seed)
                .push("n", n)
                .push("colors", colors)
                .push("shape", format!("{shape:?}").to_lowercase())
                .push("extra_edges", extra_edges);
            (inst, kv)
        }
    })
}
