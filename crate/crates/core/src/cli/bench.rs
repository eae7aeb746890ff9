use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{Context, Result};
use rayon::prelude::*;

use super::run::{run_solver, RunResult, SolverKind};
use crate::graph::{parse_instance, ColoredInstance};

/// A hard failure: solvers disagree, or a witness does not check out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchFailure {
    pub instance: String,
    pub reason: String,
    pub reproduce: String,
}

#[derive(Debug, Clone, Default)]
pub struct BenchOutcome {
    /// Sorted by file name, then by solver order as requested.
    pub results: Vec<RunResult>,
    pub failures: Vec<BenchFailure>,
}

/// Instance files (`*.bfsp`) directly inside `dir`, sorted by file name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).with_context(|| format!("reading corpus {}", dir.display()))? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "bfsp") {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

pub fn run_bench(dir: &Path, solvers: &[SolverKind], timeout: Duration, jobs: Option<usize>) -> Result<BenchOutcome> {
    let files = corpus_files(dir)?;
    let mut corpus: Vec<(String, PathBuf, ColoredInstance)> = Vec::with_capacity(files.len());
    for path in files {
        let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let inst = parse_instance(&text).with_context(|| format!("parsing {}", path.display()))?;
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        corpus.push((name, path, inst));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .context("building the worker pool")?;
    let jobs: Vec<(usize, SolverKind)> = (0..corpus.len())
        .flat_map(|i| solvers.iter().map(move |&s| (i, s)))
        .collect();
    let results: Vec<RunResult> = pool.install(|| {
        jobs.par_iter()
            .map(|&(i, solver)| {
                let mut r = run_solver(&corpus[i].2, solver, Some(timeout));
                r.instance = Some(corpus[i].0.clone());
                r
            })
            .collect()
    });

    let mut failures = Vec::new();
    for (i, (name, path, inst)) in corpus.iter().enumerate() {
        let runs = &results[i * solvers.len()..(i + 1) * solvers.len()];
        let repro = |s: SolverKind| format!("bfsp solve {} --solver {s}", path.display());
        for r in runs {
            if !r.consistent_with(inst) {
                failures.push(BenchFailure {
                    instance: name.clone(),
                    reason: format!("{} returned an invalid witness", r.solver),
                    reproduce: repro(r.solver),
                });
            }
        }
        let decided: Vec<&RunResult> = runs.iter().filter(|r| r.status.decided().is_some()).collect();
        if let Some(first) = decided.first() {
            if let Some(other) = decided.iter().find(|r| r.status != first.status) {
                failures.push(BenchFailure {
                    instance: name.clone(),
                    reason: format!(
                        "{} says {:?} but {} says {:?}",
                        first.solver, first.status, other.solver, other.status
                    ),
                    reproduce: format!("{} && {}", repro(first.solver), repro(other.solver)),
                });
            }
        }
    }
    Ok(BenchOutcome { results, failures })
}

/// Fixed-width text table of a bench run.
pub fn render_table(results: &[RunResult]) -> String {
    let width = results
        .iter()
        .filter_map(|r| r.instance.as_ref().map(String::len))
        .max()
        .unwrap_or(8)
        .max(8);
    let mut out = format!("{:<width$}  {:<6}  {:<7}  {:>10}\n", "instance", "solver", "status", "ms");
    for r in results {
        let status = serde_json::to_value(r.status).unwrap();
        let _ = writeln!(
            out,
            "{:<width$}  {:<6}  {:<7}  {:>10.3}",
            r.instance.as_deref().unwrap_or("-"),
            r.solver.name(),
            status.as_str().unwrap_or("?"),
            r.elapsed_ms
        );
    }
    out
}
