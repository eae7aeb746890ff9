use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::deadline::Deadline;
use crate::fpt::{solve_fes_with, solve_fvs_with};
use crate::graph::{validate_solution, ColoredInstance, PathSolution};
use crate::solver::{solve_dp_with, solve_oracle_with, SolveError, DEFAULT_ORACLE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Dp,
    Fes,
    Fvs,
    Oracle,
}

impl SolverKind {
    pub const ALL: [SolverKind; 4] = [SolverKind::Dp, SolverKind::Fes, SolverKind::Fvs, SolverKind::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Dp => "dp",
            SolverKind::Fes => "fes",
            SolverKind::Fvs => "fvs",
            SolverKind::Oracle => "oracle",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown solver {s:?}; expected dp, fes, fvs or oracle"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Yes,
    No,
    Timeout,
    /// The oracle's step cap ran out before an answer.
    Capped,
}

impl Status {
    /// A definite answer, as opposed to a run that gave up.
    pub fn decided(self) -> Option<bool> {
        match self {
            Status::Yes => Some(true),
            Status::No => Some(false),
            Status::Timeout | Status::Capped => None,
        }
    }
}

/// One solver run, as printed by `solve` and recorded by `bench`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub solver: SolverKind,
    pub status: Status,
    /// 1-based vertex ids.
    pub witness: Option<Vec<usize>>,
    pub histogram: Option<Vec<usize>>,
    pub elapsed_ms: f64,
    pub n: usize,
    pub m: usize,
    pub c: usize,
    pub dist: Option<usize>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl RunResult {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(line)
    }

    /// A witness is present only for `yes`, and it is a valid solution.
    pub fn consistent_with(&self, inst: &ColoredInstance) -> bool {
        match (&self.witness, self.status) {
            (None, Status::Yes) => false,
            (None, _) => true,
            (Some(w), Status::Yes) => {
                let vertices: Vec<usize> = w.iter().map(|&v| v.wrapping_sub(1)).collect();
                if vertices.iter().any(|&v| v >= inst.n()) {
                    return false;
                }
                let sol = PathSolution::from_vertices(inst, vertices);
                self.histogram.as_ref() == Some(&sol.histogram) && validate_solution(inst, &sol).is_ok()
            }
            (Some(_), _) => false,
        }
    }
}

/// Runs one solver under a time limit.
pub fn run_solver(inst: &ColoredInstance, solver: SolverKind, timeout: Option<Duration>) -> RunResult {
    let deadline = timeout.map_or_else(Deadline::none, Deadline::after);
    let mut meta = BTreeMap::new();
    let start = Instant::now();
    let outcome: Result<Option<PathSolution>, Status> = match solver {
        SolverKind::Dp => solve_dp_with(inst, &deadline)
            .map(|(sol, stats)| {
                meta.insert("max_states".into(), stats.states_per_layer.iter().max().unwrap_or(&0).to_string());
                sol
            })
            .map_err(|_| Status::Timeout),
        SolverKind::Fes => solve_fes_with(inst, &deadline)
            .map(|run| {
                meta.insert("feedback_edges".into(), run.feedback.k().to_string());
                meta.insert("guesses".into(), run.guesses.to_string());
                run.solution
            })
            .map_err(|_| Status::Timeout),
        SolverKind::Fvs => solve_fvs_with(inst, &deadline)
            .map(|run| {
                meta.insert("feedback_vertices".into(), run.feedback.k().to_string());
                meta.insert("subsets".into(), run.subsets.to_string());
                run.solution
            })
            .map_err(|_| Status::Timeout),
        SolverKind::Oracle => solve_oracle_with(inst, DEFAULT_ORACLE_CAP, &deadline).map_err(|e| match e {
            SolveError::CapExceeded(_) => Status::Capped,
            SolveError::Interrupted(_) => Status::Timeout,
        }),
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let (status, witness) = match outcome {
        Ok(Some(sol)) => (Status::Yes, Some(sol)),
        Ok(None) => (Status::No, None),
        Err(status) => (status, None),
    };
    RunResult {
        instance: None,
        solver,
        status,
        witness: witness.as_ref().map(|w| w.vertices.iter().map(|v| v + 1).collect()),
        histogram: witness.map(|w| w.histogram),
        elapsed_ms,
        n: inst.n(),
        m: inst.m(),
        c: inst.num_colors(),
        dist: inst.distance(inst.s(), inst.t()),
        meta,
    }
}
