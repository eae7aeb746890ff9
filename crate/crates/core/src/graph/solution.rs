use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::ColoredInstance;

/// A candidate answer: the vertex sequence from `s` to `t` and the color
/// count vector (`histogram[i]` = vertices of color `i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathSolution {
    pub vertices: Vec<usize>,
    pub histogram: Vec<usize>,
}

impl PathSolution {
    pub fn from_vertices(inst: &ColoredInstance, vertices: Vec<usize>) -> Self {
        let histogram = inst.histogram(&vertices);
        Self { vertices, histogram }
    }

    /// Number of edges on the path.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

/// True iff the largest and smallest entries differ by at most one. Zero
/// entries count, so a color missing from the path pulls the minimum down.
pub fn is_balance_fair(histogram: &[usize]) -> bool {
    match (histogram.iter().max(), histogram.iter().min()) {
        (Some(max), Some(min)) => max - min <= 1,
        _ => true,
    }
}

/// The first predicate a claimed solution fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("empty vertex sequence")]
    Empty,
    #[error("vertex id {0} out of range")]
    UnknownVertex(usize),
    #[error("path starts at {found}, expected s = {expected}")]
    WrongStart { expected: usize, found: usize },
    #[error("path ends at {found}, expected t = {expected}")]
    WrongEnd { expected: usize, found: usize },
    #[error("vertices {0} and {1} are consecutive but not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {0} repeats")]
    RepeatedVertex(usize),
    #[error("histogram {claimed:?} does not match recount {actual:?}")]
    HistogramMismatch { claimed: Vec<usize>, actual: Vec<usize> },
    #[error("path has length {length} but dist(s,t) = {distance:?}")]
    NotShortest { length: usize, distance: Option<usize> },
    #[error("histogram {0:?} is not balance-fair")]
    NotBalanceFair(Vec<usize>),
}

/// Checks path validity, the histogram, shortestness and balance-fairness,
/// in that order.
pub fn validate_solution(inst: &ColoredInstance, sol: &PathSolution) -> Result<(), Violation> {
    let vs = &sol.vertices;
    let (first, last) = match (vs.first(), vs.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return Err(Violation::Empty),
    };
    if let Some(&bad) = vs.iter().find(|&&v| v >= inst.n()) {
        return Err(Violation::UnknownVertex(bad));
    }
    if first != inst.s() {
        return Err(Violation::WrongStart {
            expected: inst.s(),
            found: first,
        });
    }
    if last != inst.t() {
        return Err(Violation::WrongEnd {
            expected: inst.t(),
            found: last,
        });
    }
    if let Some(w) = vs.windows(2).find(|w| !inst.has_edge(w[0], w[1])) {
        return Err(Violation::NotAdjacent(w[0], w[1]));
    }
    let mut seen = vec![false; inst.n()];
    for &v in vs {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Violation::RepeatedVertex(v));
        }
    }
    let actual = inst.histogram(vs);
    if actual != sol.histogram {
        return Err(Violation::HistogramMismatch {
            claimed: sol.histogram.clone(),
            actual,
        });
    }
    let distance = inst.distance(inst.s(), inst.t());
    if distance != Some(sol.length()) {
        return Err(Violation::NotShortest {
            length: sol.length(),
            distance,
        });
    }
    if !is_balance_fair(&sol.histogram) {
        return Err(Violation::NotBalanceFair(sol.histogram.clone()));
    }
    Ok(())
}
