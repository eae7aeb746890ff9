use std::collections::HashSet;

use crate::deadline::Deadline;
use crate::graph::{is_balance_fair, shortest_path_dag, ColoredInstance, LayeredDag, PathSolution};

use super::{fair_count_range, SolveError};

/// Step budget for [`solve_oracle`].
pub const DEFAULT_ORACLE_CAP: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathEnumeration {
    pub paths: Vec<PathSolution>,
    /// Set when `cap` paths were produced and more may exist.
    pub truncated: bool,
}

/// All distinct shortest s-t paths in lexicographic vertex order, stopping
/// after `cap` paths.
pub fn enumerate_shortest_paths(inst: &ColoredInstance, cap: usize) -> PathEnumeration {
    let mut out = PathEnumeration {
        paths: Vec::new(),
        truncated: false,
    };
    let Ok(dag) = shortest_path_dag(inst) else {
        return out;
    };
    if cap == 0 {
        out.truncated = true;
        return out;
    }
    let mut prefix = vec![inst.s()];
    let mut cursor = vec![0usize];
    while let Some(&v) = prefix.last() {
        if v == inst.t() {
            out.paths.push(PathSolution::from_vertices(inst, prefix.clone()));
            if out.paths.len() == cap {
                out.truncated = true;
                break;
            }
            prefix.pop();
            cursor.pop();
            continue;
        }
        let i = cursor.last_mut().unwrap();
        match dag.successors(v).get(*i) {
            Some(&w) => {
                *i += 1;
                prefix.push(w);
                cursor.push(0);
            }
            None => {
                prefix.pop();
                cursor.pop();
            }
        }
    }
    // the cap can coincide with the final path
    if out.truncated && cursor.iter().zip(&prefix).all(|(&i, &v)| v == inst.t() || i >= dag.successors(v).len()) {
        out.truncated = false;
    }
    out
}

/// Most vertices of each color on any DAG continuation from `v` (exclusive)
/// to `t`, filled by a memoised depth-first walk.
fn max_remaining(inst: &ColoredInstance, dag: &LayeredDag) -> Vec<Vec<usize>> {
    let c = inst.num_colors();
    let mut memo: Vec<Option<Vec<usize>>> = vec![None; inst.n()];
    memo[inst.t()] = Some(vec![0; c]);
    let mut stack = vec![(inst.s(), false)];
    while let Some((v, expanded)) = stack.pop() {
        if memo[v].is_some() {
            continue;
        }
        if !expanded {
            stack.push((v, true));
            for &w in dag.successors(v) {
                if memo[w].is_none() {
                    stack.push((w, false));
                }
            }
            continue;
        }
        let mut best = vec![0; c];
        for &w in dag.successors(v) {
            let below = memo[w].as_ref().expect("children first");
            for (i, b) in best.iter_mut().enumerate() {
                *b = (*b).max(below[i] + usize::from(inst.color(w) == i));
            }
        }
        memo[v] = Some(best);
    }
    memo.into_iter().map(Option::unwrap_or_default).collect()
}

/// First balance-fair path in lexicographic enumeration order, with the
/// default step cap.
pub fn solve_oracle(inst: &ColoredInstance) -> Result<Option<PathSolution>, SolveError> {
    solve_oracle_with(inst, DEFAULT_ORACLE_CAP, &Deadline::none())
}

/// Walks shortest paths depth-first in lexicographic order and returns the
/// first balance-fair one.
///
/// Branches are cut only when they provably contain no balance-fair path: a
/// color already above the fair maximum, a color that can no longer reach
/// the fair minimum, or a `(vertex, counts)` prefix state already explored
/// without success. `cap` bounds the number of prefixes visited.
pub fn solve_oracle_with(
    inst: &ColoredInstance,
    cap: u64,
    deadline: &Deadline,
) -> Result<Option<PathSolution>, SolveError> {
    let Ok(dag) = shortest_path_dag(inst) else {
        return Ok(None);
    };
    let c = inst.num_colors();
    let (lo, hi) = fair_count_range(dag.path_vertices(), c);
    let reach = max_remaining(inst, &dag);
    let viable = |v: usize, counts: &[usize]| {
        counts
            .iter()
            .zip(&reach[v])
            .all(|(&k, &more)| k <= hi && k + more >= lo)
    };

    let mut counts = vec![0usize; c];
    counts[inst.color(inst.s())] += 1;
    if !viable(inst.s(), &counts) {
        return Ok(None);
    }
    let mut dead: HashSet<(usize, Vec<usize>)> = HashSet::new();
    let mut prefix = vec![inst.s()];
    let mut cursor = vec![0usize];
    let mut steps: u64 = 1;
    while let Some(&v) = prefix.last() {
        if v == inst.t() {
            if is_balance_fair(&counts) {
                return Ok(Some(PathSolution::from_vertices(inst, prefix)));
            }
            dead.insert((v, counts.clone()));
            counts[inst.color(v)] -= 1;
            prefix.pop();
            cursor.pop();
            continue;
        }
        let i = cursor.last_mut().unwrap();
        let Some(&w) = dag.successors(v).get(*i) else {
            dead.insert((v, counts.clone()));
            counts[inst.color(v)] -= 1;
            prefix.pop();
            cursor.pop();
            continue;
        };
        *i += 1;
        counts[inst.color(w)] += 1;
        if !viable(w, &counts) || dead.contains(&(w, counts.clone())) {
            counts[inst.color(w)] -= 1;
            continue;
        }
        steps += 1;
        if steps > cap {
            return Err(SolveError::CapExceeded(cap));
        }
        if steps.is_multiple_of(4096) {
            deadline.check()?;
        }
        prefix.push(w);
        cursor.push(0);
    }
    Ok(None)
}
