use std::collections::HashSet;

use crate::deadline::{Deadline, Interrupted};
use crate::graph::{bfs_distances, validate_solution, ColoredInstance, PathSolution};

use super::{extend_walk, Forest};

/// Edges whose removal leaves a forest; minimum by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeedbackEdgeSet {
    /// `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl FeedbackEdgeSet {
    pub fn k(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Debug, Clone)]
pub struct FesRun {
    pub solution: Option<PathSolution>,
    pub feedback: FeedbackEdgeSet,
    /// Subsets of the feedback edge set examined; always `2^k`.
    pub guesses: u128,
    /// Distinct walks that reached validation.
    pub candidates: usize,
}

fn spanning(inst: &ColoredInstance) -> (Forest, Vec<(usize, usize)>) {
    Forest::spanning(|u| inst.neighbors(u).to_vec(), inst.n(), &vec![false; inst.n()])
}

/// All non-tree edges of a BFS spanning forest: `m - n + #components` edges.
pub fn compute_fes(inst: &ColoredInstance) -> FeedbackEdgeSet {
    FeedbackEdgeSet {
        edges: spanning(inst).1,
    }
}

pub fn solve_fes(inst: &ColoredInstance) -> Option<PathSolution> {
    solve_fes_with(inst, &Deadline::none()).expect("no deadline").solution
}

/// Tries every subset `F'` of a minimum feedback edge set as the set of
/// feedback edges on the solution. The endpoints of `F'` together with `s`
/// and `t`, sorted by distance from `s`, are joined by `F'` edges or by the
/// unique path in the spanning forest. Returns the lexicographically smallest
/// resulting walk that is a balance-fair shortest path.
pub fn solve_fes_with(inst: &ColoredInstance, deadline: &Deadline) -> Result<FesRun, Interrupted> {
    let (forest, fes) = spanning(inst);
    let k = fes.len();
    let dist = bfs_distances(inst, inst.s());
    let reachable = dist[inst.t()].is_some();

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut best: Option<PathSolution> = None;
    let mut guesses = 0u128;
    let mut mask = vec![false; k];
    loop {
        if guesses.is_multiple_of(1024) {
            deadline.check()?;
        }
        guesses = guesses.saturating_add(1);
        if reachable {
            let chosen: Vec<(usize, usize)> = (0..k).filter(|&i| mask[i]).map(|i| fes[i]).collect();
            consider(inst, &forest, &dist, &chosen, &mut seen, &mut best);
        }
        if !advance(&mut mask) {
            break;
        }
    }
    Ok(FesRun {
        solution: best,
        feedback: FeedbackEdgeSet { edges: fes },
        guesses,
        candidates: seen.len(),
    })
}

/// Binary increment; `false` once every subset has been produced.
fn advance(mask: &mut [bool]) -> bool {
    for bit in mask.iter_mut() {
        *bit = !*bit;
        if *bit {
            return true;
        }
    }
    false
}

fn consider(
    inst: &ColoredInstance,
    forest: &Forest,
    dist: &[Option<usize>],
    chosen: &[(usize, usize)],
    seen: &mut HashSet<Vec<usize>>,
    best: &mut Option<PathSolution>,
) {
    let Some(walk) = stitch(inst, forest, dist, chosen) else {
        return;
    };
    if !seen.insert(walk.clone()) {
        return;
    }
    let cand = PathSolution::from_vertices(inst, walk);
    if validate_solution(inst, &cand).is_ok() && best.as_ref().is_none_or(|b| cand.vertices < b.vertices) {
        *best = Some(cand);
    }
}

/// The unique s-t walk induced by one guess, or `None` when the guess is
/// inconsistent.
fn stitch(
    inst: &ColoredInstance,
    forest: &Forest,
    dist: &[Option<usize>],
    chosen: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let mut points = vec![inst.s(), inst.t()];
    for &(u, v) in chosen {
        let (du, dv) = (dist[u]?, dist[v]?);
        if du.abs_diff(dv) != 1 {
            return None;
        }
        points.push(u);
        points.push(v);
    }
    points.sort_unstable();
    points.dedup();
    let mut keyed: Vec<(usize, usize)> = points.iter().map(|&v| (dist[v].unwrap(), v)).collect();
    keyed.sort_unstable();
    if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
        return None;
    }
    let mut walk = vec![keyed[0].1];
    for w in keyed.windows(2) {
        let (a, b) = (w[0].1, w[1].1);
        if chosen.contains(&(a.min(b), a.max(b))) {
            walk.push(b);
        } else {
            extend_walk(&mut walk, &forest.path(a, b)?);
        }
    }
    Some(walk)
}
