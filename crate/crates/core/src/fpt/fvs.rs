use std::collections::HashSet;

use crate::deadline::{Deadline, Interrupted};
use crate::graph::{shortest_path_dag, validate_solution, ColoredInstance, LayeredDag, PathSolution};

use super::{extend_walk, Forest};

/// Vertices whose removal leaves a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeedbackVertexSet {
    /// Sorted ascending.
    pub vertices: Vec<usize>,
}

impl FeedbackVertexSet {
    pub fn k(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Debug, Clone)]
pub struct FvsRun {
    pub solution: Option<PathSolution>,
    pub feedback: FeedbackVertexSet,
    /// Subsets of the feedback vertex set examined.
    pub subsets: u64,
    /// Subsets dropped because two members share a distance from `s`.
    pub tied_orderings: u64,
    /// Distinct walks that reached validation.
    pub candidates: usize,
}

/// True iff deleting `removed` from `inst` leaves an acyclic graph.
pub fn is_forest_after_removal(inst: &ColoredInstance, removed: &[usize]) -> bool {
    let mut gone = vec![false; inst.n()];
    for &v in removed {
        gone[v] = true;
    }
    Forest::spanning(|u| inst.neighbors(u).to_vec(), inst.n(), &gone).1.is_empty()
}

/// Degree of `v` counted inside the alive subgraph.
fn alive_degree(inst: &ColoredInstance, alive: &[bool], v: usize) -> usize {
    inst.neighbors(v).iter().filter(|&&w| alive[w]).count()
}

/// Strips vertices of degree at most one until none remain.
fn strip_low_degree(inst: &ColoredInstance, alive: &mut [bool]) {
    let mut stack: Vec<usize> = (0..inst.n()).filter(|&v| alive[v]).collect();
    while let Some(v) = stack.pop() {
        if alive[v] && alive_degree(inst, alive, v) <= 1 {
            alive[v] = false;
            stack.extend(inst.neighbors(v).iter().copied().filter(|&w| alive[w]));
        }
    }
}

/// Vertices of a shortest cycle in the alive subgraph, if any.
fn shortest_cycle(inst: &ColoredInstance, alive: &[bool]) -> Option<Vec<usize>> {
    let n = inst.n();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for r in (0..n).filter(|&v| alive[v]) {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[r] = 0;
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|(len, _)| 2 * dist[u] >= *len) {
                break;
            }
            for &w in inst.neighbors(u) {
                if !alive[w] || w == parent[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().is_none_or(|(b, _)| len < *b) {
                        let mut cyc = Vec::new();
                        for mut x in [u, w] {
                            while x != r {
                                cyc.push(x);
                                x = parent[x];
                            }
                        }
                        cyc.push(r);
                        cyc.sort_unstable();
                        cyc.dedup();
                        best = Some((len, cyc));
                    }
                }
            }
        }
    }
    best.map(|(_, cyc)| cyc)
}

fn branch(inst: &ColoredInstance, mut alive: Vec<bool>, budget: usize) -> Option<Vec<usize>> {
    strip_low_degree(inst, &mut alive);
    let Some(cycle) = shortest_cycle(inst, &alive) else {
        return Some(Vec::new());
    };
    if budget == 0 {
        return None;
    }
    // a degree-2 cycle vertex can always be traded for a branching vertex
    // at the end of its chain
    let mut picks: Vec<usize> = cycle
        .iter()
        .copied()
        .filter(|&v| alive_degree(inst, &alive, v) >= 3)
        .collect();
    if picks.is_empty() {
        picks.push(cycle[0]);
    }
    for v in picks {
        let mut next = alive.clone();
        next[v] = false;
        if let Some(mut rest) = branch(inst, next, budget - 1) {
            rest.push(v);
            return Some(rest);
        }
    }
    None
}

/// A minimum feedback vertex set by iterative deepening over the budget,
/// branching on the vertices of a shortest cycle.
pub fn compute_fvs(inst: &ColoredInstance) -> FeedbackVertexSet {
    for budget in 0..=inst.n() {
        if let Some(mut vertices) = branch(inst, vec![true; inst.n()], budget) {
            vertices.sort_unstable();
            return FeedbackVertexSet { vertices };
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

pub fn solve_fvs(inst: &ColoredInstance) -> Option<PathSolution> {
    solve_fvs_with(inst, &Deadline::none()).expect("no deadline").solution
}

#[derive(Clone, Copy)]
enum Link {
    /// The neighbor on the path is the adjacent member of `F'`.
    Member,
    /// The path starts or ends at this member.
    Terminal,
    Outside(usize),
}

struct Search<'a> {
    inst: &'a ColoredInstance,
    dag: &'a LayeredDag,
    forest: &'a Forest,
    in_f: &'a [bool],
    order: Vec<usize>,
    seen: HashSet<Vec<usize>>,
    best: Option<PathSolution>,
    deadline: &'a Deadline,
    steps: u64,
}

impl Search<'_> {
    fn pred_links(&self, i: usize) -> Vec<Link> {
        let f = self.order[i];
        if f == self.inst.s() {
            return vec![Link::Terminal];
        }
        let mut links: Vec<Link> = self
            .dag
            .predecessors(f)
            .iter()
            .filter(|&&p| !self.in_f[p])
            .map(|&p| Link::Outside(p))
            .collect();
        if i > 0 && self.dag.predecessors(f).contains(&self.order[i - 1]) {
            links.push(Link::Member);
        }
        links
    }

    fn succ_links(&self, i: usize) -> Vec<Link> {
        let f = self.order[i];
        if f == self.inst.t() {
            return vec![Link::Terminal];
        }
        let mut links: Vec<Link> = self
            .dag
            .successors(f)
            .iter()
            .filter(|&&x| !self.in_f[x])
            .map(|&x| Link::Outside(x))
            .collect();
        if i + 1 < self.order.len() && self.dag.successors(f).contains(&self.order[i + 1]) {
            links.push(Link::Member);
        }
        links
    }

    /// Places members `i..` given the walk so far; `joined` records that the
    /// previous member guessed its successor to be member `i`.
    fn place(&mut self, i: usize, walk: Vec<usize>, joined: bool) -> Result<(), Interrupted> {
        self.steps += 1;
        if self.steps.is_multiple_of(1024) {
            self.deadline.check()?;
        }
        if i == self.order.len() {
            let mut walk = walk;
            if walk.last() != Some(&self.inst.t()) {
                let Some(tail) = self.forest.path(*walk.last().unwrap(), self.inst.t()) else {
                    return Ok(());
                };
                extend_walk(&mut walk, &tail);
            }
            self.offer(walk);
            return Ok(());
        }
        let f = self.order[i];
        for pred in self.pred_links(i) {
            let mut head = walk.clone();
            match pred {
                Link::Member => {
                    if !joined {
                        continue;
                    }
                    head.push(f);
                }
                _ if joined => continue,
                Link::Terminal => {}
                Link::Outside(p) => {
                    let Some(seg) = self.forest.path(*head.last().unwrap(), p) else {
                        continue;
                    };
                    extend_walk(&mut head, &seg);
                    head.push(f);
                }
            }
            for succ in self.succ_links(i) {
                let mut cur = head.clone();
                let next_joined = match succ {
                    Link::Member => true,
                    Link::Terminal => false,
                    Link::Outside(x) => {
                        cur.push(x);
                        false
                    }
                };
                self.place(i + 1, cur, next_joined)?;
            }
        }
        Ok(())
    }

    fn offer(&mut self, walk: Vec<usize>) {
        if !self.seen.insert(walk.clone()) {
            return;
        }
        let cand = PathSolution::from_vertices(self.inst, walk);
        if validate_solution(self.inst, &cand).is_ok()
            && self.best.as_ref().is_none_or(|b| cand.vertices < b.vertices)
        {
            self.best = Some(cand);
        }
    }
}

/// Tries every subset `F'` of a minimum feedback vertex set as the members
/// on the solution, orders them by distance from `s`, guesses the path
/// neighbor before and after each member, and fills the gaps with the unique
/// paths of the forest `G - F`. Returns the lexicographically smallest walk
/// that is a balance-fair shortest path.
pub fn solve_fvs_with(inst: &ColoredInstance, deadline: &Deadline) -> Result<FvsRun, Interrupted> {
    let feedback = compute_fvs(inst);
    let mut run = FvsRun {
        solution: None,
        feedback: feedback.clone(),
        subsets: 0,
        tied_orderings: 0,
        candidates: 0,
    };
    if inst.s() == inst.t() {
        run.solution = Some(PathSolution::from_vertices(inst, vec![inst.s()]));
        return Ok(run);
    }
    let Ok(dag) = shortest_path_dag(inst) else {
        return Ok(run);
    };
    let mut in_f = vec![false; inst.n()];
    for &v in &feedback.vertices {
        in_f[v] = true;
    }
    let (forest, _) = Forest::spanning(|u| inst.neighbors(u).to_vec(), inst.n(), &in_f);
    let k = feedback.k();
    assert!(k < 64, "feedback vertex number {k} too large to enumerate");

    let mut search = Search {
        inst,
        dag: &dag,
        forest: &forest,
        in_f: &in_f,
        order: Vec::new(),
        seen: HashSet::new(),
        best: None,
        deadline,
        steps: 0,
    };
    for mask in 0..(1u64 << k) {
        run.subsets += 1;
        deadline.check()?;
        let chosen: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| feedback.vertices[i]).collect();
        if chosen.iter().any(|&v| !dag.contains(v)) {
            continue;
        }
        if (in_f[inst.s()] && !chosen.contains(&inst.s())) || (in_f[inst.t()] && !chosen.contains(&inst.t())) {
            continue;
        }
        let mut keyed: Vec<(usize, usize)> = chosen.iter().map(|&v| (dag.layer_of(v).unwrap(), v)).collect();
        keyed.sort_unstable();
        if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
            run.tied_orderings += 1;
            continue;
        }
        search.order = keyed.into_iter().map(|(_, v)| v).collect();
        search.place(0, vec![inst.s()], false)?;
    }
    run.candidates = search.seen.len();
    run.solution = search.best;
    Ok(run)
}
