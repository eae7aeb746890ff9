use std::collections::HashMap;

use crate::deadline::{Deadline, Interrupted};
use crate::graph::{is_balance_fair, shortest_path_dag, ColoredInstance, LayeredDag, PathSolution};

use super::fair_count_range;

/// Size of the search, for bound checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DpStats {
    /// Distinct `(vertex, counts)` states kept in each layer.
    pub states_per_layer: Vec<usize>,
    /// Largest count any color may reach on a balance-fair path.
    pub count_bound: usize,
}

struct Layer {
    vertices: Vec<usize>,
    parents: Vec<usize>,
    counts: Vec<u32>,
}

impl Layer {
    fn new() -> Self {
        Self {
            vertices: Vec::new(),
            parents: Vec::new(),
            counts: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.vertices.len()
    }
}

/// Per DAG vertex and color, the fewest and most vertices of that color on
/// any continuation from the vertex (exclusive) to `t`.
struct RemainingBounds {
    c: usize,
    min: Vec<u32>,
    max: Vec<u32>,
}

impl RemainingBounds {
    fn new(inst: &ColoredInstance, dag: &LayeredDag) -> Self {
        let c = inst.num_colors();
        let n = inst.n();
        let mut min = vec![0u32; n * c];
        let mut max = vec![0u32; n * c];
        for layer in dag.layers().iter().rev().skip(1) {
            for &v in layer {
                let mut lo = vec![u32::MAX; c];
                let mut hi = vec![0u32; c];
                for &w in dag.successors(v) {
                    let cw = inst.color(w);
                    for i in 0..c {
                        let extra = u32::from(i == cw);
                        lo[i] = lo[i].min(min[w * c + i] + extra);
                        hi[i] = hi[i].max(max[w * c + i] + extra);
                    }
                }
                min[v * c..(v + 1) * c].copy_from_slice(&lo);
                max[v * c..(v + 1) * c].copy_from_slice(&hi);
            }
        }
        Self { c, min, max }
    }

    fn feasible(&self, v: usize, counts: &[u32], lo: u32, hi: u32) -> bool {
        let base = v * self.c;
        counts.iter().enumerate().all(|(i, &k)| {
            k <= hi && k + self.max[base + i] >= lo && k + self.min[base + i] <= hi
        })
    }
}

/// Decides the instance with a layer-by-layer sweep over the shortest-path
/// DAG, keeping one state per `(vertex, color counts)`.
///
/// Returns the lexicographically smallest balance-fair shortest path, or
/// `None` when there is none (including when `t` is unreachable).
pub fn solve_dp(inst: &ColoredInstance) -> Option<PathSolution> {
    solve_dp_with(inst, &Deadline::none())
        .expect("no deadline")
        .0
}

pub fn solve_dp_with(
    inst: &ColoredInstance,
    deadline: &Deadline,
) -> Result<(Option<PathSolution>, DpStats), Interrupted> {
    let Ok(dag) = shortest_path_dag(inst) else {
        return Ok((None, DpStats::default()));
    };
    let c = inst.num_colors();
    let (lo, hi) = fair_count_range(dag.path_vertices(), c);
    let (lo, hi) = (lo as u32, hi as u32);
    let bounds = RemainingBounds::new(inst, &dag);
    let mut stats = DpStats {
        states_per_layer: Vec::with_capacity(dag.path_vertices()),
        count_bound: hi as usize,
    };

    let mut layers: Vec<Layer> = Vec::with_capacity(dag.path_vertices());
    let mut first = Layer::new();
    let mut start = vec![0u32; c];
    start[inst.color(inst.s())] = 1;
    if bounds.feasible(inst.s(), &start, lo, hi) {
        first.vertices.push(inst.s());
        first.parents.push(usize::MAX);
        first.counts.extend_from_slice(&start);
    }
    stats.states_per_layer.push(first.len());
    layers.push(first);

    let mut scratch = vec![0u32; c];
    let mut expansions = 0usize;
    for _ in 0..dag.length() {
        deadline.check()?;
        let cur = layers.last().unwrap();
        let mut next = Layer::new();
        // key: counts followed by the vertex id
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        for idx in 0..cur.len() {
            let v = cur.vertices[idx];
            let counts = &cur.counts[idx * c..(idx + 1) * c];
            for &w in dag.successors(v) {
                expansions += 1;
                if expansions.is_multiple_of(4096) {
                    deadline.check()?;
                }
                scratch.copy_from_slice(counts);
                scratch[inst.color(w)] += 1;
                if !bounds.feasible(w, &scratch, lo, hi) {
                    continue;
                }
                let mut key = scratch.clone();
                key.push(w as u32);
                index.entry(key).or_insert_with(|| {
                    next.vertices.push(w);
                    next.parents.push(idx);
                    next.counts.extend_from_slice(&scratch);
                    next.vertices.len() - 1
                });
            }
        }
        stats.states_per_layer.push(next.len());
        layers.push(next);
    }

    let last = layers.last().unwrap();
    let winner = (0..last.len()).find(|&idx| {
        let counts: Vec<usize> = last.counts[idx * c..(idx + 1) * c].iter().map(|&k| k as usize).collect();
        is_balance_fair(&counts)
    });
    let Some(mut idx) = winner else {
        return Ok((None, stats));
    };
    let mut vertices = Vec::with_capacity(layers.len());
    for layer in layers.iter().rev() {
        vertices.push(layer.vertices[idx]);
        idx = layer.parents[idx];
    }
    vertices.reverse();
    Ok((Some(PathSolution::from_vertices(inst, vertices)), stats))
}
