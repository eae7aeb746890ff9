//! Seeded random instances for cross-checking solvers and kernels.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::ColoredInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// A random spanning forest plus a few extra edges.
    Sparse,
    /// Consecutive layers joined by random edges, so many shortest paths
    /// share a length.
    Layered,
    /// Groups of twins attached to random groups, so the neighborhood
    /// diversity stays small.
    Twins,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomParams {
    pub n: usize,
    pub num_colors: usize,
    /// Extra edges beyond a spanning tree, for [`Shape::Sparse`].
    pub extra_edges: usize,
    pub shape: Shape,
}

impl RandomParams {
    /// Parameters drawn from `rng` with `n <= max_n` and `c <= max_colors`.
    pub fn draw(rng: &mut impl Rng, max_n: usize, max_colors: usize) -> Self {
        let shape = match rng.gen_range(0..4) {
            0 | 1 => Shape::Sparse,
            2 => Shape::Layered,
            _ => Shape::Twins,
        };
        Self {
            n: rng.gen_range(2..=max_n.max(2)),
            num_colors: rng.gen_range(1..=max_colors.max(1)),
            extra_edges: rng.gen_range(0..=6),
            shape,
        }
    }
}

fn push_edge(edges: &mut Vec<(usize, usize)>, u: usize, v: usize) {
    if u != v && !edges.contains(&(u.min(v), u.max(v))) {
        edges.push((u.min(v), u.max(v)));
    }
}

/// A random instance; equal `(params, seed)` give equal instances.
pub fn random_instance(params: RandomParams, seed: u64) -> ColoredInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = params.n.max(1);
    let c = params.num_colors.max(1);
    let mut edges = Vec::new();
    let (s, t);
    match params.shape {
        Shape::Sparse => {
            for v in 1..n {
                // occasionally leave a vertex as a new root
                if rng.gen_bool(0.93) {
                    push_edge(&mut edges, v, rng.gen_range(0..v));
                }
            }
            for _ in 0..params.extra_edges {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                push_edge(&mut edges, u, v);
            }
            s = rng.gen_range(0..n);
            t = if rng.gen_bool(0.05) { s } else { rng.gen_range(0..n) };
        }
        Shape::Layered => {
            let width = rng.gen_range(1..=3usize);
            let mut layers: Vec<Vec<usize>> = Vec::new();
            let mut next = 0;
            while next < n {
                let w = rng.gen_range(1..=width).min(n - next);
                layers.push((next..next + w).collect());
                next += w;
            }
            for pair in layers.windows(2) {
                for &v in &pair[1] {
                    let u = *pair[0].choose(&mut rng).unwrap();
                    push_edge(&mut edges, u, v);
                    for &u in &pair[0] {
                        if rng.gen_bool(0.35) {
                            push_edge(&mut edges, u, v);
                        }
                    }
                }
            }
            for _ in 0..rng.gen_range(0..=2) {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                push_edge(&mut edges, u, v);
            }
            s = *layers[0].choose(&mut rng).unwrap();
            t = *layers.last().unwrap().choose(&mut rng).unwrap();
        }
        Shape::Twins => {
            let groups = rng.gen_range(1..=4usize.min(n));
            let group_of: Vec<usize> = (0..n).map(|v| if v < groups { v } else { rng.gen_range(0..groups) }).collect();
            let mut adj = vec![vec![false; groups]; groups];
            for g in 0..groups {
                for h in g..groups {
                    let p = if g == h { 0.3 } else { 0.5 };
                    let on = rng.gen_bool(p);
                    adj[g][h] = on;
                    adj[h][g] = on;
                }
            }
            for u in 0..n {
                for v in u + 1..n {
                    if adj[group_of[u]][group_of[v]] {
                        push_edge(&mut edges, u, v);
                    }
                }
            }
            s = rng.gen_range(0..n);
            t = rng.gen_range(0..n);
        }
    }
    let colors = (0..n).map(|_| rng.gen_range(0..c)).collect();
    edges.sort_unstable();
    ColoredInstance::new(colors, c, &edges, s, t).expect("generated edges are simple")
}
