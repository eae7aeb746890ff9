//! Fixtures and brute-force references shared by the integration tests.
//! Nothing here calls into the library's solvers.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use bfsp::graph::parse_instance;
use bfsp::ColoredInstance;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// The three-color example from the introduction of the paper.
pub fn fig1() -> ColoredInstance {
    parse_instance(&std::fs::read_to_string(data_path("fig1.bfsp")).unwrap()).unwrap()
}

/// The highlighted path of the example, 0-based.
pub const FIG1_PATH: [usize; 9] = [0, 1, 2, 10, 11, 12, 6, 14, 15];

fn adjacency(inst: &ColoredInstance) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); inst.n()];
    for (u, v) in inst.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

fn bfs(adj: &[Vec<usize>], src: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[src] = 0;
    let mut q = VecDeque::from([src]);
    while let Some(u) = q.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

pub fn fair(counts: &[usize]) -> bool {
    counts.iter().max().unwrap() - counts.iter().min().unwrap() <= 1
}

/// Every shortest s-t path in lexicographic order, without pruning.
pub fn all_shortest_paths(inst: &ColoredInstance) -> Vec<Vec<usize>> {
    let adj = adjacency(inst);
    let ds = bfs(&adj, inst.s());
    let dt = bfs(&adj, inst.t());
    let mut out = Vec::new();
    if ds[inst.t()] == usize::MAX {
        return out;
    }
    let len = ds[inst.t()];
    let mut path = vec![inst.s()];
    fn walk(adj: &[Vec<usize>], ds: &[usize], dt: &[usize], len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if dt[u] == 0 {
            out.push(path.clone());
            return;
        }
        for &w in &adj[u] {
            if ds[w] == ds[u] + 1 && dt[w] != usize::MAX && ds[w] + dt[w] == len {
                path.push(w);
                walk(adj, ds, dt, len, path, out);
                path.pop();
            }
        }
    }
    walk(&adj, &ds, &dt, len, &mut path, &mut out);
    out
}

pub fn histogram(inst: &ColoredInstance, path: &[usize]) -> Vec<usize> {
    let mut h = vec![0; inst.num_colors()];
    for &v in path {
        h[inst.color(v)] += 1;
    }
    h
}

/// The lexicographically smallest balance-fair shortest path.
pub fn naive_fair_path(inst: &ColoredInstance) -> Option<Vec<usize>> {
    all_shortest_paths(inst)
        .into_iter()
        .find(|p| fair(&histogram(inst, p)))
}

/// Independent check of a claimed witness.
pub fn is_fair_shortest_path(inst: &ColoredInstance, path: &[usize]) -> bool {
    let adj = adjacency(inst);
    let ds = bfs(&adj, inst.s());
    path.first() == Some(&inst.s())
        && path.last() == Some(&inst.t())
        && ds[inst.t()] != usize::MAX
        && path.len() == ds[inst.t()] + 1
        && path.windows(2).all(|w| adj[w[0]].binary_search(&w[1]).is_ok())
        && fair(&histogram(inst, path))
}
