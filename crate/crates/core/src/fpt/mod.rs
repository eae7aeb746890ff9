//! Solvers parameterized by the feedback edge number and the feedback vertex
//! number, together with exact computations of both parameters.

mod fes;
mod fvs;

pub use fes::{compute_fes, solve_fes, solve_fes_with, FeedbackEdgeSet, FesRun};
pub use fvs::{compute_fvs, is_forest_after_removal, solve_fvs, solve_fvs_with, FeedbackVertexSet, FvsRun};

use std::collections::VecDeque;

/// BFS forest over the vertices not marked `removed`, using only the edges
/// accepted by `keep_edge`. Answers unique-path queries.
pub(crate) struct Forest {
    parent: Vec<usize>,
    depth: Vec<usize>,
    root: Vec<usize>,
}

impl Forest {
    /// Builds a spanning forest of the given subgraph and reports the edges
    /// that were not used as tree edges (as `(u, v)` with `u < v`).
    pub(crate) fn spanning(
        adjacency: impl Fn(usize) -> Vec<usize>,
        n: usize,
        removed: &[bool],
    ) -> (Self, Vec<(usize, usize)>) {
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        let mut root = vec![usize::MAX; n];
        let mut tree_edges = Vec::new();
        for r in 0..n {
            if removed[r] || root[r] != usize::MAX {
                continue;
            }
            root[r] = r;
            let mut queue = VecDeque::from([r]);
            while let Some(u) = queue.pop_front() {
                for w in adjacency(u) {
                    if removed[w] || root[w] != usize::MAX {
                        continue;
                    }
                    root[w] = r;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    tree_edges.push((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
        }
        tree_edges.sort_unstable();
        let mut non_tree = Vec::new();
        for u in 0..n {
            if removed[u] {
                continue;
            }
            for w in adjacency(u) {
                if u < w && !removed[w] && tree_edges.binary_search(&(u, w)).is_err() {
                    non_tree.push((u, w));
                }
            }
        }
        (Self { parent, depth, root }, non_tree)
    }

    /// The unique path from `u` to `v` in the forest, both ends included.
    pub(crate) fn path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        if self.root[u] == usize::MAX || self.root[u] != self.root[v] {
            return None;
        }
        let (mut a, mut b) = (u, v);
        let mut head = Vec::new();
        let mut tail = Vec::new();
        while self.depth[a] > self.depth[b] {
            head.push(a);
            a = self.parent[a];
        }
        while self.depth[b] > self.depth[a] {
            tail.push(b);
            b = self.parent[b];
        }
        while a != b {
            head.push(a);
            tail.push(b);
            a = self.parent[a];
            b = self.parent[b];
        }
        head.push(a);
        head.extend(tail.into_iter().rev());
        Some(head)
    }
}

/// Appends `next` to `walk`, skipping the first vertex of `next` when it
/// repeats the current end.
pub(crate) fn extend_walk(walk: &mut Vec<usize>, next: &[usize]) {
    let skip = usize::from(walk.last() == next.first() && !next.is_empty());
    walk.extend_from_slice(&next[skip..]);
}
