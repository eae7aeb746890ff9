//! Vertex-colored graphs with two terminals, plus the shortest-path machinery
//! every solver and kernel builds on.
//!
//! Vertex ids and colors are 0-based inside the library. The text format is
//! 1-based; the conversion happens only in [`parse_instance`] and
//! [`serialize_instance`].

mod dag;
mod io;
mod solution;

pub use dag::{shortest_path_dag, LayeredDag, Unreachable};
pub use io::{parse_instance, serialize_instance, ParseError, ParseErrorKind};
pub use solution::{is_balance_fair, validate_solution, PathSolution, Violation};

use std::collections::VecDeque;

use thiserror::Error;

/// Structural problems detected when assembling an instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("instance needs at least one color")]
    NoColors,
    #[error("instance needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} has color {color} but only {num_colors} colors exist")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        num_colors: usize,
    },
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

/// An undirected simple graph, a vertex coloring into `0..num_colors`, and
/// the two terminals `s` and `t`.
///
/// Immutable once built; neighbor lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredInstance {
    adjacency: Vec<Vec<usize>>,
    colors: Vec<usize>,
    num_colors: usize,
    s: usize,
    t: usize,
}

impl ColoredInstance {
    /// Builds an instance from 0-based data, rejecting self-loops and
    /// duplicate edges.
    pub fn new(
        colors: Vec<usize>,
        num_colors: usize,
        edges: &[(usize, usize)],
        s: usize,
        t: usize,
    ) -> Result<Self, InstanceError> {
        let n = colors.len();
        if num_colors == 0 {
            return Err(InstanceError::NoColors);
        }
        if n == 0 {
            return Err(InstanceError::NoVertices);
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= num_colors) {
            return Err(InstanceError::ColorOutOfRange {
                vertex,
                color,
                num_colors,
            });
        }
        for &x in [s, t].iter() {
            if x >= n {
                return Err(InstanceError::VertexOutOfRange(x));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(InstanceError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(InstanceError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(InstanceError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(InstanceError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self {
            adjacency,
            colors,
            num_colors,
            s,
            t,
        })
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn m(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Count vector of the colors of `vertices`.
    pub fn histogram(&self, vertices: &[usize]) -> Vec<usize> {
        let mut hist = vec![0; self.num_colors];
        for &v in vertices {
            hist[self.colors[v]] += 1;
        }
        hist
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        bfs_distances(self, source)
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        bfs_distances(self, u)[v]
    }

    /// The subgraph induced by `keep` (any order, no duplicates). Vertices are
    /// renumbered by ascending original id; returns the new instance and the
    /// map from new to old ids. `s` and `t` must be in `keep`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (ColoredInstance, Vec<usize>) {
        let mut old_ids: Vec<usize> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let adjacency = old_ids
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX)
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        let colors = old_ids.iter().map(|&v| self.colors[v]).collect();
        assert!(
            new_id[self.s] != usize::MAX && new_id[self.t] != usize::MAX,
            "induced subgraph must keep both terminals"
        );
        let sub = ColoredInstance {
            adjacency,
            colors,
            num_colors: self.num_colors,
            s: new_id[self.s],
            t: new_id[self.t],
        };
        (sub, old_ids)
    }

    /// Same graph and coloring with different terminals.
    pub fn with_terminals(&self, s: usize, t: usize) -> ColoredInstance {
        assert!(s < self.n() && t < self.n());
        ColoredInstance {
            s,
            t,
            ..self.clone()
        }
    }

    /// The canonical no-instance: two isolated vertices, one color.
    pub fn trivial_no() -> ColoredInstance {
        ColoredInstance::new(vec![0, 0], 1, &[], 0, 1).expect("valid")
    }

    /// The canonical yes-instance: a single vertex with `s = t`.
    pub fn trivial_yes() -> ColoredInstance {
        ColoredInstance::new(vec![0], 1, &[], 0, 0).expect("valid")
    }
}

/// Incremental construction used by generators. Duplicate edges are merged;
/// self-loops panic since they indicate a generator bug.
#[derive(Debug, Clone, Default)]
pub struct InstanceBuilder {
    colors: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl InstanceBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, color: usize) -> usize {
        self.colors.push(color);
        self.colors.len() - 1
    }

    pub fn add_path(&mut self, colors: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let ids: Vec<usize> = colors.into_iter().map(|c| self.add_vertex(c)).collect();
        for w in ids.windows(2) {
            self.add_edge(w[0], w[1]);
        }
        ids
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "generator produced a self-loop");
        self.edges.push((u.min(v), u.max(v)));
    }

    pub fn add_clique(&mut self, vertices: &[usize]) {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.add_edge(u, v);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn build(mut self, num_colors: usize, s: usize, t: usize) -> Result<ColoredInstance, InstanceError> {
        self.edges.sort_unstable();
        self.edges.dedup();
        ColoredInstance::new(self.colors, num_colors, &self.edges, s, t)
    }
}

/// Unweighted single-source distances; `None` marks unreachable vertices.
pub fn bfs_distances(inst: &ColoredInstance, source: usize) -> Vec<Option<usize>> {
    bfs_on(&inst.adjacency, source)
}

pub(crate) fn bfs_on(adjacency: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adjacency.len()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in &adjacency[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Connected component id per vertex, numbered in order of smallest member.
pub fn connected_components(inst: &ColoredInstance) -> Vec<usize> {
    let n = inst.n();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for root in 0..n {
        if comp[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![root];
        comp[root] = next;
        while let Some(u) = stack.pop() {
            for &w in inst.neighbors(u) {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert_eq!(
            ColoredInstance::new(vec![0, 0], 1, &[(1, 1)], 0, 1),
            Err(InstanceError::SelfLoop(1))
        );
        assert_eq!(
            ColoredInstance::new(vec![0, 0], 1, &[(0, 1), (1, 0)], 0, 1),
            Err(InstanceError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            ColoredInstance::new(vec![0, 3], 2, &[], 0, 1),
            Err(InstanceError::ColorOutOfRange { vertex: 1, .. })
        ));
    }

    #[test]
    fn bfs_on_small_graphs() {
        let single = ColoredInstance::trivial_yes();
        assert_eq!(bfs_distances(&single, 0), vec![Some(0)]);
        let split = ColoredInstance::trivial_no();
        assert_eq!(bfs_distances(&split, 0), vec![Some(0), None]);
        let path = ColoredInstance::new(vec![0; 4], 1, &[(0, 1), (1, 2), (2, 3)], 0, 3).unwrap();
        assert_eq!(path.distance(0, 3), Some(3));
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let path = ColoredInstance::new(vec![0, 1, 0, 1], 2, &[(0, 1), (1, 2), (2, 3)], 0, 3).unwrap();
        let (sub, map) = path.induced_subgraph(&[3, 0, 1]);
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(sub.m(), 1);
        assert_eq!(sub.t(), 2);
        assert_eq!(sub.colors(), &[0, 1, 1]);
    }

    #[test]
    fn components() {
        let g = ColoredInstance::new(vec![0; 5], 1, &[(0, 3), (1, 4)], 0, 1).unwrap();
        assert_eq!(connected_components(&g), vec![0, 1, 2, 0, 1]);
    }
}
