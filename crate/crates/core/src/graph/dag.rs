use thiserror::Error;

use super::{bfs_distances, ColoredInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("t is not reachable from s")]
pub struct Unreachable;

/// The vertices lying on at least one shortest s-t path, grouped by their
/// distance from `s`. Arcs only join consecutive layers.
#[derive(Debug, Clone)]
pub struct LayeredDag {
    layers: Vec<Vec<usize>>,
    dist_s: Vec<Option<usize>>,
    dist_t: Vec<Option<usize>>,
    retained: Vec<bool>,
    successors: Vec<Vec<usize>>,
    predecessors: Vec<Vec<usize>>,
}

impl LayeredDag {
    /// `dist(s, t)`, the number of edges on every shortest path.
    pub fn length(&self) -> usize {
        self.layers.len() - 1
    }

    /// Number of vertices on every shortest path.
    pub fn path_vertices(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn dist_s(&self) -> &[Option<usize>] {
        &self.dist_s
    }

    pub fn dist_t(&self) -> &[Option<usize>] {
        &self.dist_t
    }

    pub fn contains(&self, v: usize) -> bool {
        self.retained[v]
    }

    /// Layer index of a retained vertex.
    pub fn layer_of(&self, v: usize) -> Option<usize> {
        if self.retained[v] {
            self.dist_s[v]
        } else {
            None
        }
    }

    /// Retained neighbors in the next layer, ascending.
    pub fn successors(&self, v: usize) -> &[usize] {
        &self.successors[v]
    }

    /// Retained neighbors in the previous layer, ascending.
    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.predecessors[v]
    }

    pub fn retained_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.retained.iter().enumerate().filter(|(_, &r)| r).map(|(v, _)| v)
    }

    pub fn num_arcs(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }
}

/// Drops every vertex `v` with `dist(s,v) + dist(v,t) > dist(s,t)`; such a
/// vertex is on no shortest s-t path.
pub fn shortest_path_dag(inst: &ColoredInstance) -> Result<LayeredDag, Unreachable> {
    let n = inst.n();
    let dist_s = bfs_distances(inst, inst.s());
    let dist_t = bfs_distances(inst, inst.t());
    let ell = dist_s[inst.t()].ok_or(Unreachable)?;

    let retained: Vec<bool> = (0..n)
        .map(|v| matches!((dist_s[v], dist_t[v]), (Some(a), Some(b)) if a + b == ell))
        .collect();
    let mut layers = vec![Vec::new(); ell + 1];
    for v in 0..n {
        if retained[v] {
            layers[dist_s[v].unwrap()].push(v);
        }
    }
    let mut successors = vec![Vec::new(); n];
    let mut predecessors = vec![Vec::new(); n];
    for v in 0..n {
        if !retained[v] {
            continue;
        }
        let d = dist_s[v].unwrap();
        for &w in inst.neighbors(v) {
            if retained[w] && dist_s[w] == Some(d + 1) {
                successors[v].push(w);
                predecessors[w].push(v);
            }
        }
    }
    Ok(LayeredDag {
        layers,
        dist_s,
        dist_t,
        retained,
        successors,
        predecessors,
    })
}
