use std::collections::HashSet;

use crate::graph::{connected_components, ColoredInstance};

use super::Certificate;

pub fn is_bipartite(inst: &ColoredInstance) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; inst.n()];
    for root in 0..inst.n() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for &w in inst.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Connected, and every edge lies on at most one cycle.
///
/// Every non-tree edge of a DFS tree closes the cycle through the tree path
/// to its ancestor; the graph is a cactus iff no tree edge is claimed by two
/// such cycles.
pub fn is_cactus(inst: &ColoredInstance) -> bool {
    let n = inst.n();
    if connected_components(inst).iter().any(|&c| c != 0) {
        return false;
    }
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut next = vec![0usize; n];
    depth[0] = 0;
    let mut stack = vec![0];
    let mut back = Vec::new();
    while let Some(&u) = stack.last() {
        if next[u] == inst.degree(u) {
            stack.pop();
            continue;
        }
        let w = inst.neighbors(u)[next[u]];
        next[u] += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            stack.push(w);
        } else if w != parent[u] && depth[w] < depth[u] {
            back.push((u, w));
        }
    }
    // claimed[v]: the tree edge (v, parent[v]) already lies on a cycle
    let mut claimed = vec![false; n];
    for (mut u, anc) in back {
        while u != anc {
            if claimed[u] {
                return false;
            }
            claimed[u] = true;
            u = parent[u];
        }
    }
    true
}

/// Largest `|phi(u) - phi(v)|` over edges, or `None` unless `phi` is a
/// bijection onto `1..=n`.
pub fn bandwidth_stretch(inst: &ColoredInstance, phi: &[usize]) -> Option<usize> {
    let n = inst.n();
    if phi.len() != n {
        return None;
    }
    let mut seen = vec![false; n + 1];
    for &p in phi {
        if p == 0 || p > n || seen[p] {
            return None;
        }
        seen[p] = true;
    }
    Some(inst.edges().map(|(u, v)| phi[u].abs_diff(phi[v])).max().unwrap_or(0))
}

/// Closed intervals overlap exactly on the edges of `inst`.
pub fn interval_model_matches(inst: &ColoredInstance, intervals: &[(usize, usize)]) -> bool {
    let n = inst.n();
    if intervals.len() != n || intervals.iter().any(|&(a, b)| a > b) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = intervals[u];
            let (c, d) = intervals[v];
            if (a <= d && c <= b) != inst.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Every path is simple and follows edges; together the paths use every
/// edge exactly once; there are at most `max_paths` of them.
pub fn edge_path_partition_valid(inst: &ColoredInstance, paths: &[Vec<usize>], max_paths: usize) -> bool {
    if paths.len() > max_paths {
        return false;
    }
    let mut used = HashSet::new();
    for p in paths {
        if p.len() < 2 || p.iter().collect::<HashSet<_>>().len() != p.len() {
            return false;
        }
        for w in p.windows(2) {
            if w[0] >= inst.n() || w[1] >= inst.n() || !inst.has_edge(w[0], w[1]) {
                return false;
            }
            if !used.insert((w[0].min(w[1]), w[0].max(w[1]))) {
                return false;
            }
        }
    }
    used.len() == inst.m()
}

/// BFS levels from `s`: `levels[d]` holds the vertices at distance `d`.
pub fn distance_levels(inst: &ColoredInstance) -> Vec<Vec<usize>> {
    let dist = inst.bfs_distances(inst.s());
    let depth = dist.iter().flatten().max().copied().unwrap_or(0);
    let mut levels = vec![Vec::new(); depth + 1];
    for (v, d) in dist.iter().enumerate() {
        if let Some(d) = d {
            levels[*d].push(v);
        }
    }
    levels
}

pub fn distance_levels_are_cliques(inst: &ColoredInstance) -> bool {
    distance_levels(inst)
        .iter()
        .all(|level| level.iter().enumerate().all(|(i, &u)| level[i + 1..].iter().all(|&v| inst.has_edge(u, v))))
}

/// Mean BFS distance over unordered pairs of distinct vertices in the same
/// component; 0 when there are no such pairs.
pub fn average_intra_component_distance(inst: &ColoredInstance) -> f64 {
    let mut total = 0u128;
    let mut pairs = 0u128;
    for u in 0..inst.n() {
        for d in inst.bfs_distances(u).iter().skip(u + 1).flatten() {
            total += *d as u128;
            pairs += 1;
        }
    }
    if pairs == 0 {
        0.0
    } else {
        total as f64 / pairs as f64
    }
}

/// Checks one certificate against the instance it was emitted with.
pub fn verify_certificate(inst: &ColoredInstance, cert: &Certificate) -> bool {
    match cert {
        Certificate::Bandwidth { phi, max_stretch } => bandwidth_stretch(inst, phi).is_some_and(|s| s <= *max_stretch),
        Certificate::IntervalModel(iv) => interval_model_matches(inst, iv),
        Certificate::EdgePathPartition { paths, max_paths } => edge_path_partition_valid(inst, paths, *max_paths),
        Certificate::DistanceLevels(levels) => *levels == distance_levels(inst) && distance_levels_are_cliques(inst),
    }
}
