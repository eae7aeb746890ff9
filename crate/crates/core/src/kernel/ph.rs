use std::collections::HashSet;

use crate::graph::{bfs_distances, ColoredInstance};
use crate::matroid::{build_partition_matroid, representative_family, ColoredSetFamily};

use super::{KernelError, KernelReport};

/// Cographs are exactly the `P_4`-free graphs.
pub const DEFAULT_H: usize = 4;
/// Largest supported forbidden path order; the search is `O(n^h)`.
pub const MAX_H: usize = 6;

/// Vertices whose removal leaves no induced path on `h` vertices, plus the
/// two terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhDeletionSet {
    /// Sorted ascending; contains `s` and `t`.
    pub vertices: Vec<usize>,
    pub h: usize,
    /// Induced paths found and deleted; a lower bound on the optimum.
    pub iterations: usize,
}

fn extend_induced(inst: &ColoredInstance, removed: &[bool], path: &mut Vec<usize>, h: usize) -> bool {
    if path.len() == h {
        return true;
    }
    let last = *path.last().unwrap();
    for &w in inst.neighbors(last) {
        if removed[w] || path.contains(&w) {
            continue;
        }
        // w may touch only the current end of the path
        if path[..path.len() - 1].iter().any(|&x| inst.has_edge(x, w)) {
            continue;
        }
        path.push(w);
        if extend_induced(inst, removed, path, h) {
            return true;
        }
        path.pop();
    }
    false
}

fn find_induced_ph_avoiding(inst: &ColoredInstance, removed: &[bool], h: usize) -> Option<Vec<usize>> {
    for v in 0..inst.n() {
        if removed[v] {
            continue;
        }
        let mut path = vec![v];
        if extend_induced(inst, removed, &mut path, h) {
            return Some(path);
        }
    }
    None
}

/// Some induced path on `h` vertices, in path order, or `None`.
pub fn find_induced_ph(inst: &ColoredInstance, h: usize) -> Option<Vec<usize>> {
    assert!(h >= 1, "h must be positive");
    find_induced_ph_avoiding(inst, &vec![false; inst.n()], h)
}

/// Repeatedly deletes all vertices of an induced `P_h`; an
/// `h`-approximation of the optimal deletion set.
pub fn ph_deletion_set(inst: &ColoredInstance, h: usize) -> PhDeletionSet {
    let mut removed = vec![false; inst.n()];
    let mut iterations = 0;
    while let Some(path) = find_induced_ph_avoiding(inst, &removed, h) {
        for v in path {
            removed[v] = true;
        }
        iterations += 1;
    }
    removed[inst.s()] = true;
    removed[inst.t()] = true;
    PhDeletionSet {
        vertices: (0..inst.n()).filter(|&v| removed[v]).collect(),
        h,
        iterations,
    }
}

/// Surviving shortest paths between one pair of deletion-set vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub u: usize,
    pub v: usize,
    /// `dist(u, v) - 1`.
    pub interior_len: usize,
    /// Interiors read from `u` to `v`.
    pub interiors: Vec<Vec<usize>>,
}

/// For each pair of deletion-set vertices at distance at least 2, the
/// shortest paths whose interior avoids the set, one per color multiset.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathCatalog {
    pub entries: Vec<CatalogEntry>,
}

impl PathCatalog {
    pub fn num_paths(&self) -> usize {
        self.entries.iter().map(|e| e.interiors.len()).sum()
    }
}

fn enumerate_interiors(
    inst: &ColoredInstance,
    in_k: &[bool],
    dist_v: &[Option<usize>],
    u: usize,
    _v: usize,
    len: usize,
) -> Vec<Vec<usize>> {
    // depth-first in ascending neighbor order yields lexicographic order
    let mut out = Vec::new();
    let mut interior = Vec::new();
    fn walk(
        inst: &ColoredInstance,
        in_k: &[bool],
        dist_v: &[Option<usize>],
        at: usize,
        interior: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let remaining = dist_v[at].unwrap();
        if remaining == 1 {
            out.push(interior.clone());
            return;
        }
        for &w in inst.neighbors(at) {
            if in_k[w] || dist_v[w] != Some(remaining - 1) {
                continue;
            }
            interior.push(w);
            walk(inst, in_k, dist_v, w, interior, out);
            interior.pop();
        }
    }
    if len >= 1 {
        walk(inst, in_k, dist_v, u, &mut interior, &mut out);
    }
    out
}

/// Builds the catalog: for each pair `u < v` of `k_set`, all shortest
/// u-v paths with interior outside `k_set`, deduplicated by color multiset
/// keeping the lexicographically smallest interior.
pub fn build_path_catalog(inst: &ColoredInstance, k_set: &[usize]) -> PathCatalog {
    let mut in_k = vec![false; inst.n()];
    for &v in k_set {
        in_k[v] = true;
    }
    let dists: Vec<Vec<Option<usize>>> = k_set.iter().map(|&v| bfs_distances(inst, v)).collect();
    let mut entries = Vec::new();
    for (i, &u) in k_set.iter().enumerate() {
        for (j, &v) in k_set.iter().enumerate().skip(i + 1) {
            let Some(d) = dists[j][u] else { continue };
            if d < 2 {
                continue;
            }
            let raw = enumerate_interiors(inst, &in_k, &dists[j], u, v, d - 1);
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            let interiors: Vec<Vec<usize>> = raw
                .into_iter()
                .filter(|p| seen.insert(color_key(inst, p)))
                .collect();
            if !interiors.is_empty() {
                entries.push(CatalogEntry {
                    u,
                    v,
                    interior_len: d - 1,
                    interiors,
                });
            }
        }
    }
    PathCatalog { entries }
}

fn color_key(inst: &ColoredInstance, vertices: &[usize]) -> Vec<usize> {
    inst.histogram(vertices)
}

/// The explicit vertex bound `kh + 2 + (kh + 2)^2 (h(k + 1))^(h - 1) h`.
pub fn ph_size_bound(k: usize, h: usize) -> u128 {
    let kh2 = (k * h + 2) as u128;
    kh2 + kh2 * kh2 * ((h * (k + 1)) as u128).pow(h as u32 - 1) * h as u128
}

/// Kernel for the deletion distance to `P_h`-free graphs.
///
/// Keeps the deletion set `K` (with `s` and `t`) and the catalog of shortest
/// paths between `K`-vertices. With more colors than the `l` vertices of a
/// shortest s-t path, paths with a repeated color are dropped and each
/// pair's catalog is cut to an `(l - d)`-representative family in the
/// rank-`l` truncated partition matroid, drawn from `seed`. The kernel is
/// the subgraph induced by what remains.
pub fn kernel_ph_free(inst: &ColoredInstance, h: usize, seed: u64) -> Result<(ColoredInstance, KernelReport), KernelError> {
    if !(2..=MAX_H).contains(&h) {
        return Err(KernelError::UnsupportedH(h));
    }
    let mut report = KernelReport {
        kernel: "ph",
        original_n: inst.n(),
        original_m: inst.m(),
        kernel_n: 0,
        kernel_m: 0,
        parameter: 0,
        size_bound: 0,
        branch: "",
        extra: vec![("h", h.to_string())],
    };
    let finish = |out: ColoredInstance, branch: &'static str, mut report: KernelReport| {
        report.kernel_n = out.n();
        report.kernel_m = out.m();
        report.branch = branch;
        Ok((out, report))
    };

    let deletion = ph_deletion_set(inst, h);
    report.parameter = deletion.iterations;
    report.size_bound = ph_size_bound(deletion.iterations, h);
    report.extra.push(("deletion_set_size", deletion.vertices.len().to_string()));
    let Some(dist) = inst.distance(inst.s(), inst.t()) else {
        return finish(ColoredInstance::trivial_no(), "unreachable", report);
    };
    if inst.s() == inst.t() {
        return finish(ColoredInstance::trivial_yes(), "single-vertex", report);
    }
    let ell = dist + 1;
    report.extra.push(("path_vertices", ell.to_string()));

    let mut catalog = build_path_catalog(inst, &deletion.vertices);
    report.extra.push(("catalog_paths", catalog.num_paths().to_string()));
    let c = inst.num_colors();
    let branch = if c <= ell {
        "colors-at-most-l"
    } else {
        let distinct = inst.colors().iter().collect::<HashSet<_>>().len();
        if distinct < ell {
            // a fair path would need l distinct colors
            return finish(ColoredInstance::trivial_no(), "too-few-colors", report);
        }
        let mat = build_partition_matroid(inst.colors(), c, ell, seed);
        for entry in &mut catalog.entries {
            let (u, v) = (entry.u, entry.v);
            entry.interiors.retain(|p| {
                let mut all = p.clone();
                all.push(u);
                all.push(v);
                color_key(inst, &all).iter().all(|&x| x <= 1)
            });
            let q = ell.saturating_sub(entry.interior_len);
            if entry.interiors.is_empty() || entry.interior_len > ell {
                entry.interiors.clear();
                continue;
            }
            let fam = ColoredSetFamily::new(entry.interiors.clone(), inst.colors(), c);
            let rep = representative_family(&mat, &fam, q).expect("members have distinct colors and the matrix full rank");
            let kept: HashSet<Vec<usize>> = rep.sets.into_iter().collect();
            entry.interiors.retain(|p| {
                let mut sorted = p.clone();
                sorted.sort_unstable();
                kept.contains(&sorted)
            });
        }
        "colors-above-l"
    };
    report.extra.push(("kept_paths", catalog.num_paths().to_string()));

    let mut keep = deletion.vertices.clone();
    for entry in &catalog.entries {
        for p in &entry.interiors {
            keep.extend_from_slice(p);
        }
    }
    let (out, _) = inst.induced_subgraph(&keep);
    finish(out, branch, report)
}
