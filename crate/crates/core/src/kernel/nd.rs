use crate::graph::{ColoredInstance, PathSolution};
use crate::solver::solve_dp;

use super::KernelReport;

/// Vertices grouped by type: `u` and `v` share a type iff
/// `N(u) \ {v} = N(v) \ {u}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypePartition {
    /// Classes ordered by smallest member, members ascending.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl TypePartition {
    /// The neighborhood diversity.
    pub fn width(&self) -> usize {
        self.classes.len()
    }
}

fn same_type(inst: &ColoredInstance, u: usize, v: usize) -> bool {
    let a = inst.neighbors(u).iter().filter(|&&x| x != v);
    let b = inst.neighbors(v).iter().filter(|&&x| x != u);
    a.eq(b)
}

/// The partition into maximal type classes. Sharing a type is an
/// equivalence relation, so comparing against one member per class
/// suffices.
pub fn nd_partition(inst: &ColoredInstance) -> TypePartition {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; inst.n()];
    for v in 0..inst.n() {
        match classes.iter().position(|c| same_type(inst, c[0], v)) {
            Some(i) => {
                classes[i].push(v);
                class_of[v] = i;
            }
            None => {
                class_of[v] = classes.len();
                classes.push(vec![v]);
            }
        }
    }
    TypePartition { classes, class_of }
}

/// Kernel with at most `k^2` vertices for neighborhood diversity `k`.
///
/// A shortest path meets every type class at most once, so per class it
/// suffices to keep one vertex per color when `c <= k`, and `k` vertices of
/// pairwise different colors when `c > k`. Terminals are always kept. When
/// `s` and `t` share a type, `dist(s, t) <= 2` and the instance is decided
/// directly.
pub fn kernel_nd(inst: &ColoredInstance) -> (ColoredInstance, KernelReport) {
    let part = nd_partition(inst);
    let k = part.width();
    let mut report = KernelReport {
        kernel: "nd",
        original_n: inst.n(),
        original_m: inst.m(),
        kernel_n: 0,
        kernel_m: 0,
        parameter: k,
        size_bound: (k * k) as u128,
        branch: "",
        extra: Vec::new(),
    };
    let finish = |out: ColoredInstance, branch: &'static str, mut report: KernelReport| {
        report.kernel_n = out.n();
        report.kernel_m = out.m();
        report.branch = branch;
        (out, report)
    };

    let Some(ell) = inst.distance(inst.s(), inst.t()) else {
        return finish(ColoredInstance::trivial_no(), "unreachable", report);
    };
    report.extra.push(("distance", ell.to_string()));
    if inst.s() == inst.t() || part.class_of[inst.s()] == part.class_of[inst.t()] {
        let out = match solve_dp(inst) {
            Some(PathSolution { .. }) => ColoredInstance::trivial_yes(),
            None => ColoredInstance::trivial_no(),
        };
        return finish(out, "terminals-share-type", report);
    }

    let c = inst.num_colors();
    let terminal = |v: usize| v == inst.s() || v == inst.t();
    let mut keep = Vec::new();
    for class in &part.classes {
        // terminals first, then ascending ids
        let mut order: Vec<usize> = class.iter().copied().filter(|&v| terminal(v)).collect();
        order.extend(class.iter().copied().filter(|&v| !terminal(v)));
        let quota = if c <= k { c } else { k };
        let mut used = vec![false; c];
        let mut taken = 0;
        for v in order {
            if taken == quota {
                break;
            }
            if !used[inst.color(v)] {
                used[inst.color(v)] = true;
                keep.push(v);
                taken += 1;
            }
        }
    }
    let (out, _) = inst.induced_subgraph(&keep);
    finish(out, if c <= k { "colors-at-most-k" } else { "colors-above-k" }, report)
}
