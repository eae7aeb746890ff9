use crate::graph::{ColoredInstance, InstanceBuilder};

use super::certify::distance_levels;
use super::{Certificate, GeneratorReport, ReductionError};

/// Adds a clique of `n^2` vertices hanging off `s`. They sit at distance 1
/// from `s`, so no shortest s-t path can use them unless `t` is `s` itself,
/// and the average distance drops below 3.
///
/// The clique takes color 0 rather than a new color: a new color would be
/// absent from every path and change which histograms are fair.
pub fn gen_avg_distance(inst: &ColoredInstance) -> (ColoredInstance, GeneratorReport) {
    let n = inst.n();
    let mut b = InstanceBuilder::new();
    let mut roles = Vec::with_capacity(n + n * n);
    for v in 0..n {
        b.add_vertex(inst.color(v));
        roles.push(format!("original v{}", v + 1));
    }
    for (u, v) in inst.edges() {
        b.add_edge(u, v);
    }
    let clique: Vec<usize> = (0..n * n).map(|_| b.add_vertex(0)).collect();
    for i in 0..clique.len() {
        roles.push(format!("clique[{}]", i + 1));
    }
    b.add_clique(&clique);
    for &w in &clique {
        b.add_edge(inst.s(), w);
    }
    let out = b.build(inst.num_colors(), inst.s(), inst.t()).expect("extends a valid instance");
    let mut report = GeneratorReport::new("average-distance");
    report.legend = (1..=inst.num_colors()).map(|c| format!("original color {c}")).collect();
    report.roles = roles;
    report.meta("original_n", n);
    report.meta("clique_size", n * n);
    (out, report)
}

struct Composed {
    inst: ColoredInstance,
    report: GeneratorReport,
}

fn compose(batch: &[ColoredInstance], construction: &'static str) -> Result<Composed, ReductionError> {
    let first = batch.first().ok_or(ReductionError::EmptyBatch)?;
    let c = first.num_colors();
    let dist = first.distance(first.s(), first.t());
    for (index, inst) in batch.iter().enumerate() {
        if inst.num_colors() != c || inst.distance(inst.s(), inst.t()) != dist {
            return Err(ReductionError::MixedClass { index });
        }
    }
    // vertices on a shortest member path; an unreachable class composes as
    // if that were at most c, which only adds the two fresh terminals
    let ell = dist.map_or(1, |d| d + 1);
    let x_lo = ell / c;
    let x_hi = ell.div_ceil(c);

    let mut b = InstanceBuilder::new();
    let mut roles = Vec::new();
    let s = b.add_vertex(c);
    roles.push("s".to_string());
    let mut exits = Vec::with_capacity(batch.len());
    for (i, inst) in batch.iter().enumerate() {
        let offset = b.n();
        for v in 0..inst.n() {
            b.add_vertex(inst.color(v));
            roles.push(format!("I{}:v{}", i + 1, v + 1));
        }
        for (u, v) in inst.edges() {
            b.add_edge(offset + u, offset + v);
        }
        b.add_edge(s, offset + inst.s());
        exits.push(offset + inst.t());
    }
    let (exit, num_colors) = if x_hi <= 1 {
        (vec![b.add_vertex(c + 1)], c + 2)
    } else {
        (b.add_path(std::iter::repeat_n(c, x_hi - 1)), c + 1)
    };
    for i in 0..exit.len() {
        roles.push(if i + 1 == exit.len() { "t".into() } else { format!("exit[{}]", i + 1) });
    }
    for &e in &exits {
        b.add_edge(e, exit[0]);
    }
    let t = *exit.last().unwrap();
    let inst = b.build(num_colors, s, t)?;

    let mut report = GeneratorReport::new(construction);
    report.legend = (1..=c).map(|k| format!("member color {k}")).collect();
    report.legend.push(if x_hi <= 1 { "s".into() } else { "s and exit path".into() });
    if x_hi <= 1 {
        report.legend.push("t".into());
    }
    report.roles = roles;
    report.meta("batch", batch.len());
    report.meta("member_colors", c);
    report.meta("member_reachable", dist.is_some());
    report.meta("member_path_vertices", ell);
    report.meta("x", x_lo);
    report.meta("x_prime", x_hi);
    report.meta("exit_path", exit.len());
    report.meta("composed_path_vertices", ell + x_hi.max(2));
    Ok(Composed { inst, report })
}

/// OR-composition of instances sharing the color count and s-t distance:
/// a new `s` adjacent to every member's `s_i`, and one exit path leaving
/// every `t_i` towards `t`, colored so that it tops up a fair member path.
pub fn cross_compose_treedepth(batch: &[ColoredInstance]) -> Result<(ColoredInstance, GeneratorReport), ReductionError> {
    let out = compose(batch, "compose-treedepth")?;
    Ok((out.inst, out.report))
}

/// The treedepth composition with every BFS level from `s` turned into a
/// clique. Edges inside a level never lie on a shortest s-t path.
pub fn cross_compose_clique_cover(
    batch: &[ColoredInstance],
) -> Result<(ColoredInstance, GeneratorReport), ReductionError> {
    let Composed { inst, mut report } = compose(batch, "compose-clique-cover")?;
    let levels = distance_levels(&inst);
    let mut b = InstanceBuilder::new();
    for v in 0..inst.n() {
        b.add_vertex(inst.color(v));
    }
    for (u, v) in inst.edges() {
        b.add_edge(u, v);
    }
    for level in &levels {
        b.add_clique(level);
    }
    let out = b.build(inst.num_colors(), inst.s(), inst.t())?;
    report.meta("levels", levels.len());
    report.certificates.push(Certificate::DistanceLevels(levels));
    Ok((out, report))
}
