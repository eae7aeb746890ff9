use crate::graph::{ColoredInstance, InstanceBuilder};

use super::{Certificate, GeneratorReport, ReductionError, VcInstance};

/// Vertex Cover to an interval graph.
///
/// Colors: `p_v = v` for every vertex of `H`, then `q_1 = n`, `q_2 = n + 1`,
/// `r = n + 2`. The chain is: prefix path `G_P` (starting at `s`), one
/// vertex gadget per vertex of `H`, one diamond per edge, the filler levels,
/// and `t`. A fair path takes the `U` side of exactly `k` vertex gadgets and
/// in every diamond passes through an endpoint whose gadget took `U`.
///
/// The prefix counts `km - k` (`q_2`), `km - 2(m + n) - 1` (`r`, including
/// `s`) and `km - (m + 1)` (each `p_v`) can be negative for small inputs; all
/// `n + 3` colors are then padded by the same amount `D`, so every shortest
/// path has `(n + 3)(km + D)` vertices.
pub fn gen_vertex_cover(vc: &VcInstance) -> Result<(ColoredInstance, GeneratorReport), ReductionError> {
    let (n, m, k) = (vc.n, vc.edges.len(), vc.k);
    if k == 0 || k > n {
        return Err(ReductionError::BudgetOutOfRange { k, n });
    }
    let (q1, q2, r) = (n, n + 1, n + 2);
    let km = (k * m) as i64;
    let (m_i, n_i) = (m as i64, n as i64);
    let pad = (2 * (m_i + n_i) + 2 - km).max(0);
    let count_q2 = (km - k as i64 + pad) as usize;
    let count_r = (km - 2 * (m_i + n_i) - 1 + pad) as usize;
    let count_p = (km - (m_i + 1) + pad) as usize;
    let count_q1 = pad as usize;

    let mut b = InstanceBuilder::new();
    let mut roles: Vec<String> = Vec::new();
    let mut intervals: Vec<(usize, usize)> = Vec::new();

    let mut prefix_colors = vec![r; count_r];
    prefix_colors.extend(std::iter::repeat_n(q2, count_q2));
    prefix_colors.extend(std::iter::repeat_n(q1, count_q1));
    for v in 0..n {
        prefix_colors.extend(std::iter::repeat_n(v, count_p));
    }
    let prefix = b.add_path(prefix_colors);
    for i in 0..prefix.len() {
        roles.push(if i == 0 { "s".into() } else { format!("G_P[{i}]") });
        intervals.push((i, i + 1));
    }
    let s = prefix[0];
    // `ends`: vertices the next gadget's entry attaches to; `x`: where its
    // first interval starts
    let mut ends = vec![*prefix.last().unwrap()];
    let mut x = prefix.len();

    for v in 0..n {
        // s_v, u_1, l_1, ..., u_{m+1}, l_{m+1}, t_v; the gadget is the square
        // of this path
        let mut seq = Vec::with_capacity(2 * m + 4);
        seq.push(b.add_vertex(r));
        roles.push(format!("s_v{}", v + 1));
        for i in 1..=m + 1 {
            seq.push(b.add_vertex(v));
            roles.push(format!("u_v{}[{i}]", v + 1));
            seq.push(b.add_vertex(if i == m + 1 { q2 } else { q1 }));
            roles.push(format!("l_v{}[{i}]", v + 1));
        }
        seq.push(b.add_vertex(r));
        roles.push(format!("t_v{}", v + 1));
        for (i, &w) in seq.iter().enumerate() {
            intervals.push((x + i, x + i + 2));
            if i >= 1 {
                b.add_edge(seq[i - 1], w);
            }
            if i >= 2 {
                b.add_edge(seq[i - 2], w);
            }
        }
        for &e in &ends {
            b.add_edge(e, seq[0]);
        }
        ends = vec![*seq.last().unwrap()];
        x += seq.len() + 1;
    }

    for (j, &(u, w)) in vc.edges.iter().enumerate() {
        let se = b.add_vertex(r);
        let xu = b.add_vertex(u);
        let xw = b.add_vertex(w);
        let te = b.add_vertex(r);
        roles.push(format!("s_e{}", j + 1));
        roles.push(format!("x_e{}[v{}]", j + 1, u + 1));
        roles.push(format!("x_e{}[v{}]", j + 1, w + 1));
        roles.push(format!("t_e{}", j + 1));
        intervals.extend([(x, x + 1), (x + 1, x + 2), (x + 1, x + 2), (x + 2, x + 3)]);
        for (a, c) in [(se, xu), (se, xw), (xu, xw), (xu, te), (xw, te)] {
            b.add_edge(a, c);
        }
        for &e in &ends {
            b.add_edge(e, se);
        }
        ends = vec![te];
        x += 3;
    }

    let levels = k * (m + 1) - m;
    for level in 0..levels {
        let ids: Vec<usize> = (0..n).map(|v| b.add_vertex(v)).collect();
        for v in 0..n {
            roles.push(format!("G_f[{}][v{}]", level + 1, v + 1));
            intervals.push((x, x + 1));
        }
        b.add_clique(&ids);
        for &e in &ends {
            for &w in &ids {
                b.add_edge(e, w);
            }
        }
        ends = ids;
        x += 1;
    }
    let t = b.add_vertex(r);
    roles.push("t".into());
    intervals.push((x, x + 1));
    for &e in &ends {
        b.add_edge(e, t);
    }

    let inst = b.build(n + 3, s, t)?;
    let mut report = GeneratorReport::new("vertex-cover");
    report.legend = (1..=n).map(|v| format!("p_v{v}")).collect();
    report.legend.extend(["q_1".to_string(), "q_2".to_string(), "r".to_string()]);
    report.roles = roles;
    report.meta("n", n);
    report.meta("m", m);
    report.meta("k", k);
    report.meta("padding", pad);
    report.meta("filler_levels", levels);
    report.meta("per_color", km + pad);
    report.meta("path_vertices", (n as i64 + 3) * (km + pad));
    report.certificates.push(Certificate::IntervalModel(intervals));
    Ok((inst, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{vertex_cover_oracle, verify_certificate};
    use crate::solver::{enumerate_shortest_paths, solve_oracle};

    fn check(n: usize, edges: Vec<(usize, usize)>, k: usize) -> bool {
        let vc = VcInstance::new(n, edges, k).unwrap();
        let (inst, report) = gen_vertex_cover(&vc).unwrap();
        assert!(report.certificates.iter().all(|c| verify_certificate(&inst, c)));
        let expect: usize = report.get("path_vertices").unwrap().parse().unwrap();
        assert_eq!(inst.distance(inst.s(), inst.t()), Some(expect - 1));
        let want = vertex_cover_oracle(&vc).unwrap().is_some();
        let got = solve_oracle(&inst).unwrap();
        assert_eq!(want, got.is_some(), "{vc:?}");
        if let Some(sol) = got {
            assert!(sol.histogram.iter().all(|&h| h.to_string() == report.get("per_color").unwrap()));
        }
        want
    }

    #[test]
    fn examples() {
        assert!(check(2, vec![(0, 1)], 1));
        assert!(!check(3, vec![(0, 1), (1, 2), (0, 2)], 1));
        assert!(check(3, vec![(0, 1), (1, 2), (0, 2)], 2));
        assert!(check(3, vec![(0, 1), (1, 2)], 1));
        assert!(!check(4, vec![(0, 1), (2, 3)], 1));
        assert!(check(2, vec![], 1));
    }

    #[test]
    fn unpadded_instance_counts() {
        // k*m large enough that no padding is needed
        let edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)];
        let vc = VcInstance::new(4, edges, 4).unwrap();
        let (inst, report) = gen_vertex_cover(&vc).unwrap();
        assert_eq!(report.get("padding"), Some("0"));
        assert!(verify_certificate(&inst, &report.certificates[0]));
        let (k, m, n) = (4, 6, 4);
        assert_eq!(inst.distance(inst.s(), inst.t()), Some((n + 3) * k * m - 1));
    }

    #[test]
    fn every_shortest_path_has_the_same_length() {
        let vc = VcInstance::new(2, vec![(0, 1)], 1).unwrap();
        let (inst, report) = gen_vertex_cover(&vc).unwrap();
        let total: usize = report.get("path_vertices").unwrap().parse().unwrap();
        let paths = enumerate_shortest_paths(&inst, 100_000);
        assert!(!paths.truncated);
        assert!(paths.paths.iter().all(|p| p.vertices.len() == total));
    }

    #[test]
    fn budget_range() {
        let vc = VcInstance::new(2, vec![(0, 1)], 0).unwrap();
        assert!(matches!(gen_vertex_cover(&vc), Err(ReductionError::BudgetOutOfRange { .. })));
        let vc = VcInstance::new(2, vec![(0, 1)], 3).unwrap();
        assert!(gen_vertex_cover(&vc).is_err());
    }
}
