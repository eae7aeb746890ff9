use crate::graph::{ColoredInstance, InstanceBuilder};

use super::{Certificate, GeneratorReport, ReductionError, SetSystem};

/// Exact Cover to a bipartite cactus of bandwidth two.
///
/// Colors `0..n` are the elements, color `n` is the filler. Set gadget `j`
/// joins `s_j` and `t_j` by two parallel paths: `A_j` colored by the
/// elements of `S_j` and `B_j` of filler color, each with `|S_j|` vertices.
/// The prefix path after `s` holds `2m + 1 + sigma - n` vertices of every
/// element color, so choosing the `A` paths of a subfamily yields equal
/// counts iff the subfamily covers every element exactly once.
///
/// When that count is negative every color (filler included) is padded by
/// the same amount in the prefix, which leaves fairness unchanged.
pub fn gen_exact_cover(sys: &SetSystem) -> Result<(ColoredInstance, GeneratorReport), ReductionError> {
    let n = sys.universe;
    let m = sys.sets.len();
    let sigma = sys.total_size();
    let filler = n;
    let base = 2 * m as i64 + 1 + sigma as i64 - n as i64;
    let pad = (-base).max(0) as usize;
    let per_element = (base + pad as i64) as usize;

    let mut b = InstanceBuilder::new();
    let mut report = GeneratorReport::new("exact-cover");
    let mut roles = Vec::new();

    let mut prefix_colors = vec![filler];
    roles.push("s".to_string());
    for x in 0..n {
        prefix_colors.extend(std::iter::repeat_n(x, per_element));
    }
    prefix_colors.extend(std::iter::repeat_n(filler, pad));
    for i in 1..prefix_colors.len() {
        roles.push(format!("G_P[{i}]"));
    }
    let prefix = b.add_path(prefix_colors);
    let s = prefix[0];
    let mut phi: Vec<usize> = (1..=prefix.len()).collect();
    let mut last = *prefix.last().unwrap();

    for (j, set) in sys.sets.iter().enumerate() {
        let sj = b.add_vertex(filler);
        roles.push(format!("s_{}", j + 1));
        b.add_edge(last, sj);
        let phi_sj = phi[last] + 1;
        phi.push(phi_sj);
        let a = b.add_path(set.iter().copied());
        for (q, &v) in a.iter().enumerate() {
            roles.push(format!("A_{}[{}]", j + 1, q + 1));
            phi.push(phi_sj + 2 * q + 1);
            debug_assert_eq!(phi.len(), v + 1);
        }
        let bb = b.add_path(std::iter::repeat_n(filler, set.len()));
        for q in 0..bb.len() {
            roles.push(format!("B_{}[{}]", j + 1, q + 1));
            phi.push(phi_sj + 2 * q + 2);
        }
        let tj = b.add_vertex(filler);
        roles.push(format!("t_{}", j + 1));
        phi.push(phi_sj + 2 * set.len() + 1);
        b.add_edge(sj, a[0]);
        b.add_edge(sj, bb[0]);
        b.add_edge(*a.last().unwrap(), tj);
        b.add_edge(*bb.last().unwrap(), tj);
        last = tj;
    }
    let t = b.add_vertex(filler);
    roles.push("t".to_string());
    phi.push(phi[last] + 1);
    b.add_edge(last, t);

    let inst = b.build(n + 1, s, t)?;
    report.legend = (1..=n).map(|x| format!("element {x}")).collect();
    report.legend.push("filler".to_string());
    report.roles = roles;
    report.meta("universe", n);
    report.meta("sets", m);
    report.meta("sigma", sigma);
    report.meta("prefix_per_color", base);
    report.meta("padding", pad);
    report.certificates.push(Certificate::Bandwidth { phi, max_stretch: 2 });
    Ok((inst, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{exact_cover_oracle, is_bipartite, is_cactus, verify_certificate};
    use crate::solver::solve_oracle;

    fn agree(universe: usize, sets: Vec<Vec<usize>>) -> bool {
        let sys = SetSystem::new(universe, sets).unwrap();
        let (inst, report) = gen_exact_cover(&sys).unwrap();
        assert!(is_bipartite(&inst) && is_cactus(&inst));
        assert!(report.certificates.iter().all(|c| verify_certificate(&inst, c)));
        let want = exact_cover_oracle(&sys).unwrap().is_some();
        let got = solve_oracle(&inst).unwrap().is_some();
        assert_eq!(want, got, "{sys:?}");
        got
    }

    #[test]
    fn examples() {
        assert!(agree(1, vec![vec![0]]));
        assert!(agree(2, vec![vec![0], vec![0, 1]]));
        assert!(agree(2, vec![vec![0, 1], vec![0, 1], vec![0]]));
        assert!(!agree(3, vec![vec![0, 1], vec![1, 2]]));
        // negative prefix count forces padding
        assert!(!agree(5, vec![vec![0]]));
        assert!(agree(5, vec![vec![0, 1, 2, 3, 4]]));
    }

    #[test]
    fn single_set_witness_uses_a_path() {
        let sys = SetSystem::new(1, vec![vec![0]]).unwrap();
        let (inst, report) = gen_exact_cover(&sys).unwrap();
        let sol = solve_oracle(&inst).unwrap().unwrap();
        let a = report.roles.iter().position(|r| r == "A_1[1]").unwrap();
        assert!(sol.vertices.contains(&a));
    }
}
