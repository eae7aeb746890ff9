use crate::graph::{ColoredInstance, InstanceBuilder};

use super::{Certificate, GeneratorReport, ReductionError, SetSystem};

/// Exact Hitting Set to a graph whose edges split into `2d` paths.
///
/// Colors: `p_S = j` for set `j`, then `r_l = m`, `r_h = m + 1`, `q = m + 2`.
/// Element `x` contributes two parallel paths: `Y_x`, one vertex colored
/// `p_S` per set containing `x`, and `N_x`, the same number of `q`
/// vertices. A path through `Y_x` for exactly the elements of `X` is fair
/// iff `X` meets every set once.
///
/// The prefix count is `a = sigma - |F|`: with `X` exact, the `N` paths
/// contribute `sigma - |F|` vertices of `q`. If `a < 1` every color is
/// padded by `D = 1 - a` in the prefix.
pub fn gen_exact_hitting_set(sys: &SetSystem) -> Result<(ColoredInstance, GeneratorReport), ReductionError> {
    let d = sys.universe;
    let m = sys.sets.len();
    let occ = sys.occurrences();
    if let Some(x) = occ.iter().position(|&o| o == 0) {
        return Err(ReductionError::ElementUncovered(x + 1));
    }
    let sigma = sys.total_size();
    let (r_lo, r_hi, q) = (m, m + 1, m + 2);
    let a = sigma as i64 - m as i64;
    let pad = (1 - a).max(0);
    let a_pad = (a + pad) as usize;

    let mut b = InstanceBuilder::new();
    let mut roles: Vec<String> = Vec::new();
    let mut colors = vec![r_lo; a_pad];
    colors.extend(std::iter::repeat_n(r_hi, a_pad));
    for j in 0..m {
        colors.extend(std::iter::repeat_n(j, a_pad - 1));
    }
    colors.extend(std::iter::repeat_n(q, pad as usize));
    let prefix = b.add_path(colors);
    for i in 0..prefix.len() {
        roles.push(if i == 0 { "s".into() } else { format!("G_P[{i}]") });
    }

    let mut y_line = prefix.clone();
    let mut n_line = vec![*prefix.last().unwrap()];
    let mut cross = Vec::new();
    let mut ends = vec![*prefix.last().unwrap()];
    for x in 0..d {
        let containing: Vec<usize> = (0..m).filter(|&j| sys.sets[j].binary_search(&x).is_ok()).collect();
        let y = b.add_path(containing.iter().copied());
        for i in 0..y.len() {
            roles.push(format!("Y_{}[{}]", x + 1, i + 1));
        }
        let nn = b.add_path(std::iter::repeat_n(q, occ[x]));
        for i in 0..nn.len() {
            roles.push(format!("N_{}[{}]", x + 1, i + 1));
        }
        for &e in &ends {
            b.add_edge(e, y[0]);
            b.add_edge(e, nn[0]);
        }
        if x > 0 {
            cross.push(vec![ends[1], y[0]]);
            cross.push(vec![ends[0], nn[0]]);
        }
        y_line.extend(&y);
        n_line.extend(&nn);
        ends = vec![*y.last().unwrap(), *nn.last().unwrap()];
    }
    let t = b.add_vertex(r_hi);
    roles.push("t".into());
    for &e in &ends {
        b.add_edge(e, t);
    }
    y_line.push(t);
    n_line.push(t);

    let mut paths = vec![y_line];
    if d > 0 {
        paths.push(n_line);
    }
    paths.extend(cross);

    let inst = b.build(m + 3, prefix[0], t)?;
    let mut report = GeneratorReport::new("exact-hitting-set");
    report.legend = (1..=m).map(|j| format!("p_S{j}")).collect();
    report.legend.extend(["r_l".to_string(), "r_h".to_string(), "q".to_string()]);
    report.roles = roles;
    report.meta("universe", d);
    report.meta("sets", m);
    report.meta("sigma", sigma);
    report.meta("a", a);
    report.meta("padding", pad);
    report.certificates.push(Certificate::EdgePathPartition {
        paths,
        max_paths: 2 * d + 1,
    });
    Ok((inst, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{exact_hitting_set_oracle, verify_certificate};
    use crate::solver::solve_oracle;

    fn agree(universe: usize, sets: Vec<Vec<usize>>) -> bool {
        let sys = SetSystem::new(universe, sets).unwrap();
        let (inst, report) = gen_exact_hitting_set(&sys).unwrap();
        assert!(report.certificates.iter().all(|c| verify_certificate(&inst, c)));
        let want = exact_hitting_set_oracle(&sys).unwrap().is_some();
        assert_eq!(want, solve_oracle(&inst).unwrap().is_some(), "{sys:?}");
        want
    }

    #[test]
    fn examples() {
        assert!(agree(1, vec![vec![0]]));
        // one element hit by two sets; a prefix of sigma - d would reject it
        assert!(agree(1, vec![vec![0], vec![0]]));
        assert!(agree(2, vec![vec![0, 1]]));
        assert!(!agree(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]));
        assert!(agree(3, vec![vec![0, 1], vec![1, 2], vec![1]]));
        assert!(agree(3, vec![vec![0, 1, 2], vec![0, 1, 2]]));
    }

    #[test]
    fn uncovered_element() {
        let sys = SetSystem::new(2, vec![vec![0]]).unwrap();
        assert_eq!(gen_exact_hitting_set(&sys).unwrap_err(), ReductionError::ElementUncovered(2));
    }
}
