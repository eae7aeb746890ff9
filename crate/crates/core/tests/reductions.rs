mod common;

use bfsp::reduction::*;
use bfsp::report::KeyValueReport;
use bfsp::solver::solve_dp;
use bfsp::ColoredInstance;
use common::*;

/// Exact cover by trying every subfamily, written independently of the
/// library oracle.
fn has_exact_cover(universe: usize, sets: &[Vec<usize>]) -> bool {
    (0u32..1 << sets.len()).any(|mask| {
        let mut hit = vec![0; universe];
        for (j, s) in sets.iter().enumerate() {
            if mask >> j & 1 == 1 {
                s.iter().for_each(|&x| hit[x] += 1);
            }
        }
        hit.iter().all(|&h| h == 1)
    })
}

fn has_exact_hitting_set(universe: usize, sets: &[Vec<usize>]) -> bool {
    (0u32..1 << universe).any(|mask| sets.iter().all(|s| s.iter().filter(|&&x| mask >> x & 1 == 1).count() == 1))
}

fn has_vertex_cover(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    (0u32..1 << n).any(|mask| mask.count_ones() as usize <= k && edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
}

fn nonempty_subsets(universe: usize) -> Vec<Vec<usize>> {
    (1u32..1 << universe)
        .map(|mask| (0..universe).filter(|x| mask >> x & 1 == 1).collect())
        .collect()
}

#[test]
fn exact_cover_examples() {
    let cases: [(usize, Vec<Vec<usize>>); 3] = [
        (1, vec![vec![0]]),
        (2, vec![vec![0], vec![0, 1]]),
        (2, vec![vec![0, 1], vec![0, 1], vec![0]]),
    ];
    for (u, sets) in cases {
        let sys = SetSystem::new(u, sets.clone()).unwrap();
        let (inst, report) = gen_exact_cover(&sys).unwrap();
        assert_eq!(naive_fair_path(&inst).is_some(), has_exact_cover(u, &sets));
        assert!(is_bipartite(&inst) && is_cactus(&inst));
        assert!(report.certificates.iter().all(|c| verify_certificate(&inst, c)));
    }
}

#[test]
fn exact_cover_all_pairs_of_sets_over_three_elements() {
    let subsets = nonempty_subsets(3);
    for a in &subsets {
        for b in &subsets {
            let sets = vec![a.clone(), b.clone()];
            let sys = SetSystem::new(3, sets.clone()).unwrap();
            let (inst, _) = gen_exact_cover(&sys).unwrap();
            assert_eq!(solve_dp(&inst).is_some(), has_exact_cover(3, &sets), "{sets:?}");
        }
    }
}

#[test]
fn exact_hitting_set_all_pairs_of_sets_over_three_elements() {
    let subsets = nonempty_subsets(3);
    for a in &subsets {
        for b in &subsets {
            let sets = vec![a.clone(), b.clone()];
            let sys = SetSystem::new(3, sets.clone()).unwrap();
            match gen_exact_hitting_set(&sys) {
                Ok((inst, report)) => {
                    assert_eq!(solve_dp(&inst).is_some(), has_exact_hitting_set(3, &sets), "{sets:?}");
                    assert!(report.certificates.iter().all(|c| verify_certificate(&inst, c)));
                }
                Err(e) => assert!(matches!(e, ReductionError::ElementUncovered(_))),
            }
        }
    }
}

#[test]
fn vertex_cover_all_graphs_on_four_vertices() {
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        for k in 1..=4 {
            let vc = VcInstance::new(4, edges.clone(), k).unwrap();
            let (inst, report) = gen_vertex_cover(&vc).unwrap();
            assert_eq!(solve_dp(&inst).is_some(), has_vertex_cover(4, &edges, k), "{edges:?} k={k}");
            assert!(verify_certificate(&inst, &report.certificates[0]));
        }
    }
}

#[test]
fn vertex_cover_witness_counts() {
    let vc = VcInstance::new(3, vec![(0, 1), (1, 2)], 1).unwrap();
    let (inst, report) = gen_vertex_cover(&vc).unwrap();
    let per: usize = report.get("per_color").unwrap().parse().unwrap();
    let paths = all_shortest_paths(&inst);
    assert!(!paths.is_empty());
    assert!(paths.iter().all(|p| p.len() == 6 * per));
    let fair_paths: Vec<_> = paths.iter().filter(|p| fair(&histogram(&inst, p))).collect();
    assert!(!fair_paths.is_empty());
    assert!(fair_paths.iter().all(|p| histogram(&inst, p).iter().all(|&h| h == per)));
}

fn small_batch_member(colors: &[usize], c: usize) -> ColoredInstance {
    let edges: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
    ColoredInstance::new(colors.to_vec(), c, &edges, 0, colors.len() - 1).unwrap()
}

#[test]
fn compositions_or_their_members() {
    let yes = small_batch_member(&[0, 1, 2, 0], 3);
    let no = small_batch_member(&[0, 0, 1, 0], 3);
    assert!(naive_fair_path(&yes).is_some() && naive_fair_path(&no).is_none());
    for batch in [vec![yes.clone()], vec![no.clone(), no.clone(), yes.clone()], vec![no.clone(), no.clone()], vec![yes.clone(), no.clone()]] {
        let want = batch.iter().any(|m| naive_fair_path(m).is_some());
        let (td, _) = cross_compose_treedepth(&batch).unwrap();
        assert_eq!(naive_fair_path(&td).is_some(), want);
        let (cc, report) = cross_compose_clique_cover(&batch).unwrap();
        assert_eq!(naive_fair_path(&cc).is_some(), want);
        assert!(distance_levels_are_cliques(&cc));
        assert!(report.certificates.iter().all(|c| verify_certificate(&cc, c)));
    }
}

#[test]
fn average_distance_on_fig1() {
    let inst = fig1();
    let (out, _) = gen_avg_distance(&inst);
    assert_eq!(out.n(), 16 + 256);
    assert!(average_intra_component_distance(&out) <= 3.0);
    assert_eq!(naive_fair_path(&out), naive_fair_path(&inst));
}

#[test]
fn report_round_trips() {
    let sys = SetSystem::new(2, vec![vec![0], vec![1]]).unwrap();
    let (_, report) = gen_exact_cover(&sys).unwrap();
    let kv = report.to_report();
    let back = KeyValueReport::parse(&kv.to_string()).unwrap();
    assert_eq!(back, kv);
    assert_eq!(back.get("construction"), Some("exact-cover"));
    assert_eq!(back.get("color.3"), Some("filler"));
    assert_eq!(back.get("vertex.1"), Some("s"));
}
