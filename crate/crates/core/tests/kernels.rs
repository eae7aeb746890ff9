mod common;

use bfsp::kernel::{kernel_nd, kernel_ph_free, nd_partition, ph_size_bound, KernelError};
use bfsp::random::{random_instance, RandomParams, Shape};
use bfsp::ColoredInstance;
use common::*;
use proptest::prelude::*;

/// Neighborhood diversity by brute force over all pairs.
fn naive_nd(inst: &ColoredInstance) -> usize {
    let n = inst.n();
    let same = |u: usize, v: usize| (0..n).filter(|&x| x != u && x != v).all(|x| inst.has_edge(u, x) == inst.has_edge(v, x));
    let mut rep: Vec<usize> = Vec::new();
    for v in 0..n {
        if !rep.iter().any(|&r| same(r, v)) {
            rep.push(v);
        }
    }
    rep.len()
}

fn strategy() -> impl Strategy<Value = ColoredInstance> {
    (2usize..=12, 1usize..=4, 0usize..=6, 0u8..3, any::<u64>()).prop_map(|(n, c, extra, shape, seed)| {
        let shape = [Shape::Sparse, Shape::Layered, Shape::Twins][shape as usize];
        random_instance(
            RandomParams {
                n,
                num_colors: c,
                extra_edges: extra,
                shape,
            },
            seed,
        )
    })
}

#[test]
fn nd_kernel_on_twins() {
    // s - 30 twins of two colors - hub - t
    let mut edges = Vec::new();
    for v in 1..=30 {
        edges.push((0, v));
        edges.push((v, 31));
    }
    edges.push((31, 32));
    let colors: Vec<usize> = (0..33).map(|v| v % 2).collect();
    let inst = ColoredInstance::new(colors, 2, &edges, 0, 32).unwrap();
    let (kern, report) = kernel_nd(&inst);
    assert_eq!(report.parameter, naive_nd(&inst));
    assert!(kern.n() <= report.parameter * report.parameter);
    assert_eq!(naive_fair_path(&kern).is_some(), naive_fair_path(&inst).is_some());
    let (again, _) = kernel_nd(&kern);
    assert!(again.n() <= kern.n());
}

#[test]
fn ph_rejects_unsupported_h() {
    let inst = fig1();
    assert_eq!(kernel_ph_free(&inst, 7, 0).unwrap_err(), KernelError::UnsupportedH(7));
    assert!(kernel_ph_free(&inst, 1, 0).is_err());
}

#[test]
fn ph_kernel_on_fig1() {
    let inst = fig1();
    let (kern, report) = kernel_ph_free(&inst, 4, 0).unwrap();
    assert!(naive_fair_path(&kern).is_some());
    assert!(kern.n() as u128 <= report.size_bound);
    assert_eq!(report.size_bound, ph_size_bound(report.parameter, 4));
}

#[test]
fn ph_size_bound_formula() {
    // kh + 2 + (kh + 2)^2 (h (k + 1))^(h - 1) h, computed by hand
    assert_eq!(ph_size_bound(1, 4), 6 + 36 * 512 * 4);
    assert_eq!(ph_size_bound(0, 4), 2 + 4 * 64 * 4);
    assert_eq!(ph_size_bound(2, 3), 8 + 64 * 81 * 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kernels_preserve_answers(inst in strategy(), seed in any::<u64>()) {
        let want = naive_fair_path(&inst).is_some();
        let (nd, rep) = kernel_nd(&inst);
        prop_assert_eq!(rep.parameter, naive_nd(&inst));
        prop_assert_eq!(nd_partition(&inst).width(), rep.parameter);
        prop_assert!(nd.n() <= (rep.parameter * rep.parameter).max(2));
        prop_assert_eq!(naive_fair_path(&nd).is_some(), want);
        let (ph, rep) = kernel_ph_free(&inst, 4, seed).unwrap();
        prop_assert!(ph.n() as u128 <= rep.size_bound);
        prop_assert_eq!(naive_fair_path(&ph).is_some(), want);
    }
}
