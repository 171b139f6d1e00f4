//! Staged reductions against the direct solvers, and the kernels of the
//! pushdown and restriction maps.

mod common;

use common::*;
use homlie_core::maps::solve_com;
use homlie_core::reduction::{center_sequence, com_sequence, reduce_bider_s, reduce_com, Move};

#[test]
fn reduce_bider_s_matches_direct_solver() {
    for (name, l) in catalog_set() {
        for k in 0..3 {
            let report = reduce_bider_s(&l, k, l.dim()).unwrap();
            assert!(report.is_complete(), "{name}, k = {k}: {:?}", report.trace);
            assert!(report.agrees_with_direct, "{name}, k = {k}");
            assert!(
                report.trace.iter().all(|s| s.kernel_matches),
                "{name}, k = {k}"
            );
        }
    }
}

#[test]
fn reduce_com_matches_direct_solver() {
    for (name, l) in catalog_set() {
        for k in 0..2 {
            let report = reduce_com(&adjoint(&l, k), l.dim()).unwrap();
            assert!(report.is_complete(), "{name}, k = {k}: {:?}", report.trace);
            assert_eq!(
                report.space,
                solve_com(&adjoint(&l, k)).unwrap(),
                "{name}, k = {k}"
            );
        }
    }
}

#[test]
fn pushdown_kernel_is_central() {
    for (name, l) in catalog_set() {
        for k in 0..3 {
            let (kernel, central) = bider_pushdown_kernel(&l, k);
            assert_eq!(kernel, central, "{name}, k = {k}");
        }
    }
}

#[test]
fn restriction_kernel_is_special() {
    let mut checked = 0;
    for (name, l) in catalog_set() {
        for k in 0..3 {
            if let Some((kernel, special)) = bider_restriction_kernel(&l, k) {
                checked += 1;
                assert_eq!(kernel, special, "{name}, k = {k}");
            }
        }
    }
    let q = arc(aff1_sample()
        .quotient(&aff1_sample().center())
        .unwrap()
        .quotient);
    for k in 0..3 {
        let (kernel, special) = bider_restriction_kernel(&q, k).unwrap();
        assert_eq!(kernel, special);
        assert_eq!(kernel.dim(), 1);
    }
    assert_eq!(checked, 6);
}

#[test]
fn com_pushdown_kernel_is_central_plus_special() {
    for (name, l) in catalog_set() {
        for k in 0..2 {
            let (kernel, expected) = com_pushdown_kernel(&adjoint(&l, k));
            assert_eq!(kernel, expected, "{name}, k = {k}");
        }
    }
}

#[test]
fn sequences_terminate_within_four_levels() {
    for (name, l) in catalog_set() {
        assert!(center_sequence(&l, 4).unwrap().terminated, "{name}");
        for k in 0..2 {
            assert!(
                com_sequence(&adjoint(&l, k), 4).unwrap().terminated,
                "{name}"
            );
        }
    }
}

#[test]
fn moves_follow_the_structure() {
    let h = catalog_set().remove(0).1;
    let report = reduce_bider_s(&h, 0, 3).unwrap();
    let moves: Vec<&str> = report.trace.iter().map(|s| s.step.name()).collect();
    assert_eq!(
        moves,
        ["quotient-center", "quotient-center", "centroid-base"]
    );
    let dims: Vec<(usize, usize)> = report
        .trace
        .iter()
        .map(|s| (s.algebra_dim, s.reduced_dim))
        .collect();
    assert_eq!(dims, [(3, 2), (2, 0), (0, 0)]);
    assert_eq!(report.trace[2].step, Move::CentroidBase);
}
