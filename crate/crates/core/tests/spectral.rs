mod common;

use common::*;
use proptest::prelude::*;
use tropical_groups::idem::is_idempotent;
use tropical_groups::random::{random_idempotent, random_nonpositive};
use tropical_groups::{
    critical_structure, eigenspace_basis, extremal_columns, idempotent_profile, is_multiple, kleene_plus, kleene_star,
    max_cycle_mean, rat, TropScalar,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn karp_matches_cycle_enumeration(a in square_matrix(5)) {
        prop_assert_eq!(max_cycle_mean(&a).unwrap(), brute_force_mcm(&a));
    }

    #[test]
    fn eigenbasis_vectors_are_eigenvectors(a in square_matrix(5)) {
        let report = eigenspace_basis(&a).unwrap();
        let mcm = report.critical.mcm;
        for v in &report.eigenbasis {
            prop_assert_eq!(a.mul_vec(v).unwrap(), v.scale(mcm));
        }
        for (i, v) in report.eigenbasis.iter().enumerate() {
            for w in &report.eigenbasis[i + 1..] {
                prop_assert!(is_multiple(v, w).is_none());
            }
        }
    }

    #[test]
    fn class_columns_are_proportional(a in square_matrix(5)) {
        let report = eigenspace_basis(&a).unwrap();
        for class in &report.critical.classes {
            let rep = report.aplus.column(class[0]);
            for &j in class {
                prop_assert!(is_multiple(&rep, &report.aplus.column(j)).is_some());
            }
        }
        let p = &report.aplus;
        let zero = TropScalar::from_integer(0);
        // Critical nodes share a class iff a zero cycle passes through both.
        for &i in &report.critical.critical_nodes {
            for &j in &report.critical.critical_nodes {
                let same = report.critical.class_of(i) == report.critical.class_of(j);
                prop_assert_eq!(same, p[(i, j)] + p[(j, i)] == zero);
            }
        }
    }

    #[test]
    fn plus_matches_power_series(a in square_matrix(5)) {
        let mcm = max_cycle_mean(&a).unwrap();
        let shifted = a.scale(-mcm);
        prop_assert_eq!(kleene_plus(&shifted).unwrap(), series_plus(&shifted));
    }
}

#[test]
fn star_is_zero_diagonal_idempotent() {
    let mut r = rng(1);
    for trial in 0..300 {
        let a = random_nonpositive(&mut r, 1 + trial % 6);
        let s = kleene_star(&a).unwrap();
        assert!(is_idempotent(&s).unwrap());
        assert!((0..s.rows()).all(|i| s[(i, i)] == rat(0, 1)));
        let plus = kleene_plus(&a).unwrap();
        // A⁺ ⊗ A⁺ ≤ A⁺ entrywise.
        let sq = plus.otimes(&plus).unwrap();
        assert!(sq.as_slice().iter().zip(plus.as_slice()).all(|(x, y)| x <= y));
    }
}

#[test]
fn idempotent_critical_nodes_are_zero_diagonal() {
    let mut r = rng(2);
    for trial in 0..200 {
        let n = 2 + trial % 5;
        let noncritical = trial % 2;
        let k = 1 + (trial / 2) % (n - noncritical);
        let e = random_idempotent(&mut r, n, k, noncritical);
        assert!(is_idempotent(&e).unwrap());
        let s = critical_structure(&e).unwrap();
        assert_eq!(s.mcm, rat(0, 1));
        let zero_diag: Vec<usize> = (0..n).filter(|&i| e[(i, i)] == rat(0, 1)).collect();
        assert_eq!(s.critical_nodes, zero_diag);
        assert_eq!(s.class_count(), k);
        assert_eq!(idempotent_profile(&e).unwrap().rank, extremal_columns(&e).len());
    }
}
