use hopfdy::exactlin::{Rational, TensorElement};
use hopfdy::hopfcore::{bk_generator, build_bk, build_cyclic, HopfAlgebra};
use hopfdy::rmatrix::*;
use proptest::prelude::*;

mod common;
use common::permuted;

fn half(n: i64) -> Rational {
    Rational::new(n, 2)
}

fn lambda(k: usize, entries: &[(i64, i64)]) -> Vec<Vec<Rational>> {
    (0..k).map(|i| (0..k).map(|j| Rational::new(entries[i * k + j].0, entries[i * k + j].1)).collect()).collect()
}

fn add(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

#[test]
fn r0_passes_and_is_involutive() {
    for k in 1..=3 {
        let h = build_bk(k);
        let r = bk_r0(k);
        let report = check_rmatrix(&h, &r).unwrap();
        assert!(report.verified(), "{report}");
        assert_eq!(h.tensor_mul(&r, &r), h.tensor_one(2));
        let rm = RMatrix::new(&h, r.clone()).unwrap();
        assert_eq!(h.tensor_mul(rm.inverse(), &r), h.tensor_one(2));
        assert_eq!(h.tensor_mul(&r, rm.inverse()), h.tensor_one(2));
    }
}

#[test]
fn r0_coordinates_and_symmetry() {
    let r = bk_r0(1);
    let expected = TensorElement::from_terms(
        4,
        2,
        [(vec![0, 0], half(1)), (vec![1, 0], half(1)), (vec![0, 1], half(1)), (vec![1, 1], half(-1))],
    );
    assert_eq!(r, expected);
    assert_eq!(r.permute_slots(&[1, 0]).unwrap(), r);
    let h = build_bk(1);
    let e = h.apply_counit_at(&r, 0).unwrap();
    assert_eq!(e, TensorElement::from_vec(4, 1, h.unit().clone()));
}

#[test]
fn trivial_r_matrices() {
    let z2 = build_cyclic(2);
    assert!(check_rmatrix(&z2, &trivial_r(&z2)).unwrap().verified());
    let b1 = build_bk(1);
    let report = check_rmatrix(&b1, &trivial_r(&b1)).unwrap();
    assert!(!report.quasi_cocommutativity.passed);
    assert!(report.quasi_cocommutativity.witnesses.iter().any(|w| w.contains('x')));
    assert!(RMatrix::new(&b1, trivial_r(&b1)).is_err());
}

#[test]
fn tangent_spaces_of_r0() {
    for k in 1..=3 {
        let h = build_bk(k);
        let r = RMatrix::new(&h, bk_r0(k)).unwrap();
        let t = tangent_space(&h, &r).unwrap();
        assert_eq!(t.dim(), k * k);
        assert!(matches_standard_basis(&h, k, &t));
        for v in &t.vectors {
            assert!(is_tangent(&h, r.element(), v));
            assert!(h.apply_counit_at(v, 0).unwrap().is_zero());
            assert!(h.apply_counit_at(v, 1).unwrap().is_zero());
        }
    }
    let z2 = build_cyclic(2);
    let r = RMatrix::new(&z2, trivial_r(&z2)).unwrap();
    assert_eq!(tangent_space(&z2, &r).unwrap().dim(), 0);
}

#[test]
fn printed_basis_vectors_are_tangent() {
    let h = build_bk(2);
    let r = bk_r0(2);
    for t in bk_standard_tangent_basis(&h, 2) {
        assert!(is_tangent(&h, &r, &t));
    }
    assert!(!is_tangent(&h, &r, &h.tensor_one(2)));
}

#[test]
fn r_lambda_examples() {
    let h = build_bk(1);
    assert_eq!(bk_r_lambda(&h, 1, &lambda(1, &[(0, 1)])), bk_r0(1));
    let r = bk_r_lambda(&h, 1, &lambda(1, &[(1, 1)]));
    assert!(check_rmatrix(&h, &r).unwrap().verified());
    // R₀(1 + x ⊗ xg) by hand
    let x = bk_generator(1, 1);
    let xg = h.mul(&x, &bk_generator(1, 0));
    let by_hand = h.tensor_mul(&bk_r0(1), &h.tensor_one(2).add(&TensorElement::from_factors(4, &[x, xg])));
    assert_eq!(r, by_hand);
}

fn tangent_dim_after_permutation(h: &HopfAlgebra, r: &TensorElement, perm: &[usize]) -> usize {
    let p = permuted(h, perm);
    let n = h.dim();
    let mut inv = vec![0; n];
    for (i, &o) in perm.iter().enumerate() {
        inv[o] = i;
    }
    let rp = TensorElement::from_terms(n, 2, r.terms().map(|(idx, c)| (vec![inv[idx[0]], inv[idx[1]]], c.clone())));
    tangent_space(&p, &RMatrix::new(&p, rp).unwrap()).unwrap().dim()
}

#[test]
fn tangent_dimension_is_basis_independent() {
    let h = build_bk(2);
    let perm: Vec<usize> = (0..8).map(|i| (i * 5 + 3) % 8).collect();
    assert_eq!(tangent_dim_after_permutation(&h, &bk_r0(2), &perm), 4);
}

fn entries(k: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-5i64..6, 1i64..5), k * k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn r_lambda_is_an_r_matrix(a in entries(2)) {
        let h = build_bk(2);
        let r = bk_r_lambda(&h, 2, &lambda(2, &a));
        prop_assert!(check_rmatrix(&h, &r).unwrap().verified());
    }

    #[test]
    fn r_lambda_composition(a in entries(2), b in entries(2)) {
        let h = build_bk(2);
        let (la, lb) = (lambda(2, &a), lambda(2, &b));
        let lhs = bk_r_lambda(&h, 2, &add(&la, &lb));
        let rhs = h.tensor_mul(&h.tensor_mul(&bk_r_lambda(&h, 2, &la), &bk_r0(2)), &bk_r_lambda(&h, 2, &lb));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tangent_dimension_along_family(a in entries(1)) {
        let h = build_bk(1);
        let r = RMatrix::new(&h, bk_r_lambda(&h, 1, &lambda(1, &a))).unwrap();
        prop_assert_eq!(tangent_space(&h, &r).unwrap().dim(), 1);
    }

    #[test]
    fn inverse_is_two_sided(a in entries(1)) {
        let h = build_bk(1);
        let r = RMatrix::new(&h, bk_r_lambda(&h, 1, &lambda(1, &a))).unwrap();
        prop_assert_eq!(h.tensor_mul(r.element(), r.inverse()), h.tensor_one(2));
        prop_assert_eq!(h.tensor_mul(r.inverse(), r.element()), h.tensor_one(2));
    }

    #[test]
    fn permuted_sweedler_tangent(perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle()) {
        let h = build_bk(1);
        prop_assert_eq!(tangent_dim_after_permutation(&h, &bk_r0(1), &perm), 1);
    }
}
