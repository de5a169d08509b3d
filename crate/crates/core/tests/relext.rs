use hopfdy::algcore::{hom_space, module_map_kernel, AlgebraMap};
use hopfdy::double::{coeff_restriction, drinfeld_double_bk, DrinfeldDouble};
use hopfdy::dycomplex::DYComplex;
use hopfdy::exactlin::Rational;
use hopfdy::hopfcore::{bk_subalgebra_inclusion, build_bk};
use hopfdy::relext::*;
use hopfdy::rmatrix::{bk_r0, RMatrix};
use proptest::prelude::*;

fn pair1() -> (DrinfeldDouble, ResolventPair) {
    let d = drinfeld_double_bk(1).unwrap();
    let p = ResolventPair::double(&d).unwrap();
    (d, p)
}

const KINDS: [ResolutionKind; 2] = [ResolutionKind::Bar, ResolutionKind::IteratedCover];

#[test]
fn bar_resolution_shape() {
    let (d, p) = pair1();
    let k = d.hopf().trivial_module();
    let res = bar_resolution(&p, &k, 2).unwrap();
    assert_eq!(res.kind, ResolutionKind::Bar);
    assert_eq!(res.term_dims(), vec![4, 16, 64]);
    assert!(res.differentials[0].mul(&res.differentials[1]).is_zero());
    let check = verify_resolution(&p, &res).unwrap();
    assert!(check.ok(), "{:?}", check.failures);
}

#[test]
fn cover_resolution_shape() {
    let (d, p) = pair1();
    let k = d.hopf().trivial_module();
    let res = iterated_cover_resolution(&p, &k, 2).unwrap();
    assert_eq!(res.term_dims(), vec![4, 12, 36]);
    let k1 = module_map_kernel(&res.differentials[0], &res.terms[0], &k).unwrap();
    assert_eq!(k1.module.dim(), 3);
    assert!(verify_resolution(&p, &res).unwrap().ok());
}

#[test]
fn tensor_is_not_a_single_resolution_kind() {
    let (d, p) = pair1();
    let k = d.hopf().trivial_module();
    assert!(resolution_of_kind(&p, &k, 1, ResolutionKind::Tensor, &Budget::unlimited()).is_err());
}

#[test]
fn trivial_ext_over_the_double() {
    let (d, p) = pair1();
    let k = d.hopf().trivial_module();
    for kind in KINDS {
        assert_eq!(relative_ext_dims(&p, &k, &k, 3, kind).unwrap(), vec![1, 0, 1, 0], "{kind}");
    }
    let res = iterated_cover_resolution(&p, &k, 4).unwrap();
    assert_eq!(ext_via_hom_complex(&res, &k).unwrap(), vec![1, 0, 1, 0]);
    let bar = bar_resolution(&p, &k, 3).unwrap();
    assert_eq!(ext_via_hom_complex(&bar, &k).unwrap(), vec![1, 0, 1]);
}

#[test]
fn relatively_projective_modules_have_no_higher_ext() {
    let (d, p) = pair1();
    let k = d.hopf().trivial_module();
    let gk = p.comonad(&k).unwrap();
    for kind in KINDS {
        let e = relative_ext_dims(&p, &gk, &k, 2, kind).unwrap();
        assert_eq!(e[0], hom_space(&gk, &k).unwrap().len());
        assert_eq!(&e[1..], &[0, 0]);
    }
}

#[test]
fn frobenius_matches_direct_hom() {
    let (d, p) = pair1();
    let k = d.hopf().trivial_module();
    let res = bar_resolution(&p, &k, 1).unwrap();
    for (t, m) in res.terms.iter().zip(&res.induced_from) {
        let m = m.as_ref().unwrap();
        assert_eq!(hom_dim_induced(&p, m, &k).unwrap(), hom_space(t, &k).unwrap().len());
    }
}

#[test]
fn restriction_ext_and_crosscheck() {
    let d2 = drinfeld_double_bk(2).unwrap();
    let b1 = build_bk(1);
    let iota = bk_subalgebra_inclusion(&b1, d2.base(), 1, 1).unwrap();
    for kind in KINDS {
        for n in 1..=3 {
            let c = adjunction_crosscheck_restriction(&d2, &b1, &iota, n, kind, &Budget::unlimited()).unwrap();
            assert!(c.agrees(), "{kind} {n}: {c:?}");
            assert_eq!(c.ext, [0, 3, 0][n - 1]);
        }
    }
}

#[test]
fn restriction_to_the_whole_algebra_is_the_identity_complex() {
    let d = drinfeld_double_bk(1).unwrap();
    let id = AlgebraMap::identity(d.base().algebra().clone());
    let w = coeff_restriction(&d, d.base(), &id).unwrap().module;
    assert_eq!(w.dim(), 1);
    let c = adjunction_crosscheck_restriction(&d, d.base(), &id, 2, ResolutionKind::IteratedCover, &Budget::unlimited())
        .unwrap();
    assert_eq!((c.dy, c.ext), (1, 1));
    assert_eq!(DYComplex::identity(d.base()).cohomology_dim(2).unwrap(), 1);
}

#[test]
fn tensor_crosscheck_with_r0() {
    let d = drinfeld_double_bk(1).unwrap();
    let r = RMatrix::new(d.base(), bk_r0(1)).unwrap();
    for n in 1..=3 {
        let c = adjunction_crosscheck_tensor(&d, &r, n, ResolutionKind::IteratedCover, &Budget::unlimited()).unwrap();
        assert!(c.agrees(), "{n}: {c:?}");
        assert_eq!(c.dy, [0, 3, 0][n - 1]);
    }
}

#[test]
fn kunneth_low_degrees() {
    let (d, p) = pair1();
    let k = d.hopf().trivial_module();
    for (n, want) in [(0, 1), (1, 0), (2, 2)] {
        let r = kunneth_check(&p, &k, &k, &p, &k, &k, n, &Budget::unlimited()).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!(r.direct, want);
    }
}

#[test]
fn tensor_resolution_requires_matching_factors() {
    let (d, p) = pair1();
    let (d2, p2) = pair1();
    let a = iterated_cover_resolution(&p, &d.hopf().trivial_module(), 1).unwrap();
    let b = iterated_cover_resolution(&p2, &d2.hopf().trivial_module(), 1).unwrap();
    let pp = ResolventPair::tensor(&p, &p).unwrap();
    assert!(tensor_resolution(&pp, &a, &b).is_err());
    let t = tensor_resolution(&pp, &a, &a).unwrap();
    assert_eq!(t.kind, ResolutionKind::Tensor);
    assert_eq!(t.term_dims(), vec![16, 96]);
    assert!(verify_resolution(&pp, &t).unwrap().ok());
}

#[test]
fn corrupted_resolutions_are_detected() {
    let (d, p) = pair1();
    let k = d.hopf().trivial_module();
    let res = iterated_cover_resolution(&p, &k, 2).unwrap();

    let mut scaled = res.clone();
    scaled.differentials[1] = scaled.differentials[1].scale(&Rational::from_int(2));
    let c = verify_resolution(&p, &scaled).unwrap();
    assert!(c.linear && c.complex && c.exact && !c.split);

    let mut dropped = res.clone();
    dropped.differentials[2] = dropped.differentials[2].scale(&Rational::zero());
    let c = verify_resolution(&p, &dropped).unwrap();
    assert!(!c.exact && !c.split);
    assert!(c.failures.iter().any(|f| f.contains("P_1")));

    let mut unsplit = res.clone();
    unsplit.homotopy[1] = unsplit.homotopy[1].scale(&Rational::zero());
    let c = verify_resolution(&p, &unsplit).unwrap();
    assert!(c.linear && c.complex && c.exact && !c.split);
    assert!(verify_resolution(&p, &res).unwrap().ok());
}

#[test]
fn wrong_algebra_and_budget_errors() {
    let (d, p) = pair1();
    let k = d.hopf().trivial_module();
    let foreign = drinfeld_double_bk(1).unwrap().hopf().trivial_module();
    assert!(matches!(
        relative_ext_dims(&p, &k, &foreign, 1, ResolutionKind::Bar),
        Err(RelError::WrongAlgebra { .. })
    ));
    let spent = Budget::seconds(0.0);
    std::thread::sleep(std::time::Duration::from_millis(2));
    assert_eq!(
        relative_ext_dims_within(&p, &k, &k, 3, ResolutionKind::Bar, &spent),
        Err(RelError::Budget)
    );
    assert!(Budget::unlimited().check().is_ok());
}

#[test]
fn pairs_need_a_free_basis_inclusion() {
    let b1 = build_bk(1);
    let b2 = build_bk(2);
    let iota = bk_subalgebra_inclusion(&b1, &b2, 1, 1).unwrap();
    let p = ResolventPair::new(iota).unwrap();
    assert_eq!(p.big().dim(), 8);
    assert_eq!(p.small().dim(), 4);
    let k = b2.trivial_module();
    let res = iterated_cover_resolution(&p, &k, 2).unwrap();
    assert!(verify_resolution(&p, &res).unwrap().ok());
    let a = relative_ext_dims(&p, &k, &k, 2, ResolutionKind::Bar).unwrap();
    let b = relative_ext_dims(&p, &k, &k, 2, ResolutionKind::IteratedCover).unwrap();
    assert_eq!(a, b);
    assert_eq!(ext_via_hom_complex(&res, &k).unwrap(), a[..2].to_vec());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    /// Ext is additive in the first slot and independent of the resolution.
    #[test]
    fn ext_is_additive(copies in 1usize..4, induced in any::<bool>()) {
        let (d, p) = pair1();
        let k = d.hopf().trivial_module();
        let unit = if induced { p.comonad(&k).unwrap() } else { k.clone() };
        let v = (1..copies).fold(unit.clone(), |acc, _| acc.direct_sum(&unit).unwrap());
        let one = relative_ext_dims(&p, &unit, &k, 2, ResolutionKind::IteratedCover).unwrap();
        let many = relative_ext_dims(&p, &v, &k, 2, ResolutionKind::IteratedCover).unwrap();
        prop_assert_eq!(many.clone(), one.iter().map(|e| e * copies).collect::<Vec<_>>());
        prop_assert_eq!(relative_ext_dims(&p, &v, &k, 2, ResolutionKind::Bar).unwrap(), many);
    }
}
