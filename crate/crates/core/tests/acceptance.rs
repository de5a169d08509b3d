//! The fifteen acceptance criteria, each printing one PASS/FAIL line.
//! All comparisons are exact.

use std::io::Write;

use hopfdy::double::drinfeld_double_bk;
use hopfdy::dycomplex::{cocycle_from_tangent, decompose_h2_tensor, DYComplex};
use hopfdy::exactlin::{kernel_basis, rank_of_vectors, Rational, SparseVec, TensorElement};
use hopfdy::hopfcore::{bk_index, bk_subalgebra_inclusion, build_bk, build_cyclic, dual_hopf, tensor_hopf, HopfAlgebra};
use hopfdy::relext::*;
use hopfdy::rmatrix::{bk_r0, bk_r_lambda, check_rmatrix, tangent_space, trivial_r, RMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Writes past the test harness capture so the verdicts show up in plain
/// `cargo test` output, then fails the test on FAIL.
fn verdict(n: usize, what: &str, failures: &[String]) {
    let line = if failures.is_empty() {
        format!("acceptance criterion {n:>2}: PASS  {what}\n")
    } else {
        format!("acceptance criterion {n:>2}: FAIL  {what}: {}\n", failures.join("; "))
    };
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
    assert!(failures.is_empty(), "{line}");
}

fn expect<T: PartialEq + std::fmt::Debug>(fails: &mut Vec<String>, label: &str, got: T, want: T) {
    if got != want {
        fails.push(format!("{label}: got {got:?}, want {want:?}"));
    }
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn r0_matrix(h: &HopfAlgebra, k: usize) -> RMatrix {
    RMatrix::new(h, bk_r0(k)).unwrap()
}

fn span_equal(a: &[TensorElement], b: &[TensorElement], width: usize) -> bool {
    let va: Vec<SparseVec> = a.iter().map(|t| t.coeffs().clone()).collect();
    let vb: Vec<SparseVec> = b.iter().map(|t| t.coeffs().clone()).collect();
    let both: Vec<SparseVec> = va.iter().chain(&vb).cloned().collect();
    let r = rank_of_vectors(width, &both);
    r == rank_of_vectors(width, &va) && r == rank_of_vectors(width, &vb)
}

/// `R₀ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)`, written out by hand.
fn r0_by_hand(k: usize) -> TensorElement {
    let (one, g) = (bk_index(k, &[], false), bk_index(k, &[], true));
    let half = Rational::new(1, 2);
    TensorElement::from_terms(
        1 << (k + 1),
        2,
        [(vec![one, one], half.clone()), (vec![one, g], half.clone()), (vec![g, one], half.clone()), (vec![g, g], -half)],
    )
}

fn h2_dim(c: &DYComplex) -> usize {
    c.cohomology_dim(2).unwrap()
}

#[test]
fn criterion_01_axiom_suite() {
    let mut fails = Vec::new();
    let mut algebras: Vec<HopfAlgebra> = Vec::new();
    for n in 1..=4 {
        algebras.push(build_cyclic(n));
    }
    for k in 1..=3 {
        algebras.push(build_bk(k));
    }
    let duals: Vec<HopfAlgebra> = algebras.iter().map(|h| dual_hopf(h, false).unwrap()).collect();
    algebras.extend(duals);
    algebras.push(tensor_hopf(&build_bk(1), &build_bk(1)).unwrap());
    for k in 1..=2 {
        algebras.push(drinfeld_double_bk(k).unwrap().hopf().clone());
    }
    for h in &algebras {
        let v = h.verify();
        if !v.is_empty() {
            fails.push(format!("{}: {}", h.name(), v[0]));
        }
    }
    expect(&mut fails, "algebras checked", algebras.len(), 17);
    verdict(1, "Hopf axioms for cyclic:1..4, bk:1..3, their duals, B1⊗B1, D(B1), D(B2)", &fails);
}

#[test]
fn criterion_02_r0_is_triangular() {
    let mut fails = Vec::new();
    for k in 1..=3 {
        let h = build_bk(k);
        let r0 = bk_r0(k);
        expect(&mut fails, &format!("R0 for B{k}"), r0.clone(), r0_by_hand(k));
        let rep = check_rmatrix(&h, &r0).unwrap();
        expect(&mut fails, &format!("check_rmatrix B{k}"), rep.verified(), true);
        expect(&mut fails, &format!("R0² on B{k}"), h.tensor_mul(&r0, &r0), h.tensor_one(2));
    }
    verdict(2, "R0 is an R-matrix with R0² = 1⊗1 for k ≤ 3", &fails);
}

#[test]
fn criterion_03_tangent_space_at_r0() {
    let mut fails = Vec::new();
    for k in 1..=3 {
        let h = build_bk(k);
        let t = tangent_space(&h, &r0_matrix(&h, k)).unwrap();
        expect(&mut fails, &format!("dim T B{k}"), t.dim(), k * k);
        // R₀(x_i ⊗ x_j g), built independently of the library helper.
        let r0 = r0_by_hand(k);
        let n = h.dim();
        let paper: Vec<TensorElement> = (1..=k)
            .flat_map(|i| (1..=k).map(move |j| (i, j)))
            .map(|(i, j)| {
                let xjg = h.mul(&SparseVec::unit(bk_index(k, &[j], false)), &SparseVec::unit(bk_index(k, &[], true)));
                h.tensor_mul(&r0, &TensorElement::from_factors(n, &[SparseVec::unit(bk_index(k, &[i], false)), xjg]))
            })
            .collect();
        expect(&mut fails, &format!("span B{k}"), span_equal(&t.vectors, &paper, n * n), true);
    }
    verdict(3, "dim T_R0 RMat(B_k) = k² and spanned by R0(x_i⊗x_j g), k = 1,2,3", &fails);
}

#[test]
fn criterion_04_dy_of_identity() {
    let mut fails = Vec::new();
    for k in 1..=2 {
        expect(&mut fails, &format!("H² id B{k}"), h2_dim(&DYComplex::identity(&build_bk(k))), k * (k + 1) / 2);
    }
    verdict(4, "dim H²_DY(Id_{B_k}) = k(k+1)/2, k = 1,2", &fails);
}

#[test]
fn criterion_05_dy_of_tensor_functor() {
    let mut fails = Vec::new();
    for (k, n) in [(1, 2), (1, 3), (2, 2)] {
        let h = build_bk(k);
        let c = DYComplex::tensor_with_r(&h, r0_matrix(&h, k));
        let want = if n % 2 == 0 { binom(2 * k + n - 1, n) } else { 0 };
        expect(&mut fails, &format!("H^{n} tensor B{k}"), c.cohomology_dim(n).unwrap(), want);
    }
    expect(&mut fails, "B1 values", (binom(3, 2), 0), (3, 0));
    verdict(5, "H²(⊗, B1, R0) = 3, H³ = 0, H²(⊗, B2, R0) = 10", &fails);
}

#[test]
fn criterion_06_dimension_formula() {
    let mut fails = Vec::new();
    for k in 1..=2 {
        let h = build_bk(k);
        let r = r0_matrix(&h, k);
        let tangent = tangent_space(&h, &r).unwrap().dim();
        let tensor = h2_dim(&DYComplex::tensor_with_r(&h, r));
        let id = h2_dim(&DYComplex::identity(&h));
        expect(&mut fails, &format!("B{k}: H²(⊗) − 2 H²(id)"), tensor as i64 - 2 * id as i64, (k * k) as i64);
        expect(&mut fails, &format!("B{k}: tangent"), tangent, k * k);
    }
    verdict(6, "k² = dim H²(⊗) − 2 dim H²(Id), k = 1,2", &fails);
}

fn b2_over_b1() -> (hopfdy::double::DrinfeldDouble, HopfAlgebra, hopfdy::algcore::AlgebraMap) {
    let d = drinfeld_double_bk(2).unwrap();
    let b1 = build_bk(1);
    let iota = bk_subalgebra_inclusion(&b1, d.base(), 1, 1).unwrap();
    (d, b1, iota)
}

#[test]
fn criterion_07_restriction_functor() {
    let mut fails = Vec::new();
    let (d, b1, iota) = b2_over_b1();
    let c = DYComplex::restriction(d.base(), &b1, &iota).unwrap();
    for (n, want) in [(1, 0), (2, 3), (3, 0)] {
        expect(&mut fails, &format!("H^{n}"), c.cohomology_dim(n).unwrap(), want);
    }
    verdict(7, "dim Hⁿ_DY(Res: B2 ⊃ B1) = 0, 3, 0 for n = 1, 2, 3", &fails);
}

#[test]
fn criterion_08_adjunction_restriction_side() {
    let mut fails = Vec::new();
    let (d, b1, iota) = b2_over_b1();
    let c = DYComplex::restriction(d.base(), &b1, &iota).unwrap();
    let check = adjunction_crosscheck_restriction(&d, &b1, &iota, 3, ResolutionKind::Bar, &Budget::unlimited()).unwrap();
    for n in 1..=3 {
        expect(&mut fails, &format!("Ext^{n} vs H^{n}"), check.ext_dims[n], c.cohomology_dim(n).unwrap());
    }
    expect(&mut fails, "Ext via bar", check.ext_dims[1..].to_vec(), vec![0, 3, 0]);
    verdict(8, "Extⁿ_{D(B2),B2}(𝕜, Hom_{B1}(B2, 𝕜)) = 0, 3, 0 via the bar resolution", &fails);
}

#[test]
fn criterion_09_adjunction_braiding_side() {
    let mut fails = Vec::new();
    let d = drinfeld_double_bk(1).unwrap();
    let r = r0_matrix(d.base(), 1);
    let check = adjunction_crosscheck_tensor(&d, &r, 2, ResolutionKind::IteratedCover, &Budget::unlimited()).unwrap();
    expect(&mut fails, "Ext² over D(B1)⊗D(B1)", check.ext, 3);
    let pair = ResolventPair::double(&d).unwrap();
    let k = d.hopf().trivial_module();
    let single = relative_ext_dims(&pair, &k, &k, 2, ResolutionKind::IteratedCover).unwrap()[2];
    let tangent = tangent_space(d.base(), &r).unwrap().dim();
    expect(&mut fails, "3 − 2 Ext²(𝕜,𝕜)", check.ext as i64 - 2 * single as i64, 1);
    expect(&mut fails, "tangent", tangent, 1);
    verdict(9, "Ext² over (D(B1)⊗D(B1), B1⊗B1) with H* = 3, and 3 − 2 Ext²(𝕜,𝕜) = 1 = dim T", &fails);
}

#[test]
fn criterion_10_property_suite() {
    let mut fails = Vec::new();
    let h = build_bk(1);
    let z2 = build_cyclic(2);
    let iota = hopfdy::algcore::AlgebraMap::new(
        z2.algebra().clone(),
        h.algebra().clone(),
        hopfdy::exactlin::SparseMatrix::from_columns(4, vec![h.unit().clone(), SparseVec::unit(bk_index(1, &[], true))]),
    )
    .unwrap();
    let complexes = [
        ("identity", DYComplex::identity(&h)),
        ("tensor", DYComplex::tensor_with_r(&h, r0_matrix(&h, 1))),
        ("restriction", DYComplex::restriction(&h, &z2, &iota).unwrap()),
    ];
    for (name, c) in &complexes {
        for n in 0..=1 {
            for b in c.cochain_basis(n) {
                if !c.delta(n + 1, &c.delta(n, &b).unwrap()).unwrap().is_zero() {
                    fails.push(format!("{name}: δδ ≠ 0 on C^{n}"));
                }
            }
        }
        for n in 1..=3 {
            for b in c.cochain_basis(n) {
                let nb = c.normalize(n, &b).unwrap();
                if c.normalize(n, &nb).unwrap() != nb {
                    fails.push(format!("{name}: 𝒩 not idempotent in degree {n}"));
                }
            }
        }
        for b in c.cochain_basis(2) {
            let lhs = c.normalize(3, &c.delta(2, &b).unwrap()).unwrap();
            let rhs = c.delta(2, &c.normalize(2, &b).unwrap()).unwrap();
            if lhs != rhs {
                fails.push(format!("{name}: 𝒩δ ≠ δ𝒩"));
            }
        }
        let space = c.cochain_space(2);
        for z in kernel_basis(&c.differential(2).unwrap()).iter().map(|v| space.element(v)) {
            let nz = c.normalize(2, &z).unwrap();
            if !c.is_coboundary(2, &nz.sub(&z)).unwrap() {
                fails.push(format!("{name}: 𝒩z not cohomologous to z"));
            }
        }
        for n in 1..=2 {
            for u in c.cochain_basis(n) {
                for j in 0..=n {
                    for i in 0..=n + 1 {
                        let lhs = c.codegeneracy_at(n + 1, j, &c.coface(n, i, &u).unwrap()).unwrap();
                        let rhs = if i < j {
                            c.coface(n - 1, i, &c.codegeneracy_at(n, j - 1, &u).unwrap()).unwrap()
                        } else if i == j || i == j + 1 {
                            u.clone()
                        } else {
                            c.coface(n - 1, i - 1, &c.codegeneracy_at(n, j, &u).unwrap()).unwrap()
                        };
                        if lhs != rhs {
                            fails.push(format!("{name}: s_{j}∂_{i} in degree {n}"));
                        }
                    }
                }
            }
        }
    }
    fails.dedup();
    verdict(10, "δδ = 0, 𝒩 idempotent, 𝒩δ = δ𝒩, 𝒩z ~ z, cosimplicial identities on B1", &fails);
}

#[test]
fn criterion_11_tangent_roundtrip() {
    let mut fails = Vec::new();
    for k in 1..=2 {
        let h = build_bk(k);
        let r = r0_matrix(&h, k);
        let basis = tangent_space(&h, &r).unwrap();
        let c = DYComplex::tensor_with_r(&h, r);
        for t in &basis.vectors {
            let u = cocycle_from_tangent(&c, t).unwrap();
            expect(&mut fails, &format!("B{k}: cocycle"), c.is_cocycle(2, &u).unwrap(), true);
            expect(&mut fails, &format!("B{k}: T^u(T)"), decompose_h2_tensor(&c, &u).unwrap().t, t.clone());
        }
    }
    verdict(11, "cocycle_from_tangent gives cocycles with T^{u(T)} = T on B1, B2", &fails);
}

fn random_lambda(rng: &mut ChaCha8Rng, k: usize) -> Vec<Vec<Rational>> {
    (0..k).map(|_| (0..k).map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=7))).collect()).collect()
}

#[test]
fn criterion_12_family() {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for k in 1..=2 {
        let h = build_bk(k);
        let r0 = bk_r0(k);
        for _ in 0..3 {
            let la = random_lambda(&mut rng, k);
            let mu = random_lambda(&mut rng, k);
            let sum: Vec<Vec<Rational>> =
                la.iter().zip(&mu).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect();
            let rl = bk_r_lambda(&h, k, &la);
            expect(&mut fails, &format!("B{k}: R_λ verified"), check_rmatrix(&h, &rl).unwrap().verified(), true);
            let rhs = h.tensor_mul(&h.tensor_mul(&rl, &r0), &bk_r_lambda(&h, k, &mu));
            expect(&mut fails, &format!("B{k}: R_(λ+μ)"), bk_r_lambda(&h, k, &sum), rhs);
            if k == 1 {
                let t = tangent_space(&h, &RMatrix::new(&h, rl).unwrap()).unwrap();
                expect(&mut fails, "B1: dim T at R_λ", t.dim(), 1);
            }
        }
    }
    verdict(12, "R_λ are R-matrices, R_(λ+μ) = R_λ R0 R_μ, dim T_(R_λ) = 1 on B1", &fails);
}

#[test]
fn criterion_13_semisimple_sanity() {
    let mut fails = Vec::new();
    let h = build_cyclic(2);
    let r = RMatrix::new(&h, trivial_r(&h)).unwrap();
    expect(&mut fails, "tangent", tangent_space(&h, &r).unwrap().dim(), 0);
    expect(&mut fails, "H² id", h2_dim(&DYComplex::identity(&h)), 0);
    verdict(13, "cyclic:2 with R = 1⊗1: tangent space 0, H²(Id) = 0", &fails);
}

#[test]
fn criterion_14_kunneth() {
    let mut fails = Vec::new();
    let d = drinfeld_double_bk(1).unwrap();
    let p = ResolventPair::double(&d).unwrap();
    let k = d.hopf().trivial_module();
    let rep = kunneth_check(&p, &k, &k, &p, &k, &k, 2, &Budget::unlimited()).unwrap();
    // Σ Ext^i Ext^j from the single-factor dimensions, summed here.
    let e = relative_ext_dims(&p, &k, &k, 2, ResolutionKind::Bar).unwrap();
    let sum: usize = (0..=2).map(|i| e[i] * e[2 - i]).sum();
    expect(&mut fails, "direct", rep.direct, 2);
    expect(&mut fails, "Σ Ext^i Ext^j", sum, 2);
    expect(&mut fails, "library Künneth sum", rep.kunneth, sum);
    expect(&mut fails, "tensor resolution", (rep.via_tensor_resolution, rep.tensor_resolution_ok), (2, true));
    verdict(14, "Ext² over (D(B1)⊗D(B1), B1⊗B1) of 𝕜 = Σ Ext^i·Ext^j = 2", &fails);
}

#[test]
fn criterion_15_resolution_independence() {
    let mut fails = Vec::new();
    let budget = Budget::unlimited();
    let kinds = [ResolutionKind::Bar, ResolutionKind::IteratedCover];

    let (d2, b1, iota) = b2_over_b1();
    let pair = ResolventPair::double(&d2).unwrap();
    let w = hopfdy::double::coeff_restriction(&d2, &b1, &iota).unwrap().module;
    let v = d2.hopf().trivial_module();
    let dims: Vec<Vec<usize>> =
        kinds.iter().map(|&kind| relative_ext_dims_within(&pair, &v, &w, 3, kind, &budget).unwrap()).collect();
    expect(&mut fails, "restriction: bar vs cover", dims[0].clone(), dims[1].clone());
    for kind in kinds {
        let res = resolution_of_kind(&pair, &v, 2, kind, &budget).unwrap();
        let check = verify_resolution(&pair, &res).unwrap();
        expect(&mut fails, &format!("restriction: {kind} verified"), check.ok(), true);
    }

    let d1 = drinfeld_double_bk(1).unwrap();
    let r = r0_matrix(d1.base(), 1);
    let single = ResolventPair::double(&d1).unwrap();
    let tpair = ResolventPair::tensor(&single, &single).unwrap();
    let w = hopfdy::double::coeff_tensor_product(&d1, tpair.big(), &r).unwrap().module;
    let triv = d1.hopf().trivial_module();
    let v = triv.outer_tensor(&triv, tpair.big().clone()).unwrap();
    let dims: Vec<Vec<usize>> =
        kinds.iter().map(|&kind| relative_ext_dims_within(&tpair, &v, &w, 2, kind, &budget).unwrap()).collect();
    expect(&mut fails, "tensor: bar vs cover", dims[0].clone(), dims[1].clone());
    for kind in kinds {
        let res = resolution_of_kind(&tpair, &v, 1, kind, &budget).unwrap();
        let check = verify_resolution(&tpair, &res).unwrap();
        expect(&mut fails, &format!("tensor: {kind} verified"), check.ok(), true);
    }
    verdict(15, "bar and cover resolutions agree and verify on the criterion 8 and 9 instances", &fails);
}
