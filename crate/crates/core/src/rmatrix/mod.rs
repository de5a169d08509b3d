//! R-matrix axioms, tangent spaces of the R-matrix variety, and the `B_k` families.

use std::fmt;

use crate::algcore::tensor_algebra;
use crate::exactlin::{kernel_basis, solve, span_equal, Rational, SparseMatrix, SparseVec, TensorElement};
use crate::hopfcore::{bk_generator, HopfAlgebra};

/// Outcome of one axiom family.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Check {
    pub passed: bool,
    pub witnesses: Vec<String>,
}

impl Check {
    fn from_witnesses(witnesses: Vec<String>) -> Self {
        Check { passed: witnesses.is_empty(), witnesses }
    }
}

/// Results of [`check_rmatrix`].
#[derive(Debug, Clone)]
pub struct RMatrixReport {
    pub quasi_cocommutativity: Check,
    pub hexagon1: Check,
    pub hexagon2: Check,
    pub counit_normalization: Check,
    pub inverse: Option<TensorElement>,
}

impl RMatrixReport {
    pub fn verified(&self) -> bool {
        self.quasi_cocommutativity.passed
            && self.hexagon1.passed
            && self.hexagon2.passed
            && self.counit_normalization.passed
            && self.inverse.is_some()
    }
}

impl fmt::Display for RMatrixReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |name: &str, c: &Check| {
            if c.passed {
                format!("{name}: ok")
            } else {
                format!("{name}: fails at {}", c.witnesses.join(", "))
            }
        };
        writeln!(f, "{}", line("quasi-cocommutativity", &self.quasi_cocommutativity))?;
        writeln!(f, "{}", line("hexagon (Δ⊗id)", &self.hexagon1))?;
        writeln!(f, "{}", line("hexagon (id⊗Δ)", &self.hexagon2))?;
        writeln!(f, "{}", line("counit normalization", &self.counit_normalization))?;
        write!(f, "inverse: {}", if self.inverse.is_some() { "found" } else { "missing" })
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum RMatrixError {
    #[error("not an R-matrix:\n{0}")]
    NotVerified(Box<RMatrixReport>),
    #[error("tensor has degree {0}, expected 2")]
    Degree(usize),
    #[error("tangent vector violates the counit condition")]
    CounitCondition,
}

/// An R-matrix that passed every check, together with its inverse.
#[derive(Debug, Clone)]
pub struct RMatrix {
    r: TensorElement,
    inverse: TensorElement,
}

impl RMatrix {
    pub fn new(h: &HopfAlgebra, r: TensorElement) -> Result<Self, RMatrixError> {
        let report = check_rmatrix(h, &r)?;
        if !report.verified() {
            return Err(RMatrixError::NotVerified(Box::new(report)));
        }
        let inverse = report.inverse.expect("verified reports carry the inverse");
        Ok(RMatrix { r, inverse })
    }

    pub fn element(&self) -> &TensorElement {
        &self.r
    }

    pub fn inverse(&self) -> &TensorElement {
        &self.inverse
    }
}

fn slot_swap(t: &TensorElement) -> TensorElement {
    t.permute_slots(&[1, 0]).expect("degree 2")
}

/// `R₁₂`, `R₁₃`, `R₂₃` inside `H^{⊗3}`.
pub fn leg_embeddings(h: &HopfAlgebra, r: &TensorElement) -> (TensorElement, TensorElement, TensorElement) {
    let one = TensorElement::from_vec(h.dim(), 1, h.unit().clone());
    let r12 = r.outer(&one);
    let r13 = r12.permute_slots(&[0, 2, 1]).expect("degree 3");
    let r23 = one.outer(r);
    (r12, r13, r23)
}

/// Checks quasi-cocommutativity on every basis element, both hexagon
/// identities, counit normalization, and finds `R⁻¹` (first as `(S ⊗ id)(R)`,
/// otherwise by a linear solve).
pub fn check_rmatrix(h: &HopfAlgebra, r: &TensorElement) -> Result<RMatrixReport, RMatrixError> {
    if r.degree() != 2 {
        return Err(RMatrixError::Degree(r.degree()));
    }
    let n = h.dim();
    let mut qc = Vec::new();
    for i in 0..n {
        let d = h.coproduct(&SparseVec::unit(i));
        if h.tensor_mul(r, &d) != h.tensor_mul(&slot_swap(&d), r) {
            qc.push(h.algebra().labels()[i].clone());
        }
    }
    let (r12, r13, r23) = leg_embeddings(h, r);
    let hex1 = h.delta_at(r, 0).expect("degree 2") == h.tensor_mul(&r13, &r23);
    let hex2 = h.delta_at(r, 1).expect("degree 2") == h.tensor_mul(&r13, &r12);
    let one = TensorElement::from_vec(n, 1, h.unit().clone());
    let mut cn = Vec::new();
    if h.apply_counit_at(r, 0).expect("degree 2") != one {
        cn.push("(ε⊗id)(R)".to_string());
    }
    if h.apply_counit_at(r, 1).expect("degree 2") != one {
        cn.push("(id⊗ε)(R)".to_string());
    }
    Ok(RMatrixReport {
        quasi_cocommutativity: Check::from_witnesses(qc),
        hexagon1: Check::from_witnesses(if hex1 { vec![] } else { vec!["(Δ⊗id)(R) ≠ R₁₃R₂₃".into()] }),
        hexagon2: Check::from_witnesses(if hex2 { vec![] } else { vec!["(id⊗Δ)(R) ≠ R₁₃R₁₂".into()] }),
        counit_normalization: Check::from_witnesses(cn),
        inverse: find_inverse(h, r),
    })
}

fn find_inverse(h: &HopfAlgebra, r: &TensorElement) -> Option<TensorElement> {
    let one = h.tensor_one(2);
    let is_inverse = |x: &TensorElement| h.tensor_mul(r, x) == one && h.tensor_mul(x, r) == one;
    let cand = h.apply_antipode_at(r, 0).expect("degree 2");
    if is_inverse(&cand) {
        return Some(cand);
    }
    let hh = tensor_algebra(h.algebra(), h.algebra()).ok()?;
    let left = hh.left_mult_matrix(r.coeffs());
    let rhs = SparseMatrix::from_columns(left.nrows(), vec![one.coeffs().clone()]);
    let x = solve(&left, &rhs)?;
    let cand = TensorElement::from_vec(h.dim(), 2, x.col(0).clone());
    is_inverse(&cand).then_some(cand)
}

/// A basis of the tangent space at `R`.
#[derive(Debug, Clone)]
pub struct TangentBasis {
    pub base: TensorElement,
    pub vectors: Vec<TensorElement>,
}

impl TangentBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// The linearized R-matrix conditions at `R`, as a map from `H ⊗ H` to
/// `(H ⊗ H)^{dim H} ⊕ H^{⊗3} ⊕ H^{⊗3}`, evaluated on a tensor `T`.
fn tangent_conditions(h: &HopfAlgebra, r: &TensorElement, t: &TensorElement) -> SparseVec {
    let n = h.dim();
    let n2 = n * n;
    let n3 = n2 * n;
    let mut pairs: Vec<(usize, Rational)> = Vec::new();
    for i in 0..n {
        let d = h.coproduct(&SparseVec::unit(i));
        let v = h.tensor_mul(t, &d).sub(&h.tensor_mul(&slot_swap(&d), t));
        pairs.extend(v.coeffs().iter().map(|(k, x)| (i * n2 + k, x.clone())));
    }
    let (r12, r13, r23) = leg_embeddings(h, r);
    let (t12, t13, t23) = leg_embeddings(h, t);
    let off = n * n2;
    let c1 = h.delta_at(t, 0).expect("degree 2").sub(&h.tensor_mul(&t13, &r23)).sub(&h.tensor_mul(&r13, &t23));
    pairs.extend(c1.coeffs().iter().map(|(k, x)| (off + k, x.clone())));
    let c2 = h.delta_at(t, 1).expect("degree 2").sub(&h.tensor_mul(&t13, &r12)).sub(&h.tensor_mul(&r13, &t12));
    pairs.extend(c2.coeffs().iter().map(|(k, x)| (off + n3 + k, x.clone())));
    SparseVec::from_pairs(pairs)
}

/// Whether `T` satisfies every linearized condition at `R`.
pub fn is_tangent(h: &HopfAlgebra, r: &TensorElement, t: &TensorElement) -> bool {
    tangent_conditions(h, r, t).is_zero()
}

/// Exact basis of the tangent space at a verified `R`: one kernel computation
/// over the stacked conditions. Also checks `(ε⊗id)(T) = (id⊗ε)(T) = 0`.
pub fn tangent_space(h: &HopfAlgebra, r: &RMatrix) -> Result<TangentBasis, RMatrixError> {
    let n = h.dim();
    let n2 = n * n;
    let rows = n * n2 + 2 * n2 * n;
    let cols = (0..n2).map(|k| tangent_conditions(h, r.element(), &TensorElement::from_vec(n, 2, SparseVec::unit(k)))).collect();
    let m = SparseMatrix::from_columns(rows, cols);
    let vectors: Vec<TensorElement> = kernel_basis(&m).into_iter().map(|v| TensorElement::from_vec(n, 2, v)).collect();
    for t in &vectors {
        if !h.apply_counit_at(t, 0).expect("degree 2").is_zero() || !h.apply_counit_at(t, 1).expect("degree 2").is_zero() {
            return Err(RMatrixError::CounitCondition);
        }
    }
    Ok(TangentBasis { base: r.element().clone(), vectors })
}

/// `R₀ = e₊ ⊗ 1 + e₋ ⊗ g` with `e_± = (1 ± g)/2`.
pub fn bk_r0(k: usize) -> TensorElement {
    let n = 1usize << (k + 1);
    let half = Rational::new(1, 2);
    let one = SparseVec::unit(0);
    let g = bk_generator(k, 0);
    let ep = one.add(&g).scale(&half);
    let em = one.sub(&g).scale(&half);
    TensorElement::from_factors(n, &[ep, one]).add(&TensorElement::from_factors(n, &[em, g]))
}

/// `R₀ ∏_{i,j} (1 ⊗ 1 + λ_{ij} x_i ⊗ x_j g)`, factors taken in row-major order.
pub fn bk_r_lambda(h: &HopfAlgebra, k: usize, lambda: &[Vec<Rational>]) -> TensorElement {
    assert!(lambda.len() == k && lambda.iter().all(|r| r.len() == k), "λ must be k×k");
    let n = h.dim();
    let g = bk_generator(k, 0);
    let mut acc = bk_r0(k);
    for (i, row) in lambda.iter().enumerate() {
        for (j, l) in row.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let xi = bk_generator(k, i + 1);
            let xjg = h.mul(&bk_generator(k, j + 1), &g);
            let f = h.tensor_one(2).add(&TensorElement::from_factors(n, &[xi, xjg]).scale(l));
            acc = h.tensor_mul(&acc, &f);
        }
    }
    acc
}

/// `{R₀ (x_i ⊗ x_j g)}` for `1 ≤ i, j ≤ k`.
pub fn bk_standard_tangent_basis(h: &HopfAlgebra, k: usize) -> Vec<TensorElement> {
    let n = h.dim();
    let r0 = bk_r0(k);
    let g = bk_generator(k, 0);
    let mut out = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            let t = TensorElement::from_factors(n, &[bk_generator(k, i), h.mul(&bk_generator(k, j), &g)]);
            out.push(h.tensor_mul(&r0, &t));
        }
    }
    out
}

/// Whether the computed tangent basis spans the same space as `{R₀(x_i ⊗ x_j g)}`.
pub fn matches_standard_basis(h: &HopfAlgebra, k: usize, basis: &TangentBasis) -> bool {
    let n2 = h.dim() * h.dim();
    let a: Vec<SparseVec> = basis.vectors.iter().map(|t| t.coeffs().clone()).collect();
    let b: Vec<SparseVec> = bk_standard_tangent_basis(h, k).iter().map(|t| t.coeffs().clone()).collect();
    span_equal(&a, &b, n2).unwrap_or(false)
}

/// `1 ⊗ 1` as an R-matrix candidate.
pub fn trivial_r(h: &HopfAlgebra) -> TensorElement {
    h.tensor_one(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{build_bk, build_cyclic};

    #[test]
    fn r0_coordinates_k1() {
        let h = Rational::new(1, 2);
        let expected = TensorElement::from_terms(
            4,
            2,
            [(vec![0, 0], h.clone()), (vec![1, 0], h.clone()), (vec![0, 1], h.clone()), (vec![1, 1], -h)],
        );
        assert_eq!(bk_r0(1), expected);
        assert_eq!(slot_swap(&bk_r0(2)), bk_r0(2));
    }

    #[test]
    fn trivial_r_fails_for_sweedler() {
        let h = build_bk(1);
        let rep = check_rmatrix(&h, &trivial_r(&h)).unwrap();
        assert!(!rep.quasi_cocommutativity.passed);
        assert!(rep.quasi_cocommutativity.witnesses.contains(&"x1".to_string()));
        assert!(!rep.verified());
    }

    #[test]
    fn trivial_r_on_group_algebra() {
        let h = build_cyclic(2);
        let r = RMatrix::new(&h, trivial_r(&h)).unwrap();
        assert_eq!(tangent_space(&h, &r).unwrap().dim(), 0);
    }

    #[test]
    fn r0_is_triangular() {
        let h = build_bk(1);
        let r0 = bk_r0(1);
        let r = RMatrix::new(&h, r0.clone()).unwrap();
        assert_eq!(h.tensor_mul(&r0, &r0), h.tensor_one(2));
        assert_eq!(r.inverse(), &r0);
    }
}
