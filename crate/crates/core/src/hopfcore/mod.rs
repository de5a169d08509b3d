//! Hopf algebras by structure constants, tensor-slot calculus, duals and the
//! built-in catalog.

mod bk;
mod catalog;
mod cpm;
mod cyclic;
mod dual;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algcore::{tensor_algebra, AlgError, Algebra, AlgebraMap, ModuleRep, Violation};
use crate::exactlin::{inverse, LinAlgError, Rational, SparseMatrix, SparseVec, TensorElement};

pub use bk::{bk_generator, bk_index, bk_subalgebra_inclusion, build_bk};
pub use catalog::CatalogKey;
pub use cpm::build_c_pm;
pub use cyclic::build_cyclic;
pub use dual::{double_dual_pairing, dual_hopf};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error(transparent)]
    Algebra(#[from] AlgError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("Hopf axioms fail: {0}")]
    Invalid(String),
    #[error("bad catalog key: {0}")]
    BadKey(String),
}

/// A finite-dimensional Hopf algebra over ℚ.
///
/// `comult[i]` holds `Δ(e_i)` packed as `j * dim + k` for `e_j ⊗ e_k`.
#[derive(Clone)]
pub struct HopfAlgebra {
    algebra: Arc<Algebra>,
    comult: Vec<SparseVec>,
    counit: SparseVec,
    antipode: SparseMatrix,
    antipode_inv: Arc<OnceLock<Option<SparseMatrix>>>,
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra({}, dim {})", self.name(), self.dim())
    }
}

impl HopfAlgebra {
    /// Assembles a Hopf algebra after shape checks only; see [`HopfAlgebra::verify`].
    pub fn new(
        algebra: Arc<Algebra>,
        comult: Vec<SparseVec>,
        counit: SparseVec,
        antipode: SparseMatrix,
    ) -> Result<Self, HopfError> {
        let n = algebra.dim();
        if comult.len() != n {
            return Err(HopfError::Shape(format!("{} coproducts for dimension {n}", comult.len())));
        }
        if comult.iter().any(|c| c.max_index().is_some_and(|m| m >= n * n)) {
            return Err(HopfError::Shape("coproduct index out of range".into()));
        }
        if counit.max_index().is_some_and(|m| m >= n) {
            return Err(HopfError::Shape("counit index out of range".into()));
        }
        if antipode.nrows() != n || antipode.ncols() != n {
            return Err(HopfError::Shape("antipode must be square".into()));
        }
        Ok(HopfAlgebra { algebra, comult, counit, antipode, antipode_inv: Arc::new(OnceLock::new()) })
    }

    /// Builds and rejects unless every axiom holds.
    pub fn new_verified(
        algebra: Arc<Algebra>,
        comult: Vec<SparseVec>,
        counit: SparseVec,
        antipode: SparseMatrix,
    ) -> Result<Self, HopfError> {
        let h = Self::new(algebra, comult, counit, antipode)?;
        match h.verify().first() {
            None => Ok(h),
            Some(v) => Err(HopfError::Invalid(v.to_string())),
        }
    }

    /// Same Hopf structure with a different generating set for the algebra.
    pub fn with_generators(&self, gens: Vec<SparseVec>) -> Self {
        let alg = (*self.algebra).clone().with_generators(gens);
        HopfAlgebra { algebra: Arc::new(alg), ..self.clone() }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn name(&self) -> &str {
        self.algebra.name()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn unit(&self) -> &SparseVec {
        self.algebra.unit()
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.algebra.mul(a, b)
    }

    pub fn comult_table(&self) -> &[SparseVec] {
        &self.comult
    }

    pub fn counit_row(&self) -> &SparseVec {
        &self.counit
    }

    pub fn antipode(&self) -> &SparseMatrix {
        &self.antipode
    }

    /// `S⁻¹`, computed once by exact inversion.
    pub fn antipode_inverse(&self) -> Result<&SparseMatrix, HopfError> {
        self.antipode_inv.get_or_init(|| inverse(&self.antipode)).as_ref().ok_or(HopfError::SingularAntipode)
    }

    pub fn counit(&self, a: &SparseVec) -> Rational {
        a.dot(&self.counit)
    }

    pub fn apply_antipode(&self, a: &SparseVec) -> SparseVec {
        self.antipode.mul_vec(a)
    }

    /// `Δ(a)` as a degree-2 tensor.
    pub fn coproduct(&self, a: &SparseVec) -> TensorElement {
        let n = self.dim();
        TensorElement::from_vec(n, 2, SparseVec::combination(a.iter().map(|(i, x)| (&self.comult[*i], x.clone()))))
    }

    /// `Δ^{(m−1)}(a)` in `H^{⊗m}`; `m = 0` gives `ε(a)` and `m = 1` gives `a`.
    pub fn iterated_coproduct_of(&self, a: &SparseVec, m: usize) -> TensorElement {
        let n = self.dim();
        match m {
            0 => TensorElement::scalar(n, self.counit(a)),
            1 => TensorElement::from_vec(n, 1, a.clone()),
            _ => {
                let mut t = self.coproduct(a);
                for _ in 2..m {
                    t = self.delta_at(&t, 0).expect("slot 0 exists");
                }
                t
            }
        }
    }

    /// Applies `Δ` to one slot (0-based).
    pub fn delta_at(&self, u: &TensorElement, slot: usize) -> Result<TensorElement, HopfError> {
        Ok(u.map_slot(slot, 2, &|i| self.comult[i].clone())?)
    }

    /// Applies `Δ` `times` times to the same slot.
    pub fn iterated_coproduct(&self, u: &TensorElement, slot: usize, times: usize) -> Result<TensorElement, HopfError> {
        let mut t = u.clone();
        for _ in 0..times {
            t = self.delta_at(&t, slot)?;
        }
        Ok(t)
    }

    /// Contracts one slot with `ε`.
    pub fn apply_counit_at(&self, u: &TensorElement, slot: usize) -> Result<TensorElement, HopfError> {
        Ok(u.map_slot(slot, 0, &|i| {
            let c = self.counit.get(i);
            if c.is_zero() {
                SparseVec::new()
            } else {
                SparseVec::single(0, c)
            }
        })?)
    }

    /// Applies `S` in one slot.
    pub fn apply_antipode_at(&self, u: &TensorElement, slot: usize) -> Result<TensorElement, HopfError> {
        Ok(u.map_slot(slot, 1, &|i| self.antipode.col(i).clone())?)
    }

    /// Applies `S⁻¹` in one slot.
    pub fn apply_antipode_inv_at(&self, u: &TensorElement, slot: usize) -> Result<TensorElement, HopfError> {
        let inv = self.antipode_inverse()?;
        Ok(u.map_slot(slot, 1, &|i| inv.col(i).clone())?)
    }

    /// Slotwise product in `H^{⊗d}`.
    pub fn tensor_mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        a.mul(b, self.algebra.as_ref()).expect("tensor shapes agree")
    }

    /// `1^{⊗d}`.
    pub fn tensor_one(&self, d: usize) -> TensorElement {
        let u: Vec<SparseVec> = vec![self.unit().clone(); d];
        TensorElement::from_factors(self.dim(), &u)
    }

    /// `(h ▷ f)(h') = f(h' h)` in dual-basis coordinates.
    pub fn left_coregular(&self, h: &SparseVec, f: &SparseVec) -> SparseVec {
        let n = self.dim();
        SparseVec::from_pairs(
            (0..n).map(|j| (j, self.mul(&SparseVec::unit(j), h).dot(f))).filter(|(_, x)| !x.is_zero()).collect(),
        )
    }

    /// `(f ◁ h)(h') = f(h h')` in dual-basis coordinates.
    pub fn right_coregular(&self, f: &SparseVec, h: &SparseVec) -> SparseVec {
        let n = self.dim();
        SparseVec::from_pairs(
            (0..n).map(|j| (j, self.mul(h, &SparseVec::unit(j)).dot(f))).filter(|(_, x)| !x.is_zero()).collect(),
        )
    }

    /// `𝕜` through the counit.
    pub fn trivial_module(&self) -> ModuleRep {
        ModuleRep::from_character(self.algebra.clone(), &self.counit).expect("counit is a character")
    }

    /// Every violated bialgebra or antipode axiom, with a witness.
    pub fn verify(&self) -> Vec<Violation> {
        let mut out = self.algebra.verify();
        let n = self.dim();
        let v = |axiom: &str, w: String| Violation { axiom: axiom.into(), witness: w };
        let label = |i: usize| self.algebra.labels()[i].clone();
        let e = SparseVec::unit;
        let one = self.unit();

        if self.counit(one) != Rational::one() {
            out.push(v("counit unital", "1".into()));
        }
        if self.coproduct(one) != self.tensor_one(2) {
            out.push(v("coproduct unital", "1".into()));
        }
        let thirds: Vec<(String, SparseVec)> = if n <= 64 {
            (0..n).map(|j| (label(j), e(j))).collect()
        } else {
            self.algebra
                .generation()
                .map(|g| g.gens.iter().enumerate().map(|(k, x)| (format!("generator {k}"), x.clone())).collect())
                .unwrap_or_default()
        };
        for i in 0..n {
            let d = self.coproduct(&e(i));
            let l = self.delta_at(&d, 0).expect("degree 2");
            let r = self.delta_at(&d, 1).expect("degree 2");
            if l != r {
                out.push(v("coassociativity", label(i)));
            }
            let ei = TensorElement::from_vec(n, 1, e(i));
            if self.apply_counit_at(&d, 0).expect("degree 2") != ei || self.apply_counit_at(&d, 1).expect("degree 2") != ei {
                out.push(v("counit", label(i)));
            }
            let target = one.scale(&self.counit(&e(i)));
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (idx, c) in d.terms() {
                let (a, b) = (e(idx[0]), e(idx[1]));
                left = left.add_scaled(&self.mul(&self.apply_antipode(&a), &b), c);
                right = right.add_scaled(&self.mul(&a, &self.apply_antipode(&b)), c);
            }
            if left != target || right != target {
                out.push(v("antipode", label(i)));
            }
            for (lj, b) in &thirds {
                let ab = self.mul(&e(i), b);
                if self.coproduct(&ab) != self.tensor_mul(&d, &self.coproduct(b)) {
                    out.push(v("coproduct multiplicative", format!("({}, {lj})", label(i))));
                }
                if self.counit(&ab) != self.counit(&e(i)) * self.counit(b) {
                    out.push(v("counit multiplicative", format!("({}, {lj})", label(i))));
                }
            }
        }
        out
    }
}

/// Checks that an algebra map between Hopf algebras also preserves `Δ`, `ε` and `S`.
pub fn verify_hopf_map(src: &HopfAlgebra, tgt: &HopfAlgebra, map: &AlgebraMap) -> Vec<Violation> {
    let mut out = map.verify();
    let n = tgt.dim();
    let m = &map.matrix;
    for i in 0..src.dim() {
        let e = SparseVec::unit(i);
        let img = map.apply(&e);
        let label = src.algebra().labels()[i].clone();
        let ns = src.dim();
        let mut pushed = SparseVec::new();
        for (k, c) in src.comult_table()[i].iter() {
            pushed = pushed.add_scaled(&m.col(k / ns).kron(m.col(k % ns), n), c);
        }
        let pushed = TensorElement::from_vec(n, 2, pushed);
        if tgt.coproduct(&img) != pushed {
            out.push(Violation { axiom: "coproduct".into(), witness: label.clone() });
        }
        if tgt.counit(&img) != src.counit(&e) {
            out.push(Violation { axiom: "counit".into(), witness: label.clone() });
        }
        if tgt.apply_antipode(&img) != map.apply(&src.apply_antipode(&e)) {
            out.push(Violation { axiom: "antipode".into(), witness: label });
        }
    }
    out
}

/// `H ⊗ K` with the componentwise Hopf structure.
pub fn tensor_hopf(a: &HopfAlgebra, b: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    let alg = Arc::new(tensor_algebra(a.algebra(), b.algebra())?);
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut comult = Vec::with_capacity(n);
    for i in 0..na {
        for j in 0..nb {
            let mut pairs = Vec::new();
            for (ka, x) in a.comult[i].iter() {
                let (a1, a2) = (ka / na, ka % na);
                for (kb, y) in b.comult[j].iter() {
                    let (b1, b2) = (kb / nb, kb % nb);
                    pairs.push(((a1 * nb + b1) * n + a2 * nb + b2, x * y));
                }
            }
            comult.push(SparseVec::from_pairs(pairs));
        }
    }
    let counit = a.counit.kron(&b.counit, nb);
    let antipode = a.antipode.kron(&b.antipode);
    HopfAlgebra::new(alg, comult, counit, antipode)
}
