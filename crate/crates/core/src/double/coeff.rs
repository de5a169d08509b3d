use std::sync::Arc;

use crate::algcore::{AlgError, Algebra, AlgebraMap, ModuleRep};
use crate::exactlin::{kernel_of_rows, SparseMatrix, SparseVec};
use crate::hopfcore::{verify_hopf_map, HopfAlgebra, HopfError};
use crate::rmatrix::RMatrix;

use super::{ell_minus_matrix, ell_plus_matrix, DrinfeldDouble};

/// Which construction produced a coefficient module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    TensorProduct,
    Restriction,
}

/// A coefficient module together with its embedding into `H*` (dual-basis
/// coordinates, one column per module basis vector).
#[derive(Debug, Clone)]
pub struct CoefficientModule {
    pub module: ModuleRep,
    pub provenance: Provenance,
    pub embedding: SparseMatrix,
}

/// Matrix of `ψ ↦ ψ ◁ k` on `H*`, where `(ψ ◁ k)(x) = ψ(k x)`.
fn right_coregular_matrix(h: &HopfAlgebra, k: &SparseVec) -> SparseMatrix {
    h.algebra().left_mult_matrix(k).transpose()
}

/// Matrix of `ψ ↦ k ▷ ψ` on `H*`, where `(k ▷ ψ)(x) = ψ(x k)`.
fn left_coregular_matrix(h: &HopfAlgebra, k: &SparseVec) -> SparseMatrix {
    h.algebra().right_mult_matrix(k).transpose()
}

/// `H*` as a module over `D(H) ⊗ D(H)`:
/// `(x ⊗ 1)·ψ = ψ ◁ S(L⁺(x))` and `(1 ⊗ y)·ψ = L⁻(y) ▷ ψ`, where `L^±` are
/// the extensions of `ℓ^±` to `D(H)`. `dd` must be `tensor_algebra(D, D)`.
pub fn coeff_tensor_product(d: &DrinfeldDouble, dd: &Arc<Algebra>, r: &RMatrix) -> Result<CoefficientModule, HopfError> {
    let Some((a, b)) = dd.factors() else {
        return Err(AlgError::Shape("expected D(H) ⊗ D(H)".into()).into());
    };
    if !Arc::ptr_eq(a, d.algebra()) || !Arc::ptr_eq(b, d.algebra()) {
        return Err(AlgError::AlgebraMismatch(dd.name().into(), d.algebra().name().into()).into());
    }
    let h = d.base();
    let lp = ell_plus_matrix(d, r)?;
    let lm = ell_minus_matrix(d, r)?;
    let gens = d.algebra().generators();
    let mats: Vec<SparseMatrix> = gens
        .iter()
        .map(|x| right_coregular_matrix(h, &h.apply_antipode(&lp.apply(x))))
        .chain(gens.iter().map(|y| left_coregular_matrix(h, &lm.apply(y))))
        .collect();
    let module = ModuleRep::new(dd.clone(), h.dim(), mats)?;
    Ok(CoefficientModule { module, provenance: Provenance::TensorProduct, embedding: SparseMatrix::identity(h.dim()) })
}

/// How a dual element `φ` acts on `f ∈ H*` in the restriction module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoregularRule {
    /// `⟨φ·f, x⟩ = φ(S(x⁽¹⁾) x⁽³⁾) f(x⁽²⁾)`.
    AntipodeFirst,
    /// `⟨φ·f, x⟩ = φ(x⁽³⁾ S(x⁽¹⁾)) f(x⁽²⁾)`.
    AntipodeLast,
}

fn dual_action_matrix(h: &HopfAlgebra, phi: &SparseVec, rule: CoregularRule) -> SparseMatrix {
    let n = h.dim();
    let mut trip = Vec::new();
    for i in 0..n {
        let d2 = h.iterated_coproduct_of(&SparseVec::unit(i), 3);
        for (idx, c) in d2.terms() {
            let (p, q, r) = (idx[0], idx[1], idx[2]);
            let sp = h.apply_antipode(&SparseVec::unit(p));
            let er = SparseVec::unit(r);
            let prod = match rule {
                CoregularRule::AntipodeFirst => h.mul(&sp, &er),
                CoregularRule::AntipodeLast => h.mul(&er, &sp),
            };
            let v = prod.dot(phi);
            if !v.is_zero() {
                trip.push((i, q, c * &v));
            }
        }
    }
    SparseMatrix::from_triplets(n, n, trip)
}

/// `Hom_K(H, 𝕜) = {f ∈ H* : f ◁ ι(k) = ε(k) f}` as a `D(H)`-module with
/// `h·f = h ▷ f` and the dual part acting by [`CoregularRule::AntipodeFirst`].
pub fn coeff_restriction(d: &DrinfeldDouble, k: &HopfAlgebra, iota: &AlgebraMap) -> Result<CoefficientModule, HopfError> {
    coeff_restriction_with(d, k, iota, CoregularRule::AntipodeFirst)
}

/// [`coeff_restriction`] with an explicit rule for the dual action.
pub fn coeff_restriction_with(
    d: &DrinfeldDouble,
    k: &HopfAlgebra,
    iota: &AlgebraMap,
    rule: CoregularRule,
) -> Result<CoefficientModule, HopfError> {
    let h = d.base();
    if let Some(v) = verify_hopf_map(k, h, iota).first() {
        return Err(HopfError::Invalid(format!("inclusion is not a Hopf map: {v}")));
    }
    let n = h.dim();
    let mut rows = Vec::new();
    for g in k.algebra().generators() {
        let m = right_coregular_matrix(h, &iota.apply(g)).sub(&SparseMatrix::scalar(n, &k.counit(g)));
        rows.extend(m.row_vectors().into_iter().filter(|r| !r.is_zero()));
    }
    let basis = SparseMatrix::from_columns(n, kernel_of_rows(n, &rows));
    let full: Vec<SparseMatrix> = d
        .dual_op()
        .algebra()
        .generators()
        .iter()
        .map(|phi| dual_action_matrix(h, phi, rule))
        .chain(h.algebra().generators().iter().map(|x| left_coregular_matrix(h, x)))
        .collect();
    let ambient = ModuleRep::new_unchecked(d.algebra().clone(), n, full)?;
    let module = ambient.submodule(&basis)?;
    module.verify()?;
    Ok(CoefficientModule { module, provenance: Provenance::Restriction, embedding: basis })
}

/// How a module over `H` becomes a `D(H)`-module through `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterVariant {
    /// `(α a)·x = ℓ⁺(α) a · x`.
    Braiding,
    /// `(β b)·x = ℓ⁻(β) b · x`.
    InverseBraiding,
    /// On `M*`: `⟨(α a)·f, x⟩ = ⟨f, S(ℓ⁺(α) a) x⟩`.
    DualBraiding,
}

/// Extends an `H`-module to `D(H)` along `ℓ^±`; the module axioms are checked.
pub fn center_module_from_rmatrix(
    d: &DrinfeldDouble,
    r: &RMatrix,
    m: &ModuleRep,
    variant: CenterVariant,
) -> Result<ModuleRep, HopfError> {
    if !Arc::ptr_eq(m.algebra(), d.base().algebra()) {
        return Err(AlgError::AlgebraMismatch(m.algebra().name().into(), d.base().name().into()).into());
    }
    let h = d.base();
    let gens = d.algebra().generators();
    let mats: Vec<SparseMatrix> = match variant {
        CenterVariant::Braiding => {
            let l = ell_plus_matrix(d, r)?;
            gens.iter().map(|x| m.act(&l.apply(x))).collect()
        }
        CenterVariant::InverseBraiding => {
            let l = ell_minus_matrix(d, r)?;
            gens.iter().map(|x| m.act(&l.apply(x))).collect()
        }
        CenterVariant::DualBraiding => {
            let l = ell_plus_matrix(d, r)?;
            gens.iter().map(|x| m.act(&h.apply_antipode(&l.apply(x))).transpose()).collect()
        }
    };
    Ok(ModuleRep::new(d.algebra().clone(), m.dim(), mats)?)
}
