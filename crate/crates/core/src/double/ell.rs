use crate::algcore::{AlgError, AlgebraMap};
use crate::exactlin::{SparseMatrix, SparseVec};
use crate::rmatrix::RMatrix;

use super::DrinfeldDouble;

/// `ℓ⁺(α) = (id ⊗ α)(R)`.
pub fn ell_plus(r: &RMatrix, alpha: &SparseVec) -> SparseVec {
    let t = r.element();
    SparseVec::from_pairs(
        t.terms()
            .filter_map(|(idx, c)| {
                let a = alpha.get(idx[1]);
                (!a.is_zero()).then(|| (idx[0], c * &a))
            })
            .collect(),
    )
}

/// `ℓ⁻(β) = (β ⊗ id)(R⁻¹)`.
pub fn ell_minus(r: &RMatrix, beta: &SparseVec) -> SparseVec {
    let t = r.inverse();
    SparseVec::from_pairs(
        t.terms()
            .filter_map(|(idx, c)| {
                let b = beta.get(idx[0]);
                (!b.is_zero()).then(|| (idx[1], c * &b))
            })
            .collect(),
    )
}

fn extend(d: &DrinfeldDouble, ell: impl Fn(&SparseVec) -> SparseVec) -> Result<AlgebraMap, AlgError> {
    let h = d.base();
    let n = h.dim();
    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        let la = ell(&SparseVec::unit(a));
        for b in 0..n {
            cols.push(h.mul(&la, &SparseVec::unit(b)));
        }
    }
    AlgebraMap::new(d.algebra().clone(), h.algebra().clone(), SparseMatrix::from_columns(n, cols))
}

/// `D(H) → H`, `α a ↦ ℓ⁺(α) a`, checked to be an algebra map.
pub fn ell_plus_matrix(d: &DrinfeldDouble, r: &RMatrix) -> Result<AlgebraMap, AlgError> {
    extend(d, |a| ell_plus(r, a))
}

/// `D(H) → H`, `β b ↦ ℓ⁻(β) b`, checked to be an algebra map.
pub fn ell_minus_matrix(d: &DrinfeldDouble, r: &RMatrix) -> Result<AlgebraMap, AlgError> {
    extend(d, |b| ell_minus(r, b))
}
