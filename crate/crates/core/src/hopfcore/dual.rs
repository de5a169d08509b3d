use std::sync::Arc;

use crate::algcore::{Algebra, AlgebraMap};
use crate::exactlin::{SparseMatrix, SparseVec};

use super::{HopfAlgebra, HopfError};

/// The dual Hopf algebra on the dual basis `φ_i`.
///
/// `(φ_i φ_j)(e_k)` is the coefficient of `e_i ⊗ e_j` in `Δ(e_k)` (of
/// `e_j ⊗ e_i` when `opposite_product`), `Δ(φ_k) = Σ m_{ij}^k φ_i ⊗ φ_j`, the
/// unit is `ε` and the counit is evaluation at `1`. The antipode is `Sᵀ`, or
/// `(S⁻¹)ᵀ` for the opposite product.
pub fn dual_hopf(h: &HopfAlgebra, opposite_product: bool) -> Result<HopfAlgebra, HopfError> {
    let n = h.dim();
    let mut buckets: Vec<Vec<(usize, crate::exactlin::Rational)>> = vec![Vec::new(); n * n];
    for (k, d) in h.comult_table().iter().enumerate() {
        for (p, c) in d.iter() {
            let (i, j) = (p / n, p % n);
            let slot = if opposite_product { j * n + i } else { i * n + j };
            buckets[slot].push((k, c.clone()));
        }
    }
    let mult = buckets.into_iter().map(SparseVec::from_pairs).collect();
    let mut comult_pairs: Vec<Vec<(usize, crate::exactlin::Rational)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.algebra().product(i, j).iter() {
                comult_pairs[*k].push((i * n + j, c.clone()));
            }
        }
    }
    let comult = comult_pairs.into_iter().map(SparseVec::from_pairs).collect();
    let suffix = if opposite_product { "*op" } else { "*" };
    let labels = h.algebra().labels().iter().map(|l| format!("{l}*")).collect();
    let alg = Algebra::new(format!("{}{suffix}", h.name()), labels, mult, h.counit_row().clone())?;
    let antipode = if opposite_product { h.antipode_inverse()?.transpose() } else { h.antipode().transpose() };
    HopfAlgebra::new(Arc::new(alg), comult, h.unit().clone(), antipode)
}

/// The identification of the double dual with the original algebra: the
/// canonical pairing matrix, checked as an algebra map.
pub fn double_dual_pairing(h: &HopfAlgebra, hdd: &HopfAlgebra) -> Result<AlgebraMap, HopfError> {
    Ok(AlgebraMap::new(hdd.algebra().clone(), h.algebra().clone(), SparseMatrix::identity(h.dim()))?)
}
