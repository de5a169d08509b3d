use std::sync::Arc;

use hopfdy::algcore::Algebra;
use hopfdy::exactlin::{SparseMatrix, SparseVec};
use hopfdy::hopfcore::HopfAlgebra;

/// The same Hopf algebra with its basis reordered by `perm` (new index `i`
/// is old index `perm[i]`).
pub fn permuted(h: &HopfAlgebra, perm: &[usize]) -> HopfAlgebra {
    let n = h.dim();
    let mut inv = vec![0; n];
    for (i, p) in perm.iter().enumerate() {
        inv[*p] = i;
    }
    let re = |v: &SparseVec| v.map_indices(|i| inv[i]);
    let alg = h.algebra();
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mult.push(re(alg.product(perm[i], perm[j])));
        }
    }
    let labels = perm.iter().map(|p| alg.labels()[*p].clone()).collect();
    let new_alg = Arc::new(Algebra::new(format!("{}'", h.name()), labels, mult, re(alg.unit())).unwrap());
    let comult = perm.iter().map(|p| h.comult_table()[*p].map_indices(|k| inv[k / n] * n + inv[k % n])).collect();
    let counit = SparseVec::from_pairs(perm.iter().enumerate().map(|(i, p)| (i, h.counit_row().get(*p))).collect());
    let s = SparseMatrix::from_columns(n, perm.iter().map(|p| re(h.antipode().col(*p))).collect());
    let out = HopfAlgebra::new(new_alg, comult, counit, s).unwrap();
    assert!(out.verify().is_empty());
    out
}
