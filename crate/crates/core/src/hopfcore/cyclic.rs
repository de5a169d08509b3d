use std::sync::Arc;

use crate::algcore::Algebra;
use crate::exactlin::{Rational, SparseMatrix, SparseVec};

use super::HopfAlgebra;

/// The group algebra `ℚ[ℤ/n]` on the basis `g^0, …, g^{n−1}`.
pub fn build_cyclic(n: usize) -> HopfAlgebra {
    assert!(n >= 1, "cyclic group order must be positive");
    let mult = (0..n * n).map(|p| SparseVec::unit((p / n + p % n) % n)).collect();
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    let gens = if n > 1 { vec![SparseVec::unit(1)] } else { Vec::new() };
    let alg = Algebra::new(format!("Z{n}"), labels, mult, SparseVec::unit(0)).expect("valid shape").with_generators(gens);
    let comult = (0..n).map(|i| SparseVec::unit(i * n + i)).collect();
    let counit = SparseVec::from_pairs((0..n).map(|i| (i, Rational::one())).collect());
    let antipode = SparseMatrix::from_columns(n, (0..n).map(|i| SparseVec::unit((n - i) % n)).collect());
    HopfAlgebra::new(Arc::new(alg), comult, counit, antipode).expect("valid shape")
}
