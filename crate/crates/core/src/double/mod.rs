//! The Drinfeld double `D(H) = (H*)^op ⊗ H` and its coefficient modules.

mod coeff;
mod ell;

use std::sync::Arc;

use crate::algcore::{Algebra, AlgebraMap};
use crate::exactlin::{Rational, SparseMatrix, SparseVec};
use crate::hopfcore::{bk_index, build_bk, dual_hopf, HopfAlgebra, HopfError};

pub use coeff::{
    center_module_from_rmatrix, coeff_restriction, coeff_restriction_with, coeff_tensor_product, CenterVariant,
    CoefficientModule, CoregularRule, Provenance,
};
pub use ell::{ell_minus, ell_minus_matrix, ell_plus, ell_plus_matrix};

/// `D(H)` on the basis `φ_a ⊗ h_b` at index `a · dim H + b`.
#[derive(Debug, Clone)]
pub struct DrinfeldDouble {
    base: HopfAlgebra,
    dual_op: HopfAlgebra,
    hopf: HopfAlgebra,
    embed_base: AlgebraMap,
    embed_dual: AlgebraMap,
}

impl DrinfeldDouble {
    /// The double of `H`, using the dual generators of `dual_op` when given.
    pub fn with_dual(base: HopfAlgebra, dual_op: HopfAlgebra) -> Result<Self, HopfError> {
        let n = base.dim();
        let nn = n * n;
        let mult = double_product(&base, &dual_op)?;
        let eps = base.counit_row();
        let one = base.unit();
        let unit = eps.kron(one, n);
        let labels =
            dual_op.algebra().labels().iter().flat_map(|a| base.algebra().labels().iter().map(move |b| format!("{a}{b}"))).collect();

        let embed_h_cols: Vec<SparseVec> = (0..n).map(|j| eps.kron(&SparseVec::unit(j), n)).collect();
        let embed_d_cols: Vec<SparseVec> = (0..n).map(|i| SparseVec::unit(i).kron(one, n)).collect();
        let gens: Vec<SparseVec> = dual_op
            .algebra()
            .generators()
            .iter()
            .map(|g| SparseVec::combination(g.iter().map(|(i, x)| (&embed_d_cols[*i], x.clone()))))
            .chain(
                base.algebra()
                    .generators()
                    .iter()
                    .map(|g| SparseVec::combination(g.iter().map(|(j, x)| (&embed_h_cols[*j], x.clone())))),
            )
            .collect();
        let alg = Arc::new(Algebra::new(format!("D({})", base.name()), labels, mult, unit)?.with_generators(gens));

        let embed_base = AlgebraMap::new_unchecked(base.algebra().clone(), alg.clone(), SparseMatrix::from_columns(nn, embed_h_cols))?;
        let embed_dual = AlgebraMap::new_unchecked(dual_op.algebra().clone(), alg.clone(), SparseMatrix::from_columns(nn, embed_d_cols))?;

        let mut comult = Vec::with_capacity(nn);
        for a in 0..n {
            for b in 0..n {
                let mut pairs = Vec::new();
                for (kd, x) in dual_op.comult_table()[a].iter() {
                    let (i, j) = (kd / n, kd % n);
                    for (kh, y) in base.comult_table()[b].iter() {
                        let (p, q) = (kh / n, kh % n);
                        pairs.push(((i * n + p) * nn + j * n + q, x * y));
                    }
                }
                comult.push(SparseVec::from_pairs(pairs));
            }
        }
        let counit = SparseVec::from_pairs(
            one.iter().flat_map(|(a, x)| eps.iter().map(move |(b, y)| (a * n + b, x * y))).collect(),
        );

        // S(φ h) = S(h) S(φ), with S restricted to each factor.
        let mut antipode = Vec::with_capacity(nn);
        for a in 0..n {
            let sphi = embed_dual.apply(&dual_op.apply_antipode(&SparseVec::unit(a)));
            for b in 0..n {
                let sh = embed_base.apply(&base.apply_antipode(&SparseVec::unit(b)));
                antipode.push(alg.mul(&sh, &sphi));
            }
        }
        let hopf = HopfAlgebra::new(alg, comult, counit, SparseMatrix::from_columns(nn, antipode))?;
        Ok(DrinfeldDouble { base, dual_op, hopf, embed_base, embed_dual })
    }

    pub fn base(&self) -> &HopfAlgebra {
        &self.base
    }

    /// `(H*)^op` as a Hopf algebra.
    pub fn dual_op(&self) -> &HopfAlgebra {
        &self.dual_op
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.hopf.algebra()
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// `H → D(H)`, `h ↦ ε ⊗ h`.
    pub fn embed_base(&self) -> &AlgebraMap {
        &self.embed_base
    }

    /// `(H*)^op → D(H)`, `φ ↦ φ ⊗ 1`.
    pub fn embed_dual(&self) -> &AlgebraMap {
        &self.embed_dual
    }

    /// Splits a basis index into `(dual index, base index)`.
    pub fn split(&self, idx: usize) -> (usize, usize) {
        let n = self.base.dim();
        (idx / n, idx % n)
    }
}

/// The double with the dual's generators chosen greedily.
pub fn drinfeld_double(h: &HopfAlgebra) -> Result<DrinfeldDouble, HopfError> {
    let dual = dual_hopf(h, true)?;
    DrinfeldDouble::with_dual(h.clone(), dual)
}

/// `D(B_k)` with dual generators `h = 1* − g*` and `y_i = x_i* − (x_i g)*`.
pub fn drinfeld_double_bk(k: usize) -> Result<DrinfeldDouble, HopfError> {
    let base = build_bk(k);
    let dual = dual_hopf(&base, true)?;
    let g = bk_index(k, &[], true);
    let mut gens = vec![SparseVec::unit(0).sub(&SparseVec::unit(g))];
    for i in 1..=k {
        let x = bk_index(k, &[i], false);
        gens.push(SparseVec::unit(x).sub(&SparseVec::unit(x | 1)));
    }
    DrinfeldDouble::with_dual(base, dual.with_generators(gens))
}

/// Structure constants of `D(H)` from the relation
/// `h φ = (h⁽³⁾ ▷ φ ◁ S(h⁽¹⁾)) h⁽²⁾`, where `(h ▷ φ)(x) = φ(x h)` and
/// `(φ ◁ k)(x) = φ(k x)`.
fn double_product(base: &HopfAlgebra, dual_op: &HopfAlgebra) -> Result<Vec<SparseVec>, HopfError> {
    let n = base.dim();
    let nn = n * n;
    let e = SparseVec::unit;
    // conj[p][r] column j = S(h_p) e_j h_r; ψ_j for target φ_c is its c-th entry.
    let mut conj: Vec<Vec<SparseMatrix>> = Vec::with_capacity(n);
    for p in 0..n {
        let sp = base.apply_antipode(&e(p));
        let mut row = Vec::with_capacity(n);
        for r in 0..n {
            let cols = (0..n).map(|j| base.mul(&base.mul(&sp, &e(j)), &e(r))).collect();
            row.push(SparseMatrix::from_columns(n, cols).transpose());
        }
        conj.push(row);
    }
    // straight[b][c] = h_b φ_c as a vector in D(H).
    let mut straight: Vec<Vec<SparseVec>> = vec![vec![SparseVec::new(); n]; n];
    for (b, row) in straight.iter_mut().enumerate() {
        let d2 = base.iterated_coproduct_of(&e(b), 3);
        for (idx, x) in d2.terms() {
            let (p, q, r) = (idx[0], idx[1], idx[2]);
            let m = &conj[p][r];
            for (c, slot) in row.iter_mut().enumerate() {
                let psi = m.col(c);
                let add = SparseVec::from_sorted_unchecked(psi.iter().map(|(j, y)| (j * n + q, y * x)).collect());
                *slot = slot.add(&add);
            }
        }
    }
    let dual_alg = dual_op.algebra();
    let base_alg = base.algebra();
    let mut mult = Vec::with_capacity(nn * nn);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let s = &straight[b][c];
                for d in 0..n {
                    let mut pairs: Vec<(usize, Rational)> = Vec::new();
                    for (k, x) in s.iter() {
                        let (j, q) = (k / n, k % n);
                        let left = dual_alg.product(a, j);
                        let right = base_alg.product(q, d);
                        for (i, y) in left.iter() {
                            let xy = x * y;
                            for (l, z) in right.iter() {
                                pairs.push((i * n + l, &xy * z));
                            }
                        }
                    }
                    mult.push(SparseVec::from_pairs(pairs));
                }
            }
        }
    }
    Ok(mult)
}
