use crate::algcore::ModuleRep;
use crate::double::DrinfeldDouble;
use crate::exactlin::{Echelon, Rational, SparseMatrix, SparseVec};

use super::{bk_index, HopfError};

/// The `D(B_k)`-module `𝒞_± = B_k^{*op} f_±` with `f_± = (1 ± h)/2`, where
/// `h = 1* − g*`: the dual part acts by left multiplication, `g` acts as `h`
/// and every `x_i` acts by zero. The double must use the generator order
/// dual generators, then `g, x_1, …, x_k`.
pub fn build_c_pm(d: &DrinfeldDouble, k: usize, plus: bool) -> Result<ModuleRep, HopfError> {
    let dual = d.dual_op();
    let n = dual.dim();
    if n != 1 << (k + 1) {
        return Err(HopfError::Shape(format!("double is not over B_{k}")));
    }
    let h = SparseVec::unit(0).sub(&SparseVec::unit(bk_index(k, &[], true)));
    let sign = if plus { Rational::one() } else { -Rational::one() };
    let f = dual.unit().add(&h.scale(&sign)).scale(&Rational::new(1, 2));
    let mut ech = Echelon::new(n);
    let mut basis = Vec::new();
    for i in 0..n {
        let v = dual.mul(&SparseVec::unit(i), &f);
        if ech.insert(&v).is_some() {
            basis.push(v);
        }
    }
    let ideal = SparseMatrix::from_columns(n, basis);
    let ambient_gens: Vec<SparseMatrix> = dual
        .algebra()
        .generators()
        .iter()
        .map(|phi| dual.algebra().left_mult_matrix(phi))
        .chain(std::iter::once(dual.algebra().left_mult_matrix(&h)))
        .chain((0..k).map(|_| SparseMatrix::zeros(n, n)))
        .collect();
    let ambient = ModuleRep::new_unchecked(d.algebra().clone(), n, ambient_gens)?;
    let module = ambient.submodule(&ideal)?;
    module.verify()?;
    Ok(module)
}
