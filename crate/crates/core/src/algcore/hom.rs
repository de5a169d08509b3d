use crate::exactlin::{kernel_of_rows, SparseMatrix, SparseVec};

use super::{AlgError, ModuleRep};

/// Rows of `F ρ_M(a) − ρ_N(a) F = 0` in the unknowns `F[r][c]` at `r * dim M + c`.
fn intertwiner_rows(rm: &SparseMatrix, rn: &SparseMatrix, dm: usize, dn: usize, out: &mut Vec<SparseVec>) {
    let rn_rows = rn.row_vectors();
    for r in 0..dn {
        for c in 0..dm {
            let mut pairs: Vec<_> = rm.col(c).iter().map(|(k, x)| (r * dm + k, x.clone())).collect();
            pairs.extend(rn_rows[r].iter().map(|(k, x)| (k * dm + c, -x)));
            let row = SparseVec::from_pairs(pairs);
            if !row.is_zero() {
                out.push(row);
            }
        }
    }
}

fn unflatten(v: &SparseVec, dn: usize, dm: usize) -> SparseMatrix {
    SparseMatrix::from_triplets(dn, dm, v.iter().map(|(i, x)| (i / dm, i % dm, x.clone())))
}

/// A basis of `Hom_A(M, N)` as `dim N × dim M` matrices. The intertwiner
/// equations are imposed on the algebra generators, which suffices because
/// the generators' words span the algebra.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<SparseMatrix>, AlgError> {
    m.check_same_algebra(n)?;
    let (dm, dn) = (m.dim(), n.dim());
    let mut rows = Vec::new();
    for (a, b) in m.generator_actions().iter().zip(n.generator_actions()) {
        intertwiner_rows(a, b, dm, dn, &mut rows);
    }
    Ok(kernel_of_rows(dm * dn, &rows).iter().map(|v| unflatten(v, dn, dm)).collect())
}

/// The same space with equations imposed on every basis element of the algebra.
pub fn hom_space_full_basis(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<SparseMatrix>, AlgError> {
    m.check_same_algebra(n)?;
    let (dm, dn) = (m.dim(), n.dim());
    let mut rows = Vec::new();
    for i in 0..m.algebra().dim() {
        intertwiner_rows(&m.act_basis(i), &n.act_basis(i), dm, dn, &mut rows);
    }
    Ok(kernel_of_rows(dm * dn, &rows).iter().map(|v| unflatten(v, dn, dm)).collect())
}
