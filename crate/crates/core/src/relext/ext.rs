use crate::algcore::{hom_space, module_map_kernel, ModuleRep};
use crate::exactlin::{rank, SparseMatrix};

use super::resolution::{resolution_of_kind, Resolution, ResolutionKind};
use super::{Budget, RelError, ResolventPair};

/// `dim Hom_A(A ⊗_B M, W)`, computed as `dim Hom_B(M, Res W)`.
pub fn hom_dim_induced(pair: &ResolventPair, m: &ModuleRep, w: &ModuleRep) -> Result<usize, RelError> {
    Ok(hom_space(m, &pair.restrict(w)?)?.len())
}

/// `dim Ext^n_{(A,B)}(V, W)` for `n = 0..=maxdeg`.
pub fn relative_ext_dims(
    pair: &ResolventPair,
    v: &ModuleRep,
    w: &ModuleRep,
    maxdeg: usize,
    kind: ResolutionKind,
) -> Result<Vec<usize>, RelError> {
    relative_ext_dims_within(pair, v, w, maxdeg, kind, &Budget::unlimited())
}

/// As [`relative_ext_dims`], giving up once `budget` runs out.
///
/// With `K_0 = V` and `K_{n+1} = ker d_n`, the short exact pieces
/// `0 → K_{n+1} → P_n → K_n → 0` split over `B`, so `Hom_A(−, W)` stays exact
/// on them in the relative sense and
/// `dim Ext^n = dim Hom(K_n, W) − dim Hom(P_{n−1}, W) + dim Hom(K_{n−1}, W)`.
/// `Hom(P_n, W)` is read off through Frobenius reciprocity.
pub fn relative_ext_dims_within(
    pair: &ResolventPair,
    v: &ModuleRep,
    w: &ModuleRep,
    maxdeg: usize,
    kind: ResolutionKind,
    budget: &Budget,
) -> Result<Vec<usize>, RelError> {
    pair.check_big(w)?;
    let mut hk = vec![hom_space(v, w)?.len()];
    if maxdeg == 0 {
        return Ok(hk);
    }
    let res = resolution_of_kind(pair, v, maxdeg - 1, kind, budget)?;
    let mut hp = Vec::with_capacity(maxdeg);
    for n in 0..maxdeg {
        budget.check()?;
        let m = res.induced_from[n].as_ref().expect("bar and cover terms are induced");
        hp.push(hom_dim_induced(pair, m, w)?);
        let k = module_map_kernel(&res.differentials[n], &res.terms[n], res.codomain(n))?;
        budget.check()?;
        hk.push(hom_space(&k.module, w)?.len());
    }
    let mut out = vec![hk[0]];
    for n in 1..=maxdeg {
        let e = (hk[n] + hk[n - 1])
            .checked_sub(hp[n - 1])
            .ok_or_else(|| RelError::Resolution(format!("negative Ext dimension in degree {n}")))?;
        out.push(e);
    }
    Ok(out)
}

/// `dim Ext^n` for `n < top` from the cochain complex `Hom_A(P_•, W)`.
///
/// Hom spaces of the terms are computed over `A` directly; this is the
/// independent route used to cross-check [`relative_ext_dims`].
pub fn ext_via_hom_complex(res: &Resolution, w: &ModuleRep) -> Result<Vec<usize>, RelError> {
    let homs: Vec<Vec<SparseMatrix>> = res.terms.iter().map(|p| hom_space(p, w)).collect::<Result<_, _>>()?;
    // rank of f ↦ f ∘ d_{n+1} on Hom(P_n, W), for n < top
    let ranks: Vec<usize> = (0..res.top())
        .map(|n| {
            let d = &res.differentials[n + 1];
            let cols: Vec<_> = homs[n].iter().map(|f| flatten(&f.mul(d))).collect();
            rank(&SparseMatrix::from_columns(w.dim() * d.ncols(), cols))
        })
        .collect();
    Ok((0..res.top())
        .map(|n| {
            let incoming = if n == 0 { 0 } else { ranks[n - 1] };
            homs[n].len() - ranks[n] - incoming
        })
        .collect())
}

fn flatten(m: &SparseMatrix) -> crate::exactlin::SparseVec {
    let rows = m.nrows();
    crate::exactlin::SparseVec::from_pairs(m.triplets().into_iter().map(|(r, c, x)| (c * rows + r, x)).collect())
}
