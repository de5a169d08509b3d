use crate::exactlin::{kernel_basis, rank_of_vectors, Echelon, SparseMatrix, SparseVec, TensorElement};
use crate::rmatrix::is_tangent;

use super::{DYComplex, DyError};

/// The image of a degree-2 cocycle of the tensor product complex in
/// `H²(Id)² ⊕ T_R`, before passing to classes.
#[derive(Debug, Clone, PartialEq)]
pub struct H2Parts {
    pub a: TensorElement,
    pub b: TensorElement,
    pub t: TensorElement,
}

/// `a = (id⊗ε)^{⊗2}(u)`, `b = (ε⊗id)^{⊗2}(u)` and
/// `T = (ε⊗id⊗id⊗ε)(u) − τ((id⊗ε⊗ε⊗id)(u)) R`.
pub fn decompose_h2_tensor(cx: &DYComplex, u: &TensorElement) -> Result<H2Parts, DyError> {
    let r = cx.r_matrix().ok_or(DyError::WrongKind)?;
    if !cx.is_cocycle(2, u)? {
        return Err(DyError::NotCocycle);
    }
    let h = cx.hopf();
    let eps = |t: &TensorElement, slots: [usize; 2]| -> Result<TensorElement, DyError> {
        let t = h.apply_counit_at(t, slots[0])?;
        Ok(h.apply_counit_at(&t, slots[1])?)
    };
    let a = eps(u, [3, 1])?;
    let b = eps(u, [2, 0])?;
    let outer = eps(u, [3, 0])?;
    let inner = eps(u, [2, 1])?.permute_slots(&[1, 0]).expect("degree 2");
    let t = outer.sub(&h.tensor_mul(&inner, r.element()));
    Ok(H2Parts { a, b, t })
}

/// `u = 1 ⊗ T ⊗ 1` for a tangent vector `T`, checked to be a 2-cocycle.
pub fn cocycle_from_tangent(cx: &DYComplex, t: &TensorElement) -> Result<TensorElement, DyError> {
    let r = cx.r_matrix().ok_or(DyError::WrongKind)?;
    let h = cx.hopf();
    if t.degree() != 2 || t.dim() != h.dim() || !is_tangent(h, r.element(), t) {
        return Err(DyError::NotTangent);
    }
    let one = h.tensor_one(1);
    let u = one.outer(t).outer(&one);
    if !cx.is_cocycle(2, &u)? {
        return Err(DyError::Consistency("1 ⊗ T ⊗ 1 is not a cocycle".into()));
    }
    Ok(u)
}

/// Ranks of the decomposition map on a basis of `H²` of the tensor product
/// complex, with the `a` and `b` parts taken modulo coboundaries of the
/// identity complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct H2Decomposition {
    pub h2_dim: usize,
    pub rank: usize,
    pub a_rank: usize,
    pub b_rank: usize,
    pub t_rank: usize,
}

/// Computes [`H2Decomposition`]; coboundaries are checked to map to zero.
pub fn h2_decomposition(cx: &DYComplex) -> Result<H2Decomposition, DyError> {
    cx.r_matrix().ok_or(DyError::WrongKind)?;
    let h = cx.hopf();
    let n2 = h.dim() * h.dim();
    let space = cx.cochain_space(2);
    let images = cx.differential_images(2)?;
    let width = h.dim().pow(6);
    let cols: Vec<SparseVec> = images.iter().map(|t| t.coeffs().clone()).collect();
    let cocycles = kernel_basis(&SparseMatrix::from_columns(width, cols));

    let mut reps = Echelon::new(space.dim());
    let boundaries: Vec<TensorElement> = cx.differential_images(1)?;
    for b in &boundaries {
        let c = space.coords(b).ok_or_else(|| DyError::Consistency("δ¹ leaves the cochain space".into()))?;
        reps.insert(&c);
    }
    let mut classes = Vec::new();
    for z in &cocycles {
        if reps.insert(z).is_some() {
            classes.push(space.element(z));
        }
    }

    let id = DYComplex::identity(h);
    let mut id_bd = Echelon::new(n2);
    for t in id.differential_images(1)? {
        id_bd.insert(t.coeffs());
    }
    let image = |u: &TensorElement| -> Result<[SparseVec; 3], DyError> {
        let p = decompose_h2_tensor(cx, u)?;
        Ok([id_bd.reduce(p.a.coeffs()), id_bd.reduce(p.b.coeffs()), p.t.coeffs().clone()])
    };
    for b in &boundaries {
        if image(b)?.iter().any(|v| !v.is_zero()) {
            return Err(DyError::Consistency("a coboundary has a nonzero image".into()));
        }
    }
    let parts: Vec<[SparseVec; 3]> = classes.iter().map(image).collect::<Result<_, _>>()?;
    let joined: Vec<SparseVec> = parts
        .iter()
        .map(|[a, b, t]| {
            SparseVec::from_sorted_unchecked(
                a.iter()
                    .cloned()
                    .chain(b.iter().map(|(i, x)| (i + n2, x.clone())))
                    .chain(t.iter().map(|(i, x)| (i + 2 * n2, x.clone())))
                    .collect(),
            )
        })
        .collect();
    let part_rank = |k: usize| rank_of_vectors(n2, &parts.iter().map(|p| p[k].clone()).collect::<Vec<_>>());
    Ok(H2Decomposition {
        h2_dim: classes.len(),
        rank: rank_of_vectors(3 * n2, &joined),
        a_rank: part_rank(0),
        b_rank: part_rank(1),
        t_rank: part_rank(2),
    })
}
