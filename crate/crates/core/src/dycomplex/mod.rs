//! Davydov–Yetter complexes of the identity functor, of the tensor product
//! functor with the monoidal structure coming from an R-matrix, and of a
//! restriction functor, all realized inside tensor powers of `H`.

mod decompose;
mod normalize;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algcore::AlgebraMap;
use crate::exactlin::{Echelon, Rational, SparseMatrix, SparseVec, TensorElement};
use crate::hopfcore::{verify_hopf_map, HopfAlgebra, HopfError};
use crate::rmatrix::RMatrix;

pub use decompose::{cocycle_from_tangent, decompose_h2_tensor, h2_decomposition, H2Decomposition, H2Parts};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DyError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("degree {0} is not supported here")]
    Degree(usize),
    #[error("index {index} out of range in degree {degree}")]
    Index { index: usize, degree: usize },
    #[error("element is not a cochain of degree {0}")]
    NotCochain(usize),
    #[error("element is not a cocycle")]
    NotCocycle,
    #[error("element is not a tangent vector")]
    NotTangent,
    #[error("operation needs the tensor product complex")]
    WrongKind,
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

/// Which functor the complex belongs to.
#[derive(Debug, Clone)]
pub enum ComplexKind {
    Identity,
    TensorWithR(RMatrix),
    Restriction { sub: HopfAlgebra, iota: AlgebraMap },
}

/// An exact basis of the degree-`n` cochains, with coordinates read off at
/// the free columns of the defining system.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    degree: usize,
    tensor_degree: usize,
    basis: Vec<TensorElement>,
    free: Vec<usize>,
    pos: HashMap<usize, usize>,
}

impl CochainSpace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TensorElement] {
        &self.basis
    }

    /// Coordinates of `u`, or `None` if `u` is not in the span.
    pub fn coords(&self, u: &TensorElement) -> Option<SparseVec> {
        if u.degree() != self.tensor_degree {
            return None;
        }
        let c = SparseVec::from_pairs(
            u.coeffs().iter().filter_map(|(i, x)| self.pos.get(i).map(|k| (*k, x.clone()))).collect(),
        );
        (self.element(&c) == *u).then_some(c)
    }

    /// The cochain with the given coordinates.
    pub fn element(&self, c: &SparseVec) -> TensorElement {
        let dim = self.basis.first().map(|b| b.dim()).unwrap_or(1);
        let mut acc = TensorElement::zero(dim, self.tensor_degree);
        for (k, x) in c.iter() {
            acc = acc.add_scaled(&self.basis[*k], x);
        }
        acc
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }
}

/// A DY complex with lazily computed cochain spaces.
#[derive(Debug)]
pub struct DYComplex {
    h: HopfAlgebra,
    kind: ComplexKind,
    cache: Mutex<HashMap<usize, Arc<CochainSpace>>>,
}

impl DYComplex {
    /// The complex of the identity functor of `H`-mod.
    pub fn identity(h: &HopfAlgebra) -> Self {
        Self::with_kind(h, ComplexKind::Identity)
    }

    /// The complex of the tensor product functor with the structure from `R`.
    pub fn tensor_with_r(h: &HopfAlgebra, r: RMatrix) -> Self {
        Self::with_kind(h, ComplexKind::TensorWithR(r))
    }

    /// The complex of the restriction functor along a Hopf inclusion `K → H`.
    pub fn restriction(h: &HopfAlgebra, sub: &HopfAlgebra, iota: &AlgebraMap) -> Result<Self, DyError> {
        if let Some(v) = verify_hopf_map(sub, h, iota).first() {
            return Err(HopfError::Invalid(format!("inclusion is not a Hopf map: {v}")).into());
        }
        Ok(Self::with_kind(h, ComplexKind::Restriction { sub: sub.clone(), iota: iota.clone() }))
    }

    fn with_kind(h: &HopfAlgebra, kind: ComplexKind) -> Self {
        DYComplex { h: h.clone(), kind, cache: Mutex::new(HashMap::new()) }
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.h
    }

    pub fn kind(&self) -> &ComplexKind {
        &self.kind
    }

    pub fn r_matrix(&self) -> Option<&RMatrix> {
        match &self.kind {
            ComplexKind::TensorWithR(r) => Some(r),
            _ => None,
        }
    }

    /// Number of tensor factors of a degree-`n` cochain.
    pub fn tensor_degree(&self, n: usize) -> usize {
        match self.kind {
            ComplexKind::TensorWithR(_) => 2 * n,
            _ => n,
        }
    }

    /// Elements whose adjoint action defines the cochain condition: the
    /// algebra generators of `H`, or of `ι(K)` for a restriction.
    fn centralized(&self) -> Vec<SparseVec> {
        match &self.kind {
            ComplexKind::Restriction { sub, iota } => sub.algebra().generators().iter().map(|g| iota.apply(g)).collect(),
            _ => self.h.algebra().generators().to_vec(),
        }
    }

    /// Pairs `(X, Y)` with cochains defined by `X u = u Y`.
    fn condition_pairs(&self, n: usize) -> Vec<(TensorElement, TensorElement)> {
        let m = self.tensor_degree(n);
        self.centralized()
            .iter()
            .map(|x| {
                let y = self.h.iterated_coproduct_of(x, m);
                let left = match self.kind {
                    ComplexKind::TensorWithR(_) => y.permute_slots(&interleave(n)).expect("valid permutation"),
                    _ => y.clone(),
                };
                (left, y)
            })
            .collect()
    }

    fn condition_vector(&self, pairs: &[(TensorElement, TensorElement)], u: &TensorElement) -> SparseVec {
        let size = u.space_size();
        let mut out = Vec::new();
        for (k, (x, y)) in pairs.iter().enumerate() {
            let v = self.h.tensor_mul(x, u).sub(&self.h.tensor_mul(u, y));
            out.extend(v.coeffs().iter().map(|(i, c)| (k * size + i, c.clone())));
        }
        SparseVec::from_sorted_unchecked(out)
    }

    /// Whether `u` satisfies the degree-`n` cochain conditions.
    pub fn is_cochain(&self, n: usize, u: &TensorElement) -> bool {
        u.degree() == self.tensor_degree(n)
            && u.dim() == self.h.dim()
            && (n == 0 || self.condition_vector(&self.condition_pairs(n), u).is_zero())
    }

    /// Exact basis of the degree-`n` cochains (cached).
    pub fn cochain_space(&self, n: usize) -> Arc<CochainSpace> {
        if let Some(s) = self.cache.lock().expect("cache lock").get(&n) {
            return s.clone();
        }
        let space = Arc::new(self.compute_space(n));
        self.cache.lock().expect("cache lock").entry(n).or_insert(space).clone()
    }

    fn compute_space(&self, n: usize) -> CochainSpace {
        let dim = self.h.dim();
        let m = self.tensor_degree(n);
        if n == 0 {
            let one = TensorElement::scalar(dim, Rational::one());
            return CochainSpace { degree: 0, tensor_degree: 0, basis: vec![one], free: vec![0], pos: [(0, 0)].into() };
        }
        let size = dim.pow(m as u32);
        let pairs = self.condition_pairs(n);
        // Each basis tensor contributes one column of the condition system.
        let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
        for idx in 0..size {
            let e = TensorElement::from_vec(dim, m, SparseVec::unit(idx));
            for (r, x) in self.condition_vector(&pairs, &e).iter() {
                if rows.len() <= *r {
                    rows.resize_with(r + 1, Vec::new);
                }
                rows[*r].push((idx, x.clone()));
            }
        }
        let rows: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_empty()).map(SparseVec::from_sorted_unchecked).collect();
        let mut ech = Echelon::new(size);
        ech.insert_all(&rows);
        let free = ech.free_columns();
        let basis: Vec<TensorElement> = ech.null_space().into_iter().map(|v| TensorElement::from_vec(dim, m, v)).collect();
        let pos = free.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        CochainSpace { degree: n, tensor_degree: m, basis, free, pos }
    }

    pub fn cochain_basis(&self, n: usize) -> Vec<TensorElement> {
        self.cochain_space(n).basis.clone()
    }

    /// Coface `∂_i` from degree `n` to `n + 1`, for `0 ≤ i ≤ n + 1`.
    pub fn coface(&self, n: usize, i: usize, u: &TensorElement) -> Result<TensorElement, DyError> {
        if i > n + 1 {
            return Err(DyError::Index { index: i, degree: n });
        }
        if u.degree() != self.tensor_degree(n) {
            return Err(DyError::NotCochain(n));
        }
        let h = &self.h;
        let dim = h.dim();
        match &self.kind {
            ComplexKind::TensorWithR(r) => {
                let r = r.element();
                let m = 2 * n + 2;
                if i == 0 {
                    let head = if n == 0 { h.apply_counit_at(r, 1)? } else { h.iterated_coproduct(r, 1, n - 1)? };
                    let slots: Vec<usize> = std::iter::once(1).chain((1..=n).map(|j| 2 * j)).collect();
                    let x = embed(h, &head, &slots[..head.degree()], m);
                    Ok(h.tensor_mul(&x, &h.tensor_one(2).outer(u)))
                } else if i == n + 1 {
                    let tail = if n == 0 { h.apply_counit_at(r, 0)? } else { h.iterated_coproduct(r, 0, n - 1)? };
                    let slots: Vec<usize> = (0..n).map(|j| 2 * j + 1).chain(std::iter::once(2 * n)).collect();
                    let y = embed(h, &tail, &slots[slots.len() - tail.degree()..], m);
                    Ok(h.tensor_mul(&y, &u.outer(&h.tensor_one(2))))
                } else {
                    let b = 2 * (i - 1);
                    let t = h.delta_at(u, b)?;
                    let t = h.delta_at(&t, b + 2)?;
                    let mut perm: Vec<usize> = (0..m).collect();
                    perm.swap(b + 1, b + 2);
                    let t = t.permute_slots(&perm).expect("valid permutation");
                    let rr = embed(h, r, &[2 * i - 1, 2 * i], m);
                    Ok(h.tensor_mul(&t, &rr))
                }
            }
            _ => {
                let one = TensorElement::from_vec(dim, 1, h.unit().clone());
                Ok(match i {
                    0 => one.outer(u),
                    _ if i == n + 1 => u.outer(&one),
                    _ => h.delta_at(u, i - 1)?,
                })
            }
        }
    }

    /// Codegeneracy `s_i` from degree `n` to `n − 1`, for `0 ≤ i < n`: the
    /// counit applied to slot `i`, or to both slots of block `i`.
    pub fn codegeneracy_at(&self, n: usize, i: usize, u: &TensorElement) -> Result<TensorElement, DyError> {
        if i >= n {
            return Err(DyError::Index { index: i, degree: n });
        }
        if u.degree() != self.tensor_degree(n) {
            return Err(DyError::NotCochain(n));
        }
        Ok(match self.kind {
            ComplexKind::TensorWithR(_) => {
                let t = self.h.apply_counit_at(u, 2 * i + 1)?;
                self.h.apply_counit_at(&t, 2 * i)?
            }
            _ => self.h.apply_counit_at(u, i)?,
        })
    }

    /// `δ^n(u) = Σ (−1)^i ∂_i(u)`.
    pub fn delta(&self, n: usize, u: &TensorElement) -> Result<TensorElement, DyError> {
        let mut acc = TensorElement::zero(self.h.dim(), self.tensor_degree(n + 1));
        for i in 0..=n + 1 {
            let c = self.coface(n, i, u)?;
            acc = if i % 2 == 0 { acc.add(&c) } else { acc.sub(&c) };
        }
        Ok(acc)
    }

    /// Images `δ^n(b)` of the degree-`n` basis, each checked to satisfy the
    /// degree-`(n + 1)` cochain conditions.
    pub fn differential_images(&self, n: usize) -> Result<Vec<TensorElement>, DyError> {
        let pairs = self.condition_pairs(n + 1);
        let space = self.cochain_space(n);
        let mut out = Vec::with_capacity(space.dim());
        for b in space.basis() {
            let d = self.delta(n, b)?;
            if !self.condition_vector(&pairs, &d).is_zero() {
                return Err(DyError::Consistency(format!("δ^{n} leaves the cochain space")));
            }
            out.push(d);
        }
        Ok(out)
    }

    /// Matrix of a degree-`n` linear operation in cochain coordinates.
    fn matrix_of(
        &self,
        n: usize,
        target: usize,
        f: impl Fn(&TensorElement) -> Result<TensorElement, DyError>,
    ) -> Result<SparseMatrix, DyError> {
        let src = self.cochain_space(n);
        let tgt = self.cochain_space(target);
        let mut cols = Vec::with_capacity(src.dim());
        for b in src.basis() {
            let img = f(b)?;
            let c = tgt.coords(&img).ok_or_else(|| DyError::Consistency(format!("image leaves degree-{target} cochains")))?;
            cols.push(c);
        }
        Ok(SparseMatrix::from_columns(tgt.dim(), cols))
    }

    /// `δ^n` in cochain coordinates.
    pub fn differential(&self, n: usize) -> Result<SparseMatrix, DyError> {
        self.matrix_of(n, n + 1, |u| self.delta(n, u))
    }

    /// `∂_i` in cochain coordinates.
    pub fn coface_matrix(&self, n: usize, i: usize) -> Result<SparseMatrix, DyError> {
        self.matrix_of(n, n + 1, |u| self.coface(n, i, u))
    }

    /// `s_i` in cochain coordinates.
    pub fn codegeneracy(&self, n: usize, i: usize) -> Result<SparseMatrix, DyError> {
        if n == 0 || i >= n {
            return Err(DyError::Index { index: i, degree: n });
        }
        self.matrix_of(n, n - 1, |u| self.codegeneracy_at(n, i, u))
    }

    /// Rank of `δ^n`, computed on the images in the ambient tensor space.
    pub fn differential_rank(&self, n: usize) -> Result<usize, DyError> {
        let imgs = self.differential_images(n)?;
        let width = self.h.dim().pow(self.tensor_degree(n + 1) as u32);
        let mut ech = Echelon::new(width);
        for t in &imgs {
            ech.insert(t.coeffs());
        }
        Ok(ech.rank())
    }

    /// `dim H^n = dim C^n − rank δ^n − rank δ^{n−1}`.
    pub fn cohomology_dim(&self, n: usize) -> Result<usize, DyError> {
        let dim = self.cochain_space(n).dim();
        let out = self.differential_rank(n)?;
        let inc = if n == 0 { 0 } else { self.differential_rank(n - 1)? };
        dim.checked_sub(out + inc).ok_or_else(|| DyError::Consistency("negative cohomology".into()))
    }

    /// Whether `u` is a degree-`n` cochain with `δ^n(u) = 0`.
    pub fn is_cocycle(&self, n: usize, u: &TensorElement) -> Result<bool, DyError> {
        Ok(self.is_cochain(n, u) && self.delta(n, u)?.is_zero())
    }

    /// Whether `u` lies in the image of `δ^{n−1}`.
    pub fn is_coboundary(&self, n: usize, u: &TensorElement) -> Result<bool, DyError> {
        if u.is_zero() {
            return Ok(true);
        }
        if n == 0 {
            return Ok(false);
        }
        let width = self.h.dim().pow(self.tensor_degree(n) as u32);
        let mut ech = Echelon::new(width);
        for t in self.differential_images(n - 1)? {
            ech.insert(t.coeffs());
        }
        Ok(ech.contains(u.coeffs()))
    }
}

/// Output slot `2i` takes input `i`, output `2i + 1` takes input `n + i`.
fn interleave(n: usize) -> Vec<usize> {
    (0..2 * n).map(|s| if s % 2 == 0 { s / 2 } else { n + s / 2 }).collect()
}

/// Places the slots of `t` at `slots` inside `H^{⊗m}`, with `1` elsewhere.
fn embed(h: &HopfAlgebra, t: &TensorElement, slots: &[usize], m: usize) -> TensorElement {
    assert_eq!(slots.len(), t.degree(), "one target slot per factor");
    let dim = h.dim();
    let mut acc = TensorElement::zero(dim, m);
    for (idx, c) in t.terms() {
        let mut factors = vec![h.unit().clone(); m];
        for (s, i) in slots.iter().zip(&idx) {
            factors[*s] = SparseVec::unit(*i);
        }
        acc = acc.add_scaled(&TensorElement::from_factors(dim, &factors), c);
    }
    acc
}
