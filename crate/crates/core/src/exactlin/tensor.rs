//! Sparse elements of A^{⊗d} for a finite-dimensional algebra A.
//!
//! A multi-index `(i_1, …, i_d)` is packed into the integer
//! `((i_1 · n + i_2) · n + …) · n + i_d`, so numeric order on packed keys is
//! lexicographic order on tuples.

use std::fmt;

use super::{LinAlgError, Rational, SparseVec};

/// Access to the multiplication table of an algebra.
pub trait StructureConstants {
    fn dim(&self) -> usize;
    /// `e_i · e_j` in basis coordinates.
    fn product(&self, i: usize, j: usize) -> &SparseVec;
}

/// An element of A^{⊗degree} with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    dim: usize,
    degree: usize,
    coeffs: SparseVec,
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (k, x) in self.coeffs.iter() {
            m.entry(&self.unpack(*k), x);
        }
        m.finish()
    }
}

fn checked_size(dim: usize, degree: usize) -> usize {
    dim.checked_pow(degree as u32).filter(|s| *s <= 1 << 48).expect("tensor space too large to index")
}

impl TensorElement {
    pub fn zero(dim: usize, degree: usize) -> Self {
        checked_size(dim, degree);
        TensorElement { dim, degree, coeffs: SparseVec::new() }
    }

    /// The scalar `c` as a degree-0 tensor.
    pub fn scalar(dim: usize, c: Rational) -> Self {
        TensorElement { dim, degree: 0, coeffs: SparseVec::single(0, c) }
    }

    /// Wraps packed coordinates.
    pub fn from_vec(dim: usize, degree: usize, coeffs: SparseVec) -> Self {
        let size = checked_size(dim, degree);
        if let Some(m) = coeffs.max_index() {
            assert!(m < size, "packed index out of range");
        }
        TensorElement { dim, degree, coeffs }
    }

    /// Builds from `(multi-index, coefficient)` pairs, summing duplicates.
    pub fn from_terms(dim: usize, degree: usize, terms: impl IntoIterator<Item = (Vec<usize>, Rational)>) -> Self {
        let size = checked_size(dim, degree);
        let pairs = terms
            .into_iter()
            .map(|(idx, x)| {
                assert_eq!(idx.len(), degree, "multi-index has wrong length");
                assert!(idx.iter().all(|i| *i < dim), "basis index out of range");
                (pack(dim, &idx), x)
            })
            .collect();
        let coeffs = SparseVec::from_pairs(pairs);
        debug_assert!(coeffs.max_index().is_none_or(|m| m < size));
        TensorElement { dim, degree, coeffs }
    }

    /// Pure tensor `v_1 ⊗ … ⊗ v_d` of coordinate vectors.
    pub fn from_factors(dim: usize, factors: &[SparseVec]) -> Self {
        let mut acc = TensorElement::scalar(dim, Rational::one());
        for f in factors {
            acc = acc.outer(&TensorElement::from_vec(dim, 1, f.clone()));
        }
        acc
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn space_size(&self) -> usize {
        checked_size(self.dim, self.degree)
    }

    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> SparseVec {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.nnz()
    }

    pub fn unpack(&self, mut k: usize) -> Vec<usize> {
        let mut out = vec![0; self.degree];
        for s in (0..self.degree).rev() {
            out[s] = k % self.dim;
            k /= self.dim;
        }
        out
    }

    /// `(multi-index, coefficient)` pairs in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> + '_ {
        self.coeffs.iter().map(|(k, x)| (self.unpack(*k), x))
    }

    pub fn coeff(&self, idx: &[usize]) -> Rational {
        self.coeffs.get(pack(self.dim, idx))
    }

    /// Coefficient of a degree-0 tensor.
    pub fn as_scalar(&self) -> Rational {
        assert_eq!(self.degree, 0, "not a scalar");
        self.coeffs.get(0)
    }

    fn same_shape(&self, o: &TensorElement) -> Result<(), LinAlgError> {
        if self.dim != o.dim {
            return Err(LinAlgError::DimensionMismatch { expected: self.dim, found: o.dim });
        }
        if self.degree != o.degree {
            return Err(LinAlgError::DegreeMismatch { expected: self.degree, found: o.degree });
        }
        Ok(())
    }

    pub fn add(&self, o: &TensorElement) -> TensorElement {
        self.same_shape(o).expect("tensor shape mismatch");
        TensorElement { dim: self.dim, degree: self.degree, coeffs: self.coeffs.add(&o.coeffs) }
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        self.same_shape(o).expect("tensor shape mismatch");
        TensorElement { dim: self.dim, degree: self.degree, coeffs: self.coeffs.sub(&o.coeffs) }
    }

    pub fn add_scaled(&self, o: &TensorElement, c: &Rational) -> TensorElement {
        self.same_shape(o).expect("tensor shape mismatch");
        TensorElement { dim: self.dim, degree: self.degree, coeffs: self.coeffs.add_scaled(&o.coeffs, c) }
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        TensorElement { dim: self.dim, degree: self.degree, coeffs: self.coeffs.scale(c) }
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&-Rational::one())
    }

    /// `self ⊗ o`, of degree `deg(self) + deg(o)`.
    pub fn outer(&self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.dim, o.dim, "tensor dimension mismatch");
        let shift = checked_size(self.dim, o.degree);
        checked_size(self.dim, self.degree + o.degree);
        let mut e = Vec::with_capacity(self.nnz() * o.nnz());
        for (i, x) in self.coeffs.iter() {
            for (j, y) in o.coeffs.iter() {
                e.push((i * shift + j, x * y));
            }
        }
        TensorElement {
            dim: self.dim,
            degree: self.degree + o.degree,
            coeffs: SparseVec::from_sorted_unchecked(e),
        }
    }

    /// Slotwise product using the algebra's structure constants.
    pub fn mul<A: StructureConstants + ?Sized>(&self, o: &TensorElement, alg: &A) -> Result<TensorElement, LinAlgError> {
        self.same_shape(o)?;
        if alg.dim() != self.dim {
            return Err(LinAlgError::DimensionMismatch { expected: self.dim, found: alg.dim() });
        }
        let n = self.dim;
        let d = self.degree;
        let mut pairs: Vec<(usize, Rational)> = Vec::new();
        let mut partial: Vec<(usize, Rational)> = Vec::new();
        let mut next: Vec<(usize, Rational)> = Vec::new();
        for (ka, x) in self.coeffs.iter() {
            let ia = self.unpack(*ka);
            for (kb, y) in o.coeffs.iter() {
                let ib = o.unpack(*kb);
                partial.clear();
                partial.push((0, x * y));
                for s in 0..d {
                    let prod = alg.product(ia[s], ib[s]);
                    if prod.is_zero() {
                        partial.clear();
                        break;
                    }
                    next.clear();
                    for (k, c) in &partial {
                        for (j, z) in prod.iter() {
                            next.push((k * n + j, c * z));
                        }
                    }
                    std::mem::swap(&mut partial, &mut next);
                }
                pairs.append(&mut partial);
            }
        }
        Ok(TensorElement { dim: n, degree: d, coeffs: SparseVec::from_pairs(pairs) })
    }

    /// Re-orders slots: output slot `s` holds input slot `perm[s]`.
    pub fn permute_slots(&self, perm: &[usize]) -> Result<TensorElement, LinAlgError> {
        let d = self.degree;
        let mut seen = vec![false; d];
        if perm.len() != d || perm.iter().any(|&p| p >= d || std::mem::replace(&mut seen[p], true)) {
            return Err(LinAlgError::InvalidPermutation(perm.to_vec()));
        }
        let n = self.dim;
        let coeffs = self.coeffs.map_indices(|k| {
            let idx = self.unpack(k);
            perm.iter().fold(0, |acc, &p| acc * n + idx[p])
        });
        Ok(TensorElement { dim: n, degree: d, coeffs })
    }

    /// Replaces slot `slot` (0-based) by the image of a linear map sending
    /// basis index `i` to a packed tensor of degree `out_degree`.
    pub fn map_slot(
        &self,
        slot: usize,
        out_degree: usize,
        f: &dyn Fn(usize) -> SparseVec,
    ) -> Result<TensorElement, LinAlgError> {
        if slot >= self.degree {
            return Err(LinAlgError::SlotOutOfRange { slot, degree: self.degree });
        }
        let n = self.dim;
        let after = checked_size(n, self.degree - slot - 1);
        let mid = checked_size(n, out_degree);
        checked_size(n, self.degree - 1 + out_degree);
        let mut cache: std::collections::HashMap<usize, SparseVec> = Default::default();
        let mut pairs = Vec::new();
        for (k, x) in self.coeffs.iter() {
            let suffix = k % after;
            let rest = k / after;
            let i = rest % n;
            let prefix = rest / n;
            let img = cache.entry(i).or_insert_with(|| f(i));
            for (j, y) in img.iter() {
                debug_assert!(*j < mid);
                pairs.push(((prefix * mid + j) * after + suffix, x * y));
            }
        }
        Ok(TensorElement {
            dim: n,
            degree: self.degree - 1 + out_degree,
            coeffs: SparseVec::from_pairs(pairs),
        })
    }
}

/// Packs a multi-index.
pub fn pack(dim: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + i)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Z2 {
        table: Vec<Vec<SparseVec>>,
    }

    impl StructureConstants for Z2 {
        fn dim(&self) -> usize {
            2
        }
        fn product(&self, i: usize, j: usize) -> &SparseVec {
            &self.table[i][j]
        }
    }

    fn z2() -> Z2 {
        Z2 { table: (0..2).map(|i| (0..2).map(|j| SparseVec::unit((i + j) % 2)).collect()).collect() }
    }

    #[test]
    fn pack_order_is_lexicographic() {
        let t = TensorElement::from_terms(3, 2, vec![(vec![1, 0], Rational::one()), (vec![0, 2], Rational::one())]);
        let keys: Vec<_> = t.terms().map(|(i, _)| i).collect();
        assert_eq!(keys, vec![vec![0, 2], vec![1, 0]]);
    }

    #[test]
    fn slotwise_product_in_group_algebra() {
        let a = z2();
        let g1 = TensorElement::from_terms(2, 2, vec![(vec![1, 0], Rational::one())]);
        let p = g1.mul(&g1, &a).unwrap();
        assert_eq!(p, TensorElement::from_terms(2, 2, vec![(vec![0, 0], Rational::one())]));
    }

    #[test]
    fn sigma_two_permutation() {
        let t = TensorElement::from_terms(4, 4, vec![(vec![0, 1, 2, 3], Rational::one())]);
        let s = t.permute_slots(&[0, 2, 1, 3]).unwrap();
        assert_eq!(s.coeff(&[0, 2, 1, 3]), Rational::one());
        assert!(t.permute_slots(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn map_slot_inserts_degree() {
        let t = TensorElement::from_terms(2, 2, vec![(vec![1, 0], Rational::from(3))]);
        let dup = t.map_slot(0, 2, &|i| SparseVec::unit(i * 2 + i)).unwrap();
        assert_eq!(dup.degree(), 3);
        assert_eq!(dup.coeff(&[1, 1, 0]), Rational::from(3));
        let drop = t.map_slot(1, 0, &|_| SparseVec::unit(0)).unwrap();
        assert_eq!(drop.coeff(&[1]), Rational::from(3));
    }
}
