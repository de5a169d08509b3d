//! Incremental row echelon forms: rank, kernels, span tests and solves.
//!
//! Vectors are reduced in increasing column order and the lowest surviving
//! column becomes the new pivot, so results depend only on the input order.

use super::{Rational, SparseMatrix, SparseVec};
use crate::exactlin::LinAlgError;

/// A row echelon basis of a subspace of ℚ^width. Stored rows have leading
/// coefficient 1 and distinct leading columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), pivot_row: vec![NONE; width] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c] != NONE
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r.leading().unwrap().0).collect();
        p.sort_unstable();
        p
    }

    fn check(&self, v: &SparseVec) {
        if let Some(m) = v.max_index() {
            assert!(m < self.width, "vector index {m} exceeds width {}", self.width);
        }
    }

    /// Eliminates pivot entries until the first entry without a pivot.
    fn reduce_head(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((c, x)) = v.leading() else { return v };
            let p = self.pivot_row[*c];
            if p == NONE {
                return v;
            }
            let x = x.clone();
            v = v.add_scaled(&self.rows[p as usize], &-x);
        }
    }

    /// Fully reduces `v`: the result has no entry in any pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.check(v);
        let mut v = v.clone();
        let mut from = 0usize;
        loop {
            let next = v.iter().enumerate().skip_while(|(_, (c, _))| *c < from).find(|(_, (c, _))| self.pivot_row[*c] != NONE);
            match next {
                Some((_, (c, x))) => {
                    let (c, x) = (*c, x.clone());
                    v = v.add_scaled(&self.rows[self.pivot_row[c] as usize], &-x);
                    from = c + 1;
                }
                None => return v,
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.check(v);
        self.reduce_head(v.clone()).is_zero()
    }

    /// Adds `v` to the span; returns its new pivot column if it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        self.check(v);
        let v = self.reduce_head(v.clone());
        let (c, lead) = v.leading()?.clone();
        let v = if lead.is_one() { v } else { v.scale(&lead.recip()) };
        self.pivot_row[c] = self.rows.len() as u32;
        self.rows.push(v);
        Some(c)
    }

    pub fn insert_all<'a>(&mut self, vs: impl IntoIterator<Item = &'a SparseVec>) {
        for v in vs {
            self.insert(v);
        }
    }

    /// The reduced row echelon basis, sorted by pivot column.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&i| self.rows[i].leading().unwrap().0);
        let mut done: Vec<Option<SparseVec>> = vec![None; order.len()];
        let mut slot_of_pivot = std::collections::HashMap::with_capacity(order.len());
        for (slot, &i) in order.iter().enumerate() {
            slot_of_pivot.insert(self.rows[i].leading().unwrap().0, slot);
        }
        for slot in (0..order.len()).rev() {
            let row = &self.rows[order[slot]];
            let terms: Vec<(usize, Rational)> = row
                .iter()
                .skip(1)
                .filter_map(|(c, x)| slot_of_pivot.get(c).map(|s| (*s, x.clone())))
                .collect();
            let reduced = if terms.is_empty() {
                row.clone()
            } else {
                let mut pairs: Vec<(usize, Rational)> = row.iter().cloned().collect();
                for (s, x) in terms {
                    let other = done[s].as_ref().unwrap();
                    pairs.extend(other.iter().map(|(c, y)| (*c, -(y * &x))));
                }
                SparseVec::from_pairs(pairs)
            };
            done[slot] = Some(reduced);
        }
        done.into_iter().map(|r| r.unwrap()).collect()
    }

    /// Basis of the annihilator of the stored rows: all `x` with `row · x = 0`.
    /// One vector per non-pivot column, equal to 1 there and 0 at every other
    /// non-pivot column.
    pub fn null_space(&self) -> Vec<SparseVec> {
        let rref = self.rref();
        let mut extra: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.width];
        for r in &rref {
            let p = r.leading().unwrap().0;
            for (c, x) in r.iter().skip(1) {
                extra[*c].push((p, -x));
            }
        }
        (0..self.width)
            .filter(|c| !self.is_pivot(*c))
            .map(|f| {
                let mut e = std::mem::take(&mut extra[f]);
                e.push((f, Rational::one()));
                SparseVec::from_pairs(e)
            })
            .collect()
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.width).filter(|c| !self.is_pivot(*c)).collect()
    }
}

/// Exact rank.
pub fn rank(m: &SparseMatrix) -> usize {
    if m.ncols() <= m.nrows() {
        rank_of_vectors(m.nrows(), m.columns())
    } else {
        rank_of_vectors(m.ncols(), &m.row_vectors())
    }
}

/// Rank of a family of vectors in ℚ^width.
pub fn rank_of_vectors(width: usize, vs: &[SparseVec]) -> usize {
    let mut e = Echelon::new(width);
    e.insert_all(vs);
    e.rank()
}

/// A basis of `ker(M)`, one vector per free column, in increasing order of
/// that column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    kernel_of_rows(m.ncols(), &m.row_vectors())
}

/// Kernel of the matrix whose rows are `rows`.
pub fn kernel_of_rows(width: usize, rows: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new(width);
    e.insert_all(rows);
    e.null_space()
}

/// Whether two families span the same subspace.
pub fn span_equal(a: &[SparseVec], b: &[SparseVec], width: usize) -> Result<bool, LinAlgError> {
    for v in a.iter().chain(b) {
        if let Some(m) = v.max_index() {
            if m >= width {
                return Err(LinAlgError::DimensionMismatch { expected: width, found: m + 1 });
            }
        }
    }
    let mut ea = Echelon::new(width);
    ea.insert_all(a);
    let mut eb = Echelon::new(width);
    eb.insert_all(b);
    if ea.rank() != eb.rank() {
        return Ok(false);
    }
    Ok(b.iter().all(|v| ea.contains(v)))
}

/// Solves `A X = B` for one particular solution (free variables zero).
/// Returns `None` if the system is inconsistent.
pub fn solve(a: &SparseMatrix, b: &SparseMatrix) -> Option<SparseMatrix> {
    assert_eq!(a.nrows(), b.nrows(), "row mismatch in solve");
    let n = a.ncols();
    let k = b.ncols();
    let ar = a.row_vectors();
    let br = b.row_vectors();
    let mut e = Echelon::new(n + k);
    for (x, y) in ar.iter().zip(&br) {
        let mut pairs: Vec<(usize, Rational)> = x.iter().cloned().collect();
        pairs.extend(y.iter().map(|(j, v)| (n + j, v.clone())));
        e.insert(&SparseVec::from_sorted_unchecked(pairs));
    }
    if e.pivots().iter().any(|&p| p >= n) {
        return None;
    }
    let mut trip = Vec::new();
    for r in e.rref() {
        let p = r.leading().unwrap().0;
        for (c, x) in r.iter() {
            if *c >= n {
                trip.push((p, c - n, x.clone()));
            }
        }
    }
    Some(SparseMatrix::from_triplets(n, k, trip))
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(a: &SparseMatrix) -> Option<SparseMatrix> {
    if a.nrows() != a.ncols() || rank(a) != a.nrows() {
        return None;
    }
    solve(a, &SparseMatrix::identity(a.nrows()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense_rows(&rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::identity(3)), 3);
        assert_eq!(rank(&SparseMatrix::zeros(4, 7)), 0);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMatrix::identity(2)).is_empty());
        let k = kernel_basis(&SparseMatrix::zeros(1, 3));
        assert_eq!(k, vec![SparseVec::unit(0), SparseVec::unit(1), SparseVec::unit(2)]);
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k, vec![SparseVec::from_dense(&[q(-1), q(1)])]);
    }

    #[test]
    fn rref_is_reduced() {
        let mut e = Echelon::new(3);
        e.insert(&SparseVec::from_dense(&[q(1), q(1), q(1)]));
        e.insert(&SparseVec::from_dense(&[q(0), q(1), q(2)]));
        let r = e.rref();
        assert_eq!(r[0], SparseVec::from_dense(&[q(1), q(0), q(-1)]));
        assert_eq!(r[1], SparseVec::from_dense(&[q(0), q(1), q(2)]));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv), SparseMatrix::identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        let b = m(&[&[1], &[3]]);
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &b).is_none());
    }

    #[test]
    fn span_equal_examples() {
        let e1 = SparseVec::unit(0);
        let e2 = SparseVec::unit(1);
        assert!(span_equal(std::slice::from_ref(&e1), &[e1.scale(&q(2))], 2).unwrap());
        assert!(!span_equal(std::slice::from_ref(&e1), std::slice::from_ref(&e2), 2).unwrap());
        assert!(span_equal(std::slice::from_ref(&e1), &[SparseVec::unit(5)], 2).is_err());
    }
}
