//! Sparse vectors and column-stored sparse matrices over ℚ.

use std::fmt;

use super::Rational;

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, x)| (i, x))).finish()
    }
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rational::one())] }
    }

    pub fn single(i: usize, x: Rational) -> Self {
        if x.is_zero() {
            Self::new()
        } else {
            SparseVec { entries: vec![(i, x)] }
        }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs(mut pairs: Vec<(usize, Rational)>) -> Self {
        pairs.sort_unstable_by_key(|p| p.0);
        let mut entries: Vec<(usize, Rational)> = Vec::with_capacity(pairs.len());
        for (i, x) in pairs {
            match entries.last_mut() {
                Some((j, y)) if *j == i => *y += &x,
                _ => entries.push((i, x)),
            }
        }
        entries.retain(|(_, x)| !x.is_zero());
        SparseVec { entries }
    }

    /// Trusts the caller: indices strictly increasing and values nonzero.
    pub fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, x)| !x.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (usize, Rational)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<&(usize, Rational)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &Rational) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, &b[j].1 * c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &a[i].1 + &(&b[j].1 * c);
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(k, x)| (*k, x * c)));
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut s = Rational::zero();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    s += &(&a[i].1 * &b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        s
    }

    /// Re-indexes entries through `f`, summing collisions.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, x)| (f(*i), x.clone())).collect())
    }

    /// Keeps entries whose index passes `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> SparseVec {
        SparseVec { entries: self.entries.iter().filter(|(i, _)| keep(*i)).cloned().collect() }
    }

    /// Tensor product of coordinate vectors, index `i * other_dim + j`.
    pub fn kron(&self, other: &SparseVec, other_dim: usize) -> SparseVec {
        let mut e = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                e.push((i * other_dim + j, x * y));
            }
        }
        SparseVec { entries: e }
    }

    /// Adds `offset` to every index.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (i + offset, x.clone())).collect() }
    }

    /// Linear combination `Σ c_k v_k`.
    pub fn combination<'a>(terms: impl IntoIterator<Item = (&'a SparseVec, Rational)>) -> SparseVec {
        let mut pairs = Vec::new();
        for (v, c) in terms {
            if c.is_zero() {
                continue;
            }
            pairs.extend(v.entries.iter().map(|(i, x)| (*i, x * &c)));
        }
        SparseVec::from_pairs(pairs)
    }
}

/// A sparse matrix stored by columns; each column is a [`SparseVec`] of row indices.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix {}x{} ", self.rows, self.cols.len())?;
        f.debug_list().entries(self.triplets()).finish()
    }
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        SparseMatrix { rows: n, cols: (0..n).map(|i| SparseVec::single(i, c.clone())).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|m| m < rows)));
        SparseMatrix { rows, cols }
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(rows: usize, ncols: usize, triplets: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); ncols];
        for (r, c, x) in triplets {
            assert!(r < rows && c < ncols, "triplet ({r},{c}) out of bounds");
            buckets[c].push((r, x));
        }
        SparseMatrix { rows, cols: buckets.into_iter().map(SparseVec::from_pairs).collect() }
    }

    pub fn from_dense_rows(rows: &[Vec<Rational>]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        Self::from_triplets(
            n,
            m,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, x)| (i, j, x.clone()))),
        )
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_rows(ncols: usize, rows: &[SparseVec]) -> Self {
        Self::from_triplets(
            rows.len(),
            ncols,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x.clone()))),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.cols[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// All nonzero entries as `(row, col, value)`, sorted by row then column.
    pub fn triplets(&self) -> Vec<(usize, usize, Rational)> {
        let mut t: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, x)| (*i, j, x.clone())))
            .collect();
        t.sort_by_key(|e| (e.0, e.1));
        t
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        self.transpose().cols
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                buckets[*i].push((j, x.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols.len(),
            cols: buckets.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::combination(v.iter().map(|(j, x)| (&self.cols[*j], x.clone())))
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.rows, "dimension mismatch in matrix product");
        SparseMatrix { rows: self.rows, cols: other.cols.iter().map(|c| self.mul_vec(c)).collect() }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn add_scaled(&self, other: &SparseMatrix, c: &Rational) -> SparseMatrix {
        assert_eq!((self.rows, self.ncols()), (other.rows, other.ncols()), "shape mismatch");
        SparseMatrix {
            rows: self.rows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add_scaled(b, c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    /// Kronecker product; index `(i, j)` maps to `i * other_dim + j`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let (r2, c2) = (other.rows, other.ncols());
        let mut cols = Vec::with_capacity(self.ncols() * c2);
        for a in &self.cols {
            for b in &other.cols {
                let mut e = Vec::with_capacity(a.nnz() * b.nnz());
                for (i, x) in a.iter() {
                    for (k, y) in b.iter() {
                        e.push((i * r2 + k, x * y));
                    }
                }
                cols.push(SparseVec::from_sorted_unchecked(e));
            }
        }
        SparseMatrix { rows: self.rows * r2, cols }
    }

    /// Columns `[start, end)`.
    pub fn column_range(&self, start: usize, end: usize) -> SparseMatrix {
        SparseMatrix { rows: self.rows, cols: self.cols[start..end].to_vec() }
    }

    /// Places `self` and `other` side by side.
    pub fn hstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.rows, other.rows);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        SparseMatrix { rows: self.rows, cols }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let off = self.rows;
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.map_indices(|i| i + off)));
        SparseMatrix { rows: self.rows + other.rows, cols }
    }

    /// Keeps the listed rows, renumbered in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> SparseMatrix {
        let mut pos = vec![usize::MAX; self.rows];
        for (k, r) in rows.iter().enumerate() {
            pos[*r] = k;
        }
        SparseMatrix {
            rows: rows.len(),
            cols: self
                .cols
                .iter()
                .map(|c| {
                    SparseVec::from_pairs(
                        c.iter().filter(|(i, _)| pos[*i] != usize::MAX).map(|(i, x)| (pos[*i], x.clone())).collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.ncols()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                out[*i][j] = x.clone();
            }
        }
        out
    }
}
