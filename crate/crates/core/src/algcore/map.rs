use std::sync::Arc;

use crate::exactlin::{SparseMatrix, SparseVec};

use super::{AlgError, Algebra, Violation};

/// A linear map between algebras, stored as a `dim(target) × dim(source)` matrix.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub matrix: SparseMatrix,
}

impl AlgebraMap {
    /// Builds the map and rejects it unless it is unital and multiplicative.
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: SparseMatrix) -> Result<Self, AlgError> {
        let m = Self::new_unchecked(source, target, matrix)?;
        match m.verify().first() {
            None => Ok(m),
            Some(v) => Err(AlgError::NotAlgebraMap(v.to_string())),
        }
    }

    pub fn new_unchecked(source: Arc<Algebra>, target: Arc<Algebra>, matrix: SparseMatrix) -> Result<Self, AlgError> {
        if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
            return Err(AlgError::Shape(format!(
                "map matrix is {}×{}, expected {}×{}",
                matrix.nrows(),
                matrix.ncols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(AlgebraMap { source, target, matrix })
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let n = a.dim();
        AlgebraMap { source: a.clone(), target: a, matrix: SparseMatrix::identity(n) }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.mul_vec(v)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraMap) -> AlgebraMap {
        AlgebraMap { source: self.source.clone(), target: other.target.clone(), matrix: other.matrix.mul(&self.matrix) }
    }

    /// Images of the source generators.
    pub fn generator_images(&self) -> Vec<SparseVec> {
        self.source.generators().iter().map(|g| self.apply(g)).collect()
    }

    /// Unit and product checks. Basis pairs are used up to source dimension
    /// 64; beyond that basis elements times generators, which suffices once
    /// the unit is preserved.
    pub fn verify(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.apply(self.source.unit()) != *self.target.unit() {
            out.push(Violation { axiom: "unit".into(), witness: "1".into() });
        }
        let n = self.source.dim();
        let right: Vec<(String, SparseVec)> = if n <= 64 {
            (0..n).map(|j| (self.source.labels()[j].clone(), SparseVec::unit(j))).collect()
        } else {
            match self.source.generation() {
                Ok(g) => g.gens.iter().enumerate().map(|(k, v)| (format!("generator {k}"), v.clone())).collect(),
                Err(e) => return vec![Violation { axiom: "generation".into(), witness: e.to_string() }],
            }
        };
        let imgs: Vec<SparseVec> = (0..n).map(|i| self.matrix.col(i).clone()).collect();
        for i in 0..n {
            for (label, b) in &right {
                let lhs = self.apply(&self.source.mul(&SparseVec::unit(i), b));
                let rhs = self.target.mul(&imgs[i], &self.apply(b));
                if lhs != rhs {
                    out.push(Violation {
                        axiom: "multiplicativity".into(),
                        witness: format!("({}, {})", self.source.labels()[i], label),
                    });
                }
            }
        }
        out
    }
}
