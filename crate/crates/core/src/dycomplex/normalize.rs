use crate::exactlin::TensorElement;

use super::{DYComplex, DyError};

impl DYComplex {
    /// `∂_i ∘ s_j` on a degree-`n` cochain.
    fn face_degen(&self, n: usize, i: usize, j: usize, u: &TensorElement) -> Result<TensorElement, DyError> {
        self.coface(n - 1, i, &self.codegeneracy_at(n, j, u)?)
    }

    /// The normalization projector in degrees 1 to 3:
    /// `𝒩¹ = id − ∂₀s₀`,
    /// `𝒩² = id − ∂₀s₀ − ∂₁s₁ + ∂₀s₁`,
    /// `𝒩³ = id − ∂₀s₀ − ∂₁s₁ − ∂₂s₂ + ∂₀s₁ + ∂₁s₂ + ∂₀∂₁s₀s₂ − ∂₀s₂`.
    pub fn normalize(&self, n: usize, u: &TensorElement) -> Result<TensorElement, DyError> {
        if !self.is_cochain(n, u) {
            return Err(DyError::NotCochain(n));
        }
        let fd = |i, j| self.face_degen(n, i, j, u);
        match n {
            1 => Ok(u.sub(&fd(0, 0)?)),
            2 => Ok(u.sub(&fd(0, 0)?).sub(&fd(1, 1)?).add(&fd(0, 1)?)),
            3 => {
                let s0s2 = self.codegeneracy_at(2, 0, &self.codegeneracy_at(3, 2, u)?)?;
                let d0d1 = self.coface(2, 0, &self.coface(1, 1, &s0s2)?)?;
                Ok(u.sub(&fd(0, 0)?)
                    .sub(&fd(1, 1)?)
                    .sub(&fd(2, 2)?)
                    .add(&fd(0, 1)?)
                    .add(&fd(1, 2)?)
                    .add(&d0d1)
                    .sub(&fd(0, 2)?))
            }
            _ => Err(DyError::Degree(n)),
        }
    }

    /// The cochain `v` with `𝒩ⁿ(z) = z + δ^{n−1}(v)` for a cocycle `z`:
    /// `0`, `−s₀(z)`, and `−s₀(z) + s₁(z) − ∂₀s₀s₀(z)` in degrees 1, 2, 3.
    pub fn normalization_correction(&self, n: usize, z: &TensorElement) -> Result<TensorElement, DyError> {
        if !self.is_cocycle(n, z)? {
            return Err(DyError::NotCocycle);
        }
        match n {
            1 => Ok(TensorElement::scalar(self.h.dim(), crate::exactlin::Rational::zero())),
            2 => Ok(self.codegeneracy_at(2, 0, z)?.neg()),
            3 => {
                let s0 = self.codegeneracy_at(3, 0, z)?;
                let s1 = self.codegeneracy_at(3, 1, z)?;
                let s0s0 = self.codegeneracy_at(2, 0, &s0)?;
                Ok(s1.sub(&s0).sub(&self.coface(1, 0, &s0s0)?))
            }
            _ => Err(DyError::Degree(n)),
        }
    }
}
