//! Relative homological algebra for a pair `B ⊂ A`: bar and iterated-cover
//! resolutions, relative Ext, and the numerical adjunction and Künneth checks.

mod crosscheck;
mod ext;
mod resolution;

use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::algcore::{tensor_algebra, AlgError, Algebra, AlgebraMap, Induction, ModuleRep};
use crate::double::DrinfeldDouble;
use crate::dycomplex::DyError;
use crate::hopfcore::HopfError;

pub use crosscheck::{
    adjunction_crosscheck_restriction, adjunction_crosscheck_tensor, kunneth_check, CrossCheck, KunnethReport,
};
pub use ext::{ext_via_hom_complex, hom_dim_induced, relative_ext_dims, relative_ext_dims_within};
pub use resolution::{
    bar_resolution, iterated_cover_resolution, resolution_of_kind, tensor_resolution, verify_resolution, Resolution,
    ResolutionCheck, ResolutionKind,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelError {
    #[error(transparent)]
    Algebra(#[from] AlgError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Dy(#[from] DyError),
    #[error("no free right basis of {0} over the subalgebra was found")]
    NoFreeBasis(String),
    #[error("module is over {found}, expected {expected}")]
    WrongAlgebra { expected: String, found: String },
    #[error("resolution check failed: {0}")]
    Resolution(String),
    #[error("time budget exhausted")]
    Budget,
}

/// A wall-clock allowance checked between expensive steps.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn seconds(s: f64) -> Self {
        Budget { deadline: Some(Instant::now() + Duration::from_secs_f64(s.max(0.0))) }
    }

    pub fn check(&self) -> Result<(), RelError> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(RelError::Budget),
            _ => Ok(()),
        }
    }
}

/// An inclusion `ι: B → A` together with the induction functor it defines.
#[derive(Debug, Clone)]
pub struct ResolventPair {
    induction: Induction,
}

impl ResolventPair {
    /// The pair for a verified algebra map.
    pub fn new(inclusion: AlgebraMap) -> Result<Self, RelError> {
        if let Some(v) = inclusion.verify().first() {
            return Err(AlgError::NotAlgebraMap(v.to_string()).into());
        }
        let name = inclusion.target.name().to_string();
        let induction = Induction::new(inclusion).ok_or(RelError::NoFreeBasis(name))?;
        Ok(ResolventPair { induction })
    }

    /// `(D(H), H)` through `h ↦ ε ⊗ h`.
    pub fn double(d: &DrinfeldDouble) -> Result<Self, RelError> {
        Self::new(d.embed_base().clone())
    }

    /// `(A ⊗ A', B ⊗ B')` with the tensor product inclusion.
    pub fn tensor(p: &ResolventPair, q: &ResolventPair) -> Result<Self, RelError> {
        let big = Arc::new(tensor_algebra(p.big(), q.big())?);
        let small = Arc::new(tensor_algebra(p.small(), q.small())?);
        let m = p.inclusion().matrix.kron(&q.inclusion().matrix);
        Self::new(AlgebraMap::new(small, big, m)?)
    }

    pub fn big(&self) -> &Arc<Algebra> {
        &self.induction.map().target
    }

    pub fn small(&self) -> &Arc<Algebra> {
        &self.induction.map().source
    }

    pub fn inclusion(&self) -> &AlgebraMap {
        self.induction.map()
    }

    pub fn induction(&self) -> &Induction {
        &self.induction
    }

    /// `G(X) = A ⊗_B X` for an `A`-module `X`.
    pub fn comonad(&self, x: &ModuleRep) -> Result<ModuleRep, RelError> {
        Ok(self.induction.comonad(x)?)
    }

    /// Restriction to `B`.
    pub fn restrict(&self, x: &ModuleRep) -> Result<ModuleRep, RelError> {
        Ok(x.restrict(self.inclusion())?)
    }

    pub(crate) fn check_big(&self, x: &ModuleRep) -> Result<(), RelError> {
        if Arc::ptr_eq(x.algebra(), self.big()) {
            Ok(())
        } else {
            Err(RelError::WrongAlgebra { expected: self.big().name().into(), found: x.algebra().name().into() })
        }
    }
}
