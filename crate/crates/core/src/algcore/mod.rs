//! Finite-dimensional algebras, algebra maps and modules.
//!
//! Module actions are stored on a generating set of the algebra; the action of
//! an arbitrary element is recovered through a basis of words in the
//! generators. All checks are exact.

mod algebra;
mod hom;
mod induced;
mod kernel;
mod map;
mod module;

pub use algebra::{ground_field, scalar_element, tensor_algebra, Algebra, Generation, Violation};
pub use hom::{hom_space, hom_space_full_basis};
pub use induced::{induced_module_quotient, Induction};
pub use kernel::{module_map_kernel, ModuleKernel};
pub use map::AlgebraMap;
pub use module::ModuleRep;

/// Errors raised by algebra and module constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("generators span only {span} of {dim} dimensions")]
    NotGenerated { span: usize, dim: usize },
    #[error("modules are over different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),
    #[error("not an algebra map: {0}")]
    NotAlgebraMap(String),
    #[error("module axioms fail: {0}")]
    NotModule(String),
    #[error("map is not an intertwiner")]
    NotIntertwiner,
}
