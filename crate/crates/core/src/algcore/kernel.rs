use crate::exactlin::{kernel_basis, SparseMatrix};

use super::{AlgError, ModuleRep};

/// A kernel submodule with its inclusion `dim M × dim K`.
#[derive(Debug, Clone)]
pub struct ModuleKernel {
    pub module: ModuleRep,
    pub inclusion: SparseMatrix,
}

/// Kernel of an intertwiner `f: M → N`.
pub fn module_map_kernel(f: &SparseMatrix, m: &ModuleRep, n: &ModuleRep) -> Result<ModuleKernel, AlgError> {
    m.check_same_algebra(n)?;
    if !m.is_intertwiner(n, f) {
        return Err(AlgError::NotIntertwiner);
    }
    let inclusion = SparseMatrix::from_columns(m.dim(), kernel_basis(f));
    let module = m.submodule(&inclusion)?;
    Ok(ModuleKernel { module, inclusion })
}
