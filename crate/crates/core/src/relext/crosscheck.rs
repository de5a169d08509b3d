use crate::algcore::{AlgebraMap, ModuleRep};
use crate::double::{coeff_restriction, coeff_tensor_product, DrinfeldDouble};
use crate::dycomplex::DYComplex;
use crate::hopfcore::HopfAlgebra;
use crate::rmatrix::RMatrix;

use super::ext::{ext_via_hom_complex, relative_ext_dims_within};
use super::resolution::{resolution_of_kind, tensor_resolution, verify_resolution, ResolutionKind};
use super::{Budget, RelError, ResolventPair};

/// DY cohomology against the matching relative Ext in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub degree: usize,
    pub dy: usize,
    pub ext: usize,
    /// All Ext dimensions computed on the way, from degree 0.
    pub ext_dims: Vec<usize>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.dy == self.ext
    }
}

/// `H^n_{DY}(⊗)` with coefficients from `R` against
/// `Ext^n_{(D⊗D, H⊗H)}(𝕜, H*)`.
pub fn adjunction_crosscheck_tensor(
    d: &DrinfeldDouble,
    r: &RMatrix,
    n: usize,
    kind: ResolutionKind,
    budget: &Budget,
) -> Result<CrossCheck, RelError> {
    let dy = DYComplex::tensor_with_r(d.base(), r.clone()).cohomology_dim(n)?;
    budget.check()?;
    let single = ResolventPair::double(d)?;
    let pair = ResolventPair::tensor(&single, &single)?;
    let w = coeff_tensor_product(d, pair.big(), r)?.module;
    let triv = d.hopf().trivial_module();
    let v = triv.outer_tensor(&triv, pair.big().clone())?;
    let ext_dims = relative_ext_dims_within(&pair, &v, &w, n, kind, budget)?;
    Ok(CrossCheck { degree: n, dy, ext: ext_dims[n], ext_dims })
}

/// `H^n_{DY}` of the restriction to `K ⊂ H` against
/// `Ext^n_{(D(H), H)}(𝕜, Hom_K(H, 𝕜))`.
pub fn adjunction_crosscheck_restriction(
    d: &DrinfeldDouble,
    sub: &HopfAlgebra,
    iota: &AlgebraMap,
    n: usize,
    kind: ResolutionKind,
    budget: &Budget,
) -> Result<CrossCheck, RelError> {
    let dy = DYComplex::restriction(d.base(), sub, iota)?.cohomology_dim(n)?;
    budget.check()?;
    let pair = ResolventPair::double(d)?;
    let w = coeff_restriction(d, sub, iota)?.module;
    let v = d.hopf().trivial_module();
    let ext_dims = relative_ext_dims_within(&pair, &v, &w, n, kind, budget)?;
    Ok(CrossCheck { degree: n, dy, ext: ext_dims[n], ext_dims })
}

/// Three computations of `Ext^n` over a tensor pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KunnethReport {
    pub degree: usize,
    /// Directly over `(A ⊗ A', B ⊗ B')`.
    pub direct: usize,
    /// `Σ_{i+j=n} dim Ext^i · dim Ext^j` over the factors.
    pub kunneth: usize,
    /// From the Hom complex of the tensor product of two cover resolutions.
    pub via_tensor_resolution: usize,
    /// Whether that tensor product passed [`verify_resolution`].
    pub tensor_resolution_ok: bool,
}

impl KunnethReport {
    pub fn agrees(&self) -> bool {
        self.tensor_resolution_ok && self.direct == self.kunneth && self.direct == self.via_tensor_resolution
    }
}

/// Checks `Ext(V ⊗ V', W ⊗ W') ≅ ⊕ Ext(V, W) ⊗ Ext(V', W')` in degree `n`.
#[allow(clippy::too_many_arguments)]
pub fn kunneth_check(
    pa: &ResolventPair,
    v: &ModuleRep,
    w: &ModuleRep,
    pb: &ResolventPair,
    v2: &ModuleRep,
    w2: &ModuleRep,
    n: usize,
    budget: &Budget,
) -> Result<KunnethReport, RelError> {
    let kind = ResolutionKind::IteratedCover;
    let pair = ResolventPair::tensor(pa, pb)?;
    let vv = v.outer_tensor(v2, pair.big().clone())?;
    let ww = w.outer_tensor(w2, pair.big().clone())?;
    let direct = relative_ext_dims_within(&pair, &vv, &ww, n, kind, budget)?[n];
    let ea = relative_ext_dims_within(pa, v, w, n, kind, budget)?;
    let eb = relative_ext_dims_within(pb, v2, w2, n, kind, budget)?;
    let kunneth = (0..=n).map(|i| ea[i] * eb[n - i]).sum();

    let ra = resolution_of_kind(pa, v, n + 1, kind, budget)?;
    let rb = resolution_of_kind(pb, v2, n + 1, kind, budget)?;
    budget.check()?;
    let t = tensor_resolution(&pair, &ra, &rb)?;
    let tensor_resolution_ok = verify_resolution(&pair, &t)?.ok();
    budget.check()?;
    let via_tensor_resolution = ext_via_hom_complex(&t, &ww)?[n];
    Ok(KunnethReport { degree: n, direct, kunneth, via_tensor_resolution, tensor_resolution_ok })
}
