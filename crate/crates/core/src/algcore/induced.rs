use std::sync::Arc;

use crate::exactlin::{inverse, Echelon, SparseMatrix, SparseVec};

use super::{AlgError, AlgebraMap, ModuleRep};

/// Induction `G(X) = A ⊗_B X` along `ι: B → A`, realized on a free right
/// `B`-basis `c_1, …, c_m` of `A` as `⊕_r c_r ⊗ X` (basis index `r · dim X + x`).
#[derive(Debug, Clone)]
pub struct Induction {
    map: AlgebraMap,
    coset_reps: Vec<SparseVec>,
    /// Coordinates of an element of `A` in the basis `c_s ι(e_b)`, index `s · dim B + b`.
    decompose: SparseMatrix,
}

impl Induction {
    /// Looks for a free right `B`-basis of `A` among the standard basis
    /// vectors. Returns `None` when the greedy search does not find one.
    pub fn new(map: AlgebraMap) -> Option<Self> {
        let (na, nb) = (map.target.dim(), map.source.dim());
        if nb == 0 || na % nb != 0 {
            return None;
        }
        let images: Vec<SparseVec> = (0..nb).map(|b| map.apply(&SparseVec::unit(b))).collect();
        let mut ech = Echelon::new(na);
        let mut reps = Vec::new();
        let mut cols = Vec::with_capacity(na);
        for i in 0..na {
            if ech.rank() == na {
                break;
            }
            let c = SparseVec::unit(i);
            let block: Vec<SparseVec> = images.iter().map(|b| map.target.mul(&c, b)).collect();
            let mut trial = ech.clone();
            if block.iter().all(|v| trial.insert(v).is_some()) {
                ech = trial;
                reps.push(c);
                cols.extend(block);
            }
        }
        if ech.rank() != na {
            return None;
        }
        let decompose = inverse(&SparseMatrix::from_columns(na, cols))?;
        Some(Induction { map, coset_reps: reps, decompose })
    }

    pub fn map(&self) -> &AlgebraMap {
        &self.map
    }

    /// The free right basis `c_r` of `A` over `B`.
    pub fn coset_reps(&self) -> &[SparseVec] {
        &self.coset_reps
    }

    pub fn rank(&self) -> usize {
        self.coset_reps.len()
    }

    /// Block `(s, ·)` of `ρ_G(a)` applied to `c_r ⊗ –`, as `Σ_b coef · ρ_X(e_b)`.
    fn block_action(&self, x_basis: &[SparseMatrix], elt: &SparseVec, dx: usize) -> Vec<SparseMatrix> {
        let nb = self.map.source.dim();
        let coords = self.decompose.mul_vec(elt);
        let mut blocks = vec![SparseMatrix::zeros(dx, dx); self.rank()];
        for (k, c) in coords.iter() {
            let (s, b) = (k / nb, k % nb);
            blocks[s] = blocks[s].add_scaled(&x_basis[b], c);
        }
        blocks
    }

    /// `G(X)` for a `B`-module `X`.
    pub fn induce(&self, x: &ModuleRep) -> Result<ModuleRep, AlgError> {
        if !Arc::ptr_eq(x.algebra(), &self.map.source) {
            return Err(AlgError::AlgebraMismatch(x.algebra().name().into(), self.map.source.name().into()));
        }
        let a = &self.map.target;
        let dx = x.dim();
        let m = self.rank();
        let x_basis: Vec<SparseMatrix> = (0..self.map.source.dim()).map(|b| x.act_basis(b)).collect();
        let mut gens = Vec::new();
        for g in a.generation()?.gens.iter() {
            let mut trip = Vec::new();
            for (r, c) in self.coset_reps.iter().enumerate() {
                let blocks = self.block_action(&x_basis, &a.mul(g, c), dx);
                for (s, blk) in blocks.iter().enumerate() {
                    trip.extend(blk.triplets().into_iter().map(|(i, j, v)| (s * dx + i, r * dx + j, v)));
                }
            }
            gens.push(SparseMatrix::from_triplets(m * dx, m * dx, trip));
        }
        ModuleRep::new_unchecked(a.clone(), m * dx, gens)
    }

    /// `G(Res X)` for an `A`-module `X`.
    pub fn comonad(&self, x: &ModuleRep) -> Result<ModuleRep, AlgError> {
        self.induce(&x.restrict(&self.map)?)
    }

    /// The counit `G(Res X) → X`, `c_r ⊗ x ↦ c_r · x`.
    pub fn counit(&self, x: &ModuleRep) -> SparseMatrix {
        let dx = x.dim();
        let mut trip = Vec::new();
        for (r, c) in self.coset_reps.iter().enumerate() {
            trip.extend(x.act(c).triplets().into_iter().map(|(i, j, v)| (i, r * dx + j, v)));
        }
        SparseMatrix::from_triplets(dx, self.rank() * dx, trip)
    }

    /// The unit `X → Res G(X)`, `x ↦ 1 ⊗ x`, for a `B`-module `X`.
    pub fn unit(&self, x: &ModuleRep) -> SparseMatrix {
        let dx = x.dim();
        let x_basis: Vec<SparseMatrix> = (0..self.map.source.dim()).map(|b| x.act_basis(b)).collect();
        let blocks = self.block_action(&x_basis, self.map.target.unit(), dx);
        let mut trip = Vec::new();
        for (s, blk) in blocks.iter().enumerate() {
            trip.extend(blk.triplets().into_iter().map(|(i, j, v)| (s * dx + i, j, v)));
        }
        SparseMatrix::from_triplets(self.rank() * dx, dx, trip)
    }

    /// `G(f) = id ⊗ f` for a `B`-linear `f: X → Y`.
    pub fn functor(&self, f: &SparseMatrix) -> SparseMatrix {
        SparseMatrix::identity(self.rank()).kron(f)
    }
}

/// `A ⊗_B V` as the quotient of `A ⊗ V` (index `a · dim V + v`) by the span of
/// `a ι(b) ⊗ v − a ⊗ b·v` over basis elements, with left multiplication on
/// the first factor. Returns the module and the projection from `A ⊗ V`.
pub fn induced_module_quotient(map: &AlgebraMap, v: &ModuleRep) -> Result<(ModuleRep, SparseMatrix), AlgError> {
    if !Arc::ptr_eq(v.algebra(), &map.source) {
        return Err(AlgError::AlgebraMismatch(v.algebra().name().into(), map.source.name().into()));
    }
    let a = &map.target;
    let (na, nb, dv) = (a.dim(), map.source.dim(), v.dim());
    let mut rels = Vec::with_capacity(na * nb * dv);
    for b in 0..nb {
        let ib = map.apply(&SparseVec::unit(b));
        let rho = v.act_basis(b);
        for ai in 0..na {
            let aib = a.mul(&SparseVec::unit(ai), &ib);
            for x in 0..dv {
                let left = aib.kron(&SparseVec::unit(x), dv);
                let right = SparseVec::unit(ai).kron(rho.col(x), dv);
                let r = left.sub(&right);
                if !r.is_zero() {
                    rels.push(r);
                }
            }
        }
    }
    let id = SparseMatrix::identity(dv);
    let gens: Vec<SparseMatrix> = a.generation()?.gens.iter().map(|g| a.left_mult_matrix(g).kron(&id)).collect();
    let big = ModuleRep::new_unchecked(a.clone(), na * dv, gens)?;
    big.quotient(&rels)
}
