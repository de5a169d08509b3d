use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::exactlin::{Echelon, Rational, SparseMatrix, SparseVec};

use super::{AlgError, Algebra, AlgebraMap};

/// A finite-dimensional left module. The action is stored on the algebra's
/// generators; `act` extends it to every element through the word basis.
#[derive(Clone)]
pub struct ModuleRep {
    algebra: Arc<Algebra>,
    dim: usize,
    gens: Vec<SparseMatrix>,
    words: Arc<OnceLock<Vec<SparseMatrix>>>,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleRep(dim {} over {})", self.dim, self.algebra.name())
    }
}

impl ModuleRep {
    /// Module from generator action matrices; the module axioms are checked.
    pub fn new(algebra: Arc<Algebra>, dim: usize, gens: Vec<SparseMatrix>) -> Result<Self, AlgError> {
        let m = Self::new_unchecked(algebra, dim, gens)?;
        m.verify()?;
        Ok(m)
    }

    /// Module from generator action matrices without the axiom check.
    pub fn new_unchecked(algebra: Arc<Algebra>, dim: usize, gens: Vec<SparseMatrix>) -> Result<Self, AlgError> {
        let ng = algebra.generation()?.gens.len();
        if gens.len() != ng {
            return Err(AlgError::Shape(format!("{} generator matrices for {ng} generators", gens.len())));
        }
        if gens.iter().any(|g| g.nrows() != dim || g.ncols() != dim) {
            return Err(AlgError::Shape(format!("action matrices must be {dim}×{dim}")));
        }
        Ok(ModuleRep { algebra, dim, gens, words: Arc::new(OnceLock::new()) })
    }

    /// Module from a linear rule `a ↦ ρ(a)`, sampled on the generators.
    pub fn from_action(
        algebra: Arc<Algebra>,
        dim: usize,
        rho: impl Fn(&SparseVec) -> SparseMatrix,
    ) -> Result<Self, AlgError> {
        let gens = algebra.generation()?.gens.iter().map(&rho).collect();
        Self::new(algebra, dim, gens)
    }

    /// One-dimensional module through a character `χ` (a row vector).
    pub fn from_character(algebra: Arc<Algebra>, chi: &SparseVec) -> Result<Self, AlgError> {
        Self::from_action(algebra, 1, |a| SparseMatrix::scalar(1, &a.dot(chi)))
    }

    /// The left regular module.
    pub fn regular(algebra: Arc<Algebra>) -> Result<Self, AlgError> {
        let n = algebra.dim();
        let alg = algebra.clone();
        Self::from_action(algebra, n, move |a| alg.left_mult_matrix(a))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Action matrices of the algebra generators, in generator order.
    pub fn generator_actions(&self) -> &[SparseMatrix] {
        &self.gens
    }

    fn word_actions(&self) -> &[SparseMatrix] {
        self.words.get_or_init(|| {
            let g = self.algebra.generation().expect("module algebra is generated");
            let mut out: Vec<SparseMatrix> = Vec::with_capacity(g.words.len());
            out.push(SparseMatrix::identity(self.dim));
            for &(parent, gen) in &g.words[1..] {
                let m = out[parent].mul(&self.gens[gen]);
                out.push(m);
            }
            out
        })
    }

    /// `ρ(a)` for an arbitrary algebra element.
    pub fn act(&self, a: &SparseVec) -> SparseMatrix {
        let g = self.algebra.generation().expect("module algebra is generated");
        let coords = g.to_words.mul_vec(a);
        let words = self.word_actions();
        let mut acc = SparseMatrix::zeros(self.dim, self.dim);
        for (k, c) in coords.iter() {
            acc = acc.add_scaled(&words[*k], c);
        }
        acc
    }

    pub fn act_basis(&self, i: usize) -> SparseMatrix {
        self.act(&SparseVec::unit(i))
    }

    /// `a · v`.
    pub fn apply(&self, a: &SparseVec, v: &SparseVec) -> SparseVec {
        self.act(a).mul_vec(v)
    }

    /// Checks `ρ(1) = id` and `ρ(e_i)ρ(g) = ρ(e_i g)` for every basis element
    /// `e_i` and generator `g`; together these force multiplicativity.
    pub fn verify(&self) -> Result<(), AlgError> {
        let alg = &self.algebra;
        if self.act(alg.unit()) != SparseMatrix::identity(self.dim) {
            return Err(AlgError::NotModule("unit does not act as the identity".into()));
        }
        let gens = &alg.generation()?.gens;
        for i in 0..alg.dim() {
            let ei = SparseVec::unit(i);
            let rho_i = self.act(&ei);
            for (k, g) in gens.iter().enumerate() {
                let lhs = rho_i.mul(&self.gens[k]);
                let rhs = self.act(&alg.mul(&ei, g));
                if lhs != rhs {
                    return Err(AlgError::NotModule(format!("{} · generator {k}", alg.labels()[i])));
                }
            }
        }
        Ok(())
    }

    /// Restriction along an algebra map into this module's algebra.
    pub fn restrict(&self, map: &AlgebraMap) -> Result<ModuleRep, AlgError> {
        if !Arc::ptr_eq(&map.target, &self.algebra) && map.target.name() != self.algebra.name() {
            return Err(AlgError::AlgebraMismatch(map.target.name().into(), self.algebra.name().into()));
        }
        let own = &self.algebra.generation()?.gens;
        let gens = map
            .generator_images()
            .iter()
            .map(|g| match own.iter().position(|x| x == g) {
                Some(k) => self.gens[k].clone(),
                None => self.act(g),
            })
            .collect();
        ModuleRep::new_unchecked(map.source.clone(), self.dim, gens)
    }

    /// The same vector space with the action pulled back along an algebra
    /// map, checked.
    pub fn pullback(&self, map: &AlgebraMap) -> Result<ModuleRep, AlgError> {
        let m = self.restrict(map)?;
        m.verify()?;
        Ok(m)
    }

    /// Outer tensor product over `A ⊗ B`, where `ab` was built by
    /// `tensor_algebra(self.algebra, other.algebra)`.
    pub fn outer_tensor(&self, other: &ModuleRep, ab: Arc<Algebra>) -> Result<ModuleRep, AlgError> {
        let Some((a, b)) = ab.factors() else {
            return Err(AlgError::Shape("not a tensor algebra".into()));
        };
        if !Arc::ptr_eq(a, &self.algebra) || !Arc::ptr_eq(b, &other.algebra) {
            return Err(AlgError::AlgebraMismatch(ab.name().into(), format!("{}⊗{}", self.algebra.name(), other.algebra.name())));
        }
        let ia = SparseMatrix::identity(self.dim);
        let ib = SparseMatrix::identity(other.dim);
        let gens = self
            .gens
            .iter()
            .map(|g| g.kron(&ib))
            .chain(other.gens.iter().map(|g| ia.kron(g)))
            .collect();
        ModuleRep::new_unchecked(ab, self.dim * other.dim, gens)
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep, AlgError> {
        self.check_same_algebra(other)?;
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.direct_sum(b)).collect();
        ModuleRep::new_unchecked(self.algebra.clone(), self.dim + other.dim, gens)
    }

    pub fn check_same_algebra(&self, other: &ModuleRep) -> Result<(), AlgError> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(AlgError::AlgebraMismatch(self.algebra.name().into(), other.algebra.name().into()))
        }
    }

    /// Submodule spanned by the columns of `inc` (assumed independent and
    /// stable); the action is expressed in those columns.
    pub fn submodule(&self, inc: &SparseMatrix) -> Result<ModuleRep, AlgError> {
        let k = inc.ncols();
        let coords = SubspaceCoords::new(inc);
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut cols = Vec::with_capacity(k);
            for c in inc.columns() {
                let img = g.mul_vec(c);
                cols.push(coords.coords(&img).ok_or_else(|| AlgError::NotModule("subspace is not stable".into()))?);
            }
            gens.push(SparseMatrix::from_columns(k, cols));
        }
        ModuleRep::new_unchecked(self.algebra.clone(), k, gens)
    }

    /// Quotient by the span of `sub`. The quotient basis is the set of
    /// standard basis vectors at non-pivot columns of the echelonized span;
    /// returns the module and the projection matrix.
    pub fn quotient(&self, sub: &[SparseVec]) -> Result<(ModuleRep, SparseMatrix), AlgError> {
        let mut ech = Echelon::new(self.dim);
        ech.insert_all(sub);
        let free = ech.free_columns();
        let mut pos = vec![usize::MAX; self.dim];
        for (k, c) in free.iter().enumerate() {
            pos[*c] = k;
        }
        let project = |v: &SparseVec| -> SparseVec {
            let r = ech.reduce(v);
            SparseVec::from_sorted_unchecked(r.iter().map(|(i, x)| (pos[*i], x.clone())).collect())
        };
        let q = free.len();
        let proj = SparseMatrix::from_columns(q, (0..self.dim).map(|i| project(&SparseVec::unit(i))).collect());
        for v in sub {
            for g in &self.gens {
                if !project(&g.mul_vec(v)).is_zero() {
                    return Err(AlgError::NotModule("relations are not a submodule".into()));
                }
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| SparseMatrix::from_columns(q, free.iter().map(|c| project(g.col(*c))).collect()))
            .collect();
        Ok((ModuleRep::new_unchecked(self.algebra.clone(), q, gens)?, proj))
    }

    /// Whether `f: self → other` commutes with all generator actions.
    pub fn is_intertwiner(&self, other: &ModuleRep, f: &SparseMatrix) -> bool {
        f.nrows() == other.dim
            && f.ncols() == self.dim
            && self.gens.iter().zip(&other.gens).all(|(a, b)| f.mul(a) == b.mul(f))
    }

    /// Same algebra and dimension with replacement generator matrices, unchecked.
    pub fn with_generator_actions(&self, gens: Vec<SparseMatrix>) -> Result<ModuleRep, AlgError> {
        ModuleRep::new_unchecked(self.algebra.clone(), self.dim, gens)
    }

    /// Trace of `ρ(a)`.
    pub fn character(&self, a: &SparseVec) -> Rational {
        let m = self.act(a);
        (0..self.dim).map(|i| m.get(i, i)).sum()
    }
}

/// Coordinates with respect to a linearly independent family of columns,
/// read off at pivot positions of its echelon form.
pub(crate) struct SubspaceCoords {
    ech: Echelon,
    pos: std::collections::HashMap<usize, usize>,
    to_coords: SparseMatrix,
}

impl SubspaceCoords {
    pub(crate) fn new(basis: &SparseMatrix) -> Self {
        let n = basis.nrows();
        let mut ech = Echelon::new(n);
        let mut pivots = Vec::with_capacity(basis.ncols());
        for c in basis.columns() {
            pivots.push(ech.insert(c).expect("subspace basis is linearly independent"));
        }
        let square = basis.select_rows(&pivots);
        let to_coords = crate::exactlin::inverse(&square).expect("pivot rows are independent");
        let pos = pivots.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        SubspaceCoords { ech, pos, to_coords }
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub(crate) fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.ech.contains(v) {
            return None;
        }
        let head = SparseVec::from_pairs(v.iter().filter_map(|(i, x)| self.pos.get(i).map(|k| (*k, x.clone()))).collect());
        Some(self.to_coords.mul_vec(&head))
    }
}
