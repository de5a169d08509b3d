use std::sync::Arc;

use crate::algcore::{module_map_kernel, ModuleRep};
use crate::exactlin::{inverse, rank, Echelon, SparseMatrix};

use super::{Budget, RelError, ResolventPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolutionKind {
    Bar,
    IteratedCover,
    /// Total complex of the tensor product of two resolutions.
    Tensor,
}

impl std::fmt::Display for ResolutionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ResolutionKind::Bar => "bar",
            ResolutionKind::IteratedCover => "cover",
            ResolutionKind::Tensor => "tensor",
        })
    }
}

/// `… → P_1 → P_0 → V → 0` up to `P_top`, with a contracting homotopy that
/// is linear over the small algebra.
///
/// `differentials[0]` is the augmentation `P_0 → V` and `differentials[n]`
/// maps `P_n → P_{n−1}`. `homotopy[0]` maps `V → P_0` and `homotopy[n + 1]`
/// maps `P_n → P_{n+1}` for `n < top`.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub target: ModuleRep,
    pub terms: Vec<ModuleRep>,
    pub differentials: Vec<SparseMatrix>,
    pub homotopy: Vec<SparseMatrix>,
    /// For each term, the small-algebra module it is induced from, if any.
    pub induced_from: Vec<Option<ModuleRep>>,
}

impl Resolution {
    pub fn top(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term_dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }

    /// Codomain of `differentials[n]`.
    pub fn codomain(&self, n: usize) -> &ModuleRep {
        if n == 0 {
            &self.target
        } else {
            &self.terms[n - 1]
        }
    }
}

pub fn bar_resolution(pair: &ResolventPair, v: &ModuleRep, maxdeg: usize) -> Result<Resolution, RelError> {
    resolution_of_kind(pair, v, maxdeg, ResolutionKind::Bar, &Budget::unlimited())
}

pub fn iterated_cover_resolution(pair: &ResolventPair, v: &ModuleRep, maxdeg: usize) -> Result<Resolution, RelError> {
    resolution_of_kind(pair, v, maxdeg, ResolutionKind::IteratedCover, &Budget::unlimited())
}

/// Builds `P_0, …, P_maxdeg` of the requested kind.
pub fn resolution_of_kind(
    pair: &ResolventPair,
    v: &ModuleRep,
    maxdeg: usize,
    kind: ResolutionKind,
    budget: &Budget,
) -> Result<Resolution, RelError> {
    pair.check_big(v)?;
    match kind {
        ResolutionKind::Bar => bar(pair, v, maxdeg, budget),
        ResolutionKind::IteratedCover => cover(pair, v, maxdeg, budget),
        ResolutionKind::Tensor => Err(RelError::Resolution("use tensor_resolution".into())),
    }
}

/// `P_n = G(P_{n−1})`, `d_n = ε_{P_{n−1}} − G(d_{n−1})`, homotopy `η_{P_n}`.
fn bar(pair: &ResolventPair, v: &ModuleRep, maxdeg: usize, budget: &Budget) -> Result<Resolution, RelError> {
    let ind = pair.induction();
    let mut terms: Vec<ModuleRep> = Vec::new();
    let mut diffs: Vec<SparseMatrix> = Vec::new();
    let mut homotopy = Vec::new();
    let mut from = Vec::new();
    for n in 0..=maxdeg {
        budget.check()?;
        let prev = if n == 0 { v } else { &terms[n - 1] };
        let m = pair.restrict(prev)?;
        let p = ind.induce(&m)?;
        let eps = ind.counit(prev);
        let d = if n == 0 { eps } else { eps.sub(&ind.functor(&diffs[n - 1])) };
        homotopy.push(ind.unit(&m));
        terms.push(p);
        diffs.push(d);
        from.push(Some(m));
    }
    Ok(Resolution { kind: ResolutionKind::Bar, target: v.clone(), terms, differentials: diffs, homotopy, induced_from: from })
}

/// `K_0 = V`, `P_n = G(K_n)`, `K_{n+1} = ker(ε_{K_n})`, `d_n = ι ∘ ε_{K_n}`.
fn cover(pair: &ResolventPair, v: &ModuleRep, maxdeg: usize, budget: &Budget) -> Result<Resolution, RelError> {
    let ind = pair.induction();
    let mut kernel = v.clone();
    let mut inc = SparseMatrix::identity(v.dim());
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    let mut homotopy: Vec<SparseMatrix> = Vec::new();
    let mut from = Vec::new();
    // η_{K_n} ε_{K_n} on P_n, needed for the next homotopy component.
    let mut prev_proj: Option<SparseMatrix> = None;
    for n in 0..=maxdeg {
        budget.check()?;
        let m = pair.restrict(&kernel)?;
        let p = ind.induce(&m)?;
        let eps = ind.counit(&kernel);
        let eta = ind.unit(&m);
        match prev_proj.take() {
            None => homotopy.push(eta.clone()),
            Some(proj) => {
                let retract = left_inverse(&inc);
                homotopy.push(eta.mul(&retract).mul(&proj));
            }
        }
        diffs.push(inc.mul(&eps));
        if n < maxdeg {
            let k = module_map_kernel(&eps, &p, &kernel)?;
            prev_proj = Some(SparseMatrix::identity(p.dim()).sub(&eta.mul(&eps)));
            kernel = k.module;
            inc = k.inclusion;
        }
        terms.push(p);
        from.push(Some(m));
    }
    Ok(Resolution {
        kind: ResolutionKind::IteratedCover,
        target: v.clone(),
        terms,
        differentials: diffs,
        homotopy,
        induced_from: from,
    })
}

/// A matrix `L` with `L · inc = id`, reading coordinates at pivot rows.
fn left_inverse(inc: &SparseMatrix) -> SparseMatrix {
    let mut ech = Echelon::new(inc.nrows());
    let pivots: Vec<usize> = inc.columns().iter().map(|c| ech.insert(c).expect("independent columns")).collect();
    let square = inverse(&inc.select_rows(&pivots)).expect("pivot rows are independent");
    let trip = square
        .triplets()
        .into_iter()
        .map(|(i, k, x)| (i, pivots[k], x));
    SparseMatrix::from_triplets(inc.ncols(), inc.nrows(), trip)
}

/// Total complex of `P ⊗ P'` over the tensor pair, augmented to `V ⊗ V'`,
/// with differential `d ⊗ 1 + (−1)^i 1 ⊗ d'` and homotopy
/// `s ⊗ 1 + (s_{−1} d_0) ⊗ s'`. Built up to the smaller of the two tops.
pub fn tensor_resolution(pair: &ResolventPair, a: &Resolution, b: &Resolution) -> Result<Resolution, RelError> {
    let ab = pair.big();
    let Some((fa, fb)) = ab.factors() else {
        return Err(RelError::Resolution("pair is not a tensor pair".into()));
    };
    if !Arc::ptr_eq(fa, a.target.algebra()) || !Arc::ptr_eq(fb, b.target.algebra()) {
        return Err(RelError::WrongAlgebra { expected: ab.name().into(), found: a.target.algebra().name().into() });
    }
    let top = a.top().min(b.top());
    let target = a.target.outer_tensor(&b.target, ab.clone())?;
    // Component (i, n − i) of T_n starts at offsets[n][i].
    let mut terms = Vec::new();
    let mut offsets: Vec<Vec<usize>> = Vec::new();
    for n in 0..=top {
        let mut off = Vec::new();
        let mut acc = 0;
        let mut sum: Option<ModuleRep> = None;
        for i in 0..=n {
            off.push(acc);
            let t = a.terms[i].outer_tensor(&b.terms[n - i], ab.clone())?;
            acc += t.dim();
            sum = Some(match sum {
                None => t,
                Some(s) => s.direct_sum(&t)?,
            });
        }
        offsets.push(off);
        terms.push(sum.expect("at least one component"));
    }
    let dim_of = |n: usize| terms[n].dim();
    let block = |trip: &mut Vec<_>, m: &SparseMatrix, r0: usize, c0: usize| {
        trip.extend(m.triplets().into_iter().map(|(r, c, x)| (r0 + r, c0 + c, x)));
    };

    let mut diffs = vec![a.differentials[0].kron(&b.differentials[0])];
    for n in 1..=top {
        let mut trip = Vec::new();
        for i in 0..=n {
            let j = n - i;
            let src = offsets[n][i];
            if i >= 1 {
                let m = a.differentials[i].kron(&SparseMatrix::identity(b.terms[j].dim()));
                block(&mut trip, &m, offsets[n - 1][i - 1], src);
            }
            if j >= 1 {
                let mut m = SparseMatrix::identity(a.terms[i].dim()).kron(&b.differentials[j]);
                if i % 2 == 1 {
                    m = m.scale(&crate::exactlin::Rational::from(-1));
                }
                block(&mut trip, &m, offsets[n - 1][i], src);
            }
        }
        diffs.push(SparseMatrix::from_triplets(dim_of(n - 1), dim_of(n), trip));
    }

    let mut homotopy = vec![a.homotopy[0].kron(&b.homotopy[0])];
    let a_proj = a.homotopy[0].mul(&a.differentials[0]);
    for n in 0..top {
        let mut trip = Vec::new();
        for i in 0..=n {
            let j = n - i;
            let src = offsets[n][i];
            let m = a.homotopy[i + 1].kron(&SparseMatrix::identity(b.terms[j].dim()));
            block(&mut trip, &m, offsets[n + 1][i + 1], src);
            if i == 0 {
                let m = a_proj.kron(&b.homotopy[j + 1]);
                block(&mut trip, &m, offsets[n + 1][0], src);
            }
        }
        homotopy.push(SparseMatrix::from_triplets(dim_of(n + 1), dim_of(n), trip));
    }
    let induced_from = vec![None; terms.len()];
    Ok(Resolution { kind: ResolutionKind::Tensor, target, terms, differentials: diffs, homotopy, induced_from })
}

/// Outcome of [`verify_resolution`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionCheck {
    pub linear: bool,
    pub complex: bool,
    pub exact: bool,
    pub split: bool,
    pub failures: Vec<String>,
}

impl ResolutionCheck {
    pub fn ok(&self) -> bool {
        self.linear && self.complex && self.exact && self.split
    }
}

/// Checks that every differential is `A`-linear, `d∘d = 0`, exactness up to
/// `P_{top−1}` by ranks, and that the stored homotopy is `B`-linear with
/// `d s + s d = id`, which exhibits a `B`-splitting of every short exact
/// piece.
pub fn verify_resolution(pair: &ResolventPair, res: &Resolution) -> Result<ResolutionCheck, RelError> {
    let mut failures = Vec::new();
    let top = res.top();
    let mut linear = true;
    for n in 0..=top {
        if !res.terms[n].is_intertwiner(res.codomain(n), &res.differentials[n]) {
            linear = false;
            failures.push(format!("d_{n} is not linear"));
        }
    }
    let mut complex = true;
    for n in 1..=top {
        if !res.differentials[n - 1].mul(&res.differentials[n]).is_zero() {
            complex = false;
            failures.push(format!("d_{} d_{n} ≠ 0", n - 1));
        }
    }
    let ranks: Vec<usize> = res.differentials.iter().map(rank).collect();
    let mut exact = ranks[0] == res.target.dim();
    if !exact {
        failures.push("augmentation is not onto".into());
    }
    for n in 0..top {
        if ranks[n] + ranks[n + 1] != res.terms[n].dim() {
            exact = false;
            failures.push(format!("not exact at P_{n}"));
        }
    }
    let small_target = pair.restrict(&res.target)?;
    let small_terms: Vec<ModuleRep> = res.terms.iter().map(|t| pair.restrict(t)).collect::<Result<_, _>>()?;
    let mut split = true;
    for (k, s) in res.homotopy.iter().enumerate() {
        let (src, dst) = if k == 0 { (&small_target, &small_terms[0]) } else { (&small_terms[k - 1], &small_terms[k]) };
        if !src.is_intertwiner(dst, s) {
            split = false;
            failures.push(format!("homotopy component {k} is not linear over the subalgebra"));
        }
    }
    if res.differentials[0].mul(&res.homotopy[0]) != SparseMatrix::identity(res.target.dim()) {
        split = false;
        failures.push("augmentation has no section".into());
    }
    for n in 0..top {
        let mut lhs = res.differentials[n + 1].mul(&res.homotopy[n + 1]);
        lhs = lhs.add(&res.homotopy[n].mul(&res.differentials[n]));
        if lhs != SparseMatrix::identity(res.terms[n].dim()) {
            split = false;
            failures.push(format!("d s + s d ≠ id on P_{n}"));
        }
    }
    Ok(ResolutionCheck { linear, complex, exact, split, failures })
}
