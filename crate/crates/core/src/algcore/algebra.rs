use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::exactlin::{Echelon, Rational, SparseMatrix, SparseVec, StructureConstants};

use super::AlgError;

/// A finite-dimensional associative algebra over ℚ given by structure
/// constants: `e_i · e_j = mult[i * dim + j]`.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    dim: usize,
    labels: Vec<String>,
    mult: Vec<SparseVec>,
    unit: SparseVec,
    explicit_gens: Option<Vec<SparseVec>>,
    factors: Option<(Arc<Algebra>, Arc<Algebra>)>,
    generation: OnceLock<Result<Generation, AlgError>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.name, self.dim)
    }
}

/// A spanning family of words in the generators.
///
/// `words[0]` is the unit; `words[k] = words[parent] · gens[gen]`.
/// `to_words` rewrites standard coordinates as word coordinates.
#[derive(Debug, Clone)]
pub struct Generation {
    pub gens: Vec<SparseVec>,
    pub words: Vec<(usize, usize)>,
    pub word_vecs: Vec<SparseVec>,
    pub to_words: SparseMatrix,
}

/// One failed algebra axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.witness)
    }
}

impl Algebra {
    pub fn new(name: impl Into<String>, labels: Vec<String>, mult: Vec<SparseVec>, unit: SparseVec) -> Result<Self, AlgError> {
        let dim = labels.len();
        if mult.len() != dim * dim {
            return Err(AlgError::Shape(format!("expected {} products, got {}", dim * dim, mult.len())));
        }
        for v in mult.iter().chain(std::iter::once(&unit)) {
            if v.max_index().is_some_and(|m| m >= dim) {
                return Err(AlgError::Shape("structure constant index out of range".into()));
            }
        }
        Ok(Algebra {
            name: name.into(),
            dim,
            labels,
            mult,
            unit,
            explicit_gens: None,
            factors: None,
            generation: OnceLock::new(),
        })
    }

    /// Fixes the generating set used for module actions.
    pub fn with_generators(mut self, gens: Vec<SparseVec>) -> Self {
        self.explicit_gens = Some(gens);
        self.generation = OnceLock::new();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn factors(&self) -> Option<&(Arc<Algebra>, Arc<Algebra>)> {
        self.factors.as_ref()
    }

    /// Product of two elements.
    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                pairs.extend(self.product(*i, *j).iter().map(|(k, z)| (*k, z * &xy)));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &SparseVec) -> SparseMatrix {
        SparseMatrix::from_columns(self.dim, (0..self.dim).map(|j| self.mul(a, &SparseVec::unit(j))).collect())
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult_matrix(&self, a: &SparseVec) -> SparseMatrix {
        SparseMatrix::from_columns(self.dim, (0..self.dim).map(|j| self.mul(&SparseVec::unit(j), a)).collect())
    }

    pub fn basis_label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Generators and a spanning word family. Explicit generators are used
    /// when given; otherwise basis elements are added greedily until they
    /// generate.
    pub fn generation(&self) -> Result<&Generation, AlgError> {
        self.generation
            .get_or_init(|| match &self.explicit_gens {
                Some(g) => close_words(self, g.clone()),
                None => greedy_generation(self),
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    pub fn generators(&self) -> &[SparseVec] {
        &self.generation().expect("algebra is not generated by its generator set").gens
    }

    /// Lists every violated associativity or unit identity. Full basis triples
    /// are checked up to dimension 64, basis pairs times generators beyond.
    pub fn verify(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.dim;
        for i in 0..n {
            let e = SparseVec::unit(i);
            if self.mul(&self.unit, &e) != e {
                out.push(Violation { axiom: "left unit".into(), witness: self.labels[i].clone() });
            }
            if self.mul(&e, &self.unit) != e {
                out.push(Violation { axiom: "right unit".into(), witness: self.labels[i].clone() });
            }
        }
        let thirds: Vec<SparseVec> = if n <= 64 {
            (0..n).map(SparseVec::unit).collect()
        } else {
            match self.generation() {
                Ok(g) => g.gens.clone(),
                Err(e) => {
                    out.push(Violation { axiom: "generation".into(), witness: e.to_string() });
                    return out;
                }
            }
        };
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for (k, c) in thirds.iter().enumerate() {
                    let left = self.mul(ij, c);
                    let jk = self.mul(&SparseVec::unit(j), c);
                    let right = self.mul(&SparseVec::unit(i), &jk);
                    if left != right {
                        let third = if n <= 64 { self.labels[k].clone() } else { format!("generator {k}") };
                        out.push(Violation {
                            axiom: "associativity".into(),
                            witness: format!("({}, {}, {})", self.labels[i], self.labels[j], third),
                        });
                    }
                }
            }
        }
        out
    }
}

impl StructureConstants for Algebra {
    fn dim(&self) -> usize {
        self.dim
    }

    fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }
}

/// Closes `{1}` under right multiplication by the generators.
fn close_words(alg: &Algebra, gens: Vec<SparseVec>) -> Result<Generation, AlgError> {
    let n = alg.dim;
    let mut ech = Echelon::new(n);
    let mut words = vec![(usize::MAX, usize::MAX)];
    let mut vecs = vec![alg.unit.clone()];
    if ech.insert(&alg.unit).is_none() {
        return Err(AlgError::Shape("zero unit".into()));
    }
    let mut k = 0;
    while k < vecs.len() && vecs.len() < n {
        for (gi, g) in gens.iter().enumerate() {
            let w = alg.mul(&vecs[k], g);
            if ech.insert(&w).is_some() {
                words.push((k, gi));
                vecs.push(w);
            }
        }
        k += 1;
    }
    if vecs.len() < n {
        return Err(AlgError::NotGenerated { span: vecs.len(), dim: n });
    }
    let m = SparseMatrix::from_columns(n, vecs.clone());
    let to_words = crate::exactlin::inverse(&m).expect("word family is a basis");
    Ok(Generation { gens, words, word_vecs: vecs, to_words })
}

fn greedy_generation(alg: &Algebra) -> Result<Generation, AlgError> {
    let n = alg.dim;
    let mut gens: Vec<SparseVec> = Vec::new();
    let mut span = span_of(alg, &gens);
    for i in 0..n {
        if span.rank() == n {
            break;
        }
        let e = SparseVec::unit(i);
        if !span.contains(&e) {
            gens.push(e);
            span = span_of(alg, &gens);
        }
    }
    close_words(alg, gens)
}

fn span_of(alg: &Algebra, gens: &[SparseVec]) -> Echelon {
    let mut ech = Echelon::new(alg.dim);
    let mut vecs = vec![alg.unit.clone()];
    ech.insert(&alg.unit);
    let mut k = 0;
    while k < vecs.len() {
        for g in gens {
            let w = alg.mul(&vecs[k], g);
            if ech.insert(&w).is_some() {
                vecs.push(w);
            }
        }
        k += 1;
    }
    ech
}

/// Structure constants of `A ⊗ B` on the product basis `i * dim B + j`.
/// Generators are those of `A` tensored with 1, then 1 tensored with those of `B`.
pub fn tensor_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<Algebra, AlgError> {
    let (na, nb) = (a.dim, b.dim);
    let n = na * nb;
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                for l in 0..nb {
                    mult.push(a.product(i, k).kron(b.product(j, l), nb));
                }
            }
        }
    }
    // mult is ordered by (i, j, k, l) = ((i, j), (k, l)) already.
    let labels = a
        .labels
        .iter()
        .flat_map(|x| b.labels.iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let unit = a.unit.kron(&b.unit, nb);
    let gens: Vec<SparseVec> = a
        .generation()?
        .gens
        .iter()
        .map(|g| g.kron(&b.unit, nb))
        .chain(b.generation()?.gens.iter().map(|g| a.unit.kron(g, nb)))
        .collect();
    let mut alg = Algebra::new(format!("{}⊗{}", a.name, b.name), labels, mult, unit)?.with_generators(gens);
    alg.factors = Some((a.clone(), b.clone()));
    Ok(alg)
}

/// The one-dimensional algebra ℚ.
pub fn ground_field() -> Algebra {
    Algebra::new("k", vec!["1".into()], vec![SparseVec::unit(0)], SparseVec::unit(0))
        .expect("valid")
        .with_generators(Vec::new())
}

/// Scalar `c` times the unit.
pub fn scalar_element(alg: &Algebra, c: &Rational) -> SparseVec {
    alg.unit().scale(c)
}
