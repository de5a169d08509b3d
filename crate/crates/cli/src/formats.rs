//! On-disk formats and the JSON encodings shared by every report.

use std::path::Path;
use std::sync::Arc;

use hopfdy::algcore::{Algebra, Violation};
use hopfdy::exactlin::{Rational, SparseMatrix, SparseVec, TensorElement};
use hopfdy::hopfcore::HopfAlgebra;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

/// A Hopf algebra by sparse structure constants.
///
/// `mult` holds `[i, j, k, c]` for `e_i e_j ∋ c e_k`, `comult` holds
/// `[i, j, k, c]` for `Δ(e_i) ∋ c e_j ⊗ e_k`, and `antipode` holds
/// `[row, col, c]` for `S(e_col) ∋ c e_row`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFile {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<(usize, String)>,
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<(usize, String)>,
    pub antipode: Vec<(usize, usize, String)>,
}

/// A degree-2 tensor such as an R-matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorFile {
    pub format_version: u32,
    pub dim: usize,
    pub terms: Vec<(Vec<usize>, String)>,
}

/// Exact `"p/q"` form, denominator always written.
pub fn q(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Result<Rational, CliError> {
    s.parse().map_err(|e: hopfdy::exactlin::ParseRationalError| CliError::InvalidAlgebra(e.to_string()))
}

/// `[[i, j, …], "p/q"]` pairs in lexicographic order.
pub fn tensor_json(t: &TensorElement) -> Value {
    Value::Array(t.terms().map(|(idx, c)| json!([idx, q(c)])).collect())
}

pub fn violations_json(vs: &[Violation]) -> Value {
    Value::Array(vs.iter().map(|v| json!({"axiom": v.axiom, "witness": v.witness})).collect())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl HopfFile {
    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        let alg = h.algebra();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                mult.extend(alg.product(i, j).iter().map(|(k, c)| (i, j, *k, q(c))));
            }
        }
        let comult = h
            .comult_table()
            .iter()
            .enumerate()
            .flat_map(|(i, d)| d.iter().map(move |(p, c)| (i, p / n, p % n, q(c))))
            .collect();
        let pairs = |v: &SparseVec| v.iter().map(|(i, c)| (*i, q(c))).collect();
        HopfFile {
            format_version: FORMAT_VERSION,
            name: Some(h.name().to_string()),
            dim: n,
            basis_labels: alg.labels().to_vec(),
            mult,
            unit: pairs(h.unit()),
            comult,
            counit: pairs(h.counit_row()),
            antipode: h.antipode().triplets().into_iter().map(|(r, c, x)| (r, c, q(&x))).collect(),
        }
    }

    /// Assembles the Hopf algebra after shape checks; axioms are not checked here.
    pub fn to_hopf(&self) -> Result<HopfAlgebra, CliError> {
        let n = self.dim;
        let bad = |m: String| CliError::InvalidAlgebra(m);
        if self.format_version != FORMAT_VERSION {
            return Err(bad(format!("unsupported format_version {}", self.format_version)));
        }
        if n == 0 || self.basis_labels.len() != n {
            return Err(bad(format!("{} labels for dimension {n}", self.basis_labels.len())));
        }
        let check = |idx: &[usize], what: &str| -> Result<(), CliError> {
            match idx.iter().find(|&&i| i >= n) {
                Some(i) => Err(bad(format!("{what} index {i} out of range"))),
                None => Ok(()),
            }
        };
        let mut mult = vec![Vec::new(); n * n];
        for (i, j, k, c) in &self.mult {
            check(&[*i, *j, *k], "mult")?;
            mult[i * n + j].push((*k, parse_q(c)?));
        }
        let mut comult = vec![Vec::new(); n];
        for (i, j, k, c) in &self.comult {
            check(&[*i, *j, *k], "comult")?;
            comult[*i].push((j * n + k, parse_q(c)?));
        }
        let sparse = |v: &[(usize, String)], what: &str| -> Result<SparseVec, CliError> {
            let mut pairs = Vec::with_capacity(v.len());
            for (i, c) in v {
                check(&[*i], what)?;
                pairs.push((*i, parse_q(c)?));
            }
            Ok(SparseVec::from_pairs(pairs))
        };
        let unit = sparse(&self.unit, "unit")?;
        let counit = sparse(&self.counit, "counit")?;
        let mut trip = Vec::with_capacity(self.antipode.len());
        for (r, c, x) in &self.antipode {
            check(&[*r, *c], "antipode")?;
            trip.push((*r, *c, parse_q(x)?));
        }
        let name = self.name.clone().unwrap_or_else(|| "H".into());
        let alg = Algebra::new(name, self.basis_labels.clone(), mult.into_iter().map(SparseVec::from_pairs).collect(), unit)?;
        Ok(HopfAlgebra::new(
            Arc::new(alg),
            comult.into_iter().map(SparseVec::from_pairs).collect(),
            counit,
            SparseMatrix::from_triplets(n, n, trip),
        )?)
    }

    /// SHA-256 of the canonical serialization.
    pub fn digest(&self) -> String {
        sha256_hex(&serde_json::to_vec(self).expect("serializable"))
    }
}

impl TensorFile {
    pub fn from_tensor(t: &TensorElement) -> Self {
        TensorFile {
            format_version: FORMAT_VERSION,
            dim: t.dim(),
            terms: t.terms().map(|(idx, c)| (idx, q(c))).collect(),
        }
    }

    pub fn to_tensor(&self, dim: usize) -> Result<TensorElement, CliError> {
        let bad = |m: String| CliError::InvalidR(m);
        if self.format_version != FORMAT_VERSION {
            return Err(bad(format!("unsupported format_version {}", self.format_version)));
        }
        if self.dim != dim {
            return Err(bad(format!("tensor over dimension {}, algebra has dimension {dim}", self.dim)));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (idx, c) in &self.terms {
            if idx.len() != 2 || idx.iter().any(|&i| i >= dim) {
                return Err(bad(format!("bad multi-index {idx:?}")));
            }
            terms.push((idx.clone(), c.parse::<Rational>().map_err(|e| bad(e.to_string()))?));
        }
        Ok(TensorElement::from_terms(dim, 2, terms))
    }

    pub fn digest(&self) -> String {
        sha256_hex(&serde_json::to_vec(self).expect("serializable"))
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path, err: fn(String) -> CliError) -> Result<(T, String), CliError> {
    let bytes = std::fs::read(path).map_err(|e| err(format!("cannot read {}: {e}", path.display())))?;
    let parsed = serde_json::from_slice(&bytes).map_err(|e| err(format!("cannot parse {}: {e}", path.display())))?;
    Ok((parsed, sha256_hex(&bytes)))
}

/// A `k × k` matrix given as a JSON array of rows, or as `{"lambda": rows}`.
/// Entries are integers or `"p/q"` strings.
pub fn read_lambda(path: &Path) -> Result<(Vec<Vec<Rational>>, String), CliError> {
    let bad = |m: String| CliError::InvalidR(m);
    let (v, digest): (Value, String) = read_json(path, CliError::InvalidR)?;
    let rows = match &v {
        Value::Object(m) => m.get("lambda").cloned().ok_or_else(|| bad("missing \"lambda\"".into()))?,
        other => other.clone(),
    };
    let rows = rows.as_array().ok_or_else(|| bad("lambda must be an array of rows".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or_else(|| bad("lambda row must be an array".into()))?;
        let parsed = row
            .iter()
            .map(|x| match x {
                Value::Number(n) if n.is_i64() => Ok(Rational::from_int(n.as_i64().expect("checked"))),
                Value::String(s) => s.parse::<Rational>().map_err(|e| bad(e.to_string())),
                other => Err(bad(format!("bad lambda entry {other}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(parsed);
    }
    if out.iter().any(|r| r.len() != out.len()) {
        return Err(bad("lambda must be square".into()));
    }
    Ok((out, digest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfdy::hopfcore::{build_bk, build_cyclic};

    #[test]
    fn rationals_keep_their_denominator() {
        assert_eq!(q(&Rational::new(-3, 6)), "-1/2");
        assert_eq!(q(&Rational::from_int(4)), "4/1");
        assert_eq!(parse_q("-1/2").unwrap(), Rational::new(-1, 2));
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn hopf_file_roundtrip() {
        for h in [build_bk(1), build_cyclic(3)] {
            let f = HopfFile::from_hopf(&h);
            let back = f.to_hopf().unwrap();
            assert!(back.verify().is_empty());
            assert_eq!(HopfFile::from_hopf(&back).digest(), f.digest());
            let text = serde_json::to_string(&f).unwrap();
            let reparsed: HopfFile = serde_json::from_str(&text).unwrap();
            assert_eq!(reparsed.digest(), f.digest());
        }
    }

    #[test]
    fn out_of_range_indices_are_rejected() {
        let mut f = HopfFile::from_hopf(&build_cyclic(2));
        f.mult.push((0, 5, 0, "1/1".into()));
        assert!(matches!(f.to_hopf(), Err(CliError::InvalidAlgebra(_))));
    }

    #[test]
    fn tensor_json_is_lexicographic() {
        let t = TensorElement::from_terms(4, 2, [(vec![1, 0], Rational::one()), (vec![0, 3], Rational::new(1, 2))]);
        assert_eq!(tensor_json(&t), json!([[[0, 3], "1/2"], [[1, 0], "1/1"]]));
        let f = TensorFile::from_tensor(&t);
        assert_eq!(f.to_tensor(4).unwrap(), t);
        assert!(f.to_tensor(2).is_err());
    }
}
