//! Resolving algebra, R-matrix and subalgebra arguments.

use std::path::Path;

use hopfdy::algcore::AlgebraMap;
use hopfdy::double::{drinfeld_double, drinfeld_double_bk, DrinfeldDouble};
use hopfdy::exactlin::{SparseMatrix, TensorElement};
use hopfdy::hopfcore::{bk_generator, bk_subalgebra_inclusion, CatalogKey, HopfAlgebra};
use hopfdy::rmatrix::{bk_r0, check_rmatrix, trivial_r, RMatrix};
use serde_json::{json, Value};

use crate::args::RSelect;
use crate::error::CliError;
use crate::formats::{read_json, violations_json, HopfFile, TensorFile};
use crate::progress;

/// A loaded algebra and where it came from.
pub struct Loaded {
    pub hopf: HopfAlgebra,
    pub key: Option<CatalogKey>,
    pub input: Value,
}

impl Loaded {
    pub fn bk_rank(&self) -> Option<usize> {
        match self.key {
            Some(CatalogKey::Bk(k)) => Some(k),
            _ => None,
        }
    }

    /// `D(H)`, using the `B_k` generator order when the source is `bk:k`.
    pub fn double(&self) -> Result<DrinfeldDouble, CliError> {
        progress(&format!("building the double of {}", self.hopf.name()));
        Ok(match self.bk_rank() {
            Some(k) => drinfeld_double_bk(k)?,
            None => drinfeld_double(&self.hopf)?,
        })
    }
}

/// Loads without checking the axioms.
pub fn load_unverified(source: &str) -> Result<Loaded, CliError> {
    if let Ok(key) = source.parse::<CatalogKey>() {
        let hopf = key.hopf();
        let digest = HopfFile::from_hopf(&hopf).digest();
        let input = json!({"role": "algebra", "source": source, "kind": "catalog", "sha256": digest});
        return Ok(Loaded { hopf, key: Some(key), input });
    }
    let path = Path::new(source);
    if !path.is_file() {
        return Err(CliError::InvalidAlgebra(format!("{source:?} is neither a catalog key nor a readable file")));
    }
    let (file, file_digest): (HopfFile, String) = read_json(path, CliError::InvalidAlgebra)?;
    let hopf = file.to_hopf()?;
    let input = json!({
        "role": "algebra",
        "source": source,
        "kind": "file",
        "file_sha256": file_digest,
        "sha256": HopfFile::from_hopf(&hopf).digest(),
    });
    Ok(Loaded { hopf, key: None, input })
}

/// Loads and rejects anything that fails an axiom, with the full list.
pub fn load(source: &str) -> Result<Loaded, CliError> {
    let l = load_unverified(source)?;
    if l.key.is_none() {
        let v = l.hopf.verify();
        if let Some(first) = v.first() {
            return Err(CliError::Rejected { message: first.to_string(), details: json!({"violations": violations_json(&v)}) });
        }
    }
    Ok(l)
}

/// The R-matrix chosen by the flags. With no flag, `bk:k` uses R₀ and
/// `cyclic:n` uses `1 ⊗ 1`.
pub fn select_r(alg: &Loaded, sel: &RSelect) -> Result<(TensorElement, Value), CliError> {
    let h = &alg.hopf;
    let builtin = |name: &str, t: TensorElement| {
        let digest = TensorFile::from_tensor(&t).digest();
        (t, json!({"role": "r_matrix", "source": name, "kind": "builtin", "sha256": digest}))
    };
    if let Some(path) = &sel.r {
        let (file, file_digest): (TensorFile, String) = read_json(path, CliError::InvalidR)?;
        let t = file.to_tensor(h.dim())?;
        let input = json!({
            "role": "r_matrix",
            "source": path.display().to_string(),
            "kind": "file",
            "file_sha256": file_digest,
            "sha256": TensorFile::from_tensor(&t).digest(),
        });
        return Ok((t, input));
    }
    if sel.trivial_r {
        return Ok(builtin("trivial", trivial_r(h)));
    }
    match (sel.r0, alg.key) {
        (_, Some(CatalogKey::Bk(k))) => Ok(builtin("r0", bk_r0(k))),
        (true, _) => Err(CliError::InvalidR("--r0 needs a bk:k algebra".into())),
        (false, Some(CatalogKey::Cyclic(_))) => Ok(builtin("trivial", trivial_r(h))),
        _ => Err(CliError::InvalidR("no R-matrix given; use --r0, --trivial-r or --r FILE".into())),
    }
}

/// Checks the axioms and wraps the tensor; failures carry the full report.
pub fn checked_r(h: &HopfAlgebra, r: TensorElement) -> Result<RMatrix, CliError> {
    let report = check_rmatrix(h, &r)?;
    if !report.verified() {
        progress(&report.to_string());
        return Err(CliError::RFails { message: "axioms fail".into(), details: rmatrix_report_json(&report) });
    }
    Ok(RMatrix::new(h, r)?)
}

pub fn rmatrix_report_json(r: &hopfdy::rmatrix::RMatrixReport) -> Value {
    let check = |c: &hopfdy::rmatrix::Check| json!({"passed": c.passed, "witnesses": c.witnesses});
    json!({
        "quasi_cocommutativity": check(&r.quasi_cocommutativity),
        "hexagon_delta_left": check(&r.hexagon1),
        "hexagon_delta_right": check(&r.hexagon2),
        "counit_normalization": check(&r.counit_normalization),
        "inverse_found": r.inverse.is_some(),
        "verified": r.verified(),
    })
}

/// A built-in Hopf subalgebra `K → H`: `bk:j` inside `bk:k` on the last `j`
/// odd generators, `cyclic:2` as `{1, g}` inside `bk:k`, `cyclic:1` as the
/// scalars, or `H` itself. `big` is the key `h` was built from.
pub fn sub_inclusion(
    h: &HopfAlgebra,
    big: Option<CatalogKey>,
    sub: &str,
) -> Result<(HopfAlgebra, AlgebraMap, Value), CliError> {
    let key: CatalogKey = sub.parse()?;
    let input = json!({"role": "subalgebra", "source": sub, "kind": "catalog"});
    let k = key.hopf();
    let none = || CliError::InvalidAlgebra(format!("no built-in inclusion of {sub} into {}", h.name()));
    let map = match (key, big) {
        (key, Some(big)) if key == big => return Ok((h.clone(), AlgebraMap::identity(h.algebra().clone()), input)),
        (CatalogKey::Bk(j), Some(CatalogKey::Bk(n))) if j <= n => bk_subalgebra_inclusion(&k, h, j, n - j)?,
        (CatalogKey::Cyclic(1), _) => {
            let m = SparseMatrix::from_columns(h.dim(), vec![h.unit().clone()]);
            AlgebraMap::new(k.algebra().clone(), h.algebra().clone(), m)?
        }
        (CatalogKey::Cyclic(2), Some(CatalogKey::Bk(n))) => {
            let m = SparseMatrix::from_columns(h.dim(), vec![h.unit().clone(), bk_generator(n, 0)]);
            AlgebraMap::new(k.algebra().clone(), h.algebra().clone(), m)?
        }
        _ => return Err(none()),
    };
    Ok((k, map, input))
}
