use hopfdy::algcore::ModuleRep;
use hopfdy::double::{coeff_restriction, drinfeld_double_bk};
use hopfdy::dycomplex::DYComplex;
use hopfdy::exactlin::{rank_with_alarm, CheckedRank, Rational, SparseVec, TensorElement};
use hopfdy::hopfcore::{build_c_pm, CatalogKey};
use hopfdy::relext::{
    adjunction_crosscheck_restriction, adjunction_crosscheck_tensor, ext_via_hom_complex, kunneth_check,
    relative_ext_dims_within, resolution_of_kind, verify_resolution, Budget, ResolutionKind, ResolventPair,
};
use hopfdy::rmatrix::{bk_r0, bk_r_lambda, check_rmatrix, is_tangent, matches_standard_basis, tangent_space};
use serde_json::{json, Value};

use crate::args::{Command, DyKind, RAction, RArgs, RelextArgs, ResolutionArg, Which};
use crate::error::CliError;
use crate::formats::{read_lambda, tensor_json, violations_json, HopfFile};
use crate::progress;
use crate::report::Report;
use crate::source::{checked_r, load, load_unverified, rmatrix_report_json, select_r, sub_inclusion, Loaded};

/// Largest ambient tensor space the DY commands will index.
const MAX_DY_WIDTH: usize = 1 << 24;
/// Largest bar-resolution term the Ext commands will build.
const MAX_TERM_DIM: usize = 1 << 16;

/// Runs one command. `Ok(Some(doc))` replaces the report with a raw document.
pub fn run(cmd: &Command, rep: &mut Report, budget: &Budget) -> Result<Option<Value>, CliError> {
    match cmd {
        Command::Verify { source } => verify(source, rep)?,
        Command::Double { source } => double(source, rep)?,
        Command::Rmatrix { action } => match action {
            RAction::Check(a) => rmatrix_check(a, rep)?,
            RAction::Tangent(a) => tangent(a, rep)?,
            RAction::Family { source, lambda } => family(source, lambda, rep)?,
        },
        Command::Tangent(a) => tangent(a, rep)?,
        Command::Dy { kind } => dy(kind, rep)?,
        Command::Relext(a) => relext(a, rep, budget)?,
        Command::Crosscheck { which } => crosscheck(which, rep, budget)?,
        Command::Catalog { export } => return catalog(export.as_deref(), rep),
    }
    Ok(None)
}

fn loaded(source: &str, rep: &mut Report) -> Result<Loaded, CliError> {
    let l = load(source)?;
    rep.input(l.input.clone());
    Ok(l)
}

fn verify(source: &str, rep: &mut Report) -> Result<(), CliError> {
    let l = load_unverified(source)?;
    rep.input(l.input.clone());
    if let Some(key @ (CatalogKey::CPlus(k) | CatalogKey::CMinus(k))) = l.key {
        let d = drinfeld_double_bk(k)?;
        let m = build_c_pm(&d, k, matches!(key, CatalogKey::CPlus(_)))?;
        rep.set("object", format!("module over D(B{k})"));
        rep.set("dim", m.dim());
        return match m.verify() {
            Ok(()) => {
                rep.set("violations", json!([]));
                Ok(())
            }
            Err(e) => Err(CliError::Rejected { message: e.to_string(), details: json!({"violations": [e.to_string()]}) }),
        };
    }
    progress(&format!("checking the axioms of {}", l.hopf.name()));
    let v = l.hopf.verify();
    rep.set("object", "hopf algebra");
    rep.set("dim", l.hopf.dim());
    rep.set("violations", violations_json(&v));
    match v.first() {
        None => Ok(()),
        Some(first) => Err(CliError::Rejected { message: first.to_string(), details: json!({"count": v.len(), "violations": violations_json(&v)}) }),
    }
}

fn double(source: &str, rep: &mut Report) -> Result<(), CliError> {
    let l = loaded(source, rep)?;
    let d = l.double()?;
    let v = d.hopf().verify();
    rep.set("base_dim", l.hopf.dim());
    rep.set("dim", d.dim());
    rep.set("violations", violations_json(&v));
    rep.flag("double_axioms", v.is_empty());
    rep.flag("base_embedding_is_algebra_map", d.embed_base().verify().is_empty());
    rep.flag("dual_embedding_is_algebra_map", d.embed_dual().verify().is_empty());
    Ok(())
}

fn rmatrix_check(a: &RArgs, rep: &mut Report) -> Result<(), CliError> {
    let l = loaded(&a.source, rep)?;
    let (t, input) = select_r(&l, &a.r)?;
    rep.input(input);
    let report = check_rmatrix(&l.hopf, &t)?;
    rep.set("r", tensor_json(&t));
    rep.set("checks", rmatrix_report_json(&report));
    rep.set("verified", report.verified());
    if !report.verified() {
        progress(&report.to_string());
        return Err(CliError::RFails { message: "axioms fail".into(), details: rmatrix_report_json(&report) });
    }
    let one = l.hopf.tensor_one(2);
    rep.set("triangular", l.hopf.tensor_mul(&t, &t.permute_slots(&[1, 0]).expect("degree 2")) == one);
    rep.set("involutive", l.hopf.tensor_mul(&t, &t) == one);
    Ok(())
}

fn checked(width: usize, ts: &[TensorElement]) -> CheckedRank {
    let vs: Vec<SparseVec> = ts.iter().map(|t| t.coeffs().clone()).collect();
    rank_with_alarm(width, &vs)
}

fn tangent(a: &RArgs, rep: &mut Report) -> Result<(), CliError> {
    let l = loaded(&a.source, rep)?;
    let (t, input) = select_r(&l, &a.r)?;
    let is_r0 = input["source"] == "r0";
    rep.input(input);
    let r = checked_r(&l.hopf, t)?;
    progress("solving the linearized R-matrix equations");
    let basis = tangent_space(&l.hopf, &r)?;
    rep.set("dim", basis.dim());
    if let (Some(k), true) = (l.bk_rank(), is_r0) {
        rep.set("span_matches_paper_basis", matches_standard_basis(&l.hopf, k, &basis));
    }
    rep.set("basis", Value::Array(basis.vectors.iter().map(tensor_json).collect()));
    let cr = checked(l.hopf.dim().pow(2), &basis.vectors);
    rep.flag("modular_prepass_agrees", cr.modular_agrees && cr.rank == basis.dim());
    rep.flag("basis_vectors_tangent", basis.vectors.iter().all(|v| is_tangent(&l.hopf, r.element(), v)));
    Ok(())
}

fn family(source: &str, lambda: &std::path::Path, rep: &mut Report) -> Result<(), CliError> {
    let l = loaded(source, rep)?;
    let k = l.bk_rank().ok_or_else(|| CliError::InvalidAlgebra("the family is defined on bk:k".into()))?;
    let (lam, digest) = read_lambda(lambda)?;
    rep.input(json!({"role": "lambda", "source": lambda.display().to_string(), "kind": "file", "file_sha256": digest}));
    if lam.len() != k {
        return Err(CliError::InvalidR(format!("lambda is {0}×{0}, expected {k}×{k}", lam.len())));
    }
    let h = &l.hopf;
    let t = bk_r_lambda(h, k, &lam);
    let r = checked_r(h, t.clone())?;
    let neg: Vec<Vec<Rational>> = lam.iter().map(|row| row.iter().map(|x| -x).collect()).collect();
    let r0 = bk_r0(k);
    let law = h.tensor_mul(&h.tensor_mul(&t, &r0), &bk_r_lambda(h, k, &neg)) == r0;
    rep.set("k", k);
    rep.set("r", tensor_json(&t));
    rep.set("verified", true);
    rep.set("tangent_dim", tangent_space(h, &r)?.dim());
    rep.flag("family_law", law);
    Ok(())
}

fn width_guard(c: &DYComplex, n: usize) -> Result<(), CliError> {
    let deg = c.tensor_degree(n + 1) as u32;
    match c.hopf().dim().checked_pow(deg) {
        Some(w) if w <= MAX_DY_WIDTH => Ok(()),
        _ => Err(CliError::Degree(format!(
            "degree {n} needs tensors of degree {deg} over dimension {}",
            c.hopf().dim()
        ))),
    }
}

/// Cochain dimension, both ranks and the cohomology in degree `n`, with
/// the modular, containment and `δδ = 0` checks recorded as flags.
fn dy_degree(c: &DYComplex, n: usize, rep: &mut Report) -> Result<usize, CliError> {
    width_guard(c, n)?;
    let h = c.hopf();
    progress(&format!("cochains of degree {n}"));
    let dim = c.cochain_space(n).dim();
    progress(&format!("δ^{n} on {dim} basis cochains"));
    let out = checked(h.dim().pow(c.tensor_degree(n + 1) as u32), &c.differential_images(n)?);
    let (inc, contained, dd) = if n == 0 {
        (CheckedRank { rank: 0, modular_agrees: true }, true, true)
    } else {
        let imgs = c.differential_images(n - 1)?;
        let contained = imgs.iter().all(|u| c.is_cochain(n, u));
        let mut dd = true;
        for u in &imgs {
            dd &= c.delta(n, u)?.is_zero();
        }
        (checked(h.dim().pow(c.tensor_degree(n) as u32), &imgs), contained, dd)
    };
    let coh = dim
        .checked_sub(out.rank + inc.rank)
        .ok_or_else(|| CliError::Consistency(format!("ranks exceed the cochain dimension in degree {n}")))?;
    rep.set("degree", n);
    rep.set("cochain_dim", dim);
    rep.set("rank_delta_in", inc.rank);
    rep.set("rank_delta_out", out.rank);
    rep.set("cohomology_dim", coh);
    rep.flag("modular_prepass_agrees", out.modular_agrees && inc.modular_agrees);
    rep.flag("images_are_cochains", contained);
    rep.flag("delta_squared_zero", dd);
    Ok(coh)
}

fn dy(kind: &DyKind, rep: &mut Report) -> Result<(), CliError> {
    let (c, n) = match kind {
        DyKind::Id { source, degree } => {
            let l = loaded(source, rep)?;
            rep.set("functor", "identity");
            (DYComplex::identity(&l.hopf), *degree)
        }
        DyKind::Tensor { source, degree, r } => {
            let l = loaded(source, rep)?;
            let (t, input) = select_r(&l, r)?;
            rep.input(input);
            rep.set("functor", "tensor");
            (DYComplex::tensor_with_r(&l.hopf, checked_r(&l.hopf, t)?), *degree)
        }
        DyKind::Res { source, degree, sub } => {
            let l = loaded(source, rep)?;
            let (k, iota, input) = sub_inclusion(&l.hopf, l.key, sub)?;
            rep.input(input);
            rep.set("functor", "restriction");
            (DYComplex::restriction(&l.hopf, &k, &iota)?, *degree)
        }
    };
    dy_degree(&c, n, rep)?;
    Ok(())
}

fn resolution_kind(r: ResolutionArg) -> ResolutionKind {
    match r {
        ResolutionArg::Bar => ResolutionKind::Bar,
        ResolutionArg::Cover => ResolutionKind::IteratedCover,
    }
}

/// Dimension of the bar term `P_top`, which bounds the cover term too.
fn bar_term_dim(pair: &ResolventPair, v: &ModuleRep, top: usize) -> Option<usize> {
    pair.induction().rank().checked_pow(top as u32 + 1)?.checked_mul(v.dim())
}

fn term_guard(pair: &ResolventPair, v: &ModuleRep, top: usize) -> Result<(), CliError> {
    match bar_term_dim(pair, v, top) {
        Some(d) if d <= MAX_TERM_DIM => Ok(()),
        _ => Err(CliError::Degree(format!("resolution terms up to degree {top} are too large"))),
    }
}

fn relext(a: &RelextArgs, rep: &mut Report, budget: &Budget) -> Result<(), CliError> {
    let l = loaded(&a.source, rep)?;
    let d = l.double()?;
    let pair = ResolventPair::double(&d)?;
    let v = d.hopf().trivial_module();
    let w = match &a.sub {
        Some(s) => {
            let (k, iota, input) = sub_inclusion(d.base(), l.key, s)?;
            rep.input(input);
            coeff_restriction(&d, &k, &iota)?.module
        }
        None => v.clone(),
    };
    let n = a.degree;
    let kind = resolution_kind(a.resolution);
    term_guard(&pair, &v, n.saturating_sub(1))?;
    progress(&format!("relative Ext up to degree {n} by the {kind} resolution"));
    let ext = relative_ext_dims_within(&pair, &v, &w, n, kind, budget)?;
    rep.set("pair", format!("(D({0}), {0})", l.hopf.name()));
    rep.set("coefficients", if a.sub.is_some() { "Hom_K(H, k)" } else { "k" });
    rep.set("resolution", kind.to_string());
    rep.set("degree", n);
    rep.set("ext_dims", json!(ext));
    rep.set("ext", ext[n]);
    // The Hom-complex route needs one term more; skip it when that is large.
    let top = n + 1;
    if bar_term_dim(&pair, &v, top).is_some_and(|s| s <= 4096) {
        progress("cross-checking through the Hom complex");
        let res = resolution_of_kind(&pair, &v, top, kind, budget)?;
        let check = verify_resolution(&pair, &res)?;
        rep.set("term_dims", json!(res.term_dims()));
        rep.set("resolution_failures", json!(check.failures));
        rep.flag("resolution_verified", check.ok());
        rep.flag("hom_complex_agrees", ext_via_hom_complex(&res, &w)? == ext);
    } else {
        let res = resolution_of_kind(&pair, &v, n.saturating_sub(1), kind, budget)?;
        let check = verify_resolution(&pair, &res)?;
        rep.set("term_dims", json!(res.term_dims()));
        rep.set("resolution_failures", json!(check.failures));
        rep.flag("resolution_verified", check.ok());
    }
    Ok(())
}

fn equality(rep: &mut Report, lhs_is: &str, lhs: usize, rhs_is: &str, rhs: usize) {
    rep.set("lhs_is", lhs_is);
    rep.set("lhs", lhs);
    rep.set("rhs_is", rhs_is);
    rep.set("rhs", rhs);
    rep.set("equal", lhs == rhs);
    rep.flag("equal", lhs == rhs);
}

fn crosscheck(which: &Which, rep: &mut Report, budget: &Budget) -> Result<(), CliError> {
    match which {
        Which::AdjunctionTensor { source, degree, resolution, r } => {
            let l = loaded(source, rep)?;
            let d = l.double()?;
            let (t, input) = select_r(&l, r)?;
            rep.input(input);
            let rm = checked_r(d.base(), t)?;
            width_guard(&DYComplex::tensor_with_r(d.base(), rm.clone()), *degree)?;
            let single = ResolventPair::double(&d)?;
            let tp = ResolventPair::tensor(&single, &single)?;
            term_guard(&tp, &d.hopf().trivial_module().outer_tensor(&d.hopf().trivial_module(), tp.big().clone())?, degree.saturating_sub(1))?;
            progress("DY cohomology of the tensor functor and Ext over the tensor pair");
            let kind = resolution_kind(*resolution);
            let c = adjunction_crosscheck_tensor(&d, &rm, *degree, kind, budget)?;
            rep.set("degree", *degree);
            rep.set("resolution", kind.to_string());
            rep.set("ext_dims", json!(c.ext_dims));
            equality(rep, "dim H^n_DY(tensor)", c.dy, "dim Ext^n_(D⊗D, H⊗H)(k, H*)", c.ext);
        }
        Which::AdjunctionRes { source, sub, degree, resolution } => {
            let l = loaded(source, rep)?;
            let d = l.double()?;
            let (k, iota, input) = sub_inclusion(d.base(), l.key, sub)?;
            rep.input(input);
            width_guard(&DYComplex::restriction(d.base(), &k, &iota)?, *degree)?;
            let pair = ResolventPair::double(&d)?;
            term_guard(&pair, &d.hopf().trivial_module(), degree.saturating_sub(1))?;
            progress("DY cohomology of the restriction and Ext over (D(H), H)");
            let kind = resolution_kind(*resolution);
            let c = adjunction_crosscheck_restriction(&d, &k, &iota, *degree, kind, budget)?;
            rep.set("degree", *degree);
            rep.set("resolution", kind.to_string());
            rep.set("ext_dims", json!(c.ext_dims));
            equality(rep, "dim H^n_DY(restriction)", c.dy, "dim Ext^n_(D(H), H)(k, Hom_K(H, k))", c.ext);
        }
        Which::DimensionFormula { source, r } => {
            let l = loaded(source, rep)?;
            let (t, input) = select_r(&l, r)?;
            rep.input(input);
            let rm = checked_r(&l.hopf, t)?;
            progress("tangent space");
            let tangent = tangent_space(&l.hopf, &rm)?.dim();
            progress("H² of the tensor functor");
            let tensor = DYComplex::tensor_with_r(&l.hopf, rm);
            width_guard(&tensor, 2)?;
            let h2_tensor = tensor.cohomology_dim(2)?;
            progress("H² of the identity functor");
            let h2_id = DYComplex::identity(&l.hopf).cohomology_dim(2)?;
            let consistent = tangent as i64 == h2_tensor as i64 - 2 * h2_id as i64;
            rep.set("h2_tensor", h2_tensor);
            rep.set("h2_id", h2_id);
            rep.set("tangent_dim", tangent);
            rep.set("consistent", consistent);
            rep.flag("consistent", consistent);
        }
        Which::Kunneth { source, degree } => {
            let l = loaded(source, rep)?;
            let d = l.double()?;
            let p = ResolventPair::double(&d)?;
            let k = d.hopf().trivial_module();
            term_guard(&p, &k, degree + 1)?;
            progress("Ext over the tensor pair, its factors, and the tensor resolution");
            let r = kunneth_check(&p, &k, &k, &p, &k, &k, *degree, budget)?;
            rep.set("degree", *degree);
            rep.set("via_tensor_resolution", r.via_tensor_resolution);
            rep.flag("tensor_resolution_verified", r.tensor_resolution_ok);
            rep.flag("tensor_resolution_agrees", r.via_tensor_resolution == r.direct);
            equality(rep, "dim Ext^n over the tensor pair", r.direct, "Σ_{i+j=n} dim Ext^i · dim Ext^j", r.kunneth);
        }
    }
    Ok(())
}

fn catalog(export: Option<&str>, rep: &mut Report) -> Result<Option<Value>, CliError> {
    if let Some(key) = export {
        let key: CatalogKey = key.parse()?;
        if key.is_module() {
            return Err(CliError::InvalidAlgebra(format!("{key} is a module, not an algebra")));
        }
        let file = HopfFile::from_hopf(&key.hopf());
        return Ok(Some(serde_json::to_value(file).expect("serializable")));
    }
    let mut entries = Vec::new();
    for n in 1..=4 {
        entries.push(json!({"key": format!("cyclic:{n}"), "object": "group algebra of Z/n", "dim": n}));
    }
    for k in 1..=3 {
        entries.push(json!({"key": format!("bk:{k}"), "object": "B_k", "dim": 1usize << (k + 1)}));
    }
    for k in 1..=2 {
        let d = drinfeld_double_bk(k)?;
        for (name, plus) in [("cplus", true), ("cminus", false)] {
            let m = build_c_pm(&d, k, plus)?;
            entries.push(json!({"key": format!("{name}:{k}"), "object": format!("module over D(B{k})"), "dim": m.dim()}));
        }
    }
    rep.set("entries", Value::Array(entries));
    Ok(None)
}
