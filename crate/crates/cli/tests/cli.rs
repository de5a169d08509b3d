use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn hopfdy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfdy")).args(args).output().expect("binary runs")
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = hopfdy(args);
    let code = out.status.code().expect("exited normally");
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, doc)
}

fn ok(args: &[&str]) -> Value {
    let (code, doc) = run(args);
    assert_eq!(code, 0, "{args:?}: {doc}");
    assert_eq!(doc["ok"], true);
    doc
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_vec(v).unwrap()).unwrap();
    p.display().to_string()
}

fn exported(key: &str) -> Value {
    let (code, doc) = run(&["catalog", "--export", key]);
    assert_eq!(code, 0);
    doc
}

#[test]
fn verify_catalog_keys() {
    for key in ["bk:2", "cyclic:4", "bk:1", "cyclic:1"] {
        let doc = ok(&["verify", key]);
        assert_eq!(doc["results"]["violations"], json!([]));
    }
    assert_eq!(ok(&["verify", "cplus:1"])["results"]["dim"], 2);
    assert_eq!(ok(&["verify", "cminus:2"])["results"]["dim"], 4);
}

#[test]
fn exported_files_verify_and_keep_their_digest() {
    let dir = tempfile::tempdir().unwrap();
    let file = exported("bk:1");
    let path = write(dir.path(), "b1.json", &file);
    let from_file = ok(&["verify", &path]);
    let from_key = ok(&["verify", "bk:1"]);
    assert_eq!(from_file["inputs"][0]["sha256"], from_key["inputs"][0]["sha256"]);
    assert_eq!(from_file["inputs"][0]["kind"], "file");
    let c2 = write(dir.path(), "c2.json", &exported("cyclic:2"));
    assert_eq!(ok(&["rmatrix", "tangent", &c2, "--trivial-r"])["results"]["dim"], 0);
    // A file carries no default R-matrix.
    assert_eq!(run(&["rmatrix", "tangent", &c2]).0, 3);
}

#[test]
fn corrupted_file_names_the_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let mut file = exported("bk:1");
    // Drop the x ⊗ g term from Δ(x).
    let comult = file["comult"].as_array().unwrap().clone();
    let kept: Vec<Value> = comult.into_iter().filter(|e| !(e[0] == 2 && e[1] == 2)).collect();
    file["comult"] = Value::Array(kept);
    let path = write(dir.path(), "bad.json", &file);
    let (code, doc) = run(&["verify", &path]);
    assert_eq!(code, 2);
    assert_eq!(doc["ok"], false);
    assert_eq!(doc["error"]["kind"], "invalid_algebra");
    let axioms: Vec<&str> =
        doc["error"]["details"]["violations"].as_array().unwrap().iter().map(|v| v["axiom"].as_str().unwrap()).collect();
    assert!(axioms.contains(&"coproduct multiplicative"), "{axioms:?}");
    assert!(!doc["results"]["violations"].as_array().unwrap().is_empty());

    // Every other command refuses the file too.
    assert_eq!(run(&["dy", "id", &path, "--degree", "1"]).0, 2);
}

#[test]
fn corrupted_multiplication_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut file = exported("cyclic:3");
    file["mult"][4][3] = json!("2/1");
    let path = write(dir.path(), "bad.json", &file);
    let (code, doc) = run(&["verify", &path]);
    assert_eq!(code, 2);
    assert!(!doc["error"]["details"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn unparseable_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("junk.json");
    std::fs::write(&p, b"{\"format_version\": 1, \"dim\": ").unwrap();
    let (code, doc) = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "invalid_algebra");

    let mut file = exported("cyclic:2");
    file["extra"] = json!(1);
    let path = write(dir.path(), "extra.json", &file);
    assert_eq!(run(&["verify", &path]).0, 2);

    assert_eq!(run(&["verify", "no/such/file.json"]).0, 2);
    assert_eq!(run(&["verify", "bk:0"]).0, 2);
}

#[test]
fn tangent_examples() {
    let d = ok(&["rmatrix", "tangent", "bk:1", "--r0"]);
    assert_eq!(d["results"]["dim"], 1);
    assert_eq!(d["results"]["span_matches_paper_basis"], true);
    assert_eq!(d["consistency"]["modular_prepass_agrees"], true);

    assert_eq!(ok(&["rmatrix", "tangent", "cyclic:2", "--trivial-r"])["results"]["dim"], 0);

    let d = ok(&["rmatrix", "tangent", "bk:2", "--r0"]);
    assert_eq!(d["results"]["dim"], 4);
    assert_eq!(d["results"]["span_matches_paper_basis"], true);
    assert_eq!(d["results"]["basis"].as_array().unwrap().len(), 4);

    // The top-level alias gives the same numbers.
    let alias = ok(&["tangent", "bk:2", "--r0"]);
    assert_eq!(alias["results"], d["results"]);
}

#[test]
fn rmatrix_check_reports_and_rejects() {
    let d = ok(&["rmatrix", "check", "bk:2", "--r0"]);
    assert_eq!(d["results"]["verified"], true);

    let (code, doc) = run(&["rmatrix", "check", "bk:1", "--trivial-r"]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"]["kind"], "invalid_r_matrix");
    assert_eq!(doc["error"]["details"]["quasi_cocommutativity"]["passed"], false);

    let (code, _) = run(&["rmatrix", "tangent", "bk:1", "--trivial-r"]);
    assert_eq!(code, 3);
}

#[test]
fn r_matrix_files() {
    let dir = tempfile::tempdir().unwrap();
    let r0 = ok(&["rmatrix", "check", "bk:1", "--r0"])["results"]["r"].clone();
    let good = write(dir.path(), "r0.json", &json!({"format_version": 1, "dim": 4, "terms": r0}));
    assert_eq!(ok(&["rmatrix", "tangent", "bk:1", "--r", &good])["results"]["dim"], 1);

    let twice = write(dir.path(), "2.json", &json!({"format_version": 1, "dim": 4, "terms": [[[0, 0], "2/1"]]}));
    let (code, doc) = run(&["rmatrix", "check", "bk:1", "--r", &twice]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"]["details"]["counit_normalization"]["passed"], false);

    let wrong_dim = write(dir.path(), "d.json", &json!({"format_version": 1, "dim": 2, "terms": []}));
    assert_eq!(run(&["rmatrix", "check", "bk:1", "--r", &wrong_dim]).0, 3);

    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, b"[").unwrap();
    assert_eq!(run(&["rmatrix", "check", "bk:1", "--r", junk.to_str().unwrap()]).0, 3);
}

#[test]
fn lambda_family() {
    let dir = tempfile::tempdir().unwrap();
    let lam = write(dir.path(), "lam.json", &json!({"lambda": [["1/2", 3], [0, "-2/3"]]}));
    let d = ok(&["rmatrix", "family", "bk:2", "--lambda", &lam]);
    assert_eq!(d["results"]["verified"], true);
    assert_eq!(d["consistency"]["family_law"], true);

    let lam1 = write(dir.path(), "lam1.json", &json!([[5]]));
    assert_eq!(ok(&["rmatrix", "family", "bk:1", "--lambda", &lam1])["results"]["tangent_dim"], 1);

    assert_eq!(run(&["rmatrix", "family", "bk:2", "--lambda", &lam1]).0, 3);
    let ragged = write(dir.path(), "ragged.json", &json!([[1, 2], [3]]));
    assert_eq!(run(&["rmatrix", "family", "bk:2", "--lambda", &ragged]).0, 3);
}

#[test]
fn dy_examples() {
    let d = ok(&["dy", "id", "bk:1", "--degree", "2"]);
    assert_eq!(d["results"]["cohomology_dim"], 1);
    assert_eq!(d["consistency"]["delta_squared_zero"], true);
    assert_eq!(ok(&["dy", "tensor", "bk:1", "--r0", "--degree", "2"])["results"]["cohomology_dim"], 3);
    assert_eq!(ok(&["dy", "res", "bk:2", "--sub", "bk:1", "--degree", "3"])["results"]["cohomology_dim"], 0);
    assert_eq!(ok(&["dy", "res", "bk:2", "--sub", "bk:1", "--degree", "2"])["results"]["cohomology_dim"], 3);
    assert_eq!(ok(&["dy", "id", "cyclic:2", "--degree", "2"])["results"]["cohomology_dim"], 0);
}

#[test]
fn unsupported_degree_exits_four() {
    let (code, doc) = run(&["dy", "id", "bk:3", "--degree", "9"]);
    assert_eq!(code, 4);
    assert_eq!(doc["error"]["kind"], "unsupported_degree");
}

#[test]
fn crosscheck_examples() {
    let d = ok(&["crosscheck", "dimension-formula", "bk:1"]);
    let r = &d["results"];
    assert_eq!((r["h2_tensor"].clone(), r["h2_id"].clone(), r["tangent_dim"].clone()), (json!(3), json!(1), json!(1)));
    assert_eq!(r["consistent"], true);

    let d = ok(&["crosscheck", "adjunction-res", "bk:2", "--sub", "bk:1", "--degree", "2"]);
    assert_eq!((d["results"]["lhs"].clone(), d["results"]["rhs"].clone()), (json!(3), json!(3)));
    assert_eq!(d["results"]["equal"], true);

    let d = ok(&["crosscheck", "kunneth", "bk:1", "--degree", "2"]);
    assert_eq!((d["results"]["lhs"].clone(), d["results"]["rhs"].clone()), (json!(2), json!(2)));

    let d = ok(&["crosscheck", "adjunction-tensor", "bk:1", "--r0"]);
    assert_eq!((d["results"]["lhs"].clone(), d["results"]["rhs"].clone()), (json!(3), json!(3)));
}

#[test]
fn relext_command() {
    let d = ok(&["relext", "bk:1", "--degree", "3"]);
    assert_eq!(d["results"]["ext_dims"], json!([1, 0, 1, 0]));
    assert_eq!(d["consistency"]["resolution_verified"], true);
    let bar = ok(&["relext", "bk:2", "--sub", "bk:1", "--degree", "2", "--resolution", "bar"]);
    let cover = ok(&["relext", "bk:2", "--sub", "bk:1", "--degree", "2", "--resolution", "cover"]);
    assert_eq!(bar["results"]["ext_dims"], json!([1, 0, 3]));
    assert_eq!(bar["results"]["ext_dims"], cover["results"]["ext_dims"]);
}

#[test]
fn double_command() {
    let d = ok(&["double", "bk:1"]);
    assert_eq!(d["results"]["dim"], 16);
    assert!(d["consistency"].as_object().unwrap().values().all(|v| *v == true));
}

#[test]
fn catalog_lists_keys() {
    let d = ok(&["catalog"]);
    assert!(d["results"]["entries"].as_array().unwrap().len() >= 4);
    assert_eq!(run(&["catalog", "--export", "nonsense"]).0, 2);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let args = ["dy", "tensor", "bk:1", "--r0", "--degree", "2"];
    let a = hopfdy(&args);
    let b = hopfdy(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut with_out = vec!["--json-out", out.to_str().unwrap()];
    with_out.extend(args);
    let c = hopfdy(&with_out);
    assert_eq!(std::fs::read(&out).unwrap(), c.stdout);
    let doc: Value = serde_json::from_slice(&c.stdout).unwrap();
    let da: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["results"], da["results"]);
    // Progress and timing go to standard error only.
    assert!(String::from_utf8_lossy(&a.stderr).contains("hopfdy: finished in"));
    assert!(!String::from_utf8_lossy(&a.stdout).contains("finished in"));
}

#[test]
fn rationals_are_written_with_denominators() {
    let d = ok(&["rmatrix", "check", "bk:1", "--r0"]);
    for term in d["results"]["r"].as_array().unwrap() {
        assert!(term[1].as_str().unwrap().contains('/'));
    }
}

#[test]
fn budget_exceeded_exits_five() {
    let (code, doc) = run(&["--max-seconds", "0", "dy", "tensor", "bk:2", "--r0", "--degree", "2"]);
    assert_eq!(code, 5);
    assert_eq!(doc["error"]["kind"], "budget_exceeded");
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(hopfdy(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(hopfdy(&["dy", "id", "bk:1"]).status.code(), Some(64));
    assert_eq!(hopfdy(&["relext", "bk:1", "--degree", "2", "--resolution", "magic"]).status.code(), Some(64));
    assert_eq!(hopfdy(&["--help"]).status.code(), Some(0));
}
