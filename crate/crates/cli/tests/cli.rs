use std::io::Write as _;

use seminormal::field::{FieldKind, Scalar};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("seminormal").chain(args.iter().copied());
    let code = seminormal_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("not json ({e}): {out}\n{err}"));
    (code, v)
}

fn family_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

#[test]
fn gram_of_generic_hecke_three() {
    let (code, v) = run_json(&["gram", "--algebra", "hecke", "--n", "3", "--field", "q-generic"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let k: FieldKind = "Q(q)".parse().unwrap();
    let cell = v["result"]["cells"].as_array().unwrap().iter().find(|c| c["cell"] == "(2,1)").unwrap();
    let g = k.parse_scalar(cell["G"].as_str().unwrap()).unwrap();
    // q + q^2 + q^3
    assert_eq!(g, k.parse_scalar("[0,1,1,1]").unwrap());
    let at_one = g.as_function().unwrap().eval(&Scalar::rational(1, 1)).unwrap();
    assert_eq!(at_one, Scalar::rational(3, 1));
    assert_eq!(cell["gammas"].as_array().unwrap().len(), 2);
}

#[test]
fn encoded_scalars_round_trip() {
    let (_, v) = run_json(&["gram", "--algebra", "hecke", "--n", "3", "--field", "q-generic"]);
    let k: FieldKind = "Q(q)".parse().unwrap();
    for cell in v["result"]["cells"].as_array().unwrap() {
        let mut texts = vec![cell["G"].as_str().unwrap(), cell["det_gram"].as_str().unwrap()];
        texts.extend(cell["gammas"].as_array().unwrap().iter().map(|g| g["gamma"].as_str().unwrap()));
        for s in texts {
            assert_eq!(k.parse_scalar(s).unwrap().to_string(), s);
        }
    }
}

#[test]
fn appendix_on_one_by_one_family() {
    let f = family_file(r#"{"d": 1, "field": "Q", "matrices": [[[5]], [[-2]]]}"#);
    let (code, v) = run_json(&["appendix", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["classes"], serde_json::json!([[1]]));
    assert_eq!(v["result"]["idempotents"], serde_json::json!([[["1"]]]));
}

#[test]
fn appendix_separated_family_splits_completely() {
    let f = family_file(r#"{"d": 3, "field": "Q", "matrices": [[[0, 1, 2], [0, 1, 3], [0, 0, 2]]]}"#);
    let (code, v) = run_json(&["appendix", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["classes"], serde_json::json!([[1], [2], [3]]));
    assert_eq!(v["result"]["idempotents"].as_array().unwrap().len(), 3);
}

#[test]
fn blocks_of_hecke_three_at_minus_one() {
    let (code, v) = run_json(&["blocks", "--algebra", "hecke", "--n", "3", "--field", "Q", "--q", "-1"]);
    assert_eq!(code, 0, "{v}");
    let classes = v["result"]["linkage_classes"].as_array().unwrap();
    let mut dims: Vec<u64> = classes.iter().map(|c| c["dimension"].as_u64().unwrap()).collect();
    dims.sort();
    assert_eq!(dims, vec![2, 4]);
    let single = classes.iter().find(|c| c["dimension"] == 4).unwrap();
    assert_eq!(single["cells"], serde_json::json!(["(2,1)"]));
}

#[test]
fn table_output_lists_checks() {
    let (code, out, _) = run(&["blocks", "--algebra", "hecke", "--n", "3", "--field", "F_7", "--q", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("checks:"));
    assert!(out.trim_end().ends_with("0 failed"));
}

#[test]
fn input_errors_exit_with_two() {
    let (code, _, err) = run(&["idempotents", "--algebra", "hecke", "--n", "3", "--field", "Q", "--q", "-1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "));

    let (code, _, err) = run(&["blocks", "--algebra", "hecke", "--n", "7", "--field", "Q", "--q", "-1"]);
    assert_eq!(code, 2);
    assert!(err.contains("--no-size-gate"), "{err}");

    let f = family_file("{\"d\": 2,\n \"matrices\": [oops]}");
    let (code, _, err) = run(&["appendix", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    let lower = family_file(r#"{"d": 2, "field": "Q", "matrices": [[[1, 0], [1, 1]]]}"#);
    assert_eq!(run(&["appendix", "--input", lower.path().to_str().unwrap()]).0, 2);

    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["gram"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn same_seed_gives_identical_output() {
    let args = ["--seed", "17", "verify", "--algebra", "toy", "--contents", "0,1,3", "--trials", "3"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!(c1, 0, "{a}");
    assert_eq!(c2, 0);
    assert_eq!(a, b);
}

#[test]
fn json_envelope_and_one_based_indices() {
    // residues all zero: L_1 is replaced by 1 + L_1 and both columns link
    let f = family_file(r#"{"d": 2, "field": "Q", "matrices": [[[0, 1], [0, 0]]]}"#);
    let (code, v) = run_json(&["appendix", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "appendix");
    assert_eq!(v["result"]["shifted"], serde_json::json!([1]));
    assert_eq!(v["result"]["classes"], serde_json::json!([[1, 2]]));
    assert_eq!(v["result"]["idempotents"], serde_json::json!([[["1", "0"], ["0", "1"]]]));
}
