use linkspec::cli::{run, spectrum_of_report};
use serde_json::Value;

fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("linkspec").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = invoke(args);
    let doc = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: stdout {out:?}, stderr {err:?}"));
    (code, doc)
}

#[test]
fn every_verb_emits_a_versioned_document() {
    let trefoil = fixture_path("trefoil.json");
    let diagram = fixture_path("briancon_diagram.json");
    let model = fixture_path("briancon_model.json");
    let local = fixture_path("local_a3.json");
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("seifert-analyze", vec!["seifert-analyze", &trefoil]),
        ("seifert-signature", vec!["seifert-signature", &trefoil]),
        ("seifert-torus", vec!["seifert-torus", "3", "4"]),
        ("splice-analyze", vec!["splice-analyze", &diagram]),
        ("splice-certify", vec!["splice-certify", &diagram]),
        ("infinity-spectrum", vec!["infinity-spectrum", &model]),
        ("semi-check", vec!["semi-check", &local]),
    ];
    for (kind, args) in cases {
        let (code, doc) = json(&args);
        assert_eq!(code, 0, "{kind}");
        assert_eq!(doc["schema"], 1, "{kind}");
        assert_eq!(doc["kind"], kind);
        assert_eq!(doc["passed"], true, "{kind}");
    }
}

#[test]
fn torus_verb_reports_the_closed_form() {
    let (code, doc) = json(&["seifert-torus", "2", "5", "--stabilize", "2", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["components"], 1);
    let sp = spectrum_of_report(&doc).unwrap();
    let xs: Vec<String> = sp.rationals().unwrap().iter().map(|x| x.to_string()).collect();
    assert_eq!(xs, ["7/10", "9/10", "11/10", "13/10"]);
}

#[test]
fn infinity_spectrum_of_the_briancon_model() {
    let (code, doc) = json(&["infinity-spectrum", &fixture_path("briancon_model.json")]);
    assert_eq!(code, 0);
    let text = doc.to_string();
    for v in ["\"1/2\"", "\"2/3\"", "\"4/3\""] {
        assert!(text.contains(v), "{v} missing from {text}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(invoke(&["seifert-analyze", "/no/such/file.json"]).0, 2);
    assert_eq!(invoke(&["seifert-torus", "1", "3"]).0, 2);
    assert_eq!(invoke(&["--angles", "3/2", "semi-check", &fixture_path("local_a3.json")]).0, 2);
    assert_eq!(invoke(&["--angles", "x", "semi-check", &fixture_path("local_a3.json")]).0, 2);
    assert_eq!(invoke(&["no-such-verb"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("rect.json");
    std::fs::write(&bad, r#"{"matrix": [[1, 2]]}"#).unwrap();
    let (code, _, err) = invoke(&["seifert-analyze", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("square"), "{err}");

    let (code, doc) = json(&["semi-check", &fixture_path("corrupted.json")]);
    assert_eq!(code, 1);
    assert_eq!(doc["passed"], false);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let scenario = fixture_path("local_d4.json");
    let trefoil = fixture_path("trefoil.json");
    for args in [
        vec!["seifert-torus", "3", "5", "--stabilize", "1"],
        vec!["semi-check", scenario.as_str()],
        vec!["--format", "text", "seifert-analyze", trefoil.as_str()],
    ] {
        let first = invoke(&args);
        let second = invoke(&args);
        assert_eq!(first, second);
    }
}

#[test]
fn explicit_angles_and_text_format() {
    let (code, out, _) =
        invoke(&["--format", "text", "--angles", "1/3,1/2", "seifert-signature", &fixture_path("trefoil.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("schema: 1\nkind: seifert-signature\n"), "{out}");
    assert!(out.lines().any(|l| l.ends_with("1/3")));
    assert!(out.lines().all(|l| l.contains(": ")));
}

#[test]
fn csv_tables() {
    let dir = tempfile::tempdir().unwrap();
    let profile = dir.path().join("profile.csv");
    let code = invoke(&["--csv", profile.to_str().unwrap(), "seifert-signature", &fixture_path("trefoil.json")]).0;
    assert_eq!(code, 0);
    let mut rd = csv::Reader::from_path(&profile).unwrap();
    assert_eq!(rd.headers().unwrap(), vec!["x_lo", "x_hi", "sigma", "nullity"]);
    let rows: Vec<Vec<String>> = rd.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    // three plateaus and two jump points
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[2], ["1/6", "5/6", "-2", "0"]);

    let records = dir.path().join("semi.csv");
    let code = invoke(&["--csv", records.to_str().unwrap(), "semi-check", &fixture_path("corrupted.json")]).0;
    assert_eq!(code, 1);
    let mut rd = csv::Reader::from_path(&records).unwrap();
    let failing = rd.records().filter(|r| &r.as_ref().unwrap()[4] == "false").count();
    assert!(failing > 0);
}
