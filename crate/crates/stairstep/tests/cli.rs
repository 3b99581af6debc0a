use std::process::Command;

use stairstep::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stairstep").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn betti_totals() {
    assert_eq!(call(&["betti", "xy2,y4", "--stages", "6"]), (EXIT_OK, "1 2 3 5 8 13 21\n".into(), String::new()));
}

#[test]
fn graded_tables_match_the_reference_diagrams() {
    let (code, out, _) = call(&["betti", "x^2*y, x*y^2", "--graded"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "      0 1 2 3 4 5 6\ntotal: 1 2 3 5 8 13 21\n0: 1 2 1 . . . .\n1: . . 2 5 4 1 .\n2: . . . . 4 12 13\n3: . . . . . . 8\n"
    );
    let (_, out, _) = call(&["betti", "xy2, y4", "--graded"]);
    assert_eq!(
        out,
        "      0 1 2 3 4 5 6\ntotal: 1 2 3 5 8 13 21\n0: 1 2 1 . . . .\n1: . . 1 2 1 . .\n\
         2: . . 1 3 4 3 1\n3: . . . . 2 6 7\n4: . . . . 1 4 9\n5: . . . . . . 3\n6: . . . . . . 1\n"
    );
}

#[test]
fn betti_csv_and_json() {
    let (_, csv, _) = call(&["betti", "x2y,xy2", "--stages", "1", "--format", "csv"]);
    assert_eq!(csv, "i,d,beta\n0,0,1\n1,1,2\n");
    let (_, json, _) = call(&["betti", "x2y,xy2", "--stages", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["entries"][1], serde_json::json!({"i": 1, "d": 1, "beta": 2}));
}

#[test]
fn poincare_series() {
    assert_eq!(call(&["poincare", "x2y,xy2"]).1, "(1+z)/(1-z-z^2)\n");
    assert_eq!(call(&["poincare", "x3,xy,y3", "--expand", "4"]).1, "(1+z)/(1-z-2z^2)\n1 2 4 8 16\n");
    assert_eq!(call(&["poincare", "y"]).1, "1+z\n");
}

#[test]
fn classify_normalizes() {
    assert_eq!(call(&["classify", "x, y, xy"]).1, "type-3\n");
    assert_eq!(call(&["classify", "x3,y7"]).1, "type-5\n");
    assert_eq!(call(&["classify", "xy2,y4"]).1, "main-case-2\n");
}

#[test]
fn verify_type_v_example() {
    let (code, out, _) = call(&["verify", "x3,y7", "--stages", "8", "--max-degree", "40"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("(x^3, y^7): pass"), "{out}");
}

#[test]
fn verify_report_json() {
    let (code, out, _) = call(&["verify", "x2y,xy2", "--stages", "3", "--max-degree", "8", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["ideal"], "(x^2y, xy^2)");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["kind"] == "exactness" && c["degree"] == 8));
    assert!(checks.iter().any(|c| c["kind"] == "complex" && c["degree"].is_null()));
}

#[test]
fn oracle_agrees_on_example() {
    let (code, out, _) = call(&["oracle", "xy2,y4", "--max-degree", "15"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("tables agree\n"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = call(&["betti", "x^"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("byte 2"), "{err}");
    assert_eq!(call(&["betti", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "xy", "--field", "p:9"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "xy", "--stages", "6", "--max-degree", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["resolve", "xy", "--format", "csv"]).0, EXIT_USAGE);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("staircase"));
}

#[test]
fn staircase_ascii_and_svg() {
    let (code, out, _) = call(&["staircase", "x2y,xy2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1 | . . * # #"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.svg");
    let (code, out, _) = call(&["staircase", "xy2,y4", "--svg", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polygon"));
}

#[test]
fn binary_reads_field_from_environment() {
    let bin = env!("CARGO_BIN_EXE_stairstep");
    let status = Command::new(bin)
        .args(["verify", "x2y,xy2", "--stages", "3"])
        .env("STAIRSTEP_FIELD", "p:101")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    let status = Command::new(bin)
        .args(["verify", "x2y,xy2", "--stages", "3"])
        .env("STAIRSTEP_FIELD", "p:100")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));
    // an explicit flag wins over the environment
    let status = Command::new(bin)
        .args(["verify", "x2y,xy2", "--stages", "3", "--field", "q"])
        .env("STAIRSTEP_FIELD", "p:100")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
}

#[test]
fn exit_codes_are_distinct() {
    assert_ne!(EXIT_FAIL, EXIT_OK);
    assert_ne!(EXIT_FAIL, EXIT_USAGE);
}
