use qknot::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("qknot").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn cpoly_json() {
    let (code, out, _) = call(&["cpoly", "-p", "1", "--nc", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"vars":["E","Q","q"],"terms":[{"exp":[0,1,2],"coef":"1/1"},{"exp":[1,0,0],"coef":"1/1"}]}"#
    );
}

#[test]
fn negative_parameter() {
    let (code, out, _) = call(&["cpoly", "-p", "-1"]);
    assert_eq!((code, out.trim()), (0, "E - 1"));
    let (code, out, _) = call(&["apoly", "-p", "1"]);
    assert_eq!((code, out.trim()), (0, "L + M^3"));
}

#[test]
fn scalars() {
    assert_eq!(call(&["cyclotomic", "-p", "1", "-n", "1"]).1.trim(), "-q^2");
    assert_eq!(
        call(&["jones", "-p", "1", "-n", "2"]).1.trim(),
        "-q^3 - q^2 - q + 1"
    );
}

#[test]
fn appendix_suite() {
    let (code, out, _) = call(&["verify", "appendix"]);
    assert_eq!(code, 0);
    assert!(out
        .lines()
        .last()
        .unwrap()
        .starts_with("appendix: pass, 6 knots checked"));
}

#[test]
fn table_latex() {
    let (code, out, _) = call(&["table", "--appendix"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("\\mat{").count(), 6);
    assert!(out.contains("E^1 & 0 & q^3+q^4 & -q^5 & q^7 \\\\"));
}

#[test]
fn telescope_verbs() {
    let (code, out, _) = call(&[
        "telescope",
        "--term",
        "twist:1",
        "--order",
        "1",
        "--kdeg",
        "3",
        "--mode",
        "certificate",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("equal up to a left unit: true"));
    let (code, out, _) = call(&[
        "telescope",
        "--term",
        "twist:1",
        "--order",
        "1",
        "--kdeg",
        "1",
    ]);
    assert_eq!(code, 1, "{out}");
    let (code, _, _) = call(&["telescope", "--term", "twist:2", "--verify-only"]);
    assert_eq!(code, 0);
    let (code, out, _) = call(&[
        "telescope",
        "--term",
        "qbinomial",
        "--order",
        "1",
        "--kdeg",
        "1",
    ]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["cpoly"]).0, 2);
    assert_eq!(call(&["verify", "everything"]).0, 2);
    assert_eq!(call(&["telescope", "--term", "nonsense"]).0, 2);
    assert_eq!(call(&["table"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn json_report_is_stable() {
    let (_, a, _) = call(&["verify", "q1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let ids: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap().to_string())
        .collect();
    let (_, b, _) = call(&["verify", "q1", "--json"]);
    let w: serde_json::Value = serde_json::from_str(&b).unwrap();
    assert_eq!(v["checks"], w["checks"]);
    assert_eq!(
        ids.first().map(String::as_str),
        Some("C_p(E,Q,1) = C_p(E,Q) p=-6")
    );
}

#[test]
fn verify_all() {
    let (code, out, _) = call(&["verify", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
}
