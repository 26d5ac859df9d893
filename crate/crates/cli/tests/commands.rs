use hilb4n_cli::run;
use hilb4n_cli::verify::{verify_paper, VerifyConfig};
use serde_json::Value;

fn hilb4n(args: &[&str]) -> hilb4n_cli::Outcome {
    run(std::iter::once("hilb4n").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = hilb4n(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn hilbert_function_of_b3() {
    let dir = std::env::temp_dir().join(format!("hilb4n-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b3.ideal");
    std::fs::write(&path, "# the first Borel ideal\nx^2\nx*y\ny^3\n").unwrap();
    let out = hilb4n(&["hf", "--ideal", path.to_str().unwrap(), "--upto", "7"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "0 0 2 8 19 36 60 92");
    let q = hilb4n(&["hf", "--text", "x^2; x*y; y^3", "--upto", "4", "--quotient"]);
    assert_eq!(q.stdout.trim(), "1 4 8 12 16");
}

#[test]
fn classify_complete_intersection() {
    let v = json(&["classify", "--text", "x^2 + y*z - t^2; x*y + 2*z^2 + z*t", "--json"]);
    assert_eq!(v, serde_json::json!({"regularity": 3, "stratum": "V", "components": ["H_VA"]}));
    let bad = hilb4n(&["classify", "--text", "x; y"]);
    assert_eq!(bad.code, 1);
}

#[test]
fn borel_enumeration_names() {
    let out = hilb4n(&["borel-enum", "--hp", "4*n"]);
    let names: Vec<&str> = out.stdout.lines().map(|l| l.split(':').next().unwrap()).collect();
    assert_eq!(names, ["B3", "B4", "B5", "B6"]);
    let v = json(&["lex-point", "--hp", "4*n", "--json"]);
    assert_eq!(v["generators"], serde_json::json!(["x", "y^5", "y^4*z^2"]));
}

#[test]
fn numeric_commands() {
    assert_eq!(hilb4n(&["reg", "--text", "x^2; x*y; x*z; y^5; y^4*z"]).stdout.trim(), "5");
    assert_eq!(hilb4n(&["hp", "--text", "x^2; x*y; y^3", "--quotient"]).stdout.trim(), "4*n");
    assert_eq!(hilb4n(&["tangent", "--text", "x; y^5; y^4*z^2"]).stdout.trim(), "23");
    let gin = json(&["gin", "--text", "x^2 + y*z - t^2; x*y + 2*z^2 + z*t", "--json"]);
    assert_eq!(gin["name"], "B3");
    let sat = json(&["sat", "--text", "x^2; x*y; x*z; x*t; y^3", "--json"]);
    assert_eq!(sat["saturation"], serde_json::json!(["x", "y^3"]));
    let gb = json(&["gb", "--text", "x - y; y^2 - z*t", "--order", "lex", "--json"]);
    assert_eq!(gb["order"], "lex");
    let dims = json(&["dims", "--name", "R4", "--json"]);
    assert_eq!(dims["entries"][0]["value"], 23);
    assert_eq!(dims["entries"][0]["derivation"], "3+6+14=23");
}

#[test]
fn samples_and_limits() {
    let a = hilb4n(&["sample", "--stratum", "R4", "--seed", "5"]);
    let b = hilb4n(&["sample", "--stratum", "R4", "--seed", "5"]);
    assert_eq!(a, b);
    let c = json(&["classify", "--text", a.stdout.trim(), "--json"]);
    assert_eq!(c["stratum"], "R4");
    let dir = std::env::temp_dir().join(format!("hilb4n-fam-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let fam = dir.join("fam.ideal");
    // two skew lines that meet at a = 0; the limit keeps an embedded point
    std::fs::write(&fam, "x*z; a*x*t - x^2; y*z; a*y*t - x*y\n").unwrap();
    let lim = json(&["limit", "--family", fam.to_str().unwrap(), "--at", "0", "--json"]);
    assert_eq!(lim["quotient_hilbert_polynomial"], "2*n + 2");
    assert_ne!(lim["limit"], serde_json::json!(["x", "y*z"]));
    let w = json(&["limit", "--text", "x^2 + y*z - t^2; x*y + 2*z^2 + z*t", "--weight", "3,2,1,0", "--json"]);
    assert_eq!(w["quotient_hilbert_polynomial"], "4*n");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(hilb4n(&["hf", "--text", "x + y^2"]).code, 2);
    assert!(hilb4n(&["hf", "--text", "x + y^2"]).stderr.contains("1:1"));
    assert_eq!(hilb4n(&["hf", "--text", "x*a"]).code, 2);
    assert_eq!(hilb4n(&["hf"]).code, 2);
    assert_eq!(hilb4n(&["sample", "--stratum", "R9"]).code, 2);
    assert_eq!(hilb4n(&["verify-paper", "--only", "nothing"]).code, 2);
    assert_eq!(hilb4n(&["frobnicate"]).code, 2);
    assert_eq!(hilb4n(&["--help"]).code, 0);
    assert_eq!(hilb4n(&["gb", "--text", "x + y^2", "--allow-inhomogeneous"]).code, 0);
    // parsing is relaxed, but Hilbert functions still need a graded ideal
    let hf = hilb4n(&["hf", "--text", "x + y^2", "--allow-inhomogeneous"]);
    assert_eq!(hf.code, 2);
    assert!(hf.stderr.contains("homogeneous"));
}

#[test]
fn report_schema_and_determinism() {
    let config = VerifyConfig { only: vec!["borel".into(), "hilbert".into(), "macaulay".into(), "dims".into(), "gin".into()], ..Default::default() };
    let first = verify_paper(&config).to_json(false);
    let second = verify_paper(&config).to_json(false);
    assert_eq!(serde_json::to_string(&first).unwrap(), serde_json::to_string(&second).unwrap());
    for item in first["items"].as_array().unwrap() {
        for key in ["id", "paper_anchor", "expected", "computed", "status"] {
            assert!(item.get(key).is_some(), "{key} missing in {item}");
        }
    }
    assert_eq!(first["summary"]["failed"], 0);
    let out = hilb4n(&["verify-paper", "--only", "borel", "--json"]);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["items"].as_array().unwrap().iter().all(|i| i["criterion"] == 1));
    assert!(v["timings"]["borel"].is_number());
}
