use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn leibniz(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_leibniz")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn ext_trivial_golden() {
    let (code, stdout, _) = leibniz(&["ext", "trivial", "--src", "K", "--dst", "K", "--nmax", "3", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 2 2 2\n1 2 2 2\n");
    let (code, stdout, _) =
        leibniz(&["ext", "trivial", "--src", "a:2", "--dst", "a:2", "--nmax", "2", "--method", "spectral"]);
    assert_eq!((code, stdout.as_str()), (0, "1 1 0\n"));
}

#[test]
fn ext_trivial_json() {
    let (code, stdout, _) =
        leibniz(&["ext", "trivial", "--src", "s", "--dst", "s", "--nmax", "2", "--method", "both", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let pairs = v["ext"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 2);
    assert_eq!(pairs[0]["dims"], serde_json::json!([1, 1, 0]));
    assert_eq!(pairs[1]["method"], "spectral");
    assert_eq!(pairs[1]["certified"], true);
}

#[test]
fn ext_hemi_golden() {
    let (code, stdout, _) = leibniz(&["ext", "hemi", "--n", "2", "--src", "V2^s", "--dst", "V0^a", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "2\n2\n");
    let (code, stdout, _) =
        leibniz(&["ext", "hemi", "--n", "2", "--src", "V2^s", "--dst", "V2^a", "--degree", "2", "--method", "both"]);
    assert_eq!((code, stdout.as_str()), (0, "4\n4\n"));
}

#[test]
fn quiver_trivial_golden() {
    let (code, stdout, _) = leibniz(&["quiver", "trivial", "--lambdas", "1", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout.trim(),
        concat!(
            r#"{"vertices":[{"label":"K","kind":"trivial","lambda":0},"#,
            r#"{"label":"M^a_1","kind":"antisymmetric","lambda":1},"#,
            r#"{"label":"M^s_1","kind":"symmetric","lambda":1}],"#,
            r#""edges":[{"src":0,"dst":0,"mult":2},{"src":1,"dst":1,"mult":1},{"src":2,"dst":2,"mult":1}]}"#
        )
    );
    let (_, dot, _) = leibniz(&["quiver", "trivial", "--lambdas", "1"]);
    assert_eq!(dot.matches("->").count(), 4);
}

#[test]
fn quiver_hemi_verified() {
    let (code, stdout, stderr) =
        leibniz(&["quiver", "hemi", "--n", "2", "--max-weight", "3", "--verify", "--format", "json"]);
    assert_eq!(code, 0, "{stderr}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["max_weight"], 3);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 7);
}

#[test]
fn check_reports_identity() {
    let (code, stdout, _) = leibniz(&["check", &data("sl2.json")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Leib(h): dim 0"));
    let (code, stdout, _) = leibniz(&["check", &data("not_leibniz.json"), "--format", "json"]);
    assert_eq!(code, 1);
    assert!(stdout.contains(r#""leibniz":false"#));
}

#[test]
fn cohomology_from_files() {
    let args = ["cohomology", "--algebra", &data("trivial.json"), "--bimodule", &data("nonsplit.json"), "--qmax", "3"];
    let (code, stdout, _) = leibniz(&[&args[..], &["--format", "json"]].concat());
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), r#"{"HL":[1,0,0,0]}"#);
    let (code, _, stderr) =
        leibniz(&["cohomology", "--algebra", &data("sl2.json"), "--bimodule", &data("nonsplit.json"), "--qmax", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("error:"));
}

#[test]
fn ce_text() {
    let (code, stdout, _) = leibniz(&["ce", "--module", "V0", "--pmax", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "H^0  1\nH^1  0\nH^2  0\nH^3  1\n");
}

#[test]
fn invalid_input_exits_one() {
    assert_eq!(leibniz(&["ext", "trivial", "--src", "K", "--dst", "q", "--nmax", "1"]).0, 1);
    assert_eq!(leibniz(&["ext", "hemi", "--n", "0", "--src", "K", "--dst", "K"]).0, 1);
    assert_eq!(leibniz(&["check", "/nonexistent.json"]).0, 1);
    assert_eq!(leibniz(&["quiver", "hemi", "--n", "1"]).0, 1);
}
