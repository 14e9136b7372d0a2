use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn quadlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn build(dir: &Path, name: &str, family: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut args = vec!["build"];
    args.extend_from_slice(family);
    args.extend(["-o", path.to_str().unwrap()]);
    let o = quadlie(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn heisenberg_has_no_form() {
    let dir = tempfile::tempdir().unwrap();
    let h = build(dir.path(), "h1.alg", &["heisenberg", "1"]);
    let o = quadlie(&["forms", h.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no nondegenerate invariant form (certificate"));
}

#[test]
fn free_nilpotent_forms_are_found() {
    let dir = tempfile::tempdir().unwrap();
    let n = build(dir.path(), "n23.alg", &["free-nilpotent", "2", "3"]);
    let o = quadlie(&["forms", n.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("form "));
}

#[test]
fn skew_derivations_of_n23() {
    let dir = tempfile::tempdir().unwrap();
    let n = build(dir.path(), "n23q.alg", &["n23q"]);
    let o = quadlie(&["der", n.to_str().unwrap(), "--skew"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skew derivations: dim 6"));
    let o = quadlie(&["der", n.to_str().unwrap()]);
    assert!(stdout(&o).contains("inner derivations: dim 3"));
}

#[test]
fn skew_needs_form() {
    let dir = tempfile::tempdir().unwrap();
    let h = build(dir.path(), "h1.alg", &["heisenberg", "1"]);
    assert_eq!(quadlie(&["der", h.to_str().unwrap(), "--skew"]).status.code(), Some(2));
}

#[test]
fn analyze_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = build(dir.path(), "d4.alg", &["oscillator"]);
    let o = quadlie(&["analyze", d4.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("type pair (r,s) = (3,1)"));
    assert!(text.contains("classification: d"));

    let o = quadlie(&["analyze", d4.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dims"]["algebra"], 4);
    assert_eq!(v["type_pair"]["r"], 3);
    assert_eq!(v["predicates"]["local"], true);
}

#[test]
fn dot_chain() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), "n23s.alg", &["n23s"]);
    let dot = dir.path().join("n23s.dot");
    let o = quadlie(&["dot", path.to_str().unwrap(), "-o", dot.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph ideals {"));
    assert_eq!(text.matches(" -> ").count(), 5);
}

#[test]
fn dualcheck_passes_and_refuses_non_quadratic() {
    let dir = tempfile::tempdir().unwrap();
    let g = build(dir.path(), "g.alg", &["gen-oscillator", "1", "-2"]);
    let o = quadlie(&["dualcheck", g.to_str().unwrap(), "--seed", "7", "--trials", "15"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failures"));

    let h = build(dir.path(), "h1.alg", &["heisenberg", "1"]);
    assert_eq!(quadlie(&["dualcheck", h.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn check_reports_jacobi_failure() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.alg");
    std::fs::write(&p, "dim 3\nbasis a b c\nbracket a b = c\nbracket b c = a\nbracket a c = a\n").unwrap();
    let o = quadlie(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("invalid"));

    let d4 = build(dir.path(), "d4.alg", &["oscillator"]);
    assert_eq!(quadlie(&["check", d4.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(quadlie(&["build", "nonsense"]).status.code(), Some(2));
    assert_eq!(quadlie(&["build", "heisenberg"]).status.code(), Some(2));
    assert_eq!(quadlie(&["frobnicate"]).status.code(), Some(2));
    let p = dir.path().join("bad.alg");
    std::fs::write(&p, "dim 2\nbasis a b\nbracket a c = b\n").unwrap();
    let o = quadlie(&["analyze", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn every_family_builds_a_valid_file() {
    let dir = tempfile::tempdir().unwrap();
    let families: &[&[&str]] = &[
        &["abelian", "2"],
        &["heisenberg", "2"],
        &["free-nilpotent", "3", "2"],
        &["n23q"],
        &["n32q"],
        &["oscillator"],
        &["gen-oscillator", "1/2", "3"],
        &["tstar0", "h1"],
        &["tensor-trunc", "2"],
        &["sl2"],
        &["a-sl2", "1"],
        &["n23s"],
        &["split-h3"],
    ];
    for (i, fam) in families.iter().enumerate() {
        let p = build(dir.path(), &format!("f{i}.alg"), fam);
        let o = quadlie(&["check", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{fam:?}: {}", stdout(&o));
    }
}
