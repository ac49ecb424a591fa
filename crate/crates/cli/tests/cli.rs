use std::process::{Command, Output};

fn uta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uta")).args(args).env("UTA_COLOR", "0").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn eval_prints_value_and_verdict() {
    let o = uta(&["eval", "--rec", "parity-odd", "f(x,x)"]);
    assert_eq!(stdout(&o), "0\nreject\n");
    assert_eq!(o.status.code(), Some(1));
    let o = uta(&["eval", "--rec", "parity-odd", "f(x)"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn decide_prints_a_json_verdict() {
    let o = uta(&["decide", "--rec", "rootf", "--kind", "def"]);
    assert_eq!(stdout(&o).trim(), r#"{"kind":"Def","k":1,"verdict":"yes","method":"exact"}"#);
    assert_eq!(o.status.code(), Some(0));
    let o = uta(&["decide", "--rec", "parity-odd", "--kind", "ap"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["verdict"], "no");
}

#[test]
fn decide_requires_parameters_for_parametrised_kinds() {
    let o = uta(&["decide", "--rec", "rootf", "--kind", "loc"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--k"));
}

#[test]
fn recognize_reads_term_files() {
    let o = uta(&["recognize", "--rec", "true-exprs", "--file", &fixture("boolean.term")]);
    assert!(matches!(o.status.code(), Some(0 | 1)));
    assert!(stdout(&o).starts_with("accept") || stdout(&o).starts_with("reject"));
}

#[test]
fn explicit_workspace_replaces_the_bundle() {
    let o = uta(&["-w", &fixture("rootf.uta"), "eval", "--rec", "rootf", "g(x)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = uta(&["-w", &fixture("rootf.uta"), "eval", "--rec", "parity-odd", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn boolean_output_loads_back_as_a_workspace() {
    let o = uta(&["bool", "not", "--rec", "rootf"]);
    let dir = std::env::temp_dir().join(format!("uta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("not.uta");
    std::fs::write(&path, stdout(&o)).unwrap();
    let o = uta(&["-w", path.to_str().unwrap(), "eval", "--rec", "not-rootf", "g(x)"]);
    assert_eq!(stdout(&o), "0\naccept\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn emptiness_finiteness_and_equivalence() {
    assert_eq!(uta(&["empty", "--rec", "empty"]).status.code(), Some(0));
    let o = uta(&["empty", "--rec", "rootf"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "nonempty: f"));
    let o = uta(&["--json", "finite", "--rec", "singleton-x"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["members"], serde_json::json!(["x"]));
    assert_eq!(uta(&["finite", "--rec", "parity-odd"]).status.code(), Some(1));
    assert_eq!(uta(&["equiv", "--rec", "all-trees", "--rec", "all-trees"]).status.code(), Some(0));
    let o = uta(&["--json", "equiv", "--rec", "singleton-x", "--rec", "x-or-f"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["accepted_by"], "x-or-f");
}

#[test]
fn congruence_check_reports_a_violation() {
    assert_eq!(uta(&["congruence-check", "--rec", "parity-odd", "--classes", "0 | 1"]).status.code(), Some(0));
    assert_eq!(uta(&["congruence-check", "--rec", "parity-odd", "--classes", "0 1"]).status.code(), Some(0));
    let o = uta(&["congruence-check", "--rec", "parity-odd", "--classes", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sa_and_oracle_partition_agree_on_class_count() {
    let o = uta(&["--json", "sa", "--rec", "rootf"]);
    let sa: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let o = uta(&["--json", "oracle", "partition", "--rec", "rootf", "--max-size", "3"]);
    let blocks: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(sa["size"], blocks.as_array().unwrap().len());
}

#[test]
fn parse_reports_measures() {
    let o = uta(&["parse", "--symbols", "fxy", "f(x,f(y))"]);
    assert_eq!(stdout(&o).trim(), "f(x,f(y))  height 2, root f, size 4");
    let o = uta(&["parse", "--symbols", "fxy", "f(z)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_lists_in_canonical_order() {
    let o = uta(&["enumerate", "--symbols", "fx", "--max-size", "2", "--max-arity", "1"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "x");
}

#[test]
fn check_gmorphism_accepts_the_identity() {
    let o = uta(&["check-gmorphism", "--source", "parity", "--target", "parity", "--iota", "f->f", "--phi", "0->0, 1->1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = uta(&["check-gmorphism", "--source", "parity", "--target", "parity", "--iota", "f->f", "--phi", "0->1, 1->0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sa_print_dumps_a_two_element_algebra() {
    let o = uta(&["sa", "--rec", "parity-odd", "--print"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("algebra parity-odd_sa {"), "{text}");
    let elements = text.lines().find(|l| l.trim_start().starts_with("elements:")).unwrap();
    assert_eq!(elements.trim().trim_end_matches(';').split_whitespace().count(), 3);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["sa", "--rec", "true-exprs", "--print"][..],
        &["translations", "--rec", "true-exprs"],
        &["--json", "decide", "--rec", "true-exprs", "--kind", "pwt", "--k", "1"],
        &["enumerate", "--symbols", "boolean", "--contexts", "--max-size", "3"],
    ] {
        assert_eq!(uta(args).stdout, uta(args).stdout, "{args:?}");
    }
}
