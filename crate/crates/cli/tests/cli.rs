use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn silt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_silt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("silt-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gen_classify_and_reduce() {
    let o = silt(&["gen", "ank", "--n", "4", "--k", "3"]);
    assert!(o.status.success());
    let file = scratch("a43.alg");
    fs::write(&file, &o.stdout).unwrap();
    let f = file.to_str().unwrap();

    let o = silt(&["classify", f, "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["shod"], true);
    assert_eq!(v["gl_dim"], 2);

    let o = silt(&["taured", f, "--module", "I(4)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("vertices 3"));

    let o = silt(&["endo", f, "--summands", "P(1)", "P(2)", "P(4)", "I(4)"]);
    assert_eq!(stdout(&o).matches("relation").count(), 2);

    let o = silt(&["quotient", f, "--cut", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn silting_commands() {
    let alg = scratch("ka2.alg");
    fs::write(&alg, "vertices 2\narrow a 2 1\n").unwrap();
    let t = scratch("regular.dobj");
    fs::write(&t, "dobj\nsummand 0 P(1)\nsummand 0 P(2)\n").unwrap();
    let (a, d) = (alg.to_str().unwrap(), t.to_str().unwrap());
    assert!(silt(&["silting", "check", a, d]).status.success());
    let o = silt(&["silting", "mutate", a, d, "--at", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("summand 0 S(2)") && out.contains("summand 0 interval(1,2)"), "{out}");

    let bad = scratch("bad.dobj");
    fs::write(&bad, "dobj\nsummand 0 P(1)\nsummand 1 P(1)\n").unwrap();
    assert_eq!(silt(&["silting", "check", a, bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn verify_paper_filters() {
    let o = silt(&["verify", "paper", "--only", "gl_dim", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["name"], "gl_dim");
}
