use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_separative")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn mono_info_profile() {
    let out = run(&["mono", "info", "(((x1 x2)(x3 x4))((x5 x6)(x7 x8)))"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("separating profile: {0,4,6,7}"), "{}", stdout(&out));
    let out = run(&["mono", "separating", "(((x1 x2)(x3 x4))((x5 x6)(x7 x8)))", "--range", "1", "3"]);
    assert_eq!(stdout(&out).trim(), "false");
}

#[test]
fn sep_rewrite_output_reparses_and_separates() {
    let out = run(&["sep", "rewrite", "((x1 x2)(x3 x4))", "--variety", "associative", "--n", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let p = separative::Polynomial::parse(separative::Field::Rationals, text.trim()).unwrap();
    assert_eq!(p.len(), 1);
    assert!(p.monomials().all(|m| m.is_m_separating(1)));
}

#[test]
fn variety_verify() {
    for name in ["associative", "lie", "jordan", "four-nilpotent-products"] {
        let out = run(&["variety", "verify", "--builtin", name]);
        assert!(out.status.success(), "{name}");
        assert!(stdout(&out).trim_end().ends_with("verified"));
    }
    let dir = std::env::temp_dir().join(format!("separative-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.var");
    std::fs::write(&path, "name broken\nfield Q\n(x1 x2) x3 - x1 (x2 x3)\nwitness d=0\n(x1 x2) L := (x1 x2) z\n(x1 x2) R := (z x1) x2\n")
        .unwrap();
    let out = run(&["variety", "verify", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("NOT verified"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn tideal_and_algebra() {
    let out = run(&["tideal", "member", "--variety", "lie", "--poly", "(x1 x2) x3 + (x2 x3) x1 + (x3 x1) x2"]);
    assert_eq!(stdout(&out).trim(), "true");
    let out = run(&["tideal", "member", "--variety", "lie", "--poly", "(x1 x2) x3"]);
    assert_eq!(stdout(&out).trim(), "false");
    let out = run(&["alg", "analyze", "--builtin", "upper-triangular", "--size", "4"]);
    let text = stdout(&out);
    assert!(text.contains("nilpotent: yes, A_(4) = 0"), "{text}");
    assert!(text.contains("solvable: yes, derived length 2"), "{text}");
    let out = run(&["alg", "check-identity", "--builtin", "lie-upper-triangular", "--poly", "x1 x1"]);
    assert!(stdout(&out).starts_with("true"));
}

#[test]
fn tower_commands() {
    let out = run(&["tower", "diag", "--family", "pqr", "--level", "8"]);
    let text = stdout(&out);
    assert!(text.contains("diag rank: 7"), "{text}");
    assert!(text.contains("min products: >= 7"), "{text}");
    let out = run(&["tower", "report", "--family", "pqr", "--levels", "5", "--from", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 3);
    for key in ["level", "dim", "nilindex", "codim", "defect", "diagrank"] {
        assert!(levels[0].get(key).is_some(), "{key}");
    }
    assert_eq!(levels[0]["dim"], 7);
    let out = run(&["tower", "report", "--family", "free-assoc", "--levels", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().nth(1).unwrap().contains("defect"));
}

#[test]
fn deterministic_output() {
    let args = ["tower", "diag", "--family", "pqr-comm", "--level", "5", "--seed", "9"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["mono", "info", "((x1"]).status.code(), Some(1));
    assert_eq!(run(&["tower", "report", "--family", "pqr", "--levels", "11"]).status.code(), Some(1));
    assert_eq!(run(&["mono", "frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["tower", "report", "--family", "pqr"]).status.code(), Some(2));
    assert_eq!(run(&["mono", "info", "x", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["sep", "rewrite", "x1 x2", "--field", "GF(4)", "--variety", "lie"]).status.code(), Some(2));
}

#[test]
fn degree_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_separative"))
        .args(["tideal", "member", "--variety", "associative", "--poly", "((x1 x2) x3) x4 - x1 (x2 (x3 x4))"])
        .env("SEPARATIVE_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}
