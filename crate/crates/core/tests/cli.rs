use std::process::{Command, Output};

fn nilpair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilpair"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn biexponents_of_hook() {
    let out = nilpair(&[
        "--format",
        "json",
        "pair",
        "--diagram",
        "2,1",
        "biexponents",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json(&out)["biexponents"],
        serde_json::json!([[0, 1], [1, 0]])
    );
}

#[test]
fn classify_skew_diagram() {
    let out = nilpair(&["--format", "json", "pair", "--diagram", "3,2/1", "classify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_ne!(v["class"], serde_json::json!("principal"), "{v}");
}

#[test]
fn exit_codes() {
    // Bad diagram: input error.
    let out = nilpair(&["--format", "json", "pair", "--diagram", "3,1,0", "build"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert!(v["error"].is_string() && v["message"].is_string(), "{v}");
    // Unknown subcommand: usage error.
    assert_eq!(nilpair(&["frobnicate"]).status.code(), Some(2));
    // Harmonics above the supported size: resource bound.
    assert_eq!(
        nilpair(&["verify", "--all", "9", "harmonics"])
            .status
            .code(),
        Some(3)
    );
    // A failing check: the square at the adjoint weight.
    let out = nilpair(&[
        "verify",
        "--diagram",
        "2,2",
        "--lambda",
        "2,2",
        "multiplicity",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // A passing suite.
    assert_eq!(
        nilpair(&["verify", "--all", "4", "structure"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn table_and_json_agree_on_verdict() {
    let t = nilpair(&["verify", "strictness"]);
    let j = nilpair(&["--format", "json", "verify", "strictness"]);
    assert_eq!(t.status.code(), Some(0));
    assert_eq!(j.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&t.stdout).contains("strict = true"));
    assert_eq!(json(&j)["strict"], serde_json::json!(true));
}

#[test]
fn rect_spec_and_out_file() {
    let dir = std::env::temp_dir().join(format!("nilpair_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rect.json");
    let p = path.to_str().unwrap();
    let out = nilpair(&[
        "--format",
        "json",
        "--out",
        p,
        "rect",
        "--spec",
        "so:3x1,1x3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let _ = std::fs::remove_dir_all(&dir);
    assert!(v.to_string().contains("\"accepted\":true"), "{v}");
}

#[test]
fn json_is_deterministic_across_jobs() {
    let args = |jobs: &'static str| {
        [
            "--format", "json", "--jobs", jobs, "verify", "--all", "5", "skew",
        ]
    };
    let a = nilpair(&args("1"));
    let b = nilpair(&args("3"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
