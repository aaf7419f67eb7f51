use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alphacut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let value = serde_json::from_slice(&out.stdout).expect("valid json");
    (out.status.code().unwrap(), value)
}

#[test]
fn classify_m5_reports_prelinearity_witness() {
    let m5 = fixture("m5.json");
    let out = run(&["classify", "--lattice", &m5]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out),
        "size        5\n\
         frame       yes\n\
         prelinear   no   witness (b, c)\n\
         semilinear  yes\n"
    );

    let (code, v) = json(&["classify", "--lattice", &m5]);
    assert_eq!(code, 1);
    assert_eq!(v["frame"]["holds"], true);
    assert_eq!(v["prelinear"]["holds"], false);
    assert_eq!(v["prelinear"]["witness"], serde_json::json!(["b", "c"]));
    assert_eq!(v["semilinear"]["holds"], true);
}

#[test]
fn classify_n6_is_not_semilinear() {
    let (code, v) = json(&["classify", "--lattice", &fixture("n6.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["frame"]["holds"], true);
    assert_eq!(v["semilinear"]["holds"], false);
}

#[test]
fn arrow_properties_hold_on_boolean_algebra() {
    let out = run(&["classify", "--lattice", &fixture("b3.json"), "--properties"]);
    let text = stdout(&out);
    assert_eq!(text.matches("property").count(), 8);
    assert!(text
        .lines()
        .filter(|l| l.starts_with("property"))
        .all(|l| l.ends_with("yes")));
}

#[test]
fn cut_and_image() {
    let (code, v) = json(&[
        "cut",
        "--fuzzy-set",
        &fixture("m5_set.json"),
        "--alpha",
        "a",
        "--map",
        &fixture("m5_map.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        v["cut"],
        serde_json::json!({"p": "bot", "q": "bot", "r": "top", "s": "bot"})
    );
    assert_eq!(v["image"], serde_json::json!({"u": "bot", "v": "top"}));

    let (_, v) = json(&[
        "cut",
        "--fuzzy-set",
        &fixture("m5_set.json"),
        "--alpha",
        "b",
        "--crisp",
    ]);
    assert_eq!(v["cut"], serde_json::json!(["p", "r"]));
}

#[test]
fn cut_families_are_localic_frames() {
    for (set, arrow) in [("m5_set.json", "godel"), ("b3_set.json", "residuated")] {
        let (code, v) = json(&[
            "verify-localic",
            "--fuzzy-set",
            &fixture(set),
            "--arrow",
            arrow,
        ]);
        assert_eq!(code, 0, "{set}");
        assert_eq!(v["verdict"], "localic frame", "{set}");
    }
}

#[test]
fn residuated_arrow_off_frames_is_an_error() {
    let dir = std::env::temp_dir().join(format!("alphacut-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let set = dir.join("m3_set.json");
    std::fs::write(
        &set,
        r#"{"lattice": {"elements": ["bot", "x", "y", "z", "top"],
            "covers": [["bot","x"],["bot","y"],["bot","z"],["x","top"],["y","top"],["z","top"]]},
           "membership": {"p": "x", "q": "y"}}"#,
    )
    .unwrap();
    let out = run(&[
        "verify-localic",
        "--fuzzy-set",
        set.to_str().unwrap(),
        "--arrow",
        "residuated",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn topology_subspace() {
    let (code, v) = json(&[
        "check-topology",
        "--space",
        &fixture("space.json"),
        "--alpha",
        "h",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["topology"], true);
}

#[test]
fn klein_group_and_its_cuts() {
    let klein = fixture("klein.json");
    let (code, v) = json(&["check-group", "--group", &klein]);
    assert_eq!(code, 0);
    assert_eq!(v["identity"], "e");
    assert_eq!(v["inverses"]["a"], "a");

    let (code, v) = json(&["subgroup", "--group", &klein, "--alpha", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["support"], serde_json::json!(["e"]));
    let (_, v) = json(&["subgroup", "--group", &klein, "--alpha", "h"]);
    assert_eq!(v["support"], serde_json::json!(["e", "a", "b", "c"]));
}

#[test]
fn rough_approximations() {
    let (code, v) = json(&["rough", "--problem", &fixture("rough.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["membership"]["u3"], "1/3");
    assert_eq!(v["pawlak"]["lower"], serde_json::json!(["u1", "u2", "u6"]));
    assert_eq!(
        v["probabilistic"]["lower"],
        serde_json::json!(["u1", "u2", "u6"])
    );
    assert_eq!(
        v["probabilistic"]["upper"],
        serde_json::json!(["u1", "u2", "u6"])
    );

    let args = [
        "rough",
        "--problem",
        &fixture("rough.json"),
        "--alpha",
        "1/3",
        "--beta",
        "2/3",
    ];
    assert_eq!(run(&args).status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    for (n, all, distributive) in [(5, 5, 3), (6, 15, 5)] {
        let out = run(&["enumerate", "--size", &n.to_string()]);
        assert!(stdout(&out).starts_with(&format!("{all} lattices")));
        let out = run(&["enumerate", "--size", &n.to_string(), "--distributive"]);
        assert!(stdout(&out).starts_with(&format!("{distributive} distributive lattices")));
    }
}

#[test]
fn export_dot() {
    let out = run(&["export-dot", "--lattice", &fixture("n6.json")]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph lattice {"));
    assert_eq!(dot.matches(" -> ").count(), 7);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("alphacut-out-{}.json", std::process::id()));
    let out = run(&[
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
        "classify",
        "--lattice",
        &fixture("b3.json"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["size"], 8);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn bad_input_exits_with_two() {
    let out = run(&["classify", "--lattice", &fixture("bad_lattice.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("top"));

    assert_eq!(
        run(&["classify", "--lattice", "missing.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["classify", "--bogus"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--seed",
        "7",
        "--subset-bound",
        "2",
        "verify-localic",
        "--fuzzy-set",
    ];
    let set = fixture("b3_set.json");
    let first = run(&[&args[..], &[set.as_str()]].concat());
    let second = run(&[&args[..], &[set.as_str()]].concat());
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains("sampled"));
}
