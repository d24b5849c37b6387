use std::path::Path;
use std::process::{Command, Output};

fn tilting(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilting")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn check_golden(args: &str, name: &str) {
    let args: Vec<&str> = args.split_whitespace().collect();
    let out = tilting(&args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out), golden(name), "{args:?}");
}

#[test]
fn radical_square_zero_coresolutions() {
    check_golden("coresolve --degree 4 --family radsquare_a:2", "coresolve_radsquare_a2.txt");
    check_golden("coresolve --degree 5 --family radsquare_a:3", "coresolve_radsquare_a3.txt");
}

#[test]
fn linear_quiver_lists() {
    check_golden("enum tilt -n 1 --family nakayama_a:3", "tilt1_nakayama_a3.txt");
    check_golden("enum sttilt --family nakayama_a:2", "sttilt_nakayama_a2.txt");
    check_golden("enum sttilt --family nakayama_a:3", "sttilt_nakayama_a3.txt");
    check_golden("bijection --family nakayama_a:3", "bijection_nakayama_a3.txt");
}

#[test]
fn auslander_and_preprojective_counts() {
    check_golden("enum tilt -n 1 --family auslander_uniserial:2", "tilt1_auslander_uniserial2.txt");
    check_golden("enum tilt -n 1 --family auslander_uniserial:3", "tilt1_auslander_uniserial3.txt");
    check_golden("enum sttilt --family preprojective_a:1", "sttilt_preprojective_a1.txt");
    check_golden("enum sttilt --family preprojective_a:2", "sttilt_preprojective_a2.txt");
}

#[test]
fn minimum_tilting_module() {
    check_golden("min-tilt -n 1 --family radsquare_a:2", "min_tilt_radsquare_a2.txt");
}

#[test]
fn bijection_over_auslander_algebra() {
    let out = tilting(&["bijection", "--family", "auslander_uniserial:3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("6 <-> 6: bijection\n"));
}

#[test]
fn exit_codes() {
    let over = tilting(&["enum", "sttilt", "--family", "auslander_nakayama:3", "--budget", "20"]);
    assert_eq!(over.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&over.stderr).contains("budget"));
    assert!(stdout(&over).contains("budget exceeded"));

    let unknown = tilting(&["enum", "sttilt", "--family", "kronecker:2"]);
    assert_eq!(unknown.status.code(), Some(1));
    assert!(unknown.stdout.is_empty());
    assert!(!unknown.stderr.is_empty());

    assert_eq!(tilting(&["enum", "sttilt"]).status.code(), Some(1));
    assert_eq!(tilting(&["analyze", "--family", "nakayama_a:2", "--field", "Fp:6"]).status.code(), Some(1));
    // the relation must be admissible
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("loop.txt");
    std::fs::write(&spec, "vertex 1\narrow x: 1 -> 1\n").unwrap();
    assert_eq!(tilting(&["analyze", "--spec", spec.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(tilting(&["--help"]).status.code(), Some(0));
}

#[test]
fn spec_files_and_fields() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("a3.txt");
    // linear A3 with its sink at 1, the same algebra as nakayama_a:3
    std::fs::write(&spec, "# linear\nfield = Fp 7\nvertex 1\nvertex 2\nvertex 3\narrow a1: 2 -> 1\narrow a2: 3 -> 2\n").unwrap();
    let out = tilting(&["enum", "tilt", "-n", "1", "--spec", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with(&format!("# {} over Fp 7", spec.display())), "{text}");
    let body: Vec<&str> = text.lines().skip(1).collect();
    let want: Vec<String> = golden("tilt1_nakayama_a3.txt").lines().skip(1).map(String::from).collect();
    assert_eq!(body, want);

    let q = tilting(&["enum", "sttilt", "--family", "nakayama_a:3", "--field", "Fp:65521"]);
    assert!(stdout(&q).ends_with("14 support tau-tilting pairs\n"));
}

#[test]
fn json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.json"));
        let out = tilting(&["enum", "sttilt", "--family", "auslander_uniserial:3", "--json", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        bodies.push(std::fs::read_to_string(path).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
    let v: serde_json::Value = serde_json::from_str(&bodies[0]).unwrap();
    assert_eq!(v["count"], 24);
    assert_eq!(v["complete"], true);
    assert_eq!(v["algebra"]["name"], "auslander_uniserial:3");
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 24);
    let labels: Vec<&str> = nodes.iter().map(|n| n["label"].as_str().unwrap()).collect();
    let mut sorted = labels.clone();
    sorted.sort();
    assert_eq!(labels.len(), sorted.len());
    for key in ["kind", "edges", "order", "budget", "reachable_component"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn reports_in_json() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| -> serde_json::Value {
        let path = dir.path().join("out.json");
        let mut all: Vec<&str> = args.to_vec();
        let p = path.to_str().unwrap().to_string();
        all.extend(["--json", &p]);
        let out = tilting(&all);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
    };
    let b = run(&["bijection", "--family", "auslander_uniserial:3"]);
    assert_eq!(b["bijection"], true);
    assert_eq!(b["tilt_count"], 6);
    let i = run(&["iwanaga", "-n", "2", "--family", "radsquare_a:2"]);
    assert!(i.is_object());
    let a = run(&["analyze", "--family", "radsquare_a:2"]);
    assert!(a.is_object());
    let o = run(&["order", "-n", "2", "--family", "radsquare_a:2"]);
    assert_eq!(o["count"], 3);
    assert_eq!(o["minimum"], 2);
}

#[test]
fn hasse_and_mutation_graphs_as_dot() {
    let dir = tempfile::tempdir().unwrap();
    let hasse = dir.path().join("hasse.dot");
    let out = tilting(&["order", "-n", "1", "--family", "nakayama_a:3", "--hasse", hasse.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&hasse).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("label=").count(), 5);
    assert!(stdout(&out).contains("minimum 0"));

    let graph = dir.path().join("sttilt.dot");
    let out = tilting(&["enum", "sttilt", "--family", "nakayama_a:2", "--dot", graph.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&graph).unwrap().matches("label=").count(), 5);
}
