use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn gb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gb")).args(args).output().expect("run gb")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        let f = Files { dir: tempfile::tempdir().unwrap() };
        f.write("triangle.edges", "1 2\n2 3\n3 1\n");
        f.write("k13.edges", "1 2\n1 3\n1 4\n");
        f.write("k2.edges", "1 2\n");
        f.write("p4.edges", "1 2\n2 3\n3 4\n");
        f.write("empty.edges", "");
        f.write("e0.json", "[1, 0, 0]");
        f
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> String {
        self.dir.path().join(name).to_str().unwrap().to_string()
    }
}

#[test]
fn build_triangle_json() {
    let f = Files::new();
    let o = gb(&["build", "--flavor", "t", "--format", "json", &f.path("triangle.edges")]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["flavor"], "t");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);
}

#[test]
fn build_k13_tau_dot_is_k33() {
    let f = Files::new();
    let o = gb(&["build", "--flavor", "tau", "--format", "dot", &f.path("k13.edges")]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert_eq!(dot.matches(" -- ").count(), 9);
    for a in ["1->2", "1->3", "1->4"] {
        for b in ["2->1", "3->1", "4->1"] {
            assert!(dot.contains(&format!("\"{a}\" -- \"{b}\"")), "{a} {b}");
        }
    }
}

#[test]
fn build_empty_generator() {
    let o = gb(&["build", "--flavor", "t", "--input", "er:0:1:1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"flavor":"t","vertices":[],"edges":[]}"#);
}

#[test]
fn build_second_order_and_lambda() {
    let f = Files::new();
    let tri = f.path("triangle.edges");
    let count = |flavor: &str| {
        let o = gb(&["build", "--flavor", flavor, &tri]);
        assert_eq!(o.status.code(), Some(0), "{flavor}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["vertices"].as_array().unwrap().len()
    };
    assert_eq!(count("t2"), 18);
    assert_eq!(count("t_tau"), 24);
    assert_eq!(count("gstar"), 6);

    let o = gb(&["build", "--flavor", "lambda", &f.path("p4.edges")]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matched"], true);
    assert_eq!(v["lambda"]["edges"].as_array().unwrap().len(), 2);

    let o = gb(&["build", "--flavor", "cubical", &f.path("p4.edges")]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact"], true);
}

#[test]
fn build_cubical_rejects_single_edge() {
    let f = Files::new();
    let o = gb(&["build", "--flavor", "cubical", &f.path("k2.edges")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("hypothesis violated"));
}

#[test]
fn check_counting_has_five_checks() {
    let f = Files::new();
    let o = gb(&["check", "--suite", "counting", &f.path("triangle.edges")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 5);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn check_cubical_single_edge_fails() {
    let f = Files::new();
    let o = gb(&["check", "--suite", "cubical", &f.path("k2.edges")]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["failures"][0]["check"], "hypothesis");
}

#[test]
fn check_cubical_triangle_not_exact() {
    let f = Files::new();
    let o = gb(&["check", "--suite", "cubical", &f.path("triangle.edges")]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let failed: Vec<&str> = v["failures"].as_array().unwrap().iter().map(|f| f["check"].as_str().unwrap()).collect();
    assert_eq!(failed, ["exact_at_1_chains"]);
}

#[test]
fn check_small_corpus_bochner() {
    let o = gb(&["check", "--suite", "bochner", "--corpus", "small", "--trials", "5", "--seed", "1"]);
    let out = stdout(&o);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 31);
    // The identity only holds where the transfer defect vanishes, e.g. on K2.
    let k2 = &lines[1];
    assert_eq!(k2["graph"], "small:n=2:#0");
    assert_eq!(k2["passed"], true);
    assert!(lines.iter().any(|l| l["passed"] == false));
    assert_eq!(o.status.code(), Some(1));
    for l in &lines {
        let names: Vec<&str> = l["failures"].as_array().unwrap().iter().map(|f| f["check"].as_str().unwrap()).collect();
        assert!(names.iter().all(|n| n.ends_with("residual_zero") || n.ends_with("transfer_identity")), "{names:?}");
    }
}

#[test]
fn check_passing_suites_on_random_corpus() {
    for suite in ["counting", "extremal", "calculus"] {
        let o = gb(&["check", "--suite", suite, "--corpus", "random:4:12:1/3", "--trials", "2", "--seed", "7"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert_eq!(stdout(&o).lines().count(), 4);
    }
}

#[test]
fn check_all_emits_one_line_per_suite_and_is_deterministic() {
    let args = ["check", "--suite", "all", "--trials", "2", "--seed", "3", "-i", "er:9:1/2:4"];
    let (a, b) = (gb(&args), gb(&args));
    assert_eq!(a.stdout, b.stdout);
    let suites: Vec<String> = stdout(&a)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["suite"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(suites, ["counting", "extremal", "cubical", "calculus", "prop37", "bochner", "gamma2"]);
}

#[test]
fn check_rejects_zero_trials_and_bad_corpus() {
    let f = Files::new();
    assert_eq!(gb(&["check", "--trials", "0", &f.path("triangle.edges")]).status.code(), Some(2));
    assert_eq!(gb(&["check", "--corpus", "medium"]).status.code(), Some(2));
    assert_eq!(gb(&["check", "--corpus", "random:2:5:3/2"]).status.code(), Some(2));
}

#[test]
fn curvature_matrix_symmetric_zero_row_sums() {
    let f = Files::new();
    let o = gb(&["curvature", "--mode", "matrix", &f.path("triangle.edges")]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Vec<String>> = stdout(&o).lines().map(|l| l.split(',').map(str::to_string).collect()).collect();
    assert_eq!(rows.len(), 3);
    let parse = |s: &str| -> (i64, i64) {
        match s.split_once('/') {
            Some((p, q)) => (p.parse().unwrap(), q.parse().unwrap()),
            None => (s.parse().unwrap(), 1),
        }
    };
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), 3);
        let sum: f64 = row.iter().map(|s| parse(s)).map(|(p, q)| p as f64 / q as f64).sum();
        assert_eq!(sum, 0.0);
        for (j, entry) in row.iter().enumerate() {
            assert_eq!(entry, &rows[j][i]);
        }
    }
}

#[test]
fn curvature_spectrum_contains_zero() {
    let f = Files::new();
    let o = gb(&["curvature", "--mode", "spectrum", &f.path("triangle.edges")]);
    assert_eq!(o.status.code(), Some(0));
    let ev: Vec<f64> = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(ev.len(), 3);
    assert!(ev.contains(&0.0));
}

#[test]
fn curvature_report_on_triangle_shows_transfer_defect() {
    let f = Files::new();
    let o = gb(&["curvature", "--mode", "report", "--phi", &f.path("e0.json"), &f.path("triangle.edges")]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["residual"], serde_json::json!(["-2", "1", "1"]));
    assert_eq!(v["residual"], v["transfer_defect"]);
    assert_eq!(o.status.code(), Some(1));

    f.write("k2phi.json", r#"["1/2", "-3"]"#);
    let o = gb(&["curvature", "--mode", "report", "--phi", &f.path("k2phi.json"), &f.path("k2.edges")]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["residual"], serde_json::json!(["0", "0"]));
}

#[test]
fn curvature_input_errors() {
    let f = Files::new();
    let tri = f.path("triangle.edges");
    f.write("short.json", "[1, 2]");
    f.write("float.json", "[1.5, 2, 3]");
    assert_eq!(gb(&["curvature", "--mode", "report", "--phi", &f.path("short.json"), &tri]).status.code(), Some(2));
    assert_eq!(gb(&["curvature", "--mode", "report", "--phi", &f.path("float.json"), &tri]).status.code(), Some(2));
    assert_eq!(gb(&["curvature", "--mode", "report", &tri]).status.code(), Some(2));
}

#[test]
fn info_examples() {
    let f = Files::new();
    let info = |name: &str| -> Value {
        let o = gb(&["info", &f.path(name)]);
        assert_eq!(o.status.code(), Some(0));
        serde_json::from_str(stdout(&o).trim()).unwrap()
    };
    let t = info("triangle.edges");
    assert_eq!((t["E_tG"].as_u64(), t["E_tauG"].as_u64()), (Some(9), Some(12)));
    let s = info("k13.edges");
    assert_eq!(s["star"], true);
    assert_eq!((s["E_tG"].as_u64(), s["E_tauG"].as_u64()), (Some(9), Some(9)));
    assert_eq!(s["sections"], "3");
    let e = info("empty.edges");
    assert_eq!(e["n"], 0);
}

#[test]
fn malformed_input_exits_2() {
    let f = Files::new();
    let bad = f.write("bad.edges", "1 2\n3\n");
    let o = gb(&["info", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let loop_ = f.write("loop.edges", "1 1\n");
    assert_eq!(gb(&["info", loop_.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(gb(&["info", "missing.edges"]).status.code(), Some(2));
    assert_eq!(gb(&["info", "er:5:2:1"]).status.code(), Some(2));
}

#[test]
fn output_flag_writes_file() {
    let f = Files::new();
    let target = f.dir.path().join("out.json");
    let o = gb(&["info", "-o", target.to_str().unwrap(), &f.path("triangle.edges")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(fs::read_to_string(&target).unwrap().trim()).unwrap();
    assert_eq!(v["n"], 3);
}

#[test]
fn thread_cap_does_not_change_output() {
    let args = ["check", "--suite", "calculus", "--corpus", "random:6:10:1/2", "--trials", "2"];
    let one = Command::new(env!("CARGO_BIN_EXE_gb")).args(args).env("GB_THREADS", "1").output().unwrap();
    let many = gb(&args);
    assert_eq!(one.stdout, many.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_gb")).args(args).env("GB_THREADS", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
