use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn maxdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxdeg")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_json_has_the_stable_keys() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.txt");
    fs::write(&input, "6 4\n0 1\n0 2\n0 3\n4 5\n").unwrap();
    let out = maxdeg(&["compute", "--input", input.to_str().unwrap(), "--k", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in ["n", "m", "k", "f_k", "method", "X", "residual_max_degree", "witnesses", "order_below_k", "elapsed_ms"] {
        assert!(keys.contains(&key), "missing {key}");
    }
    assert_eq!(v["f_k"], 2);
    assert_eq!(v["method"], "dp");

    let brute = maxdeg(&["brute", "--input", input.to_str().unwrap(), "--k", "3", "--format", "json"]);
    let b: Value = serde_json::from_str(&stdout(&brute)).unwrap();
    assert_eq!(b["f_k"], 2);
    assert_eq!(b["method"], "brute");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 1\n1 0\n").unwrap();
    assert_eq!(maxdeg(&["compute", "--input", bad.to_str().unwrap(), "--k", "2"]).status.code(), Some(3));
    assert_eq!(maxdeg(&["compute", "--k", "2"]).status.code(), Some(2));
    let missing = dir.path().join("missing.txt");
    assert_eq!(maxdeg(&["compute", "--input", missing.to_str().unwrap(), "--k", "2"]).status.code(), Some(3));
}

#[test]
fn size_guard_needs_force() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    let out = maxdeg(&["construct", "--family", "path", "--n", "160", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let p = path.to_str().unwrap();
    assert_eq!(maxdeg(&["compute", "--input", p, "--k", "2"]).status.code(), Some(3));
    let forced = maxdeg(&["compute", "--input", p, "--k", "2", "--force", "--format", "json"]);
    assert!(forced.status.success());
}

#[test]
fn construct_gen_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let ft = dir.path().join("f4.txt");
    assert!(maxdeg(&["construct", "--family", "extremal-ft", "--t", "4", "--out", ft.to_str().unwrap()]).status.success());
    let text = fs::read_to_string(&ft).unwrap();
    assert!(text.starts_with("18 14\n"));

    let gen_dir = dir.path().join("gen");
    let out = maxdeg(&[
        "gen", "--kind", "random-forest", "--n", "12", "--seed", "9", "--count", "4", "--out",
        gen_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read_dir(&gen_dir).unwrap().count(), 4);

    let corpus = dir.path().join("corpus.json");
    fs::write(
        &corpus,
        r#"{"k":[3],"instances":[{"kind":"extremal-ft","t":2,"count":4},{"kind":"random-forest","n":10,"seed":1,"count":5}]}"#,
    )
    .unwrap();
    let c = corpus.to_str().unwrap();
    let run = |format: &str| maxdeg(&["verify", "--claims", "lemma2,thm2,thm2-cert,cor1,cor2,oracle-equiv", "--corpus", c, "--format", format]);
    let csv1 = run("csv");
    assert!(csv1.status.success(), "{}", stdout(&csv1));
    assert_eq!(stdout(&csv1), stdout(&run("csv")));
    let json: Value = serde_json::from_str(&stdout(&run("json"))).unwrap();
    assert_eq!(json["summary"]["fail"], 0);
    assert_eq!(json["results"].as_array().unwrap().len(), 9);

    // F_1 = K_2 already has fewer than three vertices
    fs::write(&corpus, r#"{"k":[3],"instances":[{"kind":"extremal-ft","t":1}]}"#).unwrap();
    assert_eq!(maxdeg(&["verify", "--claims", "lemma2", "--corpus", c]).status.code(), Some(1));
}

#[test]
fn bounds_and_bench() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    fs::write(&g, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let out = maxdeg(&["bounds", "--input", g.to_str().unwrap(), "--k", "2", "--p", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("girth=5") && text.contains("moore") && text.contains("cor4"));
    let bench = maxdeg(&["bench", "--suite", "small", "--format", "json"]);
    assert!(bench.status.success());
    let records: Value = serde_json::from_str(&stdout(&bench)).unwrap();
    assert_eq!(records.as_array().unwrap().len(), 8);
}
