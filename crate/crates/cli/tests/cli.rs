//! Runs the `brace` binary end to end.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn brace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brace")).args(args).env_remove("BRACE_MAX_ORDER").output().unwrap()
}

fn brace_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brace")).args(args).env(key, value).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let out = path(dir, name);
    let mut all = vec!["build"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", s(&out)]);
    let o = brace(&all);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn read(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn build_wreath_simple_and_analyze() {
    let dir = TempDir::new().unwrap();
    let b24 = build(&dir, "b24.json", &["--family", "wreath_simple", "--p1", "3", "--p2", "2"]);
    let file = read(&b24);
    assert_eq!(file["order"], 24);
    assert_eq!(file["meta"]["family"], "wreath_simple");
    assert_eq!(file["meta"]["gamma"], "2");
    let o = brace(&["analyze", s(&b24)]);
    assert_eq!(code(&o), 0);
    let r = stdout_json(&o);
    assert_eq!(r["simple"], true);
    assert_eq!(r["derived_length_mult"], 3);
    assert_eq!(r["socle_size"], 1);
    assert!(r.get("ideal_count").is_none());
}

#[test]
fn analyze_trivial_and_b3() {
    let dir = TempDir::new().unwrap();
    let z5 = build(&dir, "z5.json", &["--family", "trivial", "--orders", "5"]);
    let r = stdout_json(&brace(&["analyze", s(&z5), "--ideals"]));
    assert_eq!(r["simple"], true);
    assert_eq!(r["trivial"], true);
    assert_eq!(r["ideal_count"], 2);
    let b3 = build(&dir, "b3.json", &["--family", "b3"]);
    let r = stdout_json(&brace(&["analyze", s(&b3)]));
    assert_eq!(r["right_nilpotent"], true);
    assert_eq!(r["left_nilpotent"], false);
    assert_eq!(r["solvable"], true);
    assert_eq!(r["right_series_sizes"], serde_json::json!([12, 4, 1]));
}

#[test]
fn build_trivial_orders() {
    let dir = TempDir::new().unwrap();
    let k = build(&dir, "k.json", &["--family", "trivial", "--orders", "2,2"]);
    let file = read(&k);
    assert_eq!(file["order"], 4);
    assert_eq!(file["add"], file["mul"]);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let b3 = build(&dir, "b3.json", &["--family", "b3"]);
    let o = brace(&["verify", s(&b3)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["valid"], true);

    // Corrupt the addition table: swap two entries of one row.
    let mut file = read(&b3);
    let add = file["add"].as_array_mut().unwrap();
    add.swap(13, 14);
    let bad = path(&dir, "bad.json");
    std::fs::write(&bad, file.to_string()).unwrap();
    let o = brace(&["verify", s(&bad)]);
    assert_eq!(code(&o), 1);
    let r = stdout_json(&o);
    assert_eq!(r["valid"], false);
    assert!(!r["violations"][0]["witness"].as_array().unwrap().is_empty());

    // Table length disagreeing with the order.
    let mut file = read(&b3);
    file["order"] = 11.into();
    let wrong = path(&dir, "wrong.json");
    std::fs::write(&wrong, file.to_string()).unwrap();
    let o = brace(&["verify", s(&wrong)]);
    assert_eq!(code(&o), 2);
    assert_eq!(stdout_json(&o)["error"], "structural");
}

#[test]
fn analyze_rejects_invalid_brace() {
    let dir = TempDir::new().unwrap();
    let b3 = build(&dir, "b3.json", &["--family", "b3"]);
    let mut file = read(&b3);
    file["mul"].as_array_mut().unwrap().swap(13, 14);
    let bad = path(&dir, "bad.json");
    std::fs::write(&bad, file.to_string()).unwrap();
    let o = brace(&["analyze", s(&bad)]);
    assert_eq!(code(&o), 2);
    let r = stdout_json(&o);
    assert_eq!(r["error"], "not_a_brace");
    assert!(r["witness"].is_array());
}

#[test]
fn hypothesis_and_size_guard_exit_codes() {
    let o = brace(&["build", "--family", "wreath_simple", "--p1", "2", "--p2", "3"]);
    assert_eq!(code(&o), 2);
    assert_eq!(stdout_json(&o)["condition"], "p2 | p1 - 1");
    let o = brace(&["build", "--family", "wreath_simple", "--p1", "13", "--p2", "3"]);
    assert_eq!(code(&o), 3);
    let o = brace_env(&["build", "--family", "concrete", "--p", "2", "--l", "3,3"], "BRACE_MAX_ORDER", "100");
    assert_eq!(code(&o), 3);
    let o = brace_env(&["build", "--family", "concrete", "--p", "2", "--l", "3"], "BRACE_MAX_ORDER", "100");
    assert_eq!(code(&o), 0);
    let o = brace_env(&["build", "--family", "b3"], "BRACE_MAX_ORDER", "20000");
    assert_eq!(code(&o), 2);
    let o = brace(&["build", "--family", "nonsense"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn ybe_solutions() {
    let dir = TempDir::new().unwrap();
    let b24 = build(&dir, "b24.json", &["--family", "wreath_simple", "--p1", "3", "--p2", "2"]);
    let sol = path(&dir, "s24.json");
    let o = brace(&["ybe", s(&b24), "--out", s(&sol), "--verify"]);
    assert_eq!(code(&o), 0);
    let r = stdout_json(&o);
    for check in ["braid", "involutive", "nondegenerate"] {
        assert_eq!(r[check]["passed"], true, "{check}");
    }
    let file = read(&sol);
    assert_eq!(file["size"], 24);
    assert_eq!(file["r"].as_array().unwrap().len(), 576);

    let k = build(&dir, "k.json", &["--family", "trivial", "--orders", "3"]);
    let flip = stdout_json(&brace(&["ybe", s(&k)]));
    for x in 0..3u64 {
        for y in 0..3u64 {
            assert_eq!(flip["r"][(x * 3 + y) as usize], serde_json::json!([y, x]));
        }
    }
}

#[test]
fn ybe_order_288() {
    let dir = TempDir::new().unwrap();
    let b288 = build(&dir, "b288.json", &["--family", "concrete", "--p", "2", "--l", "3,3"]);
    assert_eq!(read(&b288)["order"], 288);
    assert_eq!(code(&brace(&["verify", s(&b288)])), 0);
    let start = std::time::Instant::now();
    let o = brace(&["ybe", s(&b288), "--out", s(&path(&dir, "s.json")), "--verify"]);
    assert_eq!(code(&o), 0);
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn quotients() {
    let dir = TempDir::new().unwrap();
    let b3 = build(&dir, "b3.json", &["--family", "b3"]);
    // B² of B₃ is the order-4 ideal K × {0} = {0, 3, 6, 9}.
    let q = path(&dir, "q.json");
    assert_eq!(code(&brace(&["quotient", s(&b3), "--ideal", "3", "--out", s(&q)])), 0);
    let r = stdout_json(&brace(&["analyze", s(&q)]));
    assert_eq!(r["order"], 3);
    assert_eq!(r["trivial"], true);

    let same = stdout_json(&brace(&["quotient", s(&b3)]));
    assert_eq!(same["order"], 12);
    assert_eq!(same["add"], read(&b3)["add"]);

    let o = brace(&["quotient", s(&b3), "--ideal", "1", "--proper"]);
    assert_eq!(code(&o), 2);

    let g2 = build(&dir, "g2.json", &["--family", "wreath", "--base", "2", "--top", "3"]);
    // N₂: the constant functions (0,0,0) and (1,1,1), i.e. index 7·3 = 21.
    let o = brace(&["quotient", s(&g2), "--ideal", "21", "--out", s(&path(&dir, "g2bar.json"))]);
    assert_eq!(code(&o), 0);
    assert_eq!(read(&path(&dir, "g2bar.json"))["order"], 12);
}

#[test]
fn params_files_and_round_trip() {
    let dir = TempDir::new().unwrap();
    let params = [
        r#"{"family":"h_brace","p":2,"q":[0,1,0,0]}"#,
        r#"{"family":"h_brace","p":2,"q":[0,1,0,0],"presentation":"product"}"#,
        r#"{"family":"matched","factors":[{"p":3,"q":[1],"c":[-1]},{"p":2,"q":[0,1,0,0],"c":[0,1,1,1]}],"v":[0,1]}"#,
        r#"{"family":"generalized","p":2,"blocks":[{"l":3,"b":[0,1,1,0],"c":[0,1,1,1],"f":[1,1,0,1],"gamma":2}]}"#,
        r#"{"family":"perfect_not_simple","p1":3,"p2":2}"#,
    ];
    for (i, text) in params.iter().enumerate() {
        let p = path(&dir, &format!("p{i}.json"));
        std::fs::write(&p, text).unwrap();
        let out = build(&dir, &format!("b{i}.json"), &["--params", s(&p)]);
        // Reading and re-emitting through a quotient by {0} keeps the tables;
        // the file itself is stable under parse + serialize.
        let bytes = std::fs::read(&out).unwrap();
        let parsed: brace_cli::io::BraceFile = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(brace_cli::io::to_json_line(&parsed).as_bytes(), &bytes[..], "{text}");
        assert_eq!(code(&brace(&["verify", s(&out)])), 0, "{text}");
    }
    let bad = path(&dir, "bad.json");
    std::fs::write(&bad, r#"{"family":"matched","factors":[{"p":3,"q":[1],"c":[-1]},{"p":2,"q":[0,1,0,0],"c":[0,1,1,1]}],"v":[1,0]}"#).unwrap();
    let o = brace(&["build", "--params", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert_eq!(stdout_json(&o)["condition"], "(Qj+1)");
}

#[test]
fn rebuilds_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let families: [&[&str]; 5] = [
        &["--family", "b3"],
        &["--family", "wreath_simple", "--p1", "3", "--p2", "2"],
        &["--family", "concrete", "--p", "2", "--l", "3,3"],
        &["--family", "perfect_not_simple", "--p1", "3", "--p2", "2"],
        &["--family", "trivial", "--orders", "2,3"],
    ];
    for (i, args) in families.iter().enumerate() {
        let a = build(&dir, &format!("a{i}.json"), args);
        let b = build(&dir, &format!("b{i}.json"), args);
        assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap(), "{args:?}");
    }
}
