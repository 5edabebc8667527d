use std::process::{Command, Output};

use hypercx_core::{build_level, AlgebraLevel, StructureConstants, Triplet};
use serde_json::Value;

fn hypercx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypercx"))
        .args(args)
        .env_remove("HYPERCX_MAX_LEVEL")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn table_json_round_trips() {
    for n in 0..=8u32 {
        let out = hypercx(&["table", "--level", &n.to_string()]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v["level"], n);
        assert_eq!(v["dim"], 1u64 << n);
        let triplets: Vec<Triplet> = serde_json::from_value(v["triplets"].clone()).unwrap();
        let level = AlgebraLevel::new(n).unwrap();
        let rebuilt = StructureConstants::from_triplets(level, &triplets).unwrap();
        assert_eq!(rebuilt, build_level(n).unwrap());
    }
}

#[test]
fn table_examples() {
    let v = json(&hypercx(&["table", "--level", "3", "--format", "json"]));
    assert_eq!(v["triplets"].as_array().unwrap().len(), 7);
    assert_eq!(v["triplets"][0], serde_json::json!([1, 2, 3]));

    let v = json(&hypercx(&["table", "--level", "0"]));
    assert_eq!(v["triplets"], serde_json::json!([]));

    let out = hypercx(&["table", "--level", "4", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 35);
    assert!(lines.contains(&"(189)"));
    assert!(lines.contains(&"(28A)"));
    assert!(lines.iter().any(|l| l.contains('F')));
    assert!(!text.contains("10") && !text.contains("15"));

    let out = hypercx(&["table", "--level", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("i,j,sign,k"));
    assert!(text.lines().any(|l| l == "1,2,1,3"));
    assert!(text.lines().any(|l| l == "2,1,-1,3"));
}

#[test]
fn matrices_examples() {
    let v = json(&hypercx(&["matrices", "--level", "1"]));
    let m = v["matrices"].as_array().unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[0]["rows"], serde_json::json!([[0, -1], [1, 0]]));

    let v = json(&hypercx(&["matrices", "--level", "2", "--side", "left"]));
    let m = v["matrices"].as_array().unwrap();
    assert_eq!(m.len(), 3);
    assert!(m.iter().all(|e| e["side"] == "left" && e["rows"].as_array().unwrap().len() == 4));
    assert!(v["identity"].as_str().unwrap().contains("I_4"));

    let v = json(&hypercx(&["matrices", "--level", "2", "--side", "both"]));
    assert_eq!(v["matrices"].as_array().unwrap().len(), 6);

    let v = json(&hypercx(&["matrices", "--level", "3", "--symplectic"]));
    let report = &v["symplectic"]["report"];
    assert_eq!(report["constants"], serde_json::json!([[1, -1], [2, -1], [3, -1]]));
    assert_eq!(report["constants_hold"], true);
    assert_eq!(report["right_mult_sign"], 1);
}

#[test]
fn scan_examples() {
    let v = json(&hypercx(&["scan", "--level", "2"]));
    assert_eq!(v["cliques"]["cliques"], serde_json::json!([[1, 2, 3]]));

    let v = json(&hypercx(&["scan", "--level", "3"]));
    assert_eq!(v["cliques"]["cliques"], serde_json::json!([[1, 2, 3, 4, 5, 6, 7]]));
    assert_eq!(v["hurwitz_radon"]["rho_minus_one"], 7);
    assert_eq!(v["hurwitz_radon"]["attained"], true);

    let out = hypercx(&["scan", "--level", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let cliques = v["cliques"]["cliques"].as_array().unwrap();
    assert!(cliques.iter().all(|c| c.as_array().unwrap().len() == 8));
    assert!(cliques.contains(&serde_json::json!([1, 2, 3, 4, 5, 6, 7, 8])));
    assert_eq!(v["extension"]["square_sign"], 1);
    assert_eq!(v["cliff15"]["confirmed"], true);
    assert_eq!(v["monomial_search"]["square_minus_one"], 0);

    let out = hypercx(&["scan", "--level", "3", "--format", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with(';') && l.contains(" -- ")).count(), 21);
}

#[test]
fn verify_examples() {
    for n in ["3", "4"] {
        let out = hypercx(&["verify", "--level", n]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let v = json(&out);
        assert_eq!(v["failed"], 0);
        assert_eq!(v["seed"], 42);
    }
    let out = hypercx(&["verify", "--level", "9"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(code(&hypercx(&["table", "--bogus"])), 2);
    assert_eq!(code(&hypercx(&["table"])), 2);
    assert_eq!(code(&hypercx(&["table", "--level", "3", "--format", "dot"])), 2);
    assert_eq!(code(&hypercx(&["table", "--level", "3", "--out", "/nonexistent-dir/t.json"])), 3);
    assert_eq!(code(&hypercx(&["scan", "--level", "5", "--budget", "1"])), 4);
    assert_eq!(code(&hypercx(&["table", "--level", "9"])), 2);
    assert_eq!(code(&hypercx(&["table", "--level", "9", "--max-level", "9"])), 0);

    let out = Command::new(env!("CARGO_BIN_EXE_hypercx"))
        .args(["table", "--level", "9"])
        .env("HYPERCX_MAX_LEVEL", "9")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["dim"], 512);
}

#[test]
fn out_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("hypercx-table-{}.json", std::process::id()));
    let out = hypercx(&["table", "--level", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written["triplets"], serde_json::json!([[1, 2, 3]]));
}

#[test]
fn output_is_deterministic() {
    for args in [&["scan", "--level", "5"][..], &["verify", "--level", "3", "--seed", "7"][..]] {
        assert_eq!(hypercx(args).stdout, hypercx(args).stdout);
    }
}
