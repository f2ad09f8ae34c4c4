use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl-lifts"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn rootdata_b2_cartan() {
    let out = run(&["rootdata", "--type", "B", "--rank", "2"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["cartan"], serde_json::json!([[2, -2], [-1, 2]]));
    assert_eq!(doc["fundamental_group"], serde_json::json!([2]));
    assert_eq!(doc["roots"].as_array().unwrap().len(), 8);
}

#[test]
fn rootdata_d3_fundamental_group() {
    let out = run(&["rootdata", "--type", "D", "--rank", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["fundamental_group"], serde_json::json!([4]));
}

#[test]
fn rootdata_rejects_rank_zero() {
    let out = run(&["rootdata", "--type", "A", "--rank", "0"]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["verify", "--suite", "nonsense", "--rank", "2"])), 2);
    assert_eq!(code(&run(&["verify", "--suite", "classical", "--rank", "2"])), 2);
    assert_eq!(code(&run(&["closure", "--set", "no-such-set:2"])), 2);
    assert_eq!(code(&run(&["closure", "--set", "B-weyl-lift"])), 2);
    assert_eq!(code(&run(&["rootdata", "--type", "E", "--rank", "6"])), 2);
}

#[test]
fn closure_orders_and_expect() {
    for (set, order) in [("B-weyl-lift:3", 48), ("C-tits:2", 32), ("quat-c:1", 4), ("pin-b:2", 16)] {
        let out = run(&["closure", "--set", set, "--expect", &order.to_string()]);
        assert_eq!(code(&out), 0, "{set}");
    }
    let out = run(&["closure", "--set", "C-tits:2", "--expect", "64", "--json"]);
    assert_eq!(code(&out), 1);
    let doc = json(&out);
    assert_eq!(doc["order"], 32);
    assert_eq!(doc["matches"], false);
}

#[test]
fn closure_cap_exit_1() {
    let out = run(&["closure", "--set", "D-weyl-lift:4", "--cap", "10"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeded after 10"));
}

#[test]
fn closure_words() {
    let out = run(&["closure", "--set", "quat-c:1", "--words", "--json"]);
    let doc = json(&out);
    let mut lens: Vec<usize> = doc["words"].as_array().unwrap().iter().map(|w| w.as_array().unwrap().len()).collect();
    lens.sort();
    assert_eq!(lens, vec![0, 1, 2, 3]);
}

#[test]
fn verify_classical_c2_reports_square() {
    let out = run(&["verify", "--suite", "classical", "--type", "C", "--rank", "2", "--json"]);
    let doc = json(&out);
    let checks = doc[0]["checks"].as_array().unwrap();
    let square = checks.iter().find(|c| c["name"] == "(S^C_1)^2 == T^C_1").unwrap();
    assert_eq!(square["status"], "pass");
    // The fourth-power relation does not hold for these lifts, so the run fails.
    assert_eq!(code(&out), 1);
}

#[test]
fn verify_pin_d3_anti_braid() {
    let out = run(&["verify", "--suite", "pin", "--type", "D", "--rank", "3", "--json"]);
    let doc = json(&out);
    let checks = doc[0]["checks"].as_array().unwrap();
    let c = checks.iter().find(|c| c["name"] == "anti-braid sign").unwrap();
    assert_eq!(c["status"], "pass");
}

#[test]
fn passing_suites_exit_0() {
    for args in [
        vec!["verify", "--suite", "gl", "--rank", "3"],
        vec!["verify", "--suite", "serre", "--type", "D", "--rank", "4"],
        vec!["verify", "--suite", "classical", "--type", "B", "--rank", "3"],
        vec!["verify", "--suite", "quat", "--rank", "2"],
        vec!["verify", "--suite", "pin", "--rank", "3"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 0, "{args:?}\n{}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn json_is_deterministic_apart_from_timing() {
    let strip = |mut v: Value| {
        for r in v.as_array_mut().unwrap() {
            r["elapsed_ms"] = Value::Null;
        }
        serde_json::to_string(&v).unwrap()
    };
    let args = ["verify", "--suite", "adjoint", "--type", "B", "--rank", "3", "--json"];
    let a = strip(json(&run(&args)));
    let b = strip(json(&run(&args)));
    assert_eq!(a, b);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("weyl-lifts-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c3.json");
    let out = run(&["rootdata", "--type", "C", "--rank", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["rank"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}
