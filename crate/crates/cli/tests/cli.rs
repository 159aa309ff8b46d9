use std::process::{Command, Output};

fn pil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pil"))
        .args(args)
        .env_remove("PIL_DEFAULT_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn forward_example() {
    let o = pil(&["bijection", "forward", "--family", "cp1", "--n1", "2", "--n2", "2", "--mu", "1,2", "--eta", "3,9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3,[6,9],14,[18,21]\n");
}

#[test]
fn forward_trace_shows_cases() {
    let o = pil(&["bijection", "forward", "--family", "cp1", "--mu", "1+2", "--eta", "3+9", "--trace"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("IIa") && l.ends_with("[2,4],9,*[14,16],20")), "{text}");
    assert!(text.lines().any(|l| l.starts_with("Ib")));
    assert_eq!(text.lines().last(), Some("3,[6,9],14,[18,21]"));
}

#[test]
fn forward_zero_triple_echoes_base() {
    let o = pil(&["bijection", "forward", "--family", "cp1", "--n1", "2", "--n2", "2"]);
    assert_eq!(stdout(&o), "[2,4],[8,10],14,18\n");
}

#[test]
fn forward_json() {
    let o = pil(&["--format", "json", "bijection", "forward", "--family", "cp1", "--mu", "1,2", "--eta", "3,9"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["partition"], "3,[6,9],14,[18,21]");
    assert_eq!(v["weight"], 71);
}

#[test]
fn backward_example() {
    let o = pil(&["bijection", "backward", "--family", "cp2", "[3,6],9,14,[18,21]"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("beta ") && lines[0].contains("weight 64"), "{text}");
    assert_eq!(&lines[1..], ["mu 0,1", "eta 0,6"]);
}

#[test]
fn backward_rejects_bad_input() {
    // 4,5 violates cp1
    let o = pil(&["bijection", "backward", "--family", "cp1", "4,5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pil(&["bijection", "backward", "--family", "cp1", "[3,6,9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pil(&["bijection", "backward", "--family", "schur", "1,4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mismatched_lengths_are_usage_errors() {
    let o = pil(&["bijection", "forward", "--family", "cp1", "--n1", "3", "--mu", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn counts_csv() {
    let o = pil(&["counts", "--family", "cp1", "--max-n", "6"]);
    let text = stdout(&o);
    assert!(text.starts_with("n,m,count\n"));
    assert!(text.lines().any(|l| l == "6,2,1"));
}

#[test]
fn counts_zero() {
    let o = pil(&["counts", "--family", "gg22", "--max-n", "0"]);
    assert_eq!(stdout(&o), "n,m,count\n0,0,1\n");
}

#[test]
fn counts_json_lines() {
    let o = pil(&["--format", "json", "counts", "--family", "euler_distinct", "--max-n", "4"]);
    let total: u64 = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .filter(|v| v["n"] == 4)
        .map(|v| v["count"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 2);
}

#[test]
fn env_sets_default_truncation() {
    let o = Command::new(env!("CARGO_BIN_EXE_pil"))
        .args(["counts", "--family", "cp1"])
        .env("PIL_DEFAULT_N", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "n,m,count\n0,0,1\n2,1,1\n3,1,1\n");
}

#[test]
fn verify_passes() {
    let o = pil(&["verify", "--identity", "capparelli1", "--max-n", "60"]);
    assert_eq!(o.status.code(), Some(0));
    let o = pil(&["verify", "--identity", "euler", "--max-n", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let o = pil(&["--format", "json", "verify", "--identity", "gordon(3,2)", "--max-n", "30"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn verify_reports_mismatch() {
    let o = pil(&["verify", "--identity", "shifts", "--max-n", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fail,0,1,1,0"));
}

#[test]
fn verify_unknown_identity() {
    let o = pil(&["verify", "--identity", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(pil(&["counts"]).status.code(), Some(2));
    assert_eq!(pil(&["counts", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(pil(&["--format", "xml", "counts", "--family", "cp1"]).status.code(), Some(2));
}

#[test]
fn expand_series() {
    let o = pil(&["expand", "--series", "product:euler", "--max-n", "5"]);
    assert_eq!(stdout(&o), "n,coefficient\n0,1\n1,1\n2,1\n3,2\n4,2\n5,3\n");
    let o = pil(&["expand", "--series", "cp1", "--max-n", "6"]);
    assert!(stdout(&o).lines().any(|l| l == "6,2,1"));
    assert_eq!(pil(&["expand", "--series", "nope"]).status.code(), Some(2));
}

#[test]
fn fuzz_is_clean_and_deterministic() {
    let a = pil(&["fuzz", "--family", "gge22", "--max-n", "20", "--seed", "5", "--samples", "50"]);
    assert_eq!(a.status.code(), Some(0));
    let b = pil(&["fuzz", "--family", "gge22", "--max-n", "20", "--seed", "5", "--samples", "50"]);
    assert_eq!(a.stdout, b.stdout);
    let z = pil(&["fuzz", "--family", "cp1", "--max-n", "0"]);
    assert!(stdout(&z).ends_with(",0\n"));
}
