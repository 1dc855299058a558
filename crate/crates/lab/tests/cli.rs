use std::io::Write;
use std::process::{Command, Stdio};

fn lab(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn exit_codes_follow_verdicts() {
    assert_eq!(lab(&["check-cl", "--named", "gamma-2-2-2"], "").0, 0);
    assert_eq!(lab(&["check-cl", "--named", "diamond"], "").0, 1);
    assert_eq!(lab(&["check-cl", "--named", "diamond", "--method", "quotients"], "").0, 3);
    assert_eq!(lab(&["analyze"], "a b c\n").0, 2);
    assert_eq!(lab(&["verify", "no-such-suite"], "").0, 2);
}

#[test]
fn graph6_and_edge_lists_on_stdin() {
    let (code, text) = lab(&["analyze"], "a b\nb c\nc a\n");
    assert_eq!(code, 0);
    assert!(text.contains("vertices: 3 (a b c)"));
    let (code, text) = lab(&["analyze"], "Bw\nCF\n");
    assert_eq!(code, 0);
    assert_eq!(text.matches("vertices:").count(), 2);
}

#[test]
fn generated_graphs_round_trip() {
    let (_, g6) = lab(&["gen", "nclique", "2", "1", "1", "--as-g6"], "");
    let (_, text) = lab(&["construct", "bg"], &g6);
    assert_eq!(text.lines().count(), 4);
    let (_, gk) = lab(&["construct", "gk", "--k", "3"], "x y\n");
    assert!(gk.contains("x_1 y_1") && gk.contains("x_1 y_3") && gk.contains("x_2 y_2") && !gk.contains("x_2 y_3"));
}

#[test]
fn json_goes_to_stdout_with_dash() {
    let (code, out) = lab(&["verify", "fakhari", "--max-n", "3", "--max-k", "2", "--json", "-"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suite"], "fakhari");
    assert_eq!(v["config"]["max_n"], 3);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}
