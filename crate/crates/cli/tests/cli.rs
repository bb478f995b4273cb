use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangbaxter")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "A", "2"]).status.code(), Some(0));
    let g2 = run(&["verify", "G", "2"]);
    assert_eq!(g2.status.code(), Some(0));
    assert!(stdout(&g2).contains("20 of 20 suites passed"));
    assert_eq!(run(&["verify", "A", "9"]).status.code(), Some(3));
    assert_eq!(run(&["table", "A", "4", "--cap", "100"]).status.code(), Some(3));
    assert_eq!(run(&["table", "X", "2"]).status.code(), Some(2));
    assert_eq!(run(&["table", "D", "2"]).status.code(), Some(2));
    assert_eq!(run(&["table", "A", "2", "--q", "0/1", "--specialize"]).status.code(), Some(2));
    assert_eq!(run(&["table", "A", "2", "--q", "3/0", "--specialize"]).status.code(), Some(2));
    assert_eq!(run(&["whittaker", "A", "2", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "A", "2", "s1", "s2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate", "A", "2"]).status.code(), Some(2));
}

#[test]
fn malformed_words_name_the_letter() {
    let out = run(&["eval", "A", "2", "--p", "s1", "s3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("s3"));
    let out = run(&["eval", "A", "2", "--p", "s1", "s1t2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("'t'"));
}

#[test]
fn non_reduced_words_are_canonicalized_with_a_note() {
    let out = run(&["eval", "A", "2", "--p", "s1.s2.s2", "s1s2s1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("not reduced"));
    assert!(stdout(&out).starts_with("p(s1, s1s2s1) = "));
}

#[test]
fn eval_matches_table_entries() {
    let table: Value = serde_json::from_slice(&run(&["table", "A", "2", "--format", "json"]).stdout).unwrap();
    let eval: Value =
        serde_json::from_slice(&run(&["eval", "A", "2", "--ptilde", "s1", "s1s2s1", "--format", "json"]).stdout).unwrap();
    assert_eq!(eval["value"], table["tables"]["ptilde"]["s1|s1s2s1"]);
    let full: Value =
        serde_json::from_slice(&run(&["table", "A", "2", "--specialize", "--format", "json"]).stdout).unwrap();
    let a: Value = serde_json::from_slice(&run(&["eval", "A", "2", "--a", "s1", "s1s2s1", "--format", "json"]).stdout).unwrap();
    assert_eq!(a["value"], full["tables"]["a"]["s1|s1s2s1"]);
    assert_eq!(full["tables"].as_object().unwrap().len(), 2);
}

#[test]
fn json_is_versioned_with_sorted_keys() {
    let text = stdout(&run(&["table", "A", "1", "--format", "json"]));
    assert_eq!(text, include_str!("golden/table_A1.json"));
    for args in [
        &["verify", "A", "2", "--format", "json"][..],
        &["conjecture", "A", "2", "--format", "json"],
        &["whittaker", "A", "1", "--mu", "0", "--format", "json"],
        &["datum-dump", "B", "2", "--format", "json"],
    ] {
        let v: Value = serde_json::from_slice(&run(args).stdout).unwrap();
        assert_eq!(v["schema"], 1, "{args:?}");
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}

#[test]
fn latex_table_is_well_formed() {
    let text = stdout(&run(&["table", "B", "2", "--format", "latex"]));
    assert_eq!(text, include_str!("golden/table_B2.tex"));
    assert_eq!(text.matches("\\begin{tabular}").count(), 2);
    assert_eq!(text.matches("\\end{tabular}").count(), 2);
    let mut depth = 0i32;
    for c in text.chars() {
        depth += match c {
            '{' => 1,
            '}' => -1,
            _ => 0,
        };
        assert!(depth >= 0);
    }
    assert_eq!(depth, 0);
    for line in text.lines().filter(|l| l.ends_with("\\\\")) {
        assert_eq!(line.matches(" & ").count(), 8, "{line}");
        assert_eq!(line.matches('$').count() % 2, 0);
    }
}

#[test]
fn whittaker_rank_one() {
    let out = stdout(&run(&["whittaker", "A", "1", "--w", "e", "--mu", "0"]));
    assert_eq!(out, "W(e, mu=0) = -u*x1^2\npolynomial: true\n");
    let out = stdout(&run(&["whittaker", "A", "1", "--w", "e", "--mu", "0", "--q", "2"]));
    assert!(out.ends_with("at q = 2: -x1^2 / 2\n"), "{out}");
}

#[test]
fn conjecture_on_a3_passes() {
    let out = run(&["conjecture", "A", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("A3: 213 comparable pairs"));
    assert!(text.lines().next().unwrap().contains(" 0 failures"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    for args in [&["table", "B", "2"][..], &["conjecture", "A", "3", "--format", "json"], &["verify", "B", "2"]] {
        let one = run(&[args, &["--jobs", "1"]].concat());
        let four = run(&[args, &["--jobs", "4"]].concat());
        assert!(one.status.success());
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("yangbaxter-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a1.json");
    let out = run(&["table", "A", "1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), include_str!("golden/table_A1.json"));
    std::fs::remove_dir_all(&dir).unwrap();
}
