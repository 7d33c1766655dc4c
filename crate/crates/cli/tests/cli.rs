use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidseed"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn a1_seed_json() {
    let o = run(&[
        "seed", "--type", "A1", "--word", "1 1 1", "--format", "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["B"], serde_json::json!([[0], [1]]));
    assert_eq!(v["frozen"], serde_json::json!([1]));
    assert_eq!(v["mutable"], serde_json::json!([2]));
    assert_eq!(v["labels"], serde_json::json!([1, 2]));
}

#[test]
fn reduced_words_give_empty_seeds() {
    for (ty, w) in [("A2", "1 2 1"), ("A1", "1")] {
        let o = run(&["seed", "--type", ty, "--word", w]);
        assert!(o.status.success(), "{ty} {w}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["labels"], serde_json::json!([]));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["seed", "--type", "A2", "--word", "1 1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["seed", "--type", "A2", "--word", "1 3 1"])
            .status
            .code(),
        Some(1)
    );
    // usage errors must not look like a bad Demazure product
    assert_eq!(
        run(&["seed", "--type", "Q2", "--word", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["seed", "--type", "A2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(
        run(&["moves", "--type", "A2", "--word", "1 2 1 2", "--apply", "B1@1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["fold", "--type", "A2", "--word", "1 2 1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn negative_letters_parse() {
    let o = run(&[
        "seed",
        "--type",
        "A2",
        "--word",
        "-1 2 -2 1 2 1",
        "--format",
        "text",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("word    -1 2 -2 1 2 1"));
}

#[test]
fn mutate_negates_the_column() {
    let o = run(&["mutate", "--type", "A1", "--word", "1 1 1", "--seq", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["B"], serde_json::json!([[0], [-1]]));
    let o = run(&["mutate", "--type", "A1", "--word", "1 1 1", "--seq", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn moves_list_and_apply() {
    let o = run(&[
        "moves", "--type", "A2", "--word", "1 2 1 2", "--list", "--format", "text",
    ]);
    assert_eq!(stdout(&o), "B3@1\nB3@2\nB4@4\nB5@1 [solid]\n");
    let o = run(&[
        "moves",
        "--type",
        "B2",
        "--word",
        "1 2 1 2 1 2 1 2",
        "--apply",
        "B3@1",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["target"], "2 1 2 1 1 2 1 2");
    assert_eq!(v["mutations"], "μ(3,4,3)");
    assert_eq!(v["frozen_witness"], true);
}

#[test]
fn fold_prints_the_lift() {
    let o = run(&[
        "fold",
        "--type",
        "C2",
        "--word",
        "1 2 1 2 2",
        "--lift",
        "--format",
        "text",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "C2 <- A3\nlift     1 3 2 1 3 2 2\nposition [1, 1, 2, 3, 3, 4, 5]\n"
    );
    let o = run(&["fold", "--type", "G2", "--word", "1 2 1 2 1 2 1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed_ok"], true);
    let o = run(&[
        "seed",
        "--type",
        "B3",
        "--word",
        "1 2 3 1 2 3 1 2 3 3",
        "--fold-check",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn verify_suites_pass() {
    for args in [
        ["verify", "--oracle", "--type", "A2", "--max-len", "6"],
        ["verify", "--moves", "--type", "B2", "--max-len", "6"],
        ["verify", "--fold", "--type", "G2", "--max-len", "8"],
    ] {
        let o = run(&args);
        assert!(o.status.success(), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains(" 0 failures"), "{}", stdout(&o));
    }
}

#[test]
fn verify_output_is_stable() {
    let args = [
        "verify",
        "--type",
        "C2",
        "--samples",
        "40",
        "--max-len",
        "9",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = run(&[&args[..], &["--jobs", "1"]].concat());
    let b = run(&[&args[..], &["--jobs", "3"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let o = Command::new(env!("CARGO_BIN_EXE_braidseed"))
        .args(args)
        .env("BRAIDSEED_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.stdout, a.stdout);
}

#[test]
fn identical_inputs_give_identical_bytes() {
    for format in ["json", "dot", "text"] {
        let args = [
            "seed",
            "--type",
            "G2",
            "--word",
            "1 2 1 2 1 2 2 1",
            "--format",
            format,
        ];
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("braidseed-{}.dot", std::process::id()));
    let o = run(&[
        "seed",
        "--type",
        "A2",
        "--word",
        "1 1 2 1 2",
        "--format",
        "dot",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("digraph seed {"));
}
