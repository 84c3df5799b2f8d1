use std::io::Write;
use std::process::{Command, Output};

fn zss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zss")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("zss-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(body.as_bytes())
        .unwrap();
    path
}

#[test]
fn count_only_report_4x5() {
    let o = zss(&[
        "enumerate",
        "--rows",
        "4",
        "--cols",
        "5",
        "--max-abs-disc",
        "8",
        "--count-only",
        "--jobs",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "shape 4x5\nconstraint |disc| <= 8\ntotal 40\nsplit 12\nexceptional 28\n\
         disc -8 14\ndisc -6 4\ndisc 0 4\ndisc 6 4\ndisc 8 14\n"
    );
}

#[test]
fn canonical_count_5x5() {
    let o = zss(&[
        "enumerate",
        "--rows",
        "5",
        "--cols",
        "5",
        "--max-abs-disc",
        "10",
        "--canonical",
        "--count-only",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("exceptional 32\n"));
    // six exceptional classes plus the one class of the eight split matrices
    assert!(out.contains("canonical_classes 7\n"), "{out}");
}

#[test]
fn jsonl_records_have_fixed_key_order() {
    let o = zss(&[
        "enumerate",
        "--rows",
        "3",
        "--cols",
        "3",
        "--disc",
        "3",
        "--format",
        "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().collect();
    assert!(!lines.is_empty());
    for l in &lines {
        assert!(l.starts_with("{\"rows\":3,\"cols\":3,\"disc\":3,\"split\":"), "{l}");
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    }
    assert!(out.contains(r#""split":{"variant":"identity","t":2},"entries":["--+","-++","+++"]"#));
}

#[test]
fn text_stream_is_blank_line_separated_and_parses() {
    let o = zss(&["enumerate", "--rows", "4", "--cols", "5", "--disc", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let blocks: Vec<_> = out.split("\n\n").collect();
    assert_eq!(blocks.len(), 4);
    for b in blocks {
        let text = if b.ends_with('\n') {
            b.to_string()
        } else {
            format!("{b}\n")
        };
        let m: zss::BinaryMatrix = text.parse().unwrap();
        assert_eq!(m.discrepancy(), 0);
        assert!(m.is_zero_sum_square_free());
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["enumerate", "--rows", "4", "--cols", "5"][..],
        &[
            "enumerate",
            "--rows",
            "4",
            "--cols",
            "5",
            "--disc",
            "0",
            "--max-abs-disc",
            "3",
        ],
        &["enumerate", "--rows", "0", "--cols", "5", "--disc", "0"],
        &[
            "enumerate",
            "--rows",
            "65",
            "--cols",
            "5",
            "--disc",
            "0",
            "--count-only",
        ],
        &["enumerate", "--rows", "4", "--cols", "5", "--disc", "0", "--jobs", "0"],
        &["verify", "lemma9"],
        &["verify", "theorem5", "--n", "4"],
        &["verify", "all", "--full", "--max-n", "5"],
        &["frobnicate"],
    ] {
        let o = zss(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn classify_reports_split_and_witness() {
    let p = temp_file("split.txt", "3 3\n--+\n-++\n+++\n");
    let o = zss(&["classify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "disc 3, zssf, split(identity, t=2)\n");

    let p = temp_file("checker.txt", "2 2\n+-\n-+\n");
    let o = zss(&["classify", p.to_str().unwrap(), "--format", "jsonl"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["zssf"], false);
    assert_eq!(v["witness"], serde_json::json!({"i": 1, "j": 1, "s": 1}));
    assert_eq!(v["split"], serde_json::Value::Null);
}

#[test]
fn classify_parse_error_has_position() {
    let p = temp_file("bad.txt", "3 2\n+-\n+0\n--\n");
    let o = zss(&["classify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":3:2:"), "{err}");
    let o = zss(&["classify", "/nonexistent/zss-matrix.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_fast_checks_pass_in_both_formats() {
    let o = zss(&["verify", "claim8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("pass    claim8"), "{out}");
    assert!(out.ends_with("1 passed, 0 failed, 0 skipped\n"));

    let o = zss(&["verify", "lemma3", "--max-n", "6", "--format", "jsonl", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["name"], "lemma3");
    assert_eq!(v["status"], "pass");
    assert!(v["duration_ms"].is_u64());
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    for k in ["name", "status", "details", "witnesses", "duration_ms"] {
        assert!(keys.iter().any(|x| x == k), "{k}");
    }
}

#[test]
fn theorem5_beyond_budget_is_skipped_not_failed() {
    let o = zss(&["verify", "theorem5", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 8, "{out}");
    assert!(lines[0].starts_with("pass    theorem5[n=5]"));
    assert!(lines[1].starts_with("pass    theorem5[n=6]"));
    for (k, n) in (7..=11).enumerate() {
        assert!(lines[2 + k].starts_with(&format!("skipped theorem5[n={n}]")), "{out}");
    }
    assert_eq!(lines[7], "2 passed, 0 failed, 5 skipped");
}

#[test]
fn output_independent_of_worker_count() {
    let base = [
        "enumerate",
        "--rows",
        "6",
        "--cols",
        "7",
        "--max-abs-disc",
        "12",
        "--format",
        "jsonl",
    ];
    let runs: Vec<_> = ["1", "3", "8"]
        .iter()
        .map(|j| {
            let mut a = base.to_vec();
            a.extend(["--jobs", j]);
            zss(&a).stdout
        })
        .collect();
    assert!(!runs[0].is_empty());
    assert!(runs.iter().all(|r| *r == runs[0]));
}

#[test]
fn classify_constructed_split() {
    let s = zss::make_t_split(5, 5, 4).unwrap();
    let p = temp_file("t4.txt", &s.to_text());
    let o = zss(&["classify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "disc 5, zssf, split(identity, t=4)\n");
}

#[test]
fn trivial_and_single_checks() {
    let o = zss(&["enumerate", "--rows", "2", "--cols", "2", "--disc", "0", "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total 0\n"));
    let o = zss(&["verify", "theorem5", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass    theorem5[n=5]"));
}
