use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;

use symprod_core::io::{model_to_json, series_from_json};
use symprod_core::spaces::p1_model;

fn symprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symprod"))
        .args(args)
        .env_remove("SYMPROD_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    format!("file:{}", path.display())
}

const ONE: &str = r#"{"num": [[0, "1"]], "den": [[0, "1"]]}"#;

#[test]
fn p1_hirzebruch_table() {
    let out = symprod(&[
        "classes",
        "--model",
        "p1",
        "--base",
        "hirzebruch",
        "--pipeline",
        "hirzebruch",
        "--N",
        "4",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[1], "1\t(1 + y)*b0 + (1 - y)*b1");
}

#[test]
fn point_todd_is_binomial() {
    let out = symprod(&[
        "classes",
        "--model",
        "point",
        "--base",
        "chi=3",
        "--pipeline",
        "todd",
        "--N",
        "5",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\tpt\n1\t3*pt\n2\t6*pt\n3\t10*pt\n4\t15*pt\n5\t21*pt\n");
}

#[test]
fn bad_flags_exit_2() {
    let base = [
        "classes",
        "--model",
        "p1",
        "--base",
        "hirzebruch",
        "--pipeline",
        "hirzebruch",
    ];
    assert_eq!(code(&symprod(&[&base[..], &["--N", "-1"]].concat())), 2);
    assert_eq!(
        code(&symprod(&[
            "classes",
            "--model",
            "p2",
            "--base",
            "hirzebruch",
            "--pipeline",
            "todd"
        ])),
        2
    );
    assert_eq!(
        code(&symprod(&[
            "classes",
            "--model",
            "p1",
            "--base",
            "poly=2y",
            "--pipeline",
            "todd"
        ])),
        2
    );
    assert_eq!(
        code(&symprod(&[
            "classes",
            "--model",
            "p1",
            "--base",
            "l",
            "--pipeline",
            "l"
        ])),
        2
    );
    assert_eq!(code(&symprod(&[&base[..], &["--y-eval", "1/0"]].concat())), 2);
    assert_eq!(code(&symprod(&["genera", "--N", "3"])), 2);
    assert_eq!(code(&symprod(&["verify", "--suite", "bogus"])), 2);
}

#[test]
fn max_n_is_capped() {
    let args = [
        "classes",
        "--model",
        "point",
        "--base",
        "chi=1",
        "--pipeline",
        "todd",
        "--N",
        "5",
    ];
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_symprod"))
            .args(args)
            .env("SYMPROD_MAX_N", cap)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("4")), 2);
    assert_eq!(code(&run("5")), 0);
    assert_eq!(code(&run("many")), 2);
    assert_eq!(code(&symprod(&["genera", "--chi-a", "1", "--N", "65"])), 2);
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "--suite", "p1", "--N", "6"],
        vec!["verify", "--suite", "oracle", "--N", "5", "--seed", "7"],
        vec!["verify", "--suite", "genera", "--N", "12"],
        vec!["verify", "--suite", "specializations", "--N", "4", "--seed", "3"],
    ] {
        let out = symprod(&args);
        assert_eq!(code(&out), 0, "{args:?}: {}", stdout(&out));
        let text = stdout(&out);
        assert!(
            text.lines().all(|l| l.starts_with("PASS") || l.ends_with("0 failed")),
            "{text}"
        );
    }
}

#[test]
fn genera_examples() {
    let out = symprod(&["genera", "--chi-y", "1+y", "--N", "3"]);
    assert_eq!(stdout(&out), "0\t1\n1\t1 + y\n2\t1 + y + y^2\n3\t1 + y + y^2 + y^3\n");
    let out = symprod(&["genera", "--sigma", "0", "--chi", "2", "--N", "5"]);
    assert_eq!(stdout(&out), "0\t1\n1\t0\n2\t1\n3\t0\n4\t1\n5\t0\n");
    assert_eq!(code(&symprod(&["genera", "--sigma", "1", "--chi", "2"])), 6);
    let out = symprod(&["genera", "--chi-a", "2", "--N", "3"]);
    assert_eq!(stdout(&out), "0\t1\n1\t2\n2\t3\n3\t4\n");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "classes",
        "--model",
        "p1",
        "--base",
        "hirzebruch",
        "--pipeline",
        "hirzebruch",
        "--N",
        "5",
        "--format",
        "table-doc",
    ];
    assert_eq!(symprod(&args).stdout, symprod(&args).stdout);
}

#[test]
fn table_doc_is_reconsumable() {
    let out = symprod(&[
        "classes",
        "--model",
        "p1",
        "--base",
        "hirzebruch",
        "--pipeline",
        "chern-limit",
        "--N",
        "4",
        "--format",
        "table-doc",
    ]);
    assert_eq!(code(&out), 0);
    let model = Arc::new(p1_model(4));
    let series = series_from_json(&stdout(&out), &model).unwrap();
    assert_eq!(series.term(1).to_string(), "2*b0 + b1");
}

#[test]
fn file_model_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "p1.json", &model_to_json(&p1_model(5)));
    let from_file = symprod(&[
        "classes",
        "--model",
        &model,
        "--base",
        "chi=2",
        "--pipeline",
        "hirzebruch",
        "--N",
        "4",
    ]);
    let builtin = symprod(&[
        "classes",
        "--model",
        "p1",
        "--base",
        "chi=2",
        "--pipeline",
        "hirzebruch",
        "--N",
        "4",
    ]);
    assert_eq!(code(&from_file), 0);
    assert_eq!(from_file.stdout, builtin.stdout);
}

#[test]
fn file_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let missing = format!("file:{}", dir.path().join("missing.json").display());
    assert_eq!(
        code(&symprod(&[
            "classes",
            "--model",
            &missing,
            "--base",
            "chi=1",
            "--pipeline",
            "todd"
        ])),
        3
    );
    let garbage = write(dir.path(), "bad.json", "{\"N\": 1, \"modules\": [");
    let out = symprod(&["classes", "--model", &garbage, "--base", "chi=1", "--pipeline", "todd"]);
    assert_eq!(code(&out), 3);
    assert!(!out.stderr.is_empty());
}

#[test]
fn invariant_violation_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    // pt * 1 = 2 pt breaks the unit law
    let doc = r#"{"N": 1, "modules": [[["1", 0]], [["pt", 0]]],
        "tensors": [{"n": 0, "m": 0, "entries": [[0, 0, 0, "1"]]},
                    {"n": 0, "m": 1, "entries": [[0, 0, 0, "1"]]},
                    {"n": 1, "m": 0, "entries": [[0, 0, 0, "2"]]}],
        "diagonals": [{"r": 1, "entries": [[0, 0, "1"]]}]}"#;
    let path = write(dir.path(), "broken.json", doc);
    let out = symprod(&[
        "classes",
        "--model",
        &path,
        "--base",
        "chi=1",
        "--pipeline",
        "todd",
        "--N",
        "1",
    ]);
    assert_eq!(code(&out), 4, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn pole_exits_5() {
    let dir = tempfile::tempdir().unwrap();
    let class = write(
        dir.path(),
        "base.json",
        &format!(r#"{{"module": 1, "coeffs": [["b1", {ONE}]]}}"#),
    );
    let out = symprod(&[
        "classes",
        "--model",
        "p1",
        "--base",
        &class,
        "--pipeline",
        "chern-limit",
        "--N",
        "2",
    ]);
    assert_eq!(code(&out), 5, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn y_eval_specializes() {
    let out = symprod(&[
        "classes",
        "--model",
        "p1",
        "--base",
        "hirzebruch",
        "--pipeline",
        "hirzebruch",
        "--N",
        "2",
        "--y-eval",
        "0",
    ]);
    assert_eq!(stdout(&out), "0\tb0\n1\tb0 + b1\n2\tb0 + 3/2*b1 + b2\n");
}
