use std::path::Path;
use std::process::{Command, Output};

fn cyclext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclext"))
        .args(args)
        .env_remove("CYCLEXT_CTX")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn documented_exit_codes() {
    let o = cyclext(&["conj", "--group", "artin:4", "t^1 x2", "t^1 x1 x2 x1^-1"]);
    assert_eq!(code(&o), 0);
    let o = cyclext(&["conj", "--group", "artin:4", "t^2 x1", "t^1 x1"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "not conjugate");
    let o = cyclext(&["nf", "--group", "shift", "t^1 x3 x1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("t^1 x0 x3"));
}

#[test]
fn errors_exit_2_on_stderr() {
    let o = cyclext(&["nf", "--group", "artin:4", "t^1 x1 q7"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("q7"));
    assert_eq!(code(&cyclext(&["nf", "x1"])), 2);
    assert_eq!(code(&cyclext(&["nf", "--group", "artin:2", "x1"])), 2);
    assert_eq!(code(&cyclext(&["nf", "--group", "free", "x1"])), 2);
    assert_eq!(
        code(&cyclext(&["nf", "--ctx", "/nonexistent.json", "x1"])),
        2
    );
}

#[test]
fn json_output_matches_golden_files() {
    let o = cyclext(&["nf", "--group", "artin:4", "--json", "t^1 y0 y1 y0^-1"]);
    assert_eq!(stdout(&o), golden("nf_artin4.json"));
    let o = cyclext(&[
        "conj",
        "--group",
        "artin:4",
        "--json",
        "t^1 x2",
        "t^1 x1 x2 x1^-1",
    ]);
    assert_eq!(stdout(&o), golden("conj_artin4.json"));
    let o = cyclext(&["shift-nf", "--json", "t^1 x3 x1"]);
    assert_eq!(stdout(&o), golden("shift_nf.json"));
}

#[test]
fn json_has_the_stable_keys() {
    for args in [
        &["reduce", "--group", "artin:4", "--json", "x1 x1^-1 x2"][..],
        &[
            "cyclic-reduce",
            "--group",
            "artin:4",
            "--json",
            "x1 x2 x1^-1",
        ],
        &["delta-reduce", "--group", "artin:6", "--json", "x1 x2"],
        &[
            "oracle", "--group", "artin:4", "--json", "--len", "2", "t^1 x2", "t^1 x1",
        ],
        &["shift-conj", "--json", "t^1 x3 x1", "t^1 x5 x3"],
        &["verify-ctx", "--group", "artin:4", "--json"],
    ] {
        let v: serde_json::Value = serde_json::from_str(&stdout(&cyclext(args))).unwrap();
        for key in ["result", "certificate", "diagnostics"] {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}");
        }
    }
}

#[test]
fn print_parse_round_trip() {
    for text in [
        "t^2 x1 x2^-1",
        "1",
        "t^-3",
        "x2^-1 x1 x1",
        "t^1 x1 x2 x1^-1",
    ] {
        let once = stdout(&cyclext(&["reduce", "--group", "artin:6", text]));
        assert_eq!(once.trim(), text);
        let twice = stdout(&cyclext(&["reduce", "--group", "artin:6", once.trim()]));
        assert_eq!(once, twice);
    }
    let o = cyclext(&["reduce", "--group", "shift", "x-3 x0^-1 x0 x2"]);
    assert_eq!(stdout(&o).trim(), "x-3 x2");
}

#[test]
fn delta_reduce_example() {
    let o = cyclext(&[
        "delta-reduce",
        "--group",
        "shift",
        "--delta",
        "x1^-1 x2^-1 x3 x2 x1",
        "x1^-1 x2^-1 x3 x3 x3 x2 x1 x1",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0].split_whitespace().count(), 6);
    assert_eq!(lines[1], "k: 3");
    assert!(lines[2].contains(" 0:8 1:10 2:10 3:6 "));
}

#[test]
fn oracle_and_shift_commands() {
    let o = cyclext(&[
        "oracle",
        "--group",
        "artin:4",
        "--len",
        "3",
        "--toff",
        "2",
        "t^1 y1",
        "t^1 y0 y1 y0^-1",
    ]);
    assert_eq!(code(&o), 0);
    let o = cyclext(&[
        "oracle",
        "--group",
        "artin:4",
        "--len",
        "4",
        "--toff",
        "2",
        "t^1 y0",
        "t^1 y0^-1",
    ]);
    assert_eq!(code(&o), 1);
    assert_eq!(
        code(&cyclext(&[
            "oracle",
            "--group",
            "shift",
            "t^1 x3 x1",
            "t^1 x5 x3"
        ])),
        0
    );
    assert_eq!(code(&cyclext(&["shift-conj", "t^1 x3 x1", "t^1 x5 x3"])), 0);
    assert_eq!(
        code(&cyclext(&["shift-conj", "t^1 x3 x1", "t^1 x5 x3^-1"])),
        1
    );
    assert_eq!(
        code(&cyclext(&[
            "conj",
            "--group",
            "shift",
            "t^1 x3 x1",
            "t^1 x5 x3"
        ])),
        0
    );
}

const A4_FILE: &str = r#"{"rank": 2, "t_order": "inf", "images": ["x1 x2 x1^-1", "x1"]}"#;

#[test]
fn context_files_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a4.json");
    std::fs::write(&path, A4_FILE).unwrap();
    let p = path.to_str().unwrap();
    let o = cyclext(&["verify-ctx", "--ctx", p]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("m 2"));
    let via_flag = cyclext(&["nf", "--ctx", p, "t^1 x1 x2 x1^-1"]);
    let via_env = Command::new(env!("CARGO_BIN_EXE_cyclext"))
        .args(["nf", "t^1 x1 x2 x1^-1"])
        .env("CYCLEXT_CTX", p)
        .output()
        .unwrap();
    assert_eq!(code(&via_env), 0);
    assert_eq!(stdout(&via_flag), stdout(&via_env));
    let preset = cyclext(&["nf", "--group", "artin:4", "t^1 x1 x2 x1^-1"]);
    assert_eq!(stdout(&via_flag), stdout(&preset));
}

#[test]
fn invalid_context_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"rank": 2, "t_order": "inf", "images": ["x1 x2 x1^-1", "x1"], "m": 2, "delta": "x1 x2"}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = cyclext(&["verify-ctx", "--ctx", p]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("failure:"));
    assert_eq!(code(&cyclext(&["nf", "--ctx", p, "x1"])), 2);
}

#[test]
fn seeded_checks_are_reproducible() {
    let a = stdout(&cyclext(&[
        "verify-ctx",
        "--group",
        "artin:5",
        "--seed",
        "7",
        "--json",
    ]));
    let b = stdout(&cyclext(&[
        "verify-ctx",
        "--group",
        "artin:5",
        "--seed",
        "7",
        "--json",
    ]));
    assert_eq!(a, b);
    assert!(a.contains("\"seed\": 7"));
}
