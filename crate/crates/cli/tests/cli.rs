//! Subprocess integration tests: exit-code contract, determinism of
//! reports, file format round-trips, and the reproduction targets.

use std::io::Write;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_lieclass"))
        .args(args)
        .output()
        .expect("failed to run lieclass");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).to_string(),
        String::from_utf8_lossy(&output.stderr).to_string(),
    )
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("lieclass-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

const HEIS_FILE: &str = "\
format 1
name Heis
dim 3
basis X1 X2 X3
bracket X1 X2 = X3
derivation grading
row 1 0 0
row 0 1 0
row 0 0 2
end
";

#[test]
fn validate_file_and_catalog() {
    let path = write_temp("heis.lie", HEIS_FILE);
    let (code, stdout, _) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("ok"), "{stdout}");
    let (code2, stdout2, _) = run(&["validate", "A_{4,5}[1/2,1]"]);
    assert_eq!(code2, 0, "{stdout2}");
}

#[test]
fn malformed_rational_fails_with_location() {
    let path = write_temp(
        "bad.lie",
        "format 1\nname bad\ndim 2\nbasis X1 X2\nbracket X1 X2 = 1/0*X1\n",
    );
    let (code, _, stderr) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("line 5"), "{stderr}");
    assert!(stderr.contains("denominator"), "{stderr}");
}

#[test]
fn unknown_label_fails() {
    let (code, _, stderr) = run(&["info", "A_{9,99}"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("unknown catalog label"), "{stderr}");
}

#[test]
fn reach_on_example_pair() {
    let (code, stdout, _) = run(&["reach", "--s", "2", "ex21_alpha"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("dimension 3"), "{stdout}");
    let (_, stdout_b, _) = run(&["reach", "--s", "2", "ex21_beta"]);
    assert!(stdout_b.contains("dimension 2"), "{stdout_b}");
}

#[test]
fn compare_open_pair_exit_codes() {
    let (code, stdout, _) = run(&["compare", "ex25_n1", "ex25_n2"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("INCONCLUSIVE"), "{stdout}");
    // asserting a distinction on an open pair signals "still open" via 2
    let (code2, _, _) = run(&[
        "compare",
        "ex25_n1",
        "ex25_n2",
        "--expect",
        "distinguished",
    ]);
    assert_eq!(code2, 2);
    let (code3, _, _) = run(&["compare", "ex21_alpha", "ex21_beta", "--expect", "distinguished"]);
    assert_eq!(code3, 0);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["--json", "reproduce", "table1"],
        vec!["--json", "compare", "ex22_alpha", "ex22_beta"],
        vec!["--json", "profile", "ex24_alpha"],
        vec!["catalog", "dump", "A_{4,6}[1/2,1/3]"],
    ] {
        let (c1, out1, _) = run(&args);
        let (c2, out2, _) = run(&args);
        assert_eq!(c1, c2);
        assert_eq!(out1, out2, "nondeterministic output for {args:?}");
    }
}

#[test]
fn dump_round_trips_canonically() {
    let (code, dumped, _) = run(&["catalog", "dump", "A_{4,10}"]);
    assert_eq!(code, 0);
    let path = write_temp("a410.lie", &dumped);
    let (code2, redumped, _) = run(&["shadow", path.to_str().unwrap()]);
    assert_eq!(code2, 0, "{redumped}");
    // the twisted shadow of this instance keeps only [e2,e3]=e1
    assert!(redumped.contains("bracket e2 e3 = e1"), "{redumped}");
    assert!(!redumped.contains("bracket e2 e4"), "{redumped}");
}

#[test]
fn shadow_routes_agree_on_catalog_instance() {
    let (code, twisted, _) = run(&["shadow", "A_{4,6}[1/2,1/3]"]);
    let (code2, direct, _) = run(&["shadow", "--semidirect", "A_{4,6}[1/2,1/3]"]);
    assert_eq!(code, 0);
    assert_eq!(code2, 0);
    let body = |s: &str| {
        s.lines()
            .filter(|l| l.starts_with("bracket"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(body(&twisted), body(&direct));
}

#[test]
fn reproduce_targets_run_offline() {
    for (target, expect_clean) in [
        ("table1", true),
        ("table3", true),
        ("examples", true),
        // the bundled printed table disagrees with the verified shadows on
        // part of one two-parameter family; the tool reports those rows and
        // exits nonzero
        ("table2", false),
        ("thm4d", false),
    ] {
        let (code, stdout, _) = run(&["reproduce", target]);
        if expect_clean {
            assert_eq!(code, 0, "{target}:\n{stdout}");
            assert!(!stdout.contains("FAIL"), "{target}:\n{stdout}");
        } else {
            assert_eq!(code, 1, "{target}:\n{stdout}");
            assert!(stdout.contains("FAIL"), "{target}:\n{stdout}");
            assert!(
                stdout.contains("not proportional") || stdout.contains("computed tag"),
                "{target} failures must carry certificates:\n{stdout}"
            );
        }
    }
}

#[test]
fn weights_and_qitype_text_output() {
    let (code, stdout, _) = run(&["weights", "A_{3,7}[1/2]"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("completely solvable: false; type (R): false"), "{stdout}");
    let (code2, t, _) = run(&["qitype", "RxA_{3,1}"]);
    assert_eq!(code2, 0);
    assert_eq!(t.trim(), "poly growth");
    let (code3, t3, _) = run(&["qitype", "A_{4,3}"]);
    assert_eq!(code3, 0);
    assert_eq!(t3.trim(), "conedim 3");
}

#[test]
fn growth_via_nilshadow_for_type_r() {
    let (code, stdout, _) = run(&["growth", "RxA_{4,10}"]);
    assert_eq!(code, 0);
    // nilshadow is R^2 x Heis: growth 2 + 4
    assert!(stdout.contains("growth degree 6 (nilshadow)"), "{stdout}");
    let (code2, _, stderr) = run(&["growth", "A_2"]);
    assert_eq!(code2, 1);
    assert!(stderr.contains("nilpotent or type (R)"), "{stderr}");
}

#[test]
fn decompose_file_derivation() {
    let path = write_temp("heis2.lie", HEIS_FILE);
    let spec = format!("{}#grading", path.to_str().unwrap());
    let (code, stdout, _) = run(&["decompose", &spec]);
    assert_eq!(code, 0);
    assert!(stdout.contains("sr + si + nil"), "{stdout}");
}

#[test]
fn json_report_carries_digest_and_version() {
    let (code, stdout, _) = run(&["--json", "betti", "Heis"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["tool_version"], "0.1.0");
    assert_eq!(v["results"]["betti"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(v["inputs_digest"].as_str().unwrap().len(), 64);
}
