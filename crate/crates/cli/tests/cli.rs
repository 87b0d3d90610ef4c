//! End-to-end tests against the compiled binary.

use std::process::{Command, Output};

fn semiorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = semiorder(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn classify_flags() {
    assert_eq!(
        stdout_of(&["classify", "(0,1,0,1,2,0,2)"]),
        "valid=true semiorder=true hereditary=false restricted=false nodh=true dim=3\n"
    );
    assert_eq!(
        stdout_of(&["classify", "(0,1,2,3)"]),
        "valid=true semiorder=true hereditary=true restricted=true nodh=true dim=1\n"
    );
    assert_eq!(
        stdout_of(&["classify", "(0,0)"]),
        "valid=true semiorder=true hereditary=true restricted=true nodh=false dim=2\n"
    );
    // a sequence violating the ascent bound is an answer, not a usage error
    let out = semiorder(&["classify", "(0,2)"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("valid=false"));
}

#[test]
fn malformed_sequences_are_usage_errors() {
    for args in [
        &["classify", "(0,1"][..],
        &["repr", "0,1"][..],
        &["repr", "(0,2)"][..],
        &["decompose", "()"][..],
        &["enumerate", "--n", "0"][..],
        &["enumerate", "--n", "13"][..],
        &[
            "gf",
            "--which",
            "hereditary-nodh",
            "--terms",
            "5",
            "--asymptotics",
        ][..],
        &["gf", "--which", "nonsense", "--terms", "5"][..],
    ] {
        let out = semiorder(args);
        assert_eq!(out.status.code(), Some(2), "{args:?} should exit 2");
    }
}

#[test]
fn repr_output_forms() {
    assert_eq!(
        stdout_of(&["repr", "(0,1,0,1,2,0,2)"]),
        "{[0,0],[0,1],[0,2],[1,3],[2,4],[3,4],[4,4]}\n"
    );
    assert_eq!(
        stdout_of(&["repr", "(0,0,1)", "--json"]),
        "{\"n\":3,\"intervals\":[{\"l\":0,\"r\":0,\"mult\":2},{\"l\":1,\"r\":1,\"mult\":1}]}\n"
    );
    let ascii = stdout_of(&["repr", "(0,1,0)", "--ascii"]);
    assert_eq!(ascii, "[]\n[--]\n  []\n0 1\n");
    let conflict = semiorder(&["repr", "(0,1)", "--json", "--ascii"]);
    assert_eq!(conflict.status.code(), Some(2));
}

#[test]
fn decompose_output() {
    assert_eq!(stdout_of(&["decompose", "(0,0,0)"]), "T0\n");
    assert_eq!(
        stdout_of(&["decompose", "(0,1,0,1,0,1,0,3,2,4,6,5,6,5,6,8,10)"]),
        "C_3^0 ;o W_2^3 | U_3^5 ; W_1^8 | T1^9\n"
    );
    assert_eq!(
        stdout_of(&["decompose", "(0,1,0,1,2,0,2)"]),
        "not hereditary at prefix 6\n"
    );
}

#[test]
fn enumerate_csv_is_exact() {
    let csv = stdout_of(&["enumerate", "--n", "7", "--csv", "--jobs", "1"]);
    let expected = "\
n,semiorders,hereditary,dim2,dim3
1,1,1,1,0
2,2,2,2,0
3,5,5,5,0
4,14,14,14,0
5,42,42,42,0
6,132,132,132,0
7,429,428,426,3
";
    assert_eq!(csv, expected);
}

#[test]
fn gf_coefficients_and_asymptotics() {
    assert_eq!(
        stdout_of(&["gf", "--which", "hereditary", "--terms", "7"]),
        "1, 2, 5, 14, 42, 132, 428\n"
    );
    let with_asy = stdout_of(&["gf", "--which", "dim2", "--terms", "3", "--asymptotics"]);
    let mut lines = with_asy.lines();
    assert_eq!(lines.next(), Some("1, 2, 5"));
    assert_eq!(
        lines.next(),
        Some("rho=0.311065 growth=3.214757 constant=0.129582")
    );
}

#[test]
fn bfile_format() {
    let bfile = stdout_of(&["bfile", "--which", "A293499", "--terms", "7"]);
    assert_eq!(bfile, "1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n7 428\n");
    let dim3 = stdout_of(&["bfile", "--which", "A293501", "--terms", "7"]);
    assert!(dim3.ends_with("7 3\n"));
}

#[test]
fn verify_passes_at_small_scope() {
    let out = semiorder(&["verify", "--n-max", "5", "--jobs", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.matches("[PASS]").count(), 10);
    assert_eq!(text.matches("[FAIL]").count(), 0);
}

#[test]
fn output_is_byte_stable() {
    let first = stdout_of(&["enumerate", "--n", "6"]);
    let second = stdout_of(&["enumerate", "--n", "6"]);
    assert_eq!(first, second);
}
