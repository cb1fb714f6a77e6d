//! End-to-end command-line flows: exit codes, config files, and the
//! on-disk formats (tables, filtrations, zero files).

use std::fs;

use chebmoments::cli::run;
use chebmoments::conductors::{kummer, write_filtrations};
use chebmoments::groups::io::write_table;

#[test]
fn exit_codes() {
    // 0: success
    assert_eq!(run(["chebmoments", "group-table", "dihedral:3"]), 0);
    // 2: usage errors
    assert_eq!(run(["chebmoments", "frobnicate"]), 2);
    assert_eq!(run(["chebmoments", "psi", "--x", "100"]), 2); // missing args
    // 0: help is not an error
    assert_eq!(run(["chebmoments", "--help"]), 0);
}

#[test]
fn numeric_failure_is_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("tiny.toml");
    fs::write(&cfg, "[sieve]\nceiling = 1000\n").unwrap();
    // the window around x = 1e4 cannot fit under a ceiling of 1000
    let code = run([
        "chebmoments",
        "psi",
        "--ext",
        "cyclotomic:4",
        "--t",
        "delta_e_scaled",
        "--x",
        "10000",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(code, 3);
}

#[test]
fn format_failure_is_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.zeros");
    fs::write(&bad, "zeros broken-header\nnot a number\n").unwrap();
    assert_eq!(run(["chebmoments", "zeros-import", bad.to_str().unwrap()]), 4);
}

#[test]
fn zero_file_flow() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("mod4.zeros");
    assert_eq!(
        run([
            "chebmoments",
            "zeros-find",
            "--q",
            "4",
            "--index",
            "1",
            "--tmax",
            "20",
            "--out",
            out.to_str().unwrap(),
        ]),
        0
    );
    assert_eq!(run(["chebmoments", "zeros-import", out.to_str().unwrap()]), 0);
}

#[test]
fn conductor_file_flow() {
    // serialize the built-in radical-extension data and feed it back in
    let data = kummer(2, 3).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let ftxt = dir.path().join("filtration.txt");
    let ttxt = dir.path().join("table.txt");
    fs::write(&ftxt, write_filtrations(&data.primes)).unwrap();
    fs::write(&ttxt, write_table(&data.table)).unwrap();
    assert_eq!(
        run([
            "chebmoments",
            "conductor",
            "--filtration",
            ftxt.to_str().unwrap(),
            "--table",
            ttxt.to_str().unwrap(),
        ]),
        0
    );
}

#[test]
fn reproduce_and_verify_subcommands() {
    assert_eq!(run(["chebmoments", "reproduce", "jsum"]), 0);
    assert_eq!(run(["chebmoments", "verify-s2l", "--trials", "50", "--seed", "7"]), 0);
    // unknown suite: a format-level failure
    assert_eq!(run(["chebmoments", "reproduce", "bogus"]), 4);
}
