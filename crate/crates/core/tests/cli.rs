use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn zkrange(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zkrange"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn prove(statement: &[&str], witness: &str, out: &Path) -> Output {
    let mut args = vec!["prove"];
    args.extend_from_slice(statement);
    args.extend_from_slice(&["--witness", witness, "--out", out.to_str().unwrap()]);
    zkrange(&args)
}

fn verify(statement: &[&str], proof: &Path) -> Output {
    let mut args = vec!["verify"];
    args.extend_from_slice(statement);
    args.extend_from_slice(&["--proof", proof.to_str().unwrap()]);
    zkrange(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn bulletproofs_round_trip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.bin");
    let statement = ["--scheme", "bulletproofs", "--range", "0:4096"];

    let out = prove(&statement, "123", &file);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let bytes = fs::read(&file).unwrap();
    assert_eq!(&bytes[..4], b"ZKRP");
    assert_eq!(bytes[5], 0x03);
    assert_eq!(stdout(&out).trim(), format!("proof_size {}", bytes.len()));

    let out = verify(&statement, &file);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "accept");

    let mut tampered = bytes.clone();
    *tampered.last_mut().unwrap() ^= 1;
    fs::write(&file, &tampered).unwrap();
    let out = verify(&statement, &file);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "reject");

    fs::write(&file, &bytes[..bytes.len() / 2]).unwrap();
    assert_eq!(verify(&statement, &file).status.code(), Some(3));
}

#[test]
fn boudot_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.bin");
    let statement = ["--scheme", "boudot", "--range", "18:200", "--modulus-bits", "512"];
    assert_eq!(prove(&statement, "25", &file).status.code(), Some(0));
    assert_eq!(fs::read(&file).unwrap()[5], 0x01);
    assert_eq!(verify(&statement, &file).status.code(), Some(0));

    // a verifier with different parameters rejects
    let other = ["--scheme", "boudot", "--range", "18:200", "--modulus-bits", "512", "--seed", "9"];
    assert_eq!(verify(&other, &file).status.code(), Some(1));
}

#[test]
fn sigrange_round_trip_with_explicit_digits() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.bin");
    let statement = ["--scheme", "sigrange", "--range", "1000:2000", "--base", "4", "--digits", "5"];
    assert_eq!(prove(&statement, "1999", &file).status.code(), Some(0));
    assert_eq!(fs::read(&file).unwrap()[5], 0x02);
    assert_eq!(verify(&statement, &file).status.code(), Some(0));
}

#[test]
fn witness_out_of_range_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.bin");
    for (scheme, range, witness) in [
        ("bulletproofs", "0:256", "256"),
        ("sigrange", "10:20", "9"),
        ("boudot", "18:200", "200"),
    ] {
        let statement = ["--scheme", scheme, "--range", range, "--modulus-bits", "512"];
        assert_eq!(prove(&statement, witness, &file).status.code(), Some(2), "{scheme}");
    }
    assert!(!file.exists());
}

#[test]
fn bad_arguments_exit_3() {
    assert_eq!(zkrange(&["prove", "--scheme", "nope"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.bin");
    let statement = ["--scheme", "bulletproofs", "--range", "0:100"];
    assert_eq!(prove(&statement, "5", &file).status.code(), Some(3));
    let statement = ["--scheme", "bulletproofs", "--range", "0:256"];
    assert_eq!(prove(&statement, "five", &file).status.code(), Some(3));
    assert_eq!(verify(&statement, &dir.path().join("missing")).status.code(), Some(3));
    assert_eq!(zkrange(&["--help"]).status.code(), Some(0));
}

#[test]
fn params_lists_parameters() {
    let out = zkrange(&["params", "--scheme", "sigrange", "--range", "347184000:599644800"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("scheme sigrange"));
    assert!(text.lines().any(|l| l.starts_with("u ")));

    let out = zkrange(&["params", "--scheme", "bulletproofs", "--range", "0:4096"]);
    let text = stdout(&out);
    assert!(text.contains("n 12"));
    assert!(text.contains("padded_n 16"));
}

#[test]
fn bench_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = zkrange(&[
        "bench",
        "--scheme",
        "bulletproofs",
        "--bits",
        "4,8",
        "--reps",
        "3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    for f in ["bench.csv", "bench.md", "size.csv", "prove.csv", "verify.csv"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    assert_eq!(fs::read_to_string(dir.path().join("bench.csv")).unwrap().lines().count(), 3);
}
