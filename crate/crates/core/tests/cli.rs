use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ncsf::cache::matrix_path;
use ncsf::output::{Document, Format};

fn ncsf(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncsf")).args(args).env("NCSF_CACHE_DIR", cache).output().expect("binary runs")
}

fn stdout(cache: &Path, args: &[&str]) -> String {
    let out = ncsf(cache, args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stderr.is_empty(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn statistics() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout(dir.path(), &["stat", "351274698", "sc"]), "1,3,3,2\n");
    assert_eq!(stdout(dir.path(), &["stat", "123", "sc"]), "1,1,1\n");
    assert_eq!(stdout(dir.path(), &["stat", "1243", "octype"]), "1,1,2\n");
    assert_eq!(stdout(dir.path(), &["stat", "10,1,2,3,4,5,6,7,8,9", "sc"]), "10\n");
}

#[test]
fn small_tables() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout(dir.path(), &["table", "1", "M"]), "1\n1\n");
    assert_eq!(stdout(dir.path(), &["table", "2", "U"]), "U_2 = F_2\nU_11 = F_11\n");
    assert!(stdout(dir.path(), &["table", "3", "M"]).starts_with("3 12 21 111\n"));
}

#[test]
fn products() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout(dir.path(), &["product", "1", "1", "--basis", "v"]), "V_2 + V_11\n");
    assert_eq!(
        stdout(dir.path(), &["product", "2", "3,1", "--basis", "vprime"]),
        "V'_33 + 3 V'_42 + 6 V'_51 + V'_132 + 3 V'_141 + V'_231\n"
    );
    let v = stdout(dir.path(), &["product", "1,1,2,1", "1,1,1", "--basis", "v"]);
    for term in ["21 V_11111111", "6 V_1121111", "V_112211", "3 V_113111", "10 V_1211111", "15 V_2111111"] {
        assert!(v.contains(term), "{v}");
    }
}

#[test]
fn q_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let expected = "q^17 + 3q^16 + 6q^15 + 9q^14 + 11q^13 + 12q^12 + 11q^11 + 9q^10 + 6q^9 + 3q^8 + q^7\n";
    assert_eq!(stdout(dir.path(), &["qcoeff", "2,3,2"]), expected);
    assert_eq!(stdout(dir.path(), &["qcoeff", "2,3,2", "--solve"]), expected);
    assert_eq!(stdout(dir.path(), &["qcoeff", "2", "--tilde"]), "1\n");
}

#[test]
fn census_and_insertion() {
    let dir = tempfile::tempdir().unwrap();
    let sizes = stdout(dir.path(), &["classes", "9", "eq1", "--sizes"]);
    assert!(sizes.lines().any(|l| l.contains("3360")));
    assert!(stdout(dir.path(), &["classes", "5", "eq2"]).contains("16"));
    let bfs = stdout(dir.path(), &["--format", "csv", "classes", "5", "mirror", "--sizes", "--bfs"]);
    assert_eq!(bfs.lines().count(), 17);
    assert_eq!(
        stdout(dir.path(), &["insert", "532498617", "eq1"]),
        "P = 5(2(6 7 8 9(1)) 3 4)\nQ = 1(2 3(5(8) 6 7 9) 4)\n"
    );
}

#[test]
fn json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let commands: [&[&str]; 9] = [
        &["stat", "351274698", "sc"],
        &["table", "4", "U"],
        &["table", "3", "Minv"],
        &["table", "4", "Z"],
        &["product", "2", "3,1", "--basis", "vprime"],
        &["qcoeff", "2,3,2"],
        &["classes", "5", "eq1", "--sizes"],
        &["insert", "532498617", "eq1"],
        &["insert", "2413", "mirror"],
    ];
    for args in commands {
        let mut json_args = vec!["--format", "json"];
        json_args.extend_from_slice(args);
        let json = stdout(dir.path(), &json_args);
        let doc: Document = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.render(Format::Json).unwrap(), json, "{args:?}");
        assert_eq!(doc.render(Format::Text).unwrap(), stdout(dir.path(), args), "{args:?}");
    }
}

#[test]
fn csv_output() {
    let dir = tempfile::tempdir().unwrap();
    let csv = stdout(dir.path(), &["--format", "csv", "table", "3", "M"]);
    assert_eq!(csv.lines().count(), 5);
    assert!(csv.lines().next().unwrap().contains("111"));
}

#[test]
fn errors_exit_nonzero_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["stat", "12a", "sc"][..],
        &["stat", "122", "sc"],
        &["table", "9", "M"],
        &["table", "6", "U", "--degree-bound", "5"],
        &["product", "0,1", "1"],
        &["classes", "3", "eq9"],
    ] {
        let out = ncsf(dir.path(), args);
        assert!(!out.status.success(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn cache_is_written_and_corruption_recovers() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = stdout(dir.path(), &["table", "4", "M"]);
    let path = matrix_path(dir.path(), 4);
    assert!(path.exists());
    assert_eq!(stdout(dir.path(), &["table", "4", "M"]), fresh);

    fs::write(&path, "{\"schema\": 3").unwrap();
    let out = ncsf(dir.path(), &["table", "4", "M"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), fresh);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("warning:"));
    assert_eq!(stdout(dir.path(), &["table", "4", "M"]), fresh);
}

#[test]
fn no_cache_leaves_directory_empty() {
    let dir = tempfile::tempdir().unwrap();
    stdout(dir.path(), &["--no-cache", "table", "4", "VR"]);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}
