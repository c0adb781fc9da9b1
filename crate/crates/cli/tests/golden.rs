//! Byte-for-byte comparison of CLI output against `tests/golden/`.
//! Regenerate with `ELLIPTICA_BLESS=1 cargo test -p elliptica-cli --test golden`.

use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("classify_lens_7_5.txt", &["classify", "lens", "7", "5"]),
    ("classify_lens_12_5.json", &["classify", "lens", "12", "5", "--json"]),
    ("classify_lens_5_2.txt", &["classify", "lens", "5", "2"]),
    ("classify_lens_1_0.txt", &["classify", "lens", "1", "0"]),
    ("classify_quaternionic_1.json", &["classify", "family", "quaternionic", "--n", "1", "--json"]),
    ("classify_prism_3_5.txt", &["classify", "family", "prism", "--m", "3", "--n", "5"]),
    ("classify_prism_diagonal_3_2_approx.txt", &["classify", "family", "prism-diagonal", "--m", "3", "--n", "2", "--approx"]),
    ("classify_icosahedral_1.txt", &["classify", "family", "icosahedral"]),
    ("tables.txt", &["tables"]),
    ("tables_3.json", &["tables", "--which", "3", "--json"]),
    ("enumerate_lens_30.csv", &["enumerate-lens", "--max-m", "30"]),
    ("enumerate_lens_8.json", &["enumerate-lens", "--max-m", "8", "--format", "json"]),
    ("verify_table1.txt", &["verify", "--suite", "table1"]),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn outputs_match_golden_files() {
    let bless = std::env::var_os("ELLIPTICA_BLESS").is_some();
    let mut mismatched = Vec::new();
    for (file, args) in CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_elliptica"))
            .args(*args)
            .env_remove("ELLIPTICA_MAX_M")
            .output()
            .unwrap();
        assert!(out.status.success(), "{args:?} exited with {:?}", out.status);
        let path = golden_dir().join(file);
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {file}"));
        if expected != out.stdout {
            mismatched.push(*file);
        }
    }
    assert!(mismatched.is_empty(), "output differs from golden files: {mismatched:?}");
}
