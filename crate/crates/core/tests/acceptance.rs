//! One line per acceptance criterion, each backed by the exact checks in `verify`.
//! Runs without the libtest harness so the lines are always shown.

use std::path::PathBuf;

use elliptica::classifier::enumerate_lens_cases;
use elliptica::verify::{self, Check};

const LENS_MATRIX_MAX_M: u64 = 50;
const PROP_MAX_M: u64 = 200;
const CENSUS_MAX_M: u64 = 100;

fn census_artifact() -> Vec<Check> {
    let csv = verify::census_csv(&enumerate_lens_cases(CENSUS_MAX_M));
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    let out_dir = root.join("target/artifacts");
    let written = std::fs::create_dir_all(&out_dir)
        .and_then(|_| std::fs::write(out_dir.join("lens_census_m100.csv"), &csv))
        .is_ok();
    let published = std::fs::read_to_string(root.join("docs/lens_census_m100.csv")).unwrap_or_default();
    vec![
        Check { id: "10.04 census CSV written".into(), passed: written, detail: String::new() },
        Check {
            id: "10.05 census CSV matches docs/lens_census_m100.csv".into(),
            passed: csv == published,
            detail: String::new(),
        },
    ]
}

fn report(n: usize, title: &str, checks: Vec<Check>) -> bool {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let ok = !checks.is_empty() && failed.is_empty();
    println!(
        "criterion {n:>2} [{}] {title} ({} checks)",
        if ok { "PASS" } else { "FAIL" },
        checks.len()
    );
    for c in failed {
        println!("    {c}");
    }
    for c in checks.iter().filter(|c| c.passed && c.detail.contains("documented")) {
        println!("    note: {} — {}", c.id, c.detail);
    }
    ok
}

fn main() {
    let mut table = verify::table2_checks();
    table.extend(verify::table3_checks(LENS_MATRIX_MAX_M));
    let mut census = verify::census_checks(CENSUS_MAX_M);
    census.extend(census_artifact());

    let results = [
        report(1, "binary polyhedral groups, presentations, normalizer quotients", verify::table1_checks()),
        report(2, "R² = F(j,j), R⁴ = 1, R normalizes L(m,q) iff q² ≡ −1 (m ≤ 200)", verify::reflection_checks(PROP_MAX_M)),
        report(3, "F(j,1) normalizes L(m,q) iff q² ≡ 1, subgroup bookkeeping (m ≤ 200)", verify::lens_flip_checks(PROP_MAX_M)),
        report(4, "Isom and 𝓘 realized by explicit normalizers (families, lens m ≤ 50)", table),
        report(5, "quotient orbifolds S³/G", verify::table4_checks(LENS_MATRIX_MAX_M)),
        report(6, "Hopf fibering preservation and the Q₈ C₄ obstruction", verify::fibering_checks(LENS_MATRIX_MAX_M)),
        report(7, "induced automorphisms and injectivity into Out(π₁)", verify::mcg_checks(LENS_MATRIX_MAX_M)),
        report(8, "torus-group isomorphisms and involution class counts", verify::structural_suite()),
        report(9, "induced Möbius map h: homomorphism, kernel, fixed points", verify::hopf_checks(LENS_MATRIX_MAX_M)),
        report(10, "lens-space case census (m ≤ 100)", census),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
