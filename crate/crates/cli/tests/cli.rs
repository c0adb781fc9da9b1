use std::process::{Command, Output};

use elliptica::isometry::ManifoldDescriptor;
use elliptica_cli::{classification_report, family_descriptor, resolve_max_m, ClassificationReport};

fn run(args: &[&str], env: Option<(&str, &str)>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_elliptica"));
    c.args(args).env_remove("ELLIPTICA_MAX_M");
    if let Some((k, v)) = env {
        c.env(k, v);
    }
    c.output().unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn usage_errors_name_the_constraint() {
    let cases: &[(&[&str], &str)] = &[
        (&["classify", "lens", "6", "2"], "(m,q)=1 required"),
        (&["classify", "lens", "0", "1"], "m ≥ 1 required"),
        (&["classify", "family", "prism", "--m", "3", "--n", "3"], "(2m,n)=1 required"),
        (&["classify", "family", "prism", "--n", "5"], "--m required"),
        (&["classify", "family", "quaternionic", "--n", "2"], "(2,n)=1 required"),
        (&["classify", "family", "tetrahedral", "--n", "3"], "(6,n)=1 required"),
        (&["classify", "family", "icosahedral", "--n", "5"], "(30,n)=1 required"),
        (&["classify", "family", "klein", "--n", "1"], "klein"),
        (&["enumerate-lens", "--max-m", "1"], "max-m ≥ 2 required"),
        (&["verify", "--suite", "props", "--max-m", "0"], "max-m ≥ 1 required"),
        (&["tables", "--which", "5"], "--which must be 2, 3 or 4"),
        (&["verify", "--suite", "table9"], "unknown suite"),
    ];
    for (args, needle) in cases {
        let o = run(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn canonicalization_note() {
    let o = run(&["classify", "lens", "7", "5"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("note: canonicalized to L(7,2)\n"));
}

#[test]
fn max_m_from_environment() {
    let o = run(&["enumerate-lens"], Some(("ELLIPTICA_MAX_M", "5")));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().count(), 6);
    let o = run(&["enumerate-lens", "--max-m", "3"], Some(("ELLIPTICA_MAX_M", "5")));
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().count(), 4);
    let o = run(&["enumerate-lens"], Some(("ELLIPTICA_MAX_M", "lots")));
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(resolve_max_m(None, None, 2).unwrap(), 100);
}

#[test]
fn verify_suite_exit_code() {
    let o = run(&["verify", "--suite", "props", "--max-m", "30", "--json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() > 0);
}

fn reports() -> Vec<ClassificationReport> {
    let mut ds: Vec<ManifoldDescriptor> =
        [(1, 0), (2, 1), (5, 1), (5, 2), (7, 2), (8, 3), (12, 5)].iter().map(|&(m, q)| ManifoldDescriptor::Lens { m, q }).collect();
    for (name, m, n) in [
        ("quaternionic", None, Some(1)),
        ("prism", Some(5), Some(3)),
        ("prism-diagonal", Some(3), Some(4)),
        ("tetrahedral-diagonal", None, Some(9)),
        ("octahedral", None, Some(5)),
        ("icosahedral", None, Some(1)),
    ] {
        ds.push(family_descriptor(name, m, n).unwrap());
    }
    ds.iter().map(|d| classification_report(d, true).unwrap()).collect()
}

#[test]
fn exact_witnesses_round_trip() {
    for r in reports() {
        let text = serde_json::to_string(&r).unwrap();
        let back: ClassificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let info = elliptica::classifier::classify(&r.descriptor).unwrap();
        for (w, orig) in back.witnesses.iter().zip(&info.witnesses) {
            let f = w.to_isometry().unwrap();
            assert_eq!(&f, orig, "{}", r.manifold);
            assert_eq!(f.key(), orig.key(), "{}", r.manifold);
        }
    }
}

#[test]
fn reports_conform_to_schema() {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../schema/report.json")).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    for with_approx in [false, true] {
        for r in reports() {
            let mut v = serde_json::to_value(&r).unwrap();
            if !with_approx {
                for w in v["witnesses"].as_array_mut().unwrap() {
                    w.as_object_mut().unwrap().remove("approx");
                }
            }
            let errors: Vec<String> = match compiled.validate(&v) {
                Ok(()) => vec![],
                Err(es) => es.map(|e| e.to_string()).collect(),
            };
            assert!(errors.is_empty(), "{}: {errors:?}", r.manifold);
        }
    }
}
