//! Tables recomputed by the classifier on one representative per row.

use elliptica::classifier::classify;
use elliptica::hopf::descriptor_orbifold;
use elliptica::isometry::ManifoldDescriptor::{self, *};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub id: u8,
    pub title: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub fn table2_rows() -> Vec<(&'static str, ManifoldDescriptor)> {
    vec![
        ("Q8×Cn, n=1", Quaternionic { n: 1 }),
        ("Q8×Cn, n>1", Quaternionic { n: 3 }),
        ("D*4m×Cn, n=1", Prism { m: 3, n: 1 }),
        ("D*4m×Cn, n>1", Prism { m: 3, n: 5 }),
        ("diagonal in D*8m×C2n", PrismDiagonal { m: 3, n: 2 }),
        ("T*24×Cn, n=1", Tetrahedral { n: 1 }),
        ("T*24×Cn, n>1", Tetrahedral { n: 5 }),
        ("diagonal in T*24×C3n", TetrahedralDiagonal { n: 3 }),
        ("O*48×Cn, n=1", Octahedral { n: 1 }),
        ("O*48×Cn, n>1", Octahedral { n: 5 }),
        ("I*120×Cn, n=1", Icosahedral { n: 1 }),
        ("I*120×Cn, n>1", Icosahedral { n: 7 }),
    ]
}

pub fn table3_rows() -> Vec<(&'static str, ManifoldDescriptor)> {
    vec![
        ("m=1", Lens { m: 1, q: 0 }),
        ("m=2", Lens { m: 2, q: 1 }),
        ("m>2, q=1, m odd", Lens { m: 5, q: 1 }),
        ("m>2, q=1, m even", Lens { m: 4, q: 1 }),
        ("1<q<m/2, q²≢±1", Lens { m: 7, q: 2 }),
        ("1<q<m/2, q²≡−1", Lens { m: 5, q: 2 }),
        ("1<q<m/2, q²≡1, (m,q+1)(m,q−1)=m", Lens { m: 8, q: 3 }),
        ("1<q<m/2, q²≡1, (m,q+1)(m,q−1)=2m", Lens { m: 12, q: 5 }),
    ]
}

pub fn table4_rows() -> Vec<(&'static str, ManifoldDescriptor)> {
    vec![
        ("S³", Lens { m: 1, q: 0 }),
        ("ℝP³", Lens { m: 2, q: 1 }),
        ("L(m,1)", Lens { m: 5, q: 1 }),
        ("L(m,q), 1<q<m/2", Lens { m: 8, q: 3 }),
        ("Q8", Quaternionic { n: 1 }),
        ("Q8×Cn, n>1", Quaternionic { n: 3 }),
        ("D*4m", Prism { m: 3, n: 1 }),
        ("D*4m×Cn, n>1", Prism { m: 3, n: 5 }),
        ("diagonal in D*8m×C2n", PrismDiagonal { m: 3, n: 2 }),
        ("T*24×Cn", Tetrahedral { n: 1 }),
        ("diagonal in T*24×C3n", TetrahedralDiagonal { n: 3 }),
        ("O*48×Cn", Octahedral { n: 1 }),
        ("I*120×Cn", Icosahedral { n: 1 }),
    ]
}

pub fn table(which: u8) -> Table {
    match which {
        2 => Table {
            id: 2,
            title: "Isometry groups of M = S³/G, G not cyclic",
            columns: vec!["G", "example", "Isom(M)", "𝓘(M)"],
            rows: table2_rows()
                .into_iter()
                .map(|(label, d)| {
                    let i = classify(&d).expect("representatives are valid");
                    vec![label.into(), d.to_string(), i.isom.to_string(), i.pi0.to_string()]
                })
                .collect(),
        },
        3 => Table {
            id: 3,
            title: "Isometry groups of L(m,q)",
            columns: vec!["case", "condition", "example", "Isom(L)", "isom(L)", "𝓘(L)", "𝓘₊(L)"],
            rows: table3_rows()
                .into_iter()
                .map(|(label, d)| {
                    let i = classify(&d).expect("representatives are valid");
                    vec![
                        i.case_tag,
                        label.into(),
                        d.to_string(),
                        i.isom.to_string(),
                        i.isom0.to_string(),
                        i.pi0.to_string(),
                        i.pi0_plus.to_string(),
                    ]
                })
                .collect(),
        },
        _ => Table {
            id: 4,
            title: "Quotient orbifolds for the Hopf fiberings",
            columns: vec!["M", "example", "S²/h(G)", "degree of symmetry"],
            rows: table4_rows()
                .into_iter()
                .map(|(label, d)| match descriptor_orbifold(&d) {
                    Ok(o) => vec![label.into(), d.to_string(), o.to_string(), o.degree_of_symmetry.to_string()],
                    Err(e) => vec![label.into(), d.to_string(), format!("error: {e}"), String::new()],
                })
                .collect(),
        },
    }
}

/// Markdown rendering.
pub fn render(t: &Table) -> String {
    let row = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
    let mut s = format!("### Table {}. {}\n\n", t.id, t.title);
    s += &row(&t.columns.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    s += &row(&vec!["---".to_string(); t.columns.len()]);
    for r in &t.rows {
        s += &row(r);
    }
    s
}
