//! Report model and rendering for the `elliptica` command-line tool.

use std::fmt::Write as _;

use elliptica::classifier::{
    canonicalize_lens, classify, realize, realization_matches, LensCensusRow, LensInvariants,
};
use elliptica::cyclotomic::Cyclotomic;
use elliptica::error::DescriptorError;
use elliptica::hopf::{descriptor_orbifold, fibering_symmetry, FiberingSymmetry};
use elliptica::groups::{recognize, GroupIsoType};
use elliptica::isometry::{fundamental_group, FiniteIsomGroup, IsometryS3, ManifoldDescriptor};
use elliptica::mcg::phi_image;
use elliptica::{Quat, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MAX_M: u64 = 100;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A computation disagreed with its own check; exit code 1.
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 1,
        }
    }
}

impl From<DescriptorError> for CliError {
    fn from(e: DescriptorError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// A unit quaternion `z₀ + z₁j` with both components in `ℚ(ζ_level)`,
/// given by their coefficient vectors in the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactQuaternion {
    pub level: u64,
    pub z0: Vec<String>,
    pub z1: Vec<String>,
}

impl ExactQuaternion {
    pub fn from_quat(q: &Quat) -> Self {
        let level = q.level();
        let dense = q.densify(level).expect("level holds both components");
        let (z0, z1) = dense.components();
        let coeffs = |z: &Cyclotomic<Rational>| z.coeffs().iter().map(|c| c.to_string()).collect();
        ExactQuaternion { level, z0: coeffs(&z0), z1: coeffs(&z1) }
    }

    pub fn to_quat(&self) -> Result<Quat, String> {
        let parse = |v: &[String]| -> Result<Cyclotomic<Rational>, String> {
            let cs = v
                .iter()
                .map(|s| s.parse::<Rational>().map_err(|e| format!("bad coefficient `{s}`: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            Cyclotomic::from_coeffs(self.level, cs).map_err(|e| e.to_string())
        };
        Ok(Quat::new(parse(&self.z0)?, parse(&self.z1)?).simplify())
    }
}

fn approx_coords(q: &Quat) -> [f64; 4] {
    let (z0, z1) = q.components();
    let (a, b) = z0.approx();
    let (c, d) = z1.approx();
    [a, b, c, d]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub display: String,
    pub left: ExactQuaternion,
    pub right: ExactQuaternion,
    pub reverses: bool,
    /// `(a, b, c, d)` for `a + bi + cj + dk`, only with `--approx`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx: Option<[[f64; 4]; 2]>,
}

impl WitnessReport {
    pub fn new(f: &IsometryS3, approx: bool) -> Self {
        WitnessReport {
            display: f.to_string(),
            left: ExactQuaternion::from_quat(f.left()),
            right: ExactQuaternion::from_quat(f.right()),
            reverses: f.reverses(),
            approx: approx.then(|| [approx_coords(f.left()), approx_coords(f.right())]),
        }
    }

    pub fn to_isometry(&self) -> Result<IsometryS3, String> {
        Ok(IsometryS3::new(self.left.to_quat()?, self.right.to_quat()?, self.reverses))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub manifold: String,
    pub descriptor: ManifoldDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonicalization: Option<String>,
    pub pi1_order: u64,
    pub pi1_type: String,
    pub case: String,
    pub isom: String,
    pub isom0: String,
    pub pi0: String,
    pub pi0_plus: String,
    pub orientation_reversible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lens_invariants: Option<LensInvariants>,
    /// `S³/G` as an orbifold over the Hopf base, when `G` preserves the fibering.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbifold: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibering: Option<FiberingSymmetry>,
    pub witnesses: Vec<WitnessReport>,
    /// The witnesses generate a normalizer whose quotient by `π₁` has the stated type.
    pub realization_verified: bool,
    /// Distinct components act by distinct outer automorphisms (with orientation for `|π₁| ≤ 2`).
    pub phi_injective: bool,
}

pub fn classification_report(d: &ManifoldDescriptor, approx: bool) -> Result<ClassificationReport, CliError> {
    let info = classify(d)?;
    let canonicalization = (info.descriptor != *d).then(|| format!("canonicalized to {}", info.descriptor));
    let verification = |e: &dyn std::fmt::Display| CliError::Verification(format!("{}: {e}", info.descriptor));
    let g = fundamental_group(&info.descriptor).map_err(|e| verification(&e))?;
    let r = realize(g, &info.witnesses).map_err(|e| verification(&e))?;
    let phi = phi_image(&info.descriptor).map_err(|e| verification(&e))?;
    Ok(ClassificationReport {
        schema_version: SCHEMA_VERSION,
        manifold: info.descriptor.to_string(),
        descriptor: info.descriptor,
        canonicalization,
        pi1_order: info.descriptor.pi1_order(),
        pi1_type: pi1_type(&info.descriptor, &r.fundamental_group),
        case: info.case_tag.clone(),
        isom: info.isom.to_string(),
        isom0: info.isom0.to_string(),
        pi0: info.pi0.to_string(),
        pi0_plus: info.pi0_plus.to_string(),
        orientation_reversible: info.orientation_reversible,
        lens_invariants: info.lens_invariants.clone(),
        orbifold: descriptor_orbifold(&info.descriptor).ok().map(|s| s.to_string()),
        fibering: fibering_symmetry(&info.descriptor).ok(),
        witnesses: info.witnesses.iter().map(|w| WitnessReport::new(w, approx)).collect(),
        realization_verified: realization_matches(&info, &r),
        phi_injective: phi.injective(),
    })
}

/// Recognized isomorphism type, or the family's standard name for groups the recognizer does not cover.
fn pi1_type(d: &ManifoldDescriptor, g: &FiniteIsomGroup) -> String {
    use ManifoldDescriptor::*;
    if let Ok(t) = recognize(g) {
        if !matches!(t, GroupIsoType::Unrecognized { .. }) {
            return t.to_string();
        }
    }
    let times = |base: String, n: u64| if n == 1 { base } else { format!("{base}×C{n}") };
    match *d {
        Lens { m, .. } => format!("C{m}"),
        Quaternionic { n } => times("Q8".into(), n),
        Prism { m, n } => times(format!("D*{}", 4 * m), n),
        PrismDiagonal { m, n } => format!("diagonal ⊂ D*{}×C{}", 8 * m, 2 * n),
        Tetrahedral { n } => times("T*24".into(), n),
        TetrahedralDiagonal { n } => format!("diagonal ⊂ T*24×C{}", 3 * n),
        Octahedral { n } => times("O*48".into(), n),
        Icosahedral { n } => times("I*120".into(), n),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

pub fn render_report(r: &ClassificationReport) -> String {
    let mut s = String::new();
    if let Some(note) = &r.canonicalization {
        let _ = writeln!(s, "note: {note}");
    }
    let _ = writeln!(s, "manifold                {}", r.manifold);
    let _ = writeln!(s, "π₁                      {} (order {})", r.pi1_type, r.pi1_order);
    let _ = writeln!(s, "case                    {}", r.case);
    let _ = writeln!(s, "Isom                    {}", r.isom);
    let _ = writeln!(s, "Isom₀                   {}", r.isom0);
    let _ = writeln!(s, "π₀ Isom                 {}", r.pi0);
    let _ = writeln!(s, "π₀ Isom₊                {}", r.pi0_plus);
    let _ = writeln!(s, "orientation-reversing   {}", yes_no(r.orientation_reversible));
    if let Some(li) = &r.lens_invariants {
        let _ = writeln!(s, "(m,q+1)(m,q−1)          {}", li.gcd_product);
    }
    if let Some(o) = &r.orbifold {
        let _ = writeln!(s, "base orbifold           {o}");
    }
    if let Some(f) = &r.fibering {
        let _ = writeln!(
            s,
            "fiber-preserving        Isom₀ {}, Isom₊ {}, reversal {}",
            yes_no(f.isom0_preserves),
            yes_no(f.isom_plus_preserves),
            yes_no(f.reversal_preserves)
        );
    }
    let _ = writeln!(s, "realization verified    {}", yes_no(r.realization_verified));
    let _ = writeln!(s, "Φ injective             {}", yes_no(r.phi_injective));
    let _ = writeln!(s, "witnesses");
    for w in &r.witnesses {
        let _ = writeln!(s, "  {}", w.display);
        if let Some([l, rt]) = &w.approx {
            let _ = writeln!(s, "    ≈ left {}  right {}", fmt4(l), fmt4(rt));
        }
    }
    s
}

fn fmt4(v: &[f64; 4]) -> String {
    format!("({:.6}, {:.6}, {:.6}, {:.6})", v[0], v[1], v[2], v[3])
}

/// Builds a family descriptor from its CLI name and parameters.
pub fn family_descriptor(name: &str, m: Option<u64>, n: Option<u64>) -> Result<ManifoldDescriptor, CliError> {
    use ManifoldDescriptor::*;
    let need = |v: Option<u64>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("{flag} required for family `{name}`")))
    };
    let no_m = |d: ManifoldDescriptor| match m {
        Some(_) => Err(CliError::Usage(format!("--m is not a parameter of family `{name}`"))),
        None => Ok(d),
    };
    let n_or_1 = n.unwrap_or(1);
    let d = match name {
        "quaternionic" => no_m(Quaternionic { n: n_or_1 })?,
        "prism" => Prism { m: need(m, "--m")?, n: n_or_1 },
        "prism-diagonal" => PrismDiagonal { m: need(m, "--m")?, n: need(n, "--n")? },
        "tetrahedral" => no_m(Tetrahedral { n: n_or_1 })?,
        "tetrahedral-diagonal" => no_m(TetrahedralDiagonal { n: need(n, "--n")? })?,
        "octahedral" => no_m(Octahedral { n: n_or_1 })?,
        "icosahedral" => no_m(Icosahedral { n: n_or_1 })?,
        "lens" => return Err(CliError::Usage("use `classify lens <m> <q>` for lens spaces".into())),
        other => return Err(DescriptorError::UnknownFamily(other.to_string()).into()),
    };
    d.validate()?;
    Ok(d)
}

pub fn lens_descriptor(m: u64, q: u64) -> Result<ManifoldDescriptor, CliError> {
    let d = ManifoldDescriptor::Lens { m, q };
    d.validate()?;
    canonicalize_lens(m, q)?;
    Ok(d)
}

pub fn census_json(rows: &[LensCensusRow]) -> String {
    serde_json::to_string_pretty(rows).expect("serializable") + "\n"
}

/// `--max-m`, else `ELLIPTICA_MAX_M`, else the default; at least `min`.
pub fn resolve_max_m(flag: Option<u64>, env: Option<&str>, min: u64) -> Result<u64, CliError> {
    let v = match (flag, env) {
        (Some(v), _) => v,
        (None, Some(s)) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("ELLIPTICA_MAX_M must be a positive integer, got `{s}`")))?,
        (None, None) => DEFAULT_MAX_M,
    };
    if v < min {
        return Err(CliError::Usage(format!("max-m ≥ {min} required")));
    }
    Ok(v)
}

pub mod tables;
