//! Isometry groups of elliptic 3-manifolds: symbolic `Isom(M)`, the finite
//! component group with explicit realizing isometries, and the lens-space cases.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{DescriptorError, GroupError};
use crate::groups::{GroupIsoType, TableGroup};
use crate::isometry::{
    fundamental_group, FiniteIsomGroup, IsometryS3, ManifoldDescriptor, DEFAULT_CLOSURE_BOUND,
};
use crate::quaternion::constants;
use crate::{Quat, Rational};

/// How the finite factor acts in a semidirect product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemidirectAction {
    /// Interchange the two factors.
    SwapFactors,
    /// Conjugate both factors.
    ConjugateBoth,
    /// `(z, w) ↦ (w, z̄)`.
    QuarterTurn,
}

/// Symbolic name of a (possibly infinite) compact group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", content = "args", rename_all = "snake_case")]
pub enum GroupExpression {
    Trivial,
    C(u64),
    S3sym,
    S1,
    S3grp,
    SO3,
    O2,
    O2star,
    SO4,
    O4,
    Product(Box<GroupExpression>, Box<GroupExpression>),
    TildeProduct(Box<GroupExpression>, Box<GroupExpression>),
    Dih(Box<GroupExpression>),
    Semidirect(Box<GroupExpression>, Box<GroupExpression>, SemidirectAction),
}

impl GroupExpression {
    pub fn product(a: GroupExpression, b: GroupExpression) -> Self {
        GroupExpression::Product(Box::new(a), Box::new(b))
    }

    pub fn tilde(a: GroupExpression, b: GroupExpression) -> Self {
        GroupExpression::TildeProduct(Box::new(a), Box::new(b))
    }

    pub fn dih(a: GroupExpression) -> Self {
        GroupExpression::Dih(Box::new(a))
    }

    pub fn semidirect(a: GroupExpression, b: GroupExpression, action: SemidirectAction) -> Self {
        GroupExpression::Semidirect(Box::new(a), Box::new(b), action)
    }

    /// Rewrite to normal form, identifying isomorphic spellings.
    pub fn normalize(&self) -> GroupExpression {
        use GroupExpression::*;
        match self {
            Product(a, b) => Self::product(a.normalize(), b.normalize()),
            TildeProduct(a, b) => match (a.normalize(), b.normalize()) {
                (O2star, O2star) => Self::tilde(O2, O2),
                (x, y) => Self::tilde(x, y),
            },
            Dih(a) => match a.normalize() {
                TildeProduct(x, y) if *x == S1 && *y == S1 => Self::dih(Self::product(S1, S1)),
                x => Self::dih(x),
            },
            Semidirect(a, b, act) => match (a.normalize(), b.normalize(), act) {
                (SO4, C(2), SemidirectAction::SwapFactors) => O4,
                (x, y, act) => Self::semidirect(x, y, *act),
            },
            C(1) => Trivial,
            other => other.clone(),
        }
    }

    pub fn equivalent(&self, other: &GroupExpression) -> bool {
        self.normalize() == other.normalize()
    }

    pub fn is_finite(&self) -> bool {
        use GroupExpression::*;
        match self {
            Trivial | C(_) | S3sym => true,
            Product(a, b) | TildeProduct(a, b) | Semidirect(a, b, _) => a.is_finite() && b.is_finite(),
            _ => false,
        }
    }

    /// Isomorphism type of a finite expression.
    pub fn finite_type(&self) -> Option<GroupIsoType> {
        use GroupExpression::*;
        match self {
            Trivial => Some(GroupIsoType::Cyclic(1)),
            C(k) => Some(GroupIsoType::Cyclic(*k as usize)),
            S3sym => Some(GroupIsoType::SymmetricS3),
            Product(a, b) => {
                Some(GroupIsoType::DirectProduct(vec![a.finite_type()?, b.finite_type()?]))
            }
            _ => None,
        }
    }

    pub fn finite_order(&self) -> Option<usize> {
        self.finite_type().map(|t| t.order())
    }

    fn is_atom(&self) -> bool {
        !matches!(
            self,
            GroupExpression::Product(..)
                | GroupExpression::TildeProduct(..)
                | GroupExpression::Semidirect(..)
        )
    }
}

impl fmt::Display for GroupExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupExpression::*;
        let wrap = |e: &GroupExpression| {
            if e.is_atom() { e.to_string() } else { format!("({e})") }
        };
        match self {
            Trivial => write!(f, "{{1}}"),
            C(k) => write!(f, "C{k}"),
            S3sym => write!(f, "S3"),
            S1 => write!(f, "S¹"),
            S3grp => write!(f, "S³"),
            SO3 => write!(f, "SO(3)"),
            O2 => write!(f, "O(2)"),
            O2star => write!(f, "O(2)*"),
            SO4 => write!(f, "SO(4)"),
            O4 => write!(f, "O(4)"),
            Product(a, b) => write!(f, "{}×{}", wrap(a), wrap(b)),
            TildeProduct(a, b) => write!(f, "{}×̃{}", wrap(a), wrap(b)),
            Dih(a) => write!(f, "Dih({a})"),
            Semidirect(a, b, _) => write!(f, "{}∘{}", wrap(a), wrap(b)),
        }
    }
}

/// The lens-space cases, with the `q² ≡ 1` case split by `(m,q+1)(m,q−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LensCase {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II")]
    II,
    #[serde(rename = "III")]
    III,
    #[serde(rename = "IV")]
    IV,
    #[serde(rename = "V")]
    V,
    #[serde(rename = "VI-a")]
    VIa,
    #[serde(rename = "VI-b")]
    VIb,
}

impl LensCase {
    pub const ALL: [LensCase; 7] =
        [LensCase::I, LensCase::II, LensCase::III, LensCase::IV, LensCase::V, LensCase::VIa, LensCase::VIb];

    pub fn tag(&self) -> &'static str {
        match self {
            LensCase::I => "I",
            LensCase::II => "II",
            LensCase::III => "III",
            LensCase::IV => "IV",
            LensCase::V => "V",
            LensCase::VIa => "VI-a",
            LensCase::VIb => "VI-b",
        }
    }
}

impl fmt::Display for LensCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn mod_inverse(q: u64, m: u64) -> Option<u64> {
    let e = (q as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as u64)
}

/// Smallest representative of `{±q^{±1} mod m}`; it is at most `m/2`.
pub fn canonicalize_lens(m: u64, q: u64) -> Result<(u64, u64), DescriptorError> {
    if m == 0 {
        return Err(DescriptorError::Constraint("m ≥ 1 required".into()));
    }
    if m == 1 {
        return Ok((1, 0));
    }
    let q = q % m;
    if m.gcd(&q) != 1 {
        return Err(DescriptorError::Constraint("(m,q)=1 required".into()));
    }
    let inv = mod_inverse(q, m).expect("unit");
    let best = [q, m - q, inv, (m - inv) % m].into_iter().min().unwrap();
    Ok((m, best))
}

/// `(m, q+1)·(m, q−1)`.
pub fn gcd_product(m: u64, q: u64) -> u64 {
    let (m, q) = (m as i64, q as i64);
    (m.gcd(&(q + 1)) * m.gcd(&(q - 1))) as u64
}

/// Case of a canonical lens space `L(m,q)`.
pub fn lens_case(m: u64, q: u64) -> LensCase {
    if m == 1 {
        return LensCase::I;
    }
    if m == 2 {
        return LensCase::II;
    }
    if q == 1 {
        return LensCase::III;
    }
    let sq = (q * q) % m;
    if sq == m - 1 {
        LensCase::V
    } else if sq == 1 {
        if gcd_product(m, q) == m { LensCase::VIa } else { LensCase::VIb }
    } else {
        LensCase::IV
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensInvariants {
    pub d1: u64,
    pub d2: u64,
    pub gcd_product: u64,
    /// `"m"` or `"2m"` when `q² ≡ 1 mod m`.
    pub gcd_product_class: Option<String>,
}

impl LensInvariants {
    pub fn new(m: u64, q: u64) -> Self {
        let (mi, qi) = (m as i64, q as i64);
        let d1 = m / mi.gcd(&(qi + 1)) as u64;
        let d2 = m / mi.gcd(&(qi - 1)) as u64;
        let gp = gcd_product(m, q);
        let class = (m > 2 && (q * q) % m == 1).then(|| if gp == m { "m".to_string() } else { "2m".to_string() });
        LensInvariants { d1, d2, gcd_product: gp, gcd_product_class: class }
    }
}

/// Full isometry data of an elliptic 3-manifold.
#[derive(Clone, Debug)]
pub struct IsomDescriptor {
    pub descriptor: ManifoldDescriptor,
    pub isom0: GroupExpression,
    pub pi0: GroupExpression,
    pub isom: GroupExpression,
    pub pi0_plus: GroupExpression,
    pub witnesses: Vec<IsometryS3>,
    pub orientation_reversible: bool,
    pub case_tag: String,
    pub lens_invariants: Option<LensInvariants>,
}

fn f(a: Quat, b: Quat) -> IsometryS3 {
    IsometryS3::rotation(a, b)
}

/// Generators of the component group, as isometries of `S³` normalizing `G`.
pub fn witnesses(d: &ManifoldDescriptor) -> Vec<IsometryS3> {
    use ManifoldDescriptor::*;
    let one = Quat::one;
    let x = constants::octa_x;
    let y = constants::octa_y;
    match *d {
        Lens { m, q } => match lens_case(m, q) {
            LensCase::I | LensCase::II => vec![IsometryS3::inversion()],
            LensCase::III | LensCase::IV => vec![f(Quat::j(), Quat::j())],
            LensCase::V => vec![IsometryS3::lens_reflection()],
            LensCase::VIa | LensCase::VIb => vec![
                f(Quat::k(), Quat::i().neg()),
                f(Quat::j(), Quat::j()),
                f(Quat::i(), Quat::k()),
            ],
        },
        Quaternionic { n: 1 } => vec![f(x(), one()), f(y(), one())],
        Quaternionic { .. } => vec![f(Quat::j(), one()), f(one(), x()), f(one(), y())],
        Prism { m, n: 1 } => vec![f(Quat::xi(4 * m as i64, 1), one())],
        Prism { m, .. } | PrismDiagonal { m, .. } => {
            vec![f(Quat::j(), one()), f(one(), Quat::xi(4 * m as i64, 1))]
        }
        Tetrahedral { n: 1 } => vec![f(one(), x())],
        Tetrahedral { .. } => vec![f(Quat::j(), one()), f(one(), x())],
        TetrahedralDiagonal { .. } => vec![f(Quat::j(), x())],
        Octahedral { n: 1 } | Icosahedral { n: 1 } => vec![],
        Octahedral { .. } | Icosahedral { .. } => vec![f(Quat::j(), one())],
    }
}

fn lens_expressions(m: u64, case: LensCase) -> [GroupExpression; 4] {
    use GroupExpression::*;
    use SemidirectAction::*;
    let p = GroupExpression::product;
    let t = GroupExpression::tilde;
    // [isom, isom0, pi0, pi0_plus]
    match case {
        LensCase::I => [O4, SO4, C(2), Trivial],
        LensCase::II => [
            GroupExpression::semidirect(p(SO3, SO3), C(2), SwapFactors),
            p(SO3, SO3),
            C(2),
            Trivial,
        ],
        LensCase::III if m % 2 == 1 => [t(O2star, S3grp), t(S1, S3grp), C(2), C(2)],
        LensCase::III => [p(O2, SO3), p(S1, SO3), C(2), C(2)],
        LensCase::IV => [GroupExpression::dih(p(S1, S1)), p(S1, S1), C(2), C(2)],
        LensCase::V => [
            GroupExpression::semidirect(t(S1, S1), C(4), QuarterTurn),
            t(S1, S1),
            C(4),
            C(2),
        ],
        LensCase::VIa => [t(O2, O2), p(S1, S1), p(C(2), C(2)), p(C(2), C(2))],
        LensCase::VIb => [p(O2, O2), p(S1, S1), p(C(2), C(2)), p(C(2), C(2))],
    }
}

fn family_case_tag(d: &ManifoldDescriptor) -> String {
    use ManifoldDescriptor::*;
    let sub = |n: u64| if n == 1 { "(1)" } else { "(2)" };
    match *d {
        Lens { .. } => unreachable!(),
        Quaternionic { n } => format!("I{}", sub(n)),
        Prism { n, .. } => format!("II{}", sub(n)),
        Tetrahedral { n } => format!("III{}", sub(n)),
        Octahedral { n } => format!("IV{}", sub(n)),
        Icosahedral { n } => format!("V{}", sub(n)),
        PrismDiagonal { .. } => "VI".into(),
        TetrahedralDiagonal { .. } => "VII".into(),
    }
}

/// `Isom(M)`, its identity component and component group, with realizing isometries.
pub fn classify(d: &ManifoldDescriptor) -> Result<IsomDescriptor, DescriptorError> {
    use GroupExpression::*;
    use ManifoldDescriptor::*;
    d.validate()?;
    let d = match *d {
        Lens { m, q } => {
            let (m, q) = canonicalize_lens(m, q)?;
            Lens { m, q }
        }
        other => other,
    };
    let p = GroupExpression::product;
    let (isom, isom0, pi0, pi0_plus, case_tag, lens_invariants) = match d {
        Lens { m, q } => {
            let case = lens_case(m, q);
            let [isom, isom0, pi0, plus] = lens_expressions(m, case);
            (isom, isom0, pi0, plus, case.tag().to_string(), Some(LensInvariants::new(m, q)))
        }
        _ => {
            let n1 = match d {
                Quaternionic { n }
                | Prism { n, .. }
                | Tetrahedral { n }
                | Octahedral { n }
                | Icosahedral { n } => n == 1,
                _ => false,
            };
            let (isom, pi0) = match d {
                Quaternionic { .. } if n1 => (p(SO3, S3sym), S3sym),
                Quaternionic { .. } => (p(O2, S3sym), p(C(2), S3sym)),
                Prism { .. } | Tetrahedral { .. } if n1 => (p(SO3, C(2)), C(2)),
                Prism { .. } | Tetrahedral { .. } | PrismDiagonal { .. } => {
                    (p(O2, C(2)), p(C(2), C(2)))
                }
                TetrahedralDiagonal { .. } => (O2, C(2)),
                Octahedral { .. } | Icosahedral { .. } if n1 => (SO3, Trivial),
                _ => (O2, C(2)),
            };
            let isom0 = if n1 { SO3 } else { S1 };
            (isom, isom0, pi0.clone(), pi0, family_case_tag(&d), None)
        }
    };
    let witnesses = witnesses(&d);
    let orientation_reversible = witnesses.iter().any(|w| w.reverses());
    Ok(IsomDescriptor {
        descriptor: d,
        isom0,
        pi0,
        isom,
        pi0_plus,
        witnesses,
        orientation_reversible,
        case_tag,
        lens_invariants,
    })
}

/// `f` and `g` induce the same isometry of `S³/G`.
pub fn isometry_equal_mod_g(f: &IsometryS3, g: &IsometryS3, group: &FiniteIsomGroup) -> bool {
    group.contains(&g.invert().compose(f))
}

/// A finite subgroup `N` of `Norm(G)` generated by `G` and the witnesses, with `N/G`.
#[derive(Clone, Debug)]
pub struct Realization {
    pub fundamental_group: FiniteIsomGroup,
    pub group: FiniteIsomGroup,
    pub quotient: TableGroup,
    /// Coset index in `quotient` of every element of `group`.
    pub coset: Vec<usize>,
}

pub fn realization_subgroup(d: &ManifoldDescriptor) -> Result<Realization, GroupError> {
    let info = classify(d).map_err(|e| GroupError::WrongType(e.to_string()))?;
    let g = fundamental_group(&info.descriptor)?;
    realize(g, &info.witnesses)
}

pub fn realize(g: FiniteIsomGroup, witnesses: &[IsometryS3]) -> Result<Realization, GroupError> {
    if witnesses.iter().any(|w| !g.is_normalized_by(w)) {
        return Err(GroupError::NotNormalizing);
    }
    let mut gens = g.generators().to_vec();
    gens.extend(witnesses.iter().cloned());
    let n = FiniteIsomGroup::closure(&gens, DEFAULT_CLOSURE_BOUND)?;
    let mut sub = n.subgroup_indices(&g).ok_or(GroupError::NotAMember)?;
    sub.sort_unstable();
    let (quotient, coset) = n.table().quotient(&sub)?;
    Ok(Realization { fundamental_group: g, group: n, quotient, coset })
}

/// The realized component group is isomorphic to the claimed `𝓘(M)`.
pub fn realization_matches(info: &IsomDescriptor, r: &Realization) -> bool {
    match info.pi0.finite_type().and_then(|t| t.model()) {
        Some(model) => model.is_isomorphic(&r.quotient),
        None => false,
    }
}

/// Census of lens-space cases for one `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensCensusRow {
    pub m: u64,
    pub classes: Vec<(u64, LensCase)>,
    pub counts: BTreeMap<LensCase, usize>,
}

pub fn lens_census(m: u64) -> LensCensusRow {
    let mut qs: Vec<u64> = if m == 1 {
        vec![0]
    } else {
        (1..m).filter(|&q| m.gcd(&q) == 1).map(|q| canonicalize_lens(m, q).unwrap().1).collect()
    };
    qs.sort_unstable();
    qs.dedup();
    let classes: Vec<(u64, LensCase)> = qs.into_iter().map(|q| (q, lens_case(m, q))).collect();
    let mut counts = BTreeMap::new();
    for (_, c) in &classes {
        *counts.entry(*c).or_insert(0) += 1;
    }
    LensCensusRow { m, classes, counts }
}

/// One census row for every `m ≤ max_m`, in increasing order.
pub fn enumerate_lens_cases(max_m: u64) -> Vec<LensCensusRow> {
    (1..=max_m).into_par_iter().map(lens_census).collect()
}

/// Data from the proof that `Norm(C)/C` is `O(2)×̃O(2)` or `O(2)×O(2)` when `q² ≡ 1 mod m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensBookkeeping {
    pub m: u64,
    /// Odd representative of the lens class used in the argument.
    pub q: u64,
    pub d1: u64,
    pub d2: u64,
    pub w_order: u64,
    pub w1_order: u64,
    pub w2_order: u64,
    pub minus_one_in_w: bool,
    pub k_order: u64,
    pub k1_order: u64,
    pub k2_order: u64,
}

fn frac(x: Rational) -> Rational {
    x - x.floor()
}

/// Cyclic subgroup of the torus `S¹×S¹` generated by a pair of turns.
fn torus_orbit(a: Rational, b: Rational) -> Vec<(Rational, Rational)> {
    let mut out = vec![(Rational::from_integer(0), Rational::from_integer(0))];
    let (mut x, mut y) = (frac(a), frac(b));
    while !(x == Rational::from_integer(0) && y == Rational::from_integer(0)) {
        out.push((x, y));
        x = frac(x + a);
        y = frac(y + b);
    }
    out
}

fn distinct(mut v: Vec<Rational>) -> u64 {
    v.sort();
    v.dedup();
    v.len() as u64
}

pub fn lens_bookkeeping(m: u64, q: u64) -> Option<LensBookkeeping> {
    if m <= 2 || (q * q) % m != 1 {
        return None;
    }
    let q = if q % 2 == 0 { m - q } else { q };
    let inv = LensInvariants::new(m, q);
    let (mi, qi) = (m as i64, q as i64);
    let w = torus_orbit(Rational::new(qi + 1, 2 * mi), Rational::new(qi - 1, 2 * mi));
    let half = Rational::new(1, 2);
    let k = torus_orbit(Rational::new(qi + 1, mi), Rational::new(qi - 1, mi));
    Some(LensBookkeeping {
        m,
        q,
        d1: inv.d1,
        d2: inv.d2,
        w_order: w.len() as u64,
        w1_order: distinct(w.iter().map(|p| p.0).collect()),
        w2_order: distinct(w.iter().map(|p| p.1).collect()),
        minus_one_in_w: w.contains(&(half, half)),
        k_order: k.len() as u64,
        k1_order: distinct(k.iter().map(|p| p.0).collect()),
        k2_order: distinct(k.iter().map(|p| p.1).collect()),
    })
}

impl LensBookkeeping {
    /// The order and product claims of the argument hold for this input.
    pub fn holds(&self) -> bool {
        let m = self.m;
        if self.w_order != m {
            return false;
        }
        if m % 2 == 1 {
            self.d1 * self.d2 == m
                && self.w1_order == self.d1
                && self.w2_order == self.d2
                && self.w1_order * self.w2_order == self.w_order
        } else {
            !self.minus_one_in_w
                && self.k_order == m / 2
                && self.k1_order == self.d1
                && self.k2_order == self.d2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::{lens_generator, normalizes};

    #[test]
    fn canonical_lens_examples() {
        assert_eq!(canonicalize_lens(7, 5).unwrap(), (7, 2));
        assert_eq!(canonicalize_lens(9, 1).unwrap(), (9, 1));
        assert_eq!(canonicalize_lens(12, 7).unwrap(), (12, 5));
        assert!(canonicalize_lens(6, 3).is_err());
    }

    #[test]
    fn case_examples() {
        assert_eq!(lens_case(5, 2), LensCase::V);
        assert_eq!(lens_case(8, 3), LensCase::VIa);
        assert_eq!(lens_case(12, 5), LensCase::VIb);
        assert_eq!(lens_case(7, 2), LensCase::IV);
        assert_eq!(lens_census(16).classes.iter().filter(|c| c.1 == LensCase::VIa).count(), 1);
    }

    #[test]
    fn census_examples() {
        let r5 = lens_census(5);
        assert_eq!(r5.classes, vec![(1, LensCase::III), (2, LensCase::V)]);
        assert_eq!(lens_census(2).classes, vec![(1, LensCase::II)]);
        let r8 = lens_census(8);
        assert_eq!(r8.classes, vec![(1, LensCase::III), (3, LensCase::VIa)]);
    }

    #[test]
    fn expression_normalization() {
        use GroupExpression::*;
        let a = GroupExpression::dih(GroupExpression::tilde(S1, S1));
        let b = GroupExpression::dih(GroupExpression::product(S1, S1));
        assert!(a.equivalent(&b));
        assert!(GroupExpression::tilde(O2star, O2star).equivalent(&GroupExpression::tilde(O2, O2)));
        assert!(!GroupExpression::tilde(O2, O2).equivalent(&GroupExpression::product(O2, O2)));
        assert_eq!(
            GroupExpression::semidirect(GroupExpression::tilde(S1, S1), C(4), SemidirectAction::QuarterTurn)
                .to_string(),
            "(S¹×̃S¹)∘C4"
        );
    }

    #[test]
    fn classify_examples() {
        let r = classify(&ManifoldDescriptor::Lens { m: 12, q: 7 }).unwrap();
        assert_eq!(r.descriptor, ManifoldDescriptor::Lens { m: 12, q: 5 });
        assert_eq!(r.isom.to_string(), "O(2)×O(2)");
        assert_eq!(r.pi0.to_string(), "C2×C2");
        let q3 = classify(&ManifoldDescriptor::Quaternionic { n: 3 }).unwrap();
        assert_eq!(q3.isom.to_string(), "O(2)×S3");
        let l2 = classify(&ManifoldDescriptor::Lens { m: 2, q: 1 }).unwrap();
        assert_eq!(l2.isom.to_string(), "(SO(3)×SO(3))∘C2");
    }

    #[test]
    fn realizations() {
        for (d, order) in [
            (ManifoldDescriptor::Lens { m: 5, q: 2 }, 4),
            (ManifoldDescriptor::Octahedral { n: 1 }, 1),
            (ManifoldDescriptor::Quaternionic { n: 1 }, 6),
        ] {
            let info = classify(&d).unwrap();
            let r = realization_subgroup(&d).unwrap();
            assert_eq!(r.quotient.order(), order, "{d}");
            assert!(realization_matches(&info, &r), "{d}");
        }
    }

    #[test]
    fn equality_mod_g() {
        let g = fundamental_group(&ManifoldDescriptor::Lens { m: 5, q: 2 }).unwrap();
        let r = IsometryS3::lens_reflection();
        assert!(isometry_equal_mod_g(&r, &r, &g));
        assert!(isometry_equal_mod_g(&lens_generator(5, 2).compose(&r), &r, &g));
        assert!(isometry_equal_mod_g(&r.compose(&r), &f(Quat::j(), Quat::j()), &g));
        assert!(normalizes(&r, &g));
    }

    #[test]
    fn bookkeeping_small() {
        for m in 3..=60u64 {
            for q in 1..m {
                if m.gcd(&q) == 1 && (q * q) % m == 1 {
                    let b = lens_bookkeeping(m, q).unwrap();
                    assert!(b.holds(), "{b:?}");
                }
            }
        }
    }
}
