//! The Hopf fibering `S³ → S²`, the induced action of fiber-preserving isometries
//! on `S² = ℂ ∪ {∞}`, and quotient orbifolds.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classifier::{classify, realize};
use crate::error::{GroupError, HopfError};
use crate::isometry::{fundamental_group, lift_and_project, FiniteIsomGroup, IsometryS3, ManifoldDescriptor};
use crate::{Cyc, Quat};

/// A point of the Riemann sphere with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Finite(Cyc),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(z) => write!(f, "{z}"),
            Point::Infinity => write!(f, "∞"),
        }
    }
}

/// `H(z₀ + z₁j) = z₀/z₁`.
pub fn hopf_project(z: &Quat) -> Point {
    let (z0, z1) = z.components();
    if z1.is_zero() {
        Point::Infinity
    } else {
        Point::Finite(z0.checked_div(&z1).expect("nonzero denominator"))
    }
}

/// `z ↦ (az + b)/(cz + d)`, precomposed with `z ↦ z̄` when antiholomorphic.
#[derive(Clone, Debug)]
pub struct MobiusMap {
    a: Cyc,
    b: Cyc,
    c: Cyc,
    d: Cyc,
    antiholomorphic: bool,
}

impl MobiusMap {
    pub fn new(a: Cyc, b: Cyc, c: Cyc, d: Cyc, antiholomorphic: bool) -> Self {
        let mut m = MobiusMap { a, b, c, d, antiholomorphic };
        m.normalize();
        m
    }

    pub fn identity() -> Self {
        Self::new(Cyc::from_int(1), Cyc::from_int(0), Cyc::from_int(0), Cyc::from_int(1), false)
    }

    /// `α(z) = −1/z̄`.
    pub fn antipodal() -> Self {
        Self::new(Cyc::from_int(0), Cyc::from_int(-1), Cyc::from_int(1), Cyc::from_int(0), true)
    }

    fn normalize(&mut self) {
        let lead = [&self.a, &self.b, &self.c, &self.d]
            .into_iter()
            .find(|x| !x.is_zero())
            .cloned()
            .expect("nonsingular map");
        let inv = lead.inverse().expect("nonzero");
        for x in [&mut self.a, &mut self.b, &mut self.c, &mut self.d] {
            *x = &*x * &inv;
        }
    }

    pub fn entries(&self) -> [&Cyc; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_antiholomorphic(&self) -> bool {
        self.antiholomorphic
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn determinant(&self) -> Cyc {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> Cyc {
        &self.a + &self.d
    }

    pub fn apply(&self, p: &Point) -> Point {
        let w = match p {
            Point::Finite(z) if self.antiholomorphic => Point::Finite(z.conj()),
            other => other.clone(),
        };
        match w {
            Point::Infinity => {
                if self.c.is_zero() {
                    Point::Infinity
                } else {
                    Point::Finite(self.a.checked_div(&self.c).unwrap())
                }
            }
            Point::Finite(z) => {
                let den = &(&self.c * &z) + &self.d;
                if den.is_zero() {
                    Point::Infinity
                } else {
                    Point::Finite((&(&self.a * &z) + &self.b).checked_div(&den).unwrap())
                }
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let (a2, b2, c2, d2) = if self.antiholomorphic {
            (other.a.conj(), other.b.conj(), other.c.conj(), other.d.conj())
        } else {
            (other.a.clone(), other.b.clone(), other.c.clone(), other.d.clone())
        };
        Self::new(
            &(&self.a * &a2) + &(&self.b * &c2),
            &(&self.a * &b2) + &(&self.b * &d2),
            &(&self.c * &a2) + &(&self.d * &c2),
            &(&self.c * &b2) + &(&self.d * &d2),
            self.antiholomorphic ^ other.antiholomorphic,
        )
    }
}

impl PartialEq for MobiusMap {
    fn eq(&self, o: &Self) -> bool {
        self.antiholomorphic == o.antiholomorphic
            && self.a == o.a
            && self.b == o.b
            && self.c == o.c
            && self.d == o.d
    }
}

impl Eq for MobiusMap {}

/// `h(1, x₀ + x₁j)`.
pub fn right_mobius(x: &Quat) -> MobiusMap {
    let (x0, x1) = x.components();
    MobiusMap::new(x0.conj(), x1.conj(), -&x1, x0, false)
}

/// Whether `q ∈ O(2)* = S¹ ∪ S¹j`; returns the `j`-flag.
pub fn circle_part(q: &Quat) -> Option<bool> {
    if let Some(t) = q.as_torus() {
        return Some(t.flip());
    }
    let (z0, z1) = q.components();
    if z1.is_zero() {
        Some(false)
    } else if z0.is_zero() {
        Some(true)
    } else {
        None
    }
}

/// `h(f)` for `f = F(q₁, q₂)` with `q₁ ∈ O(2)*`.
pub fn induced_mobius(f: &IsometryS3) -> Result<MobiusMap, HopfError> {
    if f.reverses() {
        return Err(HopfError::OutOfDomain);
    }
    let flip = circle_part(f.left()).ok_or(HopfError::OutOfDomain)?;
    let r = right_mobius(f.right());
    Ok(if flip { MobiusMap::antipodal().compose(&r) } else { r })
}

pub fn in_hopf_domain(f: &IsometryS3) -> bool {
    !f.reverses() && circle_part(f.left()).is_some()
}

/// Fixed points of the rotation `h(1, x)`, `x ≠ ±1`.
pub fn rotation_fixed_points(x: &Quat) -> Result<[Point; 2], HopfError> {
    let (x0, x1) = x.components();
    if x1.is_zero() {
        if x.is_one() || x.neg().is_one() {
            return Err(HopfError::IdentityMap);
        }
        return Ok([Point::Finite(Cyc::from_int(0)), Point::Infinity]);
    }
    let order = x.order(100_000).ok_or(HopfError::OutOfDomain)?;
    let re = x0.real_part();
    let zeta = (0..order as i64)
        .map(|a| Cyc::root_of_unity(order, a))
        .find(|z| z.real_part() == re)
        .ok_or(HopfError::OutOfDomain)?;
    let s = &zeta - &zeta.conj();
    let base = &x0 - &x0.conj();
    let two_x1 = &x1 + &x1;
    let p = (&base + &s).checked_div(&two_x1)?;
    let q = (&base - &s).checked_div(&two_x1)?;
    Ok([Point::Finite(p), Point::Finite(q)])
}

/// Fixed points of a nonidentity holomorphic map in the image of `h`.
pub fn mobius_fixed_points(m: &MobiusMap) -> Result<[Point; 2], HopfError> {
    if m.is_antiholomorphic() {
        return Err(HopfError::Antiholomorphic);
    }
    if m.is_identity() {
        return Err(HopfError::IdentityMap);
    }
    let [a, b, c, d] = m.entries();
    // c z² + (d − a) z − b = 0 with discriminant (a−d)² + 4bc
    if c.is_zero() {
        let diff = d - a;
        if diff.is_zero() {
            return Err(HopfError::OutOfDomain);
        }
        return Ok([Point::Finite(b.checked_div(&diff)?), Point::Infinity]);
    }
    let disc = &(&(a - d) * &(a - d)) + &(&Cyc::from_int(4) * &(b * c));
    let root = exact_sqrt(&disc).ok_or(HopfError::OutOfDomain)?;
    let two_c = c + c;
    let base = a - d;
    Ok([
        Point::Finite((&base + &root).checked_div(&two_c)?),
        Point::Finite((&base - &root).checked_div(&two_c)?),
    ])
}

/// Square root of `r·ζ` style elements: tries `ζ`-multiples of rational square roots.
fn exact_sqrt(x: &Cyc) -> Option<Cyc> {
    if x.is_zero() {
        return Some(x.clone());
    }
    let level = x.level().max(1);
    for k in [1u64, 2, 4] {
        let lvl = num_integer::lcm(level, 2) * k;
        let lvl = num_integer::lcm(lvl, 8);
        // candidates y = c·ζ^a with c from a small basis; test y² = x
        for a in 0..(2 * lvl) as i64 {
            let z = Cyc::root_of_unity(2 * lvl, a);
            let quotient = x.checked_div(&(&z * &z)).ok()?;
            if let Some(r) = quotient.as_rational() {
                if r > crate::Rational::from_integer(0) {
                    if let Some(s) = rational_sqrt(r) {
                        return Some(&Cyc::from_scalar(s) * &z);
                    }
                }
            }
        }
    }
    None
}

fn rational_sqrt(r: crate::Rational) -> Option<crate::Rational> {
    let isqrt = |n: i64| {
        let s = (n as f64).sqrt().round() as i64;
        (s * s == n).then_some(s)
    };
    Some(crate::Rational::new(isqrt(*r.numer())?, isqrt(*r.denom())?))
}

/// `α(p) = −1/p̄`.
pub fn antipode(p: &Point) -> Point {
    MobiusMap::antipodal().apply(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Underlying {
    Sphere,
    ProjectivePlane,
}

/// An orbifold `(S²; α₁, …)` or `(ℝP²; α₁, …)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbifoldSignature {
    pub underlying: Underlying,
    pub cone_orders: Vec<u64>,
    pub degree_of_symmetry: u32,
}

impl OrbifoldSignature {
    pub fn new(underlying: Underlying, mut cone_orders: Vec<u64>) -> Self {
        cone_orders.sort_unstable();
        let degree_of_symmetry = match (underlying, cone_orders.len()) {
            (_, 0) => 3,
            (Underlying::Sphere, 2) if cone_orders[0] == cone_orders[1] => 1,
            (_, 1) | (_, 2) => 1,
            _ => 0,
        };
        OrbifoldSignature { underlying, cone_orders, degree_of_symmetry }
    }
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.underlying {
            Underlying::Sphere => "S²",
            Underlying::ProjectivePlane => "ℝP²",
        };
        let cones: Vec<String> = self.cone_orders.iter().map(|c| c.to_string()).collect();
        write!(f, "({base};{})", cones.join(","))
    }
}

/// `S²/h(G)` for a group preserving the Hopf fibering.
pub fn quotient_orbifold(g: &FiniteIsomGroup) -> Result<OrbifoldSignature, HopfError> {
    let mut images = Vec::with_capacity(g.order());
    for e in g.elements() {
        if !in_hopf_domain(e) {
            return Err(HopfError::OutOfDomain);
        }
        let flip = circle_part(e.left()).unwrap();
        images.push((flip, e.right().clone(), induced_mobius(e)?));
    }
    let is_kernel = |r: &Quat| r.is_one() || r.neg().is_one();
    let kernel = images.iter().filter(|(flip, r, _)| !flip && is_kernel(r)).count();
    let reversing = images.iter().any(|(flip, _, _)| *flip);
    // an orientation-reversing element with fixed points is a reflection
    if images.iter().any(|(flip, r, _)| *flip && r.real_part().is_zero()) {
        return Err(HopfError::MirrorOrbifold);
    }
    let mut poles: Vec<Point> = Vec::new();
    for (flip, r, _) in &images {
        if !flip && !is_kernel(r) {
            for p in rotation_fixed_points(r)? {
                if !poles.contains(&p) {
                    poles.push(p);
                }
            }
        }
    }
    let mut cones = Vec::new();
    let mut covered = vec![false; poles.len()];
    for i in 0..poles.len() {
        if covered[i] {
            continue;
        }
        for (_, _, m) in &images {
            let q = m.apply(&poles[i]);
            let j = poles.iter().position(|p| *p == q).ok_or(HopfError::OutOfDomain)?;
            covered[j] = true;
        }
        let stab = images
            .iter()
            .filter(|(flip, _, m)| !flip && m.apply(&poles[i]) == poles[i])
            .count();
        cones.push((stab / kernel) as u64);
    }
    let underlying = if reversing { Underlying::ProjectivePlane } else { Underlying::Sphere };
    Ok(OrbifoldSignature::new(underlying, cones))
}

/// Which parts of `Isom(M)` preserve the Hopf fibering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberingSymmetry {
    pub isom0_preserves: bool,
    pub isom_plus_preserves: bool,
    pub reversal_preserves: bool,
}

/// The identity component preserves the fibering exactly when it is contained in
/// `O(2)*×̃S³`, which happens iff `|G_L| > 2`; the full orientation-preserving group
/// additionally needs every orientation-preserving realizing isometry in that subgroup.
pub fn fibering_symmetry(d: &ManifoldDescriptor) -> Result<FiberingSymmetry, HopfError> {
    let info = classify(d).map_err(|e| GroupError::WrongType(e.to_string()))?;
    let g = fundamental_group(&info.descriptor)?;
    let (_, gl, _) = lift_and_project(&g)?;
    let isom0_preserves = gl.order() > 2;
    let r = realize(g, &info.witnesses)?;
    let plus_ok = r
        .group
        .elements()
        .iter()
        .filter(|e| !e.reverses())
        .all(|e| circle_part(e.left()).is_some());
    Ok(FiberingSymmetry {
        isom0_preserves,
        isom_plus_preserves: isom0_preserves && plus_ok,
        reversal_preserves: false,
    })
}

/// Signature of the Hopf quotient `S²/h(G)` for a descriptor.
pub fn descriptor_orbifold(d: &ManifoldDescriptor) -> Result<OrbifoldSignature, HopfError> {
    let info = classify(d).map_err(|e| GroupError::WrongType(e.to_string()))?;
    quotient_orbifold(&fundamental_group(&info.descriptor)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::constants;

    fn f(a: Quat, b: Quat) -> IsometryS3 {
        IsometryS3::rotation(a, b)
    }

    #[test]
    fn projection_examples() {
        let s = constants::inv_sqrt2();
        let z = Quat::new(s.clone(), s);
        assert_eq!(hopf_project(&z), Point::Finite(Cyc::from_int(1)));
        assert_eq!(hopf_project(&Quat::one()), Point::Infinity);
        let w = Quat::xi(10, 3).mul(&z);
        assert_eq!(hopf_project(&w), hopf_project(&z));
    }

    #[test]
    fn induced_examples() {
        assert!(induced_mobius(&f(Quat::xi(8, 1), Quat::one())).unwrap().is_identity());
        assert_eq!(induced_mobius(&f(Quat::j(), Quat::one())).unwrap(), MobiusMap::antipodal());
        let m = induced_mobius(&f(Quat::one(), Quat::j())).unwrap();
        let expect = MobiusMap::new(Cyc::from_int(0), Cyc::from_int(1), Cyc::from_int(-1), Cyc::from_int(0), false);
        assert_eq!(m, expect);
        assert!(induced_mobius(&IsometryS3::inversion()).is_err());
        assert!(induced_mobius(&f(constants::octa_x(), Quat::one())).is_err());
    }

    #[test]
    fn equivariance() {
        let maps = [
            f(Quat::j(), constants::octa_y()),
            f(Quat::xi(7, 2), constants::icosa_y()),
            f(Quat::torus(crate::Rational::new(1, 3), true), Quat::xi(12, 5)),
        ];
        let pts = [Quat::one(), Quat::j(), constants::octa_x(), constants::icosa_y(), Quat::xi(5, 1)];
        for m in &maps {
            let h = induced_mobius(m).unwrap();
            for z in &pts {
                assert_eq!(hopf_project(&m.apply(z)), h.apply(&hopf_project(z)));
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let m = right_mobius(&Quat::j());
        let fps = mobius_fixed_points(&m).unwrap();
        let i = Point::Finite(Cyc::root_of_unity(4, 1));
        let mi = Point::Finite(Cyc::root_of_unity(4, 3));
        assert!(fps.contains(&i) && fps.contains(&mi));
        assert_eq!(antipode(&i), mi);
        let rot = MobiusMap::new(Cyc::root_of_unity(5, 1), Cyc::from_int(0), Cyc::from_int(0), Cyc::from_int(1), false);
        let fps = mobius_fixed_points(&rot).unwrap();
        assert!(fps.contains(&Point::Infinity) && fps.contains(&Point::Finite(Cyc::from_int(0))));
        for x in crate::isometry::quaternion_group(&[constants::octa_x(), constants::octa_y()]).unwrap().elements() {
            let q = if x.right().is_one() { x.left().clone() } else { x.left().neg() };
            if q.is_one() || q.neg().is_one() {
                continue;
            }
            let [p, r] = rotation_fixed_points(&q).unwrap();
            assert_eq!(antipode(&p), r);
            let m = right_mobius(&q);
            assert_eq!(m.apply(&p), p);
        }
    }

    #[test]
    fn orbifold_examples() {
        use ManifoldDescriptor::*;
        assert_eq!(descriptor_orbifold(&Quaternionic { n: 1 }).unwrap().to_string(), "(ℝP²;)");
        assert_eq!(descriptor_orbifold(&Lens { m: 8, q: 3 }).unwrap().to_string(), "(S²;4,4)");
        assert_eq!(descriptor_orbifold(&Prism { m: 3, n: 5 }).unwrap().to_string(), "(S²;2,2,3)");
    }

    #[test]
    fn fibering_examples() {
        use ManifoldDescriptor::*;
        let o = fibering_symmetry(&Octahedral { n: 1 }).unwrap();
        assert!(!o.isom0_preserves);
        let q = fibering_symmetry(&Quaternionic { n: 1 }).unwrap();
        assert!(q.isom0_preserves && !q.isom_plus_preserves);
        let l = fibering_symmetry(&Lens { m: 12, q: 5 }).unwrap();
        assert!(l.isom0_preserves && l.isom_plus_preserves && !l.reversal_preserves);
    }
}
