//! Unit quaternions `z = z₀ + z₁j` with cyclotomic components.
//!
//! Elements of the subgroup `S¹ ∪ S¹j` are kept as a [`TorusElement`]
//! (an exact rational turn plus a `j` flag) so that cyclic groups of large
//! order never need full-degree coefficient vectors. Anything else is stored
//! densely. The two forms of one value compare equal.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::cyclotomic::{Coefficient, Cyclotomic};

/// `exp(2πi·turn) · j^flip`, with `turn` reduced into `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusElement {
    turn: Ratio<i64>,
    flip: bool,
}

fn reduce_turn(t: Ratio<i64>) -> Ratio<i64> {
    let r = t - t.floor();
    if r < Ratio::zero() { r + Ratio::one() } else { r }
}

impl TorusElement {
    pub fn new(turn: Ratio<i64>, flip: bool) -> Self {
        TorusElement { turn: reduce_turn(turn), flip }
    }

    pub fn one() -> Self {
        Self::new(Ratio::zero(), false)
    }

    /// `ξ_k^a` in the circle.
    pub fn root(k: i64, a: i64) -> Self {
        Self::new(Ratio::new(a, k), false)
    }

    pub fn turn(&self) -> Ratio<i64> {
        self.turn
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    pub fn mul(&self, o: &Self) -> Self {
        match (self.flip, o.flip) {
            (false, f) => Self::new(self.turn + o.turn, f),
            (true, false) => Self::new(self.turn - o.turn, true),
            (true, true) => Self::new(self.turn - o.turn + Ratio::new(1, 2), false),
        }
    }

    pub fn inverse(&self) -> Self {
        if self.flip {
            Self::new(self.turn + Ratio::new(1, 2), true)
        } else {
            Self::new(-self.turn, false)
        }
    }

    pub fn neg(&self) -> Self {
        Self::new(self.turn + Ratio::new(1, 2), self.flip)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { *self };
        (0..e.unsigned_abs()).fold(Self::one(), |acc, _| acc.mul(&base))
    }

    pub fn is_one(&self) -> bool {
        !self.flip && self.turn.is_zero()
    }

    /// Order as a group element.
    pub fn order(&self) -> i64 {
        if self.flip {
            4
        } else {
            *self.turn.denom()
        }
    }
}

/// A quaternion with exact cyclotomic components.
#[derive(Clone, Debug)]
pub enum Quaternion<T> {
    Torus(TorusElement),
    Dense { z0: Cyclotomic<T>, z1: Cyclotomic<T> },
}

/// Hashable canonical data for a quaternion in a fixed representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuatKey<T> {
    Torus(Ratio<i64>, bool),
    Dense(u64, Vec<T>, Vec<T>),
}

impl<T: Coefficient> Quaternion<T> {
    pub fn one() -> Self {
        Quaternion::Torus(TorusElement::one())
    }

    pub fn minus_one() -> Self {
        Quaternion::Torus(TorusElement::new(Ratio::new(1, 2), false))
    }

    pub fn i() -> Self {
        Quaternion::Torus(TorusElement::root(4, 1))
    }

    pub fn j() -> Self {
        Quaternion::Torus(TorusElement::new(Ratio::zero(), true))
    }

    pub fn k() -> Self {
        Quaternion::Torus(TorusElement::new(Ratio::new(1, 4), true))
    }

    /// `ξ_k^a`.
    pub fn xi(k: i64, a: i64) -> Self {
        Quaternion::Torus(TorusElement::root(k, a))
    }

    pub fn torus(turn: Ratio<i64>, flip: bool) -> Self {
        Quaternion::Torus(TorusElement::new(turn, flip))
    }

    pub fn new(z0: Cyclotomic<T>, z1: Cyclotomic<T>) -> Self {
        Quaternion::Dense { z0, z1 }
    }

    /// Complex components `(z₀, z₁)`.
    pub fn components(&self) -> (Cyclotomic<T>, Cyclotomic<T>) {
        match self {
            Quaternion::Torus(t) => {
                let r = Cyclotomic::from_turn(t.turn);
                let zero = Cyclotomic::zero_at(r.level());
                if t.flip { (zero, r) } else { (r, zero) }
            }
            Quaternion::Dense { z0, z1 } => (z0.clone(), z1.clone()),
        }
    }

    pub fn as_torus(&self) -> Option<TorusElement> {
        match self {
            Quaternion::Torus(t) => Some(*t),
            Quaternion::Dense { .. } => None,
        }
    }

    /// Rewrites a dense value lying in `S¹ ∪ S¹j` in torus form.
    pub fn simplify(&self) -> Self {
        match self {
            Quaternion::Torus(_) => self.clone(),
            Quaternion::Dense { z0, z1 } => {
                let found = if z1.is_zero() {
                    z0.root_of_unity_turn().map(|t| TorusElement::new(t, false))
                } else if z0.is_zero() {
                    z1.root_of_unity_turn().map(|t| TorusElement::new(t, true))
                } else {
                    None
                };
                found.map(Quaternion::Torus).unwrap_or_else(|| self.clone())
            }
        }
    }

    /// Dense form with both components at `level` (which must be a multiple of the current level).
    pub fn densify(&self, level: u64) -> Option<Self> {
        let (z0, z1) = self.components();
        Some(Quaternion::Dense { z0: z0.embed(level).ok()?, z1: z1.embed(level).ok()? })
    }

    /// Smallest level holding both components.
    pub fn level(&self) -> u64 {
        match self {
            Quaternion::Torus(t) => *t.turn.denom() as u64,
            Quaternion::Dense { z0, z1 } => num_integer::lcm(z0.level(), z1.level()),
        }
    }

    pub fn key(&self) -> QuatKey<T> {
        match self {
            Quaternion::Torus(t) => QuatKey::Torus(t.turn, t.flip),
            Quaternion::Dense { z0, z1 } => {
                let l = self.level();
                let a = z0.embed(l).unwrap();
                let b = z1.embed(l).unwrap();
                QuatKey::Dense(l, a.coeffs().to_vec(), b.coeffs().to_vec())
            }
        }
    }

    /// Quaternion product, using `j² = -1` and `j z = z̄ j`.
    pub fn mul(&self, o: &Self) -> Self {
        if let (Quaternion::Torus(a), Quaternion::Torus(b)) = (self, o) {
            return Quaternion::Torus(a.mul(b));
        }
        let (a0, a1) = self.components();
        let (b0, b1) = o.components();
        let z0 = &(&a0 * &b0) - &(&a1 * &b1.conj());
        let z1 = &(&a0 * &b1) + &(&a1 * &b0.conj());
        Quaternion::Dense { z0, z1 }
    }

    /// Quaternionic conjugate `z̄₀ - z₁j`; the inverse of a unit quaternion.
    pub fn conj(&self) -> Self {
        match self {
            Quaternion::Torus(t) => Quaternion::Torus(t.inverse()),
            Quaternion::Dense { z0, z1 } => Quaternion::Dense { z0: z0.conj(), z1: -z1 },
        }
    }

    pub fn inverse(&self) -> Self {
        self.conj()
    }

    pub fn neg(&self) -> Self {
        match self {
            Quaternion::Torus(t) => Quaternion::Torus(t.neg()),
            Quaternion::Dense { z0, z1 } => Quaternion::Dense { z0: -z0, z1: -z1 },
        }
    }

    pub fn norm_squared(&self) -> Cyclotomic<T> {
        let (z0, z1) = self.components();
        &z0.norm_squared() + &z1.norm_squared()
    }

    pub fn is_unit(&self) -> bool {
        self.norm_squared().is_one()
    }

    /// `Re(z) = Re(z₀)`.
    pub fn real_part(&self) -> Cyclotomic<T> {
        match self {
            Quaternion::Torus(t) if t.flip => Cyclotomic::from_int(0),
            _ => self.components().0.real_part(),
        }
    }

    /// Splits `z` into `(Re z, Im z)` with `z = Re z + Im z`.
    pub fn real_imaginary(&self) -> (Cyclotomic<T>, Self) {
        let re = self.real_part();
        let (z0, z1) = self.components();
        (re.clone(), Quaternion::Dense { z0: &z0 - &re, z1 })
    }

    /// `z · w = Re(z w⁻¹)` for unit `w`.
    pub fn inner_product(&self, w: &Self) -> Cyclotomic<T> {
        self.mul(&w.inverse()).real_part()
    }

    pub fn is_one(&self) -> bool {
        match self {
            Quaternion::Torus(t) => t.is_one(),
            Quaternion::Dense { z0, z1 } => z0.is_one() && z1.is_zero(),
        }
    }

    /// Membership in `O(2)* = S¹ ∪ S¹j`.
    pub fn in_circle_union(&self) -> bool {
        match self {
            Quaternion::Torus(_) => true,
            Quaternion::Dense { z0, z1 } => z0.is_zero() || z1.is_zero(),
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplicative order; `None` if it exceeds `bound`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        if let Quaternion::Torus(t) = self {
            return Some(t.order() as u64);
        }
        let mut cur = self.clone();
        for n in 1..=bound {
            if cur.is_one() {
                return Some(n);
            }
            cur = cur.mul(self);
        }
        None
    }

    pub fn approx(&self) -> [f64; 4] {
        let (z0, z1) = self.components();
        let (a, b) = z0.approx();
        let (c, d) = z1.approx();
        [a, b, c, d]
    }
}

impl<T: Coefficient> PartialEq for Quaternion<T> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Quaternion::Torus(a), Quaternion::Torus(b)) => a == b,
            _ => {
                let (a0, a1) = self.components();
                let (b0, b1) = other.components();
                a0 == b0 && a1 == b1
            }
        }
    }
}

impl<T: Coefficient> Eq for Quaternion<T> {}

impl<T: Coefficient> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quaternion::Torus(t) => {
                let quarter = |k: i64| t.turn == Ratio::new(k, 4);
                let named = match (t.flip, (0..4).find(|&k| quarter(k))) {
                    (false, Some(k)) => Some(["1", "i", "−1", "−i"][k as usize]),
                    (true, Some(k)) => Some(["j", "k", "−j", "−k"][k as usize]),
                    (_, None) => None,
                };
                match (named, t.flip) {
                    (Some(s), _) => f.write_str(s),
                    (None, true) => write!(f, "e(2πi·{})·j", t.turn),
                    (None, false) => write!(f, "e(2πi·{})", t.turn),
                }
            }
            Quaternion::Dense { z0, z1 } => write!(f, "[{z0}] + [{z1}]·j"),
        }
    }
}

/// Exact constants used for the binary polyhedral generators.
pub mod constants {
    use super::*;

    /// `1/√2 = (ζ₈ + ζ₈⁻¹)/2`.
    pub fn inv_sqrt2<T: Coefficient>() -> Cyclotomic<T> {
        let s = &Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::root_of_unity(8, -1);
        s.scale(&(T::one() / T::from_i64(2).unwrap()))
    }

    /// `√5 = 1 + 2(ζ₅ + ζ₅⁴)`.
    pub fn sqrt5<T: Coefficient>() -> Cyclotomic<T> {
        let s = &Cyclotomic::root_of_unity(5, 1) + &Cyclotomic::root_of_unity(5, 4);
        &Cyclotomic::from_int(1) + &s.scale(&T::from_i64(2).unwrap())
    }

    /// `(i + j)/√2`.
    pub fn octa_x<T: Coefficient>() -> Quaternion<T> {
        let r = inv_sqrt2::<T>();
        Quaternion::new(&Cyclotomic::root_of_unity(4, 1) * &r, r)
    }

    /// `(ξ₈ + ξ₈j)/√2`.
    pub fn octa_y<T: Coefficient>() -> Quaternion<T> {
        let c = &Cyclotomic::root_of_unity(8, 1) * &inv_sqrt2::<T>();
        Quaternion::new(c.clone(), c)
    }

    /// `½ + ((√5 − 1)/4) i + cos(π/5) j`.
    pub fn icosa_y<T: Coefficient>() -> Quaternion<T> {
        let quarter = T::one() / T::from_i64(4).unwrap();
        let s5 = sqrt5::<T>();
        let half = Cyclotomic::from_scalar(T::one() / T::from_i64(2).unwrap());
        let b = (&s5 - &Cyclotomic::from_int(1)).scale(&quarter);
        let cos = (&s5 + &Cyclotomic::from_int(1)).scale(&quarter);
        Quaternion::new(&half + &(&Cyclotomic::root_of_unity(4, 1) * &b), cos)
    }
}

#[cfg(test)]
mod tests {
    use super::constants::*;
    use super::*;

    type Q = Ratio<i64>;
    type H = Quaternion<Q>;
    type C = Cyclotomic<Q>;

    fn dense(q: &H) -> H {
        let (a, b) = q.components();
        H::new(a, b)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(H::i().mul(&H::j()), H::k());
        assert_eq!(H::j().mul(&H::j()), H::minus_one());
        let z8 = H::xi(8, 1);
        assert_eq!(H::j().mul(&z8), H::torus(Q::new(-1, 8), true));
        // dense path agrees with the torus path
        assert_eq!(dense(&H::j()).mul(&dense(&z8)), H::j().mul(&z8));
        let (a0, a1) = dense(&H::j()).mul(&dense(&z8)).components();
        assert!(a0.is_zero());
        assert_eq!(a1, C::root_of_unity(8, 1).conj());
    }

    #[test]
    fn inverses() {
        assert_eq!(H::xi(5, 1).inverse(), H::xi(5, 4));
        assert_eq!(H::j().inverse(), H::j().neg());
        let y = octa_y::<Q>();
        assert!(y.mul(&y.inverse()).is_one());
        let (a, b) = y.inverse().components();
        let r = inv_sqrt2::<Q>();
        assert_eq!(a, (&C::root_of_unity(8, 1) * &r).conj());
        assert_eq!(b, -(&C::root_of_unity(8, 1) * &r));
    }

    #[test]
    fn generators_are_units() {
        assert!(octa_x::<Q>().is_unit());
        assert!(octa_y::<Q>().is_unit());
        assert!(icosa_y::<Q>().is_unit());
        assert_eq!(sqrt5::<Q>().pow(2), C::from_int(5));
    }

    #[test]
    fn real_parts() {
        let (re, im) = H::i().real_imaginary();
        assert!(re.is_zero());
        assert_eq!(im, H::i());
        let (re, im) = H::minus_one().real_imaginary();
        assert_eq!(re, C::from_int(-1));
        assert!(im.norm_squared().is_zero());
        assert_eq!(icosa_y::<Q>().real_part(), C::from_scalar(Q::new(1, 2)));
    }

    #[test]
    fn icosahedral_relation() {
        let x = H::j();
        let y = icosa_y::<Q>();
        let y3 = y.pow(3);
        assert_eq!(y3, H::minus_one());
        // with x = j the product xy has order 5; x = -j gives x² = y³ = (xy)⁵ = -1
        assert!(x.mul(&y).pow(5).is_one());
        assert_eq!(x.neg().mul(&y).pow(5), y3);
    }

    #[test]
    fn inner_products() {
        assert!(H::i().inner_product(&H::j()).is_zero());
        let y = octa_y::<Q>();
        assert!(y.inner_product(&y).is_one());
    }

    #[test]
    fn simplify_recovers_torus_form() {
        let y = octa_y::<Q>();
        let y3 = y.pow(3);
        assert_eq!(y3.simplify().as_torus(), Some(TorusElement::new(Q::new(1, 2), false)));
        assert!(y.simplify().as_torus().is_none());
    }
}
