//! Exact arithmetic in cyclotomic fields `Q(ζ_L)`.
//!
//! An element is stored as its coordinate vector in the power basis
//! `1, ζ_L, …, ζ_L^{φ(L)-1}`, reduced modulo the `L`-th cyclotomic
//! polynomial. The coordinate type is generic; the crate root fixes it to
//! `Ratio<i64>`.
//!
//! Binary operations embed both operands into `Q(ζ_lcm)` first. Values at
//! different levels compare equal when they agree after embedding.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use num_integer::Integer;
use num_rational::Ratio;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::AlgebraError;

/// Largest `φ(L)` the field arithmetic accepts before reporting an overflow.
pub const DEFAULT_DEGREE_CEILING: usize = 2048;

/// Scalar type usable as a coordinate of a cyclotomic number.
///
/// Linear solves run in `Self` with checked arithmetic and fall back to
/// arbitrary-precision rationals when an intermediate value does not fit.
pub trait Coefficient:
    Clone
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + Send
    + Sync
    + 'static
{
    fn to_big(&self) -> BigRational;
    /// `None` when the value is not representable.
    fn from_big(b: &BigRational) -> Option<Self>;
}

macro_rules! ratio_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for Ratio<$t> {
            fn to_big(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
            fn from_big(b: &BigRational) -> Option<Self> {
                Some(Ratio::new(b.numer().try_into().ok()?, b.denom().try_into().ok()?))
            }
        }
    )*};
}

ratio_coefficient!(i32, i64, i128);

impl Coefficient for BigRational {
    fn to_big(&self) -> BigRational {
        self.clone()
    }
    fn from_big(b: &BigRational) -> Option<Self> {
        Some(b.clone())
    }
}

/// Euler's totient.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Per-level tables shared across threads: `powers[k]` is `ζ_L^k` in the power basis.
#[derive(Debug)]
struct LevelData {
    phi: usize,
    powers: Vec<Vec<i64>>,
}

static LEVELS: Lazy<RwLock<HashMap<u64, Arc<LevelData>>>> = Lazy::new(Default::default);
static CYCLOTOMIC_POLYS: Lazy<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = Lazy::new(Default::default);

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    if let Some(p) = CYCLOTOMIC_POLYS.read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &div);
        }
    }
    let poly = Arc::new(num);
    CYCLOTOMIC_POLYS.write().unwrap().insert(n, poly.clone());
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (k, &dk) in den.iter().enumerate() {
                rem[i + k] -= c * dk;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn level_data(level: u64) -> Result<Arc<LevelData>, AlgebraError> {
    if let Some(d) = LEVELS.read().unwrap().get(&level) {
        return Ok(d.clone());
    }
    let phi = totient(level) as usize;
    if phi > DEFAULT_DEGREE_CEILING {
        return Err(AlgebraError::LevelOverflow {
            level,
            degree: phi,
            ceiling: DEFAULT_DEGREE_CEILING,
        });
    }
    let poly = cyclotomic_polynomial(level);
    let mut powers = Vec::with_capacity(level as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..level {
        powers.push(cur.clone());
        // multiply by x and reduce the x^phi term
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * poly[i];
            }
        }
    }
    let data = Arc::new(LevelData { phi, powers });
    LEVELS.write().unwrap().insert(level, data.clone());
    Ok(data)
}

fn data(level: u64) -> Arc<LevelData> {
    level_data(level).unwrap_or_else(|e| panic!("{e}"))
}

/// Element of `Q(ζ_L)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic<T> {
    level: u64,
    coeffs: Vec<T>,
}

impl<T: Coefficient> Cyclotomic<T> {
    /// Builds a value from power-basis coordinates, which must have length `φ(level)`.
    pub fn from_coeffs(level: u64, coeffs: Vec<T>) -> Result<Self, AlgebraError> {
        let d = level_data(level)?;
        assert_eq!(coeffs.len(), d.phi, "coefficient vector must have length φ(L)");
        Ok(Cyclotomic { level, coeffs })
    }

    pub fn zero_at(level: u64) -> Self {
        let d = data(level);
        Cyclotomic { level, coeffs: vec![T::zero(); d.phi] }
    }

    pub fn from_scalar(c: T) -> Self {
        Cyclotomic { level: 1, coeffs: vec![c] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_scalar(T::from_i64(n).expect("integer coefficient"))
    }

    /// `ζ_L^k`.
    pub fn root_of_unity(level: u64, k: i64) -> Self {
        let d = data(level);
        let e = k.rem_euclid(level as i64) as usize;
        Cyclotomic { level, coeffs: d.powers[e].iter().map(|&c| int::<T>(c)).collect() }
    }

    /// `exp(2πi·turn)`, at level equal to the reduced denominator of `turn`.
    pub fn from_turn(turn: Ratio<i64>) -> Self {
        let den = *turn.denom() as u64;
        Self::root_of_unity(den, *turn.numer())
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Returns the same value written at level `target`, which must be a multiple of the current level.
    pub fn embed(&self, target: u64) -> Result<Self, AlgebraError> {
        if target == self.level {
            return Ok(self.clone());
        }
        if target % self.level != 0 {
            return Err(AlgebraError::LevelMismatch { from: self.level, to: target });
        }
        let d = level_data(target)?;
        let step = (target / self.level) as usize;
        let mut out = vec![T::zero(); d.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&d.powers[i * step]) {
                if p != 0 {
                    *o = o.clone() + c.clone() * int::<T>(p);
                }
            }
        }
        Ok(Cyclotomic { level: target, coeffs: out })
    }

    fn pair_at_common(&self, other: &Self) -> Result<(Self, Self), AlgebraError> {
        if self.level == other.level {
            return Ok((self.clone(), other.clone()));
        }
        let l = self.level.lcm(&other.level);
        Ok((self.embed(l)?, other.embed(l)?))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let (a, b) = self.pair_at_common(other)?;
        let coeffs = a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect();
        Ok(Cyclotomic { level: a.level, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.level == 1 {
            return Ok(other.scale(&self.coeffs[0]));
        }
        if other.level == 1 {
            return Ok(self.scale(&other.coeffs[0]));
        }
        let (a, b) = self.pair_at_common(other)?;
        let d = level_data(a.level)?;
        let l = a.level as usize;
        let mut raw: Vec<T> = vec![T::zero(); 2 * d.phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] = raw[i + j].clone() + x.clone() * y.clone();
                }
            }
        }
        let mut out: Vec<T> = raw[..d.phi].to_vec();
        for (k, c) in raw.into_iter().enumerate().skip(d.phi) {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&d.powers[k % l]) {
                if p != 0 {
                    *o = o.clone() + c.clone() * int::<T>(p);
                }
            }
        }
        Ok(Cyclotomic { level: a.level, coeffs: out })
    }

    pub fn scale(&self, c: &T) -> Self {
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { level: self.level, coeffs: self.coeffs.iter().map(|x| -x.clone()).collect() }
    }

    /// Complex conjugation, the Galois map `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let d = data(self.level);
        let l = self.level as usize;
        let mut out = vec![T::zero(); d.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&d.powers[(l - i) % l]) {
                if p != 0 {
                    *o = o.clone() + c.clone() * int::<T>(p);
                }
            }
        }
        Cyclotomic { level: self.level, coeffs: out }
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let nonzero: Vec<usize> =
            (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect();
        match nonzero.as_slice() {
            [] => Err(AlgebraError::DivisionByZero),
            [i] => {
                let c = T::one() / self.coeffs[*i].clone();
                Ok(Self::root_of_unity(self.level, -(*i as i64)).scale(&c))
            }
            _ => self.inverse_by_elimination(),
        }
    }

    fn inverse_by_elimination(&self) -> Result<Self, AlgebraError> {
        let d = data(self.level);
        let n = d.phi;
        // column j of the multiplication matrix is self * ζ^j
        let mut cols = Vec::with_capacity(n);
        let mut cur = self.clone();
        let zeta = Self::root_of_unity(self.level, 1);
        for _ in 0..n {
            cols.push(cur.coeffs.clone());
            cur = cur.checked_mul(&zeta)?;
        }
        let mut rhs = vec![T::zero(); n];
        rhs[0] = T::one();
        let rows: Vec<Vec<T>> = (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect();
        let x = solve(rows, rhs, n)?;
        Ok(Cyclotomic { level: self.level, coeffs: x })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `(a + conj a)/2`, as a value of the maximal real subfield.
    pub fn real_part(&self) -> Self {
        let two = T::from_i64(2).unwrap();
        (self + &self.conj()).scale(&(T::one() / two))
    }

    /// `|a|² = a · conj a`.
    pub fn norm_squared(&self) -> Self {
        self * &self.conj()
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<T> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Rewrites the value at a level dividing the current one, if it lies in that subfield.
    pub fn restrict(&self, target: u64) -> Option<Self> {
        if target == self.level {
            return Some(self.clone());
        }
        if self.level % target != 0 {
            let g = self.level.gcd(&target);
            return self.restrict(g)?.embed(target).ok();
        }
        let small = level_data(target).ok()?;
        let basis: Vec<Vec<T>> = (0..small.phi)
            .map(|i| Self::root_of_unity(target, i as i64).embed(self.level).unwrap().coeffs)
            .collect();
        let big_n = self.coeffs.len();
        let rows: Vec<Vec<T>> =
            (0..big_n).map(|r| (0..small.phi).map(|c| basis[c][r].clone()).collect()).collect();
        let x = solve(rows, self.coeffs.clone(), small.phi).ok()?;
        let candidate = Cyclotomic { level: target, coeffs: x };
        if candidate == *self {
            Some(candidate)
        } else {
            None
        }
    }

    /// If the value is `ζ^k` for some root of unity, returns its turn `k/N` in `[0, 1)`.
    pub fn root_of_unity_turn(&self) -> Option<Ratio<i64>> {
        let n = self.level.lcm(&2);
        let here = self.embed(n).ok()?;
        (0..n as i64)
            .find(|&k| Self::root_of_unity(n, k) == here)
            .map(|k| Ratio::new(k, n as i64))
    }

    /// Floating-point rendering for display. Never used in comparisons.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * k as f64 / self.level as f64;
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }
}

fn int<T: Coefficient>(c: i64) -> T {
    T::from_i64(c).expect("integer coefficient")
}

/// Solves a consistent (possibly overdetermined) linear system; `None` if singular or inconsistent.
/// Outcome of one elimination attempt.
enum Solve<T> {
    Solved(Vec<T>),
    Singular,
    Overflow,
}

/// Gauss–Jordan elimination with checked arithmetic.
fn eliminate<T>(mut rows: Vec<Vec<T>>, mut rhs: Vec<T>, ncols: usize) -> Solve<T>
where
    T: Clone + Zero + One + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv,
{
    macro_rules! ck {
        ($e:expr) => {
            match $e {
                Some(v) => v,
                None => return Solve::Overflow,
            }
        };
    }
    let nrows = rows.len();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(ncols);
    for col in 0..ncols {
        let Some(p) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            return Solve::Singular;
        };
        rows.swap(pivot_row, p);
        rhs.swap(pivot_row, p);
        let inv = ck!(T::one().checked_div(&rows[pivot_row][col]));
        for c in col..ncols {
            rows[pivot_row][c] = ck!(rows[pivot_row][c].checked_mul(&inv));
        }
        rhs[pivot_row] = ck!(rhs[pivot_row].checked_mul(&inv));
        for r in 0..nrows {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..ncols {
                    let v = ck!(rows[pivot_row][c].checked_mul(&f));
                    rows[r][c] = ck!(rows[r][c].checked_sub(&v));
                }
                let v = ck!(rhs[pivot_row].checked_mul(&f));
                rhs[r] = ck!(rhs[r].checked_sub(&v));
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rhs[pivot_row..].iter().any(|v| !v.is_zero()) {
        return Solve::Singular;
    }
    Solve::Solved(pivots.into_iter().map(|r| rhs[r].clone()).collect())
}

fn solve<T: Coefficient>(rows: Vec<Vec<T>>, rhs: Vec<T>, ncols: usize) -> Result<Vec<T>, AlgebraError> {
    let big_rows: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(T::to_big).collect()).collect();
    let big_rhs: Vec<BigRational> = rhs.iter().map(T::to_big).collect();
    match eliminate(rows, rhs, ncols) {
        Solve::Solved(x) => Ok(x),
        Solve::Singular => Err(AlgebraError::DivisionByZero),
        Solve::Overflow => match eliminate(big_rows, big_rhs, ncols) {
            Solve::Solved(x) => x.iter().map(T::from_big).collect::<Option<Vec<T>>>().ok_or(AlgebraError::CoefficientOverflow),
            Solve::Singular => Err(AlgebraError::DivisionByZero),
            Solve::Overflow => unreachable!("arbitrary precision does not overflow"),
        },
    }
}

impl<T: Coefficient> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        match self.pair_at_common(other) {
            Ok((a, b)) => a.coeffs == b.coeffs,
            Err(_) => false,
        }
    }
}

impl<T: Coefficient> Eq for Cyclotomic<T> {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<T: Coefficient> std::ops::$tr<&Cyclotomic<T>> for &Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: &Cyclotomic<T>) -> Cyclotomic<T> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<T: Coefficient> std::ops::$tr for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<T: Coefficient> std::ops::Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic::neg(self)
    }
}

impl<T: Coefficient> std::ops::Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic::neg(&self)
    }
}

impl<T: Coefficient> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·ζ{}", self.level)?,
                _ => write!(f, "({c})·ζ{}^{k}", self.level)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Ratio<i64>;
    type C = Cyclotomic<Q>;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(totient(20), 8);
    }

    #[test]
    fn root_products() {
        let z8 = C::root_of_unity(8, 1);
        assert_eq!(&z8 * &z8, C::root_of_unity(4, 1));
        assert_eq!(C::root_of_unity(5, 1).conj(), C::root_of_unity(5, 4));
        assert_eq!(C::root_of_unity(8, 4), C::from_int(-1));
    }

    #[test]
    fn sqrt_two_from_eighth_roots() {
        let z8 = C::root_of_unity(8, 1);
        let s = &z8 + &z8.inverse().unwrap();
        assert_eq!(s.level(), 8);
        assert_eq!(&s * &s, C::from_int(2));
        assert!(s.is_real());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(C::zero_at(12).inverse(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn dense_inverse() {
        let a = &C::root_of_unity(20, 3) + &C::from_int(2);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn embedding_round_trip() {
        for k in 0..12 {
            let x = C::root_of_unity(12, k);
            let up = x.embed(60).unwrap();
            assert_eq!(up, C::root_of_unity(60, 5 * k));
            assert_eq!(up.restrict(12).unwrap().coeffs(), x.coeffs());
        }
        assert!(C::root_of_unity(60, 1).restrict(12).is_none());
    }

    #[test]
    fn restrict_to_rationals() {
        let half = C::from_turn(Q::new(1, 6)).real_part();
        assert_eq!(half.restrict(1).unwrap(), C::from_scalar(Q::new(1, 2)));
    }

    #[test]
    fn turn_detection() {
        let x = -C::root_of_unity(5, 2);
        assert_eq!(x.root_of_unity_turn(), Some(Q::new(9, 10)));
        assert_eq!((&C::from_int(1) + &C::from_int(1)).root_of_unity_turn(), None);
    }

    #[test]
    fn level_overflow_reported() {
        assert!(matches!(
            C::from_coeffs(4099, vec![]),
            Err(AlgebraError::LevelOverflow { .. })
        ));
    }

    #[test]
    fn approx_is_display_only() {
        let (re, im) = C::root_of_unity(4, 1).approx();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }
}
