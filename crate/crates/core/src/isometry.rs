//! Isometries of `S³` as quaternion pairs, finite groups of them, and the
//! fundamental groups of the elliptic 3-manifolds.
//!
//! `F(q₁, q₂)` acts by `z ↦ q₁ z q₂⁻¹`; a reversing isometry acts by
//! `z ↦ q₁ z̄ q₂⁻¹`. The pairs `(q₁, q₂)` and `(-q₁, -q₂)` give the same map.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use once_cell::sync::OnceCell;
use serde::{Deserialize, Serialize};

use crate::error::{DescriptorError, GroupError};
use crate::groups::TableGroup;
use crate::quaternion::{constants, QuatKey};
use crate::{Cyc, Quat, Rational};

/// Default element bound for [`FiniteIsomGroup::closure`].
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

#[derive(Clone, Debug)]
pub struct IsometryS3 {
    left: Quat,
    right: Quat,
    reverses: bool,
}

pub type IsoKey = (QuatKey<Rational>, QuatKey<Rational>, bool);

fn first_sign_positive(q: &Quat) -> bool {
    match q {
        Quat::Torus(t) => t.turn() < Rational::new(1, 2),
        Quat::Dense { z0, z1 } => z0
            .coeffs()
            .iter()
            .chain(z1.coeffs())
            .find(|c| !c.is_zero())
            .map(|c| c.is_positive())
            .unwrap_or(true),
    }
}

impl IsometryS3 {
    /// `F(q₁, q₂)` or its composite with quaternionic conjugation.
    pub fn new(left: Quat, right: Quat, reverses: bool) -> Self {
        let mut f = IsometryS3 { left, right, reverses };
        f.canonicalize();
        f
    }

    /// `F(q₁, q₂)`.
    pub fn rotation(left: Quat, right: Quat) -> Self {
        Self::new(left, right, false)
    }

    pub fn identity() -> Self {
        Self::rotation(Quat::one(), Quat::one())
    }

    /// `F(1, -1)`, the antipodal map.
    pub fn antipodal() -> Self {
        Self::rotation(Quat::one(), Quat::minus_one())
    }

    /// `T(z) = z⁻¹`.
    pub fn inversion() -> Self {
        Self::new(Quat::one(), Quat::one(), true)
    }

    /// `R(z₀ + z₁j) = z̄₁ + z₀j`.
    pub fn lens_reflection() -> Self {
        Self::new(Quat::j(), Quat::one(), true)
    }

    fn canonicalize(&mut self) {
        if !first_sign_positive(&self.left) {
            self.left = self.left.neg();
            self.right = self.right.neg();
        }
    }

    pub fn left(&self) -> &Quat {
        &self.left
    }

    pub fn right(&self) -> &Quat {
        &self.right
    }

    pub fn reverses(&self) -> bool {
        self.reverses
    }

    pub fn key(&self) -> IsoKey {
        (self.left.key(), self.right.key(), self.reverses)
    }

    pub fn apply(&self, z: &Quat) -> Quat {
        let w = if self.reverses { z.conj() } else { z.clone() };
        self.left.mul(&w).mul(&self.right.inverse())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        if self.reverses {
            Self::new(self.left.mul(&other.right), self.right.mul(&other.left), !other.reverses)
        } else {
            Self::new(self.left.mul(&other.left), self.right.mul(&other.right), other.reverses)
        }
    }

    pub fn invert(&self) -> Self {
        if self.reverses {
            Self::new(self.right.inverse(), self.left.inverse(), true)
        } else {
            Self::new(self.left.inverse(), self.right.inverse(), false)
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        (0..e).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    pub fn conjugate(&self, g: &Self) -> Self {
        self.compose(g).compose(&self.invert())
    }

    pub fn is_identity(&self) -> bool {
        !self.reverses
            && ((self.left.is_one() && self.right.is_one())
                || (self.left.neg().is_one() && self.right.neg().is_one()))
    }

    /// Whether the isometry has a fixed point on `S³`. Only meaningful for rotations:
    /// `q₁ z = z q₂` has a unit solution iff `Re q₁ = Re q₂`.
    pub fn has_fixed_point(&self) -> bool {
        if self.reverses {
            return true;
        }
        if let (Some(a), Some(b)) = (self.left.as_torus(), self.right.as_torus()) {
            let re_zero = |t: &crate::quaternion::TorusElement| {
                t.flip() || t.turn() == Rational::new(1, 4) || t.turn() == Rational::new(3, 4)
            };
            return match (a.flip(), b.flip()) {
                (false, false) => a.turn() == b.turn() || a.turn() == (Rational::from_integer(1) - b.turn()) % Rational::from_integer(1),
                _ => re_zero(&a) && re_zero(&b),
            };
        }
        self.left.real_part() == self.right.real_part()
    }
}

impl PartialEq for IsometryS3 {
    fn eq(&self, other: &Self) -> bool {
        self.reverses == other.reverses
            && ((self.left == other.left && self.right == other.right)
                || (self.left == other.left.neg() && self.right == other.right.neg()))
    }
}

impl Eq for IsometryS3 {}

impl fmt::Display for IsometryS3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reverses {
            write!(f, "F({}, {})∘conj", self.left, self.right)
        } else {
            write!(f, "F({}, {})", self.left, self.right)
        }
    }
}

/// How the quaternions on one side of a group are stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideMode {
    Torus,
    Dense(u64),
}

impl SideMode {
    fn of(qs: &[&Quat]) -> SideMode {
        let mut dense = false;
        let mut level = 2u64;
        for q in qs {
            if !matches!(q, Quat::Torus(_)) {
                dense = true;
            }
            level = level.lcm(&q.level());
        }
        if dense { SideMode::Dense(level) } else { SideMode::Torus }
    }

    fn union(self, other: SideMode) -> SideMode {
        match (self, other) {
            (SideMode::Torus, SideMode::Torus) => SideMode::Torus,
            (SideMode::Dense(a), SideMode::Dense(b)) => SideMode::Dense(a.lcm(&b)),
            (SideMode::Dense(a), SideMode::Torus) | (SideMode::Torus, SideMode::Dense(a)) => {
                SideMode::Dense(a)
            }
        }
    }

    fn convert(self, q: &Quat) -> Option<Quat> {
        match self {
            SideMode::Torus => match q.simplify() {
                t @ Quat::Torus(_) => Some(t),
                _ => None,
            },
            SideMode::Dense(level) => {
                if level % q.level() == 0 {
                    return q.densify(level);
                }
                let (z0, z1) = q.components();
                Some(Quat::new(z0.restrict(level)?, z1.restrict(level)?))
            }
        }
    }
}

/// Uniform storage for every element of a group, making coefficient keys comparable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame {
    pub left: SideMode,
    pub right: SideMode,
}

impl Frame {
    pub fn for_generators(gens: &[IsometryS3]) -> Frame {
        let lefts: Vec<&Quat> = gens.iter().map(|g| &g.left).collect();
        let rights: Vec<&Quat> = gens.iter().map(|g| &g.right).collect();
        let mut left = SideMode::of(&lefts);
        let mut right = SideMode::of(&rights);
        if gens.iter().any(|g| g.reverses) {
            let both = left.union(right);
            left = both;
            right = both;
        }
        Frame { left, right }
    }

    pub fn union(&self, other: &Frame) -> Frame {
        let left = self.left.union(other.left);
        let right = self.right.union(other.right);
        if left != right && (self.left == self.right && other.left == other.right) {
            let both = left.union(right);
            return Frame { left: both, right: both };
        }
        Frame { left, right }
    }

    pub fn convert(&self, f: &IsometryS3) -> Option<IsometryS3> {
        Some(IsometryS3::new(self.left.convert(&f.left)?, self.right.convert(&f.right)?, f.reverses))
    }
}

/// A finite group of isometries with deterministic element order.
#[derive(Debug)]
pub struct FiniteIsomGroup {
    frame: Frame,
    generators: Vec<IsometryS3>,
    elements: Vec<IsometryS3>,
    index: HashMap<IsoKey, usize>,
    identity: usize,
    table: OnceCell<Arc<TableGroup>>,
}

impl Clone for FiniteIsomGroup {
    fn clone(&self) -> Self {
        FiniteIsomGroup {
            frame: self.frame,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            identity: self.identity,
            table: self.table.clone(),
        }
    }
}

impl FiniteIsomGroup {
    /// Smallest group containing `generators`, by breadth-first saturation.
    pub fn closure(generators: &[IsometryS3], bound: usize) -> Result<Self, GroupError> {
        let frame = Frame::for_generators(generators);
        Self::closure_in_frame(generators, frame, bound)
    }

    pub fn closure_in_frame(
        generators: &[IsometryS3],
        frame: Frame,
        bound: usize,
    ) -> Result<Self, GroupError> {
        let gens: Vec<IsometryS3> = generators
            .iter()
            .map(|g| frame.convert(g).expect("generator representable in its own frame"))
            .collect();
        let id = frame.convert(&IsometryS3::identity()).unwrap();
        let mut elements = vec![id.clone()];
        let mut seen: HashMap<IsoKey, usize> = HashMap::from([(id.key(), 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let p = elements[i].compose(g);
                let k = p.key();
                if !seen.contains_key(&k) {
                    if elements.len() >= bound {
                        return Err(GroupError::ExceedsBound { bound });
                    }
                    seen.insert(k, elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let mut keyed: Vec<(IsoKey, IsometryS3)> = elements.into_iter().map(|e| (e.key(), e)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let index: HashMap<IsoKey, usize> =
            keyed.iter().enumerate().map(|(i, (k, _))| (k.clone(), i)).collect();
        let identity = index[&id.key()];
        Ok(FiniteIsomGroup {
            frame,
            generators: gens,
            elements: keyed.into_iter().map(|(_, e)| e).collect(),
            index,
            identity,
            table: OnceCell::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[IsometryS3] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &IsometryS3 {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[IsometryS3] {
        &self.generators
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, f: &IsometryS3) -> Option<usize> {
        let c = self.frame.convert(f)?;
        self.index.get(&c.key()).copied()
    }

    pub fn contains(&self, f: &IsometryS3) -> bool {
        self.index_of(f).is_some()
    }

    pub fn is_orientation_preserving(&self) -> bool {
        self.elements.iter().all(|e| !e.reverses)
    }

    /// Cayley table, computed on first use.
    pub fn table(&self) -> Arc<TableGroup> {
        self.table
            .get_or_init(|| {
                let n = self.order();
                let mut mul = vec![0u32; n * n];
                for a in 0..n {
                    for b in 0..n {
                        let p = self.elements[a].compose(&self.elements[b]);
                        mul[a * n + b] = self.index[&p.key()] as u32;
                    }
                }
                Arc::new(TableGroup::from_table(n, mul, self.identity))
            })
            .clone()
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.index[&self.elements[i].invert().key()]
    }

    /// True iff `f g f⁻¹ ∈ G` for every `g ∈ G`.
    pub fn is_normalized_by(&self, f: &IsometryS3) -> bool {
        self.generators.iter().all(|g| self.contains(&f.conjugate(g)))
    }

    /// Free action: no nonidentity element fixes a point of `S³`.
    pub fn acts_freely(&self) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(i, e)| i == self.identity || !e.has_fixed_point())
    }

    /// Indices of the elements of a subgroup, expressed in this group.
    pub fn subgroup_indices(&self, sub: &FiniteIsomGroup) -> Option<Vec<usize>> {
        sub.elements.iter().map(|e| self.index_of(e)).collect()
    }
}

/// `normalizes(f, G)`.
pub fn normalizes(f: &IsometryS3, group: &FiniteIsomGroup) -> bool {
    group.is_normalized_by(f)
}

/// A finite subgroup of `S³ × S³`, as a list of pairs.
#[derive(Clone, Debug)]
pub struct PairGroup {
    pub pairs: Vec<(Quat, Quat)>,
}

impl PairGroup {
    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    pub fn contains(&self, p: &(Quat, Quat)) -> bool {
        self.pairs.iter().any(|(a, b)| *a == p.0 && *b == p.1)
    }

    /// Image under `F`.
    pub fn image(&self) -> Result<FiniteIsomGroup, GroupError> {
        let gens: Vec<IsometryS3> =
            self.pairs.iter().map(|(a, b)| IsometryS3::rotation(a.clone(), b.clone())).collect();
        FiniteIsomGroup::closure(&gens, DEFAULT_CLOSURE_BOUND)
    }
}

/// Subgroup of `S³` realized as left multiplications `F(q, 1)`.
pub fn quaternion_group(gens: &[Quat]) -> Result<FiniteIsomGroup, GroupError> {
    let isos: Vec<IsometryS3> = gens.iter().map(|q| IsometryS3::rotation(q.clone(), Quat::one())).collect();
    FiniteIsomGroup::closure(&isos, DEFAULT_CLOSURE_BOUND)
}

/// `G* = F⁻¹(G)` together with its left and right projections.
pub fn lift_and_project(
    group: &FiniteIsomGroup,
) -> Result<(PairGroup, FiniteIsomGroup, FiniteIsomGroup), GroupError> {
    if !group.is_orientation_preserving() {
        return Err(GroupError::ReversingElement);
    }
    let mut pairs = Vec::with_capacity(2 * group.order());
    for e in group.elements() {
        pairs.push((e.left.clone(), e.right.clone()));
        pairs.push((e.left.neg(), e.right.neg()));
    }
    let mut lefts: Vec<Quat> = group.generators().iter().map(|g| g.left.clone()).collect();
    let mut rights: Vec<Quat> = group.generators().iter().map(|g| g.right.clone()).collect();
    lefts.push(Quat::minus_one());
    rights.push(Quat::minus_one());
    Ok((PairGroup { pairs }, quaternion_group(&lefts)?, quaternion_group(&rights)?))
}

/// Kernel of `(h₁, h₂) ↦ f₁(h₁) − f₂(h₂)` for surjections onto `Z/a`.
///
/// `h1`, `h2` are subgroups of `S³` given as left multiplications; the maps are
/// value tables indexed like the group elements.
pub fn diagonal_subgroup(
    h1: &FiniteIsomGroup,
    h2: &FiniteIsomGroup,
    f1: &[u32],
    f2: &[u32],
    a: u32,
) -> Result<PairGroup, GroupError> {
    check_cyclic_quotient(h1, f1, a)?;
    check_cyclic_quotient(h2, f2, a)?;
    let mut pairs = Vec::new();
    for (i, x) in h1.elements().iter().enumerate() {
        for (j, y) in h2.elements().iter().enumerate() {
            if f1[i] == f2[j] {
                pairs.push((left_quat(x), left_quat(y)));
            }
        }
    }
    Ok(PairGroup { pairs })
}

/// The quaternion `q` of a left multiplication `F(q, 1)`, sign-normalized so the right part is `1`.
fn left_quat(f: &IsometryS3) -> Quat {
    if f.right.is_one() { f.left.clone() } else { f.left.neg() }
}

fn check_cyclic_quotient(h: &FiniteIsomGroup, f: &[u32], a: u32) -> Result<(), GroupError> {
    if f.len() != h.order() {
        return Err(GroupError::BadHomomorphism("table length differs from group order".into()));
    }
    if a == 0 || f.iter().any(|&v| v >= a) {
        return Err(GroupError::BadHomomorphism("value outside the quotient".into()));
    }
    let t = h.table();
    let n = h.order();
    for x in 0..n {
        for y in 0..n {
            if (f[x] + f[y]) % a != f[t.mul(x, y)] {
                return Err(GroupError::BadHomomorphism(format!("not multiplicative at ({x}, {y})")));
            }
        }
    }
    let mut hit = vec![false; a as usize];
    for &v in f {
        hit[v as usize] = true;
    }
    if hit.iter().any(|h| !h) {
        return Err(GroupError::BadHomomorphism("not surjective".into()));
    }
    Ok(())
}

/// Value table of `ξ_k^a ↦ a mod r` on a cyclic subgroup of the circle.
pub fn cyclic_residue_table(h: &FiniteIsomGroup, k: i64, r: u32) -> Vec<u32> {
    h.elements()
        .iter()
        .map(|e| {
            let t = left_quat(e).as_torus().expect("circle element").turn() * Rational::from_integer(k);
            (t.to_integer().rem_euclid(r as i64)) as u32
        })
        .collect()
}

/// Input family of an elliptic 3-manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ManifoldDescriptor {
    Lens { m: u64, q: u64 },
    Quaternionic { n: u64 },
    Prism { m: u64, n: u64 },
    PrismDiagonal { m: u64, n: u64 },
    Tetrahedral { n: u64 },
    TetrahedralDiagonal { n: u64 },
    Octahedral { n: u64 },
    Icosahedral { n: u64 },
}

fn require(ok: bool, msg: &str) -> Result<(), DescriptorError> {
    if ok { Ok(()) } else { Err(DescriptorError::Constraint(msg.to_string())) }
}

impl ManifoldDescriptor {
    pub fn validate(&self) -> Result<(), DescriptorError> {
        use ManifoldDescriptor::*;
        match *self {
            Lens { m, q } => {
                require(m >= 1, "m ≥ 1 required")?;
                require(q >= 1 || m == 1, "q ≥ 1 required")?;
                require(m.gcd(&q) == 1, "(m,q)=1 required")
            }
            Quaternionic { n } => require(n >= 1 && n.gcd(&2) == 1, "(2,n)=1 required"),
            Prism { m, n } => {
                require(m > 2, "m > 2 required")?;
                require(n >= 1 && (2 * m).gcd(&n) == 1, "(2m,n)=1 required")
            }
            PrismDiagonal { m, n } => {
                require(m > 2 && m % 2 == 1, "m odd and m > 2 required")?;
                require(n >= 1 && m.gcd(&n) == 1, "(m,n)=1 required")?;
                require(n % 2 == 0, "n even required for a free action")
            }
            Tetrahedral { n } => require(n >= 1 && n.gcd(&6) == 1, "(6,n)=1 required"),
            TetrahedralDiagonal { n } => {
                require(n % 2 == 1 && n % 3 == 0, "n odd and divisible by 3 required")
            }
            Octahedral { n } => require(n >= 1 && n.gcd(&6) == 1, "(6,n)=1 required"),
            Icosahedral { n } => require(n >= 1 && n.gcd(&30) == 1, "(30,n)=1 required"),
        }
    }

    pub fn is_lens(&self) -> bool {
        matches!(self, ManifoldDescriptor::Lens { .. })
    }

    /// Order of the fundamental group.
    pub fn pi1_order(&self) -> u64 {
        use ManifoldDescriptor::*;
        match *self {
            Lens { m, .. } => m,
            Quaternionic { n } => 8 * n,
            Prism { m, n } => 4 * m * n,
            PrismDiagonal { m, n } => 4 * m * n,
            Tetrahedral { n } => 24 * n,
            TetrahedralDiagonal { n } => 24 * n,
            Octahedral { n } => 48 * n,
            Icosahedral { n } => 120 * n,
        }
    }
}

impl fmt::Display for ManifoldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ManifoldDescriptor::*;
        match *self {
            Lens { m, q } => write!(f, "L({m},{q})"),
            Quaternionic { n } => write!(f, "quaternionic(n={n})"),
            Prism { m, n } => write!(f, "prism(m={m},n={n})"),
            PrismDiagonal { m, n } => write!(f, "prism-diagonal(m={m},n={n})"),
            Tetrahedral { n } => write!(f, "tetrahedral(n={n})"),
            TetrahedralDiagonal { n } => write!(f, "tetrahedral-diagonal(n={n})"),
            Octahedral { n } => write!(f, "octahedral(n={n})"),
            Icosahedral { n } => write!(f, "icosahedral(n={n})"),
        }
    }
}

fn rot(a: Quat, b: Quat) -> IsometryS3 {
    IsometryS3::rotation(a, b)
}

/// `F(ξ_{2m}^{q+1}, ξ_{2m}^{q-1})`, the standard generator of `π₁(L(m,q))`.
pub fn lens_generator(m: u64, q: u64) -> IsometryS3 {
    let (m, q) = (m as i64, q as i64);
    rot(Quat::xi(2 * m, q + 1), Quat::xi(2 * m, q - 1))
}

/// Generators of the binary tetrahedral group: `j` and `(ξ₈ + ξ₈j)/√2`.
pub fn tetrahedral_generators() -> [Quat; 2] {
    [Quat::j(), constants::octa_y()]
}

pub fn octahedral_generators() -> [Quat; 2] {
    [constants::octa_x(), constants::octa_y()]
}

pub fn icosahedral_generators() -> [Quat; 2] {
    [Quat::j(), constants::icosa_y()]
}

/// Generators of `G ⊂ SO(4)` imbedded so that the Hopf fibering is maximally symmetric.
pub fn fundamental_group_generators(d: &ManifoldDescriptor) -> Result<Vec<IsometryS3>, DescriptorError> {
    use ManifoldDescriptor::*;
    d.validate()?;
    let one = Quat::one;
    let circle = |n: u64| rot(Quat::xi(2 * n as i64, 1), one());
    let right = |qs: &[Quat]| qs.iter().map(|q| rot(one(), q.clone())).collect::<Vec<_>>();
    let gens = match *d {
        Lens { m, q } => vec![lens_generator(m, q)],
        Quaternionic { n: 1 } => vec![rot(Quat::i(), one()), rot(Quat::j(), one())],
        Quaternionic { n } => {
            let mut g = vec![circle(n)];
            g.extend(right(&[Quat::i(), Quat::j()]));
            g
        }
        Prism { m, n: 1 } => vec![
            rot(Quat::xi(2 * m as i64, 1), one()),
            rot(Quat::j(), one()),
            rot(one(), Quat::minus_one()),
        ],
        Prism { m, n } => {
            let mut g = vec![circle(n)];
            g.extend(right(&[Quat::xi(2 * m as i64, 1), Quat::j()]));
            g
        }
        PrismDiagonal { m, n } => {
            let (m, n) = (m as i64, n as i64);
            vec![
                rot(Quat::xi(4 * n, 1), Quat::j()),
                rot(Quat::xi(4 * n, 2), one()),
                rot(one(), Quat::xi(2 * m, 1)),
            ]
        }
        Tetrahedral { n } => {
            let mut g = vec![circle(n)];
            g.extend(right(&tetrahedral_generators()));
            g
        }
        TetrahedralDiagonal { n } => {
            let n = n as i64;
            // kernel of C_{6n} → C₃ times Q₈, plus (ξ_{6n}, y) with y ↦ 1 in C₃
            vec![
                rot(Quat::xi(6 * n, 3), one()),
                rot(one(), Quat::i()),
                rot(one(), Quat::j()),
                rot(Quat::xi(6 * n, 1), constants::octa_y()),
            ]
        }
        Octahedral { n } => {
            let mut g = vec![circle(n)];
            g.extend(right(&octahedral_generators()));
            g
        }
        Icosahedral { n } => {
            let mut g = vec![circle(n)];
            g.extend(right(&icosahedral_generators()));
            g
        }
    };
    Ok(gens)
}

/// `π₁(M)` as a subgroup of `SO(4)`.
pub fn fundamental_group(d: &ManifoldDescriptor) -> Result<FiniteIsomGroup, GroupError> {
    let gens = fundamental_group_generators(d).map_err(|e| GroupError::WrongType(e.to_string()))?;
    FiniteIsomGroup::closure(&gens, DEFAULT_CLOSURE_BOUND)
}

/// `exp(2πi·a/k)` as a cyclotomic number.
pub fn xi(k: u64, a: i64) -> Cyc {
    Cyc::root_of_unity(k, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_points() -> Vec<Quat> {
        let mut pts = vec![Quat::one(), Quat::i(), Quat::j(), Quat::k(), Quat::xi(10, 3)];
        pts.push(constants::octa_x());
        pts.push(constants::octa_y());
        pts.push(constants::icosa_y());
        pts.push(Quat::torus(Rational::new(1, 7), true));
        pts
    }

    #[test]
    fn lens_generator_action() {
        let f = lens_generator(5, 2);
        assert_eq!(f, rot(Quat::xi(10, 3), Quat::xi(10, 1)));
        for z in sample_points() {
            let (z0, z1) = z.components();
            let expect = Quat::new(&xi(5, 1) * &z0, &xi(5, 2) * &z1);
            assert_eq!(f.apply(&z), expect);
        }
    }

    #[test]
    fn antipodal_and_reflection() {
        for z in sample_points() {
            assert_eq!(IsometryS3::antipodal().apply(&z), z.neg());
            let (z0, z1) = z.components();
            assert_eq!(IsometryS3::lens_reflection().apply(&z), Quat::new(z1.conj(), z0));
        }
    }

    #[test]
    fn composition_laws() {
        let fi = rot(Quat::i(), Quat::one());
        let fj = rot(Quat::j(), Quat::one());
        assert_eq!(fi.compose(&fj), rot(Quat::k(), Quat::one()));
        let r = IsometryS3::lens_reflection();
        assert_eq!(r.compose(&r), rot(Quat::j(), Quat::j()));
        assert!(r.pow(4).is_identity());
        assert!(rot(Quat::minus_one(), Quat::minus_one()).is_identity());
        assert_eq!(rot(Quat::minus_one(), Quat::minus_one()).key(), IsometryS3::identity().key());
    }

    #[test]
    fn composition_matches_action() {
        let maps = [
            IsometryS3::lens_reflection(),
            IsometryS3::inversion(),
            rot(constants::octa_x(), Quat::xi(12, 5)),
            IsometryS3::new(constants::icosa_y(), Quat::j(), true),
        ];
        for f in &maps {
            for g in &maps {
                for z in sample_points() {
                    assert_eq!(f.compose(g).apply(&z), f.apply(&g.apply(&z)));
                }
                assert!(f.compose(&f.invert()).is_identity());
            }
        }
    }

    #[test]
    fn closure_orders() {
        let o = quaternion_group(&octahedral_generators()).unwrap();
        assert_eq!(o.order(), 48);
        let i = quaternion_group(&icosahedral_generators()).unwrap();
        assert_eq!(i.order(), 120);
        assert_eq!(quaternion_group(&[Quat::i()]).unwrap().order(), 4);
    }

    #[test]
    fn closure_bound_reported() {
        let err = quaternion_group(&icosahedral_generators()).map(|_| ());
        assert!(err.is_ok());
        let gens = [rot(Quat::j(), Quat::one()), rot(constants::icosa_y(), Quat::one())];
        assert_eq!(
            FiniteIsomGroup::closure(&gens, 50).unwrap_err(),
            GroupError::ExceedsBound { bound: 50 }
        );
    }

    #[test]
    fn closure_is_generator_order_independent() {
        let a = [rot(constants::octa_x(), Quat::one()), rot(constants::octa_y(), Quat::one())];
        let b = [a[1].clone(), a[0].clone()];
        let ga = FiniteIsomGroup::closure(&a, 100).unwrap();
        let gb = FiniteIsomGroup::closure(&b, 100).unwrap();
        let ka: Vec<_> = ga.elements().iter().map(|e| e.key()).collect();
        let kb: Vec<_> = gb.elements().iter().map(|e| e.key()).collect();
        assert_eq!(ka, kb);
    }

    #[test]
    fn fundamental_group_examples() {
        let g = fundamental_group(&ManifoldDescriptor::Lens { m: 5, q: 2 }).unwrap();
        assert_eq!(g.order(), 5);
        assert!(g.contains(&rot(Quat::xi(10, 3), Quat::xi(10, 1))));
        let q = fundamental_group(&ManifoldDescriptor::Quaternionic { n: 1 }).unwrap();
        assert_eq!(q.order(), 8);
        assert!(q.contains(&IsometryS3::antipodal()));
    }

    #[test]
    fn lift_examples() {
        let g = fundamental_group(&ManifoldDescriptor::Lens { m: 5, q: 2 }).unwrap();
        let (star, gl, gr) = lift_and_project(&g).unwrap();
        assert_eq!(star.order(), 10);
        assert_eq!(gl.order(), 10);
        assert!(gl.contains(&rot(Quat::xi(10, 3), Quat::one())));
        assert_eq!(gr.order(), 10);
        let q = fundamental_group(&ManifoldDescriptor::Quaternionic { n: 1 }).unwrap();
        let (star, gl, gr) = lift_and_project(&q).unwrap();
        assert_eq!((star.order(), gl.order(), gr.order()), (16, 8, 2));
        assert!(star.contains(&(Quat::one(), Quat::one())));
        assert!(star.contains(&(Quat::minus_one(), Quat::minus_one())));
    }

    #[test]
    fn lift_rejects_reversing() {
        let g = FiniteIsomGroup::closure(&[IsometryS3::inversion()], 10).unwrap();
        assert_eq!(lift_and_project(&g).unwrap_err(), GroupError::ReversingElement);
    }

    #[test]
    fn prism_diagonal_index_two() {
        let c4 = quaternion_group(&[Quat::xi(4, 1)]).unwrap();
        let d12 = quaternion_group(&[Quat::xi(6, 1), Quat::j()]).unwrap();
        let f1 = cyclic_residue_table(&c4, 4, 2);
        let f2: Vec<u32> =
            d12.elements().iter().map(|e| left_quat(e).as_torus().unwrap().flip() as u32).collect();
        let diag = diagonal_subgroup(&c4, &d12, &f1, &f2, 2).unwrap();
        assert_eq!(diag.order(), 24);
        let whole = diagonal_subgroup(&c4, &d12, &vec![0; 4], &vec![0; 12], 1).unwrap();
        assert_eq!(whole.order(), 48);
        assert!(matches!(
            diagonal_subgroup(&c4, &d12, &vec![0; 4], &f2, 2),
            Err(GroupError::BadHomomorphism(_))
        ));
    }

    #[test]
    fn normalizer_examples() {
        let l52 = fundamental_group(&ManifoldDescriptor::Lens { m: 5, q: 2 }).unwrap();
        let l83 = fundamental_group(&ManifoldDescriptor::Lens { m: 8, q: 3 }).unwrap();
        let fj = rot(Quat::j(), Quat::one());
        assert!(!normalizes(&fj, &l52));
        assert!(normalizes(&fj, &l83));
        assert!(normalizes(&IsometryS3::lens_reflection(), &l52));
    }

    #[test]
    fn descriptor_validation() {
        use ManifoldDescriptor::*;
        assert!(Prism { m: 3, n: 3 }.validate().is_err());
        assert_eq!(
            Prism { m: 3, n: 3 }.validate().unwrap_err().to_string(),
            "(2m,n)=1 required"
        );
        assert!(Lens { m: 6, q: 3 }.validate().is_err());
        assert!(TetrahedralDiagonal { n: 5 }.validate().is_err());
        assert!(Icosahedral { n: 7 }.validate().is_ok());
    }
}
