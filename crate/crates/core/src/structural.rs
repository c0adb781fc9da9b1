//! Finite torsion models of the four-torus groups `O(2)*×O(2)*`, `O(2)*×̃O(2)*`,
//! `O(2)×O(2)`, `O(2)×̃O(2)` and of `Dih(S¹×̃S¹)`, `Dih(S¹×S¹)`, used to check the
//! explicit isomorphisms between them and to tell the coverings apart.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::Rational;

fn frac(x: Rational) -> Rational {
    x - x.floor()
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// `O(2)* = S¹ ∪ S¹j` (with `j² = −1`) or `O(2) = S¹ ⋊ ⟨c⟩` (with `c² = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Factor {
    Star,
    Plain,
}

/// `e^{2πi·turn}` times `j` (or `c`) when `flip`.
pub type CircleElt = (Rational, bool);

impl Factor {
    pub fn mul(self, (t1, f1): CircleElt, (t2, f2): CircleElt) -> CircleElt {
        let t = if f1 { t1 - t2 } else { t1 + t2 };
        let extra = match self {
            Factor::Star if f1 && f2 => half(),
            _ => Rational::from_integer(0),
        };
        (frac(t + extra), f1 ^ f2)
    }

    pub fn inverse(self, (t, f): CircleElt) -> CircleElt {
        match (self, f) {
            (_, false) => (frac(-t), false),
            (Factor::Star, true) => (frac(t + half()), true),
            (Factor::Plain, true) => (t, true),
        }
    }
}

/// A product of two circle-type factors, optionally divided by `⟨(−1,−1)⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusGroup {
    pub left: Factor,
    pub right: Factor,
    pub tilde: bool,
}

pub type PairElt = (CircleElt, CircleElt);

impl TorusGroup {
    pub const STAR_STAR: TorusGroup = TorusGroup { left: Factor::Star, right: Factor::Star, tilde: false };
    pub const STAR_TILDE: TorusGroup = TorusGroup { left: Factor::Star, right: Factor::Star, tilde: true };
    pub const PLAIN_PLAIN: TorusGroup = TorusGroup { left: Factor::Plain, right: Factor::Plain, tilde: false };
    pub const PLAIN_TILDE: TorusGroup = TorusGroup { left: Factor::Plain, right: Factor::Plain, tilde: true };

    pub fn name(&self) -> &'static str {
        match (self.left, self.tilde) {
            (Factor::Star, false) => "O(2)*×O(2)*",
            (Factor::Star, true) => "O(2)*×̃O(2)*",
            (Factor::Plain, false) => "O(2)×O(2)",
            (Factor::Plain, true) => "O(2)×̃O(2)",
        }
    }

    /// Representative with left turn in `[0, 1/2)` in the tilde case.
    pub fn canon(&self, (a, b): PairElt) -> PairElt {
        if self.tilde && a.0 >= half() {
            ((frac(a.0 + half()), a.1), (frac(b.0 + half()), b.1))
        } else {
            (a, b)
        }
    }

    pub fn mul(&self, x: PairElt, y: PairElt) -> PairElt {
        self.canon((self.left.mul(x.0, y.0), self.right.mul(x.1, y.1)))
    }

    pub fn inverse(&self, x: PairElt) -> PairElt {
        self.canon((self.left.inverse(x.0), self.right.inverse(x.1)))
    }

    pub fn identity(&self) -> PairElt {
        let z = (Rational::from_integer(0), false);
        (z, z)
    }

    /// All elements whose turns lie in `(1/n)ℤ`.
    pub fn grid(&self, n: i64) -> Vec<PairElt> {
        let mut out = HashSet::new();
        for a in 0..n {
            for b in 0..n {
                for fa in [false, true] {
                    for fb in [false, true] {
                        out.insert(self.canon((
                            (Rational::new(a, n), fa),
                            (Rational::new(b, n), fb),
                        )));
                    }
                }
            }
        }
        let mut v: Vec<PairElt> = out.into_iter().collect();
        v.sort();
        v
    }

    /// Conjugacy classes of involutions of the `n`-grid model, with conjugators taken
    /// from the finer `2n`-grid so that reflections in a common coset merge as in the Lie group.
    pub fn involution_classes(&self, n: i64) -> usize {
        let id = self.identity();
        let invs: Vec<PairElt> =
            self.grid(n).into_iter().filter(|&x| x != id && self.mul(x, x) == id).collect();
        let conj = self.grid(2 * n);
        let mut seen: HashSet<PairElt> = HashSet::new();
        let mut classes = 0;
        for &x in &invs {
            if seen.contains(&x) {
                continue;
            }
            classes += 1;
            for &h in &conj {
                seen.insert(self.mul(self.mul(h, x), self.inverse(h)));
            }
        }
        classes
    }
}

/// The isomorphism `O(2)*×̃O(2)* → O(2)×̃O(2)`: identity on `S¹×S¹`,
/// `(j,1) ↦ (c, i)`, `(1,j) ↦ (i, c)`.
pub fn star_to_plain(x: PairElt) -> PairElt {
    let dst = TorusGroup::PLAIN_TILDE;
    let ((a, fa), (b, fb)) = x;
    let quarter = Rational::new(1, 4);
    let zero = Rational::from_integer(0);
    let mut y = dst.canon(((a, false), (b, false)));
    if fa {
        y = dst.mul(y, ((zero, true), (quarter, false)));
    }
    if fb {
        y = dst.mul(y, ((quarter, false), (zero, true)));
    }
    y
}

/// Element `((z, w), x)` of `Dih(S¹×S¹)` or `Dih(S¹×̃S¹)`; `x` acts by conjugating both factors.
pub type DihElt = (Rational, Rational, bool);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihGroup {
    pub tilde: bool,
}

impl DihGroup {
    pub fn canon(&self, (z, w, x): DihElt) -> DihElt {
        if self.tilde && z >= half() {
            (frac(z + half()), frac(w + half()), x)
        } else {
            (frac(z), frac(w), x)
        }
    }

    pub fn mul(&self, (z1, w1, x1): DihElt, (z2, w2, x2): DihElt) -> DihElt {
        let (z2, w2) = if x1 { (-z2, -w2) } else { (z2, w2) };
        self.canon((z1 + z2, w1 + w2, x1 ^ x2))
    }

    pub fn grid(&self, n: i64) -> Vec<DihElt> {
        let mut out = HashSet::new();
        for a in 0..n {
            for b in 0..n {
                for x in [false, true] {
                    out.insert(self.canon((Rational::new(a, n), Rational::new(b, n), x)));
                }
            }
        }
        let mut v: Vec<DihElt> = out.into_iter().collect();
        v.sort();
        v
    }
}

/// `((z₀, w₀), x) ↦ ((z₀w₀, w₀²), x)` from `Dih(S¹×̃S¹)` to `Dih(S¹×S¹)`.
pub fn dih_map((z, w, x): DihElt) -> DihElt {
    DihGroup { tilde: false }.canon((z + w, w + w, x))
}

/// Outcome of the structural checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub dih_homomorphism: bool,
    pub dih_injective: bool,
    pub star_plain_homomorphism: bool,
    pub star_plain_injective: bool,
    pub star_plain_well_defined: bool,
    /// `(group name, involution classes)` for the four groups.
    pub involution_classes: Vec<(String, usize)>,
}

/// Check the maps on every torsion element of order at most `max_order`.
///
/// Each such element lies in the grid subgroup of turns `(1/2k)ℤ` for some
/// `k ∈ (max_order/2, max_order]`; on each grid the maps are checked against all
/// products `x·g` with `g` a generator, which makes them homomorphisms on the grid.
pub fn structural_checks(max_order: i64, class_grid: i64) -> StructuralReport {
    let ks: Vec<i64> = ((max_order / 2 + 1)..=max_order).collect();
    let (mut dih_hom, mut dih_inj) = (true, true);
    let (mut sp_hom, mut sp_inj, mut sp_wd) = (true, true, true);
    let src = DihGroup { tilde: true };
    let dst = DihGroup { tilde: false };
    let star = TorusGroup::STAR_TILDE;
    let plain = TorusGroup::PLAIN_TILDE;
    let zero = Rational::from_integer(0);
    for &k in &ks {
        let n = 2 * k;
        let step = Rational::new(1, n);
        let dih_gens = [(step, zero, false), (zero, step, false), (zero, zero, true)];
        let mut images = HashSet::new();
        for x in src.grid(n) {
            let fx = dih_map(x);
            if !images.insert(fx) {
                dih_inj = false;
            }
            for &g in &dih_gens {
                if dih_map(src.mul(x, g)) != dst.mul(fx, dih_map(g)) {
                    dih_hom = false;
                }
            }
        }
        let star_gens = [
            ((step, false), (zero, false)),
            ((zero, false), (step, false)),
            ((zero, true), (zero, false)),
            ((zero, false), (zero, true)),
        ];
        let mut images = HashSet::new();
        for x in star.grid(n) {
            let fx = star_to_plain(x);
            if !images.insert(fx) {
                sp_inj = false;
            }
            // the other representative of x maps to the same element
            let other = ((frac(x.0 .0 + half()), x.0 .1), (frac(x.1 .0 + half()), x.1 .1));
            if star_to_plain(other) != fx {
                sp_wd = false;
            }
            for &g in &star_gens {
                let g = star.canon(g);
                if star_to_plain(star.mul(x, g)) != plain.mul(fx, star_to_plain(g)) {
                    sp_hom = false;
                }
            }
        }
    }
    let involution_classes = [
        TorusGroup::STAR_STAR,
        TorusGroup::STAR_TILDE,
        TorusGroup::PLAIN_PLAIN,
        TorusGroup::PLAIN_TILDE,
    ]
    .iter()
    .map(|g| (g.name().to_string(), g.involution_classes(class_grid)))
    .collect();
    StructuralReport {
        dih_homomorphism: dih_hom,
        dih_injective: dih_inj,
        star_plain_homomorphism: sp_hom,
        star_plain_injective: sp_inj,
        star_plain_well_defined: sp_wd,
        involution_classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        assert_eq!(TorusGroup::STAR_STAR.involution_classes(8), 3);
        assert_eq!(TorusGroup::STAR_TILDE.involution_classes(8), 5);
        assert_eq!(TorusGroup::PLAIN_PLAIN.involution_classes(8), 8);
        assert_eq!(TorusGroup::PLAIN_TILDE.involution_classes(8), 5);
    }

    #[test]
    fn small_checks() {
        let r = structural_checks(8, 4);
        assert!(r.dih_homomorphism && r.dih_injective);
        assert!(r.star_plain_homomorphism && r.star_plain_injective && r.star_plain_well_defined);
    }
}
