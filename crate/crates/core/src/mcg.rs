//! Automorphisms of `π₁(M)` induced by isometries, and injectivity of the map
//! from the isometry component group to `Out(π₁(M))`.

use serde::{Deserialize, Serialize};

use crate::classifier::{classify, realize, Realization};
use crate::error::GroupError;
use crate::groups::{inner_witness, AutomorphismRecord};
use crate::isometry::{fundamental_group, lens_generator, FiniteIsomGroup, IsometryS3, ManifoldDescriptor};

/// The exponent `a` with `f t f⁻¹ = t^a`, `t` the standard generator of `π₁(L(m,q))`.
pub fn lens_exponent(f: &IsometryS3, m: u64, q: u64) -> Result<u64, GroupError> {
    let t = lens_generator(m, q);
    let target = f.conjugate(&t);
    let mut power = IsometryS3::identity();
    for a in 0..m {
        if power == target {
            return Ok(a);
        }
        power = power.compose(&t);
    }
    Err(GroupError::NotNormalizing)
}

/// Multiplicative order of a unit mod `m`.
pub fn unit_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
        if k > m {
            return 0;
        }
    }
    k
}

/// The automorphisms of `G` induced by the realizing isometries.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhiImage {
    pub descriptor: ManifoldDescriptor,
    /// One record per witness.
    pub records: Vec<AutomorphismRecord>,
    /// One record per element of the component group, in coset order.
    pub coset_records: Vec<AutomorphismRecord>,
    /// Orientation character of each coset.
    pub coset_reverses: Vec<bool>,
    /// No nontrivial component acts by an inner automorphism.
    pub injective_into_out: bool,
    /// No nontrivial component is both inner and orientation-preserving.
    pub injective_with_orientation: bool,
    pub lens_exponents: Option<Vec<u64>>,
}

impl PhiImage {
    /// Injectivity in the form the argument needs: into `Out(G)` when `|G| > 2`,
    /// and into `Out(G) × {±1}` for `S³` and `ℝP³`, whose automorphism groups are trivial.
    pub fn injective(&self) -> bool {
        if self.descriptor.pi1_order() > 2 {
            self.injective_into_out
        } else {
            self.injective_with_orientation
        }
    }
}

fn conjugation_record(
    n: &FiniteIsomGroup,
    g_in_n: &[usize],
    g_gens_in_n: &[usize],
    rep: usize,
) -> AutomorphismRecord {
    let t = n.table();
    let images: Vec<usize> = g_in_n.iter().map(|&x| t.conj(rep, x)).collect();
    // inner iff some h ∈ G matches on the generators
    let witness = g_in_n
        .iter()
        .position(|&h| g_gens_in_n.iter().all(|&x| t.conj(h, x) == t.conj(rep, x)));
    let pos = |x: usize| g_in_n.binary_search(&x).expect("G is normal in N");
    AutomorphismRecord {
        images: images.into_iter().map(pos).collect(),
        inner: witness.is_some(),
        witness,
    }
}

pub fn phi_image(d: &ManifoldDescriptor) -> Result<PhiImage, GroupError> {
    let info = classify(d).map_err(|e| GroupError::WrongType(e.to_string()))?;
    let g = fundamental_group(&info.descriptor)?;
    let r: Realization = realize(g, &info.witnesses)?;
    let n = &r.group;
    let mut g_in_n = n.subgroup_indices(&r.fundamental_group).ok_or(GroupError::NotAMember)?;
    g_in_n.sort_unstable();
    let gens: Vec<usize> = r
        .fundamental_group
        .generators()
        .iter()
        .map(|x| n.index_of(x).ok_or(GroupError::NotAMember))
        .collect::<Result<_, _>>()?;

    let records = info
        .witnesses
        .iter()
        .map(|w| Ok(conjugation_record(n, &g_in_n, &gens, n.index_of(w).ok_or(GroupError::NotAMember)?)))
        .collect::<Result<Vec<_>, GroupError>>()?;

    let k = r.quotient.order();
    let mut reps = vec![usize::MAX; k];
    for (x, &c) in r.coset.iter().enumerate() {
        if reps[c] == usize::MAX {
            reps[c] = x;
        }
    }
    let coset_records: Vec<AutomorphismRecord> =
        reps.iter().map(|&rep| conjugation_record(n, &g_in_n, &gens, rep)).collect();
    let coset_reverses: Vec<bool> = reps.iter().map(|&rep| n.element(rep).reverses()).collect();
    let trivial = r.quotient.identity();
    let injective_into_out = (0..k).all(|c| c == trivial || !coset_records[c].inner);
    let injective_with_orientation =
        (0..k).all(|c| c == trivial || !coset_records[c].inner || coset_reverses[c]);

    let lens_exponents = match info.descriptor {
        ManifoldDescriptor::Lens { m, q } => Some(
            info.witnesses.iter().map(|w| lens_exponent(w, m, q)).collect::<Result<Vec<_>, _>>()?,
        ),
        _ => None,
    };
    Ok(PhiImage {
        descriptor: info.descriptor,
        records,
        coset_records,
        coset_reverses,
        injective_into_out,
        injective_with_orientation,
        lens_exponents,
    })
}

/// Whether some cyclic subgroup of order 4 of `G ≅ Q₈` is invariant under every
/// automorphism induced by the given isometries.
pub fn invariant_c4_check(g: &FiniteIsomGroup, witnesses: &[IsometryS3]) -> Result<bool, GroupError> {
    if g.order() != 8 || g.elements().iter().filter(|e| e.pow(2).is_identity()).count() != 2 {
        return Err(GroupError::WrongType("expected a quaternion group of order 8".into()));
    }
    let t = g.table();
    let order4: Vec<usize> = (0..g.order()).filter(|&x| t.element_order(x) == 4).collect();
    let mut subgroups: Vec<Vec<usize>> = order4.iter().map(|&x| t.subgroup(&[x])).collect();
    subgroups.sort();
    subgroups.dedup();
    for w in witnesses {
        if !g.is_normalized_by(w) {
            return Err(GroupError::NotNormalizing);
        }
    }
    Ok(subgroups.iter().any(|s| {
        witnesses.iter().all(|w| {
            let mut image: Vec<usize> =
                s.iter().map(|&x| g.index_of(&w.conjugate(g.element(x))).unwrap()).collect();
            image.sort_unstable();
            image == *s
        })
    }))
}

/// `g ↦ w g w⁻¹` is an inner automorphism of `G`.
pub fn conjugation_is_inner(w: &IsometryS3, g: &FiniteIsomGroup) -> Result<bool, GroupError> {
    let rec = crate::groups::automorphism_from_conjugation(w, g)?;
    let gens: Vec<usize> = g.generators().iter().map(|x| g.index_of(x).unwrap()).collect();
    Ok(inner_witness(&g.table(), &rec.images, &gens).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::constants;
    use crate::Quat;

    fn f(a: Quat, b: Quat) -> IsometryS3 {
        IsometryS3::rotation(a, b)
    }

    #[test]
    fn exponents() {
        assert_eq!(lens_exponent(&f(Quat::j(), Quat::j()), 5, 2).unwrap(), 4);
        // f(j,1) acts by t ↦ t^{-q}; composing with f(j,j) gives t ↦ t^q
        assert_eq!(lens_exponent(&f(Quat::j(), Quat::one()), 12, 5).unwrap(), 7);
        assert_eq!(lens_exponent(&f(Quat::minus_one(), Quat::j()), 12, 5).unwrap(), 5);
        let a = lens_exponent(&IsometryS3::lens_reflection(), 5, 2).unwrap();
        assert_eq!(unit_order(a, 5), 4);
        assert!(lens_exponent(&f(Quat::j(), Quat::one()), 5, 2).is_err());
    }

    #[test]
    fn phi_examples() {
        use ManifoldDescriptor::*;
        for d in [Quaternionic { n: 3 }, Prism { m: 3, n: 1 }, Icosahedral { n: 1 }, Lens { m: 1, q: 0 }, Lens { m: 2, q: 1 }] {
            assert!(phi_image(&d).unwrap().injective(), "{d}");
        }
        assert!(!phi_image(&Lens { m: 1, q: 0 }).unwrap().injective_into_out);
    }

    #[test]
    fn prism_outer() {
        let d12 = crate::isometry::quaternion_group(&[Quat::xi(6, 1), Quat::j()]).unwrap();
        assert!(!conjugation_is_inner(&f(Quat::xi(12, 1), Quat::one()), &d12).unwrap());
    }

    #[test]
    fn c4_examples() {
        let g = fundamental_group(&ManifoldDescriptor::Quaternionic { n: 1 }).unwrap();
        let ws = [f(constants::octa_x(), Quat::one()), f(constants::octa_y(), Quat::one())];
        assert!(!invariant_c4_check(&g, &ws).unwrap());
        assert!(invariant_c4_check(&g, &[IsometryS3::identity()]).unwrap());
        assert!(invariant_c4_check(&g, &[f(Quat::i(), Quat::one())]).unwrap());
    }
}
