use elliptica::classifier::{canonicalize_lens, classify, lens_case};
use elliptica::hopf::{hopf_project, induced_mobius};
use elliptica::isometry::{lens_generator, IsometryS3};
use elliptica::quaternion::constants;
use elliptica::{Quat, Rational};
use num_integer::Integer;
use proptest::prelude::*;

/// Turns with denominators dividing 120 keep every product inside `ℚ(ζ₁₂₀)`.
fn torus() -> impl Strategy<Value = Quat> {
    let dens = [1i64, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120];
    (0i64..120, proptest::sample::select(dens.to_vec()), any::<bool>())
        .prop_map(|(k, n, flip)| Quat::torus(Rational::new(k % n, n), flip))
}

fn quat() -> impl Strategy<Value = Quat> {
    prop_oneof![
        torus(),
        Just(constants::octa_x()),
        Just(constants::octa_y()),
        Just(constants::icosa_y()),
    ]
}

fn isometry() -> impl Strategy<Value = IsometryS3> {
    (quat(), quat(), any::<bool>()).prop_map(|(a, b, r)| IsometryS3::new(a, b, r))
}

fn lens() -> impl Strategy<Value = (u64, u64)> {
    (3u64..120, 1u64..120).prop_filter_map("unit", |(m, q)| {
        let q = q % m;
        (q.gcd(&m) == 1).then_some((m, q))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quaternion_product_is_associative(a in quat(), b in quat(), c in quat()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_one());
    }

    #[test]
    fn isometry_composition_is_a_group_law(f in isometry(), g in isometry(), h in isometry()) {
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        prop_assert!(f.compose(&f.invert()).is_identity());
        let z = constants::octa_y();
        prop_assert_eq!(f.compose(&g).apply(&z), f.apply(&g.apply(&z)));
    }

    #[test]
    fn canonical_lens_is_a_class_invariant((m, q) in lens()) {
        let (_, c) = canonicalize_lens(m, q).unwrap();
        prop_assert_eq!(canonicalize_lens(m, m - q).unwrap().1, c);
        let inv = (1..m).find(|x| (x * q) % m == 1).unwrap();
        prop_assert_eq!(canonicalize_lens(m, inv).unwrap().1, c);
        prop_assert!(2 * c <= m);
        prop_assert_eq!(canonicalize_lens(m, c).unwrap().1, c);
    }

    #[test]
    fn lens_generator_has_order_m((m, q) in lens()) {
        prop_assert!(lens_generator(m, q).pow(m).is_identity());
        prop_assert!(!lens_generator(m, q).pow(1).is_identity());
    }

    #[test]
    fn classification_does_not_depend_on_the_representative((m, q) in lens()) {
        let a = classify(&elliptica::isometry::ManifoldDescriptor::Lens { m, q }).unwrap();
        let b = classify(&elliptica::isometry::ManifoldDescriptor::Lens { m, q: m - q }).unwrap();
        prop_assert_eq!(a.isom.to_string(), b.isom.to_string());
        prop_assert_eq!(a.descriptor, b.descriptor);
        let (m2, c) = canonicalize_lens(m, q).unwrap();
        prop_assert_eq!(a.case_tag.as_str(), lens_case(m2, c).tag());
    }

    #[test]
    fn hopf_projection_is_equivariant(a in torus(), b in quat(), z in quat()) {
        let f = IsometryS3::rotation(a, b);
        let h = induced_mobius(&f).unwrap();
        prop_assert_eq!(hopf_project(&f.apply(&z)), h.apply(&hopf_project(&z)));
    }
}

#[test]
fn large_levels_are_reported_not_wrapped() {
    use elliptica::cyclotomic::Cyclotomic;
    use elliptica::error::AlgebraError;
    // ζ₁₇ · ζ₂₀ · ζ₂₃ lives at level 7820, whose degree exceeds the ceiling
    let a = Cyclotomic::<Rational>::root_of_unity(17 * 20, 1);
    let b = Cyclotomic::<Rational>::root_of_unity(23, 1);
    assert!(matches!(a.checked_mul(&b), Err(AlgebraError::LevelOverflow { .. })));
    // inverting at level 1020 needs intermediate values beyond i64
    let z = constants::icosa_y();
    let f = IsometryS3::rotation(Quat::torus(Rational::new(1, 3), true), Quat::torus(Rational::new(8, 17), false));
    let h = induced_mobius(&f).unwrap();
    assert_eq!(hopf_project(&f.apply(&z)), h.apply(&hopf_project(&z)));
}
