use proptest::prelude::*;
use rand::seq::SliceRandom;
use scissors::covercat::{
    build_ea, build_homotopy_orbit, compose_w, factor_move_sub, group_star, identity_w, k0, one_star, swap_category,
    toy_two_object, truncated_naturals, CoverCategory, FinCatFam, FiniteGroup, GroupAction, PolCategory, WMorphism,
    DEFAULT_CLOSURE_BOUND,
};
use scissors::geometry::GroupKind;
use scissors::random::{fin_w_morphism, pol_cover_step, polytope, rng, symbol_table, Rng64};

fn catalog() -> Vec<FinCatFam> {
    vec![
        one_star(),
        toy_two_object(),
        swap_category().0,
        group_star(&FiniteGroup::cyclic(3)),
        build_ea(&FiniteGroup::cyclic(2), 3),
        build_ea(&FiniteGroup::cyclic(3), 3),
        truncated_naturals(3, 3),
    ]
}

/// A cover of `x`: each proper entry is covered by a random stored family
/// and the basepoint by its identity.
fn step(r: &mut Rng64, c: &FinCatFam, x: &[usize]) -> WMorphism<usize, usize> {
    let mut parts = Vec::new();
    for (j, &t) in x.iter().enumerate() {
        let fams: Vec<_> = c.families_into(t).filter(|f| !f.maps.is_empty()).collect();
        match fams.choose(r) {
            Some(f) => parts.extend(f.maps.iter().map(|&m| (j, m))),
            None => parts.push((j, c.identity_of(t))),
        }
    }
    parts.shuffle(r);
    WMorphism::new(
        c,
        parts.iter().map(|&(_, f)| c.source_of(f)).collect(),
        x.to_vec(),
        parts.iter().map(|&(j, _)| j).collect(),
        parts.iter().map(|&(_, f)| f).collect(),
    )
    .expect("stored families cover")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative_and_unital(seed in any::<u64>(), which in 0usize..7) {
        let c = &catalog()[which];
        let mut r = rng(seed);
        let Some(m1) = fin_w_morphism(&mut r, c, c, 3) else { return Ok(()) };
        let m2 = step(&mut r, c, &m1.source);
        let m3 = step(&mut r, c, &m2.source);
        let left = compose_w(c, &compose_w(c, &m1, &m2).unwrap(), &m3).unwrap();
        let right = compose_w(c, &m1, &compose_w(c, &m2, &m3).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&compose_w(c, &identity_w(c, &m1.target), &m1).unwrap(), &m1);
        prop_assert_eq!(&compose_w(c, &m1, &identity_w(c, &m1.source)).unwrap(), &m1);
    }

    #[test]
    fn polytope_covers_compose(seed in any::<u64>()) {
        let table = symbol_table();
        let mut r = rng(seed);
        for kind in [GroupKind::T1, GroupKind::SE2] {
            let cat = PolCategory::new(kind, table.clone());
            let x = vec![Some(polytope(&mut r, kind.geometry(), &table))];
            let m1 = pol_cover_step(&mut r, &cat, &x).unwrap();
            let m2 = pol_cover_step(&mut r, &cat, &m1.source).unwrap();
            let m3 = pol_cover_step(&mut r, &cat, &m2.source).unwrap();
            let left = compose_w(&cat, &compose_w(&cat, &m1, &m2).unwrap(), &m3).unwrap();
            let right = compose_w(&cat, &m1, &compose_w(&cat, &m2, &m3).unwrap()).unwrap();
            prop_assert!(left.validate(&cat).is_ok());
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn orbits_of_trivial_actions_validate(order in 1usize..=3, which in 0usize..7, seed in any::<u64>()) {
        let c = &catalog()[which];
        let g = FiniteGroup::cyclic(order);
        let o = build_homotopy_orbit(c, &GroupAction::trivial(g, c)).unwrap();
        prop_assert!(o.category().validate(DEFAULT_CLOSURE_BOUND).is_valid());
        let mut r = rng(seed);
        if let Some(m) = fin_w_morphism(&mut r, &o, o.category(), 3) {
            let (mv, sub) = factor_move_sub(&o, &m).unwrap();
            prop_assert_eq!(compose_w(&o, &sub, &mv).unwrap(), m);
        }
    }
}

#[test]
fn swap_orbit_validates() {
    let (c, act) = swap_category();
    assert!(act.validate(&c).is_empty());
    let o = build_homotopy_orbit(&c, &act).unwrap();
    assert!(o.category().validate(DEFAULT_CLOSURE_BOUND).is_valid());
}

#[test]
fn k0_respects_every_family() {
    for c in catalog() {
        let p = k0(&c);
        for fam in c.families() {
            if fam.target == c.basepoint() {
                continue;
            }
            let sum = fam
                .maps
                .iter()
                .map(|&m| c.source_of(m))
                .filter(|&s| s != c.basepoint())
                .fold(p.zero_class(), |acc, s| acc.add(&p.class_of(s).unwrap()));
            assert_eq!(sum, p.class_of(fam.target).unwrap(), "{}", c.name());
        }
    }
}

#[test]
fn category_files_round_trip() {
    for c in catalog() {
        let text = c.to_json();
        let back = FinCatFam::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert!(scissors::covercat::find_isomorphism(&c, &back).is_some());
    }
}

#[test]
fn covering_test_matches_stored_families() {
    for c in catalog() {
        for fam in c.families() {
            assert!(c.is_covering(&fam.target, &fam.maps).unwrap());
        }
    }
}
