use proptest::prelude::*;
use rand::Rng;
use scissors::exactnum::{rat, ExactReal};
use scissors::geometry::GroupKind;
use scissors::measures::Measure;
use scissors::random::{rng, rotation, subdivide, symbol_table};
use scissors::trace::{
    add_classes, angle_class, bar_boundary, compose_automorphisms, construct_class, interval_exchange, rotated_square,
    trace_automorphism, ClassRequest, ScissorsAutomorphism,
};

fn class(s: &ScissorsAutomorphism) -> scissors::trace::H1Class {
    let mu = if s.kind() == GroupKind::T1 { Measure::length() } else { Measure::area() };
    trace_automorphism(s, &mu).unwrap().1
}

/// The same automorphism with every piece cut up, each part keeping its
/// piece's placements.
fn refine(s: &ScissorsAutomorphism, seed: u64) -> ScissorsAutomorphism {
    let mut r = rng(seed);
    let (mut pieces, mut base, mut moves) = (Vec::new(), Vec::new(), Vec::new());
    for ((p, b), m) in s.pieces().into_iter().zip(s.base_elements()).zip(s.move_elements()) {
        let n = r.gen_range(1..=3);
        for q in subdivide(&mut r, p, n, 1, s.table()) {
            pieces.push(q);
            base.push(b.clone());
            moves.push(m.clone());
        }
    }
    ScissorsAutomorphism::new(s.kind(), s.table().clone(), s.target().clone(), pieces, base, moves).unwrap()
}

fn lengths() -> impl Strategy<Value = (ExactReal, ExactReal, ExactReal)> {
    (1i64..8, 1i64..8, 1i64..5, 1i64..5).prop_map(|(a, b, c, d)| {
        let x = ExactReal::symbol("x") + ExactReal::rational(rat(a, 4));
        let y = ExactReal::symbol("y") + ExactReal::rational(rat(b, 4));
        // a shift small enough to keep both exchanged lengths positive
        (x, y, ExactReal::rational(rat(c, 4 * d + 16)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn angle_classes_add(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (rotation(&mut r), rotation(&mut r));
        prop_assert_eq!(angle_class(&a.compose(&b)), add_classes(&angle_class(&a), &angle_class(&b)));
        prop_assert!(add_classes(&angle_class(&a), &angle_class(&a.inverse())).is_empty());
    }

    #[test]
    fn automorphism_chains_are_cycles((x, y, _) in lengths()) {
        let s = interval_exchange(&x, &y, &symbol_table()).unwrap();
        let (chain, _) = trace_automorphism(&s, &Measure::length()).unwrap();
        prop_assert!(bar_boundary(&GroupKind::T1, &chain).unwrap().is_zero());
    }

    #[test]
    fn traces_add_under_composition((x, y, t) in lengths()) {
        let table = symbol_table();
        let s = interval_exchange(&x, &y, &table).unwrap();
        let u = interval_exchange(&(&x + &t), &(&y - &t), &table).unwrap();
        let both = compose_automorphisms(&s, &u).unwrap();
        prop_assert_eq!(class(&both), class(&s).add(&class(&u)).unwrap());
        let back = compose_automorphisms(&s, &s.inverse().unwrap()).unwrap();
        prop_assert!(class(&back).is_zero());
    }

    #[test]
    fn refinement_keeps_the_class((x, y, _) in lengths(), seed in any::<u64>()) {
        let s = interval_exchange(&x, &y, &symbol_table()).unwrap();
        prop_assert_eq!(class(&refine(&s, seed)), class(&s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn planar_refinement_keeps_the_class(seed in any::<u64>()) {
        let mut r = rng(seed);
        let area = rat(r.gen_range(1..5), r.gen_range(1..4));
        let s = construct_class(&ClassRequest::SE2 { rotation: rotation(&mut r), area }).unwrap();
        prop_assert_eq!(class(&refine(&s, seed)), class(&s));
    }
}

#[test]
fn rotated_square_composes_with_itself() {
    let s = rotated_square(&scissors::geometry::Rotation::new(rat(4, 5), rat(3, 5)).unwrap()).unwrap();
    let twice = compose_automorphisms(&s, &s).unwrap();
    assert_eq!(class(&twice), class(&s).add(&class(&s)).unwrap());
    assert!(!class(&twice).is_zero());
}
