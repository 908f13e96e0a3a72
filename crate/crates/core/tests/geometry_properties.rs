use proptest::prelude::*;
use scissors::exactnum::rat;
use scissors::geometry::{clip_convex, common_refinement, Cell, Direction, Geometry, GroupKind, Isometry, Point, Polytope, Rotation};
use scissors::measures::Measure;
use scissors::random::{cover, isometry, polytope, rng, symbol_table};

const KINDS: [GroupKind; 3] = [GroupKind::T1, GroupKind::T2, GroupKind::SE2];

fn same_loop(a: &[Point], b: &[Point]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|k| (0..a.len()).all(|i| a[i] == b[(i + k) % b.len()]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn measure_is_invariant(seed in any::<u64>()) {
        let table = symbol_table();
        let mut r = rng(seed);
        for kind in KINDS {
            let p = polytope(&mut r, kind.geometry(), &table);
            let g = isometry(&mut r, kind);
            prop_assert_eq!(p.apply(&g).unwrap().measure(), p.measure());
        }
    }

    #[test]
    fn covers_are_sound(seed in any::<u64>()) {
        let table = symbol_table();
        let mut r = rng(seed);
        for kind in KINDS {
            let c = cover(&mut r, kind, &table).unwrap();
            let total: scissors::exactnum::ExactReal = c.moved().iter().map(Polytope::measure).sum();
            prop_assert_eq!(total, c.target().measure());
        }
    }

    #[test]
    fn refinements_conserve_measure(seed in any::<u64>()) {
        let table = symbol_table();
        let mut r = rng(seed);
        for kind in KINDS {
            let a = cover(&mut r, kind, &table).unwrap();
            let b = scissors::geometry::verify_cover(&[(kind.identity(), a.target().clone())], a.target(), &table).unwrap();
            let cells = common_refinement(&a, &b, &table).unwrap();
            let total: scissors::exactnum::ExactReal = cells.iter().map(|c| c.cell.measure()).sum();
            prop_assert_eq!(total, a.target().measure());
        }
    }

    #[test]
    fn clipping_is_symmetric_and_idempotent(seed in any::<u64>()) {
        let table = symbol_table();
        let mut r = rng(seed);
        let cell = |p: Polytope| match &p.cells()[0] { Cell::Convex(c) => c.clone(), _ => unreachable!() };
        let a = cell(polytope(&mut r, Geometry::E2, &table));
        let b = cell(polytope(&mut r, Geometry::E2, &table));
        let ab = clip_convex(&a, &b);
        let ba = clip_convex(&b, &a);
        prop_assert_eq!(ab.is_some(), ba.is_some());
        if let (Some(ab), Some(ba)) = (ab, ba) {
            prop_assert!(same_loop(ab.vertices(), ba.vertices()));
            prop_assert!(ab.area() <= a.area() && ab.area() <= b.area());
            let again = clip_convex(&ab, &b).unwrap();
            prop_assert!(same_loop(again.vertices(), ab.vertices()));
        }
        let aa = clip_convex(&a, &a).unwrap();
        prop_assert!(same_loop(aa.vertices(), a.vertices()));
    }

    #[test]
    fn shipped_measures_are_invariant_under_their_groups(seed in any::<u64>()) {
        let table = symbol_table();
        let mut r = rng(seed);
        let cases = [
            (GroupKind::T1, Measure::length()),
            (GroupKind::T2, Measure::area()),
            (GroupKind::SE2, Measure::area()),
            (GroupKind::T2, Measure::hadwiger(Direction::new(1, 0).unwrap())),
            (GroupKind::T2, Measure::hadwiger(Direction::new(2, -1).unwrap())),
        ];
        for (kind, mu) in cases {
            let p = polytope(&mut r, kind.geometry(), &table);
            let g = isometry(&mut r, kind);
            prop_assert_eq!(mu.eval(&p.apply(&g).unwrap()).unwrap(), mu.eval(&p).unwrap());
        }
    }
}

#[test]
fn hadwiger_is_not_rotation_invariant() {
    let mu = Measure::hadwiger(Direction::new(1, 0).unwrap());
    let triangle = Polytope::polygon(vec![
        Point::new(rat(0, 1), rat(0, 1)),
        Point::new(rat(2, 1), rat(0, 1)),
        Point::new(rat(0, 1), rat(1, 1)),
    ])
    .unwrap();
    let turn = Isometry::rigid(Rotation::new(rat(3, 5), rat(4, 5)).unwrap(), Point::origin());
    assert_ne!(mu.eval(&triangle).unwrap(), mu.eval(&triangle.apply(&turn).unwrap()).unwrap());
    assert!(!mu.invariant_under().contains(&GroupKind::SE2));
    assert!(mu.invariant_under().contains(&GroupKind::T2));
}
