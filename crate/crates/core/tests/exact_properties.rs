use proptest::prelude::*;
use scissors::exactnum::{rat, sqrt_canonical, tensor, ExactReal, GeneratorTable, Rational, Sign, SymbolWitness};
use scissors::random::symbol_table;

fn q() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn real() -> impl Strategy<Value = ExactReal> {
    (q(), q(), q(), 0u64..6).prop_map(|(a, b, c, r)| {
        let mut u = ExactReal::rational(a) + ExactReal::symbol("x").scale(&b) + ExactReal::symbol("y").scale(&c);
        if r >= 2 {
            u = u.add_scale(&rat(1, 3), &scissors::exactnum::sqrt_int(r));
        }
        u
    })
}

/// Witnesses without digits: every decision here is one the digit table
/// must agree with.
fn coarse_table() -> GeneratorTable {
    let mut t = GeneratorTable::new();
    t.declare("x", SymbolWitness::interval(rat(2, 5), rat(1, 2)).unwrap()).unwrap();
    t.declare("y", SymbolWitness::interval(rat(1, 10), rat(1, 5)).unwrap()).unwrap();
    t
}

proptest! {
    #[test]
    fn add_scale_laws(u in real(), v in real(), w in real(), a in q()) {
        prop_assert_eq!(u.add_scale(&a, &v), v.scale(&a) + u.clone());
        prop_assert_eq!((&u + &v) + w.clone(), u.clone() + (&v + &w));
        prop_assert_eq!(u.add_scale(&a, &ExactReal::zero()), u.clone());
        prop_assert_eq!(ExactReal::zero().add_scale(&Rational::from_integer(1.into()), &u), u.clone());
    }

    #[test]
    fn canonical_forms_are_fixed_points(u in real()) {
        let again = ExactReal::from_terms(u.terms().map(|(g, c)| (g.clone(), c.clone())));
        prop_assert_eq!(&again, &u);
        prop_assert!(u.terms().all(|(_, c)| *c != Rational::from_integer(0.into())));
        prop_assert_eq!(ExactReal::parse(&u.to_expr()).unwrap(), u);
    }

    #[test]
    fn tensor_is_bilinear(u in real(), u2 in real(), v in real(), a in q()) {
        let left = tensor(&u.add_scale(&a, &u2), &v);
        let right = tensor(&u, &v).add_scale(&a, &tensor(&u2, &v));
        prop_assert_eq!(&left, &right);
        let t = tensor(&v, &u.add_scale(&a, &u2));
        prop_assert_eq!(t, tensor(&v, &u).add_scale(&a, &tensor(&v, &u2)));
        for ((g, h), c) in tensor(&u, &v).terms() {
            prop_assert_eq!(c.clone(), u.coeff(g) * v.coeff(h));
        }
    }

    #[test]
    fn refined_witnesses_keep_signs(u in real()) {
        if let Ok(s) = coarse_table().sign(&u) {
            prop_assert_eq!(symbol_table().sign(&u).unwrap(), s);
        }
        let fine = symbol_table();
        if let Ok(s) = fine.sign_of(&u, 64) {
            if s != Sign::Zero {
                prop_assert_eq!(fine.sign_of(&u, 256).unwrap(), s);
            }
        }
    }

    #[test]
    fn square_roots_enclose(n in 1i64..500, d in 1i64..50) {
        let q = rat(n, d);
        let r = sqrt_canonical(&q).unwrap();
        let table = GeneratorTable::new();
        for bits in [64, 128, 256] {
            let e = table.enclosure(&r, bits).unwrap();
            prop_assert!(e.mul(&e).contains(&q));
        }
    }
}
