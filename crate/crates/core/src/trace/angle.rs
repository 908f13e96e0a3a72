use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::geometry::Rotation;

/// Exponents of canonical Gaussian primes in a rotation, keyed by the
/// rational prime below them.
pub type AngleClass = BTreeMap<BigInt, BigInt>;

/// Prime factors of `n > 0`, with multiplicity, by trial division.
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        while (&n % &p).is_zero() {
            out.push(p.clone());
            n /= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

/// The unique `u + vi` with `u > v > 0` and `u² + v² = p`, for a prime
/// `p ≡ 1 (mod 4)`.
pub fn canonical_gaussian_prime(p: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut v = BigInt::one();
    while &v * &v * 2 < *p {
        let rest = p - &v * &v;
        let u = rest.sqrt();
        if &u * &u == rest {
            return Some((u, v));
        }
        v += 1;
    }
    None
}

/// Divides `z` by `u + vi` as often as it goes.
fn strip(z: &mut (BigInt, BigInt), u: &BigInt, v: &BigInt, p: &BigInt) -> BigInt {
    let mut e = BigInt::zero();
    loop {
        let (a, b) = (&z.0, &z.1);
        let re = a * u + b * v;
        let im = b * u - a * v;
        if !(re.is_multiple_of(p) && im.is_multiple_of(p)) || (a.is_zero() && b.is_zero()) {
            return e;
        }
        *z = (re / p, im / p);
        e += 1;
    }
}

/// The class of a rational rotation in `ℝ/2πℤ ⊗ ℚ`, written in the basis of
/// Gaussian-prime angles.
///
/// With `(c, s) = (a/d, b/d)` in lowest terms, `a + bi` has norm `d²` and its
/// argument is the rotation angle. Every prime of `d` splits in `ℤ[i]`, and
/// only one of `π_p`, `π̄_p` divides `a + bi`; the signed exponent `e − f` is
/// recorded. Units contribute multiples of `π/2`, which are torsion and
/// vanish. The arguments of the canonical primes together with `π` are
/// ℚ-linearly independent, so the map is zero exactly on the rotations by
/// rational multiples of `π`.
pub fn angle_class(r: &Rotation) -> AngleClass {
    let d = r.cos().denom().lcm(r.sin().denom());
    let a = r.cos().numer() * (&d / r.cos().denom());
    let b = r.sin().numer() * (&d / r.sin().denom());
    let mut z = (a, b);
    let mut out = AngleClass::new();
    let mut primes = prime_factors(&d);
    primes.dedup();
    for p in primes {
        assert!(
            (&p % 4u32) == BigInt::one(),
            "denominator prime {p} of a unit-circle point must be 1 mod 4"
        );
        let (u, v) = canonical_gaussian_prime(&p).expect("p ≡ 1 mod 4 is a sum of two squares");
        let e = strip(&mut z, &u, &v, &p);
        let f = strip(&mut z, &u, &(-&v), &p);
        let k = e - f;
        if !k.is_zero() {
            out.insert(p, k);
        }
    }
    debug_assert!(z.0.abs() + z.1.abs() == BigInt::one(), "only a unit may remain");
    out
}

/// Sum of two angle classes as sparse maps.
pub fn add_classes(a: &AngleClass, b: &AngleClass) -> AngleClass {
    let mut out = a.clone();
    for (p, k) in b {
        let e = out.entry(p.clone()).or_insert_with(BigInt::zero);
        *e += k;
        if e.is_zero() {
            out.remove(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn class(pairs: &[(i64, i64)]) -> AngleClass {
        pairs.iter().map(|&(p, k)| (BigInt::from(p), BigInt::from(k))).collect()
    }

    #[test]
    fn small_rotations() {
        assert!(angle_class(&Rotation::identity()).is_empty());
        assert!(angle_class(&Rotation::quarter_turn()).is_empty());
        assert!(angle_class(&Rotation::new(rat(-1, 1), rat(0, 1)).unwrap()).is_empty());
        // 4 + 3i = i·(2 − i)²
        assert_eq!(angle_class(&Rotation::new(rat(4, 5), rat(3, 5)).unwrap()), class(&[(5, -2)]));
        // 3 + 4i = (2 + i)²
        assert_eq!(angle_class(&Rotation::new(rat(3, 5), rat(4, 5)).unwrap()), class(&[(5, 2)]));
        // 12 + 5i = i·(3 − 2i)²
        assert_eq!(angle_class(&Rotation::new(rat(12, 13), rat(5, 13)).unwrap()), class(&[(13, -2)]));
    }

    #[test]
    fn canonical_primes() {
        let p = |n: i64| canonical_gaussian_prime(&BigInt::from(n)).map(|(u, v)| (u.to_string(), v.to_string()));
        assert_eq!(p(5), Some(("2".into(), "1".into())));
        assert_eq!(p(13), Some(("3".into(), "2".into())));
        assert_eq!(p(29), Some(("5".into(), "2".into())));
        assert_eq!(p(7), None);
        assert_eq!(prime_factors(&BigInt::from(325)), vec![5.into(), 5.into(), 13.into()]);
    }

    #[test]
    fn class_is_additive() {
        let r = Rotation::new(rat(4, 5), rat(3, 5)).unwrap();
        let s = Rotation::new(rat(5, 13), rat(12, 13)).unwrap();
        assert_eq!(angle_class(&r.compose(&s)), add_classes(&angle_class(&r), &angle_class(&s)));
        assert!(angle_class(&r.compose(&r.inverse())).is_empty());
    }
}
