use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactError, ExactReal, Generator, Rational};

/// Splits `m` as `s²·n` with `n` squarefree. Returns `(s, n)`.
pub fn square_free_decomposition(m: &BigUint) -> (BigUint, BigUint) {
    if m.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(small) = m.to_u128() {
        let (s, n) = square_free_u128(small);
        return (s.into(), n.into());
    }
    let mut rest = m.clone();
    let mut s = BigUint::one();
    let mut n = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p * &p <= rest {
        let p2 = &p * &p;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            s *= &p;
        }
        if (&rest % &p).is_zero() {
            rest /= &p;
            n *= &p;
        }
        p += 1u32;
    }
    finish(rest, s, n)
}

fn square_free_u128(m: u128) -> (u128, u128) {
    let mut rest = m;
    let mut s: u128 = 1;
    let mut n: u128 = 1;
    let mut p: u128 = 2;
    while p.saturating_mul(p).saturating_mul(p) <= rest {
        let p2 = p * p;
        while rest % p2 == 0 {
            rest /= p2;
            s *= p;
        }
        if rest % p == 0 {
            rest /= p;
            n *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // `rest` now has at most two prime factors, each larger than every p tried.
    let r = rest.sqrt();
    if r * r == rest {
        (s * r, n)
    } else {
        (s, n * rest)
    }
}

fn finish(rest: BigUint, s: BigUint, n: BigUint) -> (BigUint, BigUint) {
    let r = rest.sqrt();
    if &r * &r == rest {
        (s * r, n)
    } else {
        (s, n * rest)
    }
}

/// `√q` as `(a/b)·√n` with `n` squarefree, or a plain rational when `q` is a
/// rational square.
pub fn sqrt_canonical(q: &Rational) -> Result<ExactReal, ExactError> {
    if !q.is_positive() {
        return Err(ExactError::NonPositiveSqrt(q.to_string()));
    }
    // √(a/b) = √(ab)/b
    let a = q.numer().to_biguint().expect("positive");
    let b = q.denom().to_biguint().expect("positive");
    let (s, n) = square_free_decomposition(&(&a * &b));
    let coeff = Rational::new(
        BigInt::from_biguint(BigSign::Plus, s),
        BigInt::from_biguint(BigSign::Plus, b),
    );
    if n.is_one() {
        Ok(ExactReal::rational(coeff))
    } else {
        Ok(ExactReal::term(Generator::Radical(n), coeff))
    }
}

/// `√n` for a positive integer, canonicalized.
pub fn sqrt_int(n: u64) -> ExactReal {
    sqrt_canonical(&Rational::from_integer(n.into())).expect("n > 0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn canonical_roots() {
        assert_eq!(sqrt_canonical(&rat(8, 1)).unwrap(), ExactReal::parse("2*sqrt(2)").unwrap());
        assert_eq!(sqrt_canonical(&rat(9, 4)).unwrap(), ExactReal::rational(rat(3, 2)));
        assert_eq!(
            sqrt_canonical(&rat(50, 1)).unwrap(),
            ExactReal::term(Generator::Radical(2u32.into()), rat(5, 1))
        );
        // √(1/2) = (1/2)√2
        assert_eq!(
            sqrt_canonical(&rat(1, 2)).unwrap(),
            ExactReal::term(Generator::Radical(2u32.into()), rat(1, 2))
        );
        assert!(sqrt_canonical(&rat(0, 1)).is_err());
        assert!(sqrt_canonical(&rat(-4, 1)).is_err());
    }

    #[test]
    fn squarefree_split_against_trial_division() {
        for m in 1u64..2000 {
            let (s, n) = square_free_u128(m as u128);
            assert_eq!(s * s * n, m as u128);
            // n squarefree: no p² divides it
            for p in 2..=((n as f64).sqrt() as u128 + 1) {
                assert!(n % (p * p) != 0, "{m}: n = {n} divisible by {p}²");
            }
        }
        // two large primes beyond the cube-root bound
        let big = 1_000_003u128 * 1_000_033u128;
        assert_eq!(square_free_u128(big), (1, big));
        assert_eq!(square_free_u128(1_000_003u128 * 1_000_003u128 * 6), (1_000_003, 6));
        let huge: BigUint = (BigUint::one() << 201u32) * BigUint::from(45u32);
        let (s, n) = square_free_decomposition(&huge);
        assert_eq!(s, (BigUint::one() << 100u32) * BigUint::from(3u32));
        assert_eq!(n, BigUint::from(10u32));
    }
}
