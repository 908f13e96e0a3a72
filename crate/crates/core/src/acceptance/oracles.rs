//! Second routes to values the library computes, written without reusing
//! the code they check.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactnum::{sqrt_canonical, ExactReal, Generator, Rational};
use crate::geometry::{Cell, Isometry, Point, Polytope};

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k × k` minors and the `k`-th factor is `d_k / d_{k−1}`.
pub fn invariant_factors(m: &[Vec<i64>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev: i128 = 1;
    for k in 1..=rows.min(cols) {
        let mut g: i128 = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g == 0 {
            out.extend(std::iter::repeat(0).take(rows.min(cols) - out.len()));
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// Matrix product over the integers.
pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], inner: usize, cols: usize) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|r| (0..cols).map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &r[k] * &b[k][j])).collect())
        .collect()
}

pub fn det_big(m: &[Vec<BigInt>]) -> Option<i128> {
    let small: Option<Vec<Vec<i128>>> = m.iter().map(|r| r.iter().map(|x| x.to_i128()).collect()).collect();
    small.map(|s| det(&s))
}

fn lcm_of_denominators(c: &Rational, s: &Rational) -> BigInt {
    c.denom().lcm(s.denom())
}

/// The angle class of the rotation `(c, s)` by residues. With `c + is =
/// (a + bi)/d` in lowest terms, each prime `p | d` splits as `π π̄` with
/// `π = u + vi`, `u > v > 0`, and `ℤ[i]/π ≅ 𝔽_p` sends `i` to the root `r`
/// of `r² ≡ −1` with `u + v r ≡ 0`. Then `π` divides `a + bi` exactly when
/// `a + b r ≡ 0 (mod p)`, in which case it does so `2 v_p(d)` times and `π̄`
/// not at all.
pub fn angle_class_by_residues(c: &Rational, s: &Rational) -> BTreeMap<u64, i64> {
    let d = lcm_of_denominators(c, s);
    let a = (c.numer() * (&d / c.denom())).to_i128().expect("small");
    let b = (s.numer() * (&d / s.denom())).to_i128().expect("small");
    let mut n = d.to_u64().expect("small denominator");
    let mut out = BTreeMap::new();
    let mut p = 2u64;
    while n > 1 {
        if n % p == 0 {
            let mut e = 0i64;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            let pi = p as i128;
            let (u, v) = (1..pi)
                .flat_map(|u| (1..u).map(move |v| (u, v)))
                .find(|&(u, v)| u * u + v * v == pi)
                .expect("prime below a unit-circle denominator is a sum of two squares");
            let r = (0..pi).find(|&r| (r * r + 1) % pi == 0 && (u + v * r) % pi == 0).expect("root of −1");
            let divides = (a + b * r).rem_euclid(pi) == 0;
            out.insert(p, if divides { 2 * e } else { -2 * e });
        }
        p += 1;
    }
    out
}

/// Signed area of a vertex loop, by the shoelace formula.
fn shoelace(vs: &[Point]) -> Rational {
    let n = vs.len();
    let twice: Rational = (0..n).map(|i| &vs[i].x * &vs[(i + 1) % n].y - &vs[(i + 1) % n].x * &vs[i].y).sum();
    twice / Rational::from_integer(2.into())
}

/// Total length or area, straight from the cell data.
pub fn volume(p: &Polytope) -> ExactReal {
    p.cells()
        .iter()
        .map(|c| match c {
            Cell::Interval(i) => i.hi() - i.lo(),
            Cell::Convex(c) => ExactReal::rational(shoelace(c.vertices()).abs()),
        })
        .sum()
}

/// `|V| · Σ t` over the edges `t·V` of every cell traversed
/// counterclockwise. An edge along `V` has the interior on the left of `V`
/// and contributes `+|t|·|V|`; one against `V` contributes `−|t|·|V|`.
pub fn hadwiger_by_projection(p: &Polytope, dx: i64, dy: i64) -> ExactReal {
    let v = Point::new(Rational::from_integer(dx.into()), Rational::from_integer(dy.into()));
    let vv = &v.x * &v.x + &v.y * &v.y;
    let mut t_sum = Rational::zero();
    for c in p.cells() {
        let Cell::Convex(c) = c else { continue };
        let mut vs = c.vertices().to_vec();
        if shoelace(&vs).is_negative() {
            vs.reverse();
        }
        for i in 0..vs.len() {
            let e = vs[(i + 1) % vs.len()].sub(&vs[i]);
            if e.cross(&v).is_zero() {
                t_sum += (&e.x * &v.x + &e.y * &v.y) / &vv;
            }
        }
    }
    sqrt_canonical(&vv).expect("positive").scale(&t_sum)
}

/// `Σ (−1)^k d_k` on `[g₁|…|g_p] ⊗ a`, expanded term by term into a plain
/// map.
pub fn bar_boundary_terms(terms: &[(Vec<Isometry>, ExactReal)]) -> BTreeMap<Vec<Isometry>, ExactReal> {
    let mut out: BTreeMap<Vec<Isometry>, ExactReal> = BTreeMap::new();
    let mut push = |w: Vec<Isometry>, a: &ExactReal, sign: i64| {
        let e = out.entry(w).or_default();
        *e = e.add_scale(&Rational::from_integer(sign.into()), a);
    };
    for (w, a) in terms {
        let p = w.len();
        for k in 0..=p {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let face: Vec<Isometry> = if k == 0 {
                w[1..].to_vec()
            } else if k == p {
                w[..p - 1].to_vec()
            } else {
                let mut f = w[..k - 1].to_vec();
                f.push(w[k - 1].compose(&w[k]).expect("same group"));
                f.extend_from_slice(&w[k + 1..]);
                f
            };
            push(face, a, sign);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Coefficients of `u ⊗ v` by a double loop over generator terms.
pub fn tensor_terms(u: &ExactReal, v: &ExactReal) -> BTreeMap<(Generator, Generator), Rational> {
    let mut out = BTreeMap::new();
    for (g, a) in u.terms() {
        for (h, b) in v.terms() {
            *out.entry((g.clone(), h.clone())).or_insert_with(Rational::zero) += a * b;
        }
    }
    out.retain(|_, q| !q.is_zero());
    out
}

pub fn sub_terms(
    a: &BTreeMap<(Generator, Generator), Rational>,
    b: &BTreeMap<(Generator, Generator), Rational>,
) -> BTreeMap<(Generator, Generator), Rational> {
    let mut out = a.clone();
    for (k, q) in b {
        *out.entry(k.clone()).or_insert_with(Rational::zero) -= q;
    }
    out.retain(|_, q| !q.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn determinants() {
        assert_eq!(det(&[vec![2, 1], vec![1, 3]]), 5);
        assert_eq!(det(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
    }

    #[test]
    fn determinantal_divisors() {
        assert_eq!(invariant_factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3), vec![2, 6, 12]);
        assert_eq!(invariant_factors(&[vec![0, 0]], 2), vec![0]);
    }

    #[test]
    fn residues() {
        assert_eq!(angle_class_by_residues(&rat(4, 5), &rat(3, 5)), [(5, -2)].into());
        assert_eq!(angle_class_by_residues(&rat(3, 5), &rat(4, 5)), [(5, 2)].into());
        assert_eq!(angle_class_by_residues(&rat(12, 13), &rat(5, 13)), [(13, -2)].into());
    }
}
