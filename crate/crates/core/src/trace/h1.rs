use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::{angle_class, BarChain, TraceError};
use crate::exactnum::{tensor, ExactReal, Generator, Rational, TensorElement};
use crate::geometry::{GroupKind, Isometry};

/// A class in `H₁(G; ℝ) = G^ab ⊗ ℝ` for the three shipped groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H1Class {
    /// `ℝ ⊗_ℚ ℝ`, translation on the left.
    T1(TensorElement),
    /// `ℝ² ⊗ ℝ` by coordinates.
    T2 { e1: ExactReal, e2: ExactReal },
    /// Coefficients of the Gaussian-prime angles, keyed by the rational prime.
    SE2(BTreeMap<BigInt, ExactReal>),
}

impl H1Class {
    pub fn zero(kind: GroupKind) -> Self {
        match kind {
            GroupKind::T1 => H1Class::T1(TensorElement::zero()),
            GroupKind::T2 => H1Class::T2 { e1: ExactReal::zero(), e2: ExactReal::zero() },
            GroupKind::SE2 => H1Class::SE2(BTreeMap::new()),
        }
    }

    pub fn kind(&self) -> GroupKind {
        match self {
            H1Class::T1(_) => GroupKind::T1,
            H1Class::T2 { .. } => GroupKind::T2,
            H1Class::SE2(_) => GroupKind::SE2,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            H1Class::T1(t) => t.is_zero(),
            H1Class::T2 { e1, e2 } => e1.is_zero() && e2.is_zero(),
            H1Class::SE2(m) => m.is_empty(),
        }
    }

    /// `ab(g) ⊗ a`.
    pub fn of_term(g: &Isometry, a: &ExactReal) -> Self {
        match g {
            Isometry::T1(t) => H1Class::T1(tensor(t, a)),
            Isometry::T2(v) => H1Class::T2 { e1: a.scale(&v.x), e2: a.scale(&v.y) },
            Isometry::SE2(r, _) => H1Class::SE2(
                angle_class(r)
                    .into_iter()
                    .map(|(p, k)| (p, a.scale(&Rational::from_integer(k))))
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            ),
        }
    }

    pub fn add(&self, other: &H1Class) -> Result<H1Class, TraceError> {
        Ok(match (self, other) {
            (H1Class::T1(a), H1Class::T1(b)) => H1Class::T1(a + b),
            (H1Class::T2 { e1, e2 }, H1Class::T2 { e1: f1, e2: f2 }) => H1Class::T2 { e1: e1 + f1, e2: e2 + f2 },
            (H1Class::SE2(a), H1Class::SE2(b)) => {
                let mut out = a.clone();
                for (p, v) in b {
                    let e = out.entry(p.clone()).or_default();
                    *e += v;
                    if e.is_zero() {
                        out.remove(p);
                    }
                }
                H1Class::SE2(out)
            }
            _ => return Err(TraceError::Unsupported("classes of different groups".into())),
        })
    }

    pub fn neg(&self) -> H1Class {
        match self {
            H1Class::T1(a) => H1Class::T1(-a),
            H1Class::T2 { e1, e2 } => H1Class::T2 { e1: -e1, e2: -e2 },
            H1Class::SE2(m) => H1Class::SE2(m.iter().map(|(p, v)| (p.clone(), -v)).collect()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            H1Class::T1(t) => json!({
                "group": "T1",
                "display": t.to_string(),
                "terms": t.terms().map(|((l, r), q)| json!({
                    "left": l.to_expr(), "right": r.to_expr(), "coeff": q.to_string()
                })).collect::<Vec<_>>(),
            }),
            H1Class::T2 { e1, e2 } => json!({ "group": "T2", "e1": e1.to_expr(), "e2": e2.to_expr() }),
            H1Class::SE2(m) => json!({
                "group": "SE2",
                "angles": m.iter().map(|(p, v)| (p.to_string(), json!(v.to_expr()))).collect::<serde_json::Map<_, _>>(),
            }),
        }
    }
}

impl fmt::Display for H1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Class::T1(t) => write!(f, "{t}"),
            H1Class::T2 { e1, e2 } => {
                let parts: Vec<String> = [("e₁", e1), ("e₂", e2)]
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(e, v)| format!("{e}⊗({v})"))
                    .collect();
                if parts.is_empty() {
                    f.write_str("0")
                } else {
                    f.write_str(&parts.join(" + "))
                }
            }
            H1Class::SE2(m) if m.is_empty() => f.write_str("0"),
            H1Class::SE2(m) => {
                // {p=5: −2}⊗1 + {p=5: 1, p=13: 3}⊗x, one block per real generator
                let mut by_real: BTreeMap<&Generator, Vec<(&BigInt, &Rational)>> = BTreeMap::new();
                for (p, v) in m {
                    for (g, q) in v.terms() {
                        by_real.entry(g).or_default().push((p, q));
                    }
                }
                let blocks: Vec<String> = by_real
                    .into_iter()
                    .map(|(g, ps)| {
                        let inner: Vec<String> = ps.iter().map(|(p, q)| format!("p={p}: {}", signed(q))).collect();
                        format!("{{{}}}⊗{}", inner.join(", "), ExactReal::term(g.clone(), Rational::one()))
                    })
                    .collect();
                f.write_str(&blocks.join(" + "))
            }
        }
    }
}

fn signed(q: &Rational) -> String {
    if q.is_negative() {
        format!("−{}", -q)
    } else {
        q.to_string()
    }
}

/// `Σ [g] ⊗ a ↦ Σ ab(g) ⊗ a` on a 1-chain. With trivial coefficients every
/// 1-chain is a cycle, and boundaries land on zero.
pub fn reduce_h1(c: &BarChain<Isometry>, kind: GroupKind) -> Result<H1Class, TraceError> {
    if c.degree() != 1 {
        return Err(TraceError::Degree(format!("H₁ needs a 1-chain, got degree {}", c.degree())));
    }
    let mut out = H1Class::zero(kind);
    for (w, a) in c.terms() {
        let g = w[0].lift_to(kind)?;
        out = out.add(&H1Class::of_term(&g, a))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::geometry::{Point, Rotation};
    use crate::trace::bar_boundary;

    fn e(s: &str) -> ExactReal {
        ExactReal::parse(s).unwrap()
    }

    #[test]
    fn interval_exchange_class() {
        let t = |s: &str| Isometry::translation_1d(e(s));
        let mut c = BarChain::zero(1);
        c.add_term(vec![t("y")], &e("x"));
        c.add_term(vec![t("-x")], &e("y"));
        c.add_term(vec![t("0")], &e("-x - y"));
        let h = reduce_h1(&c, GroupKind::T1).unwrap();
        assert_eq!(h.to_string(), "y⊗x − x⊗y");
        assert!(reduce_h1(&BarChain::term(vec![t("0")], e("x")), GroupKind::T1).unwrap().is_zero());
    }

    #[test]
    fn boundaries_vanish() {
        let r = Rotation::new(rat(4, 5), rat(3, 5)).unwrap();
        let s = Rotation::new(rat(5, 13), rat(12, 13)).unwrap();
        let g = Isometry::rigid(r, Point::new(rat(1, 2), rat(0, 1)));
        let h = Isometry::rigid(s, Point::new(rat(0, 1), rat(3, 1)));
        let c = BarChain::term(vec![g, h], e("x + 2"));
        let d = bar_boundary(&GroupKind::SE2, &c).unwrap();
        assert!(reduce_h1(&d, GroupKind::SE2).unwrap().is_zero());
    }

    #[test]
    fn rotation_class() {
        let g = Isometry::rigid(Rotation::new(rat(4, 5), rat(3, 5)).unwrap(), Point::origin());
        let h = reduce_h1(&BarChain::term(vec![g], ExactReal::one()), GroupKind::SE2).unwrap();
        assert_eq!(h, H1Class::SE2([(BigInt::from(5), ExactReal::integer(-2))].into()));
        assert_eq!(h.to_json()["angles"]["5"], json!("-2"));
        assert_eq!(h.to_string(), "{p=5: −2}⊗1");
    }
}
