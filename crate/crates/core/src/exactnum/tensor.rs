use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{ExactReal, Generator, Rational};

/// Element of ℝ ⊗_ℚ ℝ in the basis of generator pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorElement {
    coeffs: BTreeMap<(Generator, Generator), Rational>,
}

/// Bilinear expansion of `u ⊗ v`.
pub fn tensor(u: &ExactReal, v: &ExactReal) -> TensorElement {
    let mut out = TensorElement::zero();
    for (gu, cu) in u.terms() {
        for (gv, cv) in v.terms() {
            out.add_term((gu.clone(), gv.clone()), &(cu * cv));
        }
    }
    out
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, left: &Generator, right: &Generator) -> Rational {
        self.coeffs
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Generator, Generator), &Rational)> {
        self.coeffs.iter()
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((Generator, Generator), Rational)>,
    {
        let mut out = Self::zero();
        for (k, q) in terms {
            out.add_term(k, &q);
        }
        out
    }

    fn add_term(&mut self, key: (Generator, Generator), q: &Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(key).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.coeffs.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_scale(&self, q: &Rational, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), &(c * q));
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> TensorElement {
        TensorElement::zero().add_scale(q, self)
    }

    /// The flip `u⊗v ↦ v⊗u`.
    pub fn transpose(&self) -> TensorElement {
        TensorElement::from_terms(
            self.coeffs
                .iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())),
        )
    }
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.add_scale(&Rational::one(), rhs)
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.add_scale(&-Rational::one(), rhs)
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&-Rational::one())
    }
}

/// Positive terms first, then negative ones, each group in basis order; so
/// the interval-exchange class reads `y⊗x − x⊗y`.
impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let pos = self.coeffs.iter().filter(|(_, c)| c.is_positive());
        let neg = self.coeffs.iter().filter(|(_, c)| c.is_negative());
        for (k, ((a, b), c)) in pos.chain(neg).enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("−")?,
                (0, false) => {}
                (_, true) => f.write_str(" − ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            write!(f, "{a}⊗{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn basis_and_zero_cases() {
        let x = ExactReal::symbol("x");
        let y = ExactReal::symbol("y");
        assert!(tensor(&ExactReal::zero(), &y).is_zero());
        let t = tensor(&x, &y);
        assert_eq!(t.coeff(&Generator::symbol("x"), &Generator::symbol("y")), rat(1, 1));
        assert_eq!(t.terms().count(), 1);
    }

    #[test]
    fn bilinearity_instance() {
        let x = ExactReal::symbol("x");
        let y = ExactReal::symbol("y");
        let u = ExactReal::parse("2*x + 1").unwrap();
        let d = &(&tensor(&u, &y) - &tensor(&x, &y).scale(&rat(2, 1))) - &tensor(&ExactReal::one(), &y);
        assert!(d.is_zero());
    }

    #[test]
    fn display_order() {
        let x = ExactReal::symbol("x");
        let y = ExactReal::symbol("y");
        let c = &tensor(&y, &x) - &tensor(&x, &y);
        assert_eq!(c.to_string(), "y⊗x − x⊗y");
        assert_eq!(c.transpose(), -&c);
    }
}
