use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

/// A declared real generator. Generators are assumed ℚ-linearly independent.
///
/// The derived order (unit, then radicals by radicand, then symbols by name)
/// is the canonical term order used for display and serialization.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    One,
    /// `√n` for squarefree `n ≥ 2`.
    Radical(BigUint),
    Symbol(String),
}

impl Generator {
    pub fn symbol(name: impl Into<String>) -> Self {
        Generator::Symbol(name.into())
    }

    fn write_unicode(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::One => f.write_str("1"),
            Generator::Radical(n) => write!(f, "√{n}"),
            Generator::Symbol(s) => f.write_str(s),
        }
    }

    /// ASCII form accepted by the expression parser.
    pub fn to_expr(&self) -> String {
        match self {
            Generator::One => "1".to_string(),
            Generator::Radical(n) => format!("sqrt({n})"),
            Generator::Symbol(s) => s.clone(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_unicode(f)
    }
}

/// A real number as a finite ℚ-linear combination of generators.
///
/// Zero coefficients are never stored, so structural equality is numeric
/// equality under the independence assumption on generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactReal {
    coeffs: BTreeMap<Generator, Rational>,
}

impl ExactReal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(q: Rational) -> Self {
        Self::term(Generator::One, q)
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(Rational::from_integer(n.into()))
    }

    pub fn symbol(name: impl Into<String>) -> Self {
        Self::term(Generator::symbol(name), Rational::one())
    }

    pub fn term(generator: Generator, q: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !q.is_zero() {
            coeffs.insert(generator, q);
        }
        Self { coeffs }
    }

    /// Builds the canonical form of a possibly redundant term list.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Generator, Rational)>,
    {
        let mut out = Self::zero();
        for (g, q) in terms {
            out.add_term(g, &q);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, generator: &Generator) -> Rational {
        self.coeffs.get(generator).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The value as a rational, when no irrational generator occurs.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs.get(&Generator::One).cloned(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.coeffs.keys().filter_map(|g| match g {
            Generator::Symbol(s) => Some(s.as_str()),
            _ => None,
        })
    }

    fn add_term(&mut self, generator: Generator, q: &Rational) {
        if q.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(generator);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + q;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self + q·other`.
    pub fn add_scale(&self, q: &Rational, other: &ExactReal) -> ExactReal {
        let mut out = self.clone();
        if q.is_zero() {
            return out;
        }
        for (g, c) in &other.coeffs {
            out.add_term(g.clone(), &(c * q));
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> ExactReal {
        if q.is_zero() {
            return ExactReal::zero();
        }
        ExactReal {
            coeffs: self.coeffs.iter().map(|(g, c)| (g.clone(), c * q)).collect(),
        }
    }

    /// ASCII expression accepted by [`ExactReal::parse`]; used in scenario files.
    pub fn to_expr(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (g, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match g {
                Generator::One => out.push_str(&mag.to_string()),
                _ if mag.is_one() => out.push_str(&g.to_expr()),
                _ => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                    out.push_str(&g.to_expr());
                }
            }
        }
        out
    }

    /// Parses a linear expression such as `3/2 + 2*x - sqrt(8)`.
    ///
    /// Radicals are canonicalized on the way in, so `sqrt(8)` becomes `2·√2`.
    /// Products of two non-rational factors are rejected.
    pub fn parse(input: &str) -> Result<ExactReal, ExactError> {
        super::parse::parse_expr(input)
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("−")?;
                }
            } else {
                f.write_str(if neg { " − " } else { " + " })?;
            }
            match g {
                Generator::One => write!(f, "{mag}")?,
                _ if mag.is_one() => g.write_unicode(f)?,
                _ => {
                    write!(f, "{mag}·")?;
                    g.write_unicode(f)?;
                }
            }
        }
        Ok(())
    }
}

impl From<Rational> for ExactReal {
    fn from(q: Rational) -> Self {
        ExactReal::rational(q)
    }
}

impl From<i64> for ExactReal {
    fn from(n: i64) -> Self {
        ExactReal::integer(n)
    }
}

impl Add<&ExactReal> for &ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: &ExactReal) -> ExactReal {
        self.add_scale(&Rational::one(), rhs)
    }
}

impl Sub<&ExactReal> for &ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: &ExactReal) -> ExactReal {
        self.add_scale(&-Rational::one(), rhs)
    }
}

impl Add for ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: ExactReal) -> ExactReal {
        &self + &rhs
    }
}

impl Sub for ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: ExactReal) -> ExactReal {
        &self - &rhs
    }
}

impl AddAssign<&ExactReal> for ExactReal {
    fn add_assign(&mut self, rhs: &ExactReal) {
        for (g, c) in &rhs.coeffs {
            self.add_term(g.clone(), c);
        }
    }
}

impl SubAssign<&ExactReal> for ExactReal {
    fn sub_assign(&mut self, rhs: &ExactReal) {
        for (g, c) in &rhs.coeffs {
            self.add_term(g.clone(), &-c);
        }
    }
}

impl Neg for &ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        self.scale(&-Rational::one())
    }
}

impl Neg for ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        -&self
    }
}

impl Mul<&Rational> for &ExactReal {
    type Output = ExactReal;
    fn mul(self, rhs: &Rational) -> ExactReal {
        self.scale(rhs)
    }
}

impl std::iter::Sum for ExactReal {
    fn sum<I: Iterator<Item = ExactReal>>(iter: I) -> Self {
        let mut acc = ExactReal::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl<'a> std::iter::Sum<&'a ExactReal> for ExactReal {
    fn sum<I: Iterator<Item = &'a ExactReal>>(iter: I) -> Self {
        let mut acc = ExactReal::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}
