use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactError, ExactReal, Generator, Rational};

/// Default cap on enclosure precision.
pub const DEFAULT_MAX_PRECISION_BITS: u32 = 256;
/// First precision tried; doubled until the cap.
pub const INITIAL_PRECISION_BITS: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn point(q: Rational) -> Self {
        Self { lo: q.clone(), hi: q }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    fn scaled(&self, q: &Rational) -> Enclosure {
        if q.is_negative() {
            Enclosure { lo: &self.hi * q, hi: &self.lo * q }
        } else {
            Enclosure { lo: &self.lo * q, hi: &self.hi * q }
        }
    }

    fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Enclosure { lo, hi }
    }

    pub fn midpoint_f64(&self) -> f64 {
        let m = (&self.lo + &self.hi) / Rational::from_integer(2.into());
        m.to_f64().unwrap_or(f64::NAN)
    }
}

/// Decimal expansion of a length symbol, e.g. `"1.6180339887498948482"`.
///
/// Truncating after `d` fractional digits gives an enclosure of width `10^-d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitStream {
    negative: bool,
    integer: BigInt,
    fraction: Vec<u8>,
}

impl DigitStream {
    pub fn parse(s: &str) -> Result<Self, ExactError> {
        let s = s.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() || !int_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(ExactError::InvalidWitness(format!("bad digit stream {s:?}")));
        }
        if !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(ExactError::InvalidWitness(format!("bad digit stream {s:?}")));
        }
        Ok(Self {
            negative,
            integer: int_part.parse().unwrap(),
            fraction: frac_part.bytes().map(|b| b - b'0').collect(),
        })
    }

    pub fn available_digits(&self) -> usize {
        self.fraction.len()
    }

    /// Enclosure from the first `digits` fractional digits.
    pub fn enclosure(&self, digits: usize) -> Enclosure {
        let d = digits.min(self.fraction.len());
        let scale = num_traits::pow(BigInt::from(10), d);
        let mut n = &self.integer * &scale;
        let mut frac = BigInt::zero();
        for &digit in &self.fraction[..d] {
            frac = frac * 10 + BigInt::from(digit);
        }
        n += frac;
        let lo = Rational::new(n.clone(), scale.clone());
        let hi = Rational::new(n + 1, scale);
        if self.negative {
            Enclosure { lo: -hi, hi: -lo }
        } else {
            Enclosure { lo, hi }
        }
    }
}

impl fmt::Display for DigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.integer)?;
        if !self.fraction.is_empty() {
            f.write_str(".")?;
            for d in &self.fraction {
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

/// Witness data for a length symbol: a fixed enclosure plus optional digits
/// that refine it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolWitness {
    lo: Rational,
    hi: Rational,
    digits: Option<DigitStream>,
}

impl SymbolWitness {
    pub fn new(lo: Rational, hi: Rational, digits: Option<DigitStream>) -> Result<Self, ExactError> {
        if lo >= hi {
            return Err(ExactError::InvalidWitness(format!(
                "witness interval [{lo}, {hi}] is empty or degenerate"
            )));
        }
        if let Some(ds) = &digits {
            let e = ds.enclosure(0);
            if e.hi < lo || e.lo > hi {
                return Err(ExactError::InvalidWitness(format!(
                    "digit stream {ds} lies outside [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lo, hi, digits })
    }

    pub fn interval(lo: Rational, hi: Rational) -> Result<Self, ExactError> {
        Self::new(lo, hi, None)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn digits(&self) -> Option<&DigitStream> {
        self.digits.as_ref()
    }

    fn enclosure(&self, bits: u32) -> Enclosure {
        let base = Enclosure { lo: self.lo.clone(), hi: self.hi.clone() };
        let Some(ds) = &self.digits else { return base };
        // 10^-d ≤ 2^-bits  ⇐  d ≥ bits·log10(2)
        let d = (bits as usize * 30103).div_ceil(100000) + 1;
        let e = ds.enclosure(d);
        Enclosure {
            lo: std::cmp::max(e.lo, base.lo),
            hi: std::cmp::min(e.hi, base.hi),
        }
    }
}

/// Witnesses for every length symbol of a scenario.
///
/// Immutable after construction. Radicals and the unit need no entry: they
/// compute their own enclosures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTable {
    symbols: BTreeMap<String, SymbolWitness>,
    max_precision_bits: u32,
}

impl Default for GeneratorTable {
    fn default() -> Self {
        Self { symbols: BTreeMap::new(), max_precision_bits: DEFAULT_MAX_PRECISION_BITS }
    }
}

impl GeneratorTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_precision_bits(mut self, bits: u32) -> Self {
        self.max_precision_bits = bits.max(1);
        self
    }

    pub fn max_precision_bits(&self) -> u32 {
        self.max_precision_bits
    }

    pub fn declare(&mut self, name: impl Into<String>, witness: SymbolWitness) -> Result<(), ExactError> {
        let name = name.into();
        if name == "sqrt" || !name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') {
            return Err(ExactError::InvalidWitness(format!("invalid symbol name {name:?}")));
        }
        if self.symbols.contains_key(&name) {
            return Err(ExactError::DuplicateSymbol(name));
        }
        self.symbols.insert(name, witness);
        Ok(())
    }

    /// Convenience: declare with a plain interval witness.
    pub fn with_symbol(mut self, name: &str, lo: Rational, hi: Rational) -> Result<Self, ExactError> {
        self.declare(name, SymbolWitness::interval(lo, hi)?)?;
        Ok(self)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&str, &SymbolWitness)> {
        self.symbols.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn witness(&self, name: &str) -> Option<&SymbolWitness> {
        self.symbols.get(name)
    }

    /// Every symbol of `u` is declared.
    pub fn check_declared(&self, u: &ExactReal) -> Result<(), ExactError> {
        for s in u.symbols() {
            if !self.symbols.contains_key(s) {
                return Err(ExactError::UnknownSymbol(s.to_string()));
            }
        }
        Ok(())
    }

    pub fn generator_enclosure(&self, g: &Generator, bits: u32) -> Result<Enclosure, ExactError> {
        match g {
            Generator::One => Ok(Enclosure::point(Rational::one())),
            Generator::Radical(n) => Ok(radical_enclosure(n, bits)),
            Generator::Symbol(s) => self
                .symbols
                .get(s)
                .map(|w| w.enclosure(bits))
                .ok_or_else(|| ExactError::UnknownSymbol(s.clone())),
        }
    }

    pub fn enclosure(&self, u: &ExactReal, bits: u32) -> Result<Enclosure, ExactError> {
        let mut acc = Enclosure::point(Rational::zero());
        for (g, c) in u.terms() {
            acc = acc.add(&self.generator_enclosure(g, bits)?.scaled(c));
        }
        Ok(acc)
    }

    /// Sign with the table's precision cap.
    pub fn sign(&self, u: &ExactReal) -> Result<Sign, ExactError> {
        self.sign_of(u, self.max_precision_bits)
    }

    /// Decides the sign of `u` by interval evaluation at 64, 128, ... bits up
    /// to `max_bits`. Fails rather than guessing when the enclosure still
    /// straddles zero.
    pub fn sign_of(&self, u: &ExactReal, max_bits: u32) -> Result<Sign, ExactError> {
        if u.is_zero() {
            return Ok(Sign::Zero);
        }
        if let Some(q) = u.as_rational() {
            return Ok(if q.is_positive() { Sign::Positive } else { Sign::Negative });
        }
        let mut bits = INITIAL_PRECISION_BITS.min(max_bits);
        loop {
            let e = self.enclosure(u, bits)?;
            if e.lo.is_positive() {
                return Ok(Sign::Positive);
            }
            if e.hi.is_negative() {
                return Ok(Sign::Negative);
            }
            if bits >= max_bits {
                return Err(ExactError::UndecidableSign { expr: u.to_string(), bits });
            }
            bits = (bits.saturating_mul(2)).min(max_bits);
        }
    }

    /// `a < b`, decided exactly.
    pub fn less(&self, a: &ExactReal, b: &ExactReal) -> Result<bool, ExactError> {
        Ok(self.sign(&(b - a))? == Sign::Positive)
    }

    pub fn cmp(&self, a: &ExactReal, b: &ExactReal) -> Result<std::cmp::Ordering, ExactError> {
        Ok(match self.sign(&(a - b))? {
            Sign::Negative => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Positive => std::cmp::Ordering::Greater,
        })
    }

    /// Display-only approximation.
    pub fn approx(&self, u: &ExactReal) -> f64 {
        self.enclosure(u, INITIAL_PRECISION_BITS)
            .map(|e| e.midpoint_f64())
            .unwrap_or(f64::NAN)
    }
}

/// `[⌊√n·2^k⌋/2^k, (⌊√n·2^k⌋+1)/2^k]`, a point when `n` is a square.
fn radical_enclosure(n: &BigUint, bits: u32) -> Enclosure {
    let scaled = n << (2 * bits as usize);
    let r = scaled.sqrt();
    let den = BigInt::one() << bits as usize;
    let lo = Rational::new(BigInt::from(r.clone()), den.clone());
    if &r * &r == scaled {
        Enclosure::point(lo)
    } else {
        Enclosure { lo, hi: Rational::new(BigInt::from(r) + 1, den) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn table() -> GeneratorTable {
        GeneratorTable::new()
            .with_symbol("x", rat(1, 2), rat(3, 4))
            .unwrap()
    }

    #[test]
    fn trivial_signs() {
        let t = table();
        assert_eq!(t.sign(&ExactReal::zero()).unwrap(), Sign::Zero);
        let x = ExactReal::symbol("x");
        assert_eq!(t.sign(&(&x - &x)).unwrap(), Sign::Zero);
        assert_eq!(t.sign(&x).unwrap(), Sign::Positive);
        assert_eq!(t.sign(&(-&x)).unwrap(), Sign::Negative);
    }

    #[test]
    fn three_minus_two_root_two_is_positive() {
        // oracle: √2 ∈ (1.414, 1.415) ⇒ 3 − 2√2 ∈ (0.17, 0.172)
        let u = ExactReal::parse("3 - 2*sqrt(2)").unwrap();
        let lo = rat(3, 1) - rat(2, 1) * rat(1415, 1000);
        assert!(lo > rat(0, 1));
        assert_eq!(GeneratorTable::new().sign(&u).unwrap(), Sign::Positive);
        let e = GeneratorTable::new().enclosure(&u, 64).unwrap();
        assert!(e.lo > rat(17, 100) && e.hi < rat(172, 1000));
    }

    #[test]
    fn undecidable_without_tight_witness() {
        // x ∈ [1/2, 3/4] cannot be compared with 5/8
        let t = table();
        let u = ExactReal::parse("x - 5/8").unwrap();
        assert!(matches!(t.sign(&u), Err(ExactError::UndecidableSign { .. })));
        // digits refine it
        let mut t2 = GeneratorTable::new();
        t2.declare(
            "x",
            SymbolWitness::new(rat(1, 2), rat(3, 4), Some(DigitStream::parse("0.61803398874989484820").unwrap()))
                .unwrap(),
        )
        .unwrap();
        assert_eq!(t2.sign(&u).unwrap(), Sign::Negative);
    }

    #[test]
    fn unknown_symbol_is_an_error() {
        let t = GeneratorTable::new();
        assert!(matches!(t.sign(&ExactReal::symbol("z")), Err(ExactError::UnknownSymbol(_))));
    }

    #[test]
    fn witness_validation() {
        assert!(SymbolWitness::interval(rat(1, 1), rat(1, 1)).is_err());
        assert!(SymbolWitness::interval(rat(2, 1), rat(1, 1)).is_err());
        assert!(SymbolWitness::new(rat(0, 1), rat(1, 1), Some(DigitStream::parse("3.1").unwrap())).is_err());
        let mut t = GeneratorTable::new();
        t.declare("x", SymbolWitness::interval(rat(0, 1), rat(1, 1)).unwrap()).unwrap();
        assert!(matches!(
            t.declare("x", SymbolWitness::interval(rat(0, 1), rat(1, 1)).unwrap()),
            Err(ExactError::DuplicateSymbol(_))
        ));
    }

    #[test]
    fn digit_stream_enclosures() {
        let d = DigitStream::parse("-1.25").unwrap();
        let e = d.enclosure(2);
        assert_eq!(e.lo, rat(-126, 100));
        assert_eq!(e.hi, rat(-125, 100));
        assert_eq!(d.to_string(), "-1.25");
    }
}
