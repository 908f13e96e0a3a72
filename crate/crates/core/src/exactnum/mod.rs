//! Exact scalars.
//!
//! Reals are finite ℚ-linear combinations of declared generators: the unit,
//! squarefree radicals `√n`, and named length symbols. Generators are assumed
//! ℚ-linearly independent, so equality is coefficientwise and ℝ ⊗_ℤ ℝ can be
//! computed as ℝ ⊗_ℚ ℝ on generator pairs. Signs are decided by interval
//! enclosures refined until they exclude zero.

mod parse;
mod radical;
mod real;
mod sign;
mod tensor;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use parse::parse_rational;
pub use radical::{sqrt_canonical, sqrt_int, square_free_decomposition};
pub use real::{ExactReal, Generator};
pub use sign::{
    DigitStream, Enclosure, GeneratorTable, Sign, SymbolWitness, DEFAULT_MAX_PRECISION_BITS,
    INITIAL_PRECISION_BITS,
};
pub use tensor::{tensor, TensorElement};

pub type Rational = BigRational;

/// `n/d` as a big rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("sign of {expr} undecidable at {bits} bits of precision")]
    UndecidableSign { expr: String, bits: u32 },
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("symbol {0:?} declared twice")]
    DuplicateSymbol(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("square root of nonpositive {0}")]
    NonPositiveSqrt(String),
    #[error("parse error: {0}")]
    Parse(String),
}
