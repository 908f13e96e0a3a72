//! The trace from the category of covers to group homology.
//!
//! A simplex `X₀ ← ⋯ ← X_p` of the nerve goes to the bar chain
//! `Σ_i [g_{1|i}|…|g_{p|i}] ⊗ μ(P_{p|i})`. Degree-one chains of scissors
//! automorphisms are reduced to explicit classes in `G^ab ⊗ ℝ`: tensors for
//! translations of the line, coordinate pairs for translations of the plane,
//! and Gaussian-prime angle coefficients for rigid motions.

mod angle;
mod automorphism;
mod bar;
mod construct;
mod h1;
mod nerve;

use thiserror::Error;

use crate::covercat::CatError;
use crate::geometry::{CoverError, GeometryError};
use crate::measures::MeasureError;

pub use angle::{add_classes, angle_class, canonical_gaussian_prime, prime_factors, AngleClass};
pub use automorphism::{compose_automorphisms, trace_automorphism, trace_k0, ScissorsAutomorphism};
pub use bar::{bar_boundary, bar_face, chain_to_json, BarChain, WordElement};
pub use construct::{construct_class, four_squares, interval_exchange, rotated_square, ClassRequest};
pub use h1::{reduce_h1, H1Class};
pub use nerve::{
    check_simplicial, check_simplicial_with, nerve_face, trace_simplex, trace_simplex_with, trace_terms, trace_terms_with, NerveSimplex, PolSimplex,
    SimplicialReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("degree: {0}")]
    Degree(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cannot realize: {0}")]
    Unrepresentable(String),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Category(#[from] CatError),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

impl From<GeometryError> for TraceError {
    fn from(e: GeometryError) -> Self {
        TraceError::Cover(e.into())
    }
}
