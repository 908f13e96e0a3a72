//! Categories with covering families.
//!
//! Finite categories are stored as explicit tables ([`FinCatFam`]); the
//! polytope categories are infinite and are only ever touched through their
//! morphisms ([`PolCategory`]). Both implement [`CoverCategory`], which is all
//! the category of covers needs. Homotopy-orbit categories additionally expose
//! the group part of each morphism through [`OrbitCategory`].

mod catalog;
mod fincat;
mod group;
mod k0;
mod comparison;
mod orbit;
mod pol;
mod wcat;

use std::fmt::Debug;

use thiserror::Error;

use crate::geometry::CoverError;

pub use catalog::{build_ea, ea_covering_tuples, group_star, one_star, swap_category, toy_two_object, trivial_category, truncated_naturals};
pub use fincat::{
    find_isomorphism, CatIsomorphism, Family, FinCatBuilder, FinCatFam, MorphismInfo, ValidationReport, Violation,
    ViolationKind, DEFAULT_CLOSURE_BOUND,
};
pub use group::{FiniteGroup, Group, GroupAction};
pub use k0::{
    k0, smith_normal_form, universal_measure_check, K0Class, K0Presentation, MeasureFactorization, MeasureValue, SmithForm,
};
pub use comparison::{
    check_weak_product, enumerate_tuples, enumerate_w_homs, quillen_a_fibers, smash, FiberReport, FiberSummary, PointedSet, Smash,
    WeakProductReport,
};
pub use orbit::{build_homotopy_orbit, HomotopyOrbit, OrbitPart};
pub use pol::{PolCategory, PolMorphism};
pub use wcat::{compose_w, factor_move_sub, identity_w, WMorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("invalid category data: {0}")]
    Invalid(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("fibre over target index {0} is not a covering family")]
    NotCovering(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("measure violates the relation of family {0}")]
    InconsistentMeasure(usize),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

/// A pointed category with covering families, as seen by the category of
/// covers.
pub trait CoverCategory {
    type Object: Clone + Eq + Debug;
    type Morphism: Clone + Eq + Debug;

    fn source(&self, f: &Self::Morphism) -> Self::Object;
    fn target(&self, f: &Self::Morphism) -> Self::Object;
    fn identity(&self, a: &Self::Object) -> Self::Morphism;
    /// `f ∘ g`.
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism, CatError>;
    fn is_basepoint(&self, a: &Self::Object) -> bool;
    fn is_covering(&self, target: &Self::Object, family: &[Self::Morphism]) -> Result<bool, CatError>;
}

/// A homotopy-orbit category: every morphism `(f, g): A → B` has a group part
/// `g` and factors as `(f, 1) ∘ (1, g)` through `gA`.
pub trait OrbitCategory: CoverCategory {
    type Group: Group;

    fn group(&self) -> &Self::Group;
    fn group_part(&self, f: &Self::Morphism) -> <Self::Group as Group>::Elem;
    /// `((1, g): A → gA, (f, 1): gA → B)`.
    fn split(&self, f: &Self::Morphism) -> Result<(Self::Morphism, Self::Morphism), CatError>;
}
