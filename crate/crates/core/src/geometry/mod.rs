//! Polytopes in E¹ and E², their isometries, and exact cover verification.
//!
//! Intervals have [`ExactReal`] endpoints so that symbolic lengths can be cut
//! and translated. Planar cells are convex polygons with rational vertices,
//! which keeps clipping and rational rotation closed without any radicals.

mod cell;
mod cover;
mod edges;
mod isometry;
mod polytope;

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactnum::{ExactError, ExactReal, Rational};

pub use cell::{clip_convex, intersect_intervals, triangulate, Cell, ConvexCell2D, Interval1D};
pub use cover::{common_refinement, is_contained, verify_cover, CellRef, CoverCertificate, CoverError, RefinedCell};
pub use edges::{signed_edges, Direction, SignedEdge};
pub use isometry::{GroupKind, Isometry, Rotation};
pub use polytope::{measure_of, Polytope};

/// The ambient Euclidean space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Geometry {
    E1,
    E2,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::E1 => "E1",
            Geometry::E2 => "E2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("objects live in different geometries")]
    GeometryMismatch,
    #[error("expected a {expected} element, found {found}")]
    GroupMismatch { expected: GroupKind, found: GroupKind },
    #[error("unknown isometry group {0:?}")]
    UnknownGroup(String),
    #[error("({0}) is not on the unit circle")]
    InvalidRotation(String),
    #[error("degenerate cell: {0}")]
    Degenerate(String),
    #[error("polygon is not convex and counterclockwise")]
    NotConvex,
    #[error("polygon is not simple")]
    NotSimple,
    #[error("cells {0} and {1} of a polytope overlap")]
    CellOverlap(usize, usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A point of the rational plane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self { x: Rational::zero(), y: Rational::zero() }
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, o: &Point) -> Point {
        Point { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point { x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn neg(&self) -> Point {
        Point { x: -&self.x, y: -&self.y }
    }

    pub fn scale(&self, q: &Rational) -> Point {
        Point { x: &self.x * q, y: &self.y * q }
    }

    pub fn cross(&self, o: &Point) -> Rational {
        &self.x * &o.y - &self.y * &o.x
    }

    /// Cross product of `b − a` and `c − a`: positive for a left turn.
    pub fn orient(a: &Point, b: &Point, c: &Point) -> Rational {
        b.sub(a).cross(&c.sub(a))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Convenience for `ExactReal` endpoints given as rationals.
pub(crate) fn real(q: Rational) -> ExactReal {
    ExactReal::rational(q)
}
