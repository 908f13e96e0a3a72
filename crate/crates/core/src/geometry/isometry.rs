use std::fmt;

use num_traits::{One, Zero};

use super::{GeometryError, Point};
use crate::exactnum::{ExactReal, Rational};

/// Rotation by a rational point `(c, s)` on the unit circle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rotation {
    c: Rational,
    s: Rational,
}

impl Rotation {
    pub fn new(c: Rational, s: Rational) -> Result<Self, GeometryError> {
        if &c * &c + &s * &s != Rational::one() {
            return Err(GeometryError::InvalidRotation(format!("({c}, {s})")));
        }
        Ok(Self { c, s })
    }

    pub fn identity() -> Self {
        Self { c: Rational::one(), s: Rational::zero() }
    }

    /// Counterclockwise quarter turn.
    pub fn quarter_turn() -> Self {
        Self { c: Rational::zero(), s: Rational::one() }
    }

    /// The rotation through `(m²−n², 2mn)/(m²+n²)`.
    pub fn from_pythagorean(m: i64, n: i64) -> Self {
        let d = Rational::from_integer((m * m + n * n).into());
        Self {
            c: Rational::from_integer((m * m - n * n).into()) / &d,
            s: Rational::from_integer((2 * m * n).into()) / d,
        }
    }

    pub fn cos(&self) -> &Rational {
        &self.c
    }

    pub fn sin(&self) -> &Rational {
        &self.s
    }

    pub fn is_identity(&self) -> bool {
        self.c.is_one() && self.s.is_zero()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Rotation) -> Rotation {
        Rotation {
            c: &self.c * &other.c - &self.s * &other.s,
            s: &self.s * &other.c + &self.c * &other.s,
        }
    }

    pub fn inverse(&self) -> Rotation {
        Rotation { c: self.c.clone(), s: -&self.s }
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point {
            x: &self.c * &p.x - &self.s * &p.y,
            y: &self.s * &p.x + &self.c * &p.y,
        }
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({}, {})", self.c, self.s)
    }
}

/// The three isometry groups the geometry layer supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    /// Translations of the line.
    T1,
    /// Translations of the plane.
    T2,
    /// Orientation-preserving isometries of the plane.
    SE2,
}

impl GroupKind {
    pub fn geometry(self) -> super::Geometry {
        match self {
            GroupKind::T1 => super::Geometry::E1,
            GroupKind::T2 | GroupKind::SE2 => super::Geometry::E2,
        }
    }

    pub fn identity(self) -> Isometry {
        match self {
            GroupKind::T1 => Isometry::T1(ExactReal::zero()),
            GroupKind::T2 => Isometry::T2(Point::origin()),
            GroupKind::SE2 => Isometry::SE2(Rotation::identity(), Point::origin()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::T1 => "T1",
            GroupKind::T2 => "T2",
            GroupKind::SE2 => "SE2",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GroupKind {
    type Err = GeometryError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T1" => Ok(GroupKind::T1),
            "T2" => Ok(GroupKind::T2),
            "SE2" => Ok(GroupKind::SE2),
            other => Err(GeometryError::UnknownGroup(other.to_string())),
        }
    }
}

/// An element of T(1), T(2) or SE(2), stored in its group's canonical form:
/// a translation used inside SE(2) is `SE2(identity, v)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Isometry {
    T1(ExactReal),
    T2(Point),
    /// `p ↦ R·p + v`.
    SE2(Rotation, Point),
}

impl Isometry {
    pub fn translation_1d(t: ExactReal) -> Self {
        Isometry::T1(t)
    }

    pub fn translation(x: Rational, y: Rational) -> Self {
        Isometry::T2(Point { x, y })
    }

    pub fn rigid(r: Rotation, v: Point) -> Self {
        Isometry::SE2(r, v)
    }

    pub fn kind(&self) -> GroupKind {
        match self {
            Isometry::T1(_) => GroupKind::T1,
            Isometry::T2(_) => GroupKind::T2,
            Isometry::SE2(..) => GroupKind::SE2,
        }
    }

    /// Re-expresses `self` as an element of `kind`, when it belongs to it.
    pub fn lift_to(&self, kind: GroupKind) -> Result<Isometry, GeometryError> {
        match (self, kind) {
            (g, k) if g.kind() == k => Ok(g.clone()),
            (Isometry::T2(v), GroupKind::SE2) => Ok(Isometry::SE2(Rotation::identity(), v.clone())),
            (Isometry::SE2(r, v), GroupKind::T2) if r.is_identity() => Ok(Isometry::T2(v.clone())),
            (g, k) => Err(GeometryError::GroupMismatch { expected: k, found: g.kind() }),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Isometry::T1(t) => t.is_zero(),
            Isometry::T2(v) => v.is_origin(),
            Isometry::SE2(r, v) => r.is_identity() && v.is_origin(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry, GeometryError> {
        match (self, other) {
            (Isometry::T1(a), Isometry::T1(b)) => Ok(Isometry::T1(a + b)),
            (Isometry::T2(a), Isometry::T2(b)) => Ok(Isometry::T2(a.add(b))),
            (Isometry::SE2(r1, v1), Isometry::SE2(r2, v2)) => {
                Ok(Isometry::SE2(r1.compose(r2), r1.apply(v2).add(v1)))
            }
            (a, b) => Err(GeometryError::GroupMismatch { expected: a.kind(), found: b.kind() }),
        }
    }

    pub fn inverse(&self) -> Isometry {
        match self {
            Isometry::T1(t) => Isometry::T1(-t),
            Isometry::T2(v) => Isometry::T2(v.neg()),
            Isometry::SE2(r, v) => {
                let ri = r.inverse();
                let w = ri.apply(v).neg();
                Isometry::SE2(ri, w)
            }
        }
    }

    /// The rotation part (identity for translations).
    pub fn rotation(&self) -> Rotation {
        match self {
            Isometry::SE2(r, _) => r.clone(),
            _ => Rotation::identity(),
        }
    }

    pub fn apply_point(&self, p: &Point) -> Result<Point, GeometryError> {
        match self {
            Isometry::T2(v) => Ok(p.add(v)),
            Isometry::SE2(r, v) => Ok(r.apply(p).add(v)),
            Isometry::T1(_) => Err(GeometryError::GeometryMismatch),
        }
    }

    pub fn apply_scalar(&self, t: &ExactReal) -> Result<ExactReal, GeometryError> {
        match self {
            Isometry::T1(s) => Ok(t + s),
            _ => Err(GeometryError::GeometryMismatch),
        }
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Isometry::T1(t) => write!(f, "{t}"),
            Isometry::T2(v) => write!(f, "{v}"),
            Isometry::SE2(r, v) if v.is_origin() => write!(f, "{r}"),
            Isometry::SE2(r, v) if r.is_identity() => write!(f, "{v}"),
            Isometry::SE2(r, v) => write!(f, "{r}+{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn rotation_validation_and_group_law() {
        assert!(Rotation::new(rat(4, 5), rat(3, 5)).is_ok());
        assert!(Rotation::new(rat(1, 2), rat(1, 2)).is_err());
        let r = Rotation::from_pythagorean(2, 1);
        assert_eq!(r, Rotation::new(rat(3, 5), rat(4, 5)).unwrap());
        assert!(r.compose(&r.inverse()).is_identity());
        let q = Rotation::quarter_turn();
        assert_eq!(q.compose(&q).compose(&q).compose(&q), Rotation::identity());
    }

    #[test]
    fn se2_inverse_and_composition() {
        let g = Isometry::rigid(
            Rotation::new(rat(4, 5), rat(3, 5)).unwrap(),
            Point::new(rat(1, 2), rat(-3, 1)),
        );
        let e = g.compose(&g.inverse()).unwrap();
        assert!(e.is_identity());
        let p = Point::new(rat(7, 3), rat(1, 9));
        let back = g.inverse().apply_point(&g.apply_point(&p).unwrap()).unwrap();
        assert_eq!(back, p);
        let h = Isometry::translation(rat(1, 1), rat(0, 1)).lift_to(GroupKind::SE2).unwrap();
        let gh = g.compose(&h).unwrap();
        assert_eq!(
            gh.apply_point(&p).unwrap(),
            g.apply_point(&h.apply_point(&p).unwrap()).unwrap()
        );
        assert!(g.compose(&Isometry::T1(ExactReal::zero())).is_err());
    }
}
