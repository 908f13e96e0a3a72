//! Measures: functions on polytopes that add up over every cover.
//!
//! Length, area and the Hadwiger invariants are the shipped examples. The
//! cell count is included as a deliberately broken measure for negative
//! tests. On finite categories the universal measure is the class map into
//! `K₀`, and [`universal_check`] factors any other measure through it.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::covercat::{universal_measure_check, CatError, FinCatFam, MeasureFactorization, MeasureValue};
use crate::exactnum::{ExactReal, Rational};
use crate::geometry::{signed_edges, CoverCertificate, Direction, Geometry, GeometryError, GroupKind, Polytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("measure {measure} is not defined on {geometry} polytopes")]
    GeometryMismatch { measure: String, geometry: Geometry },
    #[error("measure {measure} is not {group}-invariant")]
    NotEquivariant { measure: String, group: GroupKind },
    #[error("unknown measure {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    Length,
    Area,
    /// Signed length of the edges parallel to a direction.
    Hadwiger(Direction),
    /// Number of cells. Not additive.
    CellCount,
}

/// A polytope measure with its value space (the span of the generators of
/// [`ExactReal`]) and the groups it is invariant under. All shipped measures
/// use the trivial action on the value space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Measure {
    kind: MeasureKind,
}

impl Measure {
    pub fn length() -> Self {
        Self { kind: MeasureKind::Length }
    }

    pub fn area() -> Self {
        Self { kind: MeasureKind::Area }
    }

    pub fn hadwiger(direction: Direction) -> Self {
        Self { kind: MeasureKind::Hadwiger(direction) }
    }

    pub fn cell_count() -> Self {
        Self { kind: MeasureKind::CellCount }
    }

    pub fn kind(&self) -> &MeasureKind {
        &self.kind
    }

    pub fn name(&self) -> String {
        match &self.kind {
            MeasureKind::Length => "length".into(),
            MeasureKind::Area => "area".into(),
            MeasureKind::Hadwiger(d) => {
                let (p, q) = d.components();
                format!("hadwiger:{p},{q}")
            }
            MeasureKind::CellCount => "cell-count".into(),
        }
    }

    /// `None` when the measure makes sense in every geometry.
    pub fn geometry(&self) -> Option<Geometry> {
        match self.kind {
            MeasureKind::Length => Some(Geometry::E1),
            MeasureKind::Area | MeasureKind::Hadwiger(_) => Some(Geometry::E2),
            MeasureKind::CellCount => None,
        }
    }

    /// Groups `G` with `μ(gP) = μ(P)` for all `g ∈ G`.
    pub fn invariant_under(&self) -> &'static [GroupKind] {
        match self.kind {
            MeasureKind::Length => &[GroupKind::T1],
            MeasureKind::Area => &[GroupKind::T2, GroupKind::SE2],
            MeasureKind::Hadwiger(_) => &[GroupKind::T2],
            MeasureKind::CellCount => &[GroupKind::T1, GroupKind::T2, GroupKind::SE2],
        }
    }

    pub fn require_equivariant(&self, group: GroupKind) -> Result<(), MeasureError> {
        if self.invariant_under().contains(&group) {
            Ok(())
        } else {
            Err(MeasureError::NotEquivariant { measure: self.name(), group })
        }
    }

    pub fn eval(&self, p: &Polytope) -> Result<ExactReal, MeasureError> {
        if let Some(g) = self.geometry() {
            if g != p.geometry() {
                return Err(MeasureError::GeometryMismatch { measure: self.name(), geometry: p.geometry() });
            }
        }
        Ok(match &self.kind {
            MeasureKind::Length | MeasureKind::Area => p.measure(),
            MeasureKind::Hadwiger(v) => hadwiger(p, v)?,
            MeasureKind::CellCount => ExactReal::integer(p.cells().len() as i64),
        })
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Measure {
    type Err = MeasureError;

    /// `length`, `area`, `cell-count` or `hadwiger:<a>,<b>`.
    fn from_str(s: &str) -> Result<Self, MeasureError> {
        let unknown = || MeasureError::Unknown(s.to_string());
        match s.trim() {
            "length" => Ok(Self::length()),
            "area" => Ok(Self::area()),
            "cell-count" => Ok(Self::cell_count()),
            other => {
                let dir = other.strip_prefix("hadwiger:").ok_or_else(unknown)?;
                let (a, b) = dir.split_once(',').ok_or_else(unknown)?;
                let a: i64 = a.trim().parse().map_err(|_| unknown())?;
                let b: i64 = b.trim().parse().map_err(|_| unknown())?;
                Ok(Self::hadwiger(Direction::new(a, b)?))
            }
        }
    }
}

pub fn length_measure(p: &Polytope) -> Result<ExactReal, MeasureError> {
    Measure::length().eval(p)
}

pub fn area_measure(p: &Polytope) -> Result<ExactReal, MeasureError> {
    Measure::area().eval(p)
}

/// `Σ sign·length` over the cell edges parallel to `v`. Interior edges shared
/// by two cells cancel.
pub fn hadwiger(p: &Polytope, v: &Direction) -> Result<ExactReal, GeometryError> {
    let mut total = ExactReal::zero();
    for e in signed_edges(p)? {
        if &e.direction == v {
            total = total.add_scale(&Rational::from_integer(e.sign.into()), &e.length);
        }
    }
    Ok(total)
}

/// Values on both sides of the additivity equation for one cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureReport {
    pub measure: String,
    pub target: ExactReal,
    pub pieces: Vec<ExactReal>,
    /// `μ(target) − Σ μ(pieces)`.
    pub defect: ExactReal,
}

impl MeasureReport {
    pub fn holds(&self) -> bool {
        self.defect.is_zero()
    }
}

/// Evaluates `μ` on the target and on each (unmoved) piece of a verified
/// cover.
pub fn verify_measure(mu: &Measure, cover: &CoverCertificate) -> Result<MeasureReport, MeasureError> {
    let target = mu.eval(cover.target())?;
    let pieces = cover.pieces().iter().map(|(_, p)| mu.eval(p)).collect::<Result<Vec<_>, _>>()?;
    let sum: ExactReal = pieces.iter().sum();
    let defect = &target - &sum;
    Ok(MeasureReport { measure: mu.name(), target, pieces, defect })
}

/// Factors a measure on a finite category, given object by object, through
/// the class map `ob C → K₀(C)`.
pub fn universal_check<V: MeasureValue>(
    c: &FinCatFam,
    mu: impl Fn(usize) -> V,
    zero: &V,
) -> Result<MeasureFactorization<V>, CatError> {
    let values: Vec<V> = c.proper_objects().map(mu).collect();
    universal_measure_check(c, &values, zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::{k0, toy_two_object, K0Class};
    use crate::exactnum::{rat, sqrt_int, GeneratorTable};
    use crate::geometry::{verify_cover, Isometry, Point, Rotation};

    fn pt(x: i64, y: i64) -> Point {
        Point::new(rat(x, 1), rat(y, 1))
    }

    #[test]
    fn names_round_trip() {
        for s in ["length", "area", "cell-count", "hadwiger:1,-1", "hadwiger:0,1"] {
            assert_eq!(s.parse::<Measure>().unwrap().name(), s);
        }
        assert_eq!("hadwiger:-2,2".parse::<Measure>().unwrap().name(), "hadwiger:1,-1");
        assert!("volume".parse::<Measure>().is_err());
        assert!("hadwiger:0,0".parse::<Measure>().is_err());
    }

    #[test]
    fn basic_values() {
        let t = GeneratorTable::new().with_symbol("x", rat(1, 4), rat(1, 3)).unwrap();
        let ix = Polytope::interval(ExactReal::zero(), ExactReal::symbol("x"), &t).unwrap();
        assert_eq!(length_measure(&ix).unwrap(), ExactReal::symbol("x"));
        assert_eq!(area_measure(&Polytope::unit_square()).unwrap(), ExactReal::one());
        assert!(matches!(area_measure(&ix), Err(MeasureError::GeometryMismatch { .. })));
        let h = Direction::new(1, 0).unwrap();
        assert!(hadwiger(&Polytope::unit_square(), &h).unwrap().is_zero());
        let tri = Polytope::polygon(vec![pt(0, 0), pt(1, 0), pt(0, 1)]).unwrap();
        let diag = Direction::new(1, -1).unwrap();
        assert_eq!(hadwiger(&tri, &diag).unwrap(), -sqrt_int(2));
        assert_eq!(hadwiger(&tri, &h).unwrap(), ExactReal::one());
    }

    #[test]
    fn halves_of_the_square() {
        let half = Polytope::rect(rat(0, 1), rat(0, 1), rat(1, 1), rat(1, 2)).unwrap();
        let up = Isometry::translation(rat(0, 1), rat(1, 2));
        let cover =
            verify_cover(&[(GroupKind::T2.identity(), half.clone()), (up, half)], &Polytope::unit_square(), &GeneratorTable::new())
                .unwrap();
        for m in ["area", "hadwiger:1,0", "hadwiger:0,1", "hadwiger:1,1"] {
            let r = verify_measure(&m.parse().unwrap(), &cover).unwrap();
            assert!(r.holds(), "{m}: {}", r.defect);
        }
        let r = verify_measure(&Measure::cell_count(), &cover).unwrap();
        assert_eq!(r.defect, ExactReal::integer(-1));
    }

    #[test]
    fn hadwiger_sees_rotations() {
        let tri = Polytope::polygon(vec![pt(0, 0), pt(1, 0), pt(0, 1)]).unwrap();
        let g = Isometry::rigid(Rotation::from_pythagorean(2, 1), Point::origin());
        let h = Direction::new(1, 0).unwrap();
        assert_ne!(hadwiger(&tri, &h).unwrap(), hadwiger(&tri.apply(&g).unwrap(), &h).unwrap());
        assert!(Measure::hadwiger(h).require_equivariant(GroupKind::SE2).is_err());
        assert!(Measure::area().require_equivariant(GroupKind::SE2).is_ok());
    }

    #[test]
    fn universal_factorizations() {
        let c = toy_two_object();
        let a = c.object_by_name("a").unwrap();
        let ok = universal_check(&c, |o| ExactReal::integer(if o == a { 6 } else { 3 }), &ExactReal::zero()).unwrap();
        assert_eq!(ok.images, vec![ExactReal::integer(3)]);
        let bad = universal_check(&c, |o| ExactReal::integer(if o == a { 5 } else { 3 }), &ExactReal::zero());
        assert!(matches!(bad, Err(CatError::InconsistentMeasure(_))));

        let p = k0(&c);
        let classes = |o: usize| p.class_of(o).unwrap();
        let id = universal_check(&c, classes, &p.zero_class()).unwrap();
        let unit: Vec<K0Class> = (0..p.moduli().len())
            .map(|i| {
                let mut e = p.zero_class();
                e.coords[i] = 1.into();
                e
            })
            .collect();
        assert_eq!(id.images, unit);
    }
}
