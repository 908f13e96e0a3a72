use std::fmt;

use super::{triangulate, Cell, ConvexCell2D, Geometry, GeometryError, Interval1D, Isometry, Point};
use crate::exactnum::{rat, ExactReal, GeneratorTable, Rational};

/// A finite union of cells with pairwise disjoint interiors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polytope {
    geometry: Geometry,
    cells: Vec<Cell>,
}

impl Polytope {
    pub fn new(geometry: Geometry, cells: Vec<Cell>, table: &GeneratorTable) -> Result<Self, GeometryError> {
        if cells.is_empty() {
            return Err(GeometryError::Degenerate("polytope with no cells".into()));
        }
        if cells.iter().any(|c| c.geometry() != geometry) {
            return Err(GeometryError::GeometryMismatch);
        }
        for i in 0..cells.len() {
            for j in (i + 1)..cells.len() {
                if cells[i].intersect(&cells[j], table)?.is_some() {
                    return Err(GeometryError::CellOverlap(i, j));
                }
            }
        }
        Ok(Self { geometry, cells })
    }

    pub fn interval(lo: ExactReal, hi: ExactReal, table: &GeneratorTable) -> Result<Self, GeometryError> {
        Ok(Self { geometry: Geometry::E1, cells: vec![Cell::Interval(Interval1D::new(lo, hi, table)?)] })
    }

    pub fn rational_interval(lo: Rational, hi: Rational) -> Result<Self, GeometryError> {
        Ok(Self { geometry: Geometry::E1, cells: vec![Cell::Interval(Interval1D::rational(lo, hi)?)] })
    }

    pub fn convex_cells(cells: Vec<ConvexCell2D>) -> Result<Self, GeometryError> {
        Self::new(Geometry::E2, cells.into_iter().map(Cell::Convex).collect(), &GeneratorTable::new())
    }

    pub fn rect(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Result<Self, GeometryError> {
        Self::convex_cells(vec![ConvexCell2D::rect(x0, y0, x1, y1)?])
    }

    pub fn unit_square() -> Self {
        Self::rect(rat(0, 1), rat(0, 1), rat(1, 1), rat(1, 1)).expect("unit square")
    }

    /// A simple polygon, split into convex cells when needed.
    pub fn polygon(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        Self::convex_cells(triangulate(vertices)?)
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn measure(&self) -> ExactReal {
        self.cells.iter().map(Cell::measure).sum()
    }

    pub fn apply(&self, g: &Isometry) -> Result<Polytope, GeometryError> {
        if g.kind().geometry() != self.geometry {
            return Err(GeometryError::GeometryMismatch);
        }
        let cells = self.cells.iter().map(|c| c.apply(g)).collect::<Result<_, _>>()?;
        Ok(Self { geometry: self.geometry, cells })
    }

    /// The union with a polytope whose cells meet ours in measure zero.
    pub fn union(&self, other: &Polytope, table: &GeneratorTable) -> Result<Polytope, GeometryError> {
        if self.geometry != other.geometry {
            return Err(GeometryError::GeometryMismatch);
        }
        let mut cells = self.cells.clone();
        cells.extend(other.cells.iter().cloned());
        Self::new(self.geometry, cells, table)
    }
}

/// Total length or area.
pub fn measure_of(p: &Polytope) -> ExactReal {
    p.measure()
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.geometry)?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::geometry::Rotation;

    #[test]
    fn translating_a_symbolic_interval() {
        let t = GeneratorTable::new()
            .with_symbol("x", rat(1, 4), rat(1, 2))
            .unwrap()
            .with_symbol("y", rat(1, 4), rat(1, 2))
            .unwrap();
        let x = ExactReal::symbol("x");
        let y = ExactReal::symbol("y");
        let p = Polytope::interval(ExactReal::zero(), x.clone(), &t).unwrap();
        let moved = p.apply(&Isometry::T1(y.clone())).unwrap();
        let i = moved.cells()[0].as_interval().unwrap();
        assert_eq!(i.lo(), &y);
        assert_eq!(i.hi(), &(&x + &y));
        assert_eq!(measure_of(&moved), x);
    }

    #[test]
    fn rotating_the_unit_square() {
        let r = Rotation::new(rat(4, 5), rat(3, 5)).unwrap();
        let q = Polytope::unit_square().apply(&Isometry::rigid(r, Point::origin())).unwrap();
        let c = q.cells()[0].as_convex().unwrap();
        assert!(c.vertices().contains(&Point::new(rat(4, 5), rat(3, 5))));
        assert_eq!(measure_of(&q), ExactReal::integer(1));
        let outer = Polytope::rect(rat(0, 1), rat(0, 1), rat(7, 5), rat(7, 5)).unwrap();
        assert_eq!(measure_of(&outer), ExactReal::rational(rat(49, 25)));
    }

    #[test]
    fn overlapping_cells_are_rejected() {
        let a = ConvexCell2D::rect(rat(0, 1), rat(0, 1), rat(1, 1), rat(1, 1)).unwrap();
        assert_eq!(
            Polytope::convex_cells(vec![a.clone(), a]).unwrap_err(),
            GeometryError::CellOverlap(0, 1)
        );
        let tri = Polytope::polygon(vec![
            Point::new(rat(0, 1), rat(0, 1)),
            Point::new(rat(1, 1), rat(0, 1)),
            Point::new(rat(0, 1), rat(1, 1)),
        ])
        .unwrap();
        assert_eq!(measure_of(&tri), ExactReal::rational(rat(1, 2)));
        let t1 = Polytope::rational_interval(rat(0, 1), rat(1, 1)).unwrap();
        assert!(t1.apply(&Isometry::translation(rat(1, 1), rat(0, 1))).is_err());
    }
}
