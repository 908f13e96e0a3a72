use std::fmt;

use num_traits::{Signed, Zero};

use super::{real, Geometry, GeometryError, Isometry, Point};
use crate::exactnum::{ExactReal, GeneratorTable, Rational, Sign};

/// A closed interval `[lo, hi]` with `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval1D {
    lo: ExactReal,
    hi: ExactReal,
}

impl Interval1D {
    pub fn new(lo: ExactReal, hi: ExactReal, table: &GeneratorTable) -> Result<Self, GeometryError> {
        table.check_declared(&lo)?;
        table.check_declared(&hi)?;
        if table.sign(&(&hi - &lo))? != Sign::Positive {
            return Err(GeometryError::Degenerate(format!("[{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    pub fn rational(lo: Rational, hi: Rational) -> Result<Self, GeometryError> {
        if hi <= lo {
            return Err(GeometryError::Degenerate(format!("[{lo}, {hi}]")));
        }
        Ok(Self { lo: real(lo), hi: real(hi) })
    }

    pub fn lo(&self) -> &ExactReal {
        &self.lo
    }

    pub fn hi(&self) -> &ExactReal {
        &self.hi
    }

    pub fn length(&self) -> ExactReal {
        &self.hi - &self.lo
    }

    pub fn translate(&self, t: &ExactReal) -> Interval1D {
        Interval1D { lo: &self.lo + t, hi: &self.hi + t }
    }
}

impl fmt::Display for Interval1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// The overlap of two intervals, if it has positive length.
pub fn intersect_intervals(
    a: &Interval1D,
    b: &Interval1D,
    table: &GeneratorTable,
) -> Result<Option<Interval1D>, GeometryError> {
    let lo = if table.less(&a.lo, &b.lo)? { &b.lo } else { &a.lo };
    let hi = if table.less(&a.hi, &b.hi)? { &a.hi } else { &b.hi };
    if table.sign(&(hi - lo))? == Sign::Positive {
        Ok(Some(Interval1D { lo: lo.clone(), hi: hi.clone() }))
    } else {
        Ok(None)
    }
}

/// A strictly convex polygon, counterclockwise, starting at its
/// lexicographically least vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConvexCell2D {
    vertices: Vec<Point>,
}

impl ConvexCell2D {
    /// Accepts either orientation. Repeated and collinear vertices are dropped.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        let mut vs = simplify(vertices);
        if vs.len() < 3 {
            return Err(GeometryError::Degenerate(format!("{} vertices after cleanup", vs.len())));
        }
        if signed_area2(&vs).is_negative() {
            vs.reverse();
        }
        let n = vs.len();
        for i in 0..n {
            let (a, b) = (&vs[i], &vs[(i + 1) % n]);
            for (j, v) in vs.iter().enumerate() {
                if j != i && j != (i + 1) % n && !Point::orient(a, b, v).is_positive() {
                    return Err(GeometryError::NotConvex);
                }
            }
        }
        Ok(Self::from_ccw(vs))
    }

    pub fn rect(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Result<Self, GeometryError> {
        Self::new(vec![
            Point::new(x0.clone(), y0.clone()),
            Point::new(x1.clone(), y0),
            Point::new(x1, y1.clone()),
            Point::new(x0, y1),
        ])
    }

    fn from_ccw(mut vs: Vec<Point>) -> Self {
        let start = (0..vs.len()).min_by(|&i, &j| vs[i].cmp(&vs[j])).unwrap_or(0);
        vs.rotate_left(start);
        Self { vertices: vs }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn area(&self) -> Rational {
        signed_area2(&self.vertices) / Rational::from_integer(2.into())
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Images of the vertices under an orientation-preserving map.
    pub fn map(&self, f: impl Fn(&Point) -> Point) -> ConvexCell2D {
        Self::from_ccw(self.vertices.iter().map(f).collect())
    }

    /// Whether `p` lies in the closed cell.
    pub fn contains(&self, p: &Point) -> bool {
        self.edges().all(|(a, b)| !Point::orient(a, b, p).is_negative())
    }
}

impl fmt::Display for ConvexCell2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

fn signed_area2(vs: &[Point]) -> Rational {
    let n = vs.len();
    (0..n).map(|i| vs[i].cross(&vs[(i + 1) % n])).fold(Rational::zero(), |a, b| a + b)
}

/// Drops repeated and collinear vertices until none remain.
fn simplify(mut vs: Vec<Point>) -> Vec<Point> {
    loop {
        let n = vs.len();
        if n < 3 {
            vs.dedup();
            return vs;
        }
        let drop = (0..n).find(|&i| {
            let prev = &vs[(i + n - 1) % n];
            let next = &vs[(i + 1) % n];
            vs[i] == *next || Point::orient(prev, &vs[i], next).is_zero()
        });
        match drop {
            Some(i) => {
                vs.remove(i);
            }
            None => return vs,
        }
    }
}

/// Sutherland–Hodgman clip of `subject` against `clip`. Returns the
/// intersection when it has positive area.
pub fn clip_convex(subject: &ConvexCell2D, clip: &ConvexCell2D) -> Option<ConvexCell2D> {
    let mut poly: Vec<Point> = subject.vertices.clone();
    for (p, q) in clip.edges() {
        if poly.is_empty() {
            return None;
        }
        let side = |v: &Point| Point::orient(p, q, v);
        let mut out = Vec::with_capacity(poly.len() + 1);
        let n = poly.len();
        for i in 0..n {
            let u = &poly[i];
            let v = &poly[(i + 1) % n];
            let (su, sv) = (side(u), side(v));
            if !su.is_negative() {
                out.push(u.clone());
            }
            if (su.is_positive() && sv.is_negative()) || (su.is_negative() && sv.is_positive()) {
                let t = &su / (&su - &sv);
                out.push(u.add(&v.sub(u).scale(&t)));
            }
        }
        poly = out;
    }
    ConvexCell2D::new(poly).ok()
}

/// Splits a simple polygon (either orientation) into convex cells. Convex
/// input comes back as a single cell; otherwise ears are clipped.
pub fn triangulate(vertices: Vec<Point>) -> Result<Vec<ConvexCell2D>, GeometryError> {
    let mut vs = simplify(vertices);
    if vs.len() < 3 {
        return Err(GeometryError::Degenerate("polygon has no area".into()));
    }
    if signed_area2(&vs).is_negative() {
        vs.reverse();
    }
    if !is_simple(&vs) {
        return Err(GeometryError::NotSimple);
    }
    if let Ok(cell) = ConvexCell2D::new(vs.clone()) {
        return Ok(vec![cell]);
    }
    let mut out = Vec::new();
    while vs.len() > 3 {
        let n = vs.len();
        let ear = (0..n).find(|&i| {
            let (a, b, c) = (&vs[(i + n - 1) % n], &vs[i], &vs[(i + 1) % n]);
            Point::orient(a, b, c).is_positive()
                && vs.iter().all(|v| v == a || v == b || v == c || !in_closed_triangle(a, b, c, v))
        });
        let i = ear.ok_or(GeometryError::NotSimple)?;
        let n = vs.len();
        let tri = vec![vs[(i + n - 1) % n].clone(), vs[i].clone(), vs[(i + 1) % n].clone()];
        out.push(ConvexCell2D::new(tri)?);
        vs.remove(i);
        vs = simplify(vs);
        if vs.len() < 3 {
            break;
        }
    }
    if vs.len() == 3 {
        out.push(ConvexCell2D::new(vs)?);
    }
    Ok(out)
}

fn in_closed_triangle(a: &Point, b: &Point, c: &Point, p: &Point) -> bool {
    !Point::orient(a, b, p).is_negative()
        && !Point::orient(b, c, p).is_negative()
        && !Point::orient(c, a, p).is_negative()
}

fn segments_touch(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = Point::orient(a, b, c);
    let o2 = Point::orient(a, b, d);
    let o3 = Point::orient(c, d, a);
    let o4 = Point::orient(c, d, b);
    let straddle = |x: &Rational, y: &Rational| {
        (x.is_positive() && y.is_negative()) || (x.is_negative() && y.is_positive())
    };
    if straddle(&o1, &o2) && straddle(&o3, &o4) {
        return true;
    }
    let on = |p: &Point, q: &Point, r: &Point, o: &Rational| {
        o.is_zero()
            && r.x >= p.x.clone().min(q.x.clone())
            && r.x <= p.x.clone().max(q.x.clone())
            && r.y >= p.y.clone().min(q.y.clone())
            && r.y <= p.y.clone().max(q.y.clone())
    };
    on(a, b, c, &o1) || on(a, b, d, &o2) || on(c, d, a, &o3) || on(c, d, b, &o4)
}

fn is_simple(vs: &[Point]) -> bool {
    let n = vs.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            if segments_touch(&vs[i], &vs[(i + 1) % n], &vs[j], &vs[(j + 1) % n]) {
                return false;
            }
        }
    }
    true
}

/// One cell of a polytope.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Interval(Interval1D),
    Convex(ConvexCell2D),
}

impl Cell {
    pub fn geometry(&self) -> Geometry {
        match self {
            Cell::Interval(_) => Geometry::E1,
            Cell::Convex(_) => Geometry::E2,
        }
    }

    pub fn measure(&self) -> ExactReal {
        match self {
            Cell::Interval(i) => i.length(),
            Cell::Convex(c) => real(c.area()),
        }
    }

    pub fn apply(&self, g: &Isometry) -> Result<Cell, GeometryError> {
        match (self, g) {
            (Cell::Interval(i), Isometry::T1(t)) => Ok(Cell::Interval(i.translate(t))),
            (Cell::Convex(c), Isometry::T2(_) | Isometry::SE2(..)) => {
                Ok(Cell::Convex(c.map(|p| g.apply_point(p).expect("planar isometry"))))
            }
            _ => Err(GeometryError::GeometryMismatch),
        }
    }

    /// The intersection, when it has positive measure.
    pub fn intersect(&self, other: &Cell, table: &GeneratorTable) -> Result<Option<Cell>, GeometryError> {
        match (self, other) {
            (Cell::Interval(a), Cell::Interval(b)) => {
                Ok(intersect_intervals(a, b, table)?.map(Cell::Interval))
            }
            (Cell::Convex(a), Cell::Convex(b)) => Ok(clip_convex(a, b).map(Cell::Convex)),
            _ => Err(GeometryError::GeometryMismatch),
        }
    }

    pub fn as_interval(&self) -> Option<&Interval1D> {
        match self {
            Cell::Interval(i) => Some(i),
            Cell::Convex(_) => None,
        }
    }

    pub fn as_convex(&self) -> Option<&ConvexCell2D> {
        match self {
            Cell::Convex(c) => Some(c),
            Cell::Interval(_) => None,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Interval(i) => write!(f, "{i}"),
            Cell::Convex(c) => write!(f, "{c}"),
        }
    }
}
