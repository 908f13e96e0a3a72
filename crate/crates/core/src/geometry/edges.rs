use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Cell, GeometryError, Polytope};
use crate::exactnum::{sqrt_canonical, ExactReal, Rational};

/// A primitive integer vector whose first nonzero coordinate is positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    p: BigInt,
    q: BigInt,
}

impl Direction {
    /// Canonical direction of the line spanned by `(dx, dy)`, together with the
    /// rational `t` with `(dx, dy) = t·(p, q)`.
    pub fn of_vector(dx: &Rational, dy: &Rational) -> Result<(Direction, Rational), GeometryError> {
        if dx.is_zero() && dy.is_zero() {
            return Err(GeometryError::Degenerate("zero vector has no direction".into()));
        }
        let l = dx.denom().lcm(dy.denom());
        let a = dx.numer() * (&l / dx.denom());
        let b = dy.numer() * (&l / dy.denom());
        let g = a.gcd(&b);
        let (mut p, mut q) = (a / &g, b / &g);
        if p.is_negative() || (p.is_zero() && q.is_negative()) {
            p = -p;
            q = -q;
        }
        let t = if p.is_zero() { dy / Rational::from_integer(q.clone()) } else { dx / Rational::from_integer(p.clone()) };
        Ok((Direction { p, q }, t))
    }

    pub fn new(p: i64, q: i64) -> Result<Direction, GeometryError> {
        Ok(Self::of_vector(&Rational::from_integer(p.into()), &Rational::from_integer(q.into()))?.0)
    }

    pub fn components(&self) -> (&BigInt, &BigInt) {
        (&self.p, &self.q)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedEdge {
    pub direction: Direction,
    pub length: ExactReal,
    /// `+1` when the cell lies to the left of `direction`.
    pub sign: i8,
}

/// One record per boundary edge of every cell.
pub fn signed_edges(p: &Polytope) -> Result<Vec<SignedEdge>, GeometryError> {
    let mut out = Vec::new();
    for cell in p.cells() {
        let Cell::Convex(c) = cell else {
            return Err(GeometryError::GeometryMismatch);
        };
        for (a, b) in c.edges() {
            let d = b.sub(a);
            let (direction, t) = Direction::of_vector(&d.x, &d.y)?;
            let norm2 = Rational::from_integer(&direction.p * &direction.p + &direction.q * &direction.q);
            let length = sqrt_canonical(&norm2)?.scale(&t.abs());
            // the interior lies left of a counterclockwise edge
            let sign = if t.is_positive() { 1 } else { -1 };
            out.push(SignedEdge { direction, length, sign });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, sqrt_int};
    use crate::geometry::Point;

    #[test]
    fn canonical_directions() {
        let (d, t) = Direction::of_vector(&rat(-3, 2), &rat(3, 4)).unwrap();
        assert_eq!(d, Direction::new(2, -1).unwrap());
        assert_eq!(t, rat(-3, 4));
        assert_eq!(Direction::new(0, -5).unwrap(), Direction::new(0, 1).unwrap());
        assert!(Direction::new(0, 0).is_err());
    }

    #[test]
    fn unit_square_edges() {
        let e = signed_edges(&Polytope::unit_square()).unwrap();
        assert_eq!(e.len(), 4);
        let h: Vec<i8> = e.iter().filter(|x| x.direction == Direction::new(1, 0).unwrap()).map(|x| x.sign).collect();
        let v: Vec<i8> = e.iter().filter(|x| x.direction == Direction::new(0, 1).unwrap()).map(|x| x.sign).collect();
        assert_eq!(h.iter().map(|&s| s as i32).sum::<i32>(), 0);
        assert_eq!(v.iter().map(|&s| s as i32).sum::<i32>(), 0);
        assert_eq!((h.len(), v.len()), (2, 2));
    }

    #[test]
    fn hypotenuse() {
        let tri = Polytope::polygon(vec![
            Point::new(rat(0, 1), rat(0, 1)),
            Point::new(rat(1, 1), rat(0, 1)),
            Point::new(rat(0, 1), rat(1, 1)),
        ])
        .unwrap();
        let e = signed_edges(&tri).unwrap();
        let hyp = e.iter().find(|x| x.direction == Direction::new(1, -1).unwrap()).unwrap();
        assert_eq!(hyp.length, sqrt_int(2));
        // interior is below-left of the hypotenuse, i.e. right of (1, −1)
        assert_eq!(hyp.sign, -1);
        let line = Polytope::rational_interval(rat(0, 1), rat(1, 1)).unwrap();
        assert!(signed_edges(&line).is_err());
    }
}
