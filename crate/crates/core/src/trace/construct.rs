use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{angle_class, H1Class, ScissorsAutomorphism, TraceError};
use crate::exactnum::{rat, ExactReal, GeneratorTable, Rational};
use crate::geometry::{GroupKind, Isometry, Point, Polytope, Rotation};

/// What [`construct_class`] should realize.
#[derive(Clone, Debug)]
pub enum ClassRequest {
    /// `y ⊗ x − x ⊗ y` for positive lengths `x`, `y` decidable in `table`.
    T1 { x: ExactReal, y: ExactReal, table: GeneratorTable },
    /// `angle(rotation) ⊗ area`.
    SE2 { rotation: Rotation, area: Rational },
}

impl ClassRequest {
    pub fn kind(&self) -> GroupKind {
        match self {
            ClassRequest::T1 { .. } => GroupKind::T1,
            ClassRequest::SE2 { .. } => GroupKind::SE2,
        }
    }

    /// The class the request names, computed without any geometry.
    pub fn expected(&self) -> H1Class {
        match self {
            ClassRequest::T1 { x, y, .. } => {
                let t = crate::exactnum::tensor(y, x);
                H1Class::T1(&t - &t.transpose())
            }
            ClassRequest::SE2 { rotation, area } => H1Class::SE2(
                angle_class(rotation)
                    .into_iter()
                    .map(|(p, k)| (p, ExactReal::rational(area * Rational::from_integer(k))))
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            ),
        }
    }
}

/// `[0, x + y]` cut at `x`, the two pieces exchanged.
pub fn interval_exchange(x: &ExactReal, y: &ExactReal, table: &GeneratorTable) -> Result<ScissorsAutomorphism, TraceError> {
    let iv = |a: ExactReal, b: ExactReal| Polytope::interval(a, b, table).map_err(crate::geometry::CoverError::from);
    let total = x + y;
    let target = iv(ExactReal::zero(), total.clone())?;
    let pieces = vec![iv(ExactReal::zero(), x.clone())?, iv(x.clone(), total)?];
    let moves = vec![Isometry::translation_1d(y.clone()), Isometry::translation_1d(-x)];
    ScissorsAutomorphism::in_place(GroupKind::T1, table.clone(), target, pieces, moves)
}

/// Piece outlines, drawn from an anchor vertex `p`.
fn piece_outline(name: char, p: &Point, c: &Rational, s: &Rational) -> Vec<Point> {
    let one = Rational::one();
    let w = c + s - &one;
    let cot = c / s;
    let at = |dx: Rational, dy: Rational| Point::new(&p.x + dx, &p.y + dy);
    let z = Rational::zero;
    let half = |x: Rational| x / rat(2, 1);
    let mut out = vec![p.clone()];
    out.extend(match name {
        'a' => vec![at(&one - c, -(&one - c) * &cot), at(&one - c, -half(&one + s - c))],
        'b' => vec![Point::new(w.clone(), z()), Point::new(z(), z())],
        'c' => vec![at(&one - c, z()), at(&one - c, -(&one - c) * &cot)],
        'd' => vec![at(c - &one, z()), at(-w.clone(), half(c * rat(3, 1) - &one - s)), at(-w.clone(), &cot * &w)],
        'e' => vec![
            at(-w.clone(), &cot * &w),
            at(-w.clone(), c.clone()),
            at(-half(w.clone()), c.clone()),
            at(-half(w.clone()), c - half(w.clone())),
            at(z(), c - half(w.clone())),
        ],
        'f' => {
            let h = -half(w.clone());
            vec![at(h.clone(), z()), at(h.clone(), h.clone()), at(z(), h)]
        }
        'g' => vec![at(c.clone(), z()), at(c.clone(), w.clone()), at(&cot * &w, w.clone())],
        'h' => vec![at(z(), c - &one), at(&cot * (c - &one), c - &one)],
        'i' => vec![at(&cot * (c - &one), c - &one), at(half(c - s - &one), c - &one)],
        'j' => vec![at(&cot * &w, w.clone()), at(half(c * rat(3, 1) - &one - s), w.clone()), at(z(), &one - c)],
        'k' => vec![at(-c.clone(), z()), at(-c.clone(), -w.clone())],
        _ => unreachable!("no piece {name}"),
    });
    out
}

/// Anchors of each piece in the rotated and in the axis-aligned picture.
fn piece_anchors(c: &Rational, s: &Rational) -> Vec<(char, Point, Point)> {
    let one = Rational::one();
    let two = rat(2, 1);
    let w = c + s - &one;
    let pt = |x: Rational, y: Rational| Point::new(x, y);
    let a = pt(Rational::zero(), c.clone());
    let b = pt(s.clone(), Rational::zero());
    let cc = pt(c + s, s.clone());
    let d = pt(c.clone(), c + s);
    let r_ac = pt(c * &two + s - &two, (s - c + &one) / &two);
    let r_de = pt(w.clone(), (&one + s - c) / &two);
    let r_gj = pt(s.clone(), one.clone());
    let r_hi = pt(s.clone(), &two - c);
    vec![
        ('a', a.clone(), r_ac.clone()),
        ('b', a.clone(), a.clone()),
        ('c', d.clone(), r_ac),
        ('d', b.clone(), r_de.clone()),
        ('e', cc.clone(), r_de),
        ('f', pt(c + s, c + s), pt(w / &two, c + s)),
        ('g', b, r_gj.clone()),
        ('h', cc, r_hi.clone()),
        ('i', d.clone(), r_hi),
        ('j', a, r_gj),
        ('k', d, pt((c * rat(3, 1) + s - &one) / &two, c + s)),
    ]
}

/// One scaled copy of the square dissection: pieces in the axis-aligned
/// picture, each with the element moving it into the rotated picture.
fn square_block(r: &Rotation, scale: &Rational, offset: &Point) -> Vec<(Vec<Point>, Isometry)> {
    let (c, s) = (r.cos(), r.sin());
    let place = |p: &Point| Point::new(&p.x * scale + &offset.x, &p.y * scale + &offset.y);
    let mut out = Vec::new();
    for (name, left, right) in piece_anchors(c, s) {
        let verts = piece_outline(name, &right, c, s).iter().map(place).collect();
        let shift = left.sub(&right).scale(scale);
        out.push((verts, Isometry::rigid(Rotation::identity(), shift)));
    }
    // the inner unit square, turned about its lower-left corner onto B
    let w = c + s - Rational::one();
    let lower_left = place(&Point::new(w.clone(), Rational::zero()));
    let unit = [(0, 0), (1, 0), (1, 1), (0, 1)]
        .iter()
        .map(|&(dx, dy)| place(&Point::new(&w + rat(dx, 1), rat(dy, 1))))
        .collect();
    let corner_b = place(&Point::new(s.clone(), Rational::zero()));
    let t = corner_b.sub(&r.apply(&lower_left));
    out.push((unit, Isometry::rigid(r.clone(), t)));
    out
}

/// The self-congruence of the square of side `c + s` that turns an inner
/// unit square by `r` and translates the eleven pieces around it. Needs
/// `0 < s < c`.
pub fn rotated_square(r: &Rotation) -> Result<ScissorsAutomorphism, TraceError> {
    rotated_squares(r, &[Rational::one()])
}

/// Side-by-side copies of [`rotated_square`] scaled by each factor.
fn rotated_squares(r: &Rotation, scales: &[Rational]) -> Result<ScissorsAutomorphism, TraceError> {
    if !(r.sin().is_positive() && r.sin() < r.cos()) {
        return Err(TraceError::Unrepresentable(format!("dissection needs 0 < s < c, got {r}")));
    }
    let side = r.cos() + r.sin();
    let table = GeneratorTable::new();
    let mut target: Option<Polytope> = None;
    let mut pieces = Vec::new();
    let mut moves = Vec::new();
    let mut x0 = Rational::zero();
    let cover_err = crate::geometry::CoverError::from;
    for k in scales {
        let offset = Point::new(x0.clone(), Rational::zero());
        let block = Polytope::rect(x0.clone(), Rational::zero(), &x0 + &side * k, &side * k).map_err(cover_err)?;
        target = Some(match target {
            None => block,
            Some(t) => t.union(&block, &table).map_err(cover_err)?,
        });
        for (verts, g) in square_block(r, k, &offset) {
            pieces.push(Polytope::polygon(verts).map_err(cover_err)?);
            moves.push(g);
        }
        x0 += &side * k + Rational::one();
    }
    let target = target.ok_or_else(|| TraceError::Unrepresentable("no blocks".into()))?;
    ScissorsAutomorphism::in_place(GroupKind::SE2, table, target, pieces, moves)
}

/// `n = a² + b² + c² + d²`, found by descending search.
pub fn four_squares(n: &BigInt) -> [BigInt; 4] {
    let zero = BigInt::zero();
    if n.is_zero() {
        return [zero.clone(), zero.clone(), zero.clone(), zero];
    }
    let mut a = n.sqrt();
    while a >= zero {
        let r1 = n - &a * &a;
        let mut b = r1.sqrt().min(a.clone());
        while b >= zero {
            let r2 = &r1 - &b * &b;
            let mut c = r2.sqrt().min(b.clone());
            while c >= zero && &c * &c * 2 >= r2 {
                let r3 = &r2 - &c * &c;
                let d = r3.sqrt();
                if &d * &d == r3 {
                    return [a, b, c, d];
                }
                c -= 1;
            }
            b -= 1;
        }
        a -= 1;
    }
    unreachable!("every natural number is a sum of four squares")
}

fn trivial(kind: GroupKind) -> Result<ScissorsAutomorphism, TraceError> {
    let target = match kind {
        GroupKind::T1 => Polytope::rational_interval(Rational::zero(), Rational::one()).map_err(crate::geometry::CoverError::from)?,
        _ => Polytope::unit_square(),
    };
    ScissorsAutomorphism::identity(kind, GeneratorTable::new(), target)
}

/// A verified automorphism whose trace class is `req.expected()`.
pub fn construct_class(req: &ClassRequest) -> Result<ScissorsAutomorphism, TraceError> {
    match req {
        ClassRequest::T1 { x, y, table } => interval_exchange(x, y, table),
        ClassRequest::SE2 { rotation, area } => {
            // quarter turns are torsion, so move into the first quadrant
            let mut r = rotation.clone();
            while !(r.cos().is_positive() && !r.sin().is_negative()) {
                r = r.compose(&Rotation::quarter_turn());
            }
            if r.is_identity() || area.is_zero() {
                return trivial(GroupKind::SE2);
            }
            let mut q = area.clone();
            if r.sin() > r.cos() {
                // r = quarter turn · reflection of (s, c), whose angle class is the negative
                r = Rotation::new(r.sin().clone(), r.cos().clone()).expect("swapped coordinates stay on the circle");
                q = -q;
            }
            let (n, m) = (q.numer().abs(), q.denom().clone());
            let scales: Vec<Rational> = four_squares(&(&n * &m))
                .into_iter()
                .filter(|k| !k.is_zero())
                .map(|k| Rational::new(k, m.clone()))
                .collect();
            let built = rotated_squares(&r, &scales)?;
            if q.is_negative() {
                built.inverse()
            } else {
                Ok(built)
            }
        }
    }
}
