//! Seeded generators for polytopes, covers, nerve chains, bar chains and
//! morphisms of the category of covers. Everything here is deterministic in
//! the seed, and every cover it returns has been verified.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covercat::{CatError, CoverCategory, FinCatFam, PolCategory, WMorphism};
use crate::exactnum::{rat, DigitStream, ExactReal, GeneratorTable, Rational, SymbolWitness};
use crate::geometry::{
    clip_convex, verify_cover, Cell, ConvexCell2D, CoverCertificate, CoverError, Geometry, GroupKind,
    Interval1D, Isometry, Point, Polytope, Rotation,
};
use crate::trace::{BarChain, NerveSimplex, PolSimplex, TraceError};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Symbols `x = √2 − 1` and `y = π − 3`, with enough digits for every
/// comparison the generators produce.
pub fn symbol_table() -> GeneratorTable {
    let mut t = GeneratorTable::new();
    let x = DigitStream::parse("0.4142135623730950488016887242096980785696718753769").expect("digits");
    let y = DigitStream::parse("0.1415926535897932384626433832795028841971693993751").expect("digits");
    t.declare("x", SymbolWitness::new(rat(2, 5), rat(1, 2), Some(x)).expect("witness")).expect("fresh");
    t.declare("y", SymbolWitness::new(rat(1, 10), rat(1, 5), Some(y)).expect("witness")).expect("fresh");
    t
}

/// `n/d` with `lo·d ≤ n ≤ hi·d`.
pub fn rational(rng: &mut Rng64, lo: i64, hi: i64, d: i64) -> Rational {
    rat(rng.gen_range(lo * d..=hi * d), d)
}

fn small_den(rng: &mut Rng64) -> i64 {
    *[1, 2, 3, 4, 5, 6, 8].choose(rng).expect("nonempty")
}

/// `q + a·x + b·y` with small coefficients.
pub fn real(rng: &mut Rng64) -> ExactReal {
    let d = small_den(rng);
    let q = rational(rng, -2, 2, d);
    let a = rng.gen_range(-2..=2);
    let b = rng.gen_range(-2..=2);
    ExactReal::rational(q) + ExactReal::symbol("x").scale(&rat(a, 1)) + ExactReal::symbol("y").scale(&rat(b, 1))
}

/// A rational rotation `(m² − n², 2mn)/(m² + n²)`, turned by a random
/// number of quarter turns. Never the identity.
pub fn rotation(rng: &mut Rng64) -> Rotation {
    let m = rng.gen_range(2..=7);
    let n = rng.gen_range(1..m);
    let mut r = Rotation::from_pythagorean(m, n);
    for _ in 0..rng.gen_range(0..4) {
        r = r.compose(&Rotation::quarter_turn());
    }
    if r.is_identity() {
        Rotation::from_pythagorean(2, 1)
    } else {
        r
    }
}

pub fn isometry(rng: &mut Rng64, kind: GroupKind) -> Isometry {
    let coord = |rng: &mut Rng64| {
        let d = small_den(rng);
        rational(rng, -3, 3, d)
    };
    match kind {
        GroupKind::T1 => Isometry::translation_1d(real(rng)),
        GroupKind::T2 => Isometry::translation(coord(rng), coord(rng)),
        GroupKind::SE2 => {
            let r = if rng.gen_bool(0.2) { Rotation::identity() } else { rotation(rng) };
            Isometry::rigid(r, Point::new(coord(rng), coord(rng)))
        }
    }
}

fn interval_cell(rng: &mut Rng64, slot: i64, table: &GeneratorTable) -> Interval1D {
    let lo = ExactReal::rational(rational(rng, 4 * slot, 4 * slot + 1, 4));
    let mut len = ExactReal::rational(rational(rng, 1, 2, 6));
    if rng.gen_bool(0.5) {
        len = len + ExactReal::symbol(if rng.gen_bool(0.5) { "x" } else { "y" });
    }
    Interval1D::new(lo.clone(), &lo + &len, table).expect("positive length")
}

fn convex_cell(rng: &mut Rng64, slot: i64) -> ConvexCell2D {
    let x0 = 4 * slot;
    loop {
        let d = small_den(rng);
        let shape = rng.gen_range(0..3);
        let cell = match shape {
            0 => {
                let (a, b) = (rational(rng, x0, x0 + 1, d), rational(rng, 0, 1, d));
                ConvexCell2D::rect(a.clone(), b.clone(), a + rational(rng, 1, 3, d), b + rational(rng, 1, 3, d))
            }
            1 => {
                let p = |rng: &mut Rng64| Point::new(rational(rng, x0, x0 + 3, d), rational(rng, 0, 3, d));
                ConvexCell2D::new(vec![p(rng), p(rng), p(rng)])
            }
            _ => {
                let p = |rng: &mut Rng64, bx: i64, by: i64| {
                    Point::new(rational(rng, x0 + bx, x0 + bx + 1, d), rational(rng, by, by + 1, d))
                };
                ConvexCell2D::new(vec![p(rng, 0, 0), p(rng, 2, 0), p(rng, 2, 2), p(rng, 0, 2)])
            }
        };
        if let Ok(c) = cell {
            return c;
        }
    }
}

/// One to three cells in disjoint slots along the first axis.
pub fn polytope(rng: &mut Rng64, geometry: Geometry, table: &GeneratorTable) -> Polytope {
    let n = rng.gen_range(1..=3);
    let cells: Vec<Cell> = (0..n)
        .map(|slot| match geometry {
            Geometry::E1 => Cell::Interval(interval_cell(rng, slot, table)),
            Geometry::E2 => Cell::Convex(convex_cell(rng, slot)),
        })
        .collect();
    Polytope::new(geometry, cells, table).expect("slots are disjoint")
}

fn split_interval(rng: &mut Rng64, c: &Interval1D, table: &GeneratorTable) -> Vec<Interval1D> {
    let t = rat(rng.gen_range(1..8), 8);
    let mid = c.lo() + &c.length().scale(&t);
    vec![
        Interval1D::new(c.lo().clone(), mid.clone(), table).expect("left part"),
        Interval1D::new(mid, c.hi().clone(), table).expect("right part"),
    ]
}

/// Cuts along a line through the vertex centroid in a random small
/// integer direction.
fn split_convex(rng: &mut Rng64, c: &ConvexCell2D) -> Vec<ConvexCell2D> {
    let n = c.vertices().len() as i64;
    let centre = c.vertices().iter().fold(Point::origin(), |a, v| a.add(v)).scale(&rat(1, n));
    let (dx, dy) = loop {
        let d = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        if d != (0, 0) {
            break d;
        }
    };
    let far = rat(1000, 1);
    let dir = Point::new(rat(dx, 1), rat(dy, 1)).scale(&far);
    let normal = Point::new(rat(-dy, 1), rat(dx, 1)).scale(&far);
    let a = centre.sub(&dir);
    let b = centre.add(&dir);
    let halves = [
        ConvexCell2D::new(vec![a.clone(), b.clone(), b.add(&normal), a.add(&normal)]),
        ConvexCell2D::new(vec![b.clone(), a.clone(), a.sub(&normal), b.sub(&normal)]),
    ];
    let parts: Vec<ConvexCell2D> = halves.iter().filter_map(|h| clip_convex(c, h.as_ref().ok()?)).collect();
    if parts.len() == 2 {
        parts
    } else {
        vec![c.clone()]
    }
}

/// Splits `p` into `pieces` nonempty parts, each a union of cells, after
/// cutting every cell up to `cuts` times.
pub fn subdivide(rng: &mut Rng64, p: &Polytope, pieces: usize, cuts: usize, table: &GeneratorTable) -> Vec<Polytope> {
    let mut cells: Vec<Cell> = p.cells().to_vec();
    let mut rounds = 0;
    while rounds < cuts || cells.len() < pieces {
        let i = rng.gen_range(0..cells.len());
        let parts: Vec<Cell> = match &cells[i] {
            Cell::Interval(c) => split_interval(rng, c, table).into_iter().map(Cell::Interval).collect(),
            Cell::Convex(c) => split_convex(rng, c).into_iter().map(Cell::Convex).collect(),
        };
        cells.splice(i..=i, parts);
        rounds += 1;
    }
    cells.shuffle(rng);
    let mut groups: Vec<Vec<Cell>> = vec![Vec::new(); pieces];
    for (k, c) in cells.into_iter().enumerate() {
        let j = if k < pieces { k } else { rng.gen_range(0..pieces) };
        groups[j].push(c);
    }
    groups.into_iter().map(|cs| Polytope::new(p.geometry(), cs, table).expect("subcells are disjoint")).collect()
}

/// A verified cover of a random target: the target is subdivided and each
/// part `Q_j` is placed as `g_j · (g_j⁻¹ Q_j)`.
pub fn cover(rng: &mut Rng64, kind: GroupKind, table: &GeneratorTable) -> Result<CoverCertificate, CoverError> {
    let target = polytope(rng, kind.geometry(), table);
    let n = rng.gen_range(1..=4);
    let cuts = rng.gen_range(0..=3);
    let mut placements = Vec::new();
    for q in subdivide(rng, &target, n, cuts, table) {
        let g = isometry(rng, kind);
        placements.push((g.clone(), q.apply(&g.inverse())?));
    }
    verify_cover(&placements, &target, table)
}

/// A covering morphism `X' → X` of polytope tuples in which every entry of
/// `X` is cut into up to three moved parts.
pub fn pol_cover_step(
    rng: &mut Rng64,
    cat: &PolCategory,
    x: &[Option<Polytope>],
) -> Result<WMorphism<Option<Polytope>, crate::covercat::PolMorphism>, CatError> {
    let mut parts = Vec::new();
    for (j, p) in x.iter().enumerate() {
        let p = p.as_ref().ok_or_else(|| CatError::Invalid("basepoint in a tuple".into()))?;
        let (n, cuts) = (rng.gen_range(1..=3), rng.gen_range(0..=1));
        for q in subdivide(rng, p, n, cuts, cat.table()) {
            let g = isometry(rng, cat.kind());
            let src = q.apply(&g.inverse()).map_err(CoverError::from)?;
            parts.push((j, Some(src), g));
        }
    }
    parts.shuffle(rng);
    let mut source = Vec::new();
    let mut index = Vec::new();
    let mut components = Vec::new();
    for (j, src, g) in parts {
        components.push(cat.morphism(src.clone(), x[j].clone(), g)?);
        source.push(src);
        index.push(j);
    }
    WMorphism::new(cat, source, x.to_vec(), index, components)
}

/// A nerve simplex `X₀ ← ⋯ ← X_p` of random covers. With `empty` set the
/// whole chain sits over the empty tuple, so the finest tuple is empty too.
pub fn pol_chain(rng: &mut Rng64, cat: &PolCategory, degree: usize, empty: bool) -> Result<PolSimplex, TraceError> {
    let mut x: Vec<Option<Polytope>> = if empty {
        Vec::new()
    } else {
        (0..rng.gen_range(1..=2)).map(|_| Some(polytope(rng, cat.kind().geometry(), cat.table()))).collect()
    };
    let base = x.clone();
    let mut maps = Vec::new();
    for _ in 0..degree {
        let m = pol_cover_step(rng, cat, &x)?;
        x = m.source.clone();
        maps.push(m);
    }
    NerveSimplex::new(cat, base, maps)
}

pub fn word(rng: &mut Rng64, kind: GroupKind, len: usize) -> Vec<Isometry> {
    (0..len).map(|_| if rng.gen_bool(0.15) { kind.identity() } else { isometry(rng, kind) }).collect()
}

/// Up to `terms` random words of length `degree` with random coefficients.
pub fn bar_chain(rng: &mut Rng64, kind: GroupKind, degree: usize, terms: usize) -> BarChain<Isometry> {
    let mut c = BarChain::zero(degree);
    for _ in 0..rng.gen_range(1..=terms) {
        let w = word(rng, kind, degree);
        c.add_term(w, &real(rng));
    }
    c
}

/// Chooses a target tuple of proper objects and, for each entry, one stored
/// covering family into it; the sources are then shuffled.
pub fn fin_w_morphism<C>(rng: &mut Rng64, cat: &C, table: &FinCatFam, max_len: usize) -> Option<WMorphism<usize, usize>>
where
    C: CoverCategory<Object = usize, Morphism = usize>,
{
    let proper: Vec<usize> =
        table.proper_objects().filter(|&a| table.families_into(a).any(|f| !f.maps.is_empty())).collect();
    if proper.is_empty() {
        return None;
    }
    let n = rng.gen_range(1..=max_len);
    let target: Vec<usize> = (0..n).map(|_| *proper.choose(rng).expect("nonempty")).collect();
    let mut parts = Vec::new();
    for (j, &t) in target.iter().enumerate() {
        let fams: Vec<_> = table.families_into(t).filter(|f| !f.maps.is_empty()).collect();
        let fam = fams.choose(rng).expect("a nonempty family");
        parts.extend(fam.maps.iter().map(|&f| (j, f)));
    }
    parts.shuffle(rng);
    let source = parts.iter().map(|&(_, f)| cat.source(&f)).collect();
    let index = parts.iter().map(|&(j, _)| j).collect();
    let components = parts.iter().map(|&(_, f)| f).collect();
    WMorphism::new(cat, source, target, index, components).ok()
}

/// A random integer matrix with entries in `[-bound, bound]`.
pub fn int_matrix(rng: &mut Rng64, rows: usize, cols: usize, bound: i64) -> Vec<Vec<BigInt>> {
    (0..rows).map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::{build_homotopy_orbit, swap_category};

    #[test]
    fn covers_verify() {
        let table = symbol_table();
        let mut r = rng(7);
        for kind in [GroupKind::T1, GroupKind::T2, GroupKind::SE2] {
            for _ in 0..5 {
                let c = cover(&mut r, kind, &table).unwrap();
                assert!(c.contained() && c.disjoint() && c.balanced());
            }
        }
    }

    #[test]
    fn chains_are_valid() {
        let table = symbol_table();
        let mut r = rng(11);
        for kind in [GroupKind::T1, GroupKind::SE2] {
            let cat = PolCategory::new(kind, table.clone());
            let s = pol_chain(&mut r, &cat, 3, false).unwrap();
            assert_eq!(s.degree(), 3);
            assert!(pol_chain(&mut r, &cat, 2, true).unwrap().finest().is_empty());
        }
    }

    #[test]
    fn same_seed_same_output() {
        let table = symbol_table();
        let a = polytope(&mut rng(3), Geometry::E2, &table);
        let b = polytope(&mut rng(3), Geometry::E2, &table);
        assert_eq!(a, b);
    }

    #[test]
    fn orbit_morphisms() {
        let (c, act) = swap_category();
        let orbit = build_homotopy_orbit(&c, &act).unwrap();
        let mut r = rng(5);
        for _ in 0..20 {
            let m = fin_w_morphism(&mut r, &orbit, orbit.category(), 3).unwrap();
            assert!(m.validate(&orbit).is_ok());
        }
    }
}
