use thiserror::Error;

use super::{Cell, GeometryError, Isometry, Polytope};
use crate::exactnum::{ExactError, ExactReal, GeneratorTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("piece {0} is not contained in the target")]
    NotContained(usize),
    #[error("pieces {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("measure gap {0}")]
    MeasureGap(ExactReal),
    #[error("covers have different targets")]
    TargetMismatch,
    #[error(transparent)]
    Geometry(GeometryError),
    #[error(transparent)]
    Exact(ExactError),
}

impl From<GeometryError> for CoverError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Exact(x) => CoverError::Exact(x),
            other => CoverError::Geometry(other),
        }
    }
}

impl From<ExactError> for CoverError {
    fn from(e: ExactError) -> Self {
        CoverError::Exact(e)
    }
}

/// A family `{g_i P_i}` proven to cover its target exactly. Only
/// [`verify_cover`] builds one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    target: Polytope,
    pieces: Vec<(Isometry, Polytope)>,
    moved: Vec<Polytope>,
}

impl CoverCertificate {
    pub fn target(&self) -> &Polytope {
        &self.target
    }

    pub fn pieces(&self) -> &[(Isometry, Polytope)] {
        &self.pieces
    }

    /// `g_i P_i` for each piece.
    pub fn moved(&self) -> &[Polytope] {
        &self.moved
    }

    pub fn contained(&self) -> bool {
        true
    }

    pub fn disjoint(&self) -> bool {
        true
    }

    pub fn balanced(&self) -> bool {
        true
    }
}

/// Checks containment, pairwise interior-disjointness and measure balance,
/// in that order, reporting the first failure.
pub fn verify_cover(
    pieces: &[(Isometry, Polytope)],
    target: &Polytope,
    table: &GeneratorTable,
) -> Result<CoverCertificate, CoverError> {
    let moved: Vec<Polytope> = pieces
        .iter()
        .map(|(g, p)| {
            if p.geometry() != target.geometry() {
                return Err(GeometryError::GeometryMismatch);
            }
            p.apply(g)
        })
        .collect::<Result<_, _>>()?;

    for (i, m) in moved.iter().enumerate() {
        if !is_contained(m, target, table)? {
            return Err(CoverError::NotContained(i));
        }
    }

    for i in 0..moved.len() {
        for j in (i + 1)..moved.len() {
            for a in moved[i].cells() {
                for b in moved[j].cells() {
                    if a.intersect(b, table)?.is_some() {
                        return Err(CoverError::Overlap(i, j));
                    }
                }
            }
        }
    }

    let covered: ExactReal = moved.iter().map(Polytope::measure).sum();
    let gap = &target.measure() - &covered;
    if !gap.is_zero() {
        return Err(CoverError::MeasureGap(gap));
    }

    Ok(CoverCertificate { target: target.clone(), pieces: pieces.to_vec(), moved })
}

/// Whether `p ⊆ target` up to measure zero: every cell of `p` loses no
/// measure when cut by the target's cells.
pub fn is_contained(p: &Polytope, target: &Polytope, table: &GeneratorTable) -> Result<bool, CoverError> {
    if p.geometry() != target.geometry() {
        return Err(GeometryError::GeometryMismatch.into());
    }
    for cell in p.cells() {
        let mut inside = ExactReal::zero();
        for t in target.cells() {
            if let Some(c) = cell.intersect(t, table)? {
                inside += &c.measure();
            }
        }
        if inside != cell.measure() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Position of a cell inside a cover: piece index, then cell index within
/// that piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellRef {
    pub piece: usize,
    pub cell: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedCell {
    pub a: CellRef,
    pub b: CellRef,
    /// Lives in the target's coordinates.
    pub cell: Cell,
}

/// All positive-measure intersections of a moved cell of `a` with a moved
/// cell of `b`.
pub fn common_refinement(
    a: &CoverCertificate,
    b: &CoverCertificate,
    table: &GeneratorTable,
) -> Result<Vec<RefinedCell>, CoverError> {
    if a.target != b.target {
        return Err(CoverError::TargetMismatch);
    }
    let mut out = Vec::new();
    for (pa, ma) in a.moved.iter().enumerate() {
        for (ca, cell_a) in ma.cells().iter().enumerate() {
            for (pb, mb) in b.moved.iter().enumerate() {
                for (cb, cell_b) in mb.cells().iter().enumerate() {
                    if let Some(cell) = cell_a.intersect(cell_b, table)? {
                        out.push(RefinedCell {
                            a: CellRef { piece: pa, cell: ca },
                            b: CellRef { piece: pb, cell: cb },
                            cell,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::geometry::{Geometry, GroupKind, Interval1D};

    fn xy_table() -> GeneratorTable {
        GeneratorTable::new()
            .with_symbol("x", rat(1, 4), rat(1, 3))
            .unwrap()
            .with_symbol("y", rat(1, 2), rat(2, 3))
            .unwrap()
    }

    fn iv(lo: &str, hi: &str, t: &GeneratorTable) -> Polytope {
        Polytope::interval(ExactReal::parse(lo).unwrap(), ExactReal::parse(hi).unwrap(), t).unwrap()
    }

    #[test]
    fn identity_cover() {
        let p = Polytope::unit_square();
        let c = verify_cover(&[(GroupKind::T2.identity(), p.clone())], &p, &GeneratorTable::new())
            .unwrap();
        assert!(c.contained() && c.disjoint() && c.balanced());
    }

    #[test]
    fn interval_exchange_both_orders() {
        let t = xy_table();
        let target = iv("0", "x + y", &t);
        let ix = iv("0", "x", &t);
        let iy = iv("0", "y", &t);
        let x = ExactReal::symbol("x");
        let y = ExactReal::symbol("y");
        let base = [(Isometry::T1(ExactReal::zero()), ix.clone()), (Isometry::T1(x), iy.clone())];
        let swapped = [(Isometry::T1(y), ix), (Isometry::T1(ExactReal::zero()), iy)];
        let a = verify_cover(&base, &target, &t).unwrap();
        let b = verify_cover(&swapped, &target, &t).unwrap();
        let refined = common_refinement(&a, &b, &t).unwrap();
        let mut cells: Vec<String> = refined.iter().map(|r| r.cell.to_string()).collect();
        cells.sort();
        assert_eq!(cells, ["[0, x]", "[x, y]", "[y, x + y]"]);
    }

    #[test]
    fn typed_failures() {
        let t = GeneratorTable::new();
        let target = Polytope::rect(rat(0, 1), rat(0, 1), rat(1, 1), rat(2, 1)).unwrap();
        let sq = Polytope::unit_square();
        let id = GroupKind::T2.identity();
        assert_eq!(
            verify_cover(&[(id.clone(), sq.clone()), (id.clone(), sq.clone())], &target, &t).unwrap_err(),
            CoverError::Overlap(0, 1)
        );
        assert_eq!(
            verify_cover(&[(id.clone(), sq.clone())], &target, &t).unwrap_err(),
            CoverError::MeasureGap(ExactReal::integer(1))
        );
        let far = Isometry::translation(rat(5, 1), rat(0, 1));
        assert_eq!(
            verify_cover(&[(id.clone(), sq.clone()), (far, sq.clone())], &target, &t).unwrap_err(),
            CoverError::NotContained(1)
        );
        let line = Polytope::rational_interval(rat(0, 1), rat(1, 1)).unwrap();
        assert!(matches!(
            verify_cover(&[(id, line)], &target, &t).unwrap_err(),
            CoverError::Geometry(GeometryError::GeometryMismatch)
        ));
    }

    #[test]
    fn refinement_with_itself_returns_own_cells() {
        let t = GeneratorTable::new();
        let target = Polytope::unit_square();
        let left = Polytope::rect(rat(0, 1), rat(0, 1), rat(1, 2), rat(1, 1)).unwrap();
        let id = GroupKind::T2.identity();
        let shift = Isometry::translation(rat(1, 2), rat(0, 1));
        let c = verify_cover(&[(id, left.clone()), (shift, left)], &target, &t).unwrap();
        let r = common_refinement(&c, &c, &t).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| x.a == x.b));
    }

    #[test]
    fn symbolic_overlap_needs_witnesses() {
        let t = GeneratorTable::new()
            .with_symbol("x", rat(1, 2), rat(3, 4))
            .unwrap();
        let a = Interval1D::rational(rat(0, 1), rat(5, 8)).unwrap();
        let target = Polytope::new(
            Geometry::E1,
            vec![Cell::Interval(Interval1D::new(ExactReal::zero(), ExactReal::symbol("x"), &t).unwrap())],
            &t,
        )
        .unwrap();
        let piece = Polytope::new(Geometry::E1, vec![Cell::Interval(a)], &t).unwrap();
        let err = verify_cover(&[(Isometry::T1(ExactReal::zero()), piece)], &target, &t).unwrap_err();
        assert!(matches!(err, CoverError::Exact(ExactError::UndecidableSign { .. })));
    }
}
