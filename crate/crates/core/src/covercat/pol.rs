use super::{CatError, CoverCategory, Group, OrbitCategory};
use crate::exactnum::GeneratorTable;
use crate::geometry::{is_contained, verify_cover, CoverError, GeometryError, GroupKind, Isometry, Polytope};

/// `g: A → B` with `gA ⊆ B`. An endpoint of `None` is the empty polytope,
/// the basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolMorphism {
    pub source: Option<Polytope>,
    pub target: Option<Polytope>,
    pub g: Isometry,
}

/// Polytopes of one geometry under one isometry group. Covers are checked by
/// [`verify_cover`] against the generator table.
#[derive(Clone, Debug)]
pub struct PolCategory {
    group: GroupKind,
    table: GeneratorTable,
}

impl PolCategory {
    pub fn new(group: GroupKind, table: GeneratorTable) -> Self {
        Self { group, table }
    }

    pub fn kind(&self) -> GroupKind {
        self.group
    }

    pub fn table(&self) -> &GeneratorTable {
        &self.table
    }

    /// Checks the group and the containment `gA ⊆ B`.
    pub fn morphism(&self, source: Option<Polytope>, target: Option<Polytope>, g: Isometry) -> Result<PolMorphism, CatError> {
        if g.kind() != self.group {
            return Err(CoverError::Geometry(GeometryError::GroupMismatch { expected: self.group, found: g.kind() }).into());
        }
        match (&source, &target) {
            (None, _) => {}
            (Some(_), None) => return Err(CatError::Invalid("no map from a polytope to the empty set".into())),
            (Some(a), Some(b)) => {
                let moved = a.apply(&g).map_err(CoverError::from)?;
                if !is_contained(&moved, b, &self.table)? {
                    return Err(CatError::Invalid("gA is not contained in B".into()));
                }
            }
        }
        Ok(PolMorphism { source, target, g })
    }
}

impl Group for GroupKind {
    type Elem = Isometry;

    fn identity(&self) -> Isometry {
        GroupKind::identity(*self)
    }

    fn mul(&self, a: &Isometry, b: &Isometry) -> Isometry {
        a.compose(b).expect("elements of one group compose")
    }

    fn inverse(&self, a: &Isometry) -> Isometry {
        a.inverse()
    }
}

impl CoverCategory for PolCategory {
    type Object = Option<Polytope>;
    type Morphism = PolMorphism;

    fn source(&self, f: &PolMorphism) -> Option<Polytope> {
        f.source.clone()
    }

    fn target(&self, f: &PolMorphism) -> Option<Polytope> {
        f.target.clone()
    }

    fn identity(&self, a: &Option<Polytope>) -> PolMorphism {
        PolMorphism { source: a.clone(), target: a.clone(), g: self.group.identity() }
    }

    fn compose(&self, f: &PolMorphism, g: &PolMorphism) -> Result<PolMorphism, CatError> {
        if g.target != f.source {
            return Err(CatError::Mismatch("maps are not composable".into()));
        }
        let h = f.g.compose(&g.g).map_err(CoverError::from)?;
        Ok(PolMorphism { source: g.source.clone(), target: f.target.clone(), g: h })
    }

    fn is_basepoint(&self, a: &Option<Polytope>) -> bool {
        a.is_none()
    }

    fn is_covering(&self, target: &Option<Polytope>, family: &[PolMorphism]) -> Result<bool, CatError> {
        if family.iter().any(|f| &f.target != target) {
            return Ok(false);
        }
        let pieces: Vec<(Isometry, Polytope)> =
            family.iter().filter_map(|f| f.source.clone().map(|p| (f.g.clone(), p))).collect();
        let Some(t) = target else {
            return Ok(pieces.is_empty());
        };
        match verify_cover(&pieces, t, &self.table) {
            Ok(_) => Ok(true),
            Err(CoverError::NotContained(_) | CoverError::Overlap(..) | CoverError::MeasureGap(_)) => Ok(false),
            Err(e) => Err(e.into()),
        }
    }
}

impl OrbitCategory for PolCategory {
    type Group = GroupKind;

    fn group(&self) -> &GroupKind {
        &self.group
    }

    fn group_part(&self, f: &PolMorphism) -> Isometry {
        f.g.clone()
    }

    fn split(&self, f: &PolMorphism) -> Result<(PolMorphism, PolMorphism), CatError> {
        let moved = match &f.source {
            Some(a) => Some(a.apply(&f.g).map_err(CoverError::from)?),
            None => None,
        };
        let mv = PolMorphism { source: f.source.clone(), target: moved.clone(), g: f.g.clone() };
        let sub = PolMorphism { source: moved, target: f.target.clone(), g: self.group.identity() };
        Ok((mv, sub))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::{compose_w, factor_move_sub, WMorphism};
    use crate::exactnum::rat;

    #[test]
    fn halves_cover_the_square() {
        let cat = PolCategory::new(GroupKind::T2, GeneratorTable::new());
        let sq = Some(Polytope::unit_square());
        let half = Some(Polytope::rect(rat(0, 1), rat(0, 1), rat(1, 2), rat(1, 1)).unwrap());
        let stay = cat.morphism(half.clone(), sq.clone(), GroupKind::T2.identity()).unwrap();
        let shift = cat.morphism(half.clone(), sq.clone(), Isometry::translation(rat(1, 2), rat(0, 1))).unwrap();
        assert!(cat.is_covering(&sq, &[stay.clone(), shift.clone()]).unwrap());
        assert!(!cat.is_covering(&sq, &[stay.clone(), stay.clone()]).unwrap());
        assert!(cat.morphism(half.clone(), sq.clone(), Isometry::translation(rat(1, 1), rat(0, 1))).is_err());

        let m = WMorphism::new(&cat, vec![half.clone(), half.clone()], vec![sq.clone()], vec![0, 0], vec![stay, shift])
            .unwrap();
        let (mv, sub) = factor_move_sub(&cat, &m).unwrap();
        mv.validate(&cat).unwrap();
        sub.validate(&cat).unwrap();
        assert_eq!(compose_w(&cat, &sub, &mv).unwrap(), m);
    }

    #[test]
    fn empty_family_covers_only_the_basepoint() {
        let cat = PolCategory::new(GroupKind::T2, GeneratorTable::new());
        assert!(cat.is_covering(&None, &[]).unwrap());
        assert!(!cat.is_covering(&Some(Polytope::unit_square()), &[]).unwrap());
    }
}
