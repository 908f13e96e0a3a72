use std::collections::BTreeMap;

use super::{CatError, CoverCategory, Family, FinCatFam, FiniteGroup, Group, GroupAction, MorphismInfo, OrbitCategory};

/// What a morphism of `C_hG` is made of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitPart {
    /// `(f, g): A → B` with `f: gA → B` in `C`.
    Pair { f: usize, g: usize },
    /// A morphism of `C` out of the basepoint.
    Initial { f: usize },
}

/// The homotopy-orbit category `C_hG` of a finite group action, together
/// with the decomposition of each of its morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyOrbit {
    cat: FinCatFam,
    base: FinCatFam,
    action: GroupAction,
    parts: Vec<OrbitPart>,
    index: BTreeMap<OrbitPart, usize>,
}

pub fn build_homotopy_orbit(c: &FinCatFam, act: &GroupAction) -> Result<HomotopyOrbit, CatError> {
    let problems = act.validate(c);
    if let Some(p) = problems.first() {
        return Err(CatError::Invalid(format!("action: {p}")));
    }
    let grp = act.group();
    let mut parts = Vec::new();
    let mut morphisms = Vec::new();
    for f in 0..c.morphism_count() {
        if c.source_of(f) == c.basepoint() {
            parts.push(OrbitPart::Initial { f });
            morphisms.push(MorphismInfo { name: c.morphism_name(f).to_string(), source: c.basepoint(), target: c.target_of(f) });
        }
    }
    for g in grp.elements() {
        let ginv = grp.inverse(&g);
        for f in 0..c.morphism_count() {
            let s = c.source_of(f);
            if s == c.basepoint() {
                continue;
            }
            parts.push(OrbitPart::Pair { f, g });
            morphisms.push(MorphismInfo {
                name: format!("({},{})", c.morphism_name(f), grp.label(g)),
                source: act.act_object(ginv, s),
                target: c.target_of(f),
            });
        }
    }
    let index: BTreeMap<OrbitPart, usize> = parts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let lookup = |p: OrbitPart| index.get(&p).copied().ok_or_else(|| CatError::Invalid(format!("missing morphism {p:?}")));

    let identities = (0..c.object_count())
        .map(|a| {
            let id = c.identity_of(a);
            if a == c.basepoint() {
                lookup(OrbitPart::Initial { f: id })
            } else {
                lookup(OrbitPart::Pair { f: id, g: 0 })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut composition = BTreeMap::new();
    for (i1, p1) in parts.iter().enumerate() {
        for (i2, p2) in parts.iter().enumerate() {
            if morphisms[i2].target != morphisms[i1].source {
                continue;
            }
            let composite = match (*p1, *p2) {
                (OrbitPart::Pair { f: f1, g: g1 }, OrbitPart::Pair { f: f2, g: g2 }) => {
                    let moved = act.act_morphism(g1, f2);
                    c.compose_ids(f1, moved).map(|f| OrbitPart::Pair { f, g: grp.mul(&g1, &g2) })
                }
                (OrbitPart::Pair { f: f1, g: g1 }, OrbitPart::Initial { f: f2 }) => {
                    let moved = act.act_morphism(g1, f2);
                    c.compose_ids(f1, moved).map(|f| OrbitPart::Initial { f })
                }
                (OrbitPart::Initial { f: f1 }, OrbitPart::Initial { f: f2 }) => {
                    c.compose_ids(f1, f2).map(|f| OrbitPart::Initial { f })
                }
                (OrbitPart::Initial { .. }, OrbitPart::Pair { .. }) => None,
            };
            if let Some(p) = composite {
                composition.insert((i1, i2), lookup(p)?);
            }
        }
    }

    let mut families = Vec::new();
    for fam in c.families() {
        let n = fam.maps.len();
        let mut choice = vec![0usize; n];
        loop {
            let maps = fam
                .maps
                .iter()
                .zip(&choice)
                .map(|(&f, &g)| lookup(OrbitPart::Pair { f, g }))
                .collect::<Result<Vec<_>, _>>()?;
            families.push(Family { target: fam.target, maps });
            let mut k = 0;
            while k < n {
                choice[k] += 1;
                if choice[k] < grp.order() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }

    let objects = (0..c.object_count()).map(|a| c.object_name(a).to_string()).collect();
    let cat = FinCatFam::from_parts(
        &format!("({})_h{}", c.name(), grp.name()),
        objects,
        c.basepoint(),
        morphisms,
        identities,
        composition,
        families,
    )?;
    Ok(HomotopyOrbit { cat, base: c.clone(), action: act.clone(), parts, index })
}

impl HomotopyOrbit {
    pub fn category(&self) -> &FinCatFam {
        &self.cat
    }

    pub fn base(&self) -> &FinCatFam {
        &self.base
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn part(&self, m: usize) -> OrbitPart {
        self.parts[m]
    }

    pub fn morphism(&self, p: OrbitPart) -> Option<usize> {
        self.index.get(&p).copied()
    }
}

impl CoverCategory for HomotopyOrbit {
    type Object = usize;
    type Morphism = usize;

    fn source(&self, f: &usize) -> usize {
        self.cat.source_of(*f)
    }

    fn target(&self, f: &usize) -> usize {
        self.cat.target_of(*f)
    }

    fn identity(&self, a: &usize) -> usize {
        self.cat.identity_of(*a)
    }

    fn compose(&self, f: &usize, g: &usize) -> Result<usize, CatError> {
        CoverCategory::compose(&self.cat, f, g)
    }

    fn is_basepoint(&self, a: &usize) -> bool {
        *a == self.cat.basepoint()
    }

    fn is_covering(&self, target: &usize, family: &[usize]) -> Result<bool, CatError> {
        Ok(self.cat.covers(*target, family))
    }
}

impl OrbitCategory for HomotopyOrbit {
    type Group = FiniteGroup;

    fn group(&self) -> &FiniteGroup {
        self.action.group()
    }

    fn group_part(&self, m: &usize) -> usize {
        match self.parts[*m] {
            OrbitPart::Pair { g, .. } => g,
            OrbitPart::Initial { .. } => 0,
        }
    }

    fn split(&self, m: &usize) -> Result<(usize, usize), CatError> {
        let missing = || CatError::Invalid("homotopy orbit is missing a factor".into());
        match self.parts[*m] {
            OrbitPart::Pair { f, g } => {
                let ga = self.base.source_of(f);
                let mv = self.morphism(OrbitPart::Pair { f: self.base.identity_of(ga), g }).ok_or_else(missing)?;
                let sub = self.morphism(OrbitPart::Pair { f, g: 0 }).ok_or_else(missing)?;
                Ok((mv, sub))
            }
            OrbitPart::Initial { .. } => Ok((self.cat.identity_of(self.cat.basepoint()), *m)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::{find_isomorphism, group_star, one_star, swap_category, DEFAULT_CLOSURE_BOUND};

    #[test]
    fn one_star_orbit_is_group_star() {
        let g = FiniteGroup::cyclic(2);
        let one = one_star();
        let orbit = build_homotopy_orbit(&one, &GroupAction::trivial(g.clone(), &one)).unwrap();
        assert!(orbit.category().validate(DEFAULT_CLOSURE_BOUND).is_valid());
        assert!(find_isomorphism(orbit.category(), &group_star(&g)).is_some());
    }

    #[test]
    fn trivial_group_gives_back_the_category() {
        let (c, _) = swap_category();
        let orbit = build_homotopy_orbit(&c, &GroupAction::trivial(FiniteGroup::trivial(), &c)).unwrap();
        assert!(find_isomorphism(orbit.category(), &c).is_some());
    }

    #[test]
    fn swap_action_orbit_is_valid() {
        let (c, act) = swap_category();
        let orbit = build_homotopy_orbit(&c, &act).unwrap();
        let r = orbit.category().validate(DEFAULT_CLOSURE_BOUND);
        assert!(r.is_valid(), "{:?}", r.violations);
        for m in 0..orbit.category().morphism_count() {
            let (mv, sub) = orbit.split(&m).unwrap();
            assert_eq!(CoverCategory::compose(&orbit, &sub, &mv).unwrap(), m);
        }
    }
}
