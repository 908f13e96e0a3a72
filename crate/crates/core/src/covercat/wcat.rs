use super::{CatError, CoverCategory, OrbitCategory};

/// A morphism `X → Y` of the category of covers: an index map `[m] → [n]`
/// and components `X_i → Y_{index(i)}` whose fibres are covering families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WMorphism<O, M> {
    pub source: Vec<O>,
    pub target: Vec<O>,
    pub index: Vec<usize>,
    pub components: Vec<M>,
}

impl<O: Clone + Eq + std::fmt::Debug, M: Clone + Eq + std::fmt::Debug> WMorphism<O, M> {
    /// Checks shapes, endpoints, that no tuple entry is the basepoint, and
    /// that each fibre covers its target.
    pub fn new<C>(cat: &C, source: Vec<O>, target: Vec<O>, index: Vec<usize>, components: Vec<M>) -> Result<Self, CatError>
    where
        C: CoverCategory<Object = O, Morphism = M>,
    {
        let m = Self { source, target, index, components };
        m.validate(cat)?;
        Ok(m)
    }

    pub fn validate<C>(&self, cat: &C) -> Result<(), CatError>
    where
        C: CoverCategory<Object = O, Morphism = M>,
    {
        if self.index.len() != self.source.len() || self.components.len() != self.source.len() {
            return Err(CatError::Mismatch("index map and components must match the source length".into()));
        }
        if self.source.iter().chain(&self.target).any(|a| cat.is_basepoint(a)) {
            return Err(CatError::Invalid("tuples may not contain the basepoint".into()));
        }
        for (i, (&j, f)) in self.index.iter().zip(&self.components).enumerate() {
            if j >= self.target.len() {
                return Err(CatError::Mismatch(format!("index {i} maps outside the target")));
            }
            if cat.source(f) != self.source[i] || cat.target(f) != self.target[j] {
                return Err(CatError::Mismatch(format!("component {i} has the wrong endpoints")));
            }
        }
        for (j, t) in self.target.iter().enumerate() {
            if !cat.is_covering(t, &self.fibre(j))? {
                return Err(CatError::NotCovering(j));
            }
        }
        Ok(())
    }

    /// Components landing in `Y_j`, in source order.
    pub fn fibre(&self, j: usize) -> Vec<M> {
        self.index.iter().zip(&self.components).filter(|(&k, _)| k == j).map(|(_, f)| f.clone()).collect()
    }
}

pub fn identity_w<C: CoverCategory>(cat: &C, x: &[C::Object]) -> WMorphism<C::Object, C::Morphism> {
    WMorphism {
        source: x.to_vec(),
        target: x.to_vec(),
        index: (0..x.len()).collect(),
        components: x.iter().map(|a| cat.identity(a)).collect(),
    }
}

/// `m2 ∘ m1`. Covers compose, so the fibres are not re-checked here; call
/// [`WMorphism::validate`] to confirm against a category whose covering test
/// is complete.
pub fn compose_w<C: CoverCategory>(
    cat: &C,
    m2: &WMorphism<C::Object, C::Morphism>,
    m1: &WMorphism<C::Object, C::Morphism>,
) -> Result<WMorphism<C::Object, C::Morphism>, CatError> {
    if m1.target != m2.source {
        return Err(CatError::Mismatch("composable covers must share a middle tuple".into()));
    }
    let mut index = Vec::with_capacity(m1.index.len());
    let mut components = Vec::with_capacity(m1.index.len());
    for (&j, f) in m1.index.iter().zip(&m1.components) {
        index.push(m2.index[j]);
        components.push(cat.compose(&m2.components[j], f)?);
    }
    Ok(WMorphism { source: m1.source.clone(), target: m2.target.clone(), index, components })
}

/// Splits a cover into a pure move `X → (g_i X_i)` followed by a sub-cover
/// with trivial group parts.
#[allow(clippy::type_complexity)]
pub fn factor_move_sub<C: OrbitCategory>(
    cat: &C,
    m: &WMorphism<C::Object, C::Morphism>,
) -> Result<(WMorphism<C::Object, C::Morphism>, WMorphism<C::Object, C::Morphism>), CatError> {
    let mut moves = Vec::new();
    let mut subs = Vec::new();
    for f in &m.components {
        let (mv, sub) = cat.split(f)?;
        moves.push(mv);
        subs.push(sub);
    }
    let middle: Vec<C::Object> = moves.iter().map(|f| cat.target(f)).collect();
    let mv = WMorphism {
        source: m.source.clone(),
        target: middle.clone(),
        index: (0..m.source.len()).collect(),
        components: moves,
    };
    let sub = WMorphism { source: middle, target: m.target.clone(), index: m.index.clone(), components: subs };
    Ok((mv, sub))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::{build_homotopy_orbit, swap_category, toy_two_object, OrbitPart};

    #[test]
    fn compose_and_identity() {
        let c = toy_two_object();
        let a = c.object_by_name("a").unwrap();
        let b = c.object_by_name("b").unwrap();
        let f = c.morphism_by_name("f").unwrap();
        let m = WMorphism::new(&c, vec![b, b], vec![a], vec![0, 0], vec![f, f]).unwrap();
        let left = compose_w(&c, &identity_w(&c, &[a]), &m).unwrap();
        let right = compose_w(&c, &m, &identity_w(&c, &[b, b])).unwrap();
        assert_eq!(left, m);
        assert_eq!(right, m);
        let single = WMorphism::new(&c, vec![b], vec![a], vec![0], vec![f]);
        assert_eq!(single, Err(CatError::NotCovering(0)));
    }

    #[test]
    fn move_then_sub_recomposes() {
        let (c, act) = swap_category();
        let orbit = build_homotopy_orbit(&c, &act).unwrap();
        let oc = orbit.category();
        let p = c.morphism_by_name("p").unwrap();
        let q = c.morphism_by_name("q").unwrap();
        let ob = |n: &str| c.object_by_name(n).unwrap();
        // (p, 1): b → c and (q, 1): a → c, a cover of c by the swapped pair
        let pg = orbit.morphism(OrbitPart::Pair { f: p, g: 1 }).unwrap();
        let qg = orbit.morphism(OrbitPart::Pair { f: q, g: 1 }).unwrap();
        assert_eq!(oc.source_of(pg), ob("b"));
        let m = WMorphism::new(&orbit, vec![ob("b"), ob("a")], vec![ob("c")], vec![0, 0], vec![pg, qg]).unwrap();
        let (mv, sub) = factor_move_sub(&orbit, &m).unwrap();
        mv.validate(&orbit).unwrap();
        sub.validate(&orbit).unwrap();
        assert_eq!(mv.target, vec![ob("a"), ob("b")]);
        assert_eq!(compose_w(&orbit, &sub, &mv).unwrap(), m);
        assert!(sub.components.iter().all(|f| orbit.group_part(f) == 0));
    }
}
