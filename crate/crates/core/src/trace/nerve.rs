use std::fmt::Debug;

use super::{bar_face, BarChain, TraceError};
use crate::covercat::{compose_w, CatError, CoverCategory, Group, OrbitCategory, PolCategory, WMorphism};
use crate::exactnum::ExactReal;
use crate::geometry::Polytope;
use crate::measures::Measure;

/// `X₀ ← X₁ ← ⋯ ← X_p` in the category of covers; `maps[k-1]` is
/// `m_k: X_k → X_{k−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveSimplex<O, M> {
    base: Vec<O>,
    maps: Vec<WMorphism<O, M>>,
}

impl<O: Clone + Eq + Debug, M: Clone + Eq + Debug> NerveSimplex<O, M> {
    pub fn point(base: Vec<O>) -> Self {
        Self { base, maps: Vec::new() }
    }

    /// Checks that consecutive maps compose and that every map is a cover.
    pub fn new<C>(cat: &C, base: Vec<O>, maps: Vec<WMorphism<O, M>>) -> Result<Self, TraceError>
    where
        C: CoverCategory<Object = O, Morphism = M>,
    {
        let mut expected = &base;
        for (k, m) in maps.iter().enumerate() {
            if &m.target != expected {
                return Err(CatError::Mismatch(format!("m_{} does not land in X_{}", k + 1, k)).into());
            }
            m.validate(cat)?;
            expected = &m.source;
        }
        Ok(Self { base, maps })
    }

    /// Builds from the maps alone, `X₀` being the target of the first.
    pub fn chain<C>(cat: &C, maps: Vec<WMorphism<O, M>>) -> Result<Self, TraceError>
    where
        C: CoverCategory<Object = O, Morphism = M>,
    {
        let base = maps.first().map(|m| m.target.clone()).ok_or_else(|| TraceError::Degree("empty chain".into()))?;
        Self::new(cat, base, maps)
    }

    pub fn degree(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[WMorphism<O, M>] {
        &self.maps
    }

    /// `X_k`.
    pub fn tuple(&self, k: usize) -> &[O] {
        if k == 0 {
            &self.base
        } else {
            &self.maps[k - 1].source
        }
    }

    pub fn finest(&self) -> &[O] {
        self.tuple(self.degree())
    }
}

/// The terms `[g_{1|i}|…|g_{p|i}] ⊗ μ(P_{p|i})`, one per entry `i` of the
/// finest tuple and unmerged, where `g_{k|i}` is the group part of the
/// component of `m_k` that the image of `i` passes through.
#[allow(clippy::type_complexity)]
pub fn trace_terms_with<C, F>(
    cat: &C,
    s: &NerveSimplex<C::Object, C::Morphism>,
    mu: F,
) -> Result<Vec<(Vec<<C::Group as Group>::Elem>, ExactReal)>, TraceError>
where
    C: OrbitCategory,
    F: Fn(&C::Object) -> Result<ExactReal, TraceError>,
{
    let p = s.degree();
    let mut out = Vec::with_capacity(s.finest().len());
    for (i, obj) in s.finest().iter().enumerate() {
        let mut word = Vec::with_capacity(p);
        let mut j = i;
        for k in (1..=p).rev() {
            let m = &s.maps[k - 1];
            word.push(cat.group_part(&m.components[j]));
            j = m.index[j];
        }
        word.reverse();
        out.push((word, mu(obj)?));
    }
    Ok(out)
}

/// `Σ_i [g_{1|i}|…|g_{p|i}] ⊗ μ(P_{p|i})`.
pub fn trace_simplex_with<C, F>(
    cat: &C,
    s: &NerveSimplex<C::Object, C::Morphism>,
    mu: F,
) -> Result<BarChain<<C::Group as Group>::Elem>, TraceError>
where
    C: OrbitCategory,
    F: Fn(&C::Object) -> Result<ExactReal, TraceError>,
{
    let mut out = BarChain::zero(s.degree());
    for (word, value) in trace_terms_with(cat, s, mu)? {
        out.add_term(word, &value);
    }
    Ok(out)
}

fn polytope_measure(mu: &Measure) -> impl Fn(&Option<Polytope>) -> Result<ExactReal, TraceError> + '_ {
    move |p| match p {
        Some(p) => Ok(mu.eval(p)?),
        None => Ok(ExactReal::zero()),
    }
}

/// The trace of a simplex over a polytope category. Refuses measures that
/// are not invariant under the category's group.
pub fn trace_simplex(
    cat: &PolCategory,
    s: &PolSimplex,
    mu: &Measure,
) -> Result<BarChain<crate::geometry::Isometry>, TraceError> {
    mu.require_equivariant(cat.kind())?;
    trace_simplex_with(cat, s, polytope_measure(mu))
}

pub fn trace_terms(
    cat: &PolCategory,
    s: &PolSimplex,
    mu: &Measure,
) -> Result<Vec<(Vec<crate::geometry::Isometry>, ExactReal)>, TraceError> {
    mu.require_equivariant(cat.kind())?;
    trace_terms_with(cat, s, polytope_measure(mu))
}

pub type PolSimplex = NerveSimplex<Option<Polytope>, crate::covercat::PolMorphism>;

/// `d_k`: drop `X₀`, compose `m_k ∘ m_{k+1}`, or drop `X_p`.
pub fn nerve_face<C: CoverCategory>(
    cat: &C,
    s: &NerveSimplex<C::Object, C::Morphism>,
    k: usize,
) -> Result<NerveSimplex<C::Object, C::Morphism>, TraceError> {
    let p = s.degree();
    if p == 0 || k > p {
        return Err(TraceError::Degree(format!("face {k} of a degree {p} simplex")));
    }
    let mut maps = s.maps.clone();
    let base = if k == 0 {
        maps.remove(0);
        s.tuple(1).to_vec()
    } else {
        if k == p {
            maps.pop();
        } else {
            let composite = compose_w(cat, &maps[k - 1], &maps[k])?;
            maps.splice(k - 1..=k, [composite]);
        }
        s.base.clone()
    };
    Ok(NerveSimplex { base, maps })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialReport {
    pub degree: usize,
    /// Faces `k` with `T(d_k σ) ≠ d_k T(σ)`.
    pub failures: Vec<usize>,
}

impl SimplicialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `T(d_k σ)` with `d_k T(σ)` for every face.
pub fn check_simplicial_with<C, F>(
    cat: &C,
    s: &NerveSimplex<C::Object, C::Morphism>,
    mu: F,
) -> Result<SimplicialReport, TraceError>
where
    C: OrbitCategory,
    F: Fn(&C::Object) -> Result<ExactReal, TraceError>,
{
    let p = s.degree();
    let mut failures = Vec::new();
    if p > 0 {
        let whole = trace_simplex_with(cat, s, &mu)?;
        for k in 0..=p {
            let lhs = trace_simplex_with(cat, &nerve_face(cat, s, k)?, &mu)?;
            let rhs = bar_face(cat.group(), &whole, k)?;
            if lhs != rhs {
                failures.push(k);
            }
        }
    }
    Ok(SimplicialReport { degree: p, failures })
}

pub fn check_simplicial(cat: &PolCategory, s: &PolSimplex, mu: &Measure) -> Result<SimplicialReport, TraceError> {
    mu.require_equivariant(cat.kind())?;
    check_simplicial_with(cat, s, polytope_measure(mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::{build_homotopy_orbit, truncated_naturals, FiniteGroup, GroupAction};
    use crate::exactnum::{rat, GeneratorTable};
    use crate::geometry::{GroupKind, Isometry};

    fn exchange() -> (PolCategory, PolSimplex, PolSimplex) {
        let t = GeneratorTable::new()
            .with_symbol("x", rat(1, 4), rat(1, 3))
            .unwrap()
            .with_symbol("y", rat(1, 2), rat(2, 3))
            .unwrap();
        let cat = PolCategory::new(GroupKind::T1, t.clone());
        let e = |s: &str| ExactReal::parse(s).unwrap();
        let iv = |a: &str, b: &str| Some(Polytope::interval(e(a), e(b), &t).unwrap());
        let whole = iv("0", "x + y");
        let (ix, iy) = (iv("0", "x"), iv("x", "x + y"));
        let place = |gx: &str, gy: &str| {
            let fx = cat.morphism(ix.clone(), whole.clone(), Isometry::translation_1d(e(gx))).unwrap();
            let fy = cat.morphism(iy.clone(), whole.clone(), Isometry::translation_1d(e(gy))).unwrap();
            let m = WMorphism::new(&cat, vec![ix.clone(), iy.clone()], vec![whole.clone()], vec![0, 0], vec![fx, fy])
                .unwrap();
            NerveSimplex::chain(&cat, vec![m]).unwrap()
        };
        let base = place("0", "0");
        let swap = place("y", "-x");
        (cat, base, swap)
    }

    #[test]
    fn interval_exchange_traces() {
        let (cat, base, swap) = exchange();
        let mu = Measure::length();
        let e = |s: &str| ExactReal::parse(s).unwrap();
        let tb = trace_simplex(&cat, &base, &mu).unwrap();
        assert_eq!(tb.value(&[Isometry::translation_1d(e("0"))]), e("x + y"));
        let ts = trace_simplex(&cat, &swap, &mu).unwrap();
        assert_eq!(ts.value(&[Isometry::translation_1d(e("y"))]), e("x"));
        assert_eq!(ts.value(&[Isometry::translation_1d(e("-x"))]), e("y"));
        assert!(check_simplicial(&cat, &swap, &mu).unwrap().passed());
        let top = nerve_face(&cat, &swap, 1).unwrap();
        assert_eq!(top.finest(), &[Some(Polytope::interval(ExactReal::zero(), e("x + y"), cat.table()).unwrap())]);
        assert!(trace_simplex(&cat, &swap, &Measure::area()).is_err());
    }

    #[test]
    fn cell_count_breaks_a_face() {
        let (cat, _, swap) = exchange();
        let r = check_simplicial_with(&cat, &swap, |p: &Option<Polytope>| {
            Ok(ExactReal::integer(if p.is_some() { 1 } else { 0 }))
        })
        .unwrap();
        assert_eq!(r.failures, vec![1]);
    }

    #[test]
    fn empty_finest_tuple() {
        // 0 ← () in ℕ≤2: the empty family covers 0, and μ(0) = 0 keeps d₁ honest
        let n = truncated_naturals(2, 2);
        let orbit = build_homotopy_orbit(&n, &GroupAction::trivial(FiniteGroup::trivial(), &n)).unwrap();
        let zero = n.object_by_name("0").unwrap();
        let m = WMorphism::new(&orbit, vec![], vec![zero], vec![], vec![]).unwrap();
        let s = NerveSimplex::chain(&orbit, vec![m]).unwrap();
        let mu = |a: &usize| Ok(ExactReal::integer(n.object_name(*a).parse::<i64>().unwrap()));
        assert!(trace_simplex_with(&orbit, &s, mu).unwrap().is_zero());
        assert!(check_simplicial_with(&orbit, &s, mu).unwrap().passed());
    }
}
