use std::collections::BTreeMap;

use super::{reduce_h1, trace_simplex, BarChain, H1Class, NerveSimplex, PolSimplex, TraceError};
use crate::covercat::{PolCategory, WMorphism};
use crate::exactnum::{ExactReal, GeneratorTable};
use crate::geometry::{common_refinement, verify_cover, CoverCertificate, GroupKind, Isometry, Polytope};
use crate::measures::Measure;

/// Two verified placements of the same pieces into the same target.
#[derive(Clone, Debug)]
pub struct ScissorsAutomorphism {
    kind: GroupKind,
    table: GeneratorTable,
    base: CoverCertificate,
    moved: CoverCertificate,
}

impl ScissorsAutomorphism {
    pub fn new(
        kind: GroupKind,
        table: GeneratorTable,
        target: Polytope,
        pieces: Vec<Polytope>,
        base: Vec<Isometry>,
        moves: Vec<Isometry>,
    ) -> Result<Self, TraceError> {
        if base.len() != pieces.len() || moves.len() != pieces.len() {
            return Err(TraceError::Unsupported("one base and one move element per piece".into()));
        }
        let lift = |gs: Vec<Isometry>| gs.iter().map(|g| g.lift_to(kind)).collect::<Result<Vec<_>, _>>();
        let (base, moves) = (lift(base)?, lift(moves)?);
        let place = |gs: &[Isometry]| -> Vec<(Isometry, Polytope)> { gs.iter().cloned().zip(pieces.iter().cloned()).collect() };
        let base = verify_cover(&place(&base), &target, &table)?;
        let moved = verify_cover(&place(&moves), &target, &table)?;
        Ok(Self { kind, table, base, moved })
    }

    /// Base placement by the identity on every piece.
    pub fn in_place(
        kind: GroupKind,
        table: GeneratorTable,
        target: Polytope,
        pieces: Vec<Polytope>,
        moves: Vec<Isometry>,
    ) -> Result<Self, TraceError> {
        let base = vec![kind.identity(); pieces.len()];
        Self::new(kind, table, target, pieces, base, moves)
    }

    /// The automorphism that does nothing to `target`.
    pub fn identity(kind: GroupKind, table: GeneratorTable, target: Polytope) -> Result<Self, TraceError> {
        Self::in_place(kind, table, target.clone(), vec![target], vec![kind.identity()])
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn table(&self) -> &GeneratorTable {
        &self.table
    }

    pub fn target(&self) -> &Polytope {
        self.base.target()
    }

    pub fn pieces(&self) -> Vec<&Polytope> {
        self.base.pieces().iter().map(|(_, p)| p).collect()
    }

    pub fn base(&self) -> &CoverCertificate {
        &self.base
    }

    pub fn moved(&self) -> &CoverCertificate {
        &self.moved
    }

    pub fn base_elements(&self) -> Vec<&Isometry> {
        self.base.pieces().iter().map(|(g, _)| g).collect()
    }

    pub fn move_elements(&self) -> Vec<&Isometry> {
        self.moved.pieces().iter().map(|(g, _)| g).collect()
    }

    pub fn category(&self) -> PolCategory {
        PolCategory::new(self.kind, self.table.clone())
    }

    fn simplex(&self, cert: &CoverCertificate) -> Result<PolSimplex, TraceError> {
        let cat = self.category();
        let target = Some(cert.target().clone());
        let mut sources = Vec::new();
        let mut components = Vec::new();
        for (g, p) in cert.pieces() {
            sources.push(Some(p.clone()));
            components.push(cat.morphism(Some(p.clone()), target.clone(), g.clone())?);
        }
        let m = WMorphism::new(&cat, sources.clone(), vec![target], vec![0; sources.len()], components)?;
        NerveSimplex::chain(&cat, vec![m])
    }

    /// The 1-simplex `{P} ← {P_i}` of the base placement.
    pub fn base_simplex(&self) -> Result<PolSimplex, TraceError> {
        self.simplex(&self.base)
    }

    pub fn move_simplex(&self) -> Result<PolSimplex, TraceError> {
        self.simplex(&self.moved)
    }

    /// Same pieces, placements exchanged.
    pub fn swapped(&self) -> Self {
        Self { kind: self.kind, table: self.table.clone(), base: self.moved.clone(), moved: self.base.clone() }
    }

    /// The inverse with identity base: pieces `g_i P_i`, moved by `b_i g_i⁻¹`.
    pub fn inverse(&self) -> Result<Self, TraceError> {
        let mut pieces = Vec::new();
        let mut moves = Vec::new();
        for (((g, _), moved), (b, _)) in self.moved.pieces().iter().zip(self.moved.moved()).zip(self.base.pieces()) {
            pieces.push(moved.clone());
            moves.push(b.compose(&g.inverse())?);
        }
        Self::in_place(self.kind, self.table.clone(), self.target().clone(), pieces, moves)
    }

    /// The same automorphism with identity base: pieces `b_i P_i`, moved by
    /// `g_i b_i⁻¹`.
    pub fn normalized(&self) -> Result<Self, TraceError> {
        let mut pieces = Vec::new();
        let mut moves = Vec::new();
        for (((b, _), placed), (g, _)) in self.base.pieces().iter().zip(self.base.moved()).zip(self.moved.pieces()) {
            pieces.push(placed.clone());
            moves.push(g.compose(&b.inverse())?);
        }
        Self::in_place(self.kind, self.table.clone(), self.target().clone(), pieces, moves)
    }
}

/// `T(move) − T(base)` and its class in `H₁`.
pub fn trace_automorphism(
    s: &ScissorsAutomorphism,
    mu: &Measure,
) -> Result<(BarChain<Isometry>, H1Class), TraceError> {
    let cat = s.category();
    let chain = trace_simplex(&cat, &s.move_simplex()?, mu)?.sub(&trace_simplex(&cat, &s.base_simplex()?, mu)?)?;
    let class = reduce_h1(&chain, s.kind)?;
    Ok((chain, class))
}

/// The `H₀` trace: the measure of the polytope.
pub fn trace_k0(p: &Polytope, mu: &Measure) -> Result<ExactReal, TraceError> {
    Ok(mu.eval(p)?)
}

/// `τ` after `σ`. With identity bases, the pieces are `g_i⁻¹(g_i P_i ∩ Q_j)`
/// moved by `h_j g_i`, where `σ` moves `P_i` by `g_i` and `τ` moves `Q_j`
/// by `h_j`.
pub fn compose_automorphisms(
    sigma: &ScissorsAutomorphism,
    tau: &ScissorsAutomorphism,
) -> Result<ScissorsAutomorphism, TraceError> {
    if sigma.kind != tau.kind || sigma.target() != tau.target() {
        return Err(TraceError::Unsupported("automorphisms of different targets".into()));
    }
    let (s, t) = (sigma.normalized()?, tau.normalized()?);
    let table = s.table.clone();
    let cells = common_refinement(&s.moved, &t.base, &table)?;
    let mut groups: BTreeMap<(usize, usize), Vec<_>> = BTreeMap::new();
    for rc in cells {
        groups.entry((rc.a.piece, rc.b.piece)).or_default().push(rc.cell);
    }
    let mut pieces = Vec::new();
    let mut moves = Vec::new();
    for ((i, j), cells) in groups {
        let g = &s.moved.pieces()[i].0;
        let h = &t.moved.pieces()[j].0;
        let geometry = s.target().geometry();
        let part = Polytope::new(geometry, cells, &table).map_err(crate::geometry::CoverError::from)?;
        pieces.push(part.apply(&g.inverse()).map_err(crate::geometry::CoverError::from)?);
        moves.push(h.compose(g)?);
    }
    ScissorsAutomorphism::in_place(s.kind, table, s.target().clone(), pieces, moves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn exchange() -> ScissorsAutomorphism {
        let t = GeneratorTable::new()
            .with_symbol("x", rat(1, 4), rat(1, 3))
            .unwrap()
            .with_symbol("y", rat(1, 2), rat(2, 3))
            .unwrap();
        let e = |s: &str| ExactReal::parse(s).unwrap();
        let iv = |a: &str, b: &str| Polytope::interval(e(a), e(b), &t).unwrap();
        ScissorsAutomorphism::in_place(
            GroupKind::T1,
            t.clone(),
            iv("0", "x + y"),
            vec![iv("0", "x"), iv("x", "x + y")],
            vec![Isometry::translation_1d(e("y")), Isometry::translation_1d(e("-x"))],
        )
        .unwrap()
    }

    #[test]
    fn interval_exchange() {
        let s = exchange();
        let (chain, class) = trace_automorphism(&s, &Measure::length()).unwrap();
        assert_eq!(chain.terms().count(), 3);
        assert_eq!(class.to_string(), "y⊗x − x⊗y");
        let (_, inv) = trace_automorphism(&s.inverse().unwrap(), &Measure::length()).unwrap();
        assert_eq!(inv, class.neg());
        let (_, sw) = trace_automorphism(&s.swapped(), &Measure::length()).unwrap();
        assert_eq!(sw, class.neg());
    }

    #[test]
    fn composition_adds_classes() {
        let s = exchange();
        let mu = Measure::length();
        let class = |a: &ScissorsAutomorphism| trace_automorphism(a, &mu).unwrap().1;
        let twice = compose_automorphisms(&s, &s).unwrap();
        assert_eq!(class(&twice), class(&s).add(&class(&s)).unwrap());
        let back = compose_automorphisms(&s, &s.inverse().unwrap()).unwrap();
        assert!(class(&back).is_zero());
        let id = ScissorsAutomorphism::identity(GroupKind::T1, s.table().clone(), s.target().clone()).unwrap();
        assert_eq!(class(&compose_automorphisms(&s, &id).unwrap()), class(&s));
        assert!(class(&id).is_zero());
    }

    #[test]
    fn k0_trace_is_the_measure() {
        let s = exchange();
        assert_eq!(trace_k0(s.target(), &Measure::length()).unwrap(), ExactReal::parse("x + y").unwrap());
    }
}
