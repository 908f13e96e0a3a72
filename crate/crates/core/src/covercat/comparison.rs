//! Finite-scale checks of two structural facts about categories of covers:
//! the smash product with a pointed set splits the category of covers into a
//! product, and the sum map out of `𝒲(X∧𝓔A_*)` has fibres with a terminal
//! object.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{build_ea, identity_w, FinCatBuilder, FinCatFam, FiniteGroup, Group, WMorphism};

/// A finite pointed set, listed by its non-base points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedSet {
    pub points: Vec<String>,
}

impl PointedSet {
    /// `{*, x1, …, xn}`.
    pub fn with_points(n: usize) -> Self {
        Self { points: (1..=n).map(|i| format!("x{i}")).collect() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `X∧C` together with the coordinates of its objects and morphisms.
#[derive(Clone, Debug)]
pub struct Smash {
    pub cat: FinCatFam,
    /// `(x, c)` for each object other than the basepoint.
    pub objects: Vec<Option<(usize, usize)>>,
    /// `(x, f)` for each morphism out of a proper object.
    pub morphisms: Vec<Option<(usize, usize)>>,
}

/// One copy of `C` per non-base point of `X`, glued at the basepoint.
pub fn smash(x: &PointedSet, c: &FinCatFam) -> Smash {
    let obj = |p: usize, a: usize| format!("({},{})", x.points[p], c.object_name(a));
    let mor = |p: usize, f: usize| {
        let s = c.source_of(f);
        if c.identity_of(s) == f {
            format!("id_{}", obj(p, s))
        } else {
            format!("({},{})", x.points[p], c.morphism_name(f))
        }
    };
    let proper_maps: Vec<usize> = (0..c.morphism_count()).filter(|&f| c.source_of(f) != c.basepoint()).collect();
    let mut b = FinCatBuilder::new(&format!("X∧{}", c.name()));
    for p in 0..x.len() {
        for a in c.proper_objects() {
            b = b.object(&obj(p, a));
        }
        for &f in &proper_maps {
            if c.identity_of(c.source_of(f)) != f {
                b = b.morphism(&mor(p, f), &obj(p, c.source_of(f)), &obj(p, c.target_of(f)));
            }
        }
        for ((f, g), fg) in c.composition_entries() {
            if c.source_of(g) != c.basepoint() {
                b = b.compose(&mor(p, f), &mor(p, g), &mor(p, fg));
            }
        }
        for fam in c.families() {
            if fam.target == c.basepoint() {
                continue;
            }
            let names: Vec<String> = fam.maps.iter().map(|&f| mor(p, f)).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            b = b.cover(&obj(p, fam.target), &refs);
        }
    }
    let cat = b.build().expect("smash of a valid category is well typed");
    let mut objects = vec![None; cat.object_count()];
    let mut morphisms = vec![None; cat.morphism_count()];
    for p in 0..x.len() {
        for a in c.proper_objects() {
            objects[cat.object_by_name(&obj(p, a)).expect("object")] = Some((p, a));
        }
        for &f in &proper_maps {
            morphisms[cat.morphism_by_name(&mor(p, f)).expect("morphism")] = Some((p, f));
        }
    }
    Smash { cat, objects, morphisms }
}

/// Every ordered tuple of proper objects of length at most `bound`.
pub fn enumerate_tuples(c: &FinCatFam, bound: usize) -> Vec<Vec<usize>> {
    let objs: Vec<usize> = c.proper_objects().collect();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for t in &frontier {
            for &a in &objs {
                let mut e: Vec<usize> = t.clone();
                e.push(a);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// All covers `s → t`, by brute force over index maps and components.
pub fn enumerate_w_homs(c: &FinCatFam, s: &[usize], t: &[usize]) -> Vec<WMorphism<usize, usize>> {
    let mut out = Vec::new();
    let mut partial: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
    for &a in s {
        let mut next = Vec::new();
        for (index, comps) in &partial {
            for (j, &b) in t.iter().enumerate() {
                for &f in c.hom(a, b) {
                    let mut i2 = index.clone();
                    let mut c2 = comps.clone();
                    i2.push(j);
                    c2.push(f);
                    next.push((i2, c2));
                }
            }
        }
        partial = next;
    }
    for (index, components) in partial {
        let m = WMorphism { source: s.to_vec(), target: t.to_vec(), index, components };
        if (0..t.len()).all(|j| c.covers(t[j], &m.fibre(j))) {
            out.push(m);
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeakProductReport {
    pub objects_checked: usize,
    pub pairs_checked: usize,
    pub essentially_surjective: bool,
    pub fully_faithful: bool,
    pub failures: Vec<String>,
}

impl WeakProductReport {
    pub fn passed(&self) -> bool {
        self.essentially_surjective && self.fully_faithful
    }
}

fn split_tuple(sm: &Smash, n: usize, tuple: &[usize]) -> Vec<Vec<usize>> {
    let mut parts = vec![Vec::new(); n];
    for &o in tuple {
        let (p, a) = sm.objects[o].expect("proper object");
        parts[p].push(a);
    }
    parts
}

fn split_hom(sm: &Smash, n: usize, m: &WMorphism<usize, usize>) -> Vec<WMorphism<usize, usize>> {
    let label = |o: usize| sm.objects[o].expect("proper object").0;
    // position of each target entry inside its own label's subtuple
    let mut local = vec![0; m.target.len()];
    let mut counts = vec![0; n];
    for (j, &o) in m.target.iter().enumerate() {
        local[j] = counts[label(o)];
        counts[label(o)] += 1;
    }
    let targets = split_tuple(sm, n, &m.target);
    let sources = split_tuple(sm, n, &m.source);
    let mut index = vec![Vec::new(); n];
    let mut components = vec![Vec::new(); n];
    for (i, (&j, &f)) in m.index.iter().zip(&m.components).enumerate() {
        let (p, g) = sm.morphisms[f].expect("proper morphism");
        debug_assert_eq!(p, label(m.source[i]));
        index[p].push(local[j]);
        components[p].push(g);
    }
    (0..n)
        .map(|p| WMorphism {
            source: sources[p].clone(),
            target: targets[p].clone(),
            index: std::mem::take(&mut index[p]),
            components: std::mem::take(&mut components[p]),
        })
        .collect()
}

/// Compares `𝒲(X∧C)` with `∏_{X°} 𝒲(C)` on every tuple of length at most
/// `bound`: each product object is hit by the concatenation of its factors,
/// and every hom-set maps bijectively onto the product of the factor
/// hom-sets.
pub fn check_weak_product(c: &FinCatFam, x: &PointedSet, bound: usize) -> WeakProductReport {
    let n = x.len();
    let sm = smash(x, c);
    let mut report = WeakProductReport { essentially_surjective: true, fully_faithful: true, ..Default::default() };

    // product objects: one tuple per point, total length within the bound
    let factor_tuples = enumerate_tuples(c, bound);
    let mut products: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &products {
            let used: usize = p.iter().map(Vec::len).sum();
            for t in factor_tuples.iter().filter(|t| used + t.len() <= bound) {
                let mut e = p.clone();
                e.push(t.clone());
                next.push(e);
            }
        }
        products = next;
    }
    let lookup: BTreeMap<(usize, usize), usize> =
        sm.objects.iter().enumerate().filter_map(|(o, pa)| pa.map(|k| (k, o))).collect();
    for prod in &products {
        let glued: Vec<usize> =
            prod.iter().enumerate().flat_map(|(p, t)| t.iter().map(|&a| lookup[&(p, a)]).collect::<Vec<_>>()).collect();
        report.objects_checked += 1;
        if &split_tuple(&sm, n, &glued) != prod {
            report.essentially_surjective = false;
            report.failures.push(format!("product object {prod:?} is not hit"));
        }
    }

    let tuples = enumerate_tuples(&sm.cat, bound);
    for s in &tuples {
        let s_parts = split_tuple(&sm, n, s);
        for t in &tuples {
            report.pairs_checked += 1;
            let t_parts = split_tuple(&sm, n, t);
            let homs = enumerate_w_homs(&sm.cat, s, t);
            let factors: Vec<Vec<WMorphism<usize, usize>>> =
                (0..n).map(|p| enumerate_w_homs(c, &s_parts[p], &t_parts[p])).collect();
            let expected: usize = factors.iter().map(Vec::len).product();
            let images: BTreeSet<Vec<(Vec<usize>, Vec<usize>)>> = homs
                .iter()
                .map(|m| split_hom(&sm, n, m).into_iter().map(|w| (w.index, w.components)).collect())
                .collect();
            let all_valid = homs
                .iter()
                .all(|m| split_hom(&sm, n, m).iter().zip(&factors).all(|(w, fs)| fs.contains(w)));
            if images.len() != homs.len() || homs.len() != expected || !all_valid {
                report.fully_faithful = false;
                report.failures.push(format!(
                    "hom {s:?} → {t:?}: {} covers, {} distinct images, {expected} in the product",
                    homs.len(),
                    images.len()
                ));
            }
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberSummary {
    /// `(a_x)` indexed by the non-base points.
    pub sums: Vec<usize>,
    pub objects: usize,
    pub connected: bool,
    pub terminal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport {
    pub fibers: Vec<FiberSummary>,
}

impl FiberReport {
    pub fn passed(&self) -> bool {
        self.fibers.iter().all(|f| f.connected && f.terminal)
    }
}

/// Enumerates, for each `(a_x) ∈ ⊕_{X°} A`, the tuples of `X∧𝓔A_*` of length
/// at most `bound` whose entries sum to `a_x` over each `x`, and checks that
/// this fibre is connected with terminal object `{(x, a_x)}_{x ∈ X°}`.
pub fn quillen_a_fibers(a: &FiniteGroup, x: &PointedSet, bound: usize) -> FiberReport {
    let ea = build_ea(a, bound);
    let sm = smash(x, &ea);
    let n = x.len();
    let element = |o: usize| a.elements().find(|&g| ea.object_name(o) == a.label(g)).expect("element object");
    let mut fibers: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    for t in enumerate_tuples(&sm.cat, bound) {
        let mut sums = vec![a.identity(); n];
        for &o in &t {
            let (p, e) = sm.objects[o].expect("proper object");
            sums[p] = a.mul(&sums[p], &element(e));
        }
        fibers.entry(sums).or_default().push(t);
    }
    let lookup: BTreeMap<(usize, usize), usize> =
        sm.objects.iter().enumerate().filter_map(|(o, pa)| pa.map(|k| (k, o))).collect();
    let object_of = |g: usize| ea.object_by_name(a.label(g)).expect("element object");

    let mut out = Vec::new();
    for (sums, objects) in fibers {
        let connected = is_connected(&sm.cat, &objects);
        let terminal_tuple: Vec<usize> = (0..n).map(|p| lookup[&(p, object_of(sums[p]))]).collect();
        let terminal = objects.contains(&terminal_tuple)
            && objects.iter().all(|s| enumerate_w_homs(&sm.cat, s, &terminal_tuple).len() == 1)
            && enumerate_w_homs(&sm.cat, &terminal_tuple, &terminal_tuple)
                == vec![identity_w(&sm.cat, &terminal_tuple)];
        out.push(FiberSummary { sums, objects: objects.len(), connected, terminal });
    }
    FiberReport { fibers: out }
}

fn is_connected(c: &FinCatFam, objects: &[Vec<usize>]) -> bool {
    if objects.is_empty() {
        return true;
    }
    let n = objects.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && !enumerate_w_homs(c, &objects[i], &objects[j]).is_empty() {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::{group_star, toy_two_object, DEFAULT_CLOSURE_BOUND};

    #[test]
    fn smash_is_valid() {
        let sm = smash(&PointedSet::with_points(2), &toy_two_object());
        assert!(sm.cat.validate(DEFAULT_CLOSURE_BOUND).is_valid());
        assert_eq!(sm.cat.proper_objects().count(), 4);
    }

    #[test]
    fn weak_product_small_cases() {
        let g = group_star(&FiniteGroup::cyclic(2));
        let r = check_weak_product(&g, &PointedSet::with_points(2), 2);
        assert!(r.passed(), "{:?}", r.failures);
        let r0 = check_weak_product(&g, &PointedSet::with_points(0), 2);
        assert!(r0.passed());
        assert_eq!((r0.objects_checked, r0.pairs_checked), (1, 1));
    }

    #[test]
    fn single_point_fibers_over_z2() {
        let r = quillen_a_fibers(&FiniteGroup::cyclic(2), &PointedSet::with_points(1), 3);
        assert!(r.passed(), "{:?}", r.fibers);
        assert_eq!(r.fibers.len(), 2);
        // 0: [], [0], [00], [11], [000], [011], [101], [110]
        assert_eq!(r.fibers[0].objects, 8);
    }

    #[test]
    fn empty_pointed_set_has_one_fiber() {
        let r = quillen_a_fibers(&FiniteGroup::cyclic(2), &PointedSet::with_points(0), 3);
        assert_eq!(r.fibers.len(), 1);
        assert!(r.passed());
    }
}
