use super::{FinCatBuilder, FinCatFam, FiniteGroup, Group, GroupAction};

fn built(b: FinCatBuilder) -> FinCatFam {
    b.build().expect("catalog categories are well typed")
}

/// The category with only the basepoint.
pub fn trivial_category() -> FinCatFam {
    built(FinCatBuilder::new("*"))
}

/// One object besides the basepoint, identity covers only.
pub fn one_star() -> FinCatFam {
    built(FinCatBuilder::new("1_*").object("o").identity_covers())
}

/// `G` as a one-object category with a basepoint added; the covering families
/// are the singletons.
pub fn group_star(g: &FiniteGroup) -> FinCatFam {
    let name = |x: usize| if x == 0 { "id_o".to_string() } else { format!("g{}", g.label(x)) };
    let mut b = FinCatBuilder::new(&format!("{}_*", g.name())).object("o");
    for x in g.elements().skip(1) {
        b = b.morphism(&name(x), "o", "o");
    }
    for x in g.elements() {
        for y in g.elements() {
            b = b.compose(&name(x), &name(y), &name(g.mul(&x, &y)));
        }
        b = b.cover("o", &[&name(x)]);
    }
    built(b)
}

/// Objects `a`, `b` and one map `f: b → a`, with `{f, f}` covering `a`.
pub fn toy_two_object() -> FinCatFam {
    built(
        FinCatBuilder::new("toy")
            .object("a")
            .object("b")
            .morphism("f", "b", "a")
            .identity_covers()
            .cover("a", &["f", "f"]),
    )
}

/// Objects `a`, `b`, `c` with `{p: a → c, q: b → c}` covering `c`, and the
/// `ℤ/2` action swapping `a ↔ b` and `p ↔ q`.
pub fn swap_category() -> (FinCatFam, GroupAction) {
    let c = built(
        FinCatBuilder::new("swap")
            .object("a")
            .object("b")
            .object("c")
            .morphism("p", "a", "c")
            .morphism("q", "b", "c")
            .identity_covers()
            .cover("c", &["p", "q"]),
    );
    let obj = |n: &str| c.object_by_name(n).expect("object");
    let mor = |n: &str| c.morphism_by_name(n).expect("morphism");
    let mut object_perm: Vec<usize> = (0..c.object_count()).collect();
    object_perm.swap(obj("a"), obj("b"));
    let mut morphism_perm: Vec<usize> = (0..c.morphism_count()).collect();
    for (x, y) in [("p", "q"), ("id_a", "id_b"), ("!a", "!b")] {
        morphism_perm.swap(mor(x), mor(y));
    }
    let act = GroupAction::cyclic(FiniteGroup::cyclic(2), object_perm, morphism_perm);
    (c, act)
}

/// A chaotic category on `labels` (exactly one morphism between any two
/// proper objects) whose covers of `t` are the multisets of at most `bound`
/// objects with `sum = t`.
fn sum_category(name: &str, labels: &[String], sum: impl Fn(&[usize]) -> Option<usize>, bound: usize) -> FinCatFam {
    let n = labels.len();
    let arrow = |a: usize, b: usize| {
        if a == b {
            format!("id_{}", labels[a])
        } else {
            format!("{}→{}", labels[a], labels[b])
        }
    };
    let mut b = FinCatBuilder::new(name);
    for l in labels {
        b = b.object(l);
    }
    for x in 0..n {
        for y in 0..n {
            if x != y {
                b = b.morphism(&arrow(x, y), &labels[x], &labels[y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                b = b.compose(&arrow(y, z), &arrow(x, y), &arrow(x, z));
            }
        }
    }
    for multiset in multisets(n, bound) {
        if let Some(t) = sum(&multiset) {
            let maps: Vec<String> = multiset.iter().map(|&x| arrow(x, t)).collect();
            let refs: Vec<&str> = maps.iter().map(String::as_str).collect();
            b = b.cover(&labels[t], &refs);
        }
    }
    built(b)
}

/// Nondecreasing sequences over `0..n` of length at most `bound`.
fn multisets(n: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for m in &frontier {
            let start = m.last().copied().unwrap_or(0);
            for x in start..n {
                let mut e: Vec<usize> = m.clone();
                e.push(x);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `𝓔A` with an initial basepoint: objects are the elements of `A`, and a
/// tuple of at most `max_tuple_len` elements covers its sum. The empty tuple
/// covers `0`.
pub fn build_ea(a: &FiniteGroup, max_tuple_len: usize) -> FinCatFam {
    let labels: Vec<String> = a.elements().map(|x| a.label(x).to_string()).collect();
    let sum = |xs: &[usize]| Some(xs.iter().fold(a.identity(), |acc, x| a.mul(&acc, x)));
    sum_category(&format!("E({})_*", a.name()), &labels, sum, max_tuple_len)
}

/// Ordered tuples of elements of `A` of length at most `bound` summing to
/// `target`, listed by brute force.
pub fn ea_covering_tuples(a: &FiniteGroup, target: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier = vec![Vec::new()];
    for len in 0..=bound {
        for t in &frontier {
            if t.iter().fold(a.identity(), |acc, x| a.mul(&acc, x)) == target {
                out.push(t.clone());
            }
        }
        if len == bound {
            break;
        }
        frontier = frontier
            .iter()
            .flat_map(|t: &Vec<usize>| {
                a.elements().map(move |x| {
                    let mut e = t.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    out
}

/// Objects `0..=max` where a multiset of at most `bound` objects covers its
/// sum (when `≤ max`). Object `0` is covered by the empty family.
pub fn truncated_naturals(max: usize, bound: usize) -> FinCatFam {
    let labels: Vec<String> = (0..=max).map(|x| x.to_string()).collect();
    let sum = |xs: &[usize]| Some(xs.iter().sum::<usize>()).filter(|&s| s <= max);
    sum_category(&format!("N≤{max}"), &labels, sum, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::DEFAULT_CLOSURE_BOUND;

    #[test]
    fn catalog_is_valid() {
        let g = FiniteGroup::cyclic(2);
        for c in [trivial_category(), one_star(), group_star(&g), toy_two_object(), swap_category().0] {
            let r = c.validate(DEFAULT_CLOSURE_BOUND);
            assert!(r.is_valid(), "{}: {:?}", c.name(), r.violations);
        }
        let (c, act) = swap_category();
        assert!(act.validate(&c).is_empty());
        let n = truncated_naturals(3, 3);
        assert!(n.validate(3).is_valid());
    }

    #[test]
    fn ea_z2_bound_two() {
        let a = FiniteGroup::cyclic(2);
        let ea = build_ea(&a, 2);
        assert!(ea.validate(2).is_valid(), "{:?}", ea.validate(2).violations);
        let zero = ea.object_by_name("0").unwrap();
        let one = ea.object_by_name("1").unwrap();
        assert!(ea.covers(zero, &[]));
        let oracle0 = ea_covering_tuples(&a, 0, 2);
        let oracle1 = ea_covering_tuples(&a, 1, 2);
        assert_eq!(oracle0, vec![vec![], vec![0], vec![0, 0], vec![1, 1]]);
        assert_eq!(oracle1, vec![vec![1], vec![0, 1], vec![1, 0]]);
        // every ordered oracle tuple is a stored cover, and nothing else is
        let arrow = |x: usize, t: usize| ea.hom(ea.object_by_name(&x.to_string()).unwrap(), t)[0];
        for (t, oracle) in [(zero, &oracle0), (one, &oracle1)] {
            for tuple in oracle.iter() {
                let maps: Vec<usize> = tuple.iter().map(|&x| arrow(x, t)).collect();
                assert!(ea.covers(t, &maps));
            }
        }
        let stored: usize = ea.families().len();
        assert_eq!(stored, 4 + 2);
    }
}
