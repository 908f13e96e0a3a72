use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use super::{CatError, FinCatFam};

/// A group presented by enough structure to form bar words.
pub trait Group {
    type Elem: Clone + Ord + Debug;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
}

/// A finite group given by its multiplication table. Element 0 is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn from_table(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, CatError> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(CatError::Invalid("group table has the wrong shape".into()));
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return Err(CatError::Invalid("element 0 is not a two-sided unit".into()));
        }
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == 0 && table[b][a] == 0) {
                return Err(CatError::Invalid(format!("element {} has no inverse", labels[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(CatError::Invalid("group table is not associative".into()));
                    }
                }
            }
        }
        Ok(Self { name: name.to_string(), labels, table })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        Self::abelian(&[n])
    }

    /// `ℤ/n₁ ⊕ … ⊕ ℤ/n_k`, elements in mixed-radix order.
    pub fn abelian(moduli: &[usize]) -> Self {
        let order: usize = moduli.iter().product();
        let digits = |mut x: usize| {
            let mut out = Vec::with_capacity(moduli.len());
            for &m in moduli.iter().rev() {
                out.push(x % m);
                x /= m;
            }
            out.reverse();
            out
        };
        let encode = |ds: &[usize]| ds.iter().zip(moduli).fold(0, |acc, (d, m)| acc * m + d);
        let labels = (0..order)
            .map(|x| {
                let ds = digits(x);
                if ds.len() == 1 {
                    ds[0].to_string()
                } else {
                    format!("({})", ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
                }
            })
            .collect();
        let table = (0..order)
            .map(|a| {
                let da = digits(a);
                (0..order)
                    .map(|b| {
                        let db = digits(b);
                        let sum: Vec<usize> =
                            da.iter().zip(&db).zip(moduli).map(|((x, y), m)| (x + y) % m).collect();
                        encode(&sum)
                    })
                    .collect()
            })
            .collect();
        let name = if moduli.is_empty() || order == 1 {
            "1".to_string()
        } else {
            moduli.iter().map(|m| format!("ℤ/{m}")).collect::<Vec<_>>().join("⊕")
        };
        Self { name, labels, table }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }
}

impl Group for FiniteGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.table[*a][*b]
    }

    fn inverse(&self, a: &usize) -> usize {
        (0..self.order()).find(|&b| self.table[*a][b] == 0).expect("validated group")
    }
}

/// An action of a finite group on a finite category with covering families,
/// as permutations of objects and of morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    objects: Vec<Vec<usize>>,
    morphisms: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(group: FiniteGroup, objects: Vec<Vec<usize>>, morphisms: Vec<Vec<usize>>) -> Self {
        Self { group, objects, morphisms }
    }

    pub fn trivial(group: FiniteGroup, cat: &FinCatFam) -> Self {
        let n = group.order();
        Self {
            objects: vec![(0..cat.object_count()).collect(); n],
            morphisms: vec![(0..cat.morphism_count()).collect(); n],
            group,
        }
    }

    /// The action of a cyclic group in which element `k` acts by the `k`-th
    /// power of the given permutations.
    pub fn cyclic(
        group: FiniteGroup,
        object_perm: Vec<usize>,
        morphism_perm: Vec<usize>,
    ) -> Self {
        let n = group.order();
        let mut objects = vec![(0..object_perm.len()).collect::<Vec<_>>()];
        let mut morphisms = vec![(0..morphism_perm.len()).collect::<Vec<_>>()];
        for k in 1..n {
            let prev_o: &Vec<usize> = &objects[k - 1];
            let prev_m: &Vec<usize> = &morphisms[k - 1];
            let next_o = prev_o.iter().map(|&x| object_perm[x]).collect();
            let next_m = prev_m.iter().map(|&x| morphism_perm[x]).collect();
            objects.push(next_o);
            morphisms.push(next_m);
        }
        Self { group, objects, morphisms }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn act_object(&self, g: usize, a: usize) -> usize {
        self.objects[g][a]
    }

    pub fn act_morphism(&self, g: usize, f: usize) -> usize {
        self.morphisms[g][f]
    }

    /// Functoriality, unit and compatibility laws, basepoint fixing, and
    /// preservation of stored covering families.
    pub fn validate(&self, cat: &FinCatFam) -> Vec<String> {
        let mut out = Vec::new();
        let grp = &self.group;
        if self.objects.len() != grp.order() || self.morphisms.len() != grp.order() {
            out.push("action tables do not match the group order".into());
            return out;
        }
        if self.objects.iter().any(|p| p.len() != cat.object_count())
            || self.morphisms.iter().any(|p| p.len() != cat.morphism_count())
        {
            out.push("action tables do not match the category".into());
            return out;
        }
        for g in grp.elements() {
            let o = &self.objects[g];
            let m = &self.morphisms[g];
            if o[cat.basepoint()] != cat.basepoint() {
                out.push(format!("{} moves the basepoint", grp.label(g)));
            }
            for f in 0..cat.morphism_count() {
                let gf = m[f];
                if cat.source_of(gf) != o[cat.source_of(f)] || cat.target_of(gf) != o[cat.target_of(f)] {
                    out.push(format!("{}·{} has the wrong endpoints", grp.label(g), cat.morphism_name(f)));
                }
                for h in grp.elements() {
                    if self.morphisms[h][gf] != self.morphisms[grp.mul(&h, &g)][f] {
                        out.push(format!(
                            "{}·({}·{}) ≠ ({}{})·{}",
                            grp.label(h),
                            grp.label(g),
                            cat.morphism_name(f),
                            grp.label(h),
                            grp.label(g),
                            cat.morphism_name(f)
                        ));
                    }
                }
            }
            for a in 0..cat.object_count() {
                if m[cat.identity_of(a)] != cat.identity_of(o[a]) {
                    out.push(format!("{} does not preserve the identity of {}", grp.label(g), cat.object_name(a)));
                }
            }
            for ((f, h), fh) in cat.composition_entries() {
                if cat.compose_ids(m[f], m[h]) != Some(m[fh]) {
                    out.push(format!(
                        "{}·({}∘{}) ≠ ({}·{})∘({}·{})",
                        grp.label(g),
                        cat.morphism_name(f),
                        cat.morphism_name(h),
                        grp.label(g),
                        cat.morphism_name(f),
                        grp.label(g),
                        cat.morphism_name(h)
                    ));
                }
            }
            for fam in cat.families() {
                let moved: Vec<usize> = fam.maps.iter().map(|&f| m[f]).collect();
                if !cat.covers(o[fam.target], &moved) {
                    out.push(format!("{} does not preserve a covering family of {}", grp.label(g), cat.object_name(fam.target)));
                }
            }
        }
        if (0..cat.object_count()).any(|a| self.objects[0][a] != a) || (0..cat.morphism_count()).any(|f| self.morphisms[0][f] != f) {
            out.push("the unit does not act trivially".into());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_tables() {
        let g = FiniteGroup::abelian(&[2, 2]);
        assert_eq!(g.order(), 4);
        assert_eq!(g.name(), "ℤ/2⊕ℤ/2");
        for a in g.elements() {
            assert_eq!(g.mul(&a, &a), 0);
            assert_eq!(g.inverse(&a), a);
        }
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(z6.mul(&4, &5), 3);
        assert_eq!(z6.inverse(&2), 4);
        assert!(FiniteGroup::from_table("bad", vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 1]]).is_err());
    }
}
