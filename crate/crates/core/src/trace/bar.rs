use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::TraceError;
use crate::covercat::Group;
use crate::exactnum::ExactReal;
use crate::geometry::Isometry;

/// A chain `Σ [g₁|…|g_p] ⊗ a` of the bar complex with coefficients in the
/// span of the real generators. Words with zero coefficient are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarChain<E: Ord> {
    degree: usize,
    terms: BTreeMap<Vec<E>, ExactReal>,
}

impl<E: Clone + Ord + fmt::Debug> BarChain<E> {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn term(word: Vec<E>, value: ExactReal) -> Self {
        let mut c = Self::zero(word.len());
        c.add_term(word, &value);
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<E>, &ExactReal)> {
        self.terms.iter()
    }

    pub fn value(&self, word: &[E]) -> ExactReal {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, word: Vec<E>, value: &ExactReal) {
        assert_eq!(word.len(), self.degree, "word length must match the degree");
        match self.terms.entry(word) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !value.is_zero() {
                    e.insert(value.clone());
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TraceError> {
        self.add_scaled(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TraceError> {
        self.add_scaled(other, true)
    }

    fn add_scaled(&self, other: &Self, negate: bool) -> Result<Self, TraceError> {
        if self.degree != other.degree {
            return Err(TraceError::Degree(format!("cannot add chains of degree {} and {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (w, v) in &other.terms {
            out.add_term(w.clone(), &if negate { -v } else { v.clone() });
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self { degree: self.degree, terms: self.terms.iter().map(|(w, v)| (w.clone(), -v)).collect() }
    }
}

impl<E: Ord> Default for BarChain<E> {
    fn default() -> Self {
        Self { degree: 0, terms: BTreeMap::new() }
    }
}

/// The `k`-th face: `d₀` drops `g₁`, `d_k` multiplies `g_k g_{k+1}`, and
/// `d_p` drops `g_p` after acting on the coefficient, which is trivial here.
pub fn bar_face<G: Group>(group: &G, c: &BarChain<G::Elem>, k: usize) -> Result<BarChain<G::Elem>, TraceError> {
    let p = c.degree;
    if p == 0 {
        return Err(TraceError::Degree("degree 0 chains have no faces".into()));
    }
    if k > p {
        return Err(TraceError::Degree(format!("face {k} of a degree {p} chain")));
    }
    let mut out = BarChain::zero(p - 1);
    for (w, v) in &c.terms {
        let mut word = w.clone();
        if k == 0 {
            word.remove(0);
        } else if k == p {
            word.pop();
        } else {
            let merged = group.mul(&word[k - 1], &word[k]);
            word.splice(k - 1..=k, [merged]);
        }
        out.add_term(word, v);
    }
    Ok(out)
}

/// `Σ (−1)^k d_k`.
pub fn bar_boundary<G: Group>(group: &G, c: &BarChain<G::Elem>) -> Result<BarChain<G::Elem>, TraceError> {
    let mut out = BarChain::zero(c.degree.saturating_sub(1));
    for k in 0..=c.degree {
        let face = bar_face(group, c, k)?;
        out = if k % 2 == 0 { out.add(&face)? } else { out.sub(&face)? };
    }
    Ok(out)
}

/// Group elements that can appear in exported words.
pub trait WordElement {
    fn to_json(&self) -> Value;
}

impl WordElement for usize {
    fn to_json(&self) -> Value {
        json!(self)
    }
}

impl WordElement for Isometry {
    fn to_json(&self) -> Value {
        match self {
            Isometry::T1(t) => json!(t.to_expr()),
            Isometry::T2(v) => json!([v.x.to_string(), v.y.to_string()]),
            Isometry::SE2(r, v) => json!({
                "rotation": [r.cos().to_string(), r.sin().to_string()],
                "translation": [v.x.to_string(), v.y.to_string()],
            }),
        }
    }
}

/// One record `{word, coeff, value}` per word and coefficient generator,
/// sorted by the serialized word.
pub fn chain_to_json<E: Clone + Ord + fmt::Debug + WordElement>(c: &BarChain<E>) -> Value {
    let mut rows: Vec<(String, Value)> = Vec::new();
    for (w, v) in &c.terms {
        let word = Value::Array(w.iter().map(WordElement::to_json).collect());
        let key = word.to_string();
        for (g, q) in v.terms() {
            rows.push((key.clone(), json!({ "word": word, "coeff": q.to_string(), "value": g.to_expr() })));
        }
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    json!({ "degree": c.degree, "terms": rows.into_iter().map(|(_, r)| r).collect::<Vec<_>>() })
}

impl<E: Ord + fmt::Display> fmt::Display for BarChain<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let word: Vec<String> = w.iter().map(ToString::to_string).collect();
            write!(f, "[{}]⊗({})", word.join("|"), v)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::FiniteGroup;

    #[test]
    fn two_chain_boundary() {
        // ∂([g|h]⊗a) = [h]⊗a − [gh]⊗a + [g]⊗a in ℤ/3
        let z3 = FiniteGroup::cyclic(3);
        let a = ExactReal::symbol("a");
        let c = BarChain::term(vec![1usize, 1], a.clone());
        let d = bar_boundary(&z3, &c).unwrap();
        let mut expected = BarChain::zero(1);
        expected.add_term(vec![1], &a);
        expected.add_term(vec![2], &-&a);
        expected.add_term(vec![1], &a);
        assert_eq!(d, expected);
        assert!(bar_boundary(&z3, &d).unwrap().is_zero());
    }

    #[test]
    fn one_chains_are_cycles() {
        let z3 = FiniteGroup::cyclic(3);
        let c = BarChain::term(vec![2usize], ExactReal::integer(5));
        assert!(bar_boundary(&z3, &c).unwrap().is_zero());
        assert!(bar_face(&z3, &BarChain::<usize>::zero(0), 0).is_err());
    }

    #[test]
    fn export_is_sorted() {
        let mut c = BarChain::zero(1);
        c.add_term(vec![2usize], &ExactReal::parse("x + 1/2").unwrap());
        c.add_term(vec![1usize], &ExactReal::integer(3));
        let v = chain_to_json(&c);
        let terms = v["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0]["word"], json!([1]));
        assert_eq!(terms[1]["coeff"], json!("1/2"));
        assert_eq!(terms[2]["value"], json!("x"));
    }
}
