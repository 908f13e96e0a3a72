use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CatError, CoverCategory};

pub const DEFAULT_CLOSURE_BOUND: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismInfo {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A covering family, stored as a sorted multiset of morphisms. Maps out of
/// the basepoint are dropped on storage.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family {
    pub target: usize,
    pub maps: Vec<usize>,
}

/// A finite pointed category with covering families, with an initial
/// basepoint: a family covers `c` exactly when it still does after its maps
/// out of the basepoint are removed, and the empty family covers the basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCatFam {
    name: String,
    objects: Vec<String>,
    basepoint: usize,
    morphisms: Vec<MorphismInfo>,
    identities: Vec<usize>,
    composition: BTreeMap<(usize, usize), usize>,
    families: Vec<Family>,
    family_set: BTreeSet<Family>,
    homs: BTreeMap<(usize, usize), Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    MissingIdentityCover,
    ClosureFailure,
    BasepointEndomorphism,
    MapIntoBasepoint,
    InitialMapCount,
    MissingComposite,
    NotAssociative,
    IdentityLaw,
    BasepointCover,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.witness)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl FinCatFam {
    /// Assembles a category from explicit tables, checking only that every
    /// entry is well typed. Axioms are checked by [`FinCatFam::validate`].
    pub fn from_parts(
        name: &str,
        objects: Vec<String>,
        basepoint: usize,
        morphisms: Vec<MorphismInfo>,
        identities: Vec<usize>,
        composition: BTreeMap<(usize, usize), usize>,
        families: Vec<Family>,
    ) -> Result<Self, CatError> {
        let no = objects.len();
        let nm = morphisms.len();
        if basepoint >= no {
            return Err(CatError::Invalid("basepoint out of range".into()));
        }
        unique(objects.iter(), "object")?;
        unique(morphisms.iter().map(|m| &m.name), "morphism")?;
        if morphisms.iter().any(|m| m.source >= no || m.target >= no) {
            return Err(CatError::Invalid("morphism endpoint out of range".into()));
        }
        if identities.len() != no {
            return Err(CatError::Invalid("one identity per object is required".into()));
        }
        for (a, &i) in identities.iter().enumerate() {
            if i >= nm || morphisms[i].source != a || morphisms[i].target != a {
                return Err(CatError::Invalid(format!("identity of {} is not an endomorphism of it", objects[a])));
            }
        }
        for (&(f, g), &fg) in &composition {
            if f >= nm || g >= nm || fg >= nm {
                return Err(CatError::Invalid("composition entry out of range".into()));
            }
            if morphisms[g].target != morphisms[f].source {
                return Err(CatError::Invalid(format!(
                    "{} ∘ {} is not composable",
                    morphisms[f].name, morphisms[g].name
                )));
            }
        }
        let mut normalized = Vec::with_capacity(families.len());
        for fam in families {
            if fam.target >= no {
                return Err(CatError::Invalid("cover target out of range".into()));
            }
            if fam.maps.iter().any(|&f| f >= nm || morphisms[f].target != fam.target) {
                return Err(CatError::Invalid(format!("a cover of {} contains a map with another target", objects[fam.target])));
            }
            let mut maps: Vec<usize> = fam.maps.into_iter().filter(|&f| morphisms[f].source != basepoint).collect();
            maps.sort_unstable();
            let fam = Family { target: fam.target, maps };
            if !normalized.contains(&fam) {
                normalized.push(fam);
            }
        }
        let mut homs: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for a in 0..no {
            for b in 0..no {
                homs.insert((a, b), Vec::new());
            }
        }
        for (i, m) in morphisms.iter().enumerate() {
            homs.get_mut(&(m.source, m.target)).expect("all pairs present").push(i);
        }
        let family_set = normalized.iter().cloned().collect();
        Ok(Self {
            name: name.to_string(),
            objects,
            basepoint,
            morphisms,
            identities,
            composition,
            families: normalized,
            family_set,
            homs,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    /// Objects other than the basepoint.
    pub fn proper_objects(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.objects.len()).filter(move |&a| a != self.basepoint)
    }

    pub fn object_name(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn object_by_name(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn source_of(&self, f: usize) -> usize {
        self.morphisms[f].source
    }

    pub fn target_of(&self, f: usize) -> usize {
        self.morphisms[f].target
    }

    pub fn identity_of(&self, a: usize) -> usize {
        self.identities[a]
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[&(a, b)]
    }

    /// `f ∘ g`, when the table defines it.
    pub fn compose_ids(&self, f: usize, g: usize) -> Option<usize> {
        self.composition.get(&(f, g)).copied()
    }

    pub fn composition_entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.composition.iter().map(|(&k, &v)| (k, v))
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn families_into(&self, c: usize) -> impl Iterator<Item = &Family> {
        self.families.iter().filter(move |f| f.target == c)
    }

    pub fn covers(&self, target: usize, maps: &[usize]) -> bool {
        if maps.iter().any(|&f| f >= self.morphisms.len() || self.morphisms[f].target != target) {
            return false;
        }
        let mut kept: Vec<usize> = maps.iter().copied().filter(|&f| self.morphisms[f].source != self.basepoint).collect();
        if kept.is_empty() && target == self.basepoint {
            return true;
        }
        kept.sort_unstable();
        self.family_set.contains(&Family { target, maps: kept })
    }

    /// Checks the axioms, with composition closure tested on every composite
    /// family of at most `closure_bound` maps.
    pub fn validate(&self, closure_bound: usize) -> ValidationReport {
        let mut v = BTreeSet::new();
        let mut push = |kind, witness: String| {
            v.insert(Violation { kind, witness });
        };
        let b = self.basepoint;
        for &f in self.hom(b, b) {
            if f != self.identities[b] {
                push(ViolationKind::BasepointEndomorphism, self.morphism_name(f).to_string());
            }
        }
        for c in self.proper_objects() {
            for &f in self.hom(c, b) {
                push(ViolationKind::MapIntoBasepoint, self.morphism_name(f).to_string());
            }
            let n = self.hom(b, c).len();
            if n != 1 {
                push(ViolationKind::InitialMapCount, format!("{} maps * → {}", n, self.objects[c]));
            }
        }
        for k in 0..=3 {
            if !self.covers(b, &vec![self.identities[b]; k]) {
                push(ViolationKind::BasepointCover, format!("{k} copies of id_*"));
            }
        }
        for (f, m) in self.morphisms.iter().enumerate() {
            let (ids, idt) = (self.identities[m.source], self.identities[m.target]);
            if self.compose_ids(f, ids) != Some(f) || self.compose_ids(idt, f) != Some(f) {
                push(ViolationKind::IdentityLaw, m.name.clone());
            }
        }
        for (f, mf) in self.morphisms.iter().enumerate() {
            for g in (0..self.morphisms.len()).filter(|&g| self.morphisms[g].target == mf.source) {
                match self.compose_ids(f, g) {
                    None => push(
                        ViolationKind::MissingComposite,
                        format!("{} ∘ {}", mf.name, self.morphisms[g].name),
                    ),
                    Some(fg) => {
                        let m = &self.morphisms[fg];
                        if m.source != self.morphisms[g].source || m.target != mf.target {
                            push(
                                ViolationKind::MissingComposite,
                                format!("{} ∘ {} has the wrong endpoints", mf.name, self.morphisms[g].name),
                            );
                        }
                    }
                }
            }
        }
        for (&(f, g), &fg) in &self.composition {
            for h in (0..self.morphisms.len()).filter(|&h| self.morphisms[h].target == self.morphisms[g].source) {
                let left = self.compose_ids(fg, h);
                let right = self.compose_ids(g, h).and_then(|gh| self.compose_ids(f, gh));
                if left.is_some() && right.is_some() && left != right {
                    push(
                        ViolationKind::NotAssociative,
                        format!("({}, {}, {})", self.morphism_name(f), self.morphism_name(g), self.morphism_name(h)),
                    );
                }
            }
        }
        for c in self.proper_objects() {
            if !self.covers(c, &[self.identities[c]]) {
                push(ViolationKind::MissingIdentityCover, self.objects[c].clone());
            }
        }
        for w in self.closure_failures(closure_bound) {
            push(ViolationKind::ClosureFailure, w);
        }
        ValidationReport { violations: v.into_iter().collect() }
    }

    fn closure_failures(&self, bound: usize) -> BTreeSet<String> {
        let mut covers_of: Vec<Vec<Vec<usize>>> = vec![Vec::new(); self.objects.len()];
        for fam in &self.families {
            covers_of[fam.target].push(fam.maps.clone());
        }
        for (c, list) in covers_of.iter_mut().enumerate() {
            let id = vec![self.identities[c]];
            if !list.contains(&id) {
                list.push(id);
            }
            if c == self.basepoint && !list.contains(&Vec::new()) {
                list.push(Vec::new());
            }
        }
        let mut out = BTreeSet::new();
        for fam in &self.families {
            let mut acc = Vec::new();
            self.extend_composites(fam, 0, &mut acc, bound, &covers_of, &mut out);
        }
        out
    }

    fn extend_composites(
        &self,
        fam: &Family,
        i: usize,
        acc: &mut Vec<usize>,
        bound: usize,
        covers_of: &[Vec<Vec<usize>>],
        out: &mut BTreeSet<String>,
    ) {
        if acc.len() > bound {
            return;
        }
        if i == fam.maps.len() {
            if !self.covers(fam.target, acc) {
                let mut names: Vec<&str> = acc.iter().map(|&f| self.morphism_name(f)).collect();
                names.sort_unstable();
                out.insert(format!("{{{}}} → {}", names.join(", "), self.objects[fam.target]));
            }
            return;
        }
        let f = fam.maps[i];
        'inner: for inner in &covers_of[self.morphisms[f].source] {
            let len = acc.len();
            for &h in inner {
                match self.compose_ids(f, h) {
                    Some(fh) => acc.push(fh),
                    None => {
                        acc.truncate(len);
                        continue 'inner;
                    }
                }
            }
            self.extend_composites(fam, i + 1, acc, bound, covers_of, out);
            acc.truncate(len);
        }
    }

    pub fn to_json(&self) -> String {
        let file = CatFile {
            version: 1,
            name: self.name.clone(),
            basepoint: self.objects[self.basepoint].clone(),
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| MorphFile {
                    name: m.name.clone(),
                    source: self.objects[m.source].clone(),
                    target: self.objects[m.target].clone(),
                })
                .collect(),
            identities: self
                .identities
                .iter()
                .enumerate()
                .map(|(a, &i)| (self.objects[a].clone(), self.morphisms[i].name.clone()))
                .collect(),
            composition: self
                .composition
                .iter()
                .map(|(&(f, g), &fg)| {
                    [self.morphisms[f].name.clone(), self.morphisms[g].name.clone(), self.morphisms[fg].name.clone()]
                })
                .collect(),
            covers: self
                .families
                .iter()
                .map(|fam| CoverFile {
                    target: self.objects[fam.target].clone(),
                    maps: fam.maps.iter().map(|&f| self.morphisms[f].name.clone()).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, CatError> {
        let file: CatFile = serde_json::from_str(text).map_err(|e| CatError::Parse(e.to_string()))?;
        if file.version != 1 {
            return Err(CatError::Parse(format!("unsupported version {}", file.version)));
        }
        let obj: HashMap<&str, usize> = file.objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        let find_obj = |n: &str| obj.get(n).copied().ok_or_else(|| CatError::Parse(format!("unknown object {n:?}")));
        let morphisms = file
            .morphisms
            .iter()
            .map(|m| {
                Ok(MorphismInfo { name: m.name.clone(), source: find_obj(&m.source)?, target: find_obj(&m.target)? })
            })
            .collect::<Result<Vec<_>, CatError>>()?;
        let mor: HashMap<&str, usize> = file.morphisms.iter().enumerate().map(|(i, m)| (m.name.as_str(), i)).collect();
        let find_mor = |n: &str| mor.get(n).copied().ok_or_else(|| CatError::Parse(format!("unknown morphism {n:?}")));
        let mut identities = vec![usize::MAX; file.objects.len()];
        for (o, i) in &file.identities {
            identities[find_obj(o)?] = find_mor(i)?;
        }
        if identities.contains(&usize::MAX) {
            return Err(CatError::Parse("every object needs an identity".into()));
        }
        let mut composition = BTreeMap::new();
        for [f, g, fg] in &file.composition {
            composition.insert((find_mor(f)?, find_mor(g)?), find_mor(fg)?);
        }
        let families = file
            .covers
            .iter()
            .map(|c| {
                Ok(Family {
                    target: find_obj(&c.target)?,
                    maps: c.maps.iter().map(|m| find_mor(m)).collect::<Result<_, _>>()?,
                })
            })
            .collect::<Result<Vec<_>, CatError>>()?;
        Self::from_parts(&file.name, file.objects.clone(), find_obj(&file.basepoint)?, morphisms, identities, composition, families)
    }
}

fn unique<'a>(names: impl Iterator<Item = &'a String>, what: &str) -> Result<(), CatError> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(CatError::Invalid(format!("duplicate {what} name {n:?}")));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct CatFile {
    version: u32,
    name: String,
    basepoint: String,
    objects: Vec<String>,
    morphisms: Vec<MorphFile>,
    identities: BTreeMap<String, String>,
    composition: Vec<[String; 3]>,
    covers: Vec<CoverFile>,
}

#[derive(Serialize, Deserialize)]
struct MorphFile {
    name: String,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
struct CoverFile {
    target: String,
    maps: Vec<String>,
}

/// Incremental construction by name. Identities `id_X`, the initial maps
/// `!X`, and every composite they force are added automatically.
#[derive(Clone, Debug)]
pub struct FinCatBuilder {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<MorphismInfo>,
    identities: Vec<usize>,
    composition: BTreeMap<(usize, usize), usize>,
    families: Vec<Family>,
    errors: Vec<String>,
}

impl FinCatBuilder {
    pub fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            objects: vec!["*".into()],
            morphisms: vec![MorphismInfo { name: "id_*".into(), source: 0, target: 0 }],
            identities: vec![0],
            composition: BTreeMap::new(),
            families: Vec::new(),
            errors: Vec::new(),
        }
    }

    pub fn object(mut self, name: &str) -> Self {
        let a = self.objects.len();
        self.objects.push(name.to_string());
        self.identities.push(self.morphisms.len());
        self.morphisms.push(MorphismInfo { name: format!("id_{name}"), source: a, target: a });
        self.morphisms.push(MorphismInfo { name: format!("!{name}"), source: 0, target: a });
        self
    }

    pub fn morphism(mut self, name: &str, source: &str, target: &str) -> Self {
        match (self.obj(source), self.obj(target)) {
            (Some(s), Some(t)) => self.morphisms.push(MorphismInfo { name: name.to_string(), source: s, target: t }),
            _ => self.errors.push(format!("morphism {name}: unknown endpoint")),
        }
        self
    }

    /// Records `f ∘ g = fg`.
    pub fn compose(mut self, f: &str, g: &str, fg: &str) -> Self {
        match (self.mor(f), self.mor(g), self.mor(fg)) {
            (Some(f), Some(g), Some(fg)) => {
                self.composition.insert((f, g), fg);
            }
            _ => self.errors.push(format!("composite {f} ∘ {g}: unknown morphism")),
        }
        self
    }

    pub fn cover(mut self, target: &str, maps: &[&str]) -> Self {
        let t = self.obj(target);
        let ms: Option<Vec<usize>> = maps.iter().map(|m| self.mor(m)).collect();
        match (t, ms) {
            (Some(target), Some(maps)) => self.families.push(Family { target, maps }),
            _ => self.errors.push(format!("cover of {target}: unknown name")),
        }
        self
    }

    pub fn identity_covers(mut self) -> Self {
        for a in 1..self.objects.len() {
            self.families.push(Family { target: a, maps: vec![self.identities[a]] });
        }
        self
    }

    fn obj(&self, n: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == n)
    }

    fn mor(&self, n: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == n)
    }

    pub fn build(mut self) -> Result<FinCatFam, CatError> {
        if let Some(e) = self.errors.first() {
            return Err(CatError::Invalid(e.clone()));
        }
        let initial: Vec<Option<usize>> = (0..self.objects.len())
            .map(|a| if a == 0 { Some(0) } else { self.mor(&format!("!{}", self.objects[a])) })
            .collect();
        for f in 0..self.morphisms.len() {
            let (s, t) = (self.morphisms[f].source, self.morphisms[f].target);
            self.composition.entry((f, self.identities[s])).or_insert(f);
            self.composition.entry((self.identities[t], f)).or_insert(f);
            if let (Some(bang_s), Some(bang_t)) = (initial[s], initial[t]) {
                self.composition.entry((f, bang_s)).or_insert(bang_t);
            }
        }
        FinCatFam::from_parts(
            &self.name,
            self.objects,
            0,
            self.morphisms,
            self.identities,
            self.composition,
            self.families,
        )
    }
}

impl CoverCategory for FinCatFam {
    type Object = usize;
    type Morphism = usize;

    fn source(&self, f: &usize) -> usize {
        self.source_of(*f)
    }

    fn target(&self, f: &usize) -> usize {
        self.target_of(*f)
    }

    fn identity(&self, a: &usize) -> usize {
        self.identity_of(*a)
    }

    fn compose(&self, f: &usize, g: &usize) -> Result<usize, CatError> {
        self.compose_ids(*f, *g).ok_or_else(|| {
            CatError::Mismatch(format!("{} ∘ {} is undefined", self.morphism_name(*f), self.morphism_name(*g)))
        })
    }

    fn is_basepoint(&self, a: &usize) -> bool {
        *a == self.basepoint
    }

    fn is_covering(&self, target: &usize, family: &[usize]) -> Result<bool, CatError> {
        Ok(self.covers(*target, family))
    }
}

/// A structure-preserving bijection between two finite categories, given as
/// object and morphism maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatIsomorphism {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

/// Backtracking search for an isomorphism of categories with covering
/// families that fixes the basepoint. Meant for small categories.
pub fn find_isomorphism(a: &FinCatFam, b: &FinCatFam) -> Option<CatIsomorphism> {
    if a.object_count() != b.object_count()
        || a.morphism_count() != b.morphism_count()
        || a.families.len() != b.families.len()
    {
        return None;
    }
    let n = a.object_count();
    let mut obj = vec![usize::MAX; n];
    let mut used = vec![false; n];
    obj[a.basepoint] = b.basepoint;
    used[b.basepoint] = true;
    search_objects(a, b, 0, &mut obj, &mut used)
}

fn search_objects(
    a: &FinCatFam,
    b: &FinCatFam,
    i: usize,
    obj: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<CatIsomorphism> {
    let n = obj.len();
    if i == n {
        for x in 0..n {
            for y in 0..n {
                if a.hom(x, y).len() != b.hom(obj[x], obj[y]).len() {
                    return None;
                }
            }
        }
        let mut mor = vec![usize::MAX; a.morphism_count()];
        let mut mused = vec![false; b.morphism_count()];
        for x in 0..n {
            mor[a.identity_of(x)] = b.identity_of(obj[x]);
            mused[b.identity_of(obj[x])] = true;
        }
        return search_morphisms(a, b, 0, obj, &mut mor, &mut mused);
    }
    if i == a.basepoint {
        return search_objects(a, b, i + 1, obj, used);
    }
    for t in 0..n {
        if used[t] {
            continue;
        }
        obj[i] = t;
        used[t] = true;
        if let Some(iso) = search_objects(a, b, i + 1, obj, used) {
            return Some(iso);
        }
        used[t] = false;
    }
    obj[i] = usize::MAX;
    None
}

fn search_morphisms(
    a: &FinCatFam,
    b: &FinCatFam,
    f: usize,
    obj: &[usize],
    mor: &mut Vec<usize>,
    mused: &mut Vec<bool>,
) -> Option<CatIsomorphism> {
    if f == a.morphism_count() {
        let ok = a.families.iter().all(|fam| {
            let image: Vec<usize> = fam.maps.iter().map(|&m| mor[m]).collect();
            b.covers(obj[fam.target], &image)
        });
        return ok.then(|| CatIsomorphism { objects: obj.to_vec(), morphisms: mor.clone() });
    }
    if mor[f] != usize::MAX {
        return search_morphisms(a, b, f + 1, obj, mor, mused);
    }
    let (s, t) = (obj[a.source_of(f)], obj[a.target_of(f)]);
    for &cand in b.hom(s, t) {
        if mused[cand] {
            continue;
        }
        mor[f] = cand;
        mused[cand] = true;
        if consistent(a, b, mor) {
            if let Some(iso) = search_morphisms(a, b, f + 1, obj, mor, mused) {
                return Some(iso);
            }
        }
        mused[cand] = false;
    }
    mor[f] = usize::MAX;
    None
}

fn consistent(a: &FinCatFam, b: &FinCatFam, mor: &[usize]) -> bool {
    a.composition.iter().all(|(&(f, g), &fg)| {
        if mor[f] == usize::MAX || mor[g] == usize::MAX || mor[fg] == usize::MAX {
            return true;
        }
        b.compose_ids(mor[f], mor[g]) == Some(mor[fg])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> FinCatFam {
        FinCatBuilder::new("toy")
            .object("a")
            .object("b")
            .morphism("f", "b", "a")
            .identity_covers()
            .cover("a", &["f", "f"])
            .build()
            .unwrap()
    }

    #[test]
    fn toy_category_is_valid() {
        let c = toy();
        let r = c.validate(DEFAULT_CLOSURE_BOUND);
        assert!(r.is_valid(), "{:?}", r.violations);
        let a = c.object_by_name("a").unwrap();
        let f = c.morphism_by_name("f").unwrap();
        assert!(c.covers(a, &[f, f]));
        assert!(!c.covers(a, &[f]));
        let bang_a = c.morphism_by_name("!a").unwrap();
        assert!(c.covers(a, &[f, bang_a, f]));
    }

    #[test]
    fn missing_identity_cover_is_reported() {
        let c = FinCatBuilder::new("bare").object("a").build().unwrap();
        let r = c.validate(DEFAULT_CLOSURE_BOUND);
        assert!(r.has(ViolationKind::MissingIdentityCover));
    }

    #[test]
    fn closure_failure_is_reported() {
        // {f, f} covers a but nothing covers b twice, and {g} covers b:
        // the composite {f∘g, f∘g} is missing.
        let c = FinCatBuilder::new("open")
            .object("a")
            .object("b")
            .object("c")
            .morphism("f", "b", "a")
            .morphism("g", "c", "b")
            .morphism("fg", "c", "a")
            .compose("f", "g", "fg")
            .identity_covers()
            .cover("a", &["f", "f"])
            .cover("b", &["g"])
            .build()
            .unwrap();
        let r = c.validate(DEFAULT_CLOSURE_BOUND);
        assert!(r.has(ViolationKind::ClosureFailure), "{:?}", r.violations);
    }

    #[test]
    fn json_round_trip_and_self_isomorphism() {
        let c = toy();
        let back = FinCatFam::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert!(find_isomorphism(&c, &back).is_some());
        assert!(FinCatFam::from_json("{").is_err());
    }
}
