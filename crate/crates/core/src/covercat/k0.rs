use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{CatError, FinCatFam};
use crate::exactnum::{ExactReal, Rational};

pub type Matrix = Vec<Vec<BigInt>>;

/// `U · M · V = diag(d)` with `U`, `V` unimodular, `d_i ≥ 0` and
/// `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<BigInt>,
    pub u: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn smith_normal_form(m: &Matrix, cols: usize) -> SmithForm {
    let rows = m.len();
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut vi = identity(cols);
    let k = rows.min(cols);

    let row_axpy = |mat: &mut Matrix, dst: usize, q: &BigInt, src: usize| {
        let s = mat[src].clone();
        for (x, y) in mat[dst].iter_mut().zip(&s) {
            *x += q * y;
        }
    };
    let col_axpy = |mat: &mut Matrix, dst: usize, q: &BigInt, src: usize| {
        for r in mat.iter_mut() {
            let y = r[src].clone();
            r[dst] += q * y;
        }
    };
    let swap_cols = |mat: &mut Matrix, i: usize, j: usize| {
        for r in mat.iter_mut() {
            r.swap(i, j);
        }
    };

    let mut t = 0;
    while t < k {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(p, q)| a[i][j].abs().cmp(&a[p][q].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        vi.swap(t, pj);

        let mut clean = true;
        for i in (t + 1)..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = -a[i][t].div_floor(&a[t][t]);
            row_axpy(&mut a, i, &q, t);
            row_axpy(&mut u, i, &q, t);
            clean &= a[i][t].is_zero();
        }
        for j in (t + 1)..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            col_axpy(&mut a, j, &-&q, t);
            col_axpy(&mut v, j, &-&q, t);
            row_axpy(&mut vi, t, &q, j);
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        let bad = ((t + 1)..rows).find(|&i| ((t + 1)..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
        if let Some(i) = bad {
            row_axpy(&mut a, t, &BigInt::one(), i);
            row_axpy(&mut u, t, &BigInt::one(), i);
            continue;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
        t += 1;
    }
    let diagonal = (0..k).map(|i| a[i][i].clone()).collect();
    SmithForm { rows, cols, diagonal, u, v, v_inv: vi }
}

/// An element of `⊕ ℤ/d_i ⊕ ℤ^r`; a modulus of 0 marks a free coordinate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct K0Class {
    pub coords: Vec<BigInt>,
    pub moduli: Vec<BigInt>,
}

impl K0Class {
    fn reduce(mut self) -> Self {
        for (c, m) in self.coords.iter_mut().zip(&self.moduli) {
            if !m.is_zero() {
                *c = c.mod_floor(m);
            }
        }
        self
    }

    pub fn zero_like(&self) -> Self {
        K0Class { coords: vec![BigInt::zero(); self.coords.len()], moduli: self.moduli.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &K0Class) -> K0Class {
        K0Class { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(), moduli: self.moduli.clone() }
            .reduce()
    }

    pub fn scale(&self, k: &BigInt) -> K0Class {
        K0Class { coords: self.coords.iter().map(|a| a * k).collect(), moduli: self.moduli.clone() }.reduce()
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `K₀` as generators (proper objects) modulo one relation per stored family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Presentation {
    pub generators: Vec<usize>,
    pub names: Vec<String>,
    pub relations: Matrix,
    pub smith: SmithForm,
}

pub fn k0(c: &FinCatFam) -> K0Presentation {
    let generators: Vec<usize> = c.proper_objects().collect();
    let col = |obj: usize| generators.iter().position(|&g| g == obj);
    let n = generators.len();
    let relations: Matrix = c
        .families()
        .iter()
        .filter(|fam| fam.target != c.basepoint())
        .map(|fam| {
            let mut row = vec![BigInt::zero(); n];
            if let Some(j) = col(fam.target) {
                row[j] += 1;
            }
            for &m in &fam.maps {
                if let Some(j) = col(c.source_of(m)) {
                    row[j] -= 1;
                }
            }
            row
        })
        .collect();
    let smith = smith_normal_form(&relations, n);
    K0Presentation {
        names: generators.iter().map(|&g| c.object_name(g).to_string()).collect(),
        generators,
        relations,
        smith,
    }
}

impl K0Presentation {
    fn diag(&self, i: usize) -> BigInt {
        self.smith.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coordinates kept in the canonical quotient: those with `d_i ≠ 1`.
    fn kept(&self) -> Vec<usize> {
        (0..self.generators.len()).filter(|&i| !self.diag(i).is_one()).collect()
    }

    pub fn moduli(&self) -> Vec<BigInt> {
        self.kept().into_iter().map(|i| self.diag(i)).collect()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.moduli().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.moduli().iter().filter(|d| d.is_zero()).count()
    }

    /// `ℤ/d₁ ⊕ … ⊕ ℤ^r`, or `0`.
    pub fn group_string(&self) -> String {
        let mut parts: Vec<String> = self.torsion().iter().map(|d| format!("ℤ/{d}")).collect();
        match self.rank() {
            0 => {}
            1 => parts.push("ℤ".into()),
            r => parts.push(format!("ℤ^{r}")),
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }

    pub fn class_of(&self, object: usize) -> Option<K0Class> {
        let a = self.generators.iter().position(|&g| g == object)?;
        let kept = self.kept();
        Some(
            K0Class {
                coords: kept.iter().map(|&i| self.smith.v[a][i].clone()).collect(),
                moduli: kept.iter().map(|&i| self.diag(i)).collect(),
            }
            .reduce(),
        )
    }

    pub fn zero_class(&self) -> K0Class {
        let moduli = self.moduli();
        K0Class { coords: vec![BigInt::zero(); moduli.len()], moduli }
    }
}

impl fmt::Display for K0Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.group_string())
    }
}

/// Values a measure may take: enough structure for integer combinations.
pub trait MeasureValue: Clone + PartialEq + fmt::Debug {
    fn add(&self, other: &Self) -> Self;
    fn mul_int(&self, k: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
}

impl MeasureValue for ExactReal {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_int(&self, k: &BigInt) -> Self {
        self.scale(&Rational::from_integer(k.clone()))
    }
    fn is_zero(&self) -> bool {
        ExactReal::is_zero(self)
    }
}

impl MeasureValue for K0Class {
    fn add(&self, other: &Self) -> Self {
        K0Class::add(self, other)
    }
    fn mul_int(&self, k: &BigInt) -> Self {
        self.scale(k)
    }
    fn is_zero(&self) -> bool {
        K0Class::is_zero(self)
    }
}

/// The homomorphism out of `K₀` through which a measure factors: the value
/// on each canonical coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureFactorization<V> {
    pub moduli: Vec<BigInt>,
    pub images: Vec<V>,
}

/// Checks that `mu` (one value per generator, in presentation order) is
/// additive on every stored family, and solves for its factorization
/// through the classes.
pub fn universal_measure_check<V: MeasureValue>(
    c: &FinCatFam,
    mu: &[V],
    zero: &V,
) -> Result<MeasureFactorization<V>, CatError> {
    let p = k0(c);
    let n = p.generators.len();
    if mu.len() != n {
        return Err(CatError::Mismatch(format!("{} values for {} generators", mu.len(), n)));
    }
    let combo = |row: &[BigInt]| row.iter().zip(mu).fold(zero.clone(), |acc, (k, m)| acc.add(&m.mul_int(k)));
    let family_rows: Vec<usize> = c
        .families()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.target != c.basepoint())
        .map(|(i, _)| i)
        .collect();
    for (row, &fam) in p.relations.iter().zip(&family_rows) {
        if !combo(row).is_zero() {
            return Err(CatError::InconsistentMeasure(fam));
        }
    }
    let kept = p.kept();
    let images: Vec<V> = kept.iter().map(|&i| combo(&p.smith.v_inv[i])).collect();
    let moduli = p.moduli();
    for (img, d) in images.iter().zip(&moduli) {
        if !d.is_zero() && !img.mul_int(d).is_zero() {
            return Err(CatError::Mismatch("torsion coordinate has a non-torsion image".into()));
        }
    }
    for (a, m) in mu.iter().enumerate() {
        let cls = p.class_of(p.generators[a]).expect("generator");
        let value = cls.coords.iter().zip(&images).fold(zero.clone(), |acc, (k, img)| acc.add(&img.mul_int(k)));
        if &value != m {
            return Err(CatError::Mismatch(format!("factorization fails on {}", p.names[a])));
        }
    }
    Ok(MeasureFactorization { moduli, images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covercat::{build_ea, toy_two_object, FiniteGroup};

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mul(a: &Matrix, b: &Matrix) -> Matrix {
        let inner = b.len();
        let cols = b.first().map_or(0, |r| r.len());
        a.iter()
            .map(|r| (0..cols).map(|j| (0..inner).map(|k| &r[k] * &b[k][j]).sum()).collect())
            .collect()
    }

    #[test]
    fn snf_of_a_small_matrix() {
        let m = mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&m, 3);
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let d = mul(&mul(&s.u, &m), &s.v);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(d[i][j], want);
            }
        }
        assert_eq!(mul(&s.v, &s.v_inv), identity(3));
    }

    #[test]
    fn toy_relation() {
        let c = toy_two_object();
        let p = k0(&c);
        assert_eq!(p.group_string(), "ℤ");
        let a = p.class_of(c.object_by_name("a").unwrap()).unwrap();
        let b = p.class_of(c.object_by_name("b").unwrap()).unwrap();
        assert_eq!(a, b.scale(&BigInt::from(2)));
    }

    #[test]
    fn ea_z2() {
        let p = k0(&build_ea(&FiniteGroup::cyclic(2), 3));
        assert_eq!(p.group_string(), "ℤ/2");
    }

    #[test]
    fn measure_factorization() {
        let c = toy_two_object();
        let idx = |n: &str| k0(&c).generators.iter().position(|&g| g == c.object_by_name(n).unwrap()).unwrap();
        let mut mu = vec![ExactReal::zero(); 2];
        mu[idx("a")] = ExactReal::integer(6);
        mu[idx("b")] = ExactReal::integer(3);
        let fac = universal_measure_check(&c, &mu, &ExactReal::zero()).unwrap();
        assert_eq!(fac.images.len(), 1);
        let b = k0(&c).class_of(c.object_by_name("b").unwrap()).unwrap();
        assert_eq!(fac.images[0].mul_int(&b.coords[0]), ExactReal::integer(3));
        mu[idx("a")] = ExactReal::integer(5);
        assert!(matches!(
            universal_measure_check(&c, &mu, &ExactReal::zero()),
            Err(CatError::InconsistentMeasure(_))
        ));
    }
}
