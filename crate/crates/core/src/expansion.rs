//! Formal expansions in the fundamental quasi-symmetric basis `F_L` and the
//! Schur basis `s_λ`, conversion between them, and the polynomial oracle that
//! certifies them in finitely many variables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::composition::{straighten, Composition, Partition, SignedPartition};
use crate::error::{Error, Result};
use crate::poly::{Monomial, SparsePolynomial};
use crate::tableau::enumerate_syt;

/// Index type of a basis: compositions for `F`, partitions for `s`.
pub trait BasisIndex: Ord + Clone + fmt::Debug {
    /// Letter used in expression syntax.
    const LETTER: &'static str;

    fn index_parts(&self) -> &[usize];
}

impl BasisIndex for Composition {
    const LETTER: &'static str = "F";

    fn index_parts(&self) -> &[usize] {
        self.parts()
    }
}

impl BasisIndex for Partition {
    const LETTER: &'static str = "s";

    fn index_parts(&self) -> &[usize] {
        self.parts()
    }
}

/// A finite integer combination of basis elements. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion<K: BasisIndex> {
    terms: BTreeMap<K, i64>,
}

/// `Σ c_L F_L`.
pub type FExpansion = Expansion<Composition>;
/// `Σ c_λ s_λ`.
pub type SchurExpansion = Expansion<Partition>;

impl<K: BasisIndex> Default for Expansion<K> {
    fn default() -> Self {
        Expansion {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: BasisIndex> Expansion<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (K, i64)>>(terms: I) -> Result<Self> {
        let mut e = Self::new();
        for (k, c) in terms {
            e.add_term(k, c)?;
        }
        Ok(e)
    }

    pub fn add_term(&mut self, key: K, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c = c
                    .checked_add(coeff)
                    .ok_or(Error::Overflow("expansion coefficient"))?;
                if *c == 0 {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
        Ok(())
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: i64) -> Result<()> {
        for (k, &c) in &other.terms {
            let c = c
                .checked_mul(factor)
                .ok_or(Error::Overflow("expansion coefficient"))?;
            self.add_term(k.clone(), c)?;
        }
        Ok(())
    }

    pub fn coeff(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> + '_ {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a term, 0 when empty.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|k| k.index_parts().iter().sum())
            .max()
            .unwrap_or(0)
    }
}

/// Formats as `2*s[3,1] - s[2,2]`; the empty expansion prints as `0`.
impl<K: BasisIndex> fmt::Display for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, &c)) in self.terms.iter().enumerate() {
            match (n, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.unsigned_abs();
            if abs != 1 {
                write!(f, "{abs}*")?;
            }
            let parts: Vec<String> = k.index_parts().iter().map(usize::to_string).collect();
            write!(f, "{}[{}]", K::LETTER, parts.join(","))?;
        }
        Ok(())
    }
}

/// `s_λ = Σ_T F_{C(T)}` over standard tableaux `T` of shape `λ`.
pub fn schur_to_f(shape: &Partition) -> Result<FExpansion> {
    let mut out = FExpansion::new();
    for t in enumerate_syt(shape) {
        out.add_term(t.descent_data().composition, 1)?;
    }
    Ok(out)
}

/// Replaces each `F_L` by the composition Schur function `s_L` and straightens.
///
/// The result equals `f` whenever `f` is symmetric; on other input it is only
/// the formal image. See [`verified_convert`] for the checked variant.
pub fn f_to_schur(f: &FExpansion) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::new();
    for (comp, c) in f.iter() {
        if let SignedPartition::Term { sign, shape } = straighten(comp) {
            let c = c
                .checked_mul(sign.as_i64())
                .ok_or(Error::Overflow("expansion coefficient"))?;
            out.add_term(shape, c)?;
        }
    }
    Ok(out)
}

/// `Σ c_λ s_λ` re-expanded in the `F` basis.
pub fn schur_expansion_to_f(g: &SchurExpansion) -> Result<FExpansion> {
    let mut out = FExpansion::new();
    for (shape, c) in g.iter() {
        out.add_scaled(&schur_to_f(shape)?, c)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryCheck {
    Confirmed,
    /// The first composition (canonical order) where `f` and the round trip disagree.
    NotSymmetric {
        composition: Composition,
        input_coeff: i64,
        round_trip_coeff: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conversion {
    pub schur: SchurExpansion,
    pub symmetry: SymmetryCheck,
}

impl Conversion {
    pub fn is_confirmed(&self) -> bool {
        self.symmetry == SymmetryCheck::Confirmed
    }
}

/// Converts `f` to the Schur basis and confirms that the result expands back to `f`,
/// which holds exactly when `f` is symmetric.
pub fn verified_convert(f: &FExpansion) -> Result<Conversion> {
    let schur = f_to_schur(f)?;
    let back = schur_expansion_to_f(&schur)?;
    let mut keys: Vec<&Composition> = f.terms.keys().chain(back.terms.keys()).collect();
    keys.sort();
    keys.dedup();
    let symmetry = keys
        .into_iter()
        .find(|k| f.coeff(k) != back.coeff(k))
        .map_or(SymmetryCheck::Confirmed, |k| SymmetryCheck::NotSymmetric {
            composition: k.clone(),
            input_coeff: f.coeff(k),
            round_trip_coeff: back.coeff(k),
        });
    Ok(Conversion { schur, symmetry })
}

fn exponent(e: usize) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::Overflow("exponent"))
}

/// The complete homogeneous symmetric polynomial `h_k(x_1, ..., x_nvars)`;
/// zero for `k < 0`.
pub fn h_poly(k: i64, nvars: usize) -> Result<SparsePolynomial> {
    if k < 0 {
        return Ok(SparsePolynomial::zero(nvars));
    }
    let k = exponent(usize::try_from(k).map_err(|_| Error::Overflow("degree"))?)?;
    fn rec(var: usize, left: u32, exp: &mut Vec<u32>, out: &mut SparsePolynomial) -> Result<()> {
        if var + 1 == exp.len() {
            exp[var] = left;
            out.add_term(Monomial(exp.clone()), 1)?;
            exp[var] = 0;
            return Ok(());
        }
        for e in (0..=left).rev() {
            exp[var] = e;
            rec(var + 1, left - e, exp, out)?;
        }
        exp[var] = 0;
        Ok(())
    }
    let mut out = SparsePolynomial::zero(nvars);
    if nvars == 0 {
        return Ok(if k == 0 {
            SparsePolynomial::one(0)
        } else {
            out
        });
    }
    rec(0, k, &mut vec![0; nvars], &mut out)?;
    Ok(out)
}

/// `F_L(x_1, ..., x_nvars)`: the sum of `x_{i_1} ... x_{i_n}` over weakly increasing
/// `i_1 <= ... <= i_n` that increase strictly after each partial sum of `L`.
pub fn f_poly(comp: &Composition, nvars: usize) -> Result<SparsePolynomial> {
    let n = comp.size();
    // strict[j]: index j+1 must exceed index j (0-based positions).
    let mut strict = vec![false; n];
    let mut acc = 0;
    for &p in &comp.parts()[..comp.len().saturating_sub(1)] {
        acc += p;
        strict[acc - 1] = true;
    }
    fn rec(
        pos: usize,
        min_var: usize,
        strict: &[bool],
        exp: &mut Vec<u32>,
        out: &mut SparsePolynomial,
    ) -> Result<()> {
        if pos == strict.len() {
            return out.add_term(Monomial(exp.clone()), 1);
        }
        for v in min_var..exp.len() {
            exp[v] += 1;
            let next_min = if strict[pos] { v + 1 } else { v };
            rec(pos + 1, next_min, strict, exp, out)?;
            exp[v] -= 1;
        }
        Ok(())
    }
    exponent(n)?;
    let mut out = SparsePolynomial::zero(nvars);
    rec(0, 0, &strict, &mut vec![0; nvars], &mut out)?;
    Ok(out)
}

/// `det(h_{L_i - i + j})` in `nvars` variables, expanded over all permutations.
pub fn jacobi_trudi_poly(comp: &Composition, nvars: usize) -> Result<SparsePolynomial> {
    let k = comp.len();
    let values = comp.row_values();
    let mut cache: HashMap<i64, SparsePolynomial> = HashMap::new();
    let mut entry = |i: usize, j: usize| -> Result<SparsePolynomial> {
        let idx = values[i] + j as i64 + 1;
        if let Some(p) = cache.get(&idx) {
            return Ok(p.clone());
        }
        let p = h_poly(idx, nvars)?;
        cache.insert(idx, p.clone());
        Ok(p)
    };
    let mut matrix = Vec::with_capacity(k);
    for i in 0..k {
        let row = (0..k).map(|j| entry(i, j)).collect::<Result<Vec<_>>>()?;
        matrix.push(row);
    }

    // The permutation sum grouped by the set of columns used so far: the minor
    // on rows `row..k` and the unused columns is shared by every prefix with the same set.
    fn minor(
        row: usize,
        used: u64,
        matrix: &[Vec<SparsePolynomial>],
        memo: &mut HashMap<u64, SparsePolynomial>,
    ) -> Result<SparsePolynomial> {
        let nvars = matrix[0][0].nvars();
        if row == matrix.len() {
            return Ok(SparsePolynomial::one(nvars));
        }
        if let Some(p) = memo.get(&used) {
            return Ok(p.clone());
        }
        let mut out = SparsePolynomial::zero(nvars);
        for col in 0..matrix.len() {
            if used & (1 << col) != 0 || matrix[row][col].is_zero() {
                continue;
            }
            let rest = minor(row + 1, used | (1 << col), matrix, memo)?;
            if rest.is_zero() {
                continue;
            }
            // Each later column already used adds one inversion.
            let flips = (used >> (col + 1)).count_ones();
            let sign = if flips % 2 == 1 { -1 } else { 1 };
            out.add_scaled(&matrix[row][col].checked_mul(&rest)?, sign)?;
        }
        memo.insert(used, out.clone());
        Ok(out)
    }
    if k == 0 {
        return Ok(SparsePolynomial::one(nvars));
    }
    if k > 64 {
        return Err(Error::Overflow("determinant size"));
    }
    minor(0, 0, &matrix, &mut HashMap::new())
}

/// The Schur polynomial `s_λ(x_1, ..., x_nvars)` from its Jacobi-Trudi determinant.
pub fn schur_poly(shape: &Partition, nvars: usize) -> Result<SparsePolynomial> {
    jacobi_trudi_poly(&shape.to_composition(), nvars)
}

/// Linear extension of a basis-element polynomial to a whole expansion.
pub trait ToPolynomial {
    fn to_poly(&self, nvars: usize) -> Result<SparsePolynomial>;
}

impl ToPolynomial for FExpansion {
    fn to_poly(&self, nvars: usize) -> Result<SparsePolynomial> {
        let mut out = SparsePolynomial::zero(nvars);
        for (comp, c) in self.iter() {
            out.add_scaled(&f_poly(comp, nvars)?, c)?;
        }
        Ok(out)
    }
}

impl ToPolynomial for SchurExpansion {
    fn to_poly(&self, nvars: usize) -> Result<SparsePolynomial> {
        let mut out = SparsePolynomial::zero(nvars);
        for (shape, c) in self.iter() {
            out.add_scaled(&schur_poly(shape, nvars)?, c)?;
        }
        Ok(out)
    }
}

pub fn expansion_poly<E: ToPolynomial + ?Sized>(e: &E, nvars: usize) -> Result<SparsePolynomial> {
    e.to_poly(nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::is_symmetric_poly;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn fexp(terms: &[(&[usize], i64)]) -> FExpansion {
        FExpansion::from_terms(terms.iter().map(|(p, c)| (comp(p), *c))).unwrap()
    }

    fn sexp(terms: &[(&[usize], i64)]) -> SchurExpansion {
        SchurExpansion::from_terms(terms.iter().map(|(p, c)| (part(p), *c))).unwrap()
    }

    fn four_one() -> FExpansion {
        fexp(&[(&[4, 1], 1), (&[3, 2], 1), (&[2, 3], 1), (&[1, 4], 1)])
    }

    #[test]
    fn schur_to_f_examples() {
        assert_eq!(schur_to_f(&part(&[4, 1])).unwrap(), four_one());
        assert_eq!(schur_to_f(&part(&[5])).unwrap(), fexp(&[(&[5], 1)]));
        assert_eq!(
            schur_to_f(&part(&[2, 2])).unwrap(),
            fexp(&[(&[2, 2], 1), (&[1, 2, 1], 1)])
        );
    }

    #[test]
    fn f_to_schur_examples() {
        assert_eq!(f_to_schur(&four_one()).unwrap(), sexp(&[(&[4, 1], 1)]));
        assert_eq!(
            f_to_schur(&fexp(&[(&[3, 2], 1)])).unwrap(),
            sexp(&[(&[3, 2], 1)])
        );
        assert_eq!(
            f_to_schur(&fexp(&[(&[2, 2], 1), (&[1, 2, 1], 1)])).unwrap(),
            sexp(&[(&[2, 2], 1)])
        );
    }

    #[test]
    fn verified_convert_examples() {
        let c = verified_convert(&four_one()).unwrap();
        assert!(c.is_confirmed());
        assert_eq!(c.schur, sexp(&[(&[4, 1], 1)]));

        // s_(1,2) straightens to zero, so the round trip loses F_(1,2) entirely.
        let c = verified_convert(&fexp(&[(&[1, 2], 1)])).unwrap();
        assert_eq!(
            c.symmetry,
            SymmetryCheck::NotSymmetric {
                composition: comp(&[1, 2]),
                input_coeff: 1,
                round_trip_coeff: 0
            }
        );

        let c = verified_convert(&FExpansion::new()).unwrap();
        assert!(c.is_confirmed());
        assert!(c.schur.is_empty());
    }

    #[test]
    fn h_poly_examples() {
        assert!(h_poly(-2, 3).unwrap().is_zero());
        assert_eq!(h_poly(0, 3).unwrap(), SparsePolynomial::one(3));
        assert_eq!(h_poly(2, 2).unwrap().to_string(), "x1^2 + x1*x2 + x2^2");
        assert_eq!(h_poly(0, 0).unwrap(), SparsePolynomial::one(0));
        assert!(h_poly(3, 0).unwrap().is_zero());
    }

    #[test]
    fn f_poly_examples() {
        assert_eq!(f_poly(&comp(&[1, 1]), 2).unwrap().to_string(), "x1*x2");
        for n in 1..=5 {
            assert_eq!(
                f_poly(&comp(&[n]), 3).unwrap(),
                h_poly(n as i64, 3).unwrap()
            );
        }
        assert_eq!(
            four_one().to_poly(4).unwrap(),
            schur_poly(&part(&[4, 1]), 4).unwrap()
        );
        assert_eq!(
            f_poly(&Composition::empty(), 2).unwrap(),
            SparsePolynomial::one(2)
        );
    }

    #[test]
    fn jacobi_trudi_examples() {
        for n in [2, 5] {
            assert!(jacobi_trudi_poly(&comp(&[2, 3]), n).unwrap().is_zero());
            assert_eq!(
                jacobi_trudi_poly(&comp(&[1, 4]), n).unwrap(),
                jacobi_trudi_poly(&comp(&[3, 2]), n)
                    .unwrap()
                    .scaled(-1)
                    .unwrap()
            );
            assert_eq!(
                jacobi_trudi_poly(&comp(&[4]), n).unwrap(),
                h_poly(4, n).unwrap()
            );
        }
        assert!(jacobi_trudi_poly(&comp(&[1, 2, 1]), 4).unwrap().is_zero());
        assert_eq!(
            jacobi_trudi_poly(&Composition::empty(), 3).unwrap(),
            SparsePolynomial::one(3)
        );
    }

    #[test]
    fn schur_poly_examples() {
        assert_eq!(
            schur_poly(&part(&[1]), 3).unwrap().to_string(),
            "x1 + x2 + x3"
        );
        let h = |k| h_poly(k, 4).unwrap();
        let expected = h(2)
            .checked_mul(&h(2))
            .unwrap()
            .checked_sub(&h(1).checked_mul(&h(3)).unwrap())
            .unwrap();
        assert_eq!(schur_poly(&part(&[2, 2]), 4).unwrap(), expected);
        assert_eq!(sexp(&[(&[2, 2], 1)]).to_poly(4).unwrap(), expected);
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_symmetric_poly(&h_poly(3, 4).unwrap()));
        assert!(!is_symmetric_poly(&f_poly(&comp(&[1, 2]), 3).unwrap()));
        assert!(is_symmetric_poly(&schur_poly(&part(&[3, 2]), 5).unwrap()));
    }

    #[test]
    fn expansion_display() {
        let e = sexp(&[(&[3, 1], 2), (&[2, 2], -1)]);
        assert_eq!(e.to_string(), "-s[2,2] + 2*s[3,1]");
        assert_eq!(SchurExpansion::new().to_string(), "0");
        assert_eq!(four_one().to_string(), "F[1,4] + F[2,3] + F[3,2] + F[4,1]");
    }

    #[test]
    fn coefficient_overflow_is_reported() {
        let mut e = fexp(&[(&[1], i64::MAX)]);
        assert_eq!(
            e.add_term(comp(&[1]), 1),
            Err(Error::Overflow("expansion coefficient"))
        );
        let s = sexp(&[(&[1], i64::MIN + 1)]);
        let mut t = SchurExpansion::new();
        assert!(t.add_scaled(&s, 2).is_err());
    }
}
