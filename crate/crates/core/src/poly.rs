//! Sparse multivariate polynomials with exact `i64` coefficients.
//!
//! Every operation checks for overflow and reports it instead of wrapping.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// An exponent vector, ordered graded-lexicographically: lower total degree
/// first, then larger exponent of `x1`, then of `x2`, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, i64>,
}

fn add_coeff(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b)
        .ok_or(Error::Overflow("polynomial coefficient"))
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial(vec![0; nvars]), 1);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging repeats.
    ///
    /// Panics if an exponent vector does not have length `nvars`.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, i64)>,
    {
        let mut p = Self::zero(nvars);
        for (exp, coeff) in terms {
            p.add_term(Monomial(exp), coeff)?;
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> i64 {
        self.terms
            .get(&Monomial(exp.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn add_term(&mut self, exp: Monomial, coeff: i64) -> Result<()> {
        assert_eq!(
            exp.0.len(),
            self.nvars,
            "exponent vector length must equal nvars"
        );
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c = add_coeff(*c, coeff)?;
                if *c == 0 {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
        Ok(())
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials over different variable counts"
        );
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: i64) -> Result<()> {
        self.check_vars(other);
        for (m, &c) in &other.terms {
            let c = c
                .checked_mul(factor)
                .ok_or(Error::Overflow("polynomial coefficient"))?;
            self.add_term(m.clone(), c)?;
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    pub fn scaled(&self, factor: i64) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        out.add_scaled(self, factor)?;
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other);
        let mut acc: HashMap<Vec<u32>, i64> = HashMap::with_capacity(self.len() * other.len());
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let exp =
                    ma.0.iter()
                        .zip(&mb.0)
                        .map(|(a, b)| a.checked_add(*b))
                        .collect::<Option<Vec<u32>>>()
                        .ok_or(Error::Overflow("exponent"))?;
                let c = ca
                    .checked_mul(cb)
                    .ok_or(Error::Overflow("polynomial coefficient"))?;
                let slot = acc.entry(exp).or_insert(0);
                *slot = add_coeff(*slot, c)?;
            }
        }
        let terms = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(e, c)| (Monomial(e), c))
            .collect();
        Ok(SparsePolynomial {
            nvars: self.nvars,
            terms,
        })
    }

    /// The polynomial with variables `x_i` and `x_{i+1}` exchanged (0-based `i`).
    pub fn swap_vars(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let mut exp = m.0.clone();
                exp.swap(i, i + 1);
                (Monomial(exp), c)
            })
            .collect();
        SparsePolynomial {
            nvars: self.nvars,
            terms,
        }
    }
}

/// True iff `p` is unchanged by every adjacent transposition of variables.
pub fn is_symmetric_poly(p: &SparsePolynomial) -> bool {
    (0..p.nvars().saturating_sub(1)).all(|i| p.swap_vars(i) == *p)
}

/// Formats as `x1^2 + 2*x1*x2 - x3`, or `0`.
impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, &c)) in self.terms.iter().enumerate() {
            let abs = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| {
                        if e == 1 {
                            format!("x{}", v + 1)
                        } else {
                            format!("x{}^{}", v + 1, e)
                        }
                    })
                    .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> SparsePolynomial {
        SparsePolynomial::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let prod = a.checked_mul(&b).unwrap();
        assert_eq!(prod, poly(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
        assert!(a.checked_sub(&a).unwrap().is_zero());
        assert_eq!(a.checked_add(&b).unwrap(), poly(2, &[(&[1, 0], 2)]));
    }

    #[test]
    fn overflow_is_reported() {
        let big = poly(1, &[(&[1], i64::MAX)]);
        assert_eq!(
            big.checked_add(&big),
            Err(Error::Overflow("polynomial coefficient"))
        );
        assert!(big.scaled(2).is_err());
        let huge_exp = poly(1, &[(&[u32::MAX], 1)]);
        assert_eq!(
            huge_exp.checked_mul(&huge_exp),
            Err(Error::Overflow("exponent"))
        );
    }

    #[test]
    fn graded_lex_display() {
        let p = poly(2, &[(&[0, 2], 1), (&[2, 0], 1), (&[1, 1], 1)]);
        assert_eq!(p.to_string(), "x1^2 + x1*x2 + x2^2");
        let q = poly(3, &[(&[0, 0, 0], 3), (&[0, 1, 0], -2), (&[1, 0, 0], 1)]);
        assert_eq!(q.to_string(), "3 + x1 - 2*x2");
        assert_eq!(SparsePolynomial::zero(3).to_string(), "0");
        assert_eq!(poly(1, &[(&[1], -1)]).to_string(), "-x1");
    }

    #[test]
    fn symmetry_check() {
        let e2 = poly(3, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)]);
        assert!(is_symmetric_poly(&e2));
        let x1x2 = poly(3, &[(&[1, 1, 0], 1)]);
        assert!(!is_symmetric_poly(&x1x2));
        assert!(is_symmetric_poly(&SparsePolynomial::zero(0)));
    }
}
