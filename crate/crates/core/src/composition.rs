//! Compositions, partitions and straightening of composition Schur functions.
//!
//! For a composition `L = (L_1, ..., L_k)` the composition Schur function is the
//! Jacobi-Trudi determinant `s_L = det(h_{L_i - i + j})`. Every such determinant
//! is zero or `±s_μ` for a partition `μ`; [`straighten`] computes which by sorting
//! the row values `L_i - i`, and [`straighten_by_raises`] reaches the same answer
//! through a chain of raising operations `L -> L^(i)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};

/// Largest size accepted for a composition or partition, so that every row
/// value `L_i - i` and every raised part fits in an `i64`.
const MAX_SIZE: usize = i64::MAX as usize;

fn checked_size(parts: &[usize]) -> Result<usize> {
    parts
        .iter()
        .try_fold(0usize, |acc, &p| acc.checked_add(p))
        .filter(|&s| s <= MAX_SIZE)
        .ok_or(Error::Overflow("composition size"))
}

fn write_parts(
    f: &mut fmt::Formatter<'_>,
    parts: &[usize],
    open: &str,
    close: &str,
) -> fmt::Result {
    f.write_str(open)?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(close)
}

/// Canonical order shared by compositions and partitions: size, then length,
/// then lexicographic.
fn canonical_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let size = |p: &[usize]| p.iter().sum::<usize>();
    size(a)
        .cmp(&size(b))
        .then(a.len().cmp(&b.len()))
        .then_with(|| a.cmp(b))
}

/// A finite sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart {
                index: pos + 1,
                value: 0,
            });
        }
        checked_size(&parts)?;
        Ok(Composition { parts })
    }

    /// The empty composition of 0.
    pub fn empty() -> Self {
        Composition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// 1-based part access, `L_i`.
    pub fn part(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|i| self.parts.get(i).copied())
    }

    /// Row values `L_i - i` of the Jacobi-Trudi matrix (1-based `i`).
    pub fn row_values(&self) -> Vec<i64> {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 - (i as i64 + 1))
            .collect()
    }

    /// Returns the partition with the same parts, if the parts are weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.parts.clone()).ok()
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.parts, &other.parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts, "(", ")")
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

/// Builds a composition from signed integers, rejecting any part `<= 0`.
pub fn make_composition(parts: &[i64]) -> Result<Composition> {
    let parts = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            if p <= 0 {
                Err(Error::NonPositivePart {
                    index: i + 1,
                    value: p,
                })
            } else {
                Ok(p as usize)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Composition::new(parts)
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart {
                index: pos + 1,
                value: 0,
            });
        }
        if let Some(pos) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition { index: pos + 2 });
        }
        checked_size(&parts)?;
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn to_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.parts, &other.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts, "(", ")")
    }
}

/// All partitions of `n`, in canonical order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All `2^(n-1)` compositions of `n` (one, the empty composition, for `n = 0`),
/// in canonical order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=n {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// The value of a composition Schur function: zero, or a signed Schur function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignedPartition {
    Zero,
    Term { sign: Sign, shape: Partition },
}

impl SignedPartition {
    pub fn plus(shape: Partition) -> Self {
        SignedPartition::Term {
            sign: Sign::Plus,
            shape,
        }
    }

    pub fn minus(shape: Partition) -> Self {
        SignedPartition::Term {
            sign: Sign::Minus,
            shape,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SignedPartition::Zero)
    }

    pub fn negate(&self) -> Self {
        match self {
            SignedPartition::Zero => SignedPartition::Zero,
            SignedPartition::Term { sign, shape } => SignedPartition::Term {
                sign: -*sign,
                shape: shape.clone(),
            },
        }
    }

    /// The sign as `+1`, `-1`, or `0` for zero.
    pub fn sign_value(&self) -> i64 {
        match self {
            SignedPartition::Zero => 0,
            SignedPartition::Term { sign, .. } => sign.as_i64(),
        }
    }

    pub fn shape(&self) -> Option<&Partition> {
        match self {
            SignedPartition::Zero => None,
            SignedPartition::Term { shape, .. } => Some(shape),
        }
    }
}

impl Neg for SignedPartition {
    type Output = SignedPartition;

    fn neg(self) -> SignedPartition {
        self.negate()
    }
}

/// Formats as `+ s[3,2]`, `- s[3,2]` or `0`.
impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedPartition::Zero => f.write_str("0"),
            SignedPartition::Term { sign, shape } => {
                f.write_str(match sign {
                    Sign::Plus => "+ s",
                    Sign::Minus => "- s",
                })?;
                write_parts(f, shape.parts(), "[", "]")
            }
        }
    }
}

/// The raising operation `L^(i)`: replaces `(L_{i-1}, L_i)` by `(L_i - 1, L_{i-1} + 1)`.
///
/// `i` is 1-based and must satisfy `2 <= i <= k` with `L_i >= 2`.
pub fn raise(comp: &Composition, i: usize) -> Result<Composition> {
    let len = comp.len();
    if i < 2 || i > len {
        return Err(Error::RaiseIndexOutOfRange { index: i, len });
    }
    let (prev, cur) = (comp.parts[i - 2], comp.parts[i - 1]);
    if cur < 2 {
        return Err(Error::RaisePartTooSmall {
            index: i,
            part: cur,
        });
    }
    let mut parts = comp.parts.clone();
    parts[i - 2] = cur - 1;
    parts[i - 1] = prev.checked_add(1).ok_or(Error::Overflow("raise"))?;
    Ok(Composition { parts })
}

/// Turns strictly decreasing row values into `(sign, shape)`, where
/// `shape_j = value_j + j`. A zero shape entry truncates; a negative one means
/// some row of the determinant is identically zero.
fn shape_from_sorted_values(sign: Sign, sorted: &[i64]) -> SignedPartition {
    let mut parts = Vec::with_capacity(sorted.len());
    for (j, &v) in sorted.iter().enumerate() {
        let part = v + j as i64 + 1;
        if part < 0 {
            return SignedPartition::Zero;
        }
        parts.push(part as usize);
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    // A zero followed by a positive entry cannot happen: sorted values are strictly decreasing.
    SignedPartition::Term {
        sign,
        shape: Partition { parts },
    }
}

/// Straightens `s_L` by sorting the row values `L_i - i` into decreasing order.
pub fn straighten(comp: &Composition) -> SignedPartition {
    let values = comp.row_values();
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].cmp(&values[a]));
    if order.windows(2).any(|w| values[w[0]] == values[w[1]]) {
        return SignedPartition::Zero;
    }
    let inversions = (0..values.len())
        .flat_map(|a| (a + 1..values.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| values[a] < values[b])
        .count();
    let sign = if inversions % 2 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    let sorted: Vec<i64> = order.iter().map(|&i| values[i]).collect();
    shape_from_sorted_values(sign, &sorted)
}

/// One step of a raising chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaiseStep {
    pub index: usize,
    pub before: Composition,
    pub after: Composition,
}

/// The full trace of [`straighten_by_raises`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaiseChain {
    pub input: Composition,
    pub steps: Vec<RaiseStep>,
    /// Set when the chain stopped at a composition with `L^(i) = L`.
    pub fixed_at: Option<usize>,
    pub result: SignedPartition,
}

/// Straightens `s_L` by repeatedly applying `L -> L^(i)` at the smallest
/// index `i` with `L_{i-1} - (i-1) <= L_i - i`, flipping the sign each time.
/// Stops with zero as soon as that index has `L^(i) = L`.
pub fn straighten_by_raises(comp: &Composition) -> RaiseChain {
    let mut current = comp.clone();
    let mut sign = Sign::Plus;
    let mut steps = Vec::new();
    loop {
        let values = current.row_values();
        let Some(pos) = values.windows(2).position(|w| w[0] <= w[1]) else {
            return RaiseChain {
                input: comp.clone(),
                steps,
                fixed_at: None,
                result: shape_from_sorted_values(sign, &values),
            };
        };
        let i = pos + 2;
        if values[pos] == values[pos + 1] {
            return RaiseChain {
                input: comp.clone(),
                steps,
                fixed_at: Some(i),
                result: SignedPartition::Zero,
            };
        }
        // values[pos] < values[pos + 1] forces L_i >= L_{i-1} + 2 >= 2.
        let next = raise(&current, i).expect("raise precondition holds when row values increase");
        steps.push(RaiseStep {
            index: i,
            before: current,
            after: next.clone(),
        });
        current = next;
        sign = -sign;
    }
}
