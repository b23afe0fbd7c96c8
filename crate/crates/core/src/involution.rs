//! The sign-reversing involution θ on standard tableaux and the cancellation
//! report built from it.
//!
//! On a two-row tableau with exactly two runs, the first run `1..j` fills the
//! start of row 1 and determines the tableau `T_j` completely; θ sends `T_j` to
//! `T_{n-j-1}`, which moves the descent composition from `(j, n-j)` to
//! `(n-j-1, j+1)`. On a general tableau θ skips the maximal superstandard block
//! of leading rows and applies the two-run map to the first two runs below it.

use std::collections::HashMap;

use crate::composition::{raise, straighten, Composition, Partition, SignedPartition};
use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::tableau::{enumerate_syt, StandardTableau, Tableau};

fn check_two_run_shape(t: &Tableau) -> Result<(usize, usize)> {
    if t.num_rows() > 2 {
        return Err(Error::NotTwoRows { rows: t.num_rows() });
    }
    let runs = t.runs();
    if runs.len() != 2 {
        return Err(Error::NotTwoRuns { runs: runs.len() });
    }
    let shape = t.shape();
    Ok((shape.parts()[0], shape.parts()[1]))
}

/// The `j` with `T = T_j`: the length of the first run of a two-row, two-run
/// tableau. Always `λ_2 <= j <= λ_1`.
pub fn two_run_index(t: &Tableau) -> Result<usize> {
    check_two_run_shape(t)?;
    Ok(t.runs()[0].len())
}

/// The two-run tableau `T_j` of shape `(first, second)` on entries `1..n`.
fn two_run_tableau(first: usize, second: usize, j: usize) -> Vec<Vec<usize>> {
    let n = first + second;
    let top = (1..=j).chain(j + second + 1..=n).collect();
    let bottom = (j + 1..=j + second).collect();
    vec![top, bottom]
}

/// θ on a two-row tableau with two runs and arbitrary distinct entries.
pub fn theta_two_run(t: &Tableau) -> Result<Tableau> {
    let (first, second) = check_two_run_shape(t)?;
    let j = t.runs()[0].len();
    if j == first {
        return Err(Error::Superstandard);
    }
    let n = first + second;
    let image = n - j - 1;
    debug_assert!(second <= image && image < first);
    let labels = t.sorted_entries();
    let rows = two_run_tableau(first, second, image)
        .into_iter()
        .map(|row| row.into_iter().map(|e| labels[e - 1]).collect())
        .collect();
    Tableau::new(rows)
}

/// Result of applying θ, with the raising index `i` for which
/// `C(θ(T)) = C(T)^(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaOutcome {
    pub tableau: StandardTableau,
    pub composition: Composition,
    pub raise_index: usize,
    /// Number of leading superstandard rows left untouched.
    pub prefix_rows: usize,
    pub fixed: bool,
}

/// The first two runs of the rows below the superstandard prefix, as a two-row
/// tableau. Returns the fragment with its row lengths `(top, bottom)` inside the
/// rows `k+1` and `k+2` of `t`.
fn two_run_fragment(t: &StandardTableau, k: usize) -> Result<(Tableau, usize, usize)> {
    let lower = Tableau::new(t.rows()[k..].to_vec())?;
    let runs = lower.runs();
    if runs.len() < 2 {
        return Err(Error::FragmentShape(format!(
            "rows {}.. of {t} have fewer than two runs",
            k + 1
        )));
    }
    let (first, second) = (&runs[0], &runs[1]);
    let j = first.len();
    let first_ok = first
        .cells
        .iter()
        .enumerate()
        .all(|(c, cell)| cell.row == 1 && cell.col == c + 1);
    let below: Vec<_> = second.cells.iter().filter(|c| c.row == 2).collect();
    let above: Vec<_> = second.cells.iter().filter(|c| c.row == 1).collect();
    let second_ok = below.len() + above.len() == second.len()
        && !below.is_empty()
        && below.len() <= j
        && below.iter().enumerate().all(|(c, cell)| cell.col == c + 1)
        && above
            .iter()
            .enumerate()
            .all(|(c, cell)| cell.col == j + c + 1);
    if !first_ok || !second_ok {
        return Err(Error::FragmentShape(format!(
            "first two runs of rows {}.. of {t} do not form a two-row shape",
            k + 1
        )));
    }
    let top: Vec<usize> = first
        .entries()
        .into_iter()
        .chain(above.iter().map(|c| c.entry))
        .collect();
    let bottom: Vec<usize> = below.iter().map(|c| c.entry).collect();
    let (top_len, bottom_len) = (top.len(), bottom.len());
    Ok((Tableau::new(vec![top, bottom])?, top_len, bottom_len))
}

/// The involution θ on a standard tableau that is not superstandard.
///
/// Errors with [`Error::Superstandard`] on superstandard input and with
/// [`Error::ThetaUndefined`] when the first two runs below the superstandard
/// prefix are themselves a superstandard two-row tableau.
pub fn theta(t: &StandardTableau) -> Result<ThetaOutcome> {
    let k = t.superstandard_prefix_length()?;
    let (fragment, top_len, bottom_len) = two_run_fragment(t, k)?;
    let image = match theta_two_run(&fragment) {
        Ok(image) => image,
        Err(Error::Superstandard) => {
            return Err(Error::ThetaUndefined {
                prefix_rows: k,
                fragment: fragment.to_string(),
            })
        }
        Err(e) => return Err(e),
    };
    let mut rows = t.rows().to_vec();
    rows[k][..top_len].copy_from_slice(&image.rows()[0]);
    rows[k + 1][..bottom_len].copy_from_slice(&image.rows()[1]);
    let tableau = StandardTableau::new(rows)?;

    let before = t.descent_data().composition;
    let composition = tableau.descent_data().composition;
    let raise_index = k + 2;
    if raise(&before, raise_index).as_ref() != Ok(&composition) {
        return Err(Error::FragmentShape(format!(
            "C(theta(T)) = {composition} is not C(T)^({raise_index}) for C(T) = {before}"
        )));
    }
    let fixed = tableau == *t;
    Ok(ThetaOutcome {
        tableau,
        composition,
        raise_index,
        prefix_rows: k,
        fixed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairingRole {
    Superstandard,
    /// θ(T) = T.
    Fixed {
        raise_index: usize,
    },
    /// θ(T) is the entry at index `partner` of the report.
    Paired {
        partner: usize,
        raise_index: usize,
    },
    /// θ is not defined on T (see [`Error::ThetaUndefined`]).
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingEntry {
    pub tableau: StandardTableau,
    pub composition: Composition,
    pub value: SignedPartition,
    pub role: PairingRole,
}

/// Every standard tableau of a shape, classified by θ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingReport {
    pub shape: Partition,
    pub entries: Vec<PairingEntry>,
    /// `Σ_T s_{C(T)}` over all tableaux, straightened.
    pub sum: SchurExpansion,
    /// The same sum restricted to tableaux where θ is undefined.
    pub undefined_sum: SchurExpansion,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PairingCounts {
    pub superstandard: usize,
    pub fixed: usize,
    pub paired: usize,
    pub undefined: usize,
}

impl PairingReport {
    pub fn counts(&self) -> PairingCounts {
        let mut counts = PairingCounts::default();
        for e in &self.entries {
            match e.role {
                PairingRole::Superstandard => counts.superstandard += 1,
                PairingRole::Fixed { .. } => counts.fixed += 1,
                PairingRole::Paired { .. } => counts.paired += 1,
                PairingRole::Undefined => counts.undefined += 1,
            }
        }
        counts
    }

    /// True when the straightened sum is exactly `s_λ`.
    pub fn telescopes(&self) -> bool {
        self.sum.len() == 1 && self.sum.coeff(&self.shape) == 1
    }

    /// Violations of the cancellation argument; empty when every check holds.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let counts = self.counts();
        if counts.superstandard != 1 {
            out.push(format!("{} superstandard tableaux", counts.superstandard));
        }
        for (idx, e) in self.entries.iter().enumerate() {
            match &e.role {
                PairingRole::Superstandard => {
                    if e.value != SignedPartition::plus(self.shape.clone()) {
                        out.push(format!("superstandard {} has value {}", e.tableau, e.value));
                    }
                }
                PairingRole::Fixed { .. } => {
                    if !e.value.is_zero() {
                        out.push(format!("fixed point {} has value {}", e.tableau, e.value));
                    }
                }
                PairingRole::Paired { partner, .. } => {
                    let other = &self.entries[*partner];
                    let back =
                        matches!(other.role, PairingRole::Paired { partner: p, .. } if p == idx);
                    if !back {
                        out.push(format!("theta is not an involution at {}", e.tableau));
                    }
                    if other.value != e.value.negate() {
                        out.push(format!(
                            "{} ({}) and {} ({}) do not cancel",
                            e.tableau, e.value, other.tableau, other.value
                        ));
                    }
                }
                PairingRole::Undefined => {}
            }
        }
        if !self.undefined_sum.is_empty() {
            out.push(format!(
                "tableaux outside theta's domain sum to {}",
                self.undefined_sum
            ));
        }
        out
    }
}

/// Classifies every standard tableau of `shape` as superstandard, θ-fixed,
/// θ-paired, or outside θ's domain.
pub fn cancellation_pairing(shape: &Partition) -> Result<PairingReport> {
    let tableaux = enumerate_syt(shape);
    let index: HashMap<&StandardTableau, usize> =
        tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut entries = Vec::with_capacity(tableaux.len());
    let mut sum = SchurExpansion::new();
    let mut undefined_sum = SchurExpansion::new();
    for t in &tableaux {
        let composition = t.descent_data().composition;
        let value = straighten(&composition);
        let role = if t.is_superstandard() {
            PairingRole::Superstandard
        } else {
            match theta(t) {
                Ok(out) if out.fixed => PairingRole::Fixed {
                    raise_index: out.raise_index,
                },
                Ok(out) => PairingRole::Paired {
                    partner: index[&out.tableau],
                    raise_index: out.raise_index,
                },
                Err(Error::ThetaUndefined { .. }) => PairingRole::Undefined,
                Err(e) => return Err(e),
            }
        };
        if let SignedPartition::Term { sign, shape } = &value {
            sum.add_term(shape.clone(), sign.as_i64())?;
            if role == PairingRole::Undefined {
                undefined_sum.add_term(shape.clone(), sign.as_i64())?;
            }
        }
        entries.push(PairingEntry {
            tableau: t.clone(),
            composition,
            value,
            role,
        });
    }
    Ok(PairingReport {
        shape: shape.clone(),
        entries,
        sum,
        undefined_sum,
    })
}
