//! Young tableaux in English notation, descents, runs and enumeration of
//! standard tableaux.
//!
//! A [`Tableau`] holds distinct positive entries; a [`StandardTableau`] holds
//! exactly `1..=n`. Descents and runs of a general tableau are those of its
//! order-isomorphic standardization.

use std::fmt;

use crate::composition::{Composition, Partition};
use crate::error::{Error, Result};

/// A cell of a tableau. `row` and `col` are 1-based, rows counted top-down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub entry: usize,
}

/// A maximal block of consecutive entries (in value order) with no descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    /// Cells in increasing entry order.
    pub cells: Vec<Cell>,
}

impl Run {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn entries(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.entry).collect()
    }
}

/// A straight-shape tableau with distinct positive entries, strictly increasing
/// along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidTableau(msg));
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return invalid(format!("row {} is empty", r + 1));
            }
            if row.contains(&0) {
                return invalid(format!(
                    "row {} contains 0; entries must be positive",
                    r + 1
                ));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return invalid(format!("row {} is not strictly increasing", r + 1));
            }
        }
        for r in 1..rows.len() {
            if rows[r].len() > rows[r - 1].len() {
                return invalid(format!("row {} is longer than row {}", r + 1, r));
            }
            if let Some(c) = (0..rows[r].len()).find(|&c| rows[r][c] <= rows[r - 1][c]) {
                return invalid(format!(
                    "column {} is not strictly increasing at row {}",
                    c + 1,
                    r + 1
                ));
            }
        }
        let mut entries: Vec<usize> = rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        if let Some(w) = entries.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("entry {} appears more than once", w[0]));
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("row lengths are validated to be weakly decreasing")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn sorted_entries(&self) -> Vec<usize> {
        let mut entries: Vec<usize> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        entries
    }

    /// Order-isomorphic relabeling to `1..=n`. Returns the standard tableau and
    /// the sorted original entries, so that label `k` stands for `labels[k - 1]`.
    pub fn standardize(&self) -> (StandardTableau, Vec<usize>) {
        let labels = self.sorted_entries();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| labels.binary_search(e).expect("entry is present") + 1)
                    .collect()
            })
            .collect();
        (StandardTableau(Tableau { rows }), labels)
    }

    /// Runs of the tableau, in order.
    pub fn runs(&self) -> Vec<Run> {
        let (std, labels) = self.standardize();
        std.runs_standard()
            .into_iter()
            .map(|run| Run {
                cells: run
                    .cells
                    .into_iter()
                    .map(|c| Cell {
                        entry: labels[c.entry - 1],
                        ..c
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn descent_composition(&self) -> Composition {
        self.standardize().0.descent_data().composition
    }
}

/// Row-major bracket notation, e.g. `[[1,2,3],[4,5]]`.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// A tableau whose entries are exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau(Tableau);

/// Descent set `d_1 < ... < d_j` and descent composition of a standard tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentData {
    pub descents: Vec<usize>,
    pub composition: Composition,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau::new(rows)?;
        let entries = t.sorted_entries();
        if let Some((k, &e)) = entries.iter().enumerate().find(|&(k, &e)| e != k + 1) {
            return Err(Error::InvalidTableau(format!(
                "entries must be exactly 1..{}; found {} where {} was expected",
                entries.len(),
                e,
                k + 1
            )));
        }
        Ok(StandardTableau(t))
    }

    pub fn from_tableau(t: Tableau) -> Result<Self> {
        StandardTableau::new(t.rows)
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau {
        self.0
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        self.0.rows()
    }

    pub fn shape(&self) -> Partition {
        self.0.shape()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `row_of[e - 1]` is the 1-based row containing entry `e`.
    fn row_of(&self) -> Vec<usize> {
        let mut row_of = vec![0; self.size()];
        for (r, row) in self.rows().iter().enumerate() {
            for &e in row {
                row_of[e - 1] = r + 1;
            }
        }
        row_of
    }

    fn cells_by_entry(&self) -> Vec<Cell> {
        let mut cells = vec![
            Cell {
                row: 0,
                col: 0,
                entry: 0
            };
            self.size()
        ];
        for (r, row) in self.rows().iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                cells[e - 1] = Cell {
                    row: r + 1,
                    col: c + 1,
                    entry: e,
                };
            }
        }
        cells
    }

    /// Descents are the `i` with `i + 1` in a strictly lower row than `i`.
    pub fn descent_data(&self) -> DescentData {
        let n = self.size();
        let row_of = self.row_of();
        let descents: Vec<usize> = (1..n).filter(|&i| row_of[i] > row_of[i - 1]).collect();
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents.iter().chain(std::iter::once(&n)) {
            if d > prev {
                parts.push(d - prev);
            }
            prev = d;
        }
        DescentData {
            descents,
            composition: Composition::new(parts).expect("descent gaps are positive"),
        }
    }

    fn runs_standard(&self) -> Vec<Run> {
        let cells = self.cells_by_entry();
        let mut runs: Vec<Run> = Vec::new();
        for (k, cell) in cells.iter().enumerate() {
            if k == 0 || cell.row > cells[k - 1].row {
                runs.push(Run { cells: Vec::new() });
            }
            runs.last_mut().expect("a run was opened").cells.push(*cell);
        }
        runs
    }

    /// The runs of `T`: entries `d_{i-1}+1, ..., d_i` between consecutive descents.
    pub fn runs(&self) -> Vec<Run> {
        self.runs_standard()
    }

    pub fn is_superstandard(&self) -> bool {
        self.superstandard_rows() == self.rows().len()
    }

    /// Number of leading rows that hold `1..λ_1`, `λ_1+1..λ_1+λ_2`, and so on.
    fn superstandard_rows(&self) -> usize {
        let mut next = 1;
        for (r, row) in self.rows().iter().enumerate() {
            if row.iter().enumerate().any(|(c, &e)| e != next + c) {
                return r;
            }
            next += row.len();
        }
        self.rows().len()
    }

    /// The largest `k` such that the first `k` rows form a superstandard tableau.
    /// Fails on a superstandard tableau; otherwise the tableau has at least `k + 2` rows.
    pub fn superstandard_prefix_length(&self) -> Result<usize> {
        let k = self.superstandard_rows();
        if k == self.rows().len() {
            return Err(Error::Superstandard);
        }
        debug_assert!(self.rows().len() >= k + 2);
        Ok(k)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The superstandard tableau of `shape`: row `r` holds the next `λ_r` integers.
pub fn superstandard(shape: &Partition) -> StandardTableau {
    let mut next = 1;
    let rows = shape
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<usize> = (next..next + len).collect();
            next += len;
            row
        })
        .collect();
    StandardTableau(Tableau { rows })
}

/// Every standard tableau of `shape`, each once.
///
/// Entries `1, 2, ...` are placed in turn into addable cells, trying rows
/// top-down, so the output is ordered lexicographically by the sequence of rows
/// holding `1, 2, ..., n`.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    fn place(
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        next: usize,
        n: usize,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > n {
            out.push(StandardTableau(Tableau { rows: rows.clone() }));
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                place(shape, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let parts = shape.parts();
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); parts.len()];
    place(parts, &mut rows, 1, shape.size(), &mut out);
    out
}
