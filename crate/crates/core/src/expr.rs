//! Parser for integer combinations of basis atoms such as `2*s[3,1] - F[2,2]`.
//!
//! ```text
//! expr := ( '-'? term (('+' | '-') term)* )?
//! term := (integer '*')? atom
//! atom := ('F' | 's') '[' integer (',' integer)* ']'
//! ```
//!
//! Whitespace between tokens is ignored. `s[...]` accepts any composition; it
//! is straightened when the expression is evaluated.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::composition::{make_composition, straighten, Composition, SignedPartition};
use crate::error::Error;
use crate::expansion::{jacobi_trudi_poly, FExpansion, SchurExpansion, ToPolynomial};
use crate::poly::SparsePolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "F")]
    F,
    #[serde(rename = "s")]
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::F => 'F',
            Basis::S => 's',
        }
    }
}

/// A 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Position {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: Position,
    pub end: Position,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub basis: Basis,
    pub index: Composition,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expression {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("invalid composition at line {line}, column {column}: {source}")]
    Composition {
        line: usize,
        column: usize,
        #[source]
        source: Error,
    },
    #[error("integer out of range at line {line}, column {column}")]
    IntegerRange { line: usize, column: usize },
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn position(&self) -> Position {
        Position {
            offset: self.pos,
            line: self.line,
            column: self.column,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = *self.chars.get(self.pos)?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Next non-whitespace character, without consuming it.
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&mut self, expected: Vec<&'static str>) -> ParseError {
        self.skip_ws();
        let found = match self.chars.get(self.pos) {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError::Syntax {
            line: self.line,
            column: self.column,
            expected,
            found,
        }
    }

    fn expect(&mut self, c: char, name: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(vec![name]))
        }
    }

    /// Unsigned decimal literal, returned as a magnitude.
    fn integer(&mut self) -> Result<(u128, Position), ParseError> {
        self.skip_ws();
        let start = self.position();
        let mut value: u128 = 0;
        let mut digits = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u128::from(d)))
                .ok_or(ParseError::IntegerRange {
                    line: start.line,
                    column: start.column,
                })?;
            digits += 1;
            self.bump();
        }
        if digits == 0 {
            return Err(self.error(vec!["integer"]));
        }
        Ok((value, start))
    }

    fn signed(magnitude: u128, negative: bool, at: Position) -> Result<i64, ParseError> {
        let v = if negative {
            -(magnitude as i128)
        } else {
            magnitude as i128
        };
        if magnitude > i64::MAX as u128 + 1 {
            return Err(ParseError::IntegerRange {
                line: at.line,
                column: at.column,
            });
        }
        i64::try_from(v).map_err(|_| ParseError::IntegerRange {
            line: at.line,
            column: at.column,
        })
    }

    fn atom(&mut self) -> Result<(Basis, Composition, Position), ParseError> {
        let basis = match self.peek() {
            Some('F') => Basis::F,
            Some('s') => Basis::S,
            _ => return Err(self.error(vec!["'F'", "'s'"])),
        };
        let start = self.position();
        self.bump();
        self.expect('[', "'['")?;
        let mut parts = Vec::new();
        loop {
            let negative = if self.peek() == Some('-') {
                self.bump();
                true
            } else {
                false
            };
            let (mag, at) = self.integer()?;
            parts.push(Self::signed(mag, negative, at)?);
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some(']') => {
                    self.bump();
                    break;
                }
                _ => return Err(self.error(vec!["','", "']'"])),
            }
        }
        let index = make_composition(&parts).map_err(|source| ParseError::Composition {
            line: start.line,
            column: start.column,
            source,
        })?;
        Ok((basis, index, start))
    }

    fn term(&mut self, negative: bool) -> Result<Term, ParseError> {
        let start = {
            self.skip_ws();
            self.position()
        };
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let (mag, at) = self.integer()?;
                self.expect('*', "'*'")?;
                Self::signed(mag, negative, at)?
            }
            _ => {
                if negative {
                    -1
                } else {
                    1
                }
            }
        };
        let (basis, index, _) = self.atom()?;
        let end = self.position();
        Ok(Term {
            coeff,
            basis,
            index,
            span: Span { start, end },
        })
    }

    fn expression(&mut self) -> Result<Expression, ParseError> {
        let mut terms = Vec::new();
        match self.peek() {
            None => return Ok(Expression { terms }),
            Some('-') => {
                self.bump();
                terms.push(self.term(true)?);
            }
            _ => terms.push(self.term(false)?),
        }
        loop {
            match self.peek() {
                None => return Ok(Expression { terms }),
                Some('+') => {
                    self.bump();
                    terms.push(self.term(false)?);
                }
                Some('-') => {
                    self.bump();
                    terms.push(self.term(true)?);
                }
                _ => return Err(self.error(vec!["'+'", "'-'", "end of input"])),
            }
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expression, ParseError> {
    Parser::new(text).expression()
}

impl Expression {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The `F`-atoms, merged.
    pub fn f_part(&self) -> Result<FExpansion, Error> {
        let mut out = FExpansion::new();
        for t in self.terms.iter().filter(|t| t.basis == Basis::F) {
            out.add_term(t.index.clone(), t.coeff)?;
        }
        Ok(out)
    }

    /// The `s`-atoms, straightened and merged.
    pub fn schur_part(&self) -> Result<SchurExpansion, Error> {
        let mut out = SchurExpansion::new();
        for t in self.terms.iter().filter(|t| t.basis == Basis::S) {
            if let SignedPartition::Term { sign, shape } = straighten(&t.index) {
                let c = t
                    .coeff
                    .checked_mul(sign.as_i64())
                    .ok_or(Error::Overflow("expansion coefficient"))?;
                out.add_term(shape, c)?;
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.index.size()).max().unwrap_or(0)
    }
}

/// `s`-atoms expand through their Jacobi-Trudi determinant, unstraightened.
impl ToPolynomial for Expression {
    fn to_poly(&self, nvars: usize) -> Result<SparsePolynomial, Error> {
        let mut out = SparsePolynomial::zero(nvars);
        for t in &self.terms {
            let p = match t.basis {
                Basis::F => crate::expansion::f_poly(&t.index, nvars)?,
                Basis::S => jacobi_trudi_poly(&t.index, nvars)?,
            };
            out.add_scaled(&p, t.coeff)?;
        }
        Ok(out)
    }
}

/// Canonical text: `2*s[3,1] - F[2,2]`; the empty expression is the empty string.
impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in self.terms.iter().enumerate() {
            match (n, t.coeff < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.unsigned_abs();
            if abs != 1 {
                write!(f, "{abs}*")?;
            }
            let parts: Vec<String> = t.index.parts().iter().map(usize::to_string).collect();
            write!(f, "{}[{}]", t.basis.letter(), parts.join(","))?;
        }
        Ok(())
    }
}
