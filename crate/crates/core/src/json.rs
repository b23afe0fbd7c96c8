//! JSON schemas used by the command line tool.
//!
//! * composition: `[5,1,3]`
//! * expansion: `[{"basis":"F","index":[4,1],"coeff":1}, ...]`
//! * tableau: `[[1,2,3],[4,5]]`, row-major
//! * polynomial: `{"nvars":2,"terms":[{"exp":[1,0],"coeff":1}, ...]}`

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::composition::{make_composition, RaiseChain, SignedPartition};
use crate::error::Error;
use crate::expansion::{BasisIndex, Expansion};
use crate::expr::{Basis, Expression, Span, Term};
use crate::involution::{PairingReport, PairingRole, ThetaOutcome};
use crate::poly::SparsePolynomial;
use crate::tableau::{StandardTableau, Tableau};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("term {term}: {source}")]
    Term {
        term: usize,
        #[source]
        source: Error,
    },
    #[error(transparent)]
    Value(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonTerm {
    pub basis: Basis,
    pub index: Vec<i64>,
    pub coeff: i64,
}

fn basis_of<K: BasisIndex>() -> Basis {
    if K::LETTER == "F" {
        Basis::F
    } else {
        Basis::S
    }
}

fn as_i64(parts: &[usize]) -> Vec<i64> {
    parts.iter().map(|&p| p as i64).collect()
}

pub fn expansion_to_json<K: BasisIndex>(e: &Expansion<K>) -> Vec<JsonTerm> {
    e.iter()
        .map(|(k, c)| JsonTerm {
            basis: basis_of::<K>(),
            index: as_i64(k.index_parts()),
            coeff: c,
        })
        .collect()
}

pub fn expression_to_json(e: &Expression) -> Vec<JsonTerm> {
    e.terms
        .iter()
        .map(|t| JsonTerm {
            basis: t.basis,
            index: as_i64(t.index.parts()),
            coeff: t.coeff,
        })
        .collect()
}

/// Reads an expansion array. Terms keep their order; source spans are left empty.
pub fn expression_from_json(text: &str) -> Result<Expression, JsonError> {
    let raw: Vec<JsonTerm> = serde_json::from_str(text)?;
    let mut terms = Vec::with_capacity(raw.len());
    for (n, t) in raw.into_iter().enumerate() {
        let index =
            make_composition(&t.index).map_err(|source| JsonError::Term { term: n, source })?;
        terms.push(Term {
            coeff: t.coeff,
            basis: t.basis,
            index,
            span: Span::default(),
        });
    }
    Ok(Expression { terms })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonMonomial {
    pub exp: Vec<u32>,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPolynomial {
    pub nvars: usize,
    pub terms: Vec<JsonMonomial>,
}

impl From<&SparsePolynomial> for JsonPolynomial {
    fn from(p: &SparsePolynomial) -> Self {
        JsonPolynomial {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(m, c)| JsonMonomial {
                    exp: m.0.clone(),
                    coeff: c,
                })
                .collect(),
        }
    }
}

impl TryFrom<&JsonPolynomial> for SparsePolynomial {
    type Error = Error;

    fn try_from(p: &JsonPolynomial) -> Result<Self, Error> {
        if let Some(t) = p.terms.iter().find(|t| t.exp.len() != p.nvars) {
            return Err(Error::InvalidPolynomial(format!(
                "exponent vector {:?} does not have {} entries",
                t.exp, p.nvars
            )));
        }
        SparsePolynomial::from_terms(p.nvars, p.terms.iter().map(|t| (t.exp.clone(), t.coeff)))
    }
}

pub fn parse_tableau(text: &str) -> Result<Tableau, JsonError> {
    let rows: Vec<Vec<usize>> = serde_json::from_str(text)?;
    Ok(Tableau::new(rows)?)
}

pub fn parse_standard_tableau(text: &str) -> Result<StandardTableau, JsonError> {
    let rows: Vec<Vec<usize>> = serde_json::from_str(text)?;
    Ok(StandardTableau::new(rows)?)
}

/// `sign` is 1, -1 or 0; `shape` is empty for zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonSigned {
    pub sign: i64,
    pub shape: Vec<usize>,
}

impl From<&SignedPartition> for JsonSigned {
    fn from(v: &SignedPartition) -> Self {
        JsonSigned {
            sign: v.sign_value(),
            shape: v.shape().map(|p| p.parts().to_vec()).unwrap_or_default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRaiseStep {
    pub index: usize,
    pub before: Vec<usize>,
    pub after: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StraightenOutput {
    pub input: Vec<usize>,
    pub result: JsonSigned,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<JsonRaiseStep>>,
}

impl StraightenOutput {
    pub fn new(chain: &RaiseChain, with_trace: bool) -> Self {
        let trace = with_trace.then(|| {
            chain
                .steps
                .iter()
                .map(|s| JsonRaiseStep {
                    index: s.index,
                    before: s.before.parts().to_vec(),
                    after: s.after.parts().to_vec(),
                })
                .collect()
        });
        StraightenOutput {
            input: chain.input.parts().to_vec(),
            result: (&chain.result).into(),
            trace,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaOutput {
    pub tableau: Vec<Vec<usize>>,
    pub composition: Vec<usize>,
    pub raise_index: usize,
    pub fixed: bool,
}

impl From<&ThetaOutcome> for ThetaOutput {
    fn from(o: &ThetaOutcome) -> Self {
        ThetaOutput {
            tableau: o.tableau.rows().to_vec(),
            composition: o.composition.parts().to_vec(),
            raise_index: o.raise_index,
            fixed: o.fixed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SytEntry {
    pub tableau: Vec<Vec<usize>>,
    pub descents: Vec<usize>,
    pub composition: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SytOutput {
    pub shape: Vec<usize>,
    pub tableaux: Vec<SytEntry>,
}

impl SytOutput {
    pub fn new(shape: &[usize], tableaux: &[StandardTableau]) -> Self {
        let tableaux = tableaux
            .iter()
            .map(|t| {
                let d = t.descent_data();
                SytEntry {
                    tableau: t.rows().to_vec(),
                    descents: d.descents,
                    composition: d.composition.parts().to_vec(),
                }
            })
            .collect();
        SytOutput {
            shape: shape.to_vec(),
            tableaux,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JsonRole {
    Superstandard,
    Fixed,
    Paired,
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub tableau: Vec<Vec<usize>>,
    pub composition: Vec<usize>,
    pub value: JsonSigned,
    pub role: JsonRole,
    /// 0-based position of θ(T) in `entries`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raise_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub shape: Vec<usize>,
    pub entries: Vec<VerifyEntry>,
    pub sum: Vec<JsonTerm>,
    pub telescopes: bool,
}

impl From<&PairingReport> for VerifyOutput {
    fn from(r: &PairingReport) -> Self {
        let entries = r
            .entries
            .iter()
            .map(|e| {
                let (role, partner, raise_index) = match e.role {
                    PairingRole::Superstandard => (JsonRole::Superstandard, None, None),
                    PairingRole::Fixed { raise_index } => {
                        (JsonRole::Fixed, None, Some(raise_index))
                    }
                    PairingRole::Paired {
                        partner,
                        raise_index,
                    } => (JsonRole::Paired, Some(partner), Some(raise_index)),
                    PairingRole::Undefined => (JsonRole::Undefined, None, None),
                };
                VerifyEntry {
                    tableau: e.tableau.rows().to_vec(),
                    composition: e.composition.parts().to_vec(),
                    value: (&e.value).into(),
                    role,
                    partner,
                    raise_index,
                }
            })
            .collect();
        VerifyOutput {
            shape: r.shape.parts().to_vec(),
            entries,
            sum: expansion_to_json(&r.sum),
            telescopes: r.telescopes(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{straighten_by_raises, Composition, Partition};
    use crate::expansion::schur_to_f;
    use crate::expr::parse_expression;
    use crate::involution::cancellation_pairing;

    #[test]
    fn expansion_schema() {
        let f = schur_to_f(&Partition::new(vec![2, 1]).unwrap()).unwrap();
        let text = serde_json::to_string(&expansion_to_json(&f)).unwrap();
        assert_eq!(
            text,
            r#"[{"basis":"F","index":[1,2],"coeff":1},{"basis":"F","index":[2,1],"coeff":1}]"#
        );
        let back = expression_from_json(&text).unwrap();
        assert_eq!(back.f_part().unwrap(), f);
    }

    #[test]
    fn expression_json_round_trip() {
        let e = parse_expression("2*s[3,1] - F[2,2]").unwrap();
        let text = serde_json::to_string(&expression_to_json(&e)).unwrap();
        assert_eq!(
            text,
            r#"[{"basis":"s","index":[3,1],"coeff":2},{"basis":"F","index":[2,2],"coeff":-1}]"#
        );
        assert_eq!(
            expression_from_json(&text).unwrap().to_string(),
            e.to_string()
        );
    }

    #[test]
    fn bad_expansion_json() {
        assert!(matches!(
            expression_from_json("[{\"basis\":\"G\",\"index\":[1],\"coeff\":1}]"),
            Err(JsonError::Syntax(_))
        ));
        assert!(matches!(
            expression_from_json("[{\"basis\":\"F\",\"index\":[1,0],\"coeff\":1}]"),
            Err(JsonError::Term {
                term: 0,
                source: Error::NonPositivePart { index: 2, value: 0 }
            })
        ));
        assert!(matches!(
            expression_from_json("[{\"basis\":\"F\",\"index\":[1]}]"),
            Err(JsonError::Syntax(_))
        ));
    }

    #[test]
    fn polynomial_schema() {
        let p = SparsePolynomial::from_terms(2, vec![(vec![0, 1], 1), (vec![1, 0], 1)]).unwrap();
        let j = JsonPolynomial::from(&p);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"nvars":2,"terms":[{"exp":[1,0],"coeff":1},{"exp":[0,1],"coeff":1}]}"#
        );
        assert_eq!(SparsePolynomial::try_from(&j).unwrap(), p);
        let bad = JsonPolynomial {
            nvars: 2,
            terms: vec![JsonMonomial {
                exp: vec![1],
                coeff: 1,
            }],
        };
        assert!(SparsePolynomial::try_from(&bad).is_err());
    }

    #[test]
    fn tableau_schema() {
        let t = parse_standard_tableau("[[1,2,3,4,5],[6,7,9],[8]]").unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 3, 4, 5], vec![6, 7, 9], vec![8]]);
        assert!(parse_standard_tableau("[[1,3],[2,5]]").is_err());
        assert!(parse_standard_tableau("[[1,2],[3]").is_err());
        assert!(parse_tableau("[[2,5],[4]]").is_ok());
    }

    #[test]
    fn straighten_envelope() {
        let chain = straighten_by_raises(&Composition::new(vec![1, 4]).unwrap());
        let out = StraightenOutput::new(&chain, false);
        assert_eq!(
            serde_json::to_string(&out).unwrap(),
            r#"{"input":[1,4],"result":{"sign":-1,"shape":[3,2]}}"#
        );
        let zero = straighten_by_raises(&Composition::new(vec![2, 3]).unwrap());
        let out = StraightenOutput::new(&zero, true);
        assert_eq!(
            serde_json::to_string(&out).unwrap(),
            r#"{"input":[2,3],"result":{"sign":0,"shape":[]},"trace":[]}"#
        );
    }

    #[test]
    fn verify_envelope() {
        let report = cancellation_pairing(&Partition::new(vec![4, 1]).unwrap()).unwrap();
        let out = VerifyOutput::from(&report);
        assert!(out.telescopes);
        assert_eq!(out.entries.len(), 4);
        assert_eq!(out.entries[0].role, JsonRole::Superstandard);
        assert_eq!(
            out.sum,
            vec![JsonTerm {
                basis: Basis::S,
                index: vec![4, 1],
                coeff: 1
            }]
        );
    }
}
