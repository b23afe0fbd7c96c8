//! Schur expansions of symmetric functions given in the fundamental
//! quasi-symmetric basis.
//!
//! If `f = Σ_L c_L F_L` is symmetric then `f = Σ_L c_L s_L`, where `s_L` is the
//! Jacobi-Trudi determinant `det(h_{L_i - i + j})` of the composition `L`. This
//! crate implements that conversion together with the tableau combinatorics
//! behind it and a brute-force polynomial oracle that checks every identity in
//! finitely many variables.

pub mod composition;
pub mod error;
pub mod expansion;
pub mod expr;
pub mod involution;
pub mod json;
pub mod poly;
pub mod tableau;

pub use composition::{
    compositions, make_composition, partitions, raise, straighten, straighten_by_raises,
    Composition, Partition, RaiseChain, RaiseStep, Sign, SignedPartition,
};
pub use error::{Error, Result};
pub use expansion::{
    expansion_poly, f_poly, f_to_schur, h_poly, jacobi_trudi_poly, schur_expansion_to_f,
    schur_poly, schur_to_f, verified_convert, Conversion, Expansion, FExpansion, SchurExpansion,
    SymmetryCheck, ToPolynomial,
};
pub use involution::{
    cancellation_pairing, theta, theta_two_run, two_run_index, PairingCounts, PairingEntry,
    PairingReport, PairingRole, ThetaOutcome,
};
pub use poly::{is_symmetric_poly, Monomial, SparsePolynomial};
pub use tableau::{enumerate_syt, superstandard, Cell, DescentData, Run, StandardTableau, Tableau};
