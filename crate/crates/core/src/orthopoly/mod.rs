//! Exact polynomial engine: terminating Gauss hypergeometric series, Jacobi
//! polynomials with generalized parameters, the V-polynomial family and real-root
//! isolation.

mod hypergeometric;
mod jacobi;
mod polynomial;
mod roots;
mod vpoly;

use num_rational::BigRational;
use thiserror::Error;

pub use hypergeometric::hypergeometric_polynomial;
pub use jacobi::{alternation_holds, jacobi_polynomial, reduction_holds, ultraspherical_reduction_holds};
pub use polynomial::RationalPolynomial;
pub(crate) use roots::SturmChain;
pub use roots::{isolate_all_real_roots, isolate_real_roots, IsolatingInterval, RootIsolation, RootSummary};
pub use vpoly::{
    l_operator, v_identity_suite, v_polynomial, zero_structure_check, Identity, IdentityCheck, IdentityReport,
    ZeroStructureReport,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrthopolyError {
    #[error("hypergeometric series needs a nonpositive integer numerator parameter, got {0}")]
    NonTerminating(i64),
    #[error("Pochhammer symbol ({c})_{k} vanishes before the series terminates")]
    PochhammerVanishes { c: BigRational, k: u64 },
    #[error("Jacobi polynomial of degree {k} with alpha = {alpha}, beta = {beta} is degenerate: {reason}")]
    DegenerateJacobi { k: u64, alpha: String, beta: String, reason: String },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("precision must be positive and finite, got {0}")]
    InvalidPrecision(f64),
    #[error("empty search range")]
    EmptyRange,
}
