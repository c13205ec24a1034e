//! Positive definiteness of disk-collection matrices, exact T- and
//! V-polynomials for regular polygon configurations, maximal radii and the
//! three-disk criterion.

#![allow(clippy::needless_range_loop)]

pub mod collection;
pub mod exact;
pub mod matrix;
pub mod numeric;
pub mod orthopoly;
pub mod positivity;
pub mod radius;
pub mod scale;
pub mod symmetric;
pub mod triangle;
pub mod verify;

pub use collection::{build_q_matrix, is_admissible, overlap_measure, CoreError, DiskCollection};
pub use exact::{is_positive_definite_exact, GaussianRational, RationalDiskCollection};
pub use matrix::HermitianMatrix;
pub use orthopoly::RationalPolynomial;
pub use positivity::{
    collection_positivity, is_positive_definite, is_positive_definite_by_eigenvalues, Certificate, PositivityReport,
    Verdict,
};
pub use scale::{max_uniform_scale, max_uniform_scale_with};
