//! Positive-definiteness decisions with machine-checkable certificates.

use num_complex::Complex64;
use serde::Serialize;

use crate::collection::{build_q_matrix, CoreError, DiskCollection};
use crate::matrix::HermitianMatrix;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    PositiveDefinite,
    NotPositiveDefinite,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// Accepted LDL pivots in elimination order; `order[k]` is the original row of pivot `k`.
    Pivots { order: Vec<usize>, values: Vec<f64> },
    /// Elimination step at which the largest remaining diagonal (original row
    /// `index`) was not safely positive.
    FailingPivot { step: usize, index: usize, value: f64 },
    /// A 2x2 principal minor of the Schur complement at `step` with negative determinant.
    NegativeMinor { step: usize, rows: [usize; 2], value: f64 },
    /// Leading principal minors up to the first nonpositive one.
    LeadingMinors(Vec<f64>),
    /// Ascending eigenvalues.
    Eigenvalues(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PositivityReport {
    pub verdict: Verdict,
    pub certificate: Certificate,
    pub tolerance_used: f64,
}

impl PositivityReport {
    pub fn is_positive_definite(&self) -> bool {
        self.verdict == Verdict::PositiveDefinite
    }
}

fn check_tolerance(tol: f64) -> Result<(), CoreError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CoreError::InvalidTolerance(tol))
    }
}

/// LDL^H with diagonal pivoting (largest remaining diagonal first).
///
/// A pivot is accepted when it exceeds `tol * max_i Q_ii`. A largest remaining
/// diagonal below `-tol * max_i Q_ii` proves indefiniteness, as does an
/// off-diagonal Schur-complement entry larger than the band when all remaining
/// diagonals sit inside it. Anything else inside the band is `Indeterminate`.
pub fn is_positive_definite(m: &HermitianMatrix, tol: f64) -> Result<PositivityReport, CoreError> {
    check_tolerance(tol)?;
    let n = m.order();
    let max_diag = m.max_diagonal();
    if max_diag <= 0.0 {
        let index = (0..n).find(|&i| m.get(i, i).re == max_diag).unwrap();
        return Ok(PositivityReport {
            verdict: Verdict::NotPositiveDefinite,
            certificate: Certificate::FailingPivot { step: 0, index, value: max_diag },
            tolerance_used: tol,
        });
    }
    let band = tol * max_diag;
    let mut w = m.entries().clone();
    let mut order: Vec<usize> = (0..n).collect();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let p = (k..n).max_by(|&a, &b| w[(a, a)].re.total_cmp(&w[(b, b)].re)).unwrap();
        if p != k {
            w.swap_rows(k, p);
            w.swap_columns(k, p);
            order.swap(k, p);
        }
        let d = w[(k, k)].re;
        if d > band {
            for i in k + 1..n {
                let lik = w[(i, k)] / d;
                if lik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in k + 1..n {
                    let wkj = w[(k, j)];
                    w[(i, j)] -= lik * wkj;
                }
            }
            pivots.push(d);
            continue;
        }
        if d < -band {
            return Ok(PositivityReport {
                verdict: Verdict::NotPositiveDefinite,
                certificate: Certificate::FailingPivot { step: k, index: order[k], value: d },
                tolerance_used: tol,
            });
        }
        // every remaining diagonal lies in [-inf, band]
        if let Some(idx) = (k..n).find(|&i| w[(i, i)].re < -band) {
            return Ok(PositivityReport {
                verdict: Verdict::NotPositiveDefinite,
                certificate: Certificate::FailingPivot { step: k, index: order[idx], value: w[(idx, idx)].re },
                tolerance_used: tol,
            });
        }
        for i in k..n {
            for j in i + 1..n {
                let off = w[(i, j)].norm();
                if off > band {
                    let det = w[(i, i)].re * w[(j, j)].re - off * off;
                    return Ok(PositivityReport {
                        verdict: Verdict::NotPositiveDefinite,
                        certificate: Certificate::NegativeMinor {
                            step: k,
                            rows: [order[i].min(order[j]), order[i].max(order[j])],
                            value: det,
                        },
                        tolerance_used: tol,
                    });
                }
            }
        }
        return Ok(PositivityReport {
            verdict: Verdict::Indeterminate,
            certificate: Certificate::FailingPivot { step: k, index: order[k], value: d },
            tolerance_used: tol,
        });
    }
    Ok(PositivityReport {
        verdict: Verdict::PositiveDefinite,
        certificate: Certificate::Pivots { order, values: pivots },
        tolerance_used: tol,
    })
}

/// Decision from the full spectrum; slower, used when an eigenvalue certificate is wanted.
pub fn is_positive_definite_by_eigenvalues(m: &HermitianMatrix, tol: f64) -> Result<PositivityReport, CoreError> {
    check_tolerance(tol)?;
    let eigenvalues = m.eigenvalues();
    let band = tol * m.max_diagonal().abs();
    let smallest = eigenvalues[0];
    let verdict = if smallest > band {
        Verdict::PositiveDefinite
    } else if smallest < -band {
        Verdict::NotPositiveDefinite
    } else {
        Verdict::Indeterminate
    };
    Ok(PositivityReport { verdict, certificate: Certificate::Eigenvalues(eigenvalues), tolerance_used: tol })
}

/// Floating decision for a disk collection.
pub fn collection_positivity(c: &DiskCollection, tol: f64) -> Result<PositivityReport, CoreError> {
    is_positive_definite(&build_q_matrix(c), tol)
}
