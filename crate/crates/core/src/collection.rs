//! Disk collections and the matrix `Q_ij = -prod_k [(a_i - a_k) conj(a_j - a_k) - R_k^2]`.

use num_complex::Complex64;
use thiserror::Error;

use crate::matrix::HermitianMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error("a disk collection needs at least one disk")]
    Empty,
    #[error("{centers} centers but {radii} radii")]
    LengthMismatch { centers: usize, radii: usize },
    #[error("non-finite value in {0}")]
    NonFinite(String),
    #[error("radius {index} must be positive, got {value}")]
    NonPositiveRadius { index: usize, value: String },
    #[error("centers {0} and {1} coincide")]
    DuplicateCenter(usize, usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian at ({i}, {j}): deviation {deviation:e}")]
    NotHermitian { i: usize, j: usize, deviation: f64 },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("operation needs at least {needed} disks, collection has {got}")]
    TooFewDisks { needed: usize, got: usize },
    #[error("index {index} out of range for {len} disks")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("scale factor must be positive and finite, got {0}")]
    InvalidScale(f64),
    #[error("could not bracket the positivity boundary")]
    BracketFailed,
}

/// Open disks `B(a_j, R_j)` with pairwise distinct centers and positive radii.
///
/// Admissibility (`R_k < |a_j - a_k|` for all `j != k`) is a query, not an
/// invariant; inadmissible collections are representable.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskCollection {
    centers: Vec<Complex64>,
    radii: Vec<f64>,
}

impl DiskCollection {
    pub fn new(centers: Vec<Complex64>, radii: Vec<f64>) -> Result<Self, CoreError> {
        if centers.is_empty() {
            return Err(CoreError::Empty);
        }
        if centers.len() != radii.len() {
            return Err(CoreError::LengthMismatch { centers: centers.len(), radii: radii.len() });
        }
        for (i, c) in centers.iter().enumerate() {
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(CoreError::NonFinite(format!("center {i}")));
            }
        }
        for (i, &r) in radii.iter().enumerate() {
            if !r.is_finite() {
                return Err(CoreError::NonFinite(format!("radius {i}")));
            }
            if r <= 0.0 {
                return Err(CoreError::NonPositiveRadius { index: i, value: r.to_string() });
            }
        }
        for i in 0..centers.len() {
            for j in i + 1..centers.len() {
                if centers[i] == centers[j] {
                    return Err(CoreError::DuplicateCenter(i, j));
                }
            }
        }
        Ok(Self { centers, radii })
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn centers(&self) -> &[Complex64] {
        &self.centers
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn with_radii(&self, radii: Vec<f64>) -> Result<Self, CoreError> {
        Self::new(self.centers.clone(), radii)
    }

    /// Same centers, every radius multiplied by `s`.
    pub fn scaled_radii(&self, s: f64) -> Result<Self, CoreError> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(CoreError::InvalidScale(s));
        }
        self.with_radii(self.radii.iter().map(|r| r * s).collect())
    }

    pub fn subcollection(&self, indices: &[usize]) -> Result<Self, CoreError> {
        let len = self.len();
        if let Some(&index) = indices.iter().find(|&&i| i >= len) {
            return Err(CoreError::IndexOutOfRange { index, len });
        }
        Self::new(indices.iter().map(|&i| self.centers[i]).collect(), indices.iter().map(|&i| self.radii[i]).collect())
    }

    /// Applies `a -> u a + v` to the centers and scales radii by `|u|`.
    pub fn transformed(&self, u: Complex64, v: Complex64) -> Result<Self, CoreError> {
        let scale = u.norm();
        Self::new(self.centers.iter().map(|a| u * a + v).collect(), self.radii.iter().map(|r| r * scale).collect())
    }

    pub fn min_pairwise_distance(&self) -> Option<f64> {
        let mut best: Option<f64> = None;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let d = (self.centers[i] - self.centers[j]).norm();
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible(self)
    }
}

/// `R_k < |a_j - a_k|` for every `k` and every `j != k`.
pub fn is_admissible(c: &DiskCollection) -> bool {
    let n = c.len();
    (0..n).all(|k| (0..n).filter(|&j| j != k).all(|j| c.radii[k] < (c.centers[j] - c.centers[k]).norm()))
}

/// `max_{i != j} (R_i + R_j) / |a_i - a_j|`; at most 1 exactly when the disks are pairwise disjoint.
/// For `B_n(r)` this is `r / sin(pi/n)`, attained by neighbouring disks.
pub fn overlap_measure(c: &DiskCollection) -> Result<f64, CoreError> {
    let n = c.len();
    if n < 2 {
        return Err(CoreError::TooFewDisks { needed: 2, got: n });
    }
    let mut best = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            let v = (c.radii[i] + c.radii[j]) / (c.centers[i] - c.centers[j]).norm();
            best = best.max(v);
        }
    }
    Ok(best)
}

/// Builds `Q^B`. The upper triangle is computed directly and mirrored, so the
/// result is Hermitian exactly.
pub fn build_q_matrix(c: &DiskCollection) -> HermitianMatrix {
    let n = c.len();
    let r2: Vec<f64> = c.radii.iter().map(|r| r * r).collect();
    let mut entries = nalgebra::DMatrix::<Complex64>::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut prod = Complex64::new(1.0, 0.0);
            for k in 0..n {
                let aik = c.centers[i] - c.centers[k];
                let ajk = c.centers[j] - c.centers[k];
                prod *= aik * ajk.conj() - r2[k];
            }
            let q = -prod;
            if i == j {
                debug_assert!(q.im.abs() <= 1e-12 * q.norm());
                entries[(i, i)] = Complex64::new(q.re, 0.0);
            } else {
                entries[(i, j)] = q;
                entries[(j, i)] = q.conj();
            }
        }
    }
    HermitianMatrix::new(entries).expect("Q matrix is Hermitian by construction")
}
