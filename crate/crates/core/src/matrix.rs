use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::collection::CoreError;

/// Relative tolerance for the Hermitian check at construction.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// Dense complex Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    entries: DMatrix<Complex64>,
}

impl HermitianMatrix {
    /// Validates squareness, finiteness and `m[i][j] = conj(m[j][i])` up to
    /// `HERMITIAN_TOLERANCE` relative to the largest entry. Diagonal imaginary
    /// parts within tolerance are cleared.
    pub fn new(mut entries: DMatrix<Complex64>) -> Result<Self, CoreError> {
        let (rows, cols) = entries.shape();
        if rows != cols || rows == 0 {
            return Err(CoreError::NotSquare { rows, cols });
        }
        if entries.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(CoreError::NonFinite("matrix entry".into()));
        }
        let scale = entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let limit = HERMITIAN_TOLERANCE * scale;
        for i in 0..rows {
            for j in i..rows {
                let deviation = (entries[(i, j)] - entries[(j, i)].conj()).norm();
                if deviation > limit {
                    return Err(CoreError::NotHermitian { i, j, deviation });
                }
            }
            entries[(i, i)].im = 0.0;
        }
        Ok(Self { entries })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, CoreError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CoreError::NotSquare { rows: n, cols: rows.first().map_or(0, Vec::len) });
        }
        Self::new(DMatrix::from_fn(n, n, |i, j| Complex64::new(rows[i][j], 0.0)))
    }

    pub fn identity(n: usize) -> Self {
        Self { entries: DMatrix::identity(n, n) }
    }

    pub fn order(&self) -> usize {
        self.entries.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn max_diagonal(&self) -> f64 {
        (0..self.order()).map(|i| self.entries[(i, i)].re).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn negated(&self) -> Self {
        Self { entries: -self.entries.clone() }
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        let k = indices.len();
        Self { entries: DMatrix::from_fn(k, k, |i, j| self.entries[(indices[i], indices[j])]) }
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let eig = self.entries.clone().symmetric_eigen();
        let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        values.sort_by(f64::total_cmp);
        values
    }

    /// `(ln|det|, sign)` from a partially pivoted LU factorization. The sign is
    /// 0 for an exactly singular factorization, in which case the log is `-inf`.
    pub fn log_abs_det(&self) -> (f64, i8) {
        let lu = self.entries.clone().lu();
        let u = lu.u();
        let mut phase = lu.p().determinant::<Complex64>();
        let mut log = 0.0;
        for i in 0..self.order() {
            let d = u[(i, i)];
            let norm = d.norm();
            if norm == 0.0 {
                return (f64::NEG_INFINITY, 0);
            }
            log += norm.ln();
            phase *= d / norm;
        }
        // det of a Hermitian matrix is real, so the phase is +-1 up to rounding
        (log, if phase.re >= 0.0 { 1 } else { -1 })
    }

    /// Leading principal minors `Delta_1, ..., Delta_n`, each from its own LU.
    pub fn leading_principal_minors(&self) -> Vec<f64> {
        (1..=self.order())
            .map(|k| {
                let idx: Vec<usize> = (0..k).collect();
                let (log, sign) = self.principal_submatrix(&idx).log_abs_det();
                sign as f64 * log.exp()
            })
            .collect()
    }
}
