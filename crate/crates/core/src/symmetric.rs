//! Regular n-gon collections `B_n(r)`: centers at the n-th roots of unity with a
//! common radius `r`, studied through `z = r^2 - 1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::collection::{build_q_matrix, CoreError, DiskCollection};
use crate::matrix::HermitianMatrix;
use crate::numeric::{binomial, from_f64, int, ln_abs, sign, to_f64};
use crate::orthopoly::{hypergeometric_polynomial, jacobi_polynomial, OrthopolyError, RationalPolynomial};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SymmetricError {
    #[error("need n >= {min}, got {n}")]
    InvalidN { n: u64, min: u64 },
    #[error("m must lie in 1..={n}, got {m}")]
    IndexOutOfRange { n: u64, m: u64 },
    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("z must be finite and >= -1, got {0}")]
    InvalidZ(f64),
    #[error("direct eigenvalue sum for m = {m} deviates from T_{{n,m}}(z) by {deviation:e}")]
    SpectrumMismatch { m: u64, deviation: f64 },
    #[error(transparent)]
    Orthopoly(#[from] OrthopolyError),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// `B_n(r)` described by its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetricCase {
    n: u64,
    r: f64,
}

impl SymmetricCase {
    pub fn new(n: u64, r: f64) -> Result<Self, SymmetricError> {
        if n < 2 {
            return Err(SymmetricError::InvalidN { n, min: 2 });
        }
        if !(r > 0.0 && r.is_finite()) {
            return Err(SymmetricError::InvalidRadius(r));
        }
        Ok(Self { n, r })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn z(&self) -> f64 {
        self.r * self.r - 1.0
    }

    /// `z` computed exactly from the binary value of `r`.
    pub fn z_exact(&self) -> BigRational {
        let r = from_f64(self.r);
        &r * &r - int(1)
    }

    pub fn collection(&self) -> DiskCollection {
        regular_polygon(self.n as usize, self.r).expect("validated parameters")
    }
}

/// `omega^p` with `omega = e^{2 pi i / n}`; the exponent is reduced mod `n` first.
fn root_of_unity(n: usize, p: i64) -> Complex64 {
    let k = p.rem_euclid(n as i64) as f64;
    let t = 2.0 * PI * k / n as f64;
    Complex64::new(t.cos(), t.sin())
}

/// Centers `omega^j`, `j = 1..n`, all radii `r`.
pub fn regular_polygon(n: usize, r: f64) -> Result<DiskCollection, CoreError> {
    DiskCollection::new((1..=n).map(|j| root_of_unity(n, j as i64)).collect(), vec![r; n])
}

/// `T_{n,m}(z)`: the `m`-th eigenvalue of `A(z)` as an exact integer polynomial.
///
/// For `m < n` this is the expansion of `n C(n,m) (-z)^{n-m} F(-m, m-n; 1-n; -1/z)`
/// summed monomial by monomial; `T_{n,n}(z) = n((-z)^n - 1)`.
pub fn t_polynomial(n: u64, m: u64) -> Result<RationalPolynomial, SymmetricError> {
    if n < 2 {
        return Err(SymmetricError::InvalidN { n, min: 2 });
    }
    if m < 1 || m > n {
        return Err(SymmetricError::IndexOutOfRange { n, m });
    }
    let ni = int(n as i64);
    let t = if m == n {
        let lead = if n.is_multiple_of(2) { ni.clone() } else { -ni.clone() };
        &RationalPolynomial::monomial(lead, n as usize) - &RationalPolynomial::constant(ni)
    } else {
        let f = hypergeometric_polynomial(-(m as i64), &int(m as i64 - n as i64), &int(1 - n as i64))?;
        let terms = f.degree().unwrap_or(0);
        assert!(terms <= m.min(n - m) as usize);
        let scale = &ni * &BigRational::from_integer(binomial(n, m));
        let top = (n - m) as usize;
        let mut coeffs = vec![BigRational::zero(); top + 1];
        for (k, fk) in f.coeffs().iter().enumerate() {
            let mut c = &scale * fk;
            if (top + k) % 2 == 1 {
                c = -c;
            }
            coeffs[top - k] = c;
        }
        let p = RationalPolynomial::new(coeffs);
        assert_eq!(p.degree(), Some(top), "T_{{{n},{m}}} must have degree n-m");
        p
    };
    assert!(t.has_integer_coefficients(), "T_{{{n},{m}}} must have integer coefficients");
    Ok(t)
}

/// `[T_{n,1}, ..., T_{n,n}]`.
pub fn t_polynomials(n: u64) -> Result<Vec<RationalPolynomial>, SymmetricError> {
    (1..=n).map(|m| t_polynomial(n, m)).collect()
}

fn check_z(z: f64) -> Result<(), SymmetricError> {
    if z.is_finite() && z >= -1.0 {
        Ok(())
    } else {
        Err(SymmetricError::InvalidZ(z))
    }
}

/// `A_ij(z) = prod_k (eps^k_ij - z)` with `eps^k_ij = w^{i-j} - w^{k-j} - w^{i-k}`.
/// Equals `-Q` of `B_n(sqrt(1+z))`.
pub fn a_matrix(n: usize, z: f64) -> Result<HermitianMatrix, SymmetricError> {
    if n < 2 {
        return Err(SymmetricError::InvalidN { n: n as u64, min: 2 });
    }
    check_z(z)?;
    let entries = nalgebra::DMatrix::from_fn(n, n, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        (1..=n as i64)
            .map(|k| root_of_unity(n, i - j) - root_of_unity(n, k - j) - root_of_unity(n, i - k) - z)
            .product::<Complex64>()
    });
    Ok(HermitianMatrix::new(entries)?)
}

/// Each row is the previous one shifted one place to the right, up to `tol`
/// relative to the largest entry.
pub fn is_circulant(m: &HermitianMatrix, tol: f64) -> bool {
    let n = m.order();
    let scale = m.entries().iter().map(|z| z.norm()).fold(0.0, f64::max);
    (0..n - 1).all(|i| (0..n).all(|j| (m.get(i + 1, (j + 1) % n) - m.get(i, j)).norm() <= tol * scale))
}

/// `[T_{n,1}(z), ..., T_{n,n}(z)]` from the exact polynomials.
///
/// Each value is cross-checked against the direct sum
/// `lambda_m = sum_j w^{m(j-1)} A_{1j}(z)`, whose imaginary part must vanish.
pub fn circulant_spectrum(n: u64, z: f64) -> Result<Vec<f64>, SymmetricError> {
    check_z(z)?;
    let ts = t_polynomials(n)?;
    let zq = from_f64(z);
    let values: Vec<f64> = ts.iter().map(|t| to_f64(&t.eval(&zq))).collect();

    let a = a_matrix(n as usize, z)?;
    let first_row: Vec<Complex64> = (0..n as usize).map(|j| a.get(0, j)).collect();
    let total: f64 = first_row.iter().map(|c| c.norm()).sum();
    for m in 1..=n {
        let direct: Complex64 =
            first_row.iter().enumerate().map(|(j, c)| root_of_unity(n as usize, (m as i64) * j as i64) * c).sum();
        let deviation = (direct - values[m as usize - 1]).norm();
        if deviation > 1e-9 * total.max(f64::MIN_POSITIVE) {
            return Err(SymmetricError::SpectrumMismatch { m, deviation });
        }
    }
    Ok(values)
}

/// `B_n(r)` is positive iff `T_{n,m}(r^2 - 1) < 0` for every `m`; decided exactly.
pub fn positivity_by_t(n: u64, r: f64) -> Result<bool, SymmetricError> {
    let case = SymmetricCase::new(n, r)?;
    let z = case.z_exact();
    Ok(t_polynomials(n)?.iter().all(|t| t.eval(&z).is_negative()))
}

/// Outcome of comparing `det Q` with its closed-form factorization.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DetCheck {
    Agreement {
        log_abs_lu: f64,
        log_abs_formula: f64,
        relative_error: f64,
        sign_lu: i8,
        sign_formula: i8,
        signs_agree: bool,
    },
    /// The determinant vanishes, or `Q` is numerically singular.
    Boundary { log_abs_formula: f64 },
}

/// Smallest-to-largest eigenvalue ratio below which `Q` counts as singular.
/// Beyond a condition number of `1e9` an LU determinant no longer resolves
/// `ln|det Q|` to `1e-7`.
pub const SINGULAR_RATIO: f64 = 1e-9;

/// `ln |c_n|` with `c_n = (-1)^{(n-1)(n-2)/2} n^{2n-1} / (n-1)!`.
pub fn log_abs_c(n: u64) -> f64 {
    (2 * n - 1) as f64 * (n as f64).ln() - (1..n).map(|k| (k as f64).ln()).sum::<f64>()
}

pub fn sign_c(n: u64) -> i8 {
    if ((n - 1) * (n - 2) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Compares `ln|det Q|` of the floating `B_n(r)` matrix (via LU) with
/// `c_n [1 - (1-r^2)^n] prod_{m=1}^{n-1} P_m^{n-2m,-1}(2r^2 - 1)` evaluated exactly.
pub fn det_factorization_check(n: u64, r: f64) -> Result<DetCheck, SymmetricError> {
    if !(2..=64).contains(&n) {
        return Err(SymmetricError::InvalidN { n, min: 2 });
    }
    let case = SymmetricCase::new(n, r)?;
    let rq = from_f64(r);
    let r2 = &rq * &rq;
    let one = int(1);
    let x = &r2 * int(2) - &one;

    let mut value = &one - num_traits::pow(&one - &r2, n as usize);
    for m in 1..n {
        let p = jacobi_polynomial(m, &int(n as i64 - 2 * m as i64), &int(-1))?;
        value *= p.eval(&x);
    }
    let log_abs_formula = if value.is_zero() { f64::NEG_INFINITY } else { ln_abs(&value) + log_abs_c(n) };
    let sign_formula = sign(&value) * sign_c(n);

    // the eigenvalues of Q are -T_{n,m}(z); treat it as singular when the
    // smallest is negligible against the largest
    let z = case.z_exact();
    let magnitudes: Vec<f64> = t_polynomials(n)?.iter().map(|t| to_f64(&t.eval(&z)).abs()).collect();
    let largest = magnitudes.iter().copied().fold(0.0, f64::max);
    let smallest = magnitudes.iter().copied().fold(f64::INFINITY, f64::min);
    if value.is_zero() || smallest <= SINGULAR_RATIO * largest {
        return Ok(DetCheck::Boundary { log_abs_formula });
    }
    let q = build_q_matrix(&case.collection());
    let (log_abs_lu, sign_lu) = q.log_abs_det();
    Ok(DetCheck::Agreement {
        log_abs_lu,
        log_abs_formula,
        relative_error: (log_abs_lu - log_abs_formula).abs() / log_abs_formula.abs().max(1.0),
        sign_lu,
        sign_formula,
        signs_agree: sign_lu == sign_formula,
    })
}

/// `T_{n,m}(z) = (-1)^{n-m} n^2 z^{n-2m} / (n-m) P_m^{n-2m,-1}(2z+1)` for `1 <= m < n`,
/// with the power of `z` moved to the left when `2m > n`.
pub fn jacobi_link_holds(n: u64, m: u64) -> Result<bool, SymmetricError> {
    if m < 1 || m >= n {
        return Err(SymmetricError::IndexOutOfRange { n, m });
    }
    let t = t_polynomial(n, m)?;
    let p = jacobi_polynomial(m, &int(n as i64 - 2 * m as i64), &int(-1))?;
    let sign = if (n - m).is_multiple_of(2) { 1 } else { -1 };
    let factor = BigRational::new((sign * (n * n) as i64).into(), ((n - m) as i64).into());
    let rhs = p.compose_affine(&int(2), &int(1)).scale(&factor);
    Ok(if 2 * m <= n { t == rhs.shift_up((n - 2 * m) as usize) } else { t.shift_up((2 * m - n) as usize) == rhs })
}
