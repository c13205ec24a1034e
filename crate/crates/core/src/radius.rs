//! Maximal radius `rho_n` of the regular n-gon collection, its two-sided bounds
//! and the Bessel-zero limit `n rho_n -> j_{1,1}`.

use std::f64::consts::PI;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::numeric::{from_f64, int, to_f64};
use crate::orthopoly::{hypergeometric_polynomial, OrthopolyError, RationalPolynomial, SturmChain};

pub const DEFAULT_PRECISION: f64 = 1e-13;

/// Absolute gap under which a radius counts as attaining a bound.
pub const BOUND_EQUALITY: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RadiusError {
    #[error("need n >= {min}, got {n}")]
    InvalidN { n: u64, min: u64 },
    #[error("precision must be positive and finite, got {0}")]
    InvalidPrecision(f64),
    #[error("central polynomial for n = {0} has no root in (-1, 0]")]
    NoRootFound(u64),
    #[error(transparent)]
    Orthopoly(#[from] OrthopolyError),
}

fn serialize_interval<S: Serializer>(v: &(BigRational, BigRational), s: S) -> Result<S::Ok, S::Error> {
    (v.0.to_string(), v.1.to_string()).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusResult {
    pub n: u64,
    pub rho: f64,
    pub mu: f64,
    /// `(lower, upper]` holding `mu_n`; both ends equal when `mu_n` is known exactly.
    #[serde(serialize_with = "serialize_interval")]
    pub isolating_interval: (BigRational, BigRational),
    /// `sin(pi / (2 floor(n/2)))`, for `n >= 3`.
    pub lower_bound: Option<f64>,
    /// `sin(3 pi / (4 floor((n+1)/2)))`, for `n >= 4`.
    pub upper_bound: Option<f64>,
    /// `rho_n / sin(pi/n)`.
    pub beta: f64,
}

impl RadiusResult {
    /// `rho_n` meets the lower bound to `BOUND_EQUALITY`; this happens at `n = 3` and `n = 5`.
    pub fn lower_bound_is_equality(&self) -> bool {
        self.lower_bound.is_some_and(|b| (self.rho - b).abs() <= BOUND_EQUALITY)
    }

    /// `rho_n` meets the upper bound to `BOUND_EQUALITY`; this happens only at `n = 5`.
    pub fn upper_bound_is_equality(&self) -> bool {
        self.upper_bound.is_some_and(|b| (self.rho - b).abs() <= BOUND_EQUALITY)
    }
}

/// `z^nu F(-nu, nu-n; 1-n; -1/z)` with `nu = floor(n/2)`, expanded as a polynomial.
pub fn central_polynomial(n: u64) -> Result<RationalPolynomial, RadiusError> {
    if n < 4 {
        return Err(RadiusError::InvalidN { n, min: 4 });
    }
    let nu = n / 2;
    let f = hypergeometric_polynomial(-(nu as i64), &int(nu as i64 - n as i64), &int(1 - n as i64))?;
    let mut coeffs = vec![BigRational::zero(); nu as usize + 1];
    for (k, fk) in f.coeffs().iter().enumerate() {
        coeffs[nu as usize - k] = if k % 2 == 0 { fk.clone() } else { -fk };
    }
    Ok(RationalPolynomial::new(coeffs))
}

/// `(sin(pi / (2 floor(n/2))), sin(3 pi / (4 floor((n+1)/2))))`; the upper value is
/// `+inf` for `n = 3`.
pub fn rho_bounds(n: u64) -> Result<(f64, f64), RadiusError> {
    if n < 3 {
        return Err(RadiusError::InvalidN { n, min: 3 });
    }
    let lower = (PI / (2 * (n / 2)) as f64).sin();
    let upper = if n == 3 { f64::INFINITY } else { (3.0 * PI / (4 * n.div_ceil(2)) as f64).sin() };
    Ok((lower, upper))
}

fn result(n: u64, mu: BigRational, interval: (BigRational, BigRational)) -> RadiusResult {
    let rho = to_f64(&(&mu + int(1))).sqrt();
    let bounds = if n >= 3 { rho_bounds(n).ok() } else { None };
    RadiusResult {
        n,
        rho,
        mu: to_f64(&mu),
        isolating_interval: interval,
        lower_bound: bounds.map(|b| b.0),
        upper_bound: bounds.map(|b| b.1).filter(|u| u.is_finite()),
        beta: rho / (PI / n as f64).sin(),
    }
}

/// `rho_n` to absolute accuracy `precision`.
///
/// `rho_2 = sqrt 2` and `rho_3 = 1`. For `n >= 4`, `rho_n = sqrt(1 + mu_n)`
/// where `mu_n` is the smallest root other than `-1` of the central polynomial;
/// every factor `z + 1` is divided out exactly before isolating roots in `(-1, 0]`.
pub fn maximal_radius(n: u64, precision: f64) -> Result<RadiusResult, RadiusError> {
    if n < 2 {
        return Err(RadiusError::InvalidN { n, min: 2 });
    }
    if !(precision > 0.0 && precision.is_finite()) {
        return Err(RadiusError::InvalidPrecision(precision));
    }
    match n {
        2 => return Ok(result(2, int(1), (int(1), int(1)))),
        3 => return Ok(result(3, int(0), (int(0), int(0)))),
        _ => {}
    }
    let (_, cofactor) = central_polynomial(n)?.divide_out_root(&int(-1));
    if cofactor.degree().unwrap_or(0) == 0 {
        return Err(RadiusError::NoRootFound(n));
    }
    let square_free = cofactor.exact_div(&cofactor.gcd(&cofactor.derivative())).expect("gcd divides the polynomial");
    let chain = SturmChain::new(&square_free);

    let mut lo = int(-1);
    let mut hi = int(0);
    if chain.count(&lo, &hi) == 0 {
        return Err(RadiusError::NoRootFound(n));
    }
    let two = int(2);
    // shrink to an interval holding only the leftmost root
    while chain.count(&lo, &hi) > 1 {
        let mid = (&lo + &hi) / &two;
        if chain.count(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if lo == int(-1) {
        let half = (&hi - &lo) / &two;
        (lo, hi) = chain.refine(lo, hi, &half);
    }
    // d rho = d mu / (2 rho) and rho >= sqrt(1 + lo)
    let width = from_f64(precision) * from_f64(to_f64(&(&lo + int(1))).sqrt());
    let (lo, hi) = if width.is_positive() { chain.refine(lo, hi, &width) } else { (lo.clone(), hi) };
    let mu = if lo == hi { lo.clone() } else { (&lo + &hi) / &two };
    Ok(result(n, mu, (lo, hi)))
}

/// `J_1(x) = sum_k (-1)^k (x/2)^{2k+1} / (k! (k+1)!)`.
pub fn bessel_j1(x: f64) -> f64 {
    let h = x / 2.0;
    let h2 = h * h;
    let mut term = h;
    let mut sum = term;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= -h2 / (k * (k + 1.0));
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) || k > 200.0 {
            break;
        }
    }
    sum
}

/// First positive zero `j_{1,1}` of `J_1`, by bisection of the sign change on `[3, 4.5]`.
pub fn bessel_j1_first_zero(precision: f64) -> Result<f64, RadiusError> {
    if !(precision > 0.0 && precision.is_finite()) {
        return Err(RadiusError::InvalidPrecision(precision));
    }
    let (mut a, mut b) = (3.0f64, 4.5f64);
    let sa = bessel_j1(a).signum();
    while b - a > precision {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if bessel_j1(m).signum() == sa {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub n: u64,
    pub rho: f64,
    pub n_rho: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticReport {
    pub rows: Vec<AsymptoticRow>,
    /// Limit of `n rho_n`.
    pub j11: f64,
    /// Limit of `beta_n`.
    pub j11_over_pi: f64,
}

pub fn asymptotic_report(ns: &[u64]) -> Result<AsymptoticReport, RadiusError> {
    let rows = ns
        .iter()
        .map(|&n| {
            let r = maximal_radius(n, DEFAULT_PRECISION)?;
            Ok(AsymptoticRow { n, rho: r.rho, n_rho: n as f64 * r.rho, beta: r.beta })
        })
        .collect::<Result<Vec<_>, RadiusError>>()?;
    let j11 = bessel_j1_first_zero(1e-15)?;
    Ok(AsymptoticReport { rows, j11, j11_over_pi: j11 / PI })
}

/// Whether `beta_{2k}` and `beta_{2k-1}` increase for `2 <= n <= nmax`. This is an
/// observation without proof; callers report it and never rely on it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BetaTrend {
    pub nmax: u64,
    pub even_increasing: bool,
    pub odd_increasing: bool,
    /// First `n` at which `beta_n <= beta_{n-2}`, if any.
    pub first_violation: Option<u64>,
}

pub fn beta_trend(nmax: u64) -> Result<BetaTrend, RadiusError> {
    let betas =
        (2..=nmax).map(|n| maximal_radius(n, DEFAULT_PRECISION).map(|r| (n, r.beta))).collect::<Result<Vec<_>, _>>()?;
    let violations: Vec<u64> = betas.windows(3).filter(|w| w[2].1 <= w[0].1).map(|w| w[2].0).collect();
    Ok(BetaTrend {
        nmax,
        even_increasing: !violations.iter().any(|n| n % 2 == 0),
        odd_increasing: !violations.iter().any(|n| n % 2 == 1),
        first_violation: violations.first().copied(),
    })
}

impl RadiusResult {
    /// `rho^2 - (1 + mu)`, zero up to rounding.
    pub fn square_residual(&self) -> f64 {
        self.rho * self.rho - (1.0 + self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;
    use std::f64::consts::SQRT_2;

    #[test]
    fn special_cases() {
        assert_eq!(maximal_radius(2, 1e-13).unwrap().rho, SQRT_2);
        assert_eq!(maximal_radius(3, 1e-13).unwrap().rho, 1.0);
        let r5 = maximal_radius(5, 1e-13).unwrap();
        assert!((r5.rho - SQRT_2 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn square_case_is_exact() {
        assert_eq!(central_polynomial(4).unwrap(), RationalPolynomial::new(vec![ratio(1, 3), ratio(4, 3), int(1)]));
        let r = maximal_radius(4, 1e-13).unwrap();
        let (lo, hi) = &r.isolating_interval;
        assert!(lo < &ratio(-1, 3) && &ratio(-1, 3) <= hi);
        assert!((r.rho - (2.0f64 / 3.0).sqrt()).abs() < 1e-13);
    }

    #[test]
    fn bounds() {
        assert_eq!(rho_bounds(3).unwrap(), (1.0, f64::INFINITY));
        let (lo, hi) = rho_bounds(4).unwrap();
        assert!((lo - (PI / 4.0).sin()).abs() < 1e-15 && (hi - (3.0 * PI / 8.0).sin()).abs() < 1e-15);
        assert!((rho_bounds(5).unwrap().1 - SQRT_2 / 2.0).abs() < 1e-15);
        assert!(rho_bounds(2).is_err());
        let r2 = maximal_radius(2, 1e-13).unwrap();
        assert_eq!((r2.lower_bound, r2.upper_bound), (None, None));
        let r3 = maximal_radius(3, 1e-13).unwrap();
        assert_eq!((r3.lower_bound, r3.upper_bound), (Some(1.0), None));
    }

    #[test]
    fn bessel() {
        assert_eq!(bessel_j1(0.0), 0.0);
        let j = bessel_j1_first_zero(1e-15).unwrap();
        assert_eq!(format!("{j:.6}"), "3.831706");
        assert!(bessel_j1(j).abs() < 1e-12);
        assert!(bessel_j1_first_zero(0.0).is_err());
    }

    #[test]
    fn betas() {
        let r = asymptotic_report(&[2, 3]).unwrap();
        assert!((r.rows[0].beta - SQRT_2).abs() < 1e-15);
        assert!((r.rows[1].beta - 2.0 / 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(format!("{:.9}", r.j11_over_pi), "1.219669891");
    }

    #[test]
    fn invalid_input() {
        assert!(matches!(maximal_radius(1, 1e-13), Err(RadiusError::InvalidN { .. })));
        assert!(matches!(maximal_radius(6, -1.0), Err(RadiusError::InvalidPrecision(_))));
    }
}
