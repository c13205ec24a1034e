use num_rational::BigRational;
use num_traits::One;

use super::{hypergeometric_polynomial, OrthopolyError, RationalPolynomial};
use crate::numeric::{generalized_binomial, int};

/// Jacobi polynomial `P_k^{alpha, beta}(z)` with arbitrary rational parameters,
///
/// `((z-1)/2)^k C(2k+alpha+beta, k) F(-k, -k-alpha; -2k-alpha-beta; -2/(z-1))`,
/// expanded termwise as a polynomial in `z`. Parameters at or below `-1` are
/// allowed; orthogonality is not assumed anywhere.
///
/// Fails when a Pochhammer factor of the series denominator vanishes before the
/// series terminates, i.e. `2k+alpha+beta` is a nonnegative integer smaller than
/// the termination index. The formula has no finite value there.
pub fn jacobi_polynomial(
    k: u64,
    alpha: &BigRational,
    beta: &BigRational,
) -> Result<RationalPolynomial, OrthopolyError> {
    let s = int(2 * k as i64) + alpha + beta;
    let series = hypergeometric_polynomial(-(k as i64), &(-int(k as i64) - alpha), &-s.clone()).map_err(|e| {
        OrthopolyError::DegenerateJacobi {
            k,
            alpha: alpha.to_string(),
            beta: beta.to_string(),
            reason: format!("series denominator: {e}"),
        }
    })?;
    let scale = generalized_binomial(&s, k) / int(2).pow(k as i32);
    let z_minus_one = RationalPolynomial::from_integers(&[-1, 1]);
    let mut power = RationalPolynomial::one();
    let mut powers = Vec::with_capacity(k as usize + 1);
    for _ in 0..=k {
        powers.push(power.clone());
        power = &power * &z_minus_one;
    }
    // ((z-1)/2)^k (-2/(z-1))^j = (-2)^j 2^-k (z-1)^(k-j)
    let mut acc = RationalPolynomial::zero();
    let mut minus_two_pow = BigRational::one();
    for (j, f) in series.coeffs().iter().enumerate() {
        let c = f * &minus_two_pow;
        acc = &acc + &powers[k as usize - j].scale(&c);
        minus_two_pow *= int(-2);
    }
    Ok(acc.scale(&scale))
}

/// `P_k^{a,b}(x) = (-1)^k P_k^{b,a}(-x)`, compared coefficientwise.
pub fn alternation_holds(k: u64, alpha: &BigRational, beta: &BigRational) -> Result<bool, OrthopolyError> {
    let lhs = jacobi_polynomial(k, alpha, beta)?;
    let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
    let rhs = jacobi_polynomial(k, beta, alpha)?.compose_affine(&int(-1), &int(0)).scale(&sign);
    Ok(lhs == rhs)
}

/// `n P_n^{-1,-1}(x) = (n-1) (x-1)/2 P_{n-1}^{1,-1}(x)` for `n >= 1`.
pub fn reduction_holds(n: u64) -> Result<bool, OrthopolyError> {
    if n == 0 {
        return Err(OrthopolyError::IndexOutOfRange("reduction needs n >= 1".into()));
    }
    let lhs = jacobi_polynomial(n, &int(-1), &int(-1))?.scale(&int(n as i64));
    let half_x_minus_one =
        RationalPolynomial::new(vec![BigRational::new((-1).into(), 2.into()), BigRational::new(1.into(), 2.into())]);
    let rhs = (&half_x_minus_one * &jacobi_polynomial(n - 1, &int(1), &int(-1))?).scale(&int(n as i64 - 1));
    Ok(lhs == rhs)
}

/// `P_n^{-1,-1}(x) = (x^2 - 1)/4 P_{n-2}^{1,1}(x)` for `n >= 2`, so the zeros of
/// `P_n^{-1,-1}` are `+-1` together with those of `P_{n-2}^{1,1}`.
pub fn ultraspherical_reduction_holds(n: u64) -> Result<bool, OrthopolyError> {
    if n < 2 {
        return Err(OrthopolyError::IndexOutOfRange("ultraspherical reduction needs n >= 2".into()));
    }
    let lhs = jacobi_polynomial(n, &int(-1), &int(-1))?;
    let quarter = BigRational::new(1.into(), 4.into());
    let factor = RationalPolynomial::new(vec![-quarter.clone(), BigRational::from_integer(0.into()), quarter]);
    Ok(lhs == &factor * &jacobi_polynomial(n - 2, &int(1), &int(1))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;
    use crate::orthopoly::isolate_all_real_roots;

    /// Independent route: P = sum_s C(k+a, k-s) C(k+b, s) ((z-1)/2)^s ((z+1)/2)^(k-s).
    fn explicit(k: u64, a: &BigRational, b: &BigRational) -> RationalPolynomial {
        let half = ratio(1, 2);
        let zm = RationalPolynomial::new(vec![-half.clone(), half.clone()]);
        let zp = RationalPolynomial::new(vec![half.clone(), half]);
        let mut acc = RationalPolynomial::zero();
        for s in 0..=k {
            let c = generalized_binomial(&(int(k as i64) + a), k - s) * generalized_binomial(&(int(k as i64) + b), s);
            let term = &zm.pow(s as usize) * &zp.pow((k - s) as usize);
            acc = &acc + &term.scale(&c);
        }
        acc
    }

    #[test]
    fn agrees_with_explicit_sum() {
        let params = [int(-1), int(0), ratio(1, 2), int(1), ratio(-1, 2), int(3)];
        for k in 0..=7 {
            for a in &params {
                for b in &params {
                    match jacobi_polynomial(k, a, b) {
                        Ok(p) => assert_eq!(p, explicit(k, a, b), "k={k} a={a} b={b}"),
                        Err(OrthopolyError::DegenerateJacobi { .. }) => {
                            // only on the singular lines 2k+a+b in {0..k-1}
                            let s = int(2 * k as i64) + a + b;
                            assert!(crate::numeric::is_integer(&s));
                        }
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn chebyshev_zeros() {
        let h = ratio(-1, 2);
        let p2 = jacobi_polynomial(2, &h, &h).unwrap();
        let roots = isolate_all_real_roots(&p2, 1e-14).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(roots.refined.len(), 2);
        assert!((roots.refined[0] + r).abs() < 1e-14);
        assert!((roots.refined[1] - r).abs() < 1e-14);
    }

    #[test]
    fn degree_drops_for_degenerate_binomial() {
        // C(0, 1) = 0
        let p = jacobi_polynomial(1, &int(-1), &int(-1)).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn singular_line_is_an_error() {
        // 2k + a + b = 1 with k = 3: (-1)_2 = 0 inside the series
        let err = jacobi_polynomial(3, &ratio(-5, 2), &ratio(-5, 2)).unwrap_err();
        assert!(matches!(err, OrthopolyError::DegenerateJacobi { k: 3, .. }));
    }

    #[test]
    fn value_at_one() {
        // P_k^{a,b}(1) = C(k+a, k)
        for k in 0..6u64 {
            let a = ratio(3, 2);
            let p = jacobi_polynomial(k, &a, &int(-1)).unwrap();
            assert_eq!(p.eval(&int(1)), generalized_binomial(&(int(k as i64) + &a), k));
        }
    }

    #[test]
    fn alternation_grid() {
        let params = [int(-1), int(0), ratio(1, 2), int(1)];
        for k in 0..=8 {
            for a in &params {
                for b in &params {
                    match alternation_holds(k, a, b) {
                        Ok(holds) => assert!(holds, "k={k} a={a} b={b}"),
                        Err(OrthopolyError::DegenerateJacobi { .. }) => {}
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn reductions() {
        for n in 1..=10 {
            assert!(reduction_holds(n).unwrap(), "n={n}");
        }
        for n in 2..=10 {
            assert!(ultraspherical_reduction_holds(n).unwrap(), "n={n}");
        }
    }
}
