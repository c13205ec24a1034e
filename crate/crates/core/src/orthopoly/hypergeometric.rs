use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{OrthopolyError, RationalPolynomial};
use crate::numeric::{int, is_integer};

/// Terminating Gauss series `F(a, b; c; x) = sum_k (a)_k (b)_k / ((c)_k k!) x^k`.
///
/// `a` must be a nonpositive integer. When `b` is also a nonpositive integer
/// above `a`, the series stops at `-b` instead of `-a`. Every Pochhammer factor
/// `(c)_k` used before termination must be nonzero.
pub fn hypergeometric_polynomial(
    a: i64,
    b: &BigRational,
    c: &BigRational,
) -> Result<RationalPolynomial, OrthopolyError> {
    if a > 0 {
        return Err(OrthopolyError::NonTerminating(a));
    }
    let mut last = (-a) as u64;
    if is_integer(b) && !b.is_positive() {
        let nb: u64 = (-b.to_integer()).try_into().expect("parameter fits u64");
        last = last.min(nb);
    }
    let a = int(a);
    let mut coeffs = Vec::with_capacity(last as usize + 1);
    let mut term = BigRational::one();
    coeffs.push(term.clone());
    for k in 1..=last {
        let shift = int(k as i64 - 1);
        let denom = c + &shift;
        if denom.is_zero() {
            return Err(OrthopolyError::PochhammerVanishes { c: c.clone(), k });
        }
        term = term * (&a + &shift) * (b + &shift) / (denom * int(k as i64));
        coeffs.push(term.clone());
    }
    Ok(RationalPolynomial::new(coeffs))
}
