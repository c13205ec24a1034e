//! Small exact-arithmetic helpers shared across modules.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational value of a finite double. Panics on NaN or infinity.
pub fn from_f64(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite float")
}

pub fn to_f64(v: &BigRational) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    match v.to_f64() {
        Some(f) if f.is_finite() && f != 0.0 => f,
        _ => {
            let sign = if v.is_negative() { -1.0 } else { 1.0 };
            sign * ln_abs(v).exp()
        }
    }
}

fn ln_abs_int(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits < 1000 {
        v.abs().to_f64().unwrap().ln()
    } else {
        let shift = bits - 64;
        let top: BigInt = v.abs() >> shift;
        top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Natural log of `|v|`, safe for values far outside the double range.
pub fn ln_abs(v: &BigRational) -> f64 {
    assert!(!v.is_zero(), "logarithm of zero");
    ln_abs_int(v.numer()) - ln_abs_int(v.denom())
}

pub fn sign(v: &BigRational) -> i8 {
    match v.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Binomial coefficient `C(n, k)` for nonnegative integers.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial `C(s, k) = s(s-1)...(s-k+1)/k!` for rational `s`.
pub fn generalized_binomial(s: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * (s - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

/// `(a)_k = a(a+1)...(a+k-1)`.
pub fn pochhammer(a: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= a + int(i as i64);
    }
    acc
}

pub fn is_integer(v: &BigRational) -> bool {
    v.denom().is_one()
}

/// Parses `"p/q"`, an integer, or a plain decimal literal such as `"-0.125"` exactly.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("0{whole}{frac}").parse().ok()?;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(all * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(all, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Some(value)
}
