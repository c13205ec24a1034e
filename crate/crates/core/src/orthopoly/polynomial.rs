use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numeric::{self, int};

/// Dense univariate polynomial with big-rational coefficients, lowest degree first.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x - root`
    pub fn linear_root(root: &BigRational) -> Self {
        Self::new(vec![-root.clone(), BigRational::one()])
    }

    /// `(a x + b)^k`
    pub fn affine_power(a: &BigRational, b: &BigRational, k: usize) -> Self {
        let base = Self::new(vec![b.clone(), a.clone()]);
        base.pow(k)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(numeric::is_integer)
    }

    /// Exact value at `x`. Works on integers throughout and reduces once:
    /// with `x = a/b` and `L` the common denominator of the coefficients,
    /// `p(x) = sum (L c_i) a^i b^(d-i) / (L b^d)`.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        if self.coeffs.is_empty() {
            return BigRational::zero();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut b_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            let scaled = c.numer() * (&lcm / c.denom());
            acc = acc * a + scaled * &b_pow;
            b_pow *= b;
        }
        // b_pow = b^(d+1) now
        BigRational::new(acc * b, b_pow * lcm)
    }

    /// Horner evaluation in double precision on rounded coefficients.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + numeric::to_f64(c))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(a x + b)`
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        self.compose(&Self::new(vec![b.clone(), a.clone()]))
    }

    /// `x^deg * self(1/x)` with `deg` at least the degree: the coefficient list reversed.
    pub fn reversed(&self, deg: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= deg), "reversal degree too small");
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(deg + 1, BigRational::zero());
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Euclidean division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&(BigRational::one() / lead)),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Largest `k` with `(x - root)^k` dividing `self`, together with the cofactor.
    pub fn divide_out_root(&self, root: &BigRational) -> (usize, Self) {
        assert!(!self.is_zero(), "zero polynomial has roots of every multiplicity");
        let factor = Self::linear_root(root);
        let mut k = 0;
        let mut current = self.clone();
        while let Some(q) = current.exact_div(&factor) {
            current = q;
            k += 1;
        }
        (k, current)
    }

    /// Integer polynomial with positive content-free coefficients that is a positive
    /// rational multiple of `self`.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive_part(&self) -> Self {
        Self::new(self.primitive_integer_coeffs().into_iter().map(BigRational::from_integer).collect())
    }

    /// Yun's square-free decomposition: pairs `(f_i, i)` with `self = c * prod f_i^i`,
    /// every `f_i` monic, square-free and pairwise coprime. Constant factors are skipped.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "square-free decomposition of the zero polynomial");
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.exact_div(&a0).unwrap().monic();
        let mut c = d.exact_div(&a0).unwrap().scale(&(BigRational::one() / self.leading().unwrap()));
        let mut dd = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).unwrap();
            c = dd.exact_div(&a).unwrap();
            dd = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> BigRational {
        let lead = self.leading().expect("root bound of zero polynomial").abs();
        let max = self.coeffs.iter().rev().skip(1).map(|c| c.abs() / &lead).fold(BigRational::zero(), |m, v| {
            if v > m {
                v
            } else {
                m
            }
        });
        max + int(1)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $method(self, rhs: Self) -> RationalPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integers(c)
    }

    #[test]
    fn canonical_form_strips_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)^2 (x+2)
        let f = &p(&[1, -2, 1]) * &p(&[2, 1]);
        let (q, r) = f.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[-2, 1, 1]));
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
    }

    #[test]
    fn square_free_decomposition_multiplicities() {
        // (x-1)^2 (x+2)^3 (x^2+1)
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[2, 1]).pow(3)) * &p(&[1, 0, 1]);
        let parts = f.square_free_decomposition();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], (p(&[1, 0, 1]), 1));
        assert_eq!(parts[1], (p(&[-1, 1]), 2));
        assert_eq!(parts[2], (p(&[2, 1]), 3));
    }

    #[test]
    fn affine_composition() {
        // f(x) = x^2, f(2x+1) = 4x^2 + 4x + 1
        assert_eq!(p(&[0, 0, 1]).compose_affine(&int(2), &int(1)), p(&[1, 4, 4]));
    }

    #[test]
    fn divide_out_root_counts_multiplicity() {
        let f = &p(&[1, 1]).pow(3) * &p(&[1, 3]);
        let (k, rest) = f.divide_out_root(&int(-1));
        assert_eq!(k, 3);
        assert_eq!(rest, p(&[1, 3]));
    }

    #[test]
    fn primitive_part_keeps_sign() {
        let f = RationalPolynomial::new(vec![ratio(-1, 2), ratio(3, 4)]);
        assert_eq!(f.primitive_integer_coeffs(), vec![BigInt::from(-2), BigInt::from(3)]);
        let g = f.scale(&int(-1));
        assert_eq!(g.primitive_integer_coeffs(), vec![BigInt::from(2), BigInt::from(-3)]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[8, 32, 24]).to_string(), "24*x^2 + 32*x + 8");
        assert_eq!(p(&[1, -1]).to_string(), "-x + 1");
    }

    proptest! {
        #[test]
        fn ring_laws(a in prop::collection::vec(-20i64..20, 0..6),
                     b in prop::collection::vec(-20i64..20, 0..6),
                     x in -5i64..5) {
            let (fa, fb) = (p(&a), p(&b));
            let xv = int(x);
            prop_assert_eq!((&fa * &fb).eval(&xv), fa.eval(&xv) * fb.eval(&xv));
            prop_assert_eq!((&fa + &fb).eval(&xv), fa.eval(&xv) + fb.eval(&xv));
            if !fb.is_zero() {
                let (q, r) = fa.div_rem(&fb);
                prop_assert_eq!(&(&q * &fb) + &r, fa.clone());
                prop_assert!(r.degree().is_none_or(|d| d < fb.degree().unwrap()));
            }
        }
    }
}
