//! The V-polynomial family `V_{n,m}(x) = C(n,m)/n * F(-m, 1-m; 1-n; x)` and the
//! exact identities tying it to the circulant eigenvalue polynomials.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::roots::refine_square_free_roots;
use super::{hypergeometric_polynomial, isolate_real_roots, OrthopolyError, RationalPolynomial, RootSummary};
use crate::numeric::{binomial, int, ratio};
use crate::symmetric::t_polynomial;

pub fn v_polynomial(n: u64, m: u64) -> Result<RationalPolynomial, OrthopolyError> {
    if n < 2 || m < 1 || m >= n {
        return Err(OrthopolyError::IndexOutOfRange(format!(
            "V_{{n,m}} needs n >= 2 and 1 <= m <= n-1, got n={n}, m={m}"
        )));
    }
    let f = hypergeometric_polynomial(-(m as i64), &int(1 - m as i64), &int(1 - n as i64))?;
    let scale = BigRational::new(binomial(n, m), n.into());
    let v = f.scale(&scale);
    assert_eq!(v.degree(), Some(m as usize - 1), "V_{{{n},{m}}} must have degree m-1");
    Ok(v)
}

/// `L[f] = x f'' - (n-1) f'`.
pub fn l_operator(n: u64, f: &RationalPolynomial) -> RationalPolynomial {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    &d2.shift_up(1) - &d1.scale(&int(n as i64 - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Identity {
    /// `V_{n,n-m} = (1-x)^{n-2m} V_{n,m}`
    Symmetry,
    /// `V_{n,m-1} = L[V_{n,m}] / ((n+1-m)(m-1))`
    Recurrence,
    /// `T_{n,m}(z) = (-1)^{n-m} n^2 z^{n-2m} (1+z)^m V_{n,m}(1/(1+z))`
    Bridge,
    /// `T_{n,m}(z) = (-1)^{n-m} n^2 z^{n-2m} / (n-m) P_m^{n-2m,-1}(2z+1)`
    JacobiLink,
    /// `P_k^{a,b}(x) = (-1)^k P_k^{b,a}(-x)`
    Alternation,
    /// `n P_n^{-1,-1}(x) = (n-1) (x-1)/2 P_{n-1}^{1,-1}(x)`
    Reduction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub n: u64,
    pub m: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn push(&mut self, identity: Identity, n: u64, m: u64, holds: bool) {
        self.checks.push(IdentityCheck { identity, n, m, holds });
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.holds)
    }

    pub fn extend(&mut self, other: IdentityReport) {
        self.checks.extend(other.checks);
    }
}

fn one_minus_x_pow(k: usize) -> RationalPolynomial {
    RationalPolynomial::affine_power(&int(-1), &int(1), k)
}

/// `(1+z)^m V(1/(1+z))` for `deg V <= m`, as a polynomial in `z`.
pub(crate) fn homogenize_reciprocal(v: &RationalPolynomial, m: usize) -> RationalPolynomial {
    let one_plus_z = RationalPolynomial::from_integers(&[1, 1]);
    let mut acc = RationalPolynomial::zero();
    for (j, c) in v.coeffs().iter().enumerate() {
        acc = &acc + &one_plus_z.pow(m - j).scale(c);
    }
    acc
}

/// Exact check of the symmetry, recurrence and T/V bridge identities for every
/// admissible `m`. Negative powers are cleared by multiplying both sides.
pub fn v_identity_suite(n: u64) -> Result<IdentityReport, OrthopolyError> {
    if n < 2 {
        return Err(OrthopolyError::IndexOutOfRange(format!("identity suite needs n >= 2, got {n}")));
    }
    let v: Vec<RationalPolynomial> = (1..n).map(|m| v_polynomial(n, m)).collect::<Result<_, _>>()?;
    let vm = |m: u64| &v[m as usize - 1];
    let mut report = IdentityReport::default();

    for m in 1..n {
        let holds = if 2 * m <= n {
            *vm(n - m) == vm(m) * &one_minus_x_pow((n - 2 * m) as usize)
        } else {
            &one_minus_x_pow((2 * m - n) as usize) * vm(n - m) == *vm(m)
        };
        report.push(Identity::Symmetry, n, m, holds);
    }

    for m in 2..n {
        let lhs = vm(m - 1).scale(&int(((n + 1 - m) * (m - 1)) as i64));
        report.push(Identity::Recurrence, n, m, lhs == l_operator(n, vm(m)));
    }

    let n2 = int((n * n) as i64);
    for m in 1..n {
        let t = t_polynomial(n, m).expect("m in range");
        let sign = if (n - m).is_multiple_of(2) { int(1) } else { int(-1) };
        let rhs = homogenize_reciprocal(vm(m), m as usize).scale(&(sign * &n2));
        let holds =
            if 2 * m <= n { t == rhs.shift_up((n - 2 * m) as usize) } else { t.shift_up((2 * m - n) as usize) == rhs };
        report.push(Identity::Bridge, n, m, holds);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroStructureReport {
    pub n: u64,
    pub m: u64,
    /// Real roots of `V_{n,m}` with multiplicities.
    pub roots: Vec<RootSummary>,
    pub multiplicity_at_one: usize,
    pub simple_roots_above_one: usize,
    /// `None` when there is no lower neighbour to interlace with.
    pub interlaces_with_previous: Option<bool>,
    pub failures: Vec<String>,
}

impl ZeroStructureReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies, exactly, the real-root structure of `V_{n,m}`:
///
/// * `m <= n/2`: `m-1` simple roots, all in `(1, inf)`;
/// * `m > n/2`: `n-m-1` simple roots in `(1, inf)` and a root of multiplicity
///   `2m-n` at `x = 1`;
/// * for `3 <= m <= n/2`, the roots of `V_{n,m}` and `V_{n,m-1}` strictly interlace
///   with the smallest root of `V_{n,m}` first.
pub fn zero_structure_check(n: u64, m: u64) -> Result<ZeroStructureReport, OrthopolyError> {
    if n < 4 || m < 2 || m >= n {
        return Err(OrthopolyError::IndexOutOfRange(format!(
            "zero structure needs n >= 4 and 2 <= m <= n-1, got n={n}, m={m}"
        )));
    }
    let nu = n / 2;
    let v = v_polynomial(n, m)?;
    let one = BigRational::one();
    let mut failures = Vec::new();

    let all = super::isolate_all_real_roots(&v, 1e-12)?;
    if all.root_count() != (m - 1) as usize {
        failures.push(format!("expected only real roots ({} with multiplicity), found {}", m - 1, all.root_count()));
    }

    let (at_one, cofactor) = v.divide_out_root(&one);
    let expected_at_one = if m <= nu { 0 } else { (2 * m - n) as usize };
    if at_one != expected_at_one {
        failures.push(format!("multiplicity at x=1 is {at_one}, expected {expected_at_one}"));
    }

    let expected_above = if m <= nu { m - 1 } else { n - m - 1 } as usize;
    let mut simple_above = 0;
    if cofactor.degree().unwrap_or(0) > 0 {
        let bound = cofactor.root_bound();
        let below = isolate_real_roots(&cofactor, &-bound.clone(), &one, 1e-6)?;
        if below.root_count() != 0 {
            failures.push(format!("{} roots at or below x=1 besides x=1 itself", below.root_count()));
        }
        let above = isolate_real_roots(&cofactor, &one, &bound, 1e-6)?;
        if above.intervals.iter().any(|iv| iv.multiplicity != 1) {
            failures.push("repeated root in (1, inf)".to_string());
        }
        simple_above = above.intervals.iter().filter(|iv| iv.multiplicity == 1).count();
    }
    if simple_above != expected_above {
        failures.push(format!("{simple_above} simple roots in (1, inf), expected {expected_above}"));
    }

    let interlaces = if (3..=nu).contains(&m) {
        let previous = v_polynomial(n, m - 1)?;
        let ok = strictly_interlaces(&v, &previous);
        if !ok {
            failures.push(format!("roots of V_{{{n},{m}}} and V_{{{n},{}}} do not interlace", m - 1));
        }
        Some(ok)
    } else {
        None
    };

    Ok(ZeroStructureReport {
        n,
        m,
        roots: all.summary(),
        multiplicity_at_one: at_one,
        simple_roots_above_one: simple_above,
        interlaces_with_previous: interlaces,
        failures,
    })
}

/// `1 < xi_1 < eta_1 < xi_2 < ... < eta_{k-1} < xi_k` where `xi` are the roots of
/// `outer` (degree k) and `eta` those of `inner` (degree k-1), both assumed square-free.
fn strictly_interlaces(outer: &RationalPolynomial, inner: &RationalPolynomial) -> bool {
    if outer.gcd(inner).degree() != Some(0) {
        return false;
    }
    let (k_outer, k_inner) = (outer.degree().unwrap(), inner.degree().unwrap());
    if k_outer != k_inner + 1 {
        return false;
    }
    let lo = BigRational::one();
    let hi = {
        let a = outer.root_bound();
        let b = inner.root_bound();
        if a > b {
            a
        } else {
            b
        }
    };
    let mut width = ratio(1, 1000);
    for _ in 0..200 {
        let xi = refine_square_free_roots(outer, &lo, &hi, &width);
        let eta = refine_square_free_roots(inner, &lo, &hi, &width);
        if xi.len() != k_outer || eta.len() != k_inner {
            return false;
        }
        let mut merged: Vec<(&(BigRational, BigRational), bool)> =
            xi.iter().map(|iv| (iv, true)).chain(eta.iter().map(|iv| (iv, false))).collect();
        merged.sort_by(|a, b| a.0 .0.cmp(&b.0 .0));
        let disjoint = merged.windows(2).all(|w| w[0].0 .1 <= w[1].0 .0 && w[0].0 .1 != w[1].0 .1);
        if disjoint {
            return merged.iter().enumerate().all(|(i, (_, is_outer))| *is_outer == (i % 2 == 0));
        }
        width /= int(16);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_first_is_one() {
        for n in 2..10 {
            assert_eq!(v_polynomial(n, 1).unwrap(), RationalPolynomial::one());
        }
    }

    #[test]
    fn small_cases_from_the_n4_base() {
        assert_eq!(v_polynomial(4, 2).unwrap(), RationalPolynomial::new(vec![ratio(3, 2), int(-1)]));
        assert_eq!(v_polynomial(4, 3).unwrap(), RationalPolynomial::from_integers(&[1, -2, 1]));
    }

    #[test]
    fn range_errors() {
        assert!(v_polynomial(4, 0).is_err());
        assert!(v_polynomial(4, 4).is_err());
        assert!(zero_structure_check(3, 2).is_err());
    }

    #[test]
    fn recurrence_n5_m2() {
        let l = l_operator(5, &v_polynomial(5, 2).unwrap()).scale(&ratio(1, 4));
        assert_eq!(l, v_polynomial(5, 1).unwrap());
    }

    #[test]
    fn symmetry_n4() {
        assert_eq!(v_polynomial(4, 3).unwrap(), &one_minus_x_pow(2) * &v_polynomial(4, 1).unwrap());
    }

    #[test]
    fn identity_suite_passes() {
        for n in 2..=9 {
            let r = v_identity_suite(n).unwrap();
            assert!(r.all_hold(), "n={n}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn n4_m3_double_root_at_one() {
        let r = zero_structure_check(4, 3).unwrap();
        assert!(r.holds(), "{:?}", r.failures);
        assert_eq!(r.multiplicity_at_one, 2);
        assert_eq!(r.simple_roots_above_one, 0);
    }

    #[test]
    fn n6_m3_two_simple_roots() {
        let r = zero_structure_check(6, 3).unwrap();
        assert!(r.holds(), "{:?}", r.failures);
        assert_eq!(r.simple_roots_above_one, 2);
        assert_eq!(r.interlaces_with_previous, Some(true));
    }

    #[test]
    fn n8_interlacing() {
        let r = zero_structure_check(8, 3).unwrap();
        assert_eq!(r.interlaces_with_previous, Some(true));
        assert!(r.roots.iter().all(|x| x.value > 1.0));
    }

    #[test]
    fn interlacing_detects_violation() {
        // roots {2, 3} against {4}: 4 is not between them
        let outer = RationalPolynomial::from_integers(&[6, -5, 1]);
        let inner = RationalPolynomial::from_integers(&[-4, 1]);
        assert!(!strictly_interlaces(&outer, &inner));
        let inner_ok = RationalPolynomial::new(vec![ratio(-5, 2), int(1)]);
        assert!(strictly_interlaces(&outer, &inner_ok));
    }
}
