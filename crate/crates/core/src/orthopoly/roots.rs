//! Guaranteed real-root isolation: exact square-free decomposition, Sturm
//! chains over primitive integer remainder sequences, and rational bisection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{OrthopolyError, RationalPolynomial};
use crate::numeric::{self, int};

/// One isolated real root (or cluster of equal roots).
///
/// The root lies in the half-open interval `(lower, upper]`; when
/// `lower == upper` it is known exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lower: BigRational,
    pub upper: BigRational,
    pub multiplicity: usize,
}

impl IsolatingInterval {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lower + &self.upper) / int(2)
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootIsolation {
    /// Ascending, pairwise disjoint.
    pub intervals: Vec<IsolatingInterval>,
    /// Interval midpoints, each within the requested precision of its root.
    pub refined: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootSummary {
    pub value: f64,
    pub multiplicity: usize,
}

impl RootIsolation {
    /// Number of roots counted with multiplicity.
    pub fn root_count(&self) -> usize {
        self.intervals.iter().map(|i| i.multiplicity).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.intervals.len()
    }

    pub fn summary(&self) -> Vec<RootSummary> {
        self.intervals
            .iter()
            .zip(&self.refined)
            .map(|(i, &value)| RootSummary { value, multiplicity: i.multiplicity })
            .collect()
    }
}

/// Integer polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn from_rational(p: &RationalPolynomial) -> Self {
        IntPoly(p.primitive_integer_coeffs())
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn lead(&self) -> &BigInt {
        self.0.last().unwrap()
    }

    fn derivative(&self) -> Self {
        IntPoly(self.0.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect()).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Divides out the (positive) content.
    fn primitive(self) -> Self {
        let g = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return self;
        }
        IntPoly(self.0.into_iter().map(|c| c / &g).collect())
    }

    /// `|lc(b)|^(deg a - deg b + 1) * a mod b`, a positive multiple of the true remainder.
    fn positive_pseudo_remainder(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree();
        let lead = b.lead().clone();
        let lead_abs = lead.abs();
        let mut r = self.0.clone();
        let da = self.degree();
        let steps = da + 1 - db;
        for k in (0..steps).rev() {
            // r <- |lc| * r - sgn(lc) * r[k+db] * x^k * b
            let top = r[k + db].clone();
            for c in r.iter_mut() {
                *c *= &lead_abs;
            }
            if !top.is_zero() {
                let factor = if lead.is_negative() { -top } else { top };
                for (j, bc) in b.0.iter().enumerate() {
                    r[k + j] -= &factor * bc;
                }
            }
        }
        r.truncate(db);
        IntPoly(r).trimmed()
    }

    /// Sign of `p(num/den)` with `den > 0`, evaluated homogeneously in integers.
    fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.0.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        // acc = den^deg * p(num/den)
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    fn sign_at_rational(&self, x: &BigRational) -> i8 {
        self.sign_at(x.numer(), x.denom())
    }
}

/// Sturm chain of a square-free polynomial with integer coefficients.
#[derive(Clone, Debug)]
pub(crate) struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// `p` must be square-free and of positive degree.
    pub(crate) fn new(p: &RationalPolynomial) -> Self {
        let p0 = IntPoly::from_rational(p);
        assert!(p0.degree() >= 1, "Sturm chain needs positive degree");
        let p1 = p0.derivative().primitive();
        let mut chain = vec![p0, p1];
        loop {
            let n = chain.len();
            let rem = chain[n - 2].positive_pseudo_remainder(&chain[n - 1]);
            if rem.is_zero() {
                break;
            }
            let next = IntPoly(rem.0.into_iter().map(|c| -c).collect()).primitive();
            chain.push(next);
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = p.sign_at_rational(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in `(a, b]`.
    pub(crate) fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }

    fn sign(&self, x: &BigRational) -> i8 {
        self.chain[0].sign_at_rational(x)
    }

    /// Disjoint intervals `(lo, hi]`, each holding exactly one root of the chain's polynomial.
    pub(crate) fn isolate(&self, lo: &BigRational, hi: &BigRational) -> Vec<(BigRational, BigRational)> {
        let mut out = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone(), self.count(lo, hi))];
        while let Some((a, b, c)) = stack.pop() {
            match c {
                0 => {}
                1 => out.push((a, b)),
                _ => {
                    let m = (&a + &b) / int(2);
                    let left = self.count(&a, &m);
                    stack.push((m.clone(), b, c - left));
                    stack.push((a, m, left));
                }
            }
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// Shrinks `(a, b]` (holding one root) until narrower than `width`, or exact.
    pub(crate) fn refine(
        &self,
        mut a: BigRational,
        mut b: BigRational,
        width: &BigRational,
    ) -> (BigRational, BigRational) {
        if self.sign(&b) == 0 {
            return (b.clone(), b);
        }
        let two = int(2);
        let mut sa = self.sign(&a);
        while &(&b - &a) >= width {
            let m = (&a + &b) / &two;
            let sm = self.sign(&m);
            if sm == 0 {
                return (m.clone(), m);
            }
            let root_left = if sa == 0 {
                // `a` is some other root; fall back to counting.
                self.count(&a, &m) == 1
            } else {
                sa != sm
            };
            if root_left {
                b = m;
            } else {
                a = m;
                sa = sm;
            }
        }
        (a, b)
    }
}

fn precision_to_rational(precision: f64) -> Result<BigRational, OrthopolyError> {
    if !(precision > 0.0 && precision.is_finite()) {
        return Err(OrthopolyError::InvalidPrecision(precision));
    }
    Ok(numeric::from_f64(precision))
}

/// Isolates every real root of `p` in `(lo, hi]` and refines each to `precision`.
///
/// Multiplicities come from the exact square-free decomposition, so repeated
/// roots are reported once with their multiplicity.
pub fn isolate_real_roots(
    p: &RationalPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    precision: f64,
) -> Result<RootIsolation, OrthopolyError> {
    if p.is_zero() {
        return Err(OrthopolyError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(OrthopolyError::EmptyRange);
    }
    let width = precision_to_rational(precision)?;
    let mut intervals: Vec<(IsolatingInterval, usize)> = Vec::new();
    let mut chains = Vec::new();
    for (factor, multiplicity) in p.square_free_decomposition() {
        let chain = SturmChain::new(&factor);
        for (a, b) in chain.isolate(lo, hi) {
            let (a, b) = chain.refine(a, b, &width);
            intervals.push((IsolatingInterval { lower: a, upper: b, multiplicity }, chains.len()));
        }
        chains.push(chain);
    }
    intervals.sort_by(|x, y| x.0.lower.cmp(&y.0.lower));
    // Distinct square-free factors are coprime, so overlapping intervals hold
    // different roots and separate after enough refinement.
    loop {
        let mut overlap = None;
        for k in 1..intervals.len() {
            if intervals[k].0.lower < intervals[k - 1].0.upper {
                overlap = Some(k);
                break;
            }
        }
        let Some(k) = overlap else { break };
        for idx in [k - 1, k] {
            let (iv, c) = &intervals[idx];
            let half = iv.width() / int(2);
            if half.is_zero() {
                continue;
            }
            let (a, b) = chains[*c].refine(iv.lower.clone(), iv.upper.clone(), &half);
            intervals[idx].0.lower = a;
            intervals[idx].0.upper = b;
        }
        intervals.sort_by(|x, y| x.0.lower.cmp(&y.0.lower));
    }
    let intervals: Vec<IsolatingInterval> = intervals.into_iter().map(|(iv, _)| iv).collect();
    let refined = intervals.iter().map(|iv| numeric::to_f64(&iv.midpoint())).collect();
    Ok(RootIsolation { intervals, refined })
}

/// Isolates all real roots of `p`.
pub fn isolate_all_real_roots(p: &RationalPolynomial, precision: f64) -> Result<RootIsolation, OrthopolyError> {
    if p.is_zero() {
        return Err(OrthopolyError::ZeroPolynomial);
    }
    let bound = p.root_bound();
    isolate_real_roots(p, &-bound.clone(), &bound, precision)
}

/// Roots of a square-free polynomial `p` in `(lo, hi]` as raw intervals, refined
/// until narrower than `width`.
pub(crate) fn refine_square_free_roots(
    p: &RationalPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> Vec<(BigRational, BigRational)> {
    let chain = SturmChain::new(p);
    chain.isolate(lo, hi).into_iter().map(|(a, b)| chain.refine(a, b, width)).collect()
}
