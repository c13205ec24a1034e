//! Exact Sylvester test for collections with rational centers and radii.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::collection::{CoreError, DiskCollection};
use crate::numeric::to_f64;
use crate::positivity::{Certificate, PositivityReport, Verdict};

/// `re + i im` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn zero() -> Self {
        Self::real(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::real(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Panics on zero.
    pub fn inv(&self) -> Self {
        let d = self.norm_sqr();
        assert!(!d.is_zero(), "inverse of zero");
        Self { re: &self.re / &d, im: -&self.im / &d }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: Self) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: Self) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: Self) -> GaussianRational {
        GaussianRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

/// Disk collection with Gaussian-rational centers and rational radii.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalDiskCollection {
    centers: Vec<GaussianRational>,
    radii: Vec<BigRational>,
}

impl RationalDiskCollection {
    pub fn new(centers: Vec<GaussianRational>, radii: Vec<BigRational>) -> Result<Self, CoreError> {
        if centers.is_empty() {
            return Err(CoreError::Empty);
        }
        if centers.len() != radii.len() {
            return Err(CoreError::LengthMismatch { centers: centers.len(), radii: radii.len() });
        }
        for (index, r) in radii.iter().enumerate() {
            if !r.is_positive() {
                return Err(CoreError::NonPositiveRadius { index, value: r.to_string() });
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

    pub fn centers(&self) -> &[GaussianRational] {
        &self.centers
    }

    pub fn radii(&self) -> &[BigRational] {
        &self.radii
    }

    /// `R_k^2 < |a_j - a_k|^2`, decided exactly.
    pub fn is_admissible(&self) -> bool {
        let n = self.len();
        (0..n).all(|k| {
            let r2 = &self.radii[k] * &self.radii[k];
            (0..n).filter(|&j| j != k).all(|j| r2 < (&self.centers[j] - &self.centers[k]).norm_sqr())
        })
    }

    pub fn to_floating(&self) -> Result<DiskCollection, CoreError> {
        DiskCollection::new(
            self.centers.iter().map(GaussianRational::to_complex).collect(),
            self.radii.iter().map(to_f64).collect(),
        )
    }
}

/// `Q^B` in exact arithmetic, row-major.
pub fn exact_q_matrix(c: &RationalDiskCollection) -> Vec<Vec<GaussianRational>> {
    let n = c.len();
    let r2: Vec<GaussianRational> = c.radii.iter().map(|r| GaussianRational::real(r * r)).collect();
    let mut q = vec![vec![GaussianRational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut prod = GaussianRational::one();
            for k in 0..n {
                let aik = &c.centers[i] - &c.centers[k];
                let ajk = (&c.centers[j] - &c.centers[k]).conj();
                prod = &prod * &(&(&aik * &ajk) - &r2[k]);
            }
            let v = -&prod;
            q[j][i] = v.conj();
            q[i][j] = v;
        }
    }
    q
}

/// Leading principal minors by elimination without pivoting, stopping after the
/// first nonpositive one. Minors of a Hermitian matrix are real.
pub fn leading_minors_exact(q: &[Vec<GaussianRational>]) -> Vec<BigRational> {
    let n = q.len();
    let mut w: Vec<Vec<GaussianRational>> = q.to_vec();
    let mut minors = Vec::with_capacity(n);
    let mut det = BigRational::one();
    for k in 0..n {
        let pivot = w[k][k].clone();
        debug_assert!(pivot.im.is_zero());
        det = &det * &pivot.re;
        minors.push(det.clone());
        if !det.is_positive() {
            break;
        }
        let inv = pivot.inv();
        for i in k + 1..n {
            let l = &w[i][k] * &inv;
            if l.is_zero() {
                continue;
            }
            for j in k + 1..n {
                let t = &l * &w[k][j];
                w[i][j] = &w[i][j] - &t;
            }
        }
    }
    minors
}

/// Sylvester's criterion in exact arithmetic. Never `Indeterminate`.
pub fn is_positive_definite_exact(c: &RationalDiskCollection) -> PositivityReport {
    let minors = leading_minors_exact(&exact_q_matrix(c));
    let positive = minors.len() == c.len() && minors.iter().all(Signed::is_positive);
    PositivityReport {
        verdict: if positive { Verdict::PositiveDefinite } else { Verdict::NotPositiveDefinite },
        certificate: Certificate::LeadingMinors(minors.iter().map(to_f64).collect()),
        tolerance_used: 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collection::build_q_matrix;
    use crate::numeric::{int, ratio};

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(int(re), int(im))
    }

    #[test]
    fn two_disks_exact() {
        let c = RationalDiskCollection::new(vec![g(0, 0), g(2, 0)], vec![int(1), int(1)]).unwrap();
        let q = exact_q_matrix(&c);
        assert_eq!(q[0][0], g(3, 0));
        assert_eq!(q[0][1], g(-1, 0));
        assert_eq!(leading_minors_exact(&q), vec![int(3), int(8)]);
        assert!(is_positive_definite_exact(&c).is_positive_definite());
    }

    #[test]
    fn boundary_is_not_positive() {
        // R1^2 + R2^2 = |a1 - a2|^2 exactly
        let c = RationalDiskCollection::new(vec![g(0, 0), g(5, 0)], vec![int(3), int(4)]).unwrap();
        let r = is_positive_definite_exact(&c);
        assert_eq!(r.verdict, Verdict::NotPositiveDefinite);
        assert!(matches!(r.certificate, Certificate::LeadingMinors(ref m) if m.len() == 2 && m[1] == 0.0));
    }

    #[test]
    fn agrees_with_floating_matrix() {
        let c = RationalDiskCollection::new(
            vec![g(0, 0), GaussianRational::new(ratio(3, 2), ratio(1, 3)), g(-1, 2), g(1, 1)],
            vec![ratio(1, 5), ratio(1, 4), ratio(2, 7), ratio(1, 10)],
        )
        .unwrap();
        let exact = exact_q_matrix(&c);
        let float = build_q_matrix(&c.to_floating().unwrap());
        for i in 0..4 {
            for j in 0..4 {
                let e = exact[i][j].to_complex();
                assert!((e - float.get(i, j)).norm() <= 1e-12 * e.norm());
            }
        }
    }

    #[test]
    fn exact_admissibility() {
        let c = RationalDiskCollection::new(vec![g(0, 0), g(3, 4)], vec![int(5), int(1)]).unwrap();
        assert!(!c.is_admissible());
        let c = RationalDiskCollection::new(vec![g(0, 0), g(3, 4)], vec![ratio(49, 10), int(1)]).unwrap();
        assert!(c.is_admissible());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            RationalDiskCollection::new(vec![g(0, 0)], vec![int(0)]),
            Err(CoreError::NonPositiveRadius { index: 0, .. })
        ));
        assert_eq!(
            RationalDiskCollection::new(vec![g(1, 1), g(1, 1)], vec![int(1), int(1)]),
            Err(CoreError::DuplicateCenter(0, 1))
        );
    }
}
