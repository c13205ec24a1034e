//! Three disks of arbitrary radii centered at the cube roots of unity.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::collection::{CoreError, DiskCollection};
use crate::numeric::{binomial, int};
use crate::symmetric::regular_polygon;

/// Distance from the boundary `R1^2 + R2^2 + R3^2 = 3` below which a verdict is flagged.
pub const BOUNDARY_PROXIMITY: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TriangleError {
    #[error("radius {index} must be positive and finite, got {value}")]
    InvalidRadius { index: usize, value: f64 },
    #[error("radius {index} = {value} is not below sqrt(3), so the collection is not admissible")]
    Inadmissible { index: usize, value: f64 },
    #[error("x_{index} = {value} must lie in (0, 3)")]
    OutOfRange { index: usize, value: f64 },
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Squared radii `x_i = R_i^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleRadii {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl TriangleRadii {
    /// Validates `0 < R_i < sqrt 3`.
    pub fn from_radii(r1: f64, r2: f64, r3: f64) -> Result<Self, TriangleError> {
        for (i, &r) in [r1, r2, r3].iter().enumerate() {
            let index = i + 1;
            if !(r > 0.0 && r.is_finite()) {
                return Err(TriangleError::InvalidRadius { index, value: r });
            }
            if r * r >= 3.0 {
                return Err(TriangleError::Inadmissible { index, value: r });
            }
        }
        Ok(Self { x1: r1 * r1, x2: r2 * r2, x3: r3 * r3 })
    }

    pub fn from_squares(x1: f64, x2: f64, x3: f64) -> Result<Self, TriangleError> {
        for (i, &x) in [x1, x2, x3].iter().enumerate() {
            if !(x > 0.0 && x < 3.0) {
                return Err(TriangleError::OutOfRange { index: i + 1, value: x });
            }
        }
        Ok(Self { x1, x2, x3 })
    }

    pub fn sum(&self) -> f64 {
        self.x1 + self.x2 + self.x3
    }
}

/// Disks `B(w, R1), B(w^2, R2), B(w^3, R3)` with `w = e^{2 pi i / 3}`.
pub fn triangle_collection(r1: f64, r2: f64, r3: f64) -> Result<DiskCollection, TriangleError> {
    let centers: Vec<Complex64> = regular_polygon(3, 1.0)?.centers().to_vec();
    Ok(DiskCollection::new(centers, vec![r1, r2, r3])?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriangleVerdict {
    pub positive: bool,
    pub near_boundary: bool,
}

/// Positive iff `R1^2 + R2^2 + R3^2 < 3`. A sum of exactly 3 is not positive.
pub fn triangle_positive(r1: f64, r2: f64, r3: f64) -> Result<TriangleVerdict, TriangleError> {
    let s = TriangleRadii::from_radii(r1, r2, r3)?.sum();
    Ok(TriangleVerdict { positive: s < 3.0, near_boundary: (s - 3.0).abs() <= BOUNDARY_PROXIMITY })
}

/// `phi(x) = 9 + x1 x2 + x2 x3 + x1 x3 - 3(x1 + x2 + x3)`.
pub fn phi(x1: f64, x2: f64, x3: f64) -> f64 {
    9.0 + x1 * x2 + x2 * x3 + x1 * x3 - 3.0 * (x1 + x2 + x3)
}

/// Leading principal minors `(D1, D2, D3)` of the Q-matrix in closed form.
pub fn triangle_minors(x1: f64, x2: f64, x3: f64) -> Result<(f64, f64, f64), TriangleError> {
    let t = TriangleRadii::from_squares(x1, x2, x3)?;
    let (x1, x2, x3) = (t.x1, t.x2, t.x3);
    let p = x1 + x2;
    let q = x1 * x2;
    let d1 = x1 * (3.0 - x2) * (3.0 - x3);
    let d2 = 3.0 * q * ((3.0 - p) * x3 * x3 - x3 * (18.0 + q - 6.0 * p) + 9.0 * (3.0 - p));
    let d3 = 27.0 * (3.0 - t.sum()) * x1 * x2 * x3 * phi(x1, x2, x3);
    Ok((d1, d2, d3))
}

/// Exact polynomial in three variables, keyed by exponent triples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trivariate {
    terms: BTreeMap<[u32; 3], BigRational>,
}

impl Trivariate {
    pub fn add_term(&mut self, exps: [u32; 3], c: BigRational) {
        let entry = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 3], BigRational> {
        &self.terms
    }

    pub fn eval(&self, x: [&BigRational; 3]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| {
                c * num_traits::pow(x[0].clone(), e[0] as usize)
                    * num_traits::pow(x[1].clone(), e[1] as usize)
                    * num_traits::pow(x[2].clone(), e[2] as usize)
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// The polynomial `f(a - x1, a - x2, a - x3)`.
    pub fn reflected(&self, a: i64) -> Self {
        // (a - x)^e = sum_j C(e, j) a^{e-j} (-x)^j
        let expand = |e: u32| -> Vec<(u32, BigRational)> {
            (0..=e)
                .map(|j| {
                    let sign = if j % 2 == 0 { int(1) } else { int(-1) };
                    let c = BigRational::from_integer(binomial(e as u64, j as u64))
                        * num_traits::pow(int(a), (e - j) as usize)
                        * sign;
                    (j, c)
                })
                .collect()
        };
        let mut out = Self::default();
        for (e, c) in &self.terms {
            for (j0, c0) in expand(e[0]) {
                for (j1, c1) in expand(e[1]) {
                    for (j2, c2) in expand(e[2]) {
                        out.add_term([j0, j1, j2], c * &c0 * &c1 * &c2);
                    }
                }
            }
        }
        out
    }
}

/// `phi` as an exact polynomial.
pub fn phi_polynomial() -> Trivariate {
    let mut p = Trivariate::default();
    p.add_term([0, 0, 0], int(9));
    p.add_term([1, 1, 0], BigRational::one());
    p.add_term([0, 1, 1], BigRational::one());
    p.add_term([1, 0, 1], BigRational::one());
    p.add_term([1, 0, 0], int(-3));
    p.add_term([0, 1, 0], int(-3));
    p.add_term([0, 0, 1], int(-3));
    p
}

/// `phi(3 - x1, 3 - x2, 3 - x3) = phi(x1, x2, x3)`, compared coefficientwise.
pub fn phi_reflection_symmetry_holds() -> bool {
    let p = phi_polynomial();
    p.reflected(3) == p
}
