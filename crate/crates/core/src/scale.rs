use crate::collection::{build_q_matrix, CoreError, DiskCollection};
use crate::positivity::{is_positive_definite, Verdict, DEFAULT_TOLERANCE};

pub const DEFAULT_SCALE_TOLERANCE: f64 = 1e-12;

const MAX_DOUBLINGS: usize = 200;

fn positive_at(c: &DiskCollection, s: f64, pd_tol: f64) -> Result<bool, CoreError> {
    let scaled = c.scaled_radii(s)?;
    Ok(is_positive_definite(&build_q_matrix(&scaled), pd_tol)?.verdict == Verdict::PositiveDefinite)
}

/// Supremum of the factors `s` for which `{B(a_j, s R_j)}` is positive.
///
/// Positivity is monotone in the radii, so the positive factors form an
/// interval `(0, s*)` that is bracketed by doubling and then bisected to an
/// absolute width `tol`. A single disk is positive for every radius and gives
/// `+inf`.
pub fn max_uniform_scale(c: &DiskCollection, tol: f64) -> Result<f64, CoreError> {
    max_uniform_scale_with(c, tol, DEFAULT_TOLERANCE)
}

/// As [`max_uniform_scale`] with an explicit positivity tolerance; an
/// `Indeterminate` verdict counts as not positive.
pub fn max_uniform_scale_with(c: &DiskCollection, tol: f64, pd_tol: f64) -> Result<f64, CoreError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CoreError::InvalidTolerance(tol));
    }
    let Some(dmin) = c.min_pairwise_distance() else {
        return Ok(f64::INFINITY);
    };
    let rmax = c.radii().iter().copied().fold(0.0, f64::max);

    // at this factor some disk reaches a neighbouring center
    let mut hi = dmin / rmax;
    let mut doublings = 0;
    while positive_at(c, hi, pd_tol)? {
        hi *= 2.0;
        doublings += 1;
        if doublings > MAX_DOUBLINGS || !hi.is_finite() {
            return Err(CoreError::BracketFailed);
        }
    }
    let mut lo = hi / 2.0;
    let mut halvings = 0;
    while !positive_at(c, lo, pd_tol)? {
        hi = lo;
        lo /= 2.0;
        halvings += 1;
        if halvings > MAX_DOUBLINGS || lo == 0.0 {
            return Err(CoreError::BracketFailed);
        }
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if positive_at(c, mid, pd_tol)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
