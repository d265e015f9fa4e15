//! Adaptive Simpson quadrature with an explicit tolerance contract.
//!
//! Integrands here are bounded and piecewise smooth with isolated kinks at
//! known abscissas, so the caller passes those as split points and each pane
//! is refined independently until the Richardson error estimate meets the
//! tolerance. The default tolerances (1e-9 absolute, 1e-8 relative) are part
//! of the public contract of the service-probability evaluator.

use crate::error::{Error, Result};

/// Absolute / relative tolerance pair for adaptive refinement.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 1e-9, rel: 1e-8 }
    }
}

const MAX_DEPTH: u32 = 52;

/// Integrate `f` over `[lo, hi]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: Tolerance) -> Result<f64> {
    integrate_split(f, &[lo, hi], tol)
}

/// Integrate over consecutive panes `[points[0], points[1]], ...`.
///
/// Non-finite or non-increasing interior points are ignored, so callers can
/// pass candidate kink locations without pre-filtering.
pub fn integrate_split<F: Fn(f64) -> f64>(f: F, points: &[f64], tol: Tolerance) -> Result<f64> {
    assert!(points.len() >= 2, "need at least the two endpoints");
    let lo = points[0];
    let hi = points[points.len() - 1];
    if !(hi > lo) {
        return Ok(0.0);
    }

    let mut panes: Vec<f64> = Vec::with_capacity(points.len());
    panes.push(lo);
    for &p in &points[1..points.len() - 1] {
        if p.is_finite() && p > *panes.last().unwrap() && p < hi {
            panes.push(p);
        }
    }
    panes.push(hi);

    // First pass gives the scale for the relative part of the tolerance.
    let mut coarse = 0.0;
    for w in panes.windows(2) {
        coarse += simpson(&f, w[0], w[1]);
    }
    let eps = tol.abs.max(tol.rel * coarse.abs());

    let mut total = 0.0;
    for w in panes.windows(2) {
        let (a, b) = (w[0], w[1]);
        let fa = f(a);
        let m = 0.5 * (a + b);
        let fm = f(m);
        let fb = f(b);
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        let pane_eps = eps * (b - a) / (hi - lo);
        let mut worst = (0.0f64, a, b);
        total += refine(&f, a, b, fa, fm, fb, whole, pane_eps, MAX_DEPTH, &mut worst);
        if worst.0 > pane_eps.max(tol.abs) {
            return Err(Error::QuadratureNonConvergence {
                lo: worst.1,
                hi: worst.2,
                err: worst.0,
            });
        }
    }
    Ok(total)
}

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
    worst: &mut (f64, f64, f64),
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let err = (left + right - whole) / 15.0;
    if err.abs() <= eps || depth == 0 || (b - a) < f64::EPSILON * (a.abs() + b.abs()) {
        if depth == 0 && err.abs() > eps && err.abs() > worst.0 {
            *worst = (err.abs(), a, b);
        }
        return left + right + err;
    }
    refine(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1, worst)
        + refine(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1, worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let v = integrate(|x| 3.0 * x * x, 0.0, 2.0, Tolerance::default()).unwrap();
        assert!((v - 8.0).abs() < 1e-12);
    }

    #[test]
    fn gaussian_tail() {
        // int_0^6 e^{-x^2} dx = sqrt(pi)/2 erf(6)
        let v = integrate(|x| (-x * x).exp(), 0.0, 6.0, Tolerance::default()).unwrap();
        assert!((v - 0.886_226_925_452_758).abs() < 1e-9);
    }

    #[test]
    fn kink_with_split_point() {
        // |x - 1| over [0, 3]: area = 0.5 + 2
        let f = |x: f64| (x - 1.0).abs();
        let v = integrate_split(f, &[0.0, 1.0, 3.0], Tolerance::default()).unwrap();
        assert!((v - 2.5).abs() < 1e-10);
    }

    #[test]
    fn empty_interval_is_zero() {
        let v = integrate(|_| 1.0, 2.0, 2.0, Tolerance::default()).unwrap();
        assert_eq!(v, 0.0);
    }
}
