//! Floquet theory for `-psi'' + u psi = lambda psi` with pi-periodic `u`.
//!
//! Everything here integrates the ODE directly and never looks at the
//! algebraic structure of the potential, so it serves as an independent
//! check of the solvable spectrum and of the Darboux construction.
//!
//! The monodromy matrix is stored in the fundamental convention: its columns
//! are `(c(pi), c'(pi))` and `(s(pi), s'(pi))` for the solutions with
//! `(c, c')(0) = (1, 0)` and `(s, s')(0) = (0, 1)`.

mod edges;
pub mod ode;

pub use edges::{
    band_edges, band_edges_with, classify_dirichlet, dirichlet_eigenvalues, gaps_up_to,
    predicted_open, BandOptions, DirichletLocation, DirichletPoint, EdgeKind, Gap, GapPrediction,
    GapReport, CLOSURE_TOL, EDGE_MATCH_TOL, ROOT_TOL, SCAN_POINTS,
};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::potential::PotentialFn;
use crate::scalar::Real;

/// Right-hand-side evaluations allowed per integration.
pub const STEP_BUDGET: usize = 1_000_000;
/// Default bound on `|det M - 1|`.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monodromy<T> {
    pub lambda: T,
    /// `m[row][col]`.
    pub m: [[T; 2]; 2],
    /// `Delta = tr M`.
    pub trace: T,
    /// `|det M - 1|`.
    pub det_error: T,
    /// Relative tolerance the integrator finally ran with.
    pub rtol: T,
    pub evals: usize,
}

impl<T: Real> Monodromy<T> {
    pub fn det(&self) -> T {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }
}

fn hill_rhs<T: Real>(u: &PotentialFn<T>, lambda: T) -> impl Fn(T, &[T; 4]) -> [T; 4] + '_ {
    move |x, y| {
        let q = u.eval(x) - lambda;
        [y[1], q * y[0], y[3], q * y[2]]
    }
}

/// `(c, c', s, s')` at `x` for the fundamental solutions.
pub fn fundamental_at<T: Real>(
    u: &PotentialFn<T>,
    lambda: T,
    x: T,
    rtol: T,
) -> Result<([T; 4], usize)> {
    ode::integrate(
        hill_rhs(u, lambda),
        [T::one(), T::zero(), T::zero(), T::one()],
        T::zero(),
        x,
        rtol,
        2,
        STEP_BUDGET,
    )
}

fn smallest_rtol<T: Real>() -> T {
    T::epsilon() * T::lit(50.0)
}

/// Monodromy over `[0, pi]`, tightening the integrator until
/// `|det M - 1| <= tol * scale`, where `scale` is the size of the terms that
/// cancel in the determinant (at least 1).
///
/// For even potentials only `[0, pi/2]` is integrated and
/// `M = [[cs' + sc', 2ss'], [2cc', cs' + sc']]` is assembled from the
/// half-period values, which is exact by reflection symmetry.
pub fn monodromy<T: Real>(u: &PotentialFn<T>, lambda: T, tol: T) -> Result<Monodromy<T>> {
    if !(tol > T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if !lambda.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "lambda must be finite, got {lambda}"
        )));
    }
    let floor = smallest_rtol::<T>();
    let mut rtol = (tol * T::lit(1e-2)).max(floor);
    let mut evals = 0;
    loop {
        let (m, scale, used) = if u.is_even() {
            let (y, used) = fundamental_at(u, lambda, T::FRAC_PI_2(), rtol)?;
            let (c, dc, s, ds) = (y[0], y[1], y[2], y[3]);
            let diag = c * ds + s * dc;
            let m = [[diag, T::two() * s * ds], [T::two() * c * dc, diag]];
            let half = (c * ds).abs() + (s * dc).abs();
            (m, half * half, used)
        } else {
            let (y, used) = fundamental_at(u, lambda, T::PI(), rtol)?;
            let m = [[y[0], y[2]], [y[1], y[3]]];
            let scale = (m[0][0] * m[1][1]).abs().max((m[0][1] * m[1][0]).abs());
            (m, scale, used)
        };
        evals += used;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let det_error = (det - T::one()).abs();
        if det_error <= tol * scale.max(T::one()) {
            return Ok(Monodromy {
                lambda,
                m,
                trace: m[0][0] + m[1][1],
                det_error,
                rtol,
                evals,
            });
        }
        if rtol <= floor || evals > STEP_BUDGET {
            return Err(Error::Integrator {
                reason: format!("|det M - 1| = {det_error:e} above {tol:e} at lambda = {lambda}"),
                achieved: det_error.as_f64(),
            });
        }
        rtol = (rtol * T::lit(0.1)).max(floor);
    }
}

/// `Delta(lambda) = tr M(lambda)`.
pub fn discriminant<T: Real>(u: &PotentialFn<T>, lambda: T, tol: T) -> Result<T> {
    Ok(monodromy(u, lambda, tol)?.trace)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminantSample<T> {
    pub lambda: T,
    pub delta: T,
    pub det_error: T,
}

/// `samples` equally spaced values of `Delta` on `[lambda_min, lambda_max]`,
/// computed in parallel and returned in increasing `lambda`.
pub fn discriminant_scan<T: Real>(
    u: &PotentialFn<T>,
    lambda_min: T,
    lambda_max: T,
    samples: usize,
    tol: T,
) -> Result<Vec<DiscriminantSample<T>>> {
    if !(lambda_min < lambda_max) || !lambda_min.is_finite() || !lambda_max.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "need finite lambda_min < lambda_max, got [{lambda_min}, {lambda_max}]"
        )));
    }
    if samples < 2 {
        return Err(Error::InvalidParameter("need at least 2 samples".into()));
    }
    let step = (lambda_max - lambda_min) / T::from_count(samples - 1);
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let lambda = if i + 1 == samples {
                lambda_max
            } else {
                lambda_min + step * T::from_count(i)
            };
            let m = monodromy(u, lambda, tol)?;
            Ok(DiscriminantSample {
                lambda,
                delta: m.trace,
                det_error: m.det_error,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qes::{solvable_spectrum, WHParams};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn free_monodromy_closed_form() {
        let u = PotentialFn::<f64>::free();
        let m = monodromy(&u, 1.0, 1e-10).unwrap();
        assert_abs_diff_eq!(m.m[0][0], -1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(m.m[1][1], -1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(m.m[0][1], 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(m.m[1][0], 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(m.trace, -2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(discriminant(&u, 4.0, 1e-10).unwrap(), 2.0, epsilon = 1e-9);
        let m = monodromy(&u, 2.0, 1e-10).unwrap();
        let k = 2.0f64.sqrt();
        assert_abs_diff_eq!(m.m[0][1], (k * PI).sin() / k, epsilon = 1e-9);
        assert_abs_diff_eq!(m.m[1][0], -k * (k * PI).sin(), epsilon = 1e-9);
    }

    #[test]
    fn free_scan_matches_cosine() {
        let u = PotentialFn::<f64>::free();
        let scan = discriminant_scan(&u, 0.0, 20.0, 81, 1e-10).unwrap();
        assert_eq!(scan.len(), 81);
        assert_eq!(scan[80].lambda, 20.0);
        for p in &scan {
            assert_abs_diff_eq!(p.delta, 2.0 * (PI * p.lambda.sqrt()).cos(), epsilon = 1e-8);
        }
        assert!(discriminant_scan(&u, 1.0, 0.0, 10, 1e-8).is_err());
        assert!(discriminant_scan(&u, 0.0, 1.0, 1, 1e-8).is_err());
    }

    #[test]
    fn periodic_at_solvable_ground_state() {
        let p = WHParams::new(1.0, 3).unwrap();
        let spec = solvable_spectrum(&p).unwrap();
        let u = PotentialFn::whittaker_hill(&p);
        for e in &spec.entries {
            let m = monodromy(&u, e.lambda, 1e-10).unwrap();
            assert_abs_diff_eq!(m.trace, 2.0, epsilon = 1e-6);
            assert!(m.det_error <= 1e-8);
        }
    }

    #[test]
    fn invalid_arguments() {
        let u = PotentialFn::<f64>::free();
        assert!(monodromy(&u, 1.0, 0.0).is_err());
        assert!(monodromy(&u, f64::NAN, 1e-8).is_err());
    }
}
