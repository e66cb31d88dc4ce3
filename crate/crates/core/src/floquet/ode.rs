//! Dormand–Prince 5(4) with FSAL and per-block error scaling.

use crate::error::{Error, Result};
use crate::scalar::Real;

const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [&[f64]; 6] = [
    &[1.0 / 5.0],
    &[3.0 / 40.0, 9.0 / 40.0],
    &[44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0],
    &[
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
    ],
    &[
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
    ],
    &[
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Integrates `y' = f(x, y)` from `x0` to `x1`.
///
/// The error of each consecutive block of `block` components is measured
/// relative to that block's largest magnitude, so independent solutions
/// stacked in one state are controlled separately. Returns the final state
/// and the number of right-hand-side evaluations.
pub fn integrate<T: Real, const N: usize>(
    f: impl Fn(T, &[T; N]) -> [T; N],
    y0: [T; N],
    x0: T,
    x1: T,
    rtol: T,
    block: usize,
    max_evals: usize,
) -> Result<([T; N], usize)> {
    let span = x1 - x0;
    let mut x = x0;
    let mut y = y0;
    let mut h = span * T::lit(0.01);
    let mut k0 = f(x, &y);
    let mut evals = 1usize;
    let c = C.map(T::lit);
    let e = E.map(T::lit);
    let a: Vec<Vec<T>> = A
        .iter()
        .map(|row| row.iter().map(|v| T::lit(*v)).collect())
        .collect();
    let mut last_err = T::zero();

    while (x1 - x) * span.signum() > T::zero() {
        if evals + 6 > max_evals {
            return Err(Error::Integrator {
                reason: format!("step budget of {max_evals} evaluations exhausted at x = {x}"),
                achieved: last_err.as_f64(),
            });
        }
        if (x + h - x1) * span.signum() > T::zero() {
            h = x1 - x;
        }
        let mut k = [k0; 7];
        for stage in 0..6 {
            let mut yi = y;
            for (j, coef) in a[stage].iter().enumerate() {
                if *coef != T::zero() {
                    for n in 0..N {
                        yi[n] = yi[n] + h * *coef * k[j][n];
                    }
                }
            }
            k[stage + 1] = f(x + c[stage] * h, &yi);
            if stage == 5 {
                // the last stage is evaluated at the 5th-order solution
                let mut err = T::zero();
                for b in (0..N).step_by(block) {
                    let end = (b + block).min(N);
                    let scale = (b..end).fold(T::zero(), |m, n| m.max(y[n].abs()).max(yi[n].abs()));
                    let scale = rtol * scale.max(T::min_positive_value());
                    for n in b..end {
                        let en = (0..7).fold(T::zero(), |acc, j| acc + e[j] * k[j][n]) * h;
                        err = err.max(en.abs() / scale);
                    }
                }
                evals += 6;
                last_err = err;
                if err <= T::one() || h.abs() <= T::epsilon() * x.abs().max(T::one()) * T::lit(16.0)
                {
                    x = x + h;
                    y = yi;
                    k0 = k[6];
                }
                let factor = if err == T::zero() {
                    T::lit(5.0)
                } else {
                    (T::lit(0.9) * err.powf(T::lit(-0.2)))
                        .max(T::lit(0.2))
                        .min(T::lit(5.0))
                };
                h = h * factor;
            }
        }
        if !y.iter().all(|v| v.is_finite()) {
            return Err(Error::Integrator {
                reason: format!("solution overflowed near x = {x}"),
                achieved: f64::INFINITY,
            });
        }
    }
    Ok((y, evals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn harmonic_oscillator() {
        let w: f64 = 3.0;
        let (y, evals) = integrate(
            |_, y: &[f64; 2]| [y[1], -w * w * y[0]],
            [1.0, 0.0],
            0.0,
            2.0,
            1e-11,
            2,
            1_000_000,
        )
        .unwrap();
        assert_relative_eq!(y[0], (2.0 * w).cos(), max_relative = 1e-9);
        assert_relative_eq!(y[1], -w * (2.0 * w).sin(), max_relative = 1e-9);
        assert!(evals < 20_000);
    }

    #[test]
    fn exponential_growth_is_relative() {
        let (y, _) = integrate(
            |_, y: &[f64; 1]| [5.0 * y[0]],
            [1.0],
            0.0,
            4.0,
            1e-10,
            1,
            1_000_000,
        )
        .unwrap();
        assert_relative_eq!(y[0], 20.0f64.exp(), max_relative = 1e-8);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = integrate(
            |_, y: &[f64; 2]| [y[1], -1e6 * y[0]],
            [1.0, 0.0],
            0.0,
            10.0,
            1e-12,
            2,
            500,
        );
        assert!(matches!(r, Err(Error::Integrator { .. })));
    }
}
