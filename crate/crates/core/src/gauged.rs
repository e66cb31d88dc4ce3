//! Functions of the form `e^{g cos 2x} num(x) / den(x)`.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::trig::TrigPoly;

#[derive(Debug, Clone, PartialEq)]
pub struct GaugedRational<T> {
    pub num: TrigPoly<T>,
    pub den: TrigPoly<T>,
    pub gauge: T,
}

impl<T: Real> GaugedRational<T> {
    /// `e^{gauge cos 2x} num(x)` with unit denominator.
    pub fn gauged(num: TrigPoly<T>, gauge: T) -> Self {
        GaugedRational {
            num,
            den: TrigPoly::constant(T::one()),
            gauge,
        }
    }

    pub fn new(num: TrigPoly<T>, den: TrigPoly<T>, gauge: T) -> Self {
        GaugedRational { num, den, gauge }
    }

    pub fn has_unit_denominator(&self) -> bool {
        self.den.degree() == 0 && self.den.cos_coeff(0) == T::one()
    }

    /// Fails when the denominator vanishes at `x` (relative to its size).
    pub fn evaluate(&self, x: T) -> Result<T> {
        let den = self.den.evaluate(x);
        if den.abs() <= self.den.l1_norm() * T::lit(1e-14) {
            return Err(Error::SingularEvaluation { x: x.as_f64() });
        }
        let factor = (self.gauge * (T::two() * x).cos()).exp();
        Ok(factor * self.num.evaluate(x) / den)
    }

    /// `d/dx` as another gauged rational with denominator `den^2` (or `1`).
    pub fn derivative(&self) -> Self {
        let gauge_term = &TrigPoly::sin_term(2, -T::two() * self.gauge) * &self.num;
        let top = &gauge_term + &self.num.derivative();
        if self.has_unit_denominator() {
            return GaugedRational::gauged(top, self.gauge);
        }
        let num = &(&top * &self.den) - &(&self.num * &self.den.derivative());
        GaugedRational::new(num, &self.den * &self.den, self.gauge)
    }

    /// Wronskian of functions sharing one gauge and a unit denominator:
    /// `W(e^{g c} f_1, ..., e^{g c} f_k) = e^{k g c} W(f_1, ..., f_k)`.
    pub fn wronskian(fs: &[GaugedRational<T>]) -> Result<GaugedRational<T>> {
        let first = fs
            .first()
            .ok_or_else(|| Error::InvalidParameter("wronskian of an empty list".into()))?;
        if fs.len() == 1 {
            return Ok(first.clone());
        }
        for f in fs {
            if f.gauge != first.gauge {
                return Err(Error::GaugeMismatch(format!(
                    "gauges {} and {} differ",
                    first.gauge, f.gauge
                )));
            }
            if !f.has_unit_denominator() {
                return Err(Error::GaugeMismatch(
                    "inputs must have a unit denominator".into(),
                ));
            }
        }
        let nums: Vec<TrigPoly<T>> = fs.iter().map(|f| f.num.clone()).collect();
        Ok(GaugedRational::gauged(
            TrigPoly::wronskian(&nums)?,
            first.gauge * T::from_count(fs.len()),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type P = TrigPoly<f64>;

    #[test]
    fn zero_gauge_reduces_to_plain_wronskian() {
        let f = GaugedRational::gauged(P::sin_term(2, 1.0), 0.0);
        let g = GaugedRational::gauged(P::cos_term(2, 1.0), 0.0);
        let w = GaugedRational::wronskian(&[f, g]).unwrap();
        assert_eq!(w.gauge, 0.0);
        assert!(w.num.max_coeff_diff(&P::constant(-2.0)) < 1e-14);
    }

    #[test]
    fn gauge_is_multiplied_by_count() {
        let alpha = 0.7;
        let f = GaugedRational::gauged(P::sin_term(1, 1.0), alpha);
        let g = GaugedRational::gauged(P::cos_term(1, 1.0), alpha);
        let w = GaugedRational::wronskian(&[f.clone(), g.clone()]).unwrap();
        assert_eq!(w.gauge, 2.0 * alpha);
        // pointwise: W(f, g) by finite differences
        let x = 0.4;
        let h = 1e-5;
        let fv = |q: &GaugedRational<f64>, x: f64| q.evaluate(x).unwrap();
        let df = (fv(&f, x + h) - fv(&f, x - h)) / (2.0 * h);
        let dg = (fv(&g, x + h) - fv(&g, x - h)) / (2.0 * h);
        let expected = fv(&f, x) * dg - df * fv(&g, x);
        assert_relative_eq!(w.evaluate(x).unwrap(), expected, max_relative = 1e-8);
    }

    #[test]
    fn single_input_unchanged() {
        let f = GaugedRational::gauged(&P::constant(1.0) + &P::cos_term(2, 0.3), 1.5);
        assert_eq!(
            GaugedRational::wronskian(std::slice::from_ref(&f)).unwrap(),
            f
        );
    }

    #[test]
    fn mixed_gauges_rejected() {
        let f = GaugedRational::gauged(P::sin_term(1, 1.0), 0.5);
        let g = GaugedRational::gauged(P::cos_term(1, 1.0), 0.25);
        assert!(matches!(
            GaugedRational::wronskian(&[f.clone(), g]),
            Err(Error::GaugeMismatch(_))
        ));
        let h = GaugedRational::new(P::cos_term(1, 1.0), P::cos_term(2, 1.0), 0.5);
        assert!(matches!(
            GaugedRational::wronskian(&[f, h]),
            Err(Error::GaugeMismatch(_))
        ));
    }

    #[test]
    fn evaluation_at_denominator_zero_fails() {
        let q = GaugedRational::new(P::constant(1.0), P::cos_term(2, 1.0), 0.0);
        assert!(matches!(
            q.evaluate(std::f64::consts::FRAC_PI_4),
            Err(Error::SingularEvaluation { .. })
        ));
        assert_relative_eq!(q.evaluate(0.0).unwrap(), 1.0);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let f = GaugedRational::new(
            &P::cos_term(1, 1.0) + &P::sin_term(3, 0.4),
            &P::constant(2.0) + &P::cos_term(2, 0.5),
            0.8,
        );
        let df = f.derivative();
        let h = 1e-5;
        for x in [0.1, 0.9, 2.3] {
            let fd = (f.evaluate(x + h).unwrap() - f.evaluate(x - h).unwrap()) / (2.0 * h);
            assert_relative_eq!(df.evaluate(x).unwrap(), fd, max_relative = 1e-8);
        }
        let g = GaugedRational::gauged(P::cos_term(2, 1.0), -0.5);
        let dg = g.derivative();
        assert!(dg.has_unit_denominator());
        let x: f64 = 0.7;
        let exact = (-0.5 * (2.0 * x).cos()).exp()
            * ((2.0 * x).sin() * (2.0 * x).cos() - 2.0 * (2.0 * x).sin());
        assert_relative_eq!(dg.evaluate(x).unwrap(), exact, max_relative = 1e-13);
    }
}
