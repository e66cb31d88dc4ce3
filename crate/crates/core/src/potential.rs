//! Real potentials `u(x)` handed to the Floquet machinery.

use std::fmt;
use std::sync::Arc;

use crate::qes::WHParams;
use crate::scalar::Real;
use crate::trig::TrigPoly;

/// A pi-periodic potential as a shareable closure.
///
/// `even` records whether `u(-x) = u(x)`; even potentials admit the
/// half-period factorisation of the discriminant.
#[derive(Clone)]
pub struct PotentialFn<T> {
    f: Arc<dyn Fn(T) -> T + Send + Sync>,
    even: bool,
    description: String,
}

impl<T: Real> PotentialFn<T> {
    pub fn new(
        description: impl Into<String>,
        even: bool,
        f: impl Fn(T) -> T + Send + Sync + 'static,
    ) -> Self {
        PotentialFn {
            f: Arc::new(f),
            even,
            description: description.into(),
        }
    }

    /// The Whittaker–Hill potential `-(4 alpha s cos 2x + 2 alpha^2 cos 4x)`.
    pub fn whittaker_hill(params: &WHParams<T>) -> Self {
        let p = *params;
        PotentialFn::new(
            format!("whittaker-hill s={} alpha={}", p.s(), p.alpha()),
            true,
            move |x| p.potential(x),
        )
    }

    /// `u = 0`.
    pub fn free() -> Self {
        PotentialFn::new("free", true, |_| T::zero())
    }

    pub fn from_trig(poly: TrigPoly<T>) -> Self {
        let even = poly.is_even();
        PotentialFn::new(format!("{poly}"), even, move |x| poly.evaluate(x))
    }

    pub fn eval(&self, x: T) -> T {
        (self.f)(x)
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

impl<T> fmt::Debug for PotentialFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PotentialFn")
            .field("description", &self.description)
            .field("even", &self.even)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whittaker_hill_values() {
        let p = WHParams::new(0.5, 3).unwrap();
        let u = PotentialFn::whittaker_hill(&p);
        assert!(u.is_even());
        let x: f64 = 0.4;
        let expected = -(6.0 * (2.0 * x).cos() + 0.5 * (4.0 * x).cos());
        assert!((u.eval(x) - expected).abs() < 1e-14);
        let v = PotentialFn::from_trig(p.potential_poly());
        assert!(v.is_even());
        assert!((v.eval(x) - expected).abs() < 1e-14);
        assert_eq!(PotentialFn::<f64>::free().eval(1.0), 0.0);
    }

    #[test]
    fn odd_trig_potential_is_not_even() {
        let v = PotentialFn::from_trig(TrigPoly::sin_term(2, 1.0f64));
        assert!(!v.is_even());
    }
}
