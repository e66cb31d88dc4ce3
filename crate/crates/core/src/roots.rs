//! Simultaneous complex polynomial root finding (Aberth–Ehrlich iteration).

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::Real;

const MAX_SWEEPS: usize = 2000;

/// Horner evaluation of `p(z)/p'(z)`, switching to the reversed polynomial
/// outside the unit disc so that large `|z|` cannot overflow.
fn newton_ratio<T: Real>(coeffs: &[Complex<T>], z: Complex<T>) -> (Complex<T>, Complex<T>) {
    let n = coeffs.len() - 1;
    if z.norm() <= T::one() {
        let mut p = coeffs[n];
        let mut dp = Complex::zero();
        for c in coeffs[..n].iter().rev() {
            dp = dp * z + p;
            p = p * z + *c;
        }
        (p / dp, p)
    } else {
        let y = Complex::<T>::one() / z;
        let mut q = coeffs[0];
        let mut dq = Complex::zero();
        for c in coeffs[1..].iter() {
            dq = dq * y + q;
            q = q * y + *c;
        }
        let nn = Complex::new(T::from_count(n), T::zero());
        let denom = nn * q - y * dq;
        (z * q / denom, q)
    }
}

/// All roots of `sum coeffs[i] z^i`. The leading coefficient must be
/// nonzero; zero constant terms contribute roots at the origin.
pub fn polynomial_roots<T: Real>(coeffs: &[Complex<T>]) -> Vec<Complex<T>> {
    let mut hi = coeffs.len();
    while hi > 0 && coeffs[hi - 1].is_zero() {
        hi -= 1;
    }
    let mut lo = 0;
    while lo < hi && coeffs[lo].is_zero() {
        lo += 1;
    }
    let mut roots = vec![Complex::zero(); lo];
    if hi <= lo + 1 {
        return roots;
    }
    let poly = &coeffs[lo..hi];
    let n = poly.len() - 1;
    if n == 1 {
        roots.push(-poly[0] / poly[1]);
        return roots;
    }

    let radius = (poly[0].norm() / poly[n].norm()).powf(T::one() / T::from_count(n));
    let tau = T::two() * T::PI();
    let mut z: Vec<Complex<T>> = (0..n)
        .map(|k| {
            let theta = tau * T::from_count(k) / T::from_count(n) + T::lit(0.4);
            Complex::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];
    let eps = T::epsilon() * T::lit(4.0);

    for _ in 0..MAX_SWEEPS {
        let mut all_done = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (ratio, _) = newton_ratio(poly, z[k]);
            let mut repulsion = Complex::zero();
            for j in 0..n {
                if j != k {
                    repulsion = repulsion + Complex::<T>::one() / (z[k] - z[j]);
                }
            }
            let step = ratio / (Complex::<T>::one() - ratio * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[k] = z[k] - step;
            }
            if step.norm() <= eps * z[k].norm().max(T::min_positive_value()) {
                done[k] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            break;
        }
    }

    for root in z.iter_mut() {
        for _ in 0..3 {
            let (ratio, _) = newton_ratio(poly, *root);
            if !(ratio.re.is_finite() && ratio.im.is_finite())
                || ratio.norm() > root.norm() * T::lit(1e-6)
            {
                break;
            }
            *root = *root - ratio;
        }
    }
    roots.extend(z);
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn expand(roots: &[C]) -> Vec<C> {
        let mut c = vec![C::new(1.0, 0.0)];
        for r in roots {
            let mut next = vec![C::zero(); c.len() + 1];
            for (i, ci) in c.iter().enumerate() {
                next[i + 1] += *ci;
                next[i] -= *ci * r;
            }
            c = next;
        }
        c
    }

    fn matched(found: &[C], expected: &[C], tol: f64) -> bool {
        let mut used = vec![false; found.len()];
        expected.iter().all(|e| {
            found.iter().enumerate().any(|(i, f)| {
                if !used[i] && (f - e).norm() < tol {
                    used[i] = true;
                    true
                } else {
                    false
                }
            })
        })
    }

    #[test]
    fn recovers_mixed_roots() {
        let expected = [
            C::new(1.0, 0.0),
            C::new(-2.0, 0.0),
            C::new(0.0, 3.0),
            C::new(0.5, -0.5),
        ];
        let found = polynomial_roots(&expand(&expected));
        assert_eq!(found.len(), 4);
        assert!(matched(&found, &expected, 1e-12));
    }

    #[test]
    fn roots_of_unity() {
        let n = 24;
        let mut c = vec![C::zero(); n + 1];
        c[0] = C::new(-1.0, 0.0);
        c[n] = C::new(1.0, 0.0);
        let found = polynomial_roots(&c);
        assert_eq!(found.len(), n);
        for z in found {
            assert!((z.norm() - 1.0).abs() < 1e-13);
            assert!((z.powu(n as u32) - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_roots_are_split_off() {
        // z^2 (z - 2)
        let c = [C::zero(), C::zero(), C::new(-2.0, 0.0), C::new(1.0, 0.0)];
        let found = polynomial_roots(&c);
        assert_eq!(found.iter().filter(|z| z.norm() == 0.0).count(), 2);
        assert!(found.iter().any(|z| (z - 2.0).norm() < 1e-14));
    }
}
