//! Finite real trigonometric polynomials
//! `p(x) = a_0 + sum_{n>=1} (a_n cos nx + b_n sin nx)`.
//!
//! Coefficients are pruned after every ring operation: anything at or below
//! `1e-12` times the largest coefficient is set to zero and the degree is
//! trimmed, so the stored degree is always tight.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::roots::polynomial_roots;
use crate::scalar::Real;

/// Relative threshold below which coefficients are discarded.
pub const PRUNE_REL: f64 = 1e-12;
/// Roots of `z^N p` farther than this from the unit circle are not real zeros.
pub const UNIT_CIRCLE_TOL: f64 = 1e-8;
/// Zeros closer than this (in x) are merged.
pub const ZERO_DEDUP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly<T> {
    cos: Vec<T>,
    sin: Vec<T>,
}

/// A real zero of a trigonometric polynomial in `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealZero<T> {
    pub x: T,
    /// Set when several roots merged here or the derivative vanishes too.
    pub multiple: bool,
}

impl<T: Real> TrigPoly<T> {
    /// Builds from cosine and sine coefficient lists indexed by frequency.
    /// `sin[0]` is ignored.
    pub fn new(mut cos: Vec<T>, mut sin: Vec<T>) -> Self {
        let len = cos.len().max(sin.len()).max(1);
        cos.resize(len, T::zero());
        sin.resize(len, T::zero());
        sin[0] = T::zero();
        let mut p = TrigPoly { cos, sin };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        TrigPoly {
            cos: vec![T::zero()],
            sin: vec![T::zero()],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c], vec![])
    }

    /// `a cos(nx)`
    pub fn cos_term(n: usize, a: T) -> Self {
        let mut cos = vec![T::zero(); n + 1];
        cos[n] = a;
        Self::new(cos, vec![])
    }

    /// `b sin(nx)`; zero when `n == 0`.
    pub fn sin_term(n: usize, b: T) -> Self {
        let mut sin = vec![T::zero(); n + 1];
        sin[n] = b;
        Self::new(vec![], sin)
    }

    fn normalize(&mut self) {
        let max = self.max_abs_coeff();
        if max == T::zero() || !max.is_finite() {
            if max == T::zero() {
                self.cos.truncate(1);
                self.sin.truncate(1);
            }
            return;
        }
        let cut = max * T::lit(PRUNE_REL);
        for c in self.cos.iter_mut().chain(self.sin.iter_mut()) {
            if c.abs() <= cut {
                *c = T::zero();
            }
        }
        let mut len = self.cos.len();
        while len > 1 && self.cos[len - 1] == T::zero() && self.sin[len - 1] == T::zero() {
            len -= 1;
        }
        self.cos.truncate(len);
        self.sin.truncate(len);
    }

    pub fn degree(&self) -> usize {
        self.cos.len() - 1
    }

    pub fn cos_coeff(&self, n: usize) -> T {
        self.cos.get(n).copied().unwrap_or_else(T::zero)
    }

    pub fn sin_coeff(&self, n: usize) -> T {
        self.sin.get(n).copied().unwrap_or_else(T::zero)
    }

    pub fn cos_coeffs(&self) -> &[T] {
        &self.cos
    }

    pub fn sin_coeffs(&self) -> &[T] {
        &self.sin
    }

    pub fn is_zero(&self) -> bool {
        self.cos.len() == 1 && self.cos[0] == T::zero()
    }

    pub fn max_abs_coeff(&self) -> T {
        self.cos
            .iter()
            .chain(self.sin.iter())
            .fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// Sum of absolute coefficients, an upper bound for `|p(x)|`.
    pub fn l1_norm(&self) -> T {
        self.cos
            .iter()
            .chain(self.sin.iter())
            .map(|c| c.abs())
            .sum()
    }

    fn nonzero_frequencies(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cos.len()).filter(|&n| self.cos[n] != T::zero() || self.sin[n] != T::zero())
    }

    /// All nonzero frequencies are even.
    pub fn is_pi_periodic(&self) -> bool {
        self.nonzero_frequencies().all(|n| n % 2 == 0)
    }

    /// All nonzero frequencies are odd.
    pub fn is_pi_antiperiodic(&self) -> bool {
        self.nonzero_frequencies().all(|n| n % 2 == 1)
    }

    /// Even about `x = 0` (cosine terms only).
    pub fn is_even(&self) -> bool {
        self.sin.iter().all(|b| *b == T::zero())
    }

    /// Odd about `x = 0` (sine terms only).
    pub fn is_odd(&self) -> bool {
        self.cos.iter().all(|a| *a == T::zero())
    }

    pub fn scale(&self, c: T) -> Self {
        Self::new(
            self.cos.iter().map(|a| *a * c).collect(),
            self.sin.iter().map(|b| *b * c).collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        let n = self.cos.len();
        let mut cos = vec![T::zero(); n];
        let mut sin = vec![T::zero(); n];
        for k in 1..n {
            let kf = T::from_count(k);
            cos[k] = kf * self.sin[k];
            sin[k] = -kf * self.cos[k];
        }
        Self::new(cos, sin)
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    /// Evaluates the series with an incremental rotation that is re-seeded
    /// from `sin_cos` every 32 terms.
    pub fn evaluate(&self, x: T) -> T {
        let (s1, c1) = x.sin_cos();
        let (mut sn, mut cn) = (T::zero(), T::one());
        let mut acc = self.cos[0];
        for n in 1..self.cos.len() {
            if n % 32 == 0 {
                let (s, c) = (T::from_count(n) * x).sin_cos();
                sn = s;
                cn = c;
            } else {
                let c = cn * c1 - sn * s1;
                sn = sn * c1 + cn * s1;
                cn = c;
            }
            acc = acc + self.cos[n] * cn + self.sin[n] * sn;
        }
        acc
    }

    /// Largest absolute coefficient difference.
    pub fn max_coeff_diff(&self, other: &Self) -> T {
        let n = self.cos.len().max(other.cos.len());
        (0..n)
            .map(|k| {
                (self.cos_coeff(k) - other.cos_coeff(k))
                    .abs()
                    .max((self.sin_coeff(k) - other.sin_coeff(k)).abs())
            })
            .fold(T::zero(), T::max)
    }

    /// Wronskian `det[f_j^{(r)}]` with rows ordered by ascending derivative
    /// order, expanded by Laplace minors over column subsets.
    pub fn wronskian(fs: &[TrigPoly<T>]) -> Result<TrigPoly<T>> {
        let k = fs.len();
        if k == 0 {
            return Err(Error::InvalidParameter("wronskian of an empty list".into()));
        }
        if k > 24 {
            return Err(Error::InvalidParameter(format!(
                "wronskian of {k} functions is too large"
            )));
        }
        if k == 1 {
            return Ok(fs[0].clone());
        }
        let mut rows: Vec<Vec<TrigPoly<T>>> = vec![fs.to_vec()];
        for r in 1..k {
            let next = rows[r - 1].iter().map(|f| f.derivative()).collect();
            rows.push(next);
        }

        let full = 1usize << k;
        let mut layer: Vec<Option<TrigPoly<T>>> = vec![None; full];
        for (j, f) in fs.iter().enumerate() {
            layer[1 << j] = Some(f.clone());
        }
        for r in 1..k {
            let mut next: Vec<Option<TrigPoly<T>>> = vec![None; full];
            for mask in 0..full {
                if mask.count_ones() as usize != r + 1 {
                    continue;
                }
                let mut acc = TrigPoly::zero();
                for j in 0..k {
                    if mask & (1 << j) == 0 {
                        continue;
                    }
                    let minor = layer[mask & !(1 << j)]
                        .as_ref()
                        .expect("minor computed in previous layer");
                    let pos = (mask & ((1 << j) - 1)).count_ones() as usize;
                    let term = &rows[r][j] * minor;
                    acc = if (r + pos).is_multiple_of(2) {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                next[mask] = Some(acc);
            }
            layer = next;
        }
        Ok(layer[full - 1].take().expect("full minor"))
    }

    /// Coefficients of `z^N p` as a polynomial in `z = e^{ix}`, lowest power first.
    fn unit_circle_polynomial(&self) -> Vec<Complex<T>> {
        let n = self.degree();
        let half = T::half();
        let mut c = vec![Complex::new(T::zero(), T::zero()); 2 * n + 1];
        c[n] = Complex::new(self.cos[0], T::zero());
        for k in 1..=n {
            c[n + k] = Complex::new(self.cos[k] * half, -self.sin[k] * half);
            c[n - k] = Complex::new(self.cos[k] * half, self.sin[k] * half);
        }
        c
    }

    /// Real zeros in `[0, 2pi)`, from the roots of `z^N p(z)` lying on the
    /// unit circle, Newton-polished in x and deduplicated.
    pub fn real_zeros(&self) -> Result<Vec<RealZero<T>>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == 0 {
            return Ok(Vec::new());
        }
        let tau = T::two() * T::PI();
        let circle_tol = T::lit(UNIT_CIRCLE_TOL).max(T::epsilon() * T::lit(1e4));
        let dedup_tol = T::lit(ZERO_DEDUP_TOL).max(T::epsilon() * T::lit(1e3));
        let dp = self.derivative();
        let scale = self.l1_norm();

        let mut xs: Vec<T> = polynomial_roots(&self.unit_circle_polynomial())
            .into_iter()
            .filter(|z| (z.norm() - T::one()).abs() <= circle_tol)
            .map(|z| {
                let mut x = z.arg();
                for _ in 0..8 {
                    let d = dp.evaluate(x);
                    if d == T::zero() {
                        break;
                    }
                    let step = self.evaluate(x) / d;
                    let candidate = x - step;
                    if self.evaluate(candidate).abs() > self.evaluate(x).abs()
                        || step.abs() > T::lit(1e-3)
                    {
                        break;
                    }
                    x = candidate;
                    if step.abs() <= T::epsilon() {
                        break;
                    }
                }
                let x = x % tau;
                if x < T::zero() {
                    x + tau
                } else {
                    x
                }
            })
            .collect();
        xs.sort_by(|a, b| a.partial_cmp(b).expect("finite zero"));

        let mut zeros: Vec<(T, usize)> = Vec::new();
        for x in xs {
            match zeros.last_mut() {
                Some((last, count)) if (x - *last).abs() <= dedup_tol => *count += 1,
                _ => zeros.push((x, 1)),
            }
        }
        if zeros.len() > 1 {
            let (first, _) = zeros[0];
            let (last, count) = zeros[zeros.len() - 1];
            if first + tau - last <= dedup_tol {
                zeros.pop();
                zeros[0].1 += count;
            }
        }
        let dscale = dp.l1_norm().max(scale);
        Ok(zeros
            .into_iter()
            .map(|(x, count)| RealZero {
                x,
                multiple: count > 1 || dp.evaluate(x).abs() <= T::lit(1e-6) * dscale,
            })
            .collect())
    }

    /// Global minimum of `|p|` over one period: dense grid followed by
    /// golden-section refinement of the best local minima.
    pub fn min_abs_on_period(&self) -> (T, T) {
        let tau = T::two() * T::PI();
        let grid = (32 * self.degree()).max(4096);
        let h = tau / T::from_count(grid);
        let values: Vec<T> = (0..grid)
            .map(|i| self.evaluate(h * T::from_count(i)).abs())
            .collect();

        let mut candidates: Vec<usize> = (0..grid)
            .filter(|&i| {
                let prev = values[(i + grid - 1) % grid];
                let next = values[(i + 1) % grid];
                values[i] <= prev && values[i] <= next
            })
            .collect();
        candidates.sort_by(|&a, &b| {
            values[a]
                .partial_cmp(&values[b])
                .expect("finite")
                .then(a.cmp(&b))
        });
        candidates.truncate(6);

        let target = T::lit(1e-12);
        let ratio = T::lit(0.618_033_988_749_894_8);
        let tie = self.l1_norm() * T::lit(1e-14);
        let mut best: Option<(T, T)> = None;
        for i in candidates {
            let center = h * T::from_count(i);
            let (mut lo, mut hi) = (center - h, center + h);
            let mut x1 = hi - ratio * (hi - lo);
            let mut x2 = lo + ratio * (hi - lo);
            let mut f1 = self.evaluate(x1).abs();
            let mut f2 = self.evaluate(x2).abs();
            while hi - lo > target {
                if f1 <= f2 {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - ratio * (hi - lo);
                    f1 = self.evaluate(x1).abs();
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + ratio * (hi - lo);
                    f2 = self.evaluate(x2).abs();
                }
                if x1 >= x2 {
                    break;
                }
            }
            let mut x = (lo + hi) * T::half();
            let mut v = self.evaluate(x).abs();
            if values[i] < v {
                x = center;
                v = values[i];
            }
            let x = ((x % tau) + tau) % tau;
            best = match best {
                None => Some((v, x)),
                Some((bv, bx)) => {
                    if v < bv - tie || ((v - bv).abs() <= tie && x < bx) {
                        Some((v, x))
                    } else {
                        Some((bv, bx))
                    }
                }
            };
        }
        best.unwrap_or((self.cos[0].abs(), T::zero()))
    }
}

impl<T: Real> fmt::Display for TrigPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for n in 0..self.cos.len() {
            for (c, name) in [(self.cos[n], "cos"), (self.sin[n], "sin")] {
                if c == T::zero() || (n == 0 && name == "sin") {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if n == 0 {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "{c} {name} {n}x")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a, T: Real> Add<&'a TrigPoly<T>> for &'a TrigPoly<T> {
    type Output = TrigPoly<T>;

    fn add(self, rhs: &TrigPoly<T>) -> TrigPoly<T> {
        let n = self.cos.len().max(rhs.cos.len());
        TrigPoly::new(
            (0..n)
                .map(|k| self.cos_coeff(k) + rhs.cos_coeff(k))
                .collect(),
            (0..n)
                .map(|k| self.sin_coeff(k) + rhs.sin_coeff(k))
                .collect(),
        )
    }
}

impl<'a, T: Real> Sub<&'a TrigPoly<T>> for &'a TrigPoly<T> {
    type Output = TrigPoly<T>;

    fn sub(self, rhs: &TrigPoly<T>) -> TrigPoly<T> {
        let n = self.cos.len().max(rhs.cos.len());
        TrigPoly::new(
            (0..n)
                .map(|k| self.cos_coeff(k) - rhs.cos_coeff(k))
                .collect(),
            (0..n)
                .map(|k| self.sin_coeff(k) - rhs.sin_coeff(k))
                .collect(),
        )
    }
}

impl<T: Real> Neg for &TrigPoly<T> {
    type Output = TrigPoly<T>;

    fn neg(self) -> TrigPoly<T> {
        TrigPoly {
            cos: self.cos.iter().map(|c| -*c).collect(),
            sin: self.sin.iter().map(|c| -*c).collect(),
        }
    }
}

impl<'a, T: Real> Mul<&'a TrigPoly<T>> for &'a TrigPoly<T> {
    type Output = TrigPoly<T>;

    /// Product-to-sum expansion.
    fn mul(self, rhs: &TrigPoly<T>) -> TrigPoly<T> {
        let n = self.degree() + rhs.degree() + 1;
        let mut cos = vec![T::zero(); n];
        let mut sin = vec![T::zero(); n];
        let half = T::half();
        for (m, (&a1, &b1)) in self.cos.iter().zip(&self.sin).enumerate() {
            for (k, (&a2, &b2)) in rhs.cos.iter().zip(&rhs.sin).enumerate() {
                let sum = m + k;
                let diff = m.abs_diff(k);
                // sign of sin((m - k) x) relative to sin(|m - k| x)
                let sgn = if m >= k { T::one() } else { -T::one() };
                if a1 != T::zero() && a2 != T::zero() {
                    let c = half * a1 * a2;
                    cos[diff] = cos[diff] + c;
                    cos[sum] = cos[sum] + c;
                }
                if b1 != T::zero() && b2 != T::zero() {
                    let c = half * b1 * b2;
                    cos[diff] = cos[diff] + c;
                    cos[sum] = cos[sum] - c;
                }
                if b1 != T::zero() && a2 != T::zero() {
                    let c = half * b1 * a2;
                    sin[sum] = sin[sum] + c;
                    sin[diff] = sin[diff] + sgn * c;
                }
                if a1 != T::zero() && b2 != T::zero() {
                    let c = half * a1 * b2;
                    sin[sum] = sin[sum] + c;
                    sin[diff] = sin[diff] - sgn * c;
                }
            }
        }
        TrigPoly::new(cos, sin)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Real> $tr<TrigPoly<T>> for TrigPoly<T> {
            type Output = TrigPoly<T>;

            fn $method(self, rhs: TrigPoly<T>) -> TrigPoly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Real> Neg for TrigPoly<T> {
    type Output = TrigPoly<T>;

    fn neg(self) -> TrigPoly<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    type P = TrigPoly<f64>;

    fn close(p: &P, q: &P, tol: f64) -> bool {
        p.max_coeff_diff(q) <= tol
    }

    #[test]
    fn additive_inverse_is_zero() {
        let c2 = P::cos_term(2, 1.0);
        let z = &c2 + &P::cos_term(2, -1.0);
        assert!(z.is_zero());
        assert_eq!(z.degree(), 0);
    }

    #[test]
    fn small_alpha_ground_state() {
        let alpha = 0.01;
        let p = &P::constant(1.0) + &P::cos_term(2, 2.0 * alpha);
        assert_eq!(p.cos_coeff(0), 1.0);
        assert_eq!(p.cos_coeff(2), 0.02);
        assert!(p.is_pi_periodic() && p.is_even());
    }

    #[test]
    fn disjoint_sine_support() {
        let p = &P::sin_term(1, 1.0) + &P::sin_term(3, 1.0);
        assert_eq!(p.sin_coeff(1), 1.0);
        assert_eq!(p.sin_coeff(3), 1.0);
        assert_eq!(p.degree(), 3);
        assert!(p.is_pi_antiperiodic() && p.is_odd());
    }

    #[test]
    fn double_angle_products() {
        let c1 = P::cos_term(1, 1.0);
        let expected = P::new(vec![0.5, 0.0, 0.5], vec![]);
        assert!(close(&(&c1 * &c1), &expected, 1e-15));

        let prod = &P::sin_term(2, 1.0) * &P::cos_term(2, 1.0);
        assert!(close(&prod, &P::sin_term(4, 0.5), 1e-15));
    }

    #[test]
    fn sine_product_table_and_pointwise_check() {
        let prod = &P::sin_term(1, 1.0) * &P::sin_term(3, 1.0);
        let expected = &P::cos_term(2, 0.5) - &P::cos_term(4, 0.5);
        assert!(close(&prod, &expected, 1e-15));
        for i in 0..100 {
            let x = 2.0 * PI * i as f64 / 100.0;
            assert_abs_diff_eq!(prod.evaluate(x), x.sin() * (3.0 * x).sin(), epsilon = 1e-14);
        }
    }

    #[test]
    fn derivatives() {
        assert!(close(
            &P::cos_term(2, 1.0).derivative(),
            &P::sin_term(2, -2.0),
            0.0
        ));
        assert!(P::constant(3.5).derivative().is_zero());
        let a = 0.7;
        let p = &P::sin_term(1, 1.0) + &P::sin_term(3, a);
        let expected = &P::cos_term(1, 1.0) + &P::cos_term(3, 3.0 * a);
        assert!(close(&p.derivative(), &expected, 1e-15));
    }

    #[test]
    fn evaluation() {
        assert_abs_diff_eq!(P::cos_term(2, 1.0).evaluate(0.0), 1.0);
        assert_abs_diff_eq!(P::sin_term(2, 1.0).evaluate(PI / 4.0), 1.0, epsilon = 1e-15);
        let c = 0.3;
        let p = &P::constant(1.0) + &P::cos_term(2, c);
        assert_abs_diff_eq!(p.evaluate(PI / 2.0), 1.0 - c, epsilon = 1e-15);
    }

    #[test]
    fn evaluation_of_high_degree_matches_direct_sum() {
        let cos: Vec<f64> = (0..200).map(|n| 1.0 / (1.0 + n as f64)).collect();
        let sin: Vec<f64> = (0..200)
            .map(|n| (n as f64 * 0.37).sin() / (1.0 + n as f64))
            .collect();
        let p = P::new(cos.clone(), sin.clone());
        for &x in &[0.1, 1.3, 2.9, 5.5] {
            let direct: f64 = (0..200)
                .map(|n| {
                    cos[n] * (n as f64 * x).cos()
                        + if n > 0 {
                            sin[n] * (n as f64 * x).sin()
                        } else {
                            0.0
                        }
                })
                .sum();
            assert_abs_diff_eq!(p.evaluate(x), direct, epsilon = 1e-12);
        }
    }

    #[test]
    fn pruning_keeps_degree_tight() {
        let p = P::new(vec![1.0, 0.0, 1e-14, 0.0], vec![0.0, 0.0, 0.0, 1e-13]);
        assert_eq!(p.degree(), 0);
        let q = P::new(vec![1.0, 0.0, 1e-11], vec![]);
        assert_eq!(q.degree(), 2);
    }

    #[test]
    fn wronskian_of_pair_is_constant() {
        for k in 1..5 {
            let w = P::wronskian(&[P::sin_term(2 * k, 1.0), P::cos_term(2 * k, 1.0)]).unwrap();
            assert!(
                close(&w, &P::constant(-2.0 * k as f64), 1e-13),
                "k={k}: {w:?}"
            );
        }
    }

    #[test]
    fn wronskian_of_single_function() {
        let one = P::constant(1.0);
        assert_eq!(P::wronskian(std::slice::from_ref(&one)).unwrap(), one);
        assert!(P::wronskian(&[]).is_err());
    }

    #[test]
    fn wronskian_of_two_term_antiperiodic_pair() {
        let (a, b) = (0.31, -0.17);
        let f = &P::sin_term(1, 1.0) + &P::sin_term(3, a);
        let g = &P::cos_term(1, 1.0) + &P::cos_term(3, b);
        let w = P::wronskian(&[f, g]).unwrap();
        let expected = P::new(
            vec![-(1.0 + 3.0 * a * b), 0.0, -2.0 * (a + b), 0.0, b - a],
            vec![],
        );
        assert!(close(&w, &expected, 1e-14), "{w:?}");
    }

    #[test]
    fn wronskian_of_full_trig_basis_is_constant() {
        let basis = vec![
            P::constant(1.0),
            P::sin_term(2, 1.0),
            P::cos_term(2, 1.0),
            P::sin_term(4, 1.0),
            P::cos_term(4, 1.0),
        ];
        let w = P::wronskian(&basis).unwrap();
        assert_eq!(w.degree(), 0);
        assert!(w.cos_coeff(0).abs() > 1.0);
    }

    #[test]
    fn zeros_of_cos_2x() {
        let zeros = P::cos_term(2, 1.0).real_zeros().unwrap();
        let xs: Vec<f64> = zeros.iter().map(|z| z.x).collect();
        assert_eq!(xs.len(), 4);
        for (x, k) in xs.iter().zip([1.0, 3.0, 5.0, 7.0]) {
            assert_abs_diff_eq!(*x, k * PI / 4.0, epsilon = 1e-12);
        }
        assert!(zeros.iter().all(|z| !z.multiple));
    }

    #[test]
    fn zero_free_cosine_shift() {
        let p = &P::constant(1.0) + &P::cos_term(2, 0.9);
        assert!(p.real_zeros().unwrap().is_empty());
        assert_eq!(P::zero().real_zeros(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn tangential_zero_is_flagged_multiple() {
        // 1 - cos x has a double zero at x = 0
        let p = &P::constant(1.0) - &P::cos_term(1, 1.0);
        let zeros = p.real_zeros().unwrap();
        assert_eq!(zeros.len(), 1);
        assert!(zeros[0].multiple);
        assert!(zeros[0].x < 1e-7 || zeros[0].x > 2.0 * PI - 1e-7);
    }

    #[test]
    fn min_abs_examples() {
        let (v, x) = (&P::constant(2.0) + &P::cos_term(2, 1.0)).min_abs_on_period();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(x, PI / 2.0, epsilon = 1e-7);

        let (v, x) = P::cos_term(2, 1.0).min_abs_on_period();
        assert!(v < 1e-11);
        assert_abs_diff_eq!(x, PI / 4.0, epsilon = 1e-11);
    }

    #[test]
    fn works_in_single_precision() {
        let p = &TrigPoly::<f32>::constant(1.0) + &TrigPoly::<f32>::cos_term(2, 0.5);
        let q = &p * &p;
        assert!((q.evaluate(0.3) - p.evaluate(0.3).powi(2)).abs() < 1e-5);
        assert_eq!(
            TrigPoly::<f32>::cos_term(2, 1.0)
                .real_zeros()
                .unwrap()
                .len(),
            4
        );
    }
}
