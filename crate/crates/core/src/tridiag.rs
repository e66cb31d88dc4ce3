//! Tri-diagonal matrices of Jacobi type with a spectral parameter on the
//! diagonal, `K(nu) = nu I - D + (sub, sup)`, and their Sturm sequences.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Bisection stops once the bracket is narrower than this.
pub const BISECTION_WIDTH: f64 = 1e-12;
/// Relative residual above which a candidate is rejected as an eigenvalue.
pub const EIGENVECTOR_RESIDUAL_TOL: f64 = 1e-6;

/// `n x n` tri-diagonal matrix whose `k`-th diagonal entry is `nu - offsets[k]`.
/// `sub[k]` sits at `(k + 1, k)` and `sup[k]` at `(k, k + 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriDiag<T> {
    offsets: Vec<T>,
    sub: Vec<T>,
    sup: Vec<T>,
}

/// Leading principal minors `Delta_0 .. Delta_n` of `K(nu)` together with
/// the number of sign agreements between consecutive minors, which equals
/// the number of eigenvalues below `nu`.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmSequence<T> {
    pub minors: Vec<T>,
    pub agreements: usize,
}

impl<T: Real> TriDiag<T> {
    /// Fails unless every off-diagonal entry is strictly positive.
    pub fn new(offsets: Vec<T>, sub: Vec<T>, sup: Vec<T>) -> Result<Self> {
        let n = offsets.len();
        let expected = n.saturating_sub(1);
        if sub.len() != expected || sup.len() != expected {
            return Err(Error::InvalidParameter(format!(
                "band lengths {}/{} do not fit a {n}x{n} matrix",
                sub.len(),
                sup.len()
            )));
        }
        if let Some((k, _)) = sub
            .iter()
            .zip(&sup)
            .enumerate()
            .find(|(_, (a, c))| !(**a > T::zero() && **c > T::zero()))
        {
            return Err(Error::NotJacobi(format!(
                "off-diagonal pair {k} = ({}, {}) is not strictly positive",
                sub[k], sup[k]
            )));
        }
        Ok(TriDiag { offsets, sub, sup })
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn offsets(&self) -> &[T] {
        &self.offsets
    }

    pub fn sub(&self) -> &[T] {
        &self.sub
    }

    pub fn sup(&self) -> &[T] {
        &self.sup
    }

    /// `det K(nu)`.
    pub fn characteristic(&self, nu: T) -> T {
        *self
            .sturm_sequence(nu)
            .minors
            .last()
            .expect("Delta_0 always present")
    }

    /// `Delta_k = (nu - d_k) Delta_{k-1} - c_{k-1} a_{k-1} Delta_{k-2}`.
    pub fn sturm_sequence(&self, nu: T) -> SturmSequence<T> {
        let n = self.len();
        let mut minors = Vec::with_capacity(n + 1);
        minors.push(T::one());
        for k in 0..n {
            let mut next = (nu - self.offsets[k]) * minors[k];
            if k > 0 {
                next = next - self.sub[k - 1] * self.sup[k - 1] * minors[k - 1];
            }
            minors.push(next);
        }
        SturmSequence {
            minors,
            agreements: self.count_below(nu),
        }
    }

    /// Number of eigenvalues strictly below `nu`, via the ratio form of the
    /// minor recurrence (immune to overflow).
    pub fn count_below(&self, nu: T) -> usize {
        let tiny = T::min_positive_value();
        let mut count = 0;
        let mut q = T::one();
        for k in 0..self.len() {
            q = if k == 0 {
                nu - self.offsets[0]
            } else {
                (nu - self.offsets[k]) - self.sub[k - 1] * self.sup[k - 1] / q
            };
            if q == T::zero() {
                q = -tiny;
            }
            if q > T::zero() {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin enclosure of the symmetrised matrix.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.len();
        let e: Vec<T> = self
            .sub
            .iter()
            .zip(&self.sup)
            .map(|(a, c)| (*a * *c).sqrt())
            .collect();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for k in 0..n {
            let mut r = T::zero();
            if k > 0 {
                r = r + e[k - 1];
            }
            if k + 1 < n {
                r = r + e[k];
            }
            lo = lo.min(self.offsets[k] - r);
            hi = hi.max(self.offsets[k] + r);
        }
        (lo, hi)
    }

    /// Eigenvalues bisected down to adjacent floating-point numbers, which
    /// is always well inside [`BISECTION_WIDTH`].
    pub fn eigenvalues(&self) -> Vec<T> {
        self.eigenvalues_with_width(T::zero())
    }

    /// All eigenvalues in ascending order by Sturm-count bisection.
    pub fn eigenvalues_with_width(&self, width: T) -> Vec<T> {
        if self.is_empty() {
            return Vec::new();
        }
        let (g_lo, g_hi) = self.gershgorin();
        let pad = (g_hi - g_lo).abs().max(T::one()) * T::lit(1e-9);
        let (g_lo, g_hi) = (g_lo - pad, g_hi + pad);
        (0..self.len())
            .map(|i| {
                let (mut lo, mut hi) = (g_lo, g_hi);
                while hi - lo > width {
                    let mid = lo + (hi - lo) * T::half();
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    if self.count_below(mid) > i {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                lo + (hi - lo) * T::half()
            })
            .collect()
    }

    fn apply(&self, nu: T, v: &[T]) -> Vec<T> {
        let n = self.len();
        (0..n)
            .map(|k| {
                let mut r = (nu - self.offsets[k]) * v[k];
                if k > 0 {
                    r = r + self.sub[k - 1] * v[k - 1];
                }
                if k + 1 < n {
                    r = r + self.sup[k] * v[k + 1];
                }
                r
            })
            .collect()
    }

    fn norm_bound(&self, nu: T) -> T {
        let m = |xs: &[T]| xs.iter().fold(T::zero(), |m, x| m.max(x.abs()));
        nu.abs().max(m(&self.offsets)) + m(&self.sub) + m(&self.sup)
    }

    /// Solves `K(nu) y = rhs` by Gaussian elimination with partial pivoting;
    /// exactly singular pivots are nudged so that inverse iteration proceeds.
    fn solve_shifted(&self, nu: T, rhs: &[T]) -> Vec<T> {
        let n = self.len();
        let mut a = vec![vec![T::zero(); n]; n];
        for k in 0..n {
            a[k][k] = nu - self.offsets[k];
            if k > 0 {
                a[k][k - 1] = self.sub[k - 1];
            }
            if k + 1 < n {
                a[k][k + 1] = self.sup[k];
            }
        }
        let mut b = rhs.to_vec();
        let floor = self.norm_bound(nu) * T::epsilon();
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&i, &j| {
                    a[i][col]
                        .abs()
                        .partial_cmp(&a[j][col].abs())
                        .expect("finite")
                })
                .expect("nonempty");
            a.swap(col, piv);
            b.swap(col, piv);
            if a[col][col].abs() < floor {
                a[col][col] = if a[col][col] < T::zero() {
                    -floor
                } else {
                    floor
                };
            }
            for row in col + 1..n {
                let f = a[row][col] / a[col][col];
                if f == T::zero() {
                    continue;
                }
                for k in col..n {
                    let delta = f * a[col][k];
                    a[row][k] = a[row][k] - delta;
                }
                b[row] = b[row] - f * b[col];
            }
        }
        let mut x = vec![T::zero(); n];
        for row in (0..n).rev() {
            let mut s = b[row];
            for k in row + 1..n {
                s = s - a[row][k] * x[k];
            }
            x[row] = s / a[row][row];
        }
        x
    }

    /// Kernel vector of `K(nu)`: forward three-term recursion seeded with
    /// `v_0 = 1`, polished by two steps of inverse iteration, then scaled so
    /// the largest-magnitude component is `+1`.
    pub fn eigenvector(&self, nu: T) -> Result<Vec<T>> {
        let n = self.len();
        if n == 0 {
            return Err(Error::InvalidParameter(
                "empty matrix has no eigenvectors".into(),
            ));
        }
        let mut v = vec![T::zero(); n];
        v[0] = T::one();
        for k in 0..n - 1 {
            let mut acc = (nu - self.offsets[k]) * v[k];
            if k > 0 {
                acc = acc + self.sub[k - 1] * v[k - 1];
            }
            v[k + 1] = -acc / self.sup[k];
        }
        normalize_max(&mut v);
        if !v.iter().all(|x| x.is_finite()) {
            v = vec![T::one(); n];
        }
        for _ in 0..2 {
            let mut w = self.solve_shifted(nu, &v);
            if !normalize_max(&mut w) {
                break;
            }
            v = w;
        }
        let residual = self
            .apply(nu, &v)
            .iter()
            .fold(T::zero(), |m, r| m.max(r.abs()))
            / self.norm_bound(nu).max(T::one());
        if !(residual <= T::lit(EIGENVECTOR_RESIDUAL_TOL)) {
            return Err(Error::NotAnEigenvalue {
                nu: nu.as_f64(),
                residual: residual.as_f64(),
            });
        }
        Ok(v)
    }
}

/// Eigenvalue of the trailing block together with the first-order shift to
/// the nearby eigenvalue of the full matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BorderedShift<T> {
    pub mu: T,
    /// `nu - mu`, or `None` when the coupling is too strong for the
    /// expansion to hold.
    pub shift: Option<T>,
}

impl<T: Real> TriDiag<T> {
    /// The matrix with its first row and column removed.
    pub fn trailing(&self) -> Result<TriDiag<T>> {
        if self.len() < 2 {
            return Err(Error::InvalidParameter("need at least a 2x2 matrix".into()));
        }
        TriDiag::new(
            self.offsets[1..].to_vec(),
            self.sub[1..].to_vec(),
            self.sup[1..].to_vec(),
        )
    }

    /// Off-diagonal of the symmetrised matrix, `sqrt(sub * sup)`.
    pub fn coupling(&self) -> Vec<T> {
        self.sub
            .iter()
            .zip(&self.sup)
            .map(|(a, c)| (*a * *c).sqrt())
            .collect()
    }

    /// Unit eigenvector of the symmetrised matrix at the eigenvalue `nu`,
    /// from a twisted factorisation. Every component is a product of pivot
    /// ratios, so exponentially small components keep their relative
    /// accuracy. The sign is fixed so the largest component is positive.
    pub fn symmetric_eigenvector(&self, nu: T) -> Vec<T> {
        let n = self.len();
        if n == 0 {
            return Vec::new();
        }
        let e = self.coupling();
        let tiny = T::epsilon() * self.norm_bound(nu).max(T::one());
        let guard = |x: T| if x == T::zero() { tiny } else { x };
        let diag: Vec<T> = self.offsets.iter().map(|d| *d - nu).collect();
        let mut down = vec![T::zero(); n];
        for i in 0..n {
            down[i] = guard(if i == 0 {
                diag[0]
            } else {
                diag[i] - e[i - 1] * e[i - 1] / down[i - 1]
            });
        }
        let mut up = vec![T::zero(); n];
        for i in (0..n).rev() {
            up[i] = guard(if i + 1 == n {
                diag[i]
            } else {
                diag[i] - e[i] * e[i] / up[i + 1]
            });
        }
        let twist = (0..n)
            .min_by(|&i, &j| {
                let g = |k: usize| (down[k] + up[k] - diag[k]).abs();
                g(i).partial_cmp(&g(j)).unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("nonempty");
        let mut w = vec![T::zero(); n];
        w[twist] = T::one();
        for i in (0..twist).rev() {
            w[i] = -e[i] * w[i + 1] / down[i];
        }
        for i in twist + 1..n {
            w[i] = -e[i - 1] * w[i - 1] / up[i];
        }
        let norm = w.iter().map(|x| *x * *x).sum::<T>().sqrt();
        let peak = w
            .iter()
            .fold(T::zero(), |m, x| if x.abs() > m.abs() { *x } else { m });
        let sign = if peak < T::zero() {
            -T::one()
        } else {
            T::one()
        };
        w.iter().map(|x| sign * *x / norm).collect()
    }

    /// For every eigenvalue `mu_j` of [`TriDiag::trailing`], the distance to
    /// the nearby eigenvalue of the full matrix from the secular equation
    /// `nu - d_0 = e_0^2 sum_i w_i(0)^2 / (nu - mu_i)`:
    /// `nu - mu_j = e_0^2 w_j(0)^2 / R_j`. The result keeps full relative
    /// accuracy when the shift is far below the spacing of floating-point
    /// numbers near `mu_j`.
    pub fn bordered_shifts(&self) -> Result<Vec<BorderedShift<T>>> {
        let inner = self.trailing()?;
        let mus = inner.eigenvalues();
        let first: Vec<T> = mus
            .iter()
            .map(|mu| inner.symmetric_eigenvector(*mu)[0])
            .collect();
        let e0 = self.coupling()[0];
        let e2 = e0 * e0;
        let d0 = self.offsets[0];
        let limit = T::lit(1e-3);
        Ok(mus
            .iter()
            .enumerate()
            .map(|(j, &mu)| {
                let spacing = mus
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != j)
                    .fold(T::infinity(), |m, (_, other)| m.min((mu - *other).abs()));
                let numerator = e2 * first[j] * first[j];
                let mut shift = T::zero();
                let mut denominator = T::zero();
                for _ in 0..60 {
                    let previous = shift;
                    let nu = mu + shift;
                    let rest: T = mus
                        .iter()
                        .zip(&first)
                        .enumerate()
                        .filter(|(i, _)| *i != j)
                        .map(|(_, (m, f))| *f * *f / (nu - *m))
                        .sum();
                    denominator = nu - d0 - e2 * rest;
                    shift = numerator / denominator;
                    if (shift - previous).abs() <= T::epsilon() * shift.abs() {
                        break;
                    }
                }
                let valid = shift.is_finite()
                    && shift.abs() <= limit * denominator.abs()
                    && shift.abs() <= limit * spacing;
                BorderedShift {
                    mu,
                    shift: valid.then_some(shift),
                }
            })
            .collect())
    }
}

/// Scales so the largest-magnitude component is `+1`; false for zero or
/// non-finite input.
fn normalize_max<T: Real>(v: &mut [T]) -> bool {
    let Some(&peak) = v.iter().max_by(|a, b| {
        a.abs()
            .partial_cmp(&b.abs())
            .unwrap_or(std::cmp::Ordering::Equal)
    }) else {
        return false;
    };
    if peak == T::zero() || !peak.is_finite() {
        return false;
    }
    for x in v.iter_mut() {
        *x = *x / peak;
    }
    v.iter().all(|x| x.is_finite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn sample() -> TriDiag<f64> {
        TriDiag::new(vec![0.0, 4.0, 16.0], vec![12.0, 4.0], vec![6.0, 10.0]).unwrap()
    }

    /// Direct cofactor expansion of the 3x3 determinant.
    fn det3(m: [[f64; 3]; 3]) -> f64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    #[test]
    fn rejects_non_jacobi_bands() {
        assert!(matches!(
            TriDiag::new(vec![0.0, 1.0], vec![0.0], vec![1.0]),
            Err(Error::NotJacobi(_))
        ));
        assert!(TriDiag::new(vec![0.0, 1.0], vec![1.0, 2.0], vec![1.0]).is_err());
    }

    #[test]
    fn sturm_sequence_matches_direct_determinant() {
        let t = sample();
        let nu = 10.0;
        let seq = t.sturm_sequence(nu);
        let m = [
            [nu, 6.0, 0.0],
            [12.0, nu - 4.0, 10.0],
            [0.0, 4.0, nu - 16.0],
        ];
        assert_abs_diff_eq!(seq.minors[3], det3(m), epsilon = 1e-9);
        assert_eq!(seq.minors[0], 1.0);
    }

    #[test]
    fn agreements_count_eigenvalues_below() {
        let t = sample();
        let ev = t.eigenvalues();
        assert_eq!(t.count_below(ev[0] - 1.0), 0);
        assert_eq!(t.count_below((ev[0] + ev[1]) / 2.0), 1);
        assert_eq!(t.count_below(ev[2] + 1.0), 3);
        assert_eq!(
            t.sturm_sequence(1e6)
                .minors
                .iter()
                .filter(|d| **d > 0.0)
                .count(),
            4
        );
    }

    #[test]
    fn eigenvalues_are_roots_of_determinant() {
        let t = sample();
        let ev = t.eigenvalues();
        assert_eq!(ev.len(), 3);
        assert!(ev[0] < ev[1] && ev[1] < ev[2]);
        for nu in ev {
            let scale = 1.0 + nu.abs().powi(3);
            assert!(t.characteristic(nu).abs() < 1e-9 * scale);
        }
    }

    #[test]
    fn eigenvector_kernel_and_normalization() {
        let t = sample();
        for nu in t.eigenvalues() {
            let v = t.eigenvector(nu).unwrap();
            let peak = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            assert_eq!(peak, 1.0);
            assert!(v.contains(&1.0));
            let r = t.apply(nu, &v);
            assert!(r.iter().all(|x| x.abs() < 1e-10));
        }
    }

    #[test]
    fn non_eigenvalue_is_rejected() {
        let t = sample();
        let nu = t.eigenvalues()[1] + 0.5;
        assert!(matches!(
            t.eigenvector(nu),
            Err(Error::NotAnEigenvalue { .. })
        ));
    }

    #[test]
    fn empty_and_single() {
        let empty = TriDiag::<f64>::new(vec![], vec![], vec![]).unwrap();
        assert!(empty.eigenvalues().is_empty());
        let one = TriDiag::new(vec![3.0], vec![], vec![]).unwrap();
        assert_abs_diff_eq!(one.eigenvalues()[0], 3.0, epsilon = 1e-12);
        assert_eq!(one.eigenvector(3.0).unwrap(), vec![1.0]);
    }

    #[test]
    fn single_precision_bisection_terminates() {
        let t = TriDiag::<f32>::new(vec![0.0, 4.0], vec![8.0], vec![8.0]).unwrap();
        let ev = t.eigenvalues();
        let exact = 2.0 - (4.0f32 + 64.0).sqrt();
        assert!((ev[0] - exact).abs() < 1e-4);
    }

    #[test]
    fn symmetric_eigenvector_small_components() {
        let t = TriDiag::new(vec![0.0, 4.0, 16.0], vec![1e-8, 1e-8], vec![1e-8, 1e-8]).unwrap();
        let ev = t.eigenvalues();
        let w = t.symmetric_eigenvector(ev[2]);
        assert_abs_diff_eq!(w.iter().map(|x| x * x).sum::<f64>(), 1.0, epsilon = 1e-14);
        assert!(w[2] > 0.0);
        // second order in the coupling: w_0 = e^2 / ((16 - 4)(16 - 0)) up to O(e^4)
        let expected = 1e-16 / (12.0 * 16.0);
        assert!((w[0].abs() - expected).abs() <= 1e-6 * expected);
        let residual = [
            -ev[2] * w[0] + 1e-8 * w[1],
            1e-8 * w[0] + (4.0 - ev[2]) * w[1] + 1e-8 * w[2],
            1e-8 * w[1] + (16.0 - ev[2]) * w[2],
        ];
        assert!(residual.iter().all(|r| r.abs() < 1e-13));
    }

    #[test]
    fn bordered_shift_two_by_two() {
        for e in [1e-1, 1e-5, 1e-12] {
            let t = TriDiag::new(vec![0.0, 4.0], vec![e], vec![e]).unwrap();
            let shifts = t.bordered_shifts().unwrap();
            assert_eq!(shifts.len(), 1);
            assert_eq!(shifts[0].mu, 4.0);
            let h = 2.0f64;
            let exact = e * e / ((h * h + e * e).sqrt() + h);
            let got = shifts[0].shift.unwrap();
            assert!((got - exact).abs() <= 1e-12 * exact, "{got} vs {exact}");
        }
        let strong = TriDiag::new(vec![0.0, 4.0], vec![5.0], vec![5.0]).unwrap();
        assert_eq!(strong.bordered_shifts().unwrap()[0].shift, None);
        assert!(TriDiag::new(vec![1.0], vec![], vec![])
            .unwrap()
            .bordered_shifts()
            .is_err());
    }
}
