//! Reference computations shared by the integration tests.

#![allow(dead_code)]

use nalgebra::{DMatrix, SymmetricEigen};

/// Eigenvalues of `-D^2 + u` on `e^{inx}` with `|n| <= nmax` and `n` of the
/// given parity (even: periodic, odd: anti-periodic), where
/// `u = sum_k cos_coeffs[k] cos kx`. Sorted ascending.
pub fn hill_eigenvalues(cos_coeffs: &[f64], odd: bool, nmax: i64) -> Vec<f64> {
    let start = if odd { 1 } else { 0 };
    let ns: Vec<i64> = (-nmax..=nmax)
        .filter(|n| n.rem_euclid(2) == start)
        .collect();
    let dim = ns.len();
    let h = DMatrix::from_fn(dim, dim, |i, j| {
        let d = (ns[i] - ns[j]).unsigned_abs() as usize;
        let diag = if i == j { (ns[i] * ns[i]) as f64 } else { 0.0 };
        let coupling = match (d, cos_coeffs.get(d)) {
            (0, Some(c)) => *c,
            (_, Some(c)) => c / 2.0,
            _ => 0.0,
        };
        diag + coupling
    });
    let mut ev: Vec<f64> = SymmetricEigen::new(h).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// Edges `(left, right)` of gaps `1..=ngaps` from the truncated Hill matrices.
pub fn hill_gaps(cos_coeffs: &[f64], ngaps: usize, nmax: i64) -> Vec<(f64, f64)> {
    let periodic = hill_eigenvalues(cos_coeffs, false, nmax);
    let anti = hill_eigenvalues(cos_coeffs, true, nmax);
    (1..=ngaps)
        .map(|n| {
            let ev = if n % 2 == 0 { &periodic } else { &anti };
            (ev[n - 1], ev[n])
        })
        .collect()
}

/// `[0, 0, -4 alpha s, 0, -2 alpha^2]`.
pub fn whittaker_hill_coeffs(alpha: f64, s: u32) -> Vec<f64> {
    vec![0.0, 0.0, -4.0 * alpha * s as f64, 0.0, -2.0 * alpha * alpha]
}
