mod common;

use whill::{band_edges, gaps_up_to, monodromy, BandOptions, PotentialFn, TrigPoly, WHParams};

fn assert_matches_reference(u: &PotentialFn<f64>, coeffs: &[f64], ngaps: usize, tol: f64) {
    let report = gaps_up_to(u, ngaps, &BandOptions::default()).unwrap();
    let reference = common::hill_gaps(coeffs, ngaps, 81);
    let ground = common::hill_eigenvalues(coeffs, false, 81)[0];
    assert!(
        (report.lambda0 - ground).abs() <= tol,
        "{} vs {ground}",
        report.lambda0
    );
    for (g, (l, r)) in report.gaps.iter().zip(&reference) {
        assert!(
            (g.left - l).abs() <= tol && (g.right - r).abs() <= tol,
            "gap {}: [{}, {}] vs [{l}, {r}]",
            g.index,
            g.left,
            g.right
        );
    }
}

#[test]
fn whittaker_hill_edges_match_hill_matrices() {
    for (alpha, s) in [(0.5, 3), (1.0, 4), (0.3, 7), (2.0, 2)] {
        let u = PotentialFn::whittaker_hill(&WHParams::new(alpha, s).unwrap());
        assert_matches_reference(&u, &common::whittaker_hill_coeffs(alpha, s), 6, 1e-7);
    }
}

#[test]
fn mathieu_edges_match_hill_matrices() {
    let q = 1.7;
    let u = PotentialFn::from_trig(TrigPoly::cos_term(2, 2.0 * q));
    assert_matches_reference(&u, &[0.0, 0.0, 2.0 * q], 5, 1e-7);
}

#[test]
fn non_even_potential_uses_generic_route() {
    // a translate of 2q cos 2x has the same spectrum but is not flagged even
    let q = 1.2f64;
    let shift = 0.4f64;
    let u = PotentialFn::new("shifted mathieu", false, move |x: f64| {
        2.0 * q * (2.0 * (x - shift)).cos()
    });
    assert!(!u.is_even());
    let report = band_edges(&u, 20.0, 1e-10).unwrap();
    let reference = common::hill_gaps(&[0.0, 0.0, 2.0 * q], report.gaps.len(), 81);
    assert!(report.gaps.len() >= 3);
    for (g, (l, r)) in report.gaps.iter().zip(&reference) {
        assert!(
            (g.left - l).abs() <= 1e-6 && (g.right - r).abs() <= 1e-6,
            "gap {}",
            g.index
        );
    }
}

#[test]
fn half_period_monodromy_agrees_with_full_period() {
    let p = WHParams::new(0.8, 5).unwrap();
    let even = PotentialFn::whittaker_hill(&p);
    let same = PotentialFn::new("same, not flagged even", false, move |x: f64| {
        p.potential(x)
    });
    for lambda in [-9.0, -2.5, 3.0, 17.0] {
        let a = monodromy(&even, lambda, 1e-10).unwrap();
        let b = monodromy(&same, lambda, 1e-10).unwrap();
        let scale = a.m.iter().flatten().fold(1.0f64, |m, v| m.max(v.abs()));
        for (x, y) in a.m.iter().flatten().zip(b.m.iter().flatten()) {
            assert!(
                (x - y).abs() <= 1e-8 * scale,
                "lambda = {lambda}: {x} vs {y}"
            );
        }
    }
}
