//! Band edges, gaps and Dirichlet eigenvalues.
//!
//! For even potentials the discriminant factorises through the half-period
//! values of the fundamental solutions:
//! `Delta - 2 = 4 s(pi/2) c'(pi/2)` and `Delta + 2 = 4 c(pi/2) s'(pi/2)`.
//! Each factor has simple roots only, and each root is an edge with a known
//! eigenfunction parity, so closed gaps show up as two nearby simple roots
//! instead of a tangency. The Dirichlet eigenvalues are the roots of
//! `s(pi) = 2 s(pi/2) s'(pi/2)`. Other potentials fall back to scanning
//! `Delta -+ 2` with tangency detection.

use rayon::prelude::*;

use super::{fundamental_at, monodromy, smallest_rtol, DEFAULT_TOL};
use crate::darboux::GapEdge;
use crate::error::{Error, Result};
use crate::potential::PotentialFn;
use crate::qes::Parity;
use crate::scalar::Real;

/// Scan resolution in lambda.
pub const SCAN_POINTS: usize = 4096;
/// Bracket width at which bisection stops.
pub const ROOT_TOL: f64 = 1e-9;
/// Gaps narrower than this are closed.
pub const CLOSURE_TOL: f64 = 1e-6;
/// Distance within which a Dirichlet eigenvalue sits at a gap edge.
pub const EDGE_MATCH_TOL: f64 = 1e-6;

type Root<T> = (T, Option<Parity>);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandOptions<T> {
    /// Integrator accuracy target, as for [`super::monodromy`].
    pub tol: T,
    pub closure_tol: T,
    pub scan_points: usize,
    pub root_tol: T,
}

impl<T: Real> Default for BandOptions<T> {
    fn default() -> Self {
        BandOptions {
            tol: T::lit(DEFAULT_TOL),
            closure_tol: T::lit(CLOSURE_TOL),
            scan_points: SCAN_POINTS,
            root_tol: T::lit(ROOT_TOL),
        }
    }
}

impl<T: Real> BandOptions<T> {
    fn rtol(&self) -> T {
        (self.tol * T::lit(1e-2)).max(smallest_rtol::<T>())
    }
}

/// Boundary condition satisfied at a band edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// `Delta = 2`.
    Periodic,
    /// `Delta = -2`.
    Antiperiodic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gap<T> {
    /// 1 for the gap between the first and second bands.
    pub index: usize,
    pub left: T,
    pub right: T,
    pub width: T,
    pub closed: bool,
    pub kind: EdgeKind,
    /// Parity of the eigenfunctions at the left and right edges when the
    /// potential is even.
    pub parities: Option<(Parity, Parity)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapReport<T> {
    /// Bottom of the spectrum.
    pub lambda0: T,
    pub gaps: Vec<Gap<T>>,
    pub closure_tol: T,
    pub lambda_max: T,
}

impl<T: Real> GapReport<T> {
    pub fn gap(&self, index: usize) -> Option<&Gap<T>> {
        self.gaps.iter().find(|g| g.index == index)
    }

    pub fn open_gaps(&self) -> Vec<usize> {
        self.gaps
            .iter()
            .filter(|g| !g.closed)
            .map(|g| g.index)
            .collect()
    }
}

/// Which gaps stay open for the Whittaker–Hill potential with parameter `s`
/// (or for the free operator).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapPrediction {
    Free,
    /// `s = 2m + 1`: even gaps beyond `2m` close.
    OddS {
        m: usize,
    },
    /// `s = 2m`: odd gaps beyond `2m - 1` close.
    EvenS {
        m: usize,
    },
}

impl GapPrediction {
    pub fn is_open(&self, n: usize) -> Option<bool> {
        match *self {
            GapPrediction::Free => Some(false),
            GapPrediction::OddS { m } if n.is_multiple_of(2) => Some(n <= 2 * m),
            GapPrediction::EvenS { m } if n % 2 == 1 => Some(n < 2 * m),
            // the other parity is generically open but not forced
            _ => None,
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            GapPrediction::Free => "all gaps closed".into(),
            GapPrediction::OddS { m } => format!("even gaps closed except the first {m}"),
            GapPrediction::EvenS { m } => format!("odd gaps closed except the first {m}"),
        }
    }
}

pub fn predicted_open(s: Option<u32>) -> GapPrediction {
    match s {
        None => GapPrediction::Free,
        Some(s) if s % 2 == 1 => GapPrediction::OddS {
            m: (s / 2) as usize,
        },
        Some(s) => GapPrediction::EvenS {
            m: (s / 2) as usize,
        },
    }
}

fn min_potential<T: Real>(u: &PotentialFn<T>) -> T {
    let n = 2048;
    (0..n)
        .map(|i| u.eval(T::PI() * T::from_count(i) / T::from_count(n)))
        .fold(T::infinity(), T::min)
}

/// Uniform grid on `[lo, hi]` with `points` intervals.
fn grid<T: Real>(lo: T, hi: T, points: usize) -> Vec<T> {
    let h = (hi - lo) / T::from_count(points);
    (0..=points)
        .map(|i| {
            if i == points {
                hi
            } else {
                lo + h * T::from_count(i)
            }
        })
        .collect()
}

fn bisect<T: Real>(
    f: &(impl Fn(T) -> Result<T> + Sync),
    mut a: T,
    mut b: T,
    mut fa: T,
    width: T,
) -> Result<T> {
    let mut guard = 0;
    while b - a > width && guard < 200 {
        let mid = a + (b - a) * T::half();
        let fm = f(mid)?;
        if !fm.is_finite() {
            return Err(Error::UnresolvedRoots {
                lo: a.as_f64(),
                hi: b.as_f64(),
            });
        }
        if fm == T::zero() {
            return Ok(mid);
        }
        if (fm > T::zero()) == (fa > T::zero()) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        guard += 1;
    }
    Ok(a + (b - a) * T::half())
}

/// Simple roots of `f` on the grid by sign change plus bisection.
fn sign_change_roots<T: Real>(
    f: &(impl Fn(T) -> Result<T> + Sync),
    xs: &[T],
    values: &[T],
    width: T,
) -> Result<Vec<T>> {
    let brackets: Vec<usize> = (0..xs.len() - 1)
        .filter(|&i| {
            values[i] == T::zero()
                || (values[i] > T::zero()) != (values[i + 1] > T::zero())
                    && values[i + 1] != T::zero()
        })
        .collect();
    brackets
        .into_par_iter()
        .map(|i| {
            if values[i] == T::zero() {
                Ok(xs[i])
            } else {
                bisect(f, xs[i], xs[i + 1], values[i], width)
            }
        })
        .collect()
}

struct HalfPeriodRoots<T> {
    periodic: Vec<(T, Parity)>,
    antiperiodic: Vec<(T, Parity)>,
}

fn half_period_roots<T: Real>(
    u: &PotentialFn<T>,
    lo: T,
    hi: T,
    opts: &BandOptions<T>,
) -> Result<HalfPeriodRoots<T>> {
    let rtol = opts.rtol();
    let half = T::PI() * T::half();
    let xs = grid(lo, hi, opts.scan_points);
    let samples: Vec<[T; 4]> = xs
        .par_iter()
        .map(|&l| fundamental_at(u, l, half, rtol).map(|r| r.0))
        .collect::<Result<_>>()?;
    // (component, boundary condition, parity): s, c', c, s'
    let factors = [
        (2usize, EdgeKind::Periodic, Parity::Odd),
        (1, EdgeKind::Periodic, Parity::Even),
        (0, EdgeKind::Antiperiodic, Parity::Even),
        (3, EdgeKind::Antiperiodic, Parity::Odd),
    ];
    let mut out = HalfPeriodRoots {
        periodic: Vec::new(),
        antiperiodic: Vec::new(),
    };
    for (component, kind, parity) in factors {
        let values: Vec<T> = samples.iter().map(|y| y[component]).collect();
        let f = |l: T| fundamental_at(u, l, half, rtol).map(|r| r.0[component]);
        for root in sign_change_roots(&f, &xs, &values, opts.root_tol)? {
            match kind {
                EdgeKind::Periodic => out.periodic.push((root, parity)),
                EdgeKind::Antiperiodic => out.antiperiodic.push((root, parity)),
            }
        }
    }
    let by_lambda = |a: &(T, Parity), b: &(T, Parity)| a.0.partial_cmp(&b.0).expect("finite root");
    out.periodic.sort_by(by_lambda);
    out.antiperiodic.sort_by(by_lambda);
    Ok(out)
}

/// Roots of `Delta - target` including double roots at tangencies.
fn discriminant_roots<T: Real>(
    u: &PotentialFn<T>,
    target: T,
    xs: &[T],
    deltas: &[T],
    opts: &BandOptions<T>,
) -> Result<Vec<T>> {
    let f = |l: T| monodromy(u, l, opts.tol).map(|m| m.trace - target);
    let values: Vec<T> = deltas.iter().map(|d| *d - target).collect();
    let mut roots = sign_change_roots(&f, xs, &values, opts.root_tol)?;
    let inv_phi = T::lit(0.618_033_988_749_894_8);
    for i in 1..xs.len() - 1 {
        let (a, b, c) = (values[i - 1], values[i], values[i + 1]);
        let same_sign = (a > T::zero()) == (b > T::zero()) && (b > T::zero()) == (c > T::zero());
        if !same_sign || b.abs() > a.abs() || b.abs() > c.abs() || b == T::zero() {
            continue;
        }
        // golden-section search for the extremum of Delta near xs[i]
        let (mut lo, mut hi) = (xs[i - 1], xs[i + 1]);
        let sign = b.signum();
        let g = |l: T| -> Result<T> { Ok(f(l)? * sign) };
        let mut x1 = hi - (hi - lo) * inv_phi;
        let mut x2 = lo + (hi - lo) * inv_phi;
        let (mut g1, mut g2) = (g(x1)?, g(x2)?);
        while hi - lo > opts.root_tol {
            if g1 < g2 {
                hi = x2;
                x2 = x1;
                g2 = g1;
                x1 = hi - (hi - lo) * inv_phi;
                g1 = g(x1)?;
            } else {
                lo = x1;
                x1 = x2;
                g1 = g2;
                x2 = lo + (hi - lo) * inv_phi;
                g2 = g(x2)?;
            }
            if g1.min(g2) < T::zero() {
                break;
            }
        }
        let (xm, gm) = if g1 < g2 { (x1, g1) } else { (x2, g2) };
        if gm < T::zero() {
            roots.push(bisect(&f, xs[i - 1], xm, a, opts.root_tol)?);
            roots.push(bisect(&f, xm, xs[i + 1], f(xm)?, opts.root_tol)?);
        } else {
            // curvature from the grid: Delta ~ gm + kappa (l - xm)^2
            let h = xs[i + 1] - xs[i];
            let kappa = ((a + c - T::two() * b) / (h * h)).abs() * T::half();
            let threshold = kappa * opts.closure_tol * opts.closure_tol * T::lit(0.25)
                + opts.tol * T::lit(10.0);
            if gm <= threshold {
                roots.push(xm);
                roots.push(xm);
            }
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).expect("finite root"));
    Ok(roots)
}

/// All band edges below `lambda_max` with default options, paired into
/// gaps. `tol` is the integrator accuracy target.
pub fn band_edges<T: Real>(u: &PotentialFn<T>, lambda_max: T, tol: T) -> Result<GapReport<T>> {
    band_edges_with(
        u,
        lambda_max,
        &BandOptions {
            tol,
            ..BandOptions::default()
        },
    )
}

pub fn band_edges_with<T: Real>(
    u: &PotentialFn<T>,
    lambda_max: T,
    opts: &BandOptions<T>,
) -> Result<GapReport<T>> {
    if !(opts.tol > T::zero()) || !(opts.closure_tol > T::zero()) || opts.scan_points < 2 {
        return Err(Error::InvalidParameter(
            "tolerances must be positive and the scan needs at least 2 points".into(),
        ));
    }
    let lo = min_potential(u) - T::one();
    if !(lambda_max > lo) || !lambda_max.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "lambda_max = {lambda_max} must exceed min u - 1 = {lo}"
        )));
    }
    let (periodic, antiperiodic): (Vec<Root<T>>, Vec<Root<T>>) = if u.is_even() {
        let r = half_period_roots(u, lo, lambda_max, opts)?;
        (
            r.periodic.into_iter().map(|(l, p)| (l, Some(p))).collect(),
            r.antiperiodic
                .into_iter()
                .map(|(l, p)| (l, Some(p)))
                .collect(),
        )
    } else {
        let xs = grid(lo, lambda_max, opts.scan_points);
        let deltas: Vec<T> = xs
            .par_iter()
            .map(|&l| monodromy(u, l, opts.tol).map(|m| m.trace))
            .collect::<Result<_>>()?;
        let tag = |v: Vec<T>| v.into_iter().map(|l| (l, None)).collect();
        (
            tag(discriminant_roots(u, T::two(), &xs, &deltas, opts)?),
            tag(discriminant_roots(u, -T::two(), &xs, &deltas, opts)?),
        )
    };
    let Some(&(lambda0, _)) = periodic.first() else {
        return Err(Error::UnresolvedRoots {
            lo: lo.as_f64(),
            hi: lambda_max.as_f64(),
        });
    };
    if let Some(&(mu1, _)) = antiperiodic.first() {
        if mu1 <= lambda0 {
            return Err(Error::Inconsistent(format!(
                "anti-periodic edge {mu1} below the ground state {lambda0}"
            )));
        }
    }

    let mut gaps = Vec::new();
    let mut push =
        |index: usize, kind: EdgeKind, a: (T, Option<Parity>), b: (T, Option<Parity>)| {
            let (l, r) = if a.0 <= b.0 { (a, b) } else { (b, a) };
            let width = r.0 - l.0;
            let parities = match (l.1, r.1) {
                (Some(pl), Some(pr)) => Some((pl, pr)),
                _ => None,
            };
            gaps.push(Gap {
                index,
                left: l.0,
                right: r.0,
                width,
                closed: width < opts.closure_tol,
                kind,
                parities,
            });
        };
    for j in 1.. {
        let (Some(&a), Some(&b)) = (antiperiodic.get(2 * j - 2), antiperiodic.get(2 * j - 1))
        else {
            break;
        };
        push(2 * j - 1, EdgeKind::Antiperiodic, a, b);
    }
    for j in 1.. {
        let (Some(&a), Some(&b)) = (periodic.get(2 * j - 1), periodic.get(2 * j)) else {
            break;
        };
        push(2 * j, EdgeKind::Periodic, a, b);
    }
    gaps.sort_by_key(|g| g.index);
    // keep the contiguous run 1..=n
    let contiguous = gaps
        .iter()
        .enumerate()
        .take_while(|(i, g)| g.index == i + 1)
        .count();
    gaps.truncate(contiguous);
    for w in gaps.windows(2) {
        if w[1].left < w[0].right - opts.closure_tol {
            return Err(Error::Inconsistent(format!(
                "gaps {} and {} overlap: [{}, {}] vs [{}, {}]",
                w[0].index, w[1].index, w[0].left, w[0].right, w[1].left, w[1].right
            )));
        }
    }
    Ok(GapReport {
        lambda0,
        gaps,
        closure_tol: opts.closure_tol,
        lambda_max,
    })
}

/// The first `ngaps` gaps, with `lambda_max` chosen from the asymptotic
/// edge positions `n^2 + mean(u)`.
pub fn gaps_up_to<T: Real>(
    u: &PotentialFn<T>,
    ngaps: usize,
    opts: &BandOptions<T>,
) -> Result<GapReport<T>> {
    if ngaps == 0 {
        return Err(Error::InvalidParameter("ngaps must be at least 1".into()));
    }
    let n = 2048;
    let values: Vec<T> = (0..n)
        .map(|i| u.eval(T::PI() * T::from_count(i) / T::from_count(n)))
        .collect();
    let spread = values.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let k = T::from_count(ngaps + 1);
    let mut lambda_max = k * k + spread + T::lit(2.0);
    for _ in 0..4 {
        let mut report = band_edges_with(u, lambda_max, opts)?;
        if report.gaps.len() >= ngaps {
            report.gaps.truncate(ngaps);
            return Ok(report);
        }
        lambda_max = lambda_max * T::two();
    }
    Err(Error::UnresolvedRoots {
        lo: min_potential(u).as_f64(),
        hi: lambda_max.as_f64(),
    })
}

/// Dirichlet eigenvalues (`psi(0) = psi(pi) = 0`) in `[lambda_min, lambda_max]`.
pub fn dirichlet_eigenvalues<T: Real>(
    u: &PotentialFn<T>,
    lambda_min: T,
    lambda_max: T,
    tol: T,
) -> Result<Vec<T>> {
    if !(lambda_min < lambda_max) || !lambda_min.is_finite() || !lambda_max.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "need finite lambda_min < lambda_max, got [{lambda_min}, {lambda_max}]"
        )));
    }
    let opts = BandOptions {
        tol,
        ..BandOptions::default()
    };
    let rtol = opts.rtol();
    let lo = lambda_min.max(min_potential(u) - T::one());
    if lo >= lambda_max {
        return Ok(Vec::new());
    }
    let mut gammas: Vec<T> = if u.is_even() {
        let r = half_period_roots(u, lo, lambda_max, &opts)?;
        r.periodic
            .into_iter()
            .chain(r.antiperiodic)
            .filter(|(_, p)| *p == Parity::Odd)
            .map(|(l, _)| l)
            .collect()
    } else {
        let xs = grid(lo, lambda_max, opts.scan_points);
        let f = |l: T| fundamental_at(u, l, T::PI(), rtol).map(|r| r.0[2]);
        let values: Vec<T> = xs.par_iter().map(|&l| f(l)).collect::<Result<_>>()?;
        sign_change_roots(&f, &xs, &values, opts.root_tol)?
    };
    gammas.retain(|g| *g >= lambda_min && *g <= lambda_max);
    gammas.sort_by(|a, b| a.partial_cmp(b).expect("finite root"));
    Ok(gammas)
}

/// Where a Dirichlet eigenvalue sits relative to the gap structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirichletLocation {
    /// At one edge of an open gap.
    Edge { gap: usize, edge: GapEdge },
    /// At a closed gap (both edges coincide).
    ClosedGap { gap: usize },
    /// Strictly inside an open gap.
    Interior { gap: usize },
    /// Inside a band or beyond the reported gaps.
    Band,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletPoint<T> {
    pub gamma: T,
    pub location: DirichletLocation,
    /// Distance to the matched edge, or zero.
    pub offset: T,
}

pub fn classify_dirichlet<T: Real>(
    gammas: &[T],
    report: &GapReport<T>,
    tol: T,
) -> Vec<DirichletPoint<T>> {
    gammas
        .iter()
        .map(|&gamma| {
            for g in &report.gaps {
                if gamma < g.left - tol || gamma > g.right + tol {
                    continue;
                }
                let (dl, dr) = ((gamma - g.left).abs(), (gamma - g.right).abs());
                if g.closed {
                    return DirichletPoint {
                        gamma,
                        location: DirichletLocation::ClosedGap { gap: g.index },
                        offset: dl.min(dr),
                    };
                }
                if dl <= tol {
                    return DirichletPoint {
                        gamma,
                        location: DirichletLocation::Edge {
                            gap: g.index,
                            edge: GapEdge::Left,
                        },
                        offset: dl,
                    };
                }
                if dr <= tol {
                    return DirichletPoint {
                        gamma,
                        location: DirichletLocation::Edge {
                            gap: g.index,
                            edge: GapEdge::Right,
                        },
                        offset: dr,
                    };
                }
                return DirichletPoint {
                    gamma,
                    location: DirichletLocation::Interior { gap: g.index },
                    offset: dl.min(dr),
                };
            }
            DirichletPoint {
                gamma,
                location: DirichletLocation::Band,
                offset: T::zero(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qes::WHParams;
    use approx::assert_abs_diff_eq;

    #[test]
    fn free_operator_has_only_closed_gaps() {
        let u = PotentialFn::<f64>::free();
        let r = band_edges(&u, 40.0, 1e-10).unwrap();
        assert_abs_diff_eq!(r.lambda0, 0.0, epsilon = 1e-8);
        assert_eq!(r.gaps.len(), 6);
        for g in &r.gaps {
            assert!(g.width < 1e-8, "{g:?}");
            assert_abs_diff_eq!(g.left, (g.index * g.index) as f64, epsilon = 1e-8);
            assert_eq!(g.kind == EdgeKind::Periodic, g.index % 2 == 0);
        }
    }

    #[test]
    fn free_dirichlet_eigenvalues_are_squares() {
        let u = PotentialFn::<f64>::free();
        let g = dirichlet_eigenvalues(&u, 0.5, 30.0, 1e-10).unwrap();
        assert_eq!(g.len(), 5);
        for (k, gamma) in g.iter().enumerate() {
            assert_abs_diff_eq!(*gamma, ((k + 1) * (k + 1)) as f64, epsilon = 1e-8);
        }
    }

    #[test]
    fn generic_route_agrees_with_factorised_route() {
        let p = WHParams::new(0.5, 2).unwrap();
        let even = PotentialFn::whittaker_hill(&p);
        let generic = PotentialFn::new("wh without parity flag", false, move |x| p.potential(x));
        let opts = BandOptions {
            tol: 1e-10,
            scan_points: 1024,
            ..BandOptions::default()
        };
        let a = band_edges_with(&even, 12.0, &opts).unwrap();
        let b = band_edges_with(&generic, 12.0, &opts).unwrap();
        assert_eq!(a.gaps.len(), b.gaps.len());
        assert_abs_diff_eq!(a.lambda0, b.lambda0, epsilon = 1e-7);
        for (x, y) in a.gaps.iter().zip(&b.gaps) {
            assert_eq!(x.index, y.index);
            assert_abs_diff_eq!(x.left, y.left, epsilon = 1e-6);
            assert_abs_diff_eq!(x.right, y.right, epsilon = 1e-6);
            assert_eq!(x.closed, y.closed);
        }
        let ga = dirichlet_eigenvalues(&even, -5.0, 12.0, 1e-10).unwrap();
        let gb = dirichlet_eigenvalues(&generic, -5.0, 12.0, 1e-10).unwrap();
        assert_eq!(ga.len(), gb.len());
        for (x, y) in ga.iter().zip(&gb) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-7);
        }
    }

    #[test]
    fn predictions() {
        let odd = predicted_open(Some(3));
        assert_eq!(odd.is_open(2), Some(true));
        assert_eq!(odd.is_open(4), Some(false));
        assert_eq!(odd.is_open(3), None);
        let even = predicted_open(Some(4));
        assert_eq!(even.is_open(1), Some(true));
        assert_eq!(even.is_open(3), Some(true));
        assert_eq!(even.is_open(5), Some(false));
        assert_eq!(predicted_open(None).is_open(7), Some(false));
        assert_eq!(odd.describe(), "even gaps closed except the first 1");
    }

    #[test]
    fn classification() {
        let report = GapReport {
            lambda0: 0.0,
            gaps: vec![
                Gap {
                    index: 1,
                    left: 1.0,
                    right: 2.0,
                    width: 1.0,
                    closed: false,
                    kind: EdgeKind::Antiperiodic,
                    parities: None,
                },
                Gap {
                    index: 2,
                    left: 4.0,
                    right: 4.0,
                    width: 0.0,
                    closed: true,
                    kind: EdgeKind::Periodic,
                    parities: None,
                },
            ],
            closure_tol: 1e-6,
            lambda_max: 10.0,
        };
        let c = classify_dirichlet(&[1.0, 2.0 + 1e-8, 1.5, 4.0, 3.0], &report, 1e-6);
        assert_eq!(
            c[0].location,
            DirichletLocation::Edge {
                gap: 1,
                edge: GapEdge::Left
            }
        );
        assert_eq!(
            c[1].location,
            DirichletLocation::Edge {
                gap: 1,
                edge: GapEdge::Right
            }
        );
        assert_eq!(c[2].location, DirichletLocation::Interior { gap: 1 });
        assert_eq!(c[3].location, DirichletLocation::ClosedGap { gap: 2 });
        assert_eq!(c[4].location, DirichletLocation::Band);
    }
}
