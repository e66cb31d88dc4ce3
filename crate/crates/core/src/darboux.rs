//! Darboux–Crum transformations built from subsets of the solvable sector.
//!
//! For a set `I` of spectral labels the wronskian of the gauge-stripped
//! eigenfunctions `V_I = W(phi_i, i in I)` determines the transformed
//! potential `u - 2 D^2 log W(psi_I)`. Cluster sets (the singleton `{0}` and
//! pairs `{2i-1, 2i}`) give zero-free `V_I` and hence regular potentials
//! with the same spectrum; other sets give singular ones.

use crate::error::{Error, Result};
use crate::gauged::GaugedRational;
use crate::potential::PotentialFn;
use crate::qes::{Parity, SolvableSpectrum, WHParams};
use crate::scalar::Real;
use crate::trig::{RealZero, TrigPoly};

/// Relative margin below which regularity cannot be certified.
pub const INDETERMINATE_MARGIN: f64 = 1e-8;
/// Relative margin below which a rooted zero is corroborated by the grid.
pub const CORROBORATION_MARGIN: f64 = 1e-6;
/// Offset used to confirm a sign change across a rooted zero.
pub const SIGN_CHANGE_OFFSET: f64 = 1e-6;
/// Evaluation points and step of the finite-difference residual.
pub const RESIDUAL_POINTS: usize = 200;
pub const RESIDUAL_STEP: f64 = 1e-3;

/// A set of spectral labels, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClusterSet {
    indices: Vec<usize>,
    s: u32,
    cluster: bool,
}

impl ClusterSet {
    /// Any subset of the labels of the solvable sector: `0..=2m` for odd `s`,
    /// `1..=2m` for even `s`.
    pub fn new(s: u32, indices: &[usize]) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter(
                "s must be a positive integer".into(),
            ));
        }
        let m = (s / 2) as usize;
        let lo = if s % 2 == 1 { 0 } else { 1 };
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(bad) = sorted.iter().find(|&&i| i < lo || i > 2 * m) {
            return Err(Error::InvalidCluster {
                indices: sorted.clone(),
                reason: format!("label {bad} outside {lo}..={}", 2 * m),
            });
        }
        let cluster = (1..=m).all(|i| sorted.contains(&(2 * i - 1)) == sorted.contains(&(2 * i)));
        Ok(ClusterSet {
            indices: sorted,
            s,
            cluster,
        })
    }

    /// Like [`ClusterSet::new`] but rejects non-cluster subsets.
    pub fn cluster(s: u32, indices: &[usize]) -> Result<Self> {
        let set = Self::new(s, indices)?;
        if !set.cluster {
            return Err(Error::InvalidCluster {
                indices: set.indices,
                reason: "not a union of {0} and pairs {2i-1, 2i}".into(),
            });
        }
        Ok(set)
    }

    pub fn empty(s: u32) -> Self {
        ClusterSet {
            indices: Vec::new(),
            s,
            cluster: true,
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }

    pub fn is_cluster(&self) -> bool {
        self.cluster
    }

    pub fn contains(&self, label: usize) -> bool {
        self.indices.binary_search(&label).is_ok()
    }

    pub fn contains_zero(&self) -> bool {
        self.s % 2 == 1 && self.contains(0)
    }

    /// Pair numbers `i` with `{2i-1, 2i}` contained in the set.
    pub fn pairs(&self) -> Vec<usize> {
        (1..=(self.s / 2) as usize)
            .filter(|i| self.contains(2 * i - 1) && self.contains(2 * i))
            .collect()
    }
}

impl std::fmt::Display for ClusterSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All nonempty cluster sets built from the pairs `{2i-1, 2i}` (and, for
/// odd `s` with `include_zero`, the singleton `{0}`). Sets are ordered by
/// the binary number whose lowest bit is `{0}` and whose bit `i` is pair `i`,
/// so single clusters precede their unions.
pub fn enumerate_clusters(s: u32, include_zero: bool) -> Vec<ClusterSet> {
    if s == 0 {
        return Vec::new();
    }
    let m = (s / 2) as usize;
    let zero = include_zero && s % 2 == 1;
    let bits = m + usize::from(zero);
    (1..(1usize << bits))
        .map(|mask| {
            let mut indices = Vec::new();
            let pair_mask = if zero {
                if mask & 1 == 1 {
                    indices.push(0);
                }
                mask >> 1
            } else {
                mask
            };
            for i in 1..=m {
                if pair_mask & (1 << (i - 1)) != 0 {
                    indices.extend([2 * i - 1, 2 * i]);
                }
            }
            ClusterSet {
                indices,
                s,
                cluster: true,
            }
        })
        .collect()
}

fn check_set<T: Real>(spec: &SolvableSpectrum<T>, set: &ClusterSet) -> Result<()> {
    if set.s != spec.params.s() {
        return Err(Error::InvalidCluster {
            indices: set.indices.clone(),
            reason: format!(
                "built for s = {} but the spectrum has s = {}",
                set.s,
                spec.params.s()
            ),
        });
    }
    Ok(())
}

fn phis<T: Real>(spec: &SolvableSpectrum<T>, labels: &[usize]) -> Result<Vec<TrigPoly<T>>> {
    labels
        .iter()
        .map(|&l| Ok(spec.by_label(l)?.phi.clone()))
        .collect()
}

/// `V_I = W(phi_{i_1}, ..., phi_{i_k})`, or `1` for the empty set.
pub fn wronskian_v<T: Real>(spec: &SolvableSpectrum<T>, set: &ClusterSet) -> Result<TrigPoly<T>> {
    check_set(spec, set)?;
    if set.indices.is_empty() {
        return Ok(TrigPoly::constant(T::one()));
    }
    let v = TrigPoly::wronskian(&phis(spec, &set.indices)?)?;
    if set.cluster && !v.is_pi_periodic() {
        return Err(Error::Inconsistent(format!(
            "V for cluster {set} is not pi-periodic"
        )));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Regularity<T> {
    pub regular: bool,
    /// `min |V|` over a period.
    pub margin: T,
    /// Where the minimum is attained.
    pub argmin: T,
    /// Real zeros confirmed by a sign change or by the grid minimum.
    pub zeros: Vec<RealZero<T>>,
    /// How a zero was established; `None` when regular.
    pub evidence: Option<ZeroEvidence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroEvidence {
    /// `V` changes sign across a rooted zero.
    SignChange,
    /// `V` vanishes identically at `0` or `pi/2` because of the parities of
    /// the functions in the set.
    Parity,
}

/// Decides whether `V` has real zeros.
///
/// Rooting is authoritative; the grid margin must agree with it. A margin
/// too small to certify either way is reported as indeterminate.
pub fn regularity<T: Real>(v: &TrigPoly<T>) -> Result<Regularity<T>> {
    if v.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let zeros = v.real_zeros()?;
    let (margin, argmin) = v.min_abs_on_period();
    let scale = v.max_abs_coeff();
    let relative = margin / scale;
    let threshold = T::lit(INDETERMINATE_MARGIN).max(T::epsilon() * T::lit(100.0));
    let delta = T::lit(SIGN_CHANGE_OFFSET).max(T::epsilon().sqrt());

    if zeros.is_empty() {
        if relative <= threshold {
            return Err(Error::Indeterminate {
                margin: relative.as_f64(),
            });
        }
        return Ok(Regularity {
            regular: true,
            margin,
            argmin,
            zeros,
            evidence: None,
        });
    }
    let crossing = zeros
        .iter()
        .any(|z| v.evaluate(z.x - delta) * v.evaluate(z.x + delta) < T::zero());
    if crossing || relative <= T::lit(CORROBORATION_MARGIN) {
        if !crossing && relative > threshold {
            return Err(Error::Inconsistent(format!(
                "rooting reports zeros but the grid minimum is {margin}"
            )));
        }
        if !crossing {
            return Err(Error::Indeterminate {
                margin: relative.as_f64(),
            });
        }
        return Ok(Regularity {
            regular: false,
            margin,
            argmin,
            zeros,
            evidence: Some(ZeroEvidence::SignChange),
        });
    }
    Err(Error::Inconsistent(format!(
        "rooting reports a zero near x = {} but min |V| = {margin}",
        zeros[0].x
    )))
}

/// Which end of a gap a Dirichlet eigenvalue sits at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GapEdge {
    Left,
    Right,
}

impl GapEdge {
    pub fn flipped(self) -> Self {
        match self {
            GapEdge::Left => GapEdge::Right,
            GapEdge::Right => GapEdge::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GapEdge::Left => "left",
            GapEdge::Right => "right",
        }
    }
}

/// Floquet index of solvable gap `i` (between labels `2i-1` and `2i`):
/// `2i` for odd `s`, `2i - 1` for even `s`.
pub fn floquet_gap_index(s: u32, i: usize) -> usize {
    if s % 2 == 1 {
        2 * i
    } else {
        2 * i - 1
    }
}

/// Predicted Dirichlet position for each open gap `i = 1..=m` (the gap
/// between labels `2i-1` and `2i`).
///
/// The baseline is the edge carried by the odd eigenfunction: left for odd
/// `s`, right for even `s`. Each pair `{2i-1, 2i}` in the set moves its own
/// gap's Dirichlet eigenvalue to the other edge. Including `{0}` reverses
/// the parity of every other eigenfunction and so flips all gaps.
pub fn dirichlet_edge_prediction(set: &ClusterSet) -> Result<Vec<GapEdge>> {
    if !set.cluster {
        return Err(Error::InvalidCluster {
            indices: set.indices.clone(),
            reason: "edge prediction needs a cluster set".into(),
        });
    }
    let baseline = if set.s % 2 == 1 {
        GapEdge::Left
    } else {
        GapEdge::Right
    };
    let pairs = set.pairs();
    Ok((1..=(set.s / 2) as usize)
        .map(|i| {
            let flips = usize::from(pairs.contains(&i)) + usize::from(set.contains_zero());
            if flips % 2 == 1 {
                baseline.flipped()
            } else {
                baseline
            }
        })
        .collect())
}

/// A point where `V_I` vanishes for structural reasons.
///
/// At `x = 0` an even function contributes only to even-order rows of the
/// wronskian matrix and an odd one only to odd-order rows, so the matrix is
/// singular unless the set has exactly `ceil(k/2)` even and `floor(k/2)` odd
/// functions. The same holds at `pi/2`, where for even `s` the parities of
/// the odd-frequency functions are exchanged.
pub fn parity_zero<T: Real>(spec: &SolvableSpectrum<T>, set: &ClusterSet) -> Result<Option<T>> {
    check_set(spec, set)?;
    let k = set.k();
    if k == 0 {
        return Ok(None);
    }
    let mut even = 0;
    for &l in &set.indices {
        if spec.by_label(l)?.parity == Parity::Even {
            even += 1;
        }
    }
    let balanced = |e: usize| e == k.div_ceil(2);
    if !balanced(even) {
        return Ok(Some(T::zero()));
    }
    let even_at_half = if set.s % 2 == 1 { even } else { k - even };
    if !balanced(even_at_half) {
        return Ok(Some(T::FRAC_PI_2()));
    }
    Ok(None)
}

/// Regularity of `V_I`, using [`parity_zero`] before numerical rooting.
pub fn set_regularity<T: Real>(
    spec: &SolvableSpectrum<T>,
    set: &ClusterSet,
) -> Result<Regularity<T>> {
    let v = wronskian_v(spec, set)?;
    if let Some(x) = parity_zero(spec, set)? {
        return Ok(Regularity {
            regular: false,
            margin: v.evaluate(x).abs(),
            argmin: x,
            zeros: vec![RealZero { x, multiple: true }],
            evidence: Some(ZeroEvidence::Parity),
        });
    }
    regularity(&v)
}

/// The operator `-D^2 + v_I` obtained from `L` by the Darboux–Crum
/// transformation with the set `I`.
#[derive(Debug, Clone)]
pub struct TransformedOperator<T> {
    pub params: WHParams<T>,
    pub cluster: ClusterSet,
    pub v: TrigPoly<T>,
    pub regular: bool,
    pub margin: T,
    pub zeros: Vec<RealZero<T>>,
    /// Predicted Dirichlet edge per open gap; `None` for non-cluster sets.
    pub edges: Option<Vec<GapEdge>>,
}

impl<T: Real> TransformedOperator<T> {
    pub fn new(spec: &SolvableSpectrum<T>, cluster: &ClusterSet) -> Result<Self> {
        let v = wronskian_v(spec, cluster)?;
        let reg = set_regularity(spec, cluster)?;
        let edges = if cluster.cluster {
            Some(dirichlet_edge_prediction(cluster)?)
        } else {
            None
        };
        Ok(TransformedOperator {
            params: spec.params,
            cluster: cluster.clone(),
            v,
            regular: reg.regular,
            margin: reg.margin,
            zeros: reg.zeros,
            edges,
        })
    }

    /// `4 alpha (2k - s) cos 2x - 2 alpha^2 cos 4x - 2 (V'' V - V'^2) / V^2`.
    pub fn potential(&self) -> Result<PotentialFn<T>> {
        transformed_potential(self)
    }
}

/// The transformed potential as an evaluator; fails for singular `V`.
pub fn transformed_potential<T: Real>(op: &TransformedOperator<T>) -> Result<PotentialFn<T>> {
    if !op.regular {
        let x = op.zeros.first().map_or(f64::NAN, |z| z.x.as_f64());
        return Err(Error::SingularPotential { x });
    }
    let alpha = op.params.alpha();
    let k = T::from_count(op.cluster.k());
    let s = T::from_count(op.params.s() as usize);
    let smooth = &TrigPoly::cos_term(2, T::lit(4.0) * alpha * (T::two() * k - s))
        + &TrigPoly::cos_term(4, -T::two() * alpha * alpha);
    let v = op.v.clone();
    let v1 = v.derivative();
    let v2 = v1.derivative();
    let even = v.is_even() && smooth.is_even();
    Ok(PotentialFn::new(
        format!(
            "darboux s={} alpha={} I={}",
            op.params.s(),
            alpha,
            op.cluster
        ),
        even,
        move |x| {
            let (p, p1, p2) = (v.evaluate(x), v1.evaluate(x), v2.evaluate(x));
            smooth.evaluate(x) - T::two() * (p2 * p - p1 * p1) / (p * p)
        },
    ))
}

/// `psi~_j = e^{alpha cos 2x} W(phi_j, phi_I) / V_I` at `lambda_j`, for `j`
/// outside the set.
pub fn crum_eigenfunction<T: Real>(
    spec: &SolvableSpectrum<T>,
    set: &ClusterSet,
    label: usize,
) -> Result<GaugedRational<T>> {
    check_set(spec, set)?;
    if set.contains(label) {
        return Err(Error::InvalidCluster {
            indices: set.indices.clone(),
            reason: format!(
                "label {label} belongs to the set; use crum_pair for its eigenfunction"
            ),
        });
    }
    let phi = spec.by_label(label)?.phi.clone();
    let alpha = spec.params.alpha();
    if set.indices.is_empty() {
        return Ok(GaugedRational::gauged(phi, alpha));
    }
    let v = wronskian_v(spec, set)?;
    if let Some(z) = set_regularity(spec, set)?.zeros.first() {
        return Err(Error::SingularPotential { x: z.x.as_f64() });
    }
    let mut fs = vec![phi];
    fs.extend(phis(spec, &set.indices)?);
    Ok(GaugedRational::new(TrigPoly::wronskian(&fs)?, v, alpha))
}

/// An eigenfunction of a transformed operator together with its eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct CrumState<T> {
    pub label: usize,
    pub lambda: T,
    pub psi: GaugedRational<T>,
}

/// Eigenfunctions at the removed eigenvalues of a single cluster.
///
/// For `{0}`: `1 / psi_0` at `lambda_0`. For `{2i-1, 2i}`:
/// `psi_{2i} / W(psi_{2i-1}, psi_{2i})` at `lambda_{2i-1}` and
/// `psi_{2i-1} / W(psi_{2i-1}, psi_{2i})` at `lambda_{2i}`.
pub fn crum_pair<T: Real>(
    spec: &SolvableSpectrum<T>,
    set: &ClusterSet,
) -> Result<Vec<CrumState<T>>> {
    check_set(spec, set)?;
    let single = set.cluster && (set.indices == [0] || (set.k() == 2 && set.pairs().len() == 1));
    if !single {
        return Err(Error::InvalidCluster {
            indices: set.indices.clone(),
            reason: "closed forms exist only for a single cluster {0} or {2i-1, 2i}".into(),
        });
    }
    let alpha = spec.params.alpha();
    let v = wronskian_v(spec, set)?;
    if let Some(z) = set_regularity(spec, set)?.zeros.first() {
        return Err(Error::SingularPotential { x: z.x.as_f64() });
    }
    if set.indices == [0] {
        let e = spec.by_label(0)?;
        return Ok(vec![CrumState {
            label: 0,
            lambda: e.lambda,
            psi: GaugedRational::new(TrigPoly::constant(T::one()), v, -alpha),
        }]);
    }
    let (a, b) = (
        spec.by_label(set.indices[0])?,
        spec.by_label(set.indices[1])?,
    );
    Ok(vec![
        CrumState {
            label: a.label,
            lambda: a.lambda,
            psi: GaugedRational::new(b.phi.clone(), v.clone(), -alpha),
        },
        CrumState {
            label: b.label,
            lambda: b.lambda,
            psi: GaugedRational::new(a.phi.clone(), v, -alpha),
        },
    ])
}

/// Parity of the Crum-transformed eigenfunction for `j` outside the set.
pub fn transformed_parity(parity: Parity, set: &ClusterSet) -> Parity {
    if set.k() % 2 == 1 {
        parity.flipped()
    } else {
        parity
    }
}

/// `max |-psi'' + u psi - lambda psi| / max |psi|` on `RESIDUAL_POINTS`
/// points of `[0, pi)`, with a five-point second difference.
pub fn schrodinger_residual<T: Real>(
    u: &PotentialFn<T>,
    psi: &GaugedRational<T>,
    lambda: T,
) -> Result<T> {
    let h = T::lit(RESIDUAL_STEP);
    let twelve_h2 = T::lit(12.0) * h * h;
    let mut worst = T::zero();
    let mut size = T::zero();
    for i in 0..RESIDUAL_POINTS {
        let x = T::PI() * (T::from_count(i) + T::half()) / T::from_count(RESIDUAL_POINTS);
        let f = |dx: T| psi.evaluate(x + dx);
        let f0 = f(T::zero())?;
        let d2 = (-f(T::two() * h)? + T::lit(16.0) * f(h)? - T::lit(30.0) * f0
            + T::lit(16.0) * f(-h)?
            - f(-T::two() * h)?)
            / twelve_h2;
        worst = worst.max((-d2 + (u.eval(x) - lambda) * f0).abs());
        size = size.max(f0.abs());
    }
    Ok(worst / size)
}
