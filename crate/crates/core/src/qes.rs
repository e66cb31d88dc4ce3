//! The solvable sector of the Whittaker–Hill operator
//! `L = -D^2 - (4 alpha s cos 2x + 2 alpha^2 cos 4x)`.
//!
//! After the gauge substitution `psi = phi e^{alpha cos 2x}` the operator
//! becomes `K = -D^2 + 4 alpha sin 2x D - 4 (s - 1) alpha cos 2x` with
//! eigenvalue `nu = lambda + 2 alpha^2`. For integer `s` the three-term
//! recurrences for the Fourier coefficients of `phi` terminate, and the
//! solvable eigenvalues are those of small Jacobi matrices:
//!
//! * odd `s = 2m + 1`: `K0` (cosines `1, cos 2x, ..., cos 2mx`) and `K1`
//!   (sines `sin 2x, ..., sin 2mx`), both on the periodic line;
//! * even `s = 2m`: `K+` (cosines `cos x, ..., cos (2m-1)x`) and `K-`
//!   (the matching sines), both on the anti-periodic line.

use crate::error::{Error, Result};
use crate::gauged::GaugedRational;
use crate::scalar::Real;
use crate::tridiag::{BorderedShift, TriDiag};
use crate::trig::TrigPoly;

/// Two eigenvalues of one block closer than this violate simplicity.
pub const COINCIDENCE_TOL: f64 = 1e-9;
/// Relative distance below which levels of the two blocks are compared
/// through the secular equation instead of by subtraction.
pub const NEAR_DEGENERATE: f64 = 1e-6;

/// Coupling `alpha > 0` and integer `s >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WHParams<T> {
    alpha: T,
    s: u32,
}

impl<T: Real> WHParams<T> {
    pub fn new(alpha: T, s: u32) -> Result<Self> {
        if !(alpha > T::zero()) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "alpha must be a finite positive number, got {alpha}"
            )));
        }
        if s == 0 {
            return Err(Error::InvalidParameter(
                "s must be a positive integer".into(),
            ));
        }
        Ok(WHParams { alpha, s })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `m = (s - 1) / 2` for odd `s`, `s / 2` for even `s`.
    pub fn m(&self) -> usize {
        (self.s / 2) as usize
    }

    pub fn is_odd(&self) -> bool {
        self.s % 2 == 1
    }

    fn sf(&self) -> T {
        T::from_count(self.s as usize)
    }

    /// `u(x) = -(4 alpha s cos 2x + 2 alpha^2 cos 4x)`.
    pub fn potential(&self, x: T) -> T {
        let a = self.alpha;
        -(T::lit(4.0) * a * self.sf() * (T::two() * x).cos()
            + T::two() * a * a * (T::lit(4.0) * x).cos())
    }

    /// The potential as a trigonometric polynomial.
    pub fn potential_poly(&self) -> TrigPoly<T> {
        let a = self.alpha;
        &TrigPoly::cos_term(2, -T::lit(4.0) * a * self.sf())
            + &TrigPoly::cos_term(4, -T::two() * a * a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flipped(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// Which finite matrix an eigenvalue came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    /// `K0`: periodic, even.
    PeriodicEven,
    /// `K1`: periodic, odd.
    PeriodicOdd,
    /// `K+`: anti-periodic, even.
    AntiperiodicEven,
    /// `K-`: anti-periodic, odd.
    AntiperiodicOdd,
}

impl Block {
    pub fn parity(self) -> Parity {
        match self {
            Block::PeriodicEven | Block::AntiperiodicEven => Parity::Even,
            Block::PeriodicOdd | Block::AntiperiodicOdd => Parity::Odd,
        }
    }

    /// Frequency carried by the `k`-th component of this block's eigenvector.
    pub fn frequency(self, k: usize) -> usize {
        match self {
            Block::PeriodicEven => 2 * k,
            Block::PeriodicOdd => 2 * (k + 1),
            Block::AntiperiodicEven | Block::AntiperiodicOdd => 2 * k + 1,
        }
    }

    /// Assembles the eigenfunction from eigenvector components.
    pub fn eigenfunction<T: Real>(self, coeffs: &[T]) -> TrigPoly<T> {
        let deg = coeffs.len().checked_sub(1).map_or(0, |k| self.frequency(k));
        let mut cos = vec![T::zero(); deg + 1];
        let mut sin = vec![T::zero(); deg + 1];
        for (k, c) in coeffs.iter().enumerate() {
            let n = self.frequency(k);
            match self.parity() {
                Parity::Even => cos[n] = *c,
                Parity::Odd => sin[n] = *c,
            }
        }
        TrigPoly::new(cos, sin)
    }
}

/// `K0` (size `m + 1`) and `K1` (size `m`) for odd `s`.
pub fn build_periodic_matrices<T: Real>(params: &WHParams<T>) -> Result<(TriDiag<T>, TriDiag<T>)> {
    if !params.is_odd() {
        return Err(Error::InvalidParameter(format!(
            "s = {} is even; use build_antiperiodic_matrices",
            params.s
        )));
    }
    let m = params.m();
    let (alpha, s) = (params.alpha, params.sf());
    let four = T::lit(4.0);
    let kf = |k: usize| T::from_count(k);
    // row k of the even recurrence: a_k A_{2k-2} + (nu - 4k^2) A_{2k} + c_k A_{2k+2}
    let c = |k: usize| T::two() * alpha * (s + T::two() * kf(k) + T::one());
    let a = |k: usize| {
        if k == 1 {
            four * alpha * (s - T::one())
        } else {
            T::two() * alpha * (s - T::two() * kf(k) + T::one())
        }
    };
    let k0 = TriDiag::new(
        (0..=m).map(|k| four * kf(k * k)).collect(),
        (1..=m).map(a).collect(),
        (0..m).map(c).collect(),
    )?;
    let k1 = TriDiag::new(
        (1..=m).map(|k| four * kf(k * k)).collect(),
        (2..=m).map(a).collect(),
        (1..m).map(c).collect(),
    )?;
    Ok((k0, k1))
}

/// `K+` and `K-` (both `m x m`) for even `s`; they differ only in the first
/// diagonal entry `nu - 1 +- 2 alpha s`.
pub fn build_antiperiodic_matrices<T: Real>(
    params: &WHParams<T>,
) -> Result<(TriDiag<T>, TriDiag<T>)> {
    if params.is_odd() {
        return Err(Error::InvalidParameter(format!(
            "s = {} is odd; use build_periodic_matrices",
            params.s
        )));
    }
    let m = params.m();
    let (alpha, s) = (params.alpha, params.sf());
    let kf = |k: usize| T::from_count(k);
    let c = |k: usize| T::two() * alpha * (s + T::two() * kf(k));
    let a = |k: usize| T::two() * alpha * (s - T::two() * kf(k) + T::two());
    let shift = T::two() * alpha * s;
    let build = |first: T| {
        let mut offsets: Vec<T> = (1..=m).map(|k| kf((2 * k - 1) * (2 * k - 1))).collect();
        offsets[0] = first;
        TriDiag::new(offsets, (2..=m).map(a).collect(), (1..m).map(c).collect())
    };
    Ok((build(T::one() - shift)?, build(T::one() + shift)?))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry<T> {
    /// Position in increasing `nu`, from 0.
    pub index: usize,
    /// Conventional label: `index` for odd `s`, `index + 1` for even `s`
    /// (so labels run `0..=2m` and `1..=2m` respectively).
    pub label: usize,
    pub nu: T,
    /// `lambda = nu - 2 alpha^2`, the eigenvalue of the Hill operator.
    pub lambda: T,
    pub parity: Parity,
    pub block: Block,
    /// Eigenfunction of `K`, largest coefficient `+1`.
    pub phi: TrigPoly<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolvableSpectrum<T> {
    pub params: WHParams<T>,
    pub entries: Vec<SpectrumEntry<T>>,
    /// `nu_{i+1} - nu_i`, resolved below float spacing for nearly
    /// degenerate pairs.
    pub gaps: Vec<T>,
}

impl<T: Real> SolvableSpectrum<T> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first_label(&self) -> usize {
        if self.params.is_odd() {
            0
        } else {
            1
        }
    }

    pub fn by_label(&self, label: usize) -> Result<&SpectrumEntry<T>> {
        let first = self.first_label();
        label
            .checked_sub(first)
            .and_then(|i| self.entries.get(i))
            .ok_or_else(|| Error::IndexOutOfRange {
                index: label,
                valid: format!("{first}..={}", first + self.entries.len() - 1),
            })
    }

    pub fn nus(&self) -> Vec<T> {
        self.entries.iter().map(|e| e.nu).collect()
    }

    pub fn lambdas(&self) -> Vec<T> {
        self.entries.iter().map(|e| e.lambda).collect()
    }

    /// `psi = phi e^{alpha cos 2x}` for the entry at `index`.
    pub fn eigenfunction_psi(&self, index: usize) -> Result<GaugedRational<T>> {
        let entry = self
            .entries
            .get(index)
            .ok_or_else(|| Error::IndexOutOfRange {
                index,
                valid: format!("0..{}", self.entries.len()),
            })?;
        Ok(GaugedRational::gauged(entry.phi.clone(), self.params.alpha))
    }
}

/// An eigenvalue written as `base + offset`. Nearly degenerate levels from
/// the two blocks share a base, and their offsets carry the splitting to full
/// relative accuracy even when it is far below the spacing of floats.
struct Level<T> {
    base: T,
    offset: T,
    block: Block,
    phi: TrigPoly<T>,
}

impl<T: Real> Level<T> {
    fn minus(&self, other: &Level<T>) -> T {
        (self.base - other.base) + (self.offset - other.offset)
    }
}

fn block_levels<T: Real>(
    matrix: &TriDiag<T>,
    block: Block,
    shifts: &[BorderedShift<T>],
) -> Result<Vec<Level<T>>> {
    let eigenvalues = matrix.eigenvalues();
    if let Some(w) = eigenvalues
        .windows(2)
        .find(|w| w[1] - w[0] <= T::lit(COINCIDENCE_TOL))
    {
        return Err(Error::Inconsistent(format!(
            "{block:?} eigenvalues {} and {} coincide",
            w[0], w[1]
        )));
    }
    eigenvalues
        .into_iter()
        .map(|nu| {
            let phi = block.eigenfunction(&matrix.eigenvector(nu)?);
            let scale = T::one().max(nu.abs());
            let partner = shifts
                .iter()
                .filter(|b| (nu - b.mu).abs() <= T::lit(NEAR_DEGENERATE) * scale)
                .min_by(|a, b| {
                    (nu - a.mu)
                        .abs()
                        .partial_cmp(&(nu - b.mu).abs())
                        .expect("finite eigenvalue")
                });
            let (base, offset) = match partner {
                Some(BorderedShift { mu, shift: Some(d) }) => {
                    if (nu - (*mu + *d)).abs() > T::lit(COINCIDENCE_TOL) * scale {
                        return Err(Error::Inconsistent(format!(
                            "{block:?} eigenvalue {nu} disagrees with the secular estimate {}",
                            *mu + *d
                        )));
                    }
                    (*mu, *d)
                }
                _ => (nu, T::zero()),
            };
            Ok(Level {
                base,
                offset,
                block,
                phi,
            })
        })
        .collect()
}

/// Merges the eigenvalues of both blocks, builds the eigenfunctions, and
/// checks that parities alternate in strictly increasing `nu` (even first).
///
/// Levels of the two blocks that lie within [`NEAR_DEGENERATE`] of each
/// other are compared through the secular equation of the bordered matrix,
/// so their order and splitting are resolved even below double precision.
pub fn solvable_spectrum<T: Real>(params: &WHParams<T>) -> Result<SolvableSpectrum<T>> {
    let (even, odd) = if params.is_odd() {
        let (k0, k1) = build_periodic_matrices(params)?;
        let shifts = if k0.len() > 1 {
            k0.bordered_shifts()?
        } else {
            Vec::new()
        };
        let anchors: Vec<_> = shifts
            .iter()
            .map(|b| BorderedShift {
                mu: b.mu,
                shift: Some(T::zero()),
            })
            .collect();
        (
            block_levels(&k0, Block::PeriodicEven, &shifts)?,
            block_levels(&k1, Block::PeriodicOdd, &anchors)?,
        )
    } else {
        let (kp, km) = build_antiperiodic_matrices(params)?;
        let (sp, sm) = if kp.len() > 1 {
            (kp.bordered_shifts()?, km.bordered_shifts()?)
        } else {
            (Vec::new(), Vec::new())
        };
        (
            block_levels(&kp, Block::AntiperiodicEven, &sp)?,
            block_levels(&km, Block::AntiperiodicOdd, &sm)?,
        )
    };
    let mut all: Vec<Level<T>> = even.into_iter().chain(odd).collect();
    all.sort_by(|a, b| {
        a.minus(b)
            .partial_cmp(&T::zero())
            .expect("finite eigenvalue")
    });
    let gaps: Vec<T> = all.windows(2).map(|w| w[1].minus(&w[0])).collect();

    let offset = if params.is_odd() { 0 } else { 1 };
    let shift = T::two() * params.alpha * params.alpha;
    let entries: Vec<SpectrumEntry<T>> = all
        .into_iter()
        .enumerate()
        .map(|(index, level)| {
            let nu = level.base + level.offset;
            SpectrumEntry {
                index,
                label: index + offset,
                nu,
                lambda: nu - shift,
                parity: level.block.parity(),
                block: level.block,
                phi: level.phi,
            }
        })
        .collect();

    if let Some(i) = gaps.iter().position(|g| !(*g > T::zero())) {
        return Err(Error::Inconsistent(format!(
            "levels {} and {} (nu = {}) are not separated",
            i,
            i + 1,
            entries[i].nu
        )));
    }
    for e in &entries {
        let expected = if e.index % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        if e.parity != expected {
            return Err(Error::Inconsistent(format!(
                "interlacing violated: entry {} (nu = {}) has {:?} parity",
                e.index, e.nu, e.parity
            )));
        }
    }
    Ok(SolvableSpectrum {
        params: *params,
        entries,
        gaps,
    })
}

/// `K phi = -phi'' + 4 alpha sin 2x phi' - 4 (s - 1) alpha cos 2x phi`.
pub fn apply_k_operator<T: Real>(params: &WHParams<T>, phi: &TrigPoly<T>) -> TrigPoly<T> {
    let d1 = phi.derivative();
    let d2 = d1.derivative();
    let alpha = params.alpha;
    let drift = &TrigPoly::sin_term(2, T::lit(4.0) * alpha) * &d1;
    let coupling = &TrigPoly::cos_term(2, T::lit(4.0) * (params.sf() - T::one()) * alpha) * phi;
    &(&drift - &d2) - &coupling
}

/// `max |K phi - nu phi| / ((1 + |nu|) max |phi|)` over coefficients.
pub fn relative_residual<T: Real>(params: &WHParams<T>, nu: T, phi: &TrigPoly<T>) -> T {
    let k_phi = apply_k_operator(params, phi);
    let diff = k_phi.max_coeff_diff(&phi.scale(nu));
    diff / ((T::one() + nu.abs()) * phi.max_abs_coeff())
}

/// The `alpha -> 0` limit of the solvable sector: `0, 4, 4, ..., 4m^2, 4m^2`
/// for odd `s` and `1, 1, 9, 9, ..., (2m-1)^2, (2m-1)^2` for even `s`.
pub fn free_limit_spectrum<T: Real>(s: u32) -> Vec<T> {
    let m = (s / 2) as usize;
    if s % 2 == 1 {
        std::iter::once(T::zero())
            .chain((1..=m).flat_map(|k| {
                let v = T::from_count(4 * k * k);
                [v, v]
            }))
            .collect()
    } else {
        (1..=m)
            .flat_map(|k| {
                let v = T::from_count((2 * k - 1) * (2 * k - 1));
                [v, v]
            })
            .collect()
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
fn gauss_legendre<T: Real>(n: usize) -> Vec<(T, T)> {
    let nf = T::from_count(n);
    (0..n)
        .map(|i| {
            let mut x = (T::PI() * (T::from_count(i) + T::lit(0.75)) / (nf + T::half())).cos();
            let mut dp = T::one();
            for _ in 0..100 {
                let (mut p0, mut p1) = (T::one(), x);
                for k in 2..=n {
                    let kf = T::from_count(k);
                    let p2 = ((T::two() * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = nf * (x * p1 - p0) / (x * x - T::one());
                let step = p1 / dp;
                x = x - step;
                if step.abs() <= T::epsilon() {
                    break;
                }
            }
            (x, T::two() / ((T::one() - x * x) * dp * dp))
        })
        .collect()
}

/// `int_0^pi p q e^{2 alpha cos 2x} dx`.
///
/// When `p q` is pi-periodic (the case for eigenfunctions of one spectrum)
/// the periodic trapezoid rule is spectrally accurate; otherwise a
/// Gauss–Legendre rule is used.
pub fn inner_product<T: Real>(p: &TrigPoly<T>, q: &TrigPoly<T>, alpha: T) -> T {
    let prod = p * q;
    let nodes = (8 * prod.degree()).max(1024);
    let weight = |x: T| (T::two() * alpha * (T::two() * x).cos()).exp();
    if prod.is_pi_periodic() {
        let h = T::PI() / T::from_count(nodes);
        (0..nodes)
            .map(|i| {
                let x = h * T::from_count(i);
                prod.evaluate(x) * weight(x)
            })
            .sum::<T>()
            * h
    } else {
        let half = T::PI() * T::half();
        gauss_legendre::<T>(nodes / 4)
            .into_iter()
            .map(|(t, w)| {
                let x = half * (t + T::one());
                w * prod.evaluate(x) * weight(x)
            })
            .sum::<T>()
            * half
    }
}
