//! Quasi-exactly solvable spectra of the Whittaker–Hill operator
//! `L = -D^2 - (4 alpha s cos 2x + 2 alpha^2 cos 4x)`, Darboux–Crum
//! transformations to semifinite-gap potentials, and Floquet-theoretic
//! verification of the resulting gap structure.
//!
//! Numerical code is generic over [`Real`] (implemented for `f32` and
//! `f64`); the `*64` aliases cover the common double-precision case.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod darboux;
pub mod error;
pub mod floquet;
pub mod gauged;
pub mod potential;
pub mod qes;
pub mod roots;
pub mod scalar;
pub mod tridiag;
pub mod trig;

pub use darboux::{
    crum_eigenfunction, crum_pair, dirichlet_edge_prediction, enumerate_clusters,
    floquet_gap_index, parity_zero, regularity, schrodinger_residual, set_regularity,
    transformed_potential, wronskian_v, ClusterSet, CrumState, GapEdge, Regularity,
    TransformedOperator, ZeroEvidence,
};
pub use error::{Error, Result};
pub use floquet::{
    band_edges, band_edges_with, classify_dirichlet, dirichlet_eigenvalues, discriminant,
    discriminant_scan, gaps_up_to, monodromy, predicted_open, BandOptions, DirichletLocation,
    DirichletPoint, DiscriminantSample, EdgeKind, Gap, GapPrediction, GapReport, Monodromy,
};
pub use gauged::GaugedRational;
pub use potential::PotentialFn;
pub use qes::{
    apply_k_operator, build_antiperiodic_matrices, build_periodic_matrices, free_limit_spectrum,
    inner_product, relative_residual, solvable_spectrum, Block, Parity, SolvableSpectrum,
    SpectrumEntry, WHParams, COINCIDENCE_TOL, NEAR_DEGENERATE,
};
pub use scalar::Real;
pub use tridiag::{BorderedShift, SturmSequence, TriDiag};
pub use trig::{RealZero, TrigPoly};

pub type TrigPoly64 = TrigPoly<f64>;
pub type GaugedRational64 = GaugedRational<f64>;
pub type TriDiag64 = TriDiag<f64>;
pub type WHParams64 = WHParams<f64>;
pub type SolvableSpectrum64 = SolvableSpectrum<f64>;
pub type TransformedOperator64 = TransformedOperator<f64>;
pub type PotentialFn64 = PotentialFn<f64>;
pub type Monodromy64 = Monodromy<f64>;
pub type GapReport64 = GapReport<f64>;
