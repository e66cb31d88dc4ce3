//! Command-line parsing and validation into a [`RunConfig`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use whill::floquet::{CLOSURE_TOL, DEFAULT_TOL};
use whill::{ClusterSet, WHParams};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "whill",
    version,
    about = "Whittaker-Hill spectra, Darboux-transformed potentials and Floquet analysis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandName {
    Spectrum,
    Potential,
    Discriminant,
    Gaps,
    Dirichlet,
    Clusters,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solvable eigenvalues and eigenfunctions.
    Spectrum(Flags),
    /// Samples of the (transformed) potential.
    Potential(Flags),
    /// Hill discriminant trace.
    Discriminant(Flags),
    /// Band edges, gap widths and the closed-gap prediction.
    Gaps(Flags),
    /// Dirichlet eigenvalues located in the gaps.
    Dirichlet(Flags),
    /// Cluster sets with regularity and predicted Dirichlet sides.
    Clusters(Flags),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// Integer parameter s (number of solvable levels).
    #[arg(long)]
    pub s: Option<u32>,
    /// Coupling alpha > 0.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Spectral labels of the Darboux set, e.g. `1,2` or `0`.
    #[arg(long, value_delimiter = ',')]
    pub cluster: Option<Vec<usize>>,
    #[arg(long, allow_negative_numbers = true)]
    pub lmin: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lmax: Option<f64>,
    /// Number of samples for traces.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Number of gaps to report.
    #[arg(long, default_value_t = 8)]
    pub ngaps: usize,
    /// Integrator tolerance on |det M - 1|.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Width below which a gap counts as closed.
    #[arg(long, default_value_t = CLOSURE_TOL)]
    pub closure_tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Use the zero potential instead of the Whittaker-Hill potential.
    #[arg(long)]
    pub free: bool,
    /// Include the singleton {0} in cluster enumeration (odd s).
    #[arg(long)]
    pub include_zero_cluster: bool,
    /// Sample the potential over [0, 2 pi] instead of [0, pi].
    #[arg(long)]
    pub full_period: bool,
}

/// A validated run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandName,
    /// `None` with `--free`.
    pub params: Option<WHParams<f64>>,
    pub cluster: Option<ClusterSet>,
    pub lmin: Option<f64>,
    pub lmax: Option<f64>,
    pub samples: usize,
    pub ngaps: usize,
    pub tol: f64,
    pub closure_tol: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub include_zero_cluster: bool,
    pub full_period: bool,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn positive(name: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(invalid(format!(
            "--{name} must be a finite positive number, got {x}"
        )))
    }
}

impl RunConfig {
    pub fn from_command(command: Command) -> Result<Self, CliError> {
        let (name, f) = match command {
            Command::Spectrum(f) => (CommandName::Spectrum, f),
            Command::Potential(f) => (CommandName::Potential, f),
            Command::Discriminant(f) => (CommandName::Discriminant, f),
            Command::Gaps(f) => (CommandName::Gaps, f),
            Command::Dirichlet(f) => (CommandName::Dirichlet, f),
            Command::Clusters(f) => (CommandName::Clusters, f),
        };
        Self::validate(name, f)
    }

    pub fn validate(command: CommandName, f: Flags) -> Result<Self, CliError> {
        let free_ok = matches!(
            command,
            CommandName::Potential
                | CommandName::Discriminant
                | CommandName::Gaps
                | CommandName::Dirichlet
        );
        let params = if f.free {
            if !free_ok {
                return Err(invalid("--free has no solvable sector; use it with potential, discriminant, gaps or dirichlet"));
            }
            if f.s.is_some() || f.alpha.is_some() || f.cluster.is_some() {
                return Err(invalid("--free excludes --s, --alpha and --cluster"));
            }
            None
        } else {
            let s = f.s.ok_or_else(|| invalid("--s is required"))?;
            let alpha = f.alpha.ok_or_else(|| invalid("--alpha is required"))?;
            Some(WHParams::new(alpha, s)?)
        };
        let cluster = match (&f.cluster, params) {
            (Some(labels), Some(p)) => {
                if matches!(command, CommandName::Spectrum | CommandName::Clusters) {
                    return Err(invalid("--cluster does not apply to this command"));
                }
                Some(ClusterSet::new(p.s(), labels)?)
            }
            _ => None,
        };
        if let (Some(lo), Some(hi)) = (f.lmin, f.lmax) {
            if !(lo < hi) {
                return Err(invalid(format!("need --lmin < --lmax, got {lo} and {hi}")));
            }
        }
        for (name, v) in [("lmin", f.lmin), ("lmax", f.lmax)] {
            if let Some(v) = v {
                if !v.is_finite() {
                    return Err(invalid(format!("--{name} must be finite")));
                }
            }
        }
        let default_samples = match command {
            CommandName::Potential => 257,
            _ => 401,
        };
        let samples = f.samples.unwrap_or(default_samples);
        if samples < 2 {
            return Err(invalid("--samples must be at least 2"));
        }
        if f.ngaps == 0 {
            return Err(invalid("--ngaps must be at least 1"));
        }
        if f.include_zero_cluster && command != CommandName::Clusters {
            return Err(invalid(
                "--include-zero-cluster applies to the clusters command only",
            ));
        }
        if f.full_period && command != CommandName::Potential {
            return Err(invalid(
                "--full-period applies to the potential command only",
            ));
        }
        Ok(RunConfig {
            command,
            params,
            cluster,
            lmin: f.lmin,
            lmax: f.lmax,
            samples,
            ngaps: f.ngaps,
            tol: positive("tol", f.tol)?,
            closure_tol: positive("closure-tol", f.closure_tol)?,
            format: f.format,
            out: f.out,
            include_zero_cluster: f.include_zero_cluster,
            full_period: f.full_period,
        })
    }
}
