//! The six subcommands, each producing a [`Report`].

use std::f64::consts::PI;

use whill::floquet::EDGE_MATCH_TOL;
use whill::{
    band_edges_with, classify_dirichlet, dirichlet_edge_prediction, dirichlet_eigenvalues,
    discriminant_scan, enumerate_clusters, floquet_gap_index, gaps_up_to, predicted_open,
    solvable_spectrum, BandOptions, Block, ClusterSet, DirichletLocation, EdgeKind, GapEdge,
    GapReport, Parity, PotentialFn, SolvableSpectrum, TransformedOperator, WHParams,
};

use crate::config::{CommandName, RunConfig};
use crate::error::CliError;
use crate::format::{Cell, Report};

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    match cfg.command {
        CommandName::Spectrum => spectrum(cfg),
        CommandName::Potential => potential(cfg),
        CommandName::Discriminant => discriminant(cfg),
        CommandName::Gaps => gaps(cfg),
        CommandName::Dirichlet => dirichlet(cfg),
        CommandName::Clusters => clusters(cfg),
    }
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

fn block_name(b: Block) -> &'static str {
    match b {
        Block::PeriodicEven => "periodic-even",
        Block::PeriodicOdd => "periodic-odd",
        Block::AntiperiodicEven => "antiperiodic-even",
        Block::AntiperiodicOdd => "antiperiodic-odd",
    }
}

fn edge_name(e: GapEdge) -> &'static str {
    e.as_str()
}

fn kind_name(k: EdgeKind) -> &'static str {
    match k {
        EdgeKind::Periodic => "periodic",
        EdgeKind::Antiperiodic => "antiperiodic",
    }
}

fn params(cfg: &RunConfig) -> Result<WHParams<f64>, CliError> {
    cfg.params
        .ok_or_else(|| CliError::Validation("--s and --alpha are required".into()))
}

fn echo(report: &mut Report, cfg: &RunConfig) {
    match cfg.params {
        Some(p) => {
            report.meta("s", p.s()).meta("alpha", p.alpha());
        }
        None => {
            report.meta("potential", "free");
        }
    }
    if let Some(set) = &cfg.cluster {
        report.meta("cluster", Cell::Labels(set.indices().to_vec()));
    }
}

/// The potential a command works on: free, Whittaker-Hill, or transformed.
struct Subject {
    u: PotentialFn<f64>,
    spectrum: Option<SolvableSpectrum<f64>>,
    operator: Option<TransformedOperator<f64>>,
}

fn subject(cfg: &RunConfig) -> Result<Subject, CliError> {
    let Some(p) = cfg.params else {
        return Ok(Subject {
            u: PotentialFn::free(),
            spectrum: None,
            operator: None,
        });
    };
    let spec = solvable_spectrum(&p)?;
    match &cfg.cluster {
        Some(set) if !set.indices().is_empty() => {
            let op = TransformedOperator::new(&spec, set)?;
            let u = op.potential()?;
            Ok(Subject {
                u,
                spectrum: Some(spec),
                operator: Some(op),
            })
        }
        _ => Ok(Subject {
            u: PotentialFn::whittaker_hill(&p),
            spectrum: Some(spec),
            operator: None,
        }),
    }
}

fn spectrum(cfg: &RunConfig) -> Result<Report, CliError> {
    let p = params(cfg)?;
    let spec = solvable_spectrum(&p)?;
    let mut r = Report::new(
        "spectrum",
        &["index", "label", "nu", "lambda", "parity", "block", "phi"],
    );
    echo(&mut r, cfg);
    r.meta("levels", spec.len());
    for e in &spec.entries {
        let even = e.parity == Parity::Even;
        let odd_frequencies = !p.is_odd();
        let terms: Vec<(String, f64)> = (0..=e.phi.degree())
            .filter(|n| (n % 2 == 1) == odd_frequencies)
            .filter_map(|n| {
                let (name, c) = if even {
                    (format!("c{n}"), e.phi.cos_coeff(n))
                } else {
                    (format!("s{n}"), e.phi.sin_coeff(n))
                };
                (n > 0 || even).then_some((name, c))
            })
            .collect();
        r.row(vec![
            e.index.into(),
            e.label.into(),
            e.nu.into(),
            e.lambda.into(),
            parity_name(e.parity).into(),
            block_name(e.block).into(),
            Cell::Terms(terms),
        ]);
    }
    Ok(r)
}

fn potential(cfg: &RunConfig) -> Result<Report, CliError> {
    let subject = subject(cfg)?;
    let mut r = Report::new("potential", &["x", "v"]);
    echo(&mut r, cfg);
    let length = if cfg.full_period { 2.0 * PI } else { PI };
    r.meta(
        "period_fraction",
        if cfg.full_period {
            "full [0, 2pi]"
        } else {
            "half [0, pi]"
        },
    );
    if let Some(op) = &subject.operator {
        r.meta("margin", op.margin);
    }
    let n = cfg.samples;
    for i in 0..n {
        let x = length * i as f64 / (n - 1) as f64;
        r.row(vec![x.into(), subject.u.eval(x).into()]);
    }
    Ok(r)
}

/// Default lambda window: from just below the ground state to past the
/// highest solvable level.
fn default_window(subject: &Subject) -> (f64, f64) {
    match &subject.spectrum {
        Some(spec) => {
            let first = spec.entries[0].lambda;
            let last = spec.entries.last().map_or(first, |e| e.lambda);
            (first - 1.0, last + 20.0)
        }
        None => (-1.0, 50.0),
    }
}

fn discriminant(cfg: &RunConfig) -> Result<Report, CliError> {
    let subject = subject(cfg)?;
    let (lo, hi) = default_window(&subject);
    let (lo, hi) = (cfg.lmin.unwrap_or(lo), cfg.lmax.unwrap_or(hi));
    if !(lo < hi) {
        return Err(CliError::Validation(format!(
            "empty lambda window [{lo}, {hi}]"
        )));
    }
    let scan = discriminant_scan(&subject.u, lo, hi, cfg.samples, cfg.tol)?;
    let mut r = Report::new("discriminant", &["lambda", "delta", "det_error"]);
    echo(&mut r, cfg);
    r.meta("lmin", lo)
        .meta("lmax", hi)
        .meta("samples", cfg.samples)
        .meta("tol", cfg.tol);
    for sample in scan {
        r.row(vec![
            sample.lambda.into(),
            sample.delta.into(),
            sample.det_error.into(),
        ]);
    }
    Ok(r)
}

fn band_options(cfg: &RunConfig) -> BandOptions<f64> {
    BandOptions {
        tol: cfg.tol,
        closure_tol: cfg.closure_tol,
        ..BandOptions::default()
    }
}

fn gap_report(cfg: &RunConfig, u: &PotentialFn<f64>) -> Result<GapReport<f64>, CliError> {
    let opts = band_options(cfg);
    let mut report = match cfg.lmax {
        Some(lmax) => band_edges_with(u, lmax, &opts)?,
        None => gaps_up_to(u, cfg.ngaps, &opts)?,
    };
    report.gaps.truncate(cfg.ngaps);
    Ok(report)
}

fn index_list(xs: &[usize]) -> String {
    if xs.is_empty() {
        "none".into()
    } else {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn gaps(cfg: &RunConfig) -> Result<Report, CliError> {
    let subject = subject(cfg)?;
    let report = gap_report(cfg, &subject.u)?;
    let prediction = predicted_open(cfg.params.map(|p| p.s()));
    let mut r = Report::new(
        "gaps",
        &[
            "gap",
            "left",
            "right",
            "width",
            "closed",
            "kind",
            "predicted",
            "agrees",
        ],
    );
    echo(&mut r, cfg);
    let mut disagreements = 0;
    let (mut open, mut closed) = (Vec::new(), Vec::new());
    for g in &report.gaps {
        let predicted = prediction.is_open(g.index);
        let agrees = predicted.map(|o| o != g.closed);
        if agrees == Some(false) {
            disagreements += 1;
        }
        if g.closed {
            closed.push(g.index);
        } else {
            open.push(g.index);
        }
        r.row(vec![
            g.index.into(),
            g.left.into(),
            g.right.into(),
            g.width.into(),
            g.closed.into(),
            kind_name(g.kind).into(),
            predicted
                .map(|o| if o { "open" } else { "closed" })
                .unwrap_or("not forced")
                .into(),
            agrees.into(),
        ]);
    }
    r.meta("lambda0", report.lambda0)
        .meta("closure_tol", report.closure_tol);
    r.meta("prediction", prediction.describe());
    r.meta(
        "observed",
        format!("open {}; closed {}", index_list(&open), index_list(&closed)),
    );
    r.meta("pattern_matches", disagreements == 0);
    Ok(r)
}

fn location_cells(loc: DirichletLocation) -> (&'static str, Option<usize>, Option<&'static str>) {
    match loc {
        DirichletLocation::Edge { gap, edge } => ("edge", Some(gap), Some(edge_name(edge))),
        DirichletLocation::ClosedGap { gap } => ("closed-gap", Some(gap), None),
        DirichletLocation::Interior { gap } => ("interior", Some(gap), None),
        DirichletLocation::Band => ("band", None, None),
    }
}

fn dirichlet(cfg: &RunConfig) -> Result<Report, CliError> {
    let subject = subject(cfg)?;
    let report = gap_report(cfg, &subject.u)?;
    let last = report
        .gaps
        .last()
        .map_or(report.lambda0 + 10.0, |g| g.right + 1.0);
    let (lo, hi) = (
        cfg.lmin.unwrap_or(report.lambda0 - 1.0),
        cfg.lmax.unwrap_or(last),
    );
    if !(lo < hi) {
        return Err(CliError::Validation(format!(
            "empty lambda window [{lo}, {hi}]"
        )));
    }
    let gammas = dirichlet_eigenvalues(&subject.u, lo, hi, cfg.tol)?;
    let located = classify_dirichlet(&gammas, &report, EDGE_MATCH_TOL);

    // predicted side per Floquet gap index
    let predicted: Vec<(usize, GapEdge)> = match (cfg.params, &cfg.cluster) {
        (Some(p), set) => {
            let set = set.clone().unwrap_or_else(|| ClusterSet::empty(p.s()));
            if set.is_cluster() {
                dirichlet_edge_prediction(&set)?
                    .into_iter()
                    .enumerate()
                    .map(|(i, e)| (floquet_gap_index(p.s(), i + 1), e))
                    .collect()
            } else {
                Vec::new()
            }
        }
        (None, _) => Vec::new(),
    };

    let mut r = Report::new(
        "dirichlet",
        &[
            "gamma",
            "location",
            "gap",
            "edge",
            "offset",
            "predicted",
            "agrees",
        ],
    );
    echo(&mut r, cfg);
    r.meta("lmin", lo)
        .meta("lmax", hi)
        .meta("edge_tol", EDGE_MATCH_TOL);
    let mut disagreements = 0;
    for d in &located {
        let (location, gap, edge) = location_cells(d.location);
        let expected = gap
            .and_then(|g| predicted.iter().find(|(i, _)| *i == g))
            .map(|(_, e)| edge_name(*e));
        let agrees = expected.map(|e| Some(e) == edge);
        if agrees == Some(false) {
            disagreements += 1;
        }
        r.row(vec![
            d.gamma.into(),
            location.into(),
            gap.into(),
            edge.into(),
            d.offset.into(),
            expected.into(),
            agrees.into(),
        ]);
    }
    r.meta("prediction_matches", disagreements == 0);
    Ok(r)
}

fn clusters(cfg: &RunConfig) -> Result<Report, CliError> {
    let p = params(cfg)?;
    let spec = solvable_spectrum(&p)?;
    let mut r = Report::new(
        "clusters",
        &["cluster", "size", "regular", "margin", "dirichlet_edges"],
    );
    echo(&mut r, cfg);
    r.meta("include_zero", cfg.include_zero_cluster);
    for set in enumerate_clusters(p.s(), cfg.include_zero_cluster) {
        let op = TransformedOperator::new(&spec, &set)?;
        let edges = op
            .edges
            .as_ref()
            .map(|es| {
                es.iter()
                    .enumerate()
                    .map(|(i, e)| {
                        format!("gap{}={}", floquet_gap_index(p.s(), i + 1), edge_name(*e))
                    })
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        r.row(vec![
            Cell::Labels(set.indices().to_vec()),
            set.k().into(),
            op.regular.into(),
            op.margin.into(),
            edges.into(),
        ]);
    }
    Ok(r)
}
