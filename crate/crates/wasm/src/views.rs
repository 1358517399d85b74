use serde::Serialize;

use lospa_core::demo::{ESTIMATES, TRUTH};
use lospa_core::{
    build_cost_matrix, lospa, BaseMetric, Error, LospaParams, MultiTargetState, Result,
    SolverBackend,
};

pub trait ToJson: Serialize {
    fn to_json(&self) -> String {
        serde_json::to_string(self).expect("finite values")
    }
}

#[derive(Debug, Serialize)]
pub struct TableRow {
    pub estimate: Vec<f64>,
    pub lospa: f64,
    pub ospa: f64,
    pub perm: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct TableView {
    pub truth: Vec<f64>,
    pub p: f64,
    pub alpha: f64,
    pub rows: Vec<TableRow>,
}

impl ToJson for TableView {}

#[derive(Debug, Serialize)]
pub struct DistanceView {
    pub lospa: f64,
    pub ospa: f64,
    pub kind: lospa_core::MetricKind,
    /// One-based pairing of estimate targets to truth targets.
    pub perm: Vec<usize>,
    pub ospa_perm: Vec<usize>,
    pub cost_matrix: Vec<Vec<f64>>,
}

impl ToJson for DistanceView {}

#[derive(Debug, Serialize)]
pub struct SweepView {
    pub alpha: Vec<f64>,
    pub lospa: Vec<f64>,
    pub ospa: f64,
}

impl ToJson for SweepView {}

fn params(p: f64, alpha: f64, metric: &str) -> Result<LospaParams> {
    LospaParams::new(p, alpha, metric.parse::<BaseMetric>()?)
}

pub fn table(p: f64, alpha: f64) -> Result<TableView> {
    let labelled = params(p, alpha, "euclidean")?;
    let unlabelled = labelled.with_alpha(0.0)?;
    let truth = MultiTargetState::from_scalars(&TRUTH)?;
    let rows = ESTIMATES
        .iter()
        .map(|est| {
            let x = MultiTargetState::from_scalars(est)?;
            let l = lospa(&x, &truth, &labelled, SolverBackend::OptimalAssignment)?;
            let o = lospa(&x, &truth, &unlabelled, SolverBackend::OptimalAssignment)?;
            Ok(TableRow {
                estimate: est.to_vec(),
                lospa: l.distance,
                ospa: o.distance,
                perm: l.optimal_perm.one_based(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TableView {
        truth: TRUTH.to_vec(),
        p,
        alpha,
        rows,
    })
}

fn states(est: &[f64], truth: &[f64], nx: usize) -> Result<(MultiTargetState, MultiTargetState)> {
    Ok((
        MultiTargetState::from_flat(est, nx)?,
        MultiTargetState::from_flat(truth, nx)?,
    ))
}

pub fn distance(
    est: &[f64],
    truth: &[f64],
    nx: usize,
    p: f64,
    alpha: f64,
    metric: &str,
) -> Result<DistanceView> {
    let (x, y) = states(est, truth, nx)?;
    let labelled = params(p, alpha, metric)?;
    let l = lospa(&x, &y, &labelled, SolverBackend::OptimalAssignment)?;
    let o = lospa(
        &x,
        &y,
        &labelled.with_alpha(0.0)?,
        SolverBackend::OptimalAssignment,
    )?;
    let costs = build_cost_matrix(&x, &y, &labelled)?;
    Ok(DistanceView {
        lospa: l.distance,
        ospa: o.distance,
        kind: l.kind,
        perm: l.optimal_perm.one_based(),
        ospa_perm: o.optimal_perm.one_based(),
        cost_matrix: costs.rows().map(<[f64]>::to_vec).collect(),
    })
}

pub fn alpha_sweep(
    est: &[f64],
    truth: &[f64],
    nx: usize,
    p: f64,
    metric: &str,
    alpha_max: f64,
    samples: usize,
) -> Result<SweepView> {
    if samples < 2 {
        return Err(Error::InvalidParameter("need at least 2 samples".into()));
    }
    if !(alpha_max.is_finite() && alpha_max > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha_max must be positive, got {alpha_max}"
        )));
    }
    let (x, y) = states(est, truth, nx)?;
    let base = params(p, 0.0, metric)?;
    let alpha: Vec<f64> = (0..samples)
        .map(|i| alpha_max * i as f64 / (samples - 1) as f64)
        .collect();
    let lospa_values = alpha
        .iter()
        .map(|&a| {
            Ok(lospa(
                &x,
                &y,
                &base.with_alpha(a)?,
                SolverBackend::OptimalAssignment,
            )?
            .distance)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepView {
        ospa: lospa_values[0],
        alpha,
        lospa: lospa_values,
    })
}
