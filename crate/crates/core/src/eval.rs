//! Per-timestep evaluation of an estimated trajectory against ground truth.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{lospa, MetricKind, SolverBackend};
use crate::params::LospaParams;
use crate::state::Permutation;
use crate::trajectory::Trajectory;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepResult {
    pub k: i64,
    #[serde(with = "crate::numfmt::sig17")]
    pub lospa: f64,
    #[serde(with = "crate::numfmt::sig17")]
    pub ospa: f64,
    /// One-based; entry `j` is the truth target paired with estimated target `j`.
    pub optimal_perm: Permutation,
}

/// Summaries over timesteps. These are a convenience of this tool, not part
/// of the metric, which is defined per instant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregates {
    pub note: String,
    #[serde(with = "crate::numfmt::sig17")]
    pub mean_lospa: f64,
    #[serde(with = "crate::numfmt::sig17")]
    pub max_lospa: f64,
    #[serde(with = "crate::numfmt::sig17")]
    pub mean_ospa: f64,
}

pub const AGGREGATE_NOTE: &str =
    "time aggregates (mean/max over timesteps) are not part of the per-instant metric";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub params: LospaParams,
    pub kind: MetricKind,
    pub t: usize,
    pub nx: usize,
    pub per_step: Vec<StepResult>,
    pub aggregates: Aggregates,
}

impl EvalReport {
    /// Pretty JSON with every real printed to 17 significant digits.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are finite");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            record: 0,
            line: e.line() as u64,
            message: e.to_string(),
        })
    }
}

/// Evaluates `d(estimate^k, truth^k)` at every common time index `k`, once
/// with `params` and once with `alpha = 0`.
pub fn evaluate(
    truth: &Trajectory,
    estimate: &Trajectory,
    params: &LospaParams,
    backend: SolverBackend,
) -> Result<EvalReport> {
    let truth_ks: BTreeSet<i64> = truth.steps().iter().map(|s| s.k).collect();
    let est_ks: BTreeSet<i64> = estimate.steps().iter().map(|s| s.k).collect();
    if truth_ks != est_ks {
        return Err(Error::TimestepMismatch {
            missing_in_truth: est_ks.difference(&truth_ks).copied().collect(),
            missing_in_estimate: truth_ks.difference(&est_ks).copied().collect(),
        });
    }
    let (ts, es) = (truth.shape(), estimate.shape());
    if ts.t != es.t {
        return Err(Error::DimensionMismatch {
            what: "number of targets",
            left: es.t,
            right: ts.t,
        });
    }
    if ts.nx != es.nx {
        return Err(Error::DimensionMismatch {
            what: "target state dimension",
            left: es.nx,
            right: ts.nx,
        });
    }

    let ospa_params = params.with_alpha(0.0)?;
    // Both trajectories are sorted by k and share the same index set.
    let per_step = truth
        .steps()
        .iter()
        .zip(estimate.steps())
        .map(|(tr, est)| {
            debug_assert_eq!(tr.k, est.k);
            let labelled = lospa(&est.state, &tr.state, params, backend)?;
            let ospa = lospa(&est.state, &tr.state, &ospa_params, backend)?;
            Ok(StepResult {
                k: tr.k,
                lospa: labelled.distance,
                ospa: ospa.distance,
                optimal_perm: labelled.optimal_perm,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let n = per_step.len() as f64;
    let aggregates = Aggregates {
        note: AGGREGATE_NOTE.into(),
        mean_lospa: per_step.iter().map(|s| s.lospa).sum::<f64>() / n,
        max_lospa: per_step.iter().map(|s| s.lospa).fold(0.0, f64::max),
        mean_ospa: per_step.iter().map(|s| s.ospa).sum::<f64>() / n,
    };

    Ok(EvalReport {
        params: *params,
        kind: if params.alpha() > 0.0 {
            MetricKind::Lospa
        } else {
            MetricKind::Ospa
        },
        t: ts.t,
        nx: ts.nx,
        per_step,
        aggregates,
    })
}
