//! The LOSPA distance over multitarget state vectors and its OSPA (`alpha = 0`)
//! special case.

use serde::{Deserialize, Serialize};

pub use crate::assignment::SolverBackend;
use crate::assignment::{self, CostMatrix};
use crate::error::{Error, Result};
use crate::params::{BaseMetric, LospaParams};
use crate::state::{MultiTargetState, Permutation, TargetState};

/// Whether a distance penalises labelling errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    /// `alpha > 0`.
    Lospa,
    /// `alpha = 0`: OSPA without cut-off, blind to labels.
    Ospa,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LospaResult {
    pub distance: f64,
    /// `optimal_perm[j]` is the index in the second argument paired with
    /// target `j` of the first.
    pub optimal_perm: Permutation,
    /// Minimised sum of cost-matrix entries, equal to `t * distance^p`.
    pub total_cost: f64,
    pub kind: MetricKind,
}

/// Distance `b(x, y)` under the configured base metric.
pub fn base_distance(x: &TargetState, y: &TargetState, params: &LospaParams) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            what: "target state dimension",
            left: x.dim(),
            right: y.dim(),
        });
    }
    Ok(metric_unchecked(
        x.coords(),
        y.coords(),
        params.base_metric(),
    ))
}

fn metric_unchecked(x: &[f64], y: &[f64], metric: BaseMetric) -> f64 {
    let diffs = x.iter().zip(y).map(|(a, b)| (a - b).abs());
    match metric {
        BaseMetric::Euclidean => diffs.map(|d| d * d).sum::<f64>().sqrt(),
        BaseMetric::PNorm(1.0) => diffs.sum(),
        BaseMetric::PNorm(q) => diffs.map(|d| d.powf(q)).sum::<f64>().powf(q.recip()),
    }
}

/// `b(x, y)^p`; Euclidean with `p = 2` skips the square root.
pub(crate) fn powered_distance(x: &[f64], y: &[f64], params: &LospaParams) -> f64 {
    let p = params.p();
    match params.base_metric() {
        BaseMetric::Euclidean if p == 2.0 => x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum(),
        metric => metric_unchecked(x, y, metric).powf(p),
    }
}

fn check_shapes(a: &MultiTargetState, b: &MultiTargetState) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            what: "number of targets",
            left: a.len(),
            right: b.len(),
        });
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            what: "target state dimension",
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

/// `C[j][k] = b(a_j, b_k)^p + alpha^p * [j != k]`.
pub fn build_cost_matrix(
    a: &MultiTargetState,
    b: &MultiTargetState,
    params: &LospaParams,
) -> Result<CostMatrix> {
    check_shapes(a, b)?;
    let penalty = params.label_penalty();
    CostMatrix::from_fn(a.len(), |j, k| {
        let loc = powered_distance(a[j].coords(), b[k].coords(), params);
        if j == k {
            loc
        } else {
            loc + penalty
        }
    })
}

/// LOSPA distance between two multitarget state vectors.
pub fn lospa(
    a: &MultiTargetState,
    b: &MultiTargetState,
    params: &LospaParams,
    backend: SolverBackend,
) -> Result<LospaResult> {
    let costs = build_cost_matrix(a, b, params)?;
    finish(&costs, params, backend)
}

/// Solves the assignment over `costs` and turns the minimum into a distance.
pub(crate) fn finish(
    costs: &CostMatrix,
    params: &LospaParams,
    backend: SolverBackend,
) -> Result<LospaResult> {
    let solution = assignment::solve(costs, backend)?;
    let t = costs.size() as f64;
    let mean = solution.total_cost / t;
    let distance = if params.p() == 2.0 {
        mean.sqrt()
    } else {
        mean.powf(params.p().recip())
    };
    Ok(LospaResult {
        distance,
        optimal_perm: solution.perm,
        total_cost: solution.total_cost,
        kind: if params.alpha() > 0.0 {
            MetricKind::Lospa
        } else {
            MetricKind::Ospa
        },
    })
}

/// OSPA distance without cut-off, i.e. [`lospa`] with `alpha = 0`.
pub fn ospa_no_cutoff(
    a: &MultiTargetState,
    b: &MultiTargetState,
    p: f64,
    base_metric: BaseMetric,
    backend: SolverBackend,
) -> Result<f64> {
    let params = LospaParams::new(p, 0.0, base_metric)?;
    Ok(lospa(a, b, &params, backend)?.distance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn scalars(xs: &[f64]) -> MultiTargetState {
        MultiTargetState::from_scalars(xs).unwrap()
    }

    fn euclid(p: f64, alpha: f64) -> LospaParams {
        LospaParams::new(p, alpha, BaseMetric::Euclidean).unwrap()
    }

    const TRUTH: [f64; 3] = [-10.0, 0.0, 10.0];

    #[test]
    fn base_distance_examples() {
        let params = euclid(2.0, 1.0);
        let s = |v: &[f64]| TargetState::new(v.to_vec()).unwrap();
        assert_eq!(base_distance(&s(&[0.0]), &s(&[0.0]), &params).unwrap(), 0.0);
        assert_abs_diff_eq!(
            base_distance(&s(&[-10.1]), &s(&[-10.0]), &params).unwrap(),
            0.1,
            epsilon = 1e-12
        );
        assert_eq!(
            base_distance(&s(&[3.0, 4.0]), &s(&[0.0, 0.0]), &params).unwrap(),
            5.0
        );
        let err = base_distance(&s(&[1.0]), &s(&[1.0, 2.0]), &params).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                left: 1,
                right: 2,
                ..
            }
        ));
    }

    #[test]
    fn pnorm_base_metrics() {
        let s = |v: &[f64]| TargetState::new(v.to_vec()).unwrap();
        let l1 = LospaParams::new(1.0, 0.0, BaseMetric::PNorm(1.0)).unwrap();
        assert_eq!(
            base_distance(&s(&[3.0, -4.0]), &s(&[0.0, 0.0]), &l1).unwrap(),
            7.0
        );
        let l2 = LospaParams::new(1.0, 0.0, BaseMetric::PNorm(2.0)).unwrap();
        assert_abs_diff_eq!(
            base_distance(&s(&[3.0, 4.0]), &s(&[0.0, 0.0]), &l2).unwrap(),
            5.0,
            epsilon = 1e-12
        );
        let l3 = LospaParams::new(1.0, 0.0, BaseMetric::PNorm(3.0)).unwrap();
        assert_abs_diff_eq!(
            base_distance(&s(&[1.0, 1.0]), &s(&[0.0, 0.0]), &l3).unwrap(),
            2f64.powf(1.0 / 3.0),
            epsilon = 1e-12
        );
    }

    #[test]
    fn cost_matrix_examples() {
        let x = scalars(&TRUTH);
        let c = build_cost_matrix(&x, &x, &euclid(2.0, 0.0)).unwrap();
        for j in 0..3 {
            assert_eq!(c.get(j, j), 0.0);
        }
        // 0-based (0, 1) is one-based entry [1][2]
        assert_eq!(c.get(0, 1), 100.0);

        let c = build_cost_matrix(
            &scalars(&[0.0, 10.0]),
            &scalars(&[10.0, 0.0]),
            &euclid(2.0, 1.0),
        )
        .unwrap();
        assert_eq!(
            c,
            CostMatrix::from_rows(&[[100.0, 1.0], [1.0, 100.0]]).unwrap()
        );

        let c = build_cost_matrix(
            &scalars(&[-10.1, 0.1, 10.1]),
            &scalars(&TRUTH),
            &euclid(2.0, 0.1),
        )
        .unwrap();
        for j in 0..3 {
            assert_abs_diff_eq!(c.get(j, j), 0.01, epsilon = 1e-12);
        }
    }

    #[test]
    fn cost_matrix_shape_errors() {
        let params = euclid(2.0, 1.0);
        assert!(matches!(
            build_cost_matrix(&scalars(&[1.0, 2.0]), &scalars(&[1.0]), &params),
            Err(Error::DimensionMismatch {
                what: "number of targets",
                ..
            })
        ));
        let two_d = MultiTargetState::from_rows(&[[1.0, 2.0]]).unwrap();
        assert!(matches!(
            build_cost_matrix(&scalars(&[1.0]), &two_d, &params),
            Err(Error::DimensionMismatch {
                what: "target state dimension",
                ..
            })
        ));
    }

    #[test]
    fn table_row_one() {
        let r = lospa(
            &scalars(&[-10.1, 0.1, 10.1]),
            &scalars(&TRUTH),
            &euclid(2.0, 0.1),
            SolverBackend::default(),
        )
        .unwrap();
        assert_abs_diff_eq!(r.distance, 0.1, epsilon = 1e-12);
        assert!(r.optimal_perm.is_identity());
        assert_eq!(r.kind, MetricKind::Lospa);
    }

    #[test]
    fn table_rows_two_and_three() {
        let row2 = scalars(&[0.1, -10.1, 10.1]);
        let row3 = scalars(&[10.1, -10.1, 0.1]);
        let truth = scalars(&TRUTH);
        for backend in [
            SolverBackend::brute_force(),
            SolverBackend::OptimalAssignment,
        ] {
            let r = lospa(&row2, &truth, &euclid(2.0, 1.0), backend).unwrap();
            assert_abs_diff_eq!(r.distance, (0.01f64 + 2.0 / 3.0).sqrt(), epsilon = 1e-9);
            assert_abs_diff_eq!(r.distance, 0.8225975, epsilon = 1e-7);
            let r = lospa(&row3, &truth, &euclid(2.0, 0.1), backend).unwrap();
            assert_abs_diff_eq!(r.distance, 0.02f64.sqrt(), epsilon = 1e-9);
            assert_abs_diff_eq!(r.distance, 0.1414214, epsilon = 1e-7);
        }
    }

    #[test]
    fn two_target_swap() {
        let r = lospa(
            &scalars(&[0.0, 10.0]),
            &scalars(&[10.0, 0.0]),
            &euclid(2.0, 1.0),
            SolverBackend::brute_force(),
        )
        .unwrap();
        assert_eq!(r.distance, 1.0);
        assert_eq!(r.total_cost, 2.0);
        assert_eq!(r.optimal_perm.one_based(), vec![2, 1]);
    }

    #[test]
    fn identity_is_exactly_zero() {
        let x = MultiTargetState::from_rows(&[[1.5, -2.0], [1.5, -2.0], [7.0, 3.25]]).unwrap();
        for alpha in [0.0, 0.1, 10.0] {
            let r = lospa(&x, &x, &euclid(1.5, alpha), SolverBackend::default()).unwrap();
            assert_eq!(r.distance, 0.0);
        }
        let r = lospa(&x, &x, &euclid(3.0, 1.0), SolverBackend::default()).unwrap();
        assert!(r.optimal_perm.is_identity());
    }

    #[test]
    fn single_target_is_base_distance() {
        let a = MultiTargetState::from_rows(&[[0.0, 0.0]]).unwrap();
        let b = MultiTargetState::from_rows(&[[3.0, 4.0]]).unwrap();
        for p in [1.0, 2.0, 3.0] {
            let r = lospa(&a, &b, &euclid(p, 5.0), SolverBackend::default()).unwrap();
            assert_abs_diff_eq!(r.distance, 5.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn ospa_examples() {
        let truth = scalars(&TRUTH);
        for est in [[-10.1, 0.1, 10.1], [0.1, -10.1, 10.1], [10.1, -10.1, 0.1]] {
            let d = ospa_no_cutoff(
                &scalars(&est),
                &truth,
                2.0,
                BaseMetric::Euclidean,
                SolverBackend::default(),
            )
            .unwrap();
            assert_abs_diff_eq!(d, 0.1, epsilon = 1e-12);
        }
        assert_eq!(
            ospa_no_cutoff(
                &truth,
                &truth,
                2.0,
                BaseMetric::Euclidean,
                SolverBackend::default()
            )
            .unwrap(),
            0.0
        );
        let r = lospa(&truth, &truth, &euclid(2.0, 0.0), SolverBackend::default()).unwrap();
        assert_eq!(r.kind, MetricKind::Ospa);
    }

    #[test]
    fn brute_force_cap_surfaces() {
        let xs: Vec<f64> = (0..9).map(f64::from).collect();
        let x = scalars(&xs);
        let err = lospa(&x, &x, &euclid(2.0, 1.0), SolverBackend::brute_force()).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { t: 9, cap: 8 }));
        assert!(lospa(
            &x,
            &x,
            &euclid(2.0, 1.0),
            SolverBackend::BruteForce { cap: 9 }
        )
        .is_ok());
    }

    #[test]
    fn total_cost_reproduces_distance() {
        let a = scalars(&[3.0, -1.0, 4.0, 1.0, -5.0]);
        let b = scalars(&[9.0, 2.0, -6.0, 5.0, 3.0]);
        let params = euclid(3.0, 2.0);
        let r = lospa(&a, &b, &params, SolverBackend::default()).unwrap();
        let c = build_cost_matrix(&a, &b, &params).unwrap();
        let recomputed = c.total_cost(&r.optimal_perm);
        let expected = 5.0 * r.distance.powf(3.0);
        assert!((recomputed - expected).abs() <= 1e-12 * expected);
    }
}
