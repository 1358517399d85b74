//! Built-in three-target scenario: truth `[-10, 0, 10]`, Euclidean base
//! metric, `p = 2`, and three estimates that locate every target to within
//! 0.1 but label them differently.

use crate::constants::DEMO_ABS_TOL;
use crate::metric::{lospa, ospa_no_cutoff, SolverBackend};
use crate::params::{BaseMetric, LospaParams};
use crate::state::MultiTargetState;

pub const TRUTH: [f64; 3] = [-10.0, 0.0, 10.0];

pub const ESTIMATES: [[f64; 3]; 3] = [[-10.1, 0.1, 10.1], [0.1, -10.1, 10.1], [10.1, -10.1, 0.1]];

pub const ALPHAS: [f64; 2] = [0.1, 1.0];

pub const P: f64 = 2.0;

/// Closed-form LOSPA for each estimate (rows) and alpha (columns).
pub fn expected_table() -> [[f64; 2]; 3] {
    [
        [0.1, 0.1],
        [
            (0.1f64.powi(2) + 0.02 / 3.0).sqrt(),
            (0.1f64.powi(2) + 2.0 / 3.0).sqrt(),
        ],
        [
            (0.1f64.powi(2) + 0.03 / 3.0).sqrt(),
            (0.1f64.powi(2) + 1.0).sqrt(),
        ],
    ]
}

/// Every target is off by 0.1, so OSPA is 0.1 for all three estimates.
pub const EXPECTED_OSPA: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct DemoCell {
    pub row: usize,
    pub estimate: [f64; 3],
    pub alpha: f64,
    pub expected: f64,
    pub computed: f64,
}

impl DemoCell {
    pub fn abs_error(&self) -> f64 {
        (self.computed - self.expected).abs()
    }

    pub fn passed(&self) -> bool {
        self.abs_error() <= DEMO_ABS_TOL
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DemoOutcome {
    pub cells: Vec<DemoCell>,
    /// OSPA of each estimate.
    pub ospa: Vec<f64>,
}

impl DemoOutcome {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(DemoCell::passed)
            && self
                .ospa
                .iter()
                .all(|o| (o - EXPECTED_OSPA).abs() <= DEMO_ABS_TOL)
    }

    pub fn render(&self) -> String {
        let mut out = String::from("truth = [-10, 0, 10], p = 2, Euclidean base metric\n\n");
        out.push_str(&format!(
            "{:<22} {:>6} {:>20} {:>20} {:>10} {:>6}\n",
            "estimate", "alpha", "expected", "computed", "|err|", "ok"
        ));
        for c in &self.cells {
            out.push_str(&format!(
                "{:<22} {:>6} {:>20.17} {:>20.17} {:>10.1e} {:>6}\n",
                format!("{:?}", c.estimate),
                c.alpha,
                c.expected,
                c.computed,
                c.abs_error(),
                if c.passed() { "yes" } else { "NO" }
            ));
        }
        out.push('\n');
        for (row, o) in self.ospa.iter().enumerate() {
            out.push_str(&format!(
                "OSPA (alpha = 0) of estimate {}: {:.17} (expected {EXPECTED_OSPA})\n",
                row + 1,
                o
            ));
        }
        out
    }
}

pub fn run_demo() -> DemoOutcome {
    let truth = MultiTargetState::from_scalars(&TRUTH).expect("finite");
    let expected = expected_table();
    let mut cells = Vec::with_capacity(6);
    let mut ospa = Vec::with_capacity(3);
    for (row, est) in ESTIMATES.iter().enumerate() {
        let x = MultiTargetState::from_scalars(est).expect("finite");
        for (col, &alpha) in ALPHAS.iter().enumerate() {
            let params = LospaParams::new(P, alpha, BaseMetric::Euclidean).expect("valid");
            let computed = lospa(&x, &truth, &params, SolverBackend::OptimalAssignment)
                .expect("shapes match")
                .distance;
            cells.push(DemoCell {
                row: row + 1,
                estimate: *est,
                alpha,
                expected: expected[row][col],
                computed,
            });
        }
        ospa.push(
            ospa_no_cutoff(
                &x,
                &truth,
                P,
                BaseMetric::Euclidean,
                SolverBackend::OptimalAssignment,
            )
            .expect("shapes match"),
        );
    }
    DemoOutcome { cells, ospa }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_passes() {
        let outcome = run_demo();
        assert_eq!(outcome.cells.len(), 6);
        assert!(outcome.passed(), "{}", outcome.render());
    }

    #[test]
    fn expected_values_match_decimals() {
        let e = expected_table();
        assert!((e[1][0] - 0.1290994).abs() < 1e-7);
        assert!((e[1][1] - 0.8225975).abs() < 1e-7);
        assert!((e[2][0] - 0.1414214).abs() < 1e-7);
        assert!((e[2][1] - 1.0049876).abs() < 1e-7);
    }

    #[test]
    fn demo_cells_in_order() {
        let outcome = run_demo();
        let rows_alphas: Vec<(usize, f64)> =
            outcome.cells.iter().map(|c| (c.row, c.alpha)).collect();
        assert_eq!(
            rows_alphas,
            vec![(1, 0.1), (1, 1.0), (2, 0.1), (2, 1.0), (3, 0.1), (3, 1.0)]
        );
        assert!(outcome.render().contains("yes"));
    }
}
