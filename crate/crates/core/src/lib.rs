//! Labelled OSPA (LOSPA) distance between multitarget state vectors when the
//! number of targets is fixed and known.
//!
//! A multitarget state is an ordered list of `t` per-target state vectors;
//! the position of each target in the list is its label. The distance between
//! two such states is
//!
//! ```text
//! d(A, B) = ( (1/t) * min_phi sum_j [ b(a_j, b_phi(j))^p + alpha^p * [j != phi(j)] ] )^(1/p)
//! ```
//!
//! where the minimum runs over all permutations `phi` of the targets and `b`
//! is a metric on the single-target state space. With `alpha = 0` this is the
//! OSPA distance without cut-off.
//!
//! The minimisation is a linear assignment problem, solved either exactly in
//! `O(t^3)` ([`assignment::solve_optimal`]) or by exhaustive enumeration
//! ([`assignment::solve_brute_force`]), which serves as an oracle.
//!
//! ```
//! use lospa_core::{lospa, BaseMetric, LospaParams, MultiTargetState, SolverBackend};
//!
//! let truth = MultiTargetState::from_scalars(&[-10.0, 0.0, 10.0]).unwrap();
//! let est = MultiTargetState::from_scalars(&[-10.1, 0.1, 10.1]).unwrap();
//! let params = LospaParams::new(2.0, 0.1, BaseMetric::Euclidean).unwrap();
//! let res = lospa(&est, &truth, &params, SolverBackend::OptimalAssignment).unwrap();
//! assert!((res.distance - 0.1).abs() < 1e-12);
//! ```

pub mod assignment;
pub mod constants;
pub mod demo;
mod error;
pub mod eval;
pub mod labelled;
pub mod metric;
mod numfmt;
mod params;
mod state;
pub mod trajectory;

pub use assignment::{AssignmentSolution, CostMatrix};
pub use error::{Error, Result};
pub use eval::{evaluate, EvalReport};
pub use labelled::{LabelledSet, LabelledTarget};
pub use metric::{
    base_distance, build_cost_matrix, lospa, ospa_no_cutoff, LospaResult, MetricKind, SolverBackend,
};
pub use params::{BaseMetric, LospaParams};
pub use state::{MultiTargetState, Permutation, TargetState};
pub use trajectory::{load_trajectory, Trajectory, TrajectoryFormat};
