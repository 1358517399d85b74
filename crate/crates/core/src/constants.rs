//! Numeric tolerances shared by the library, its tests and its documentation.

/// Relative tolerance for symmetry `d(A,B) = d(B,A)` and for recomputing the
/// optimal total cost from a returned permutation.
pub const SYMMETRY_REL_TOL: f64 = 1e-12;

/// Relative tolerance when comparing the polynomial solver against the
/// exhaustive oracle, and across solver backends.
pub const BACKEND_REL_TOL: f64 = 1e-10;

/// Absolute slack allowed in the triangle inequality.
pub const TRIANGLE_ABS_SLACK: f64 = 1e-9;

/// Absolute tolerance of the built-in demo gate.
pub const DEMO_ABS_TOL: f64 = 1e-9;

/// Absolute tolerance between the set-domain and vector-domain distances.
pub const SET_EQUIVALENCE_ABS_TOL: f64 = 1e-12;

/// Largest `t` accepted by the exhaustive solver unless overridden
/// (`8! = 40320` permutations).
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 8;

/// Environment variable read by the CLI to override [`DEFAULT_BRUTE_FORCE_CAP`].
pub const BRUTE_CAP_ENV: &str = "LOSPA_BRUTE_CAP";

/// Relative slack when checking that the distance does not decrease as
/// `alpha` grows. Pairings with equal cost in exact arithmetic can differ by
/// an ulp in floating point, and the solver may return either.
pub const ALPHA_MONOTONE_REL_TOL: f64 = 1e-12;
