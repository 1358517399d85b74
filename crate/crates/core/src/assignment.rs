//! Linear assignment over a square cost matrix: find the permutation `phi`
//! minimising `sum_j C[j][phi(j)]`.
//!
//! Two solvers are provided. [`solve_brute_force`] enumerates all `t!`
//! permutations and is used as an oracle for small `t`. [`solve_optimal`] is a
//! shortest-augmenting-path (Hungarian) method with dual potentials running
//! in `O(t^3)`.

use std::fmt;

use crate::constants::DEFAULT_BRUTE_FORCE_CAP;
use crate::error::{Error, Result};
use crate::state::Permutation;

/// Dense `t x t` matrix of finite, non-negative pairing costs.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    t: usize,
    entries: Vec<f64>,
}

impl CostMatrix {
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let t = rows.len();
        if t == 0 {
            return Err(Error::Empty("cost matrix"));
        }
        let mut entries = Vec::with_capacity(t * t);
        for row in rows {
            let row = row.as_ref();
            if row.len() != t {
                return Err(Error::DimensionMismatch {
                    what: "cost matrix row length vs t",
                    left: row.len(),
                    right: t,
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_entries(t, entries)
    }

    pub fn from_fn(t: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        if t == 0 {
            return Err(Error::Empty("cost matrix"));
        }
        let entries = (0..t * t).map(|i| f(i / t, i % t)).collect();
        Self::from_entries(t, entries)
    }

    fn from_entries(t: usize, entries: Vec<f64>) -> Result<Self> {
        if let Some((i, &value)) = entries
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
        {
            return Err(Error::InvalidCost {
                row: i / t,
                col: i % t,
                value,
            });
        }
        Ok(Self { t, entries })
    }

    pub fn size(&self) -> usize {
        self.t
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.t + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.t..(row + 1) * self.t]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.t)
    }

    /// `sum_j C[j][perm[j]]`, accumulated left to right.
    pub fn total_cost(&self, perm: &Permutation) -> f64 {
        debug_assert_eq!(perm.len(), self.t);
        perm.iter()
            .enumerate()
            .fold(0.0, |acc, (j, k)| acc + self.get(j, k))
    }

    pub fn transpose(&self) -> Self {
        let t = self.t;
        Self {
            t,
            entries: (0..t * t).map(|i| self.get(i % t, i / t)).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for CostMatrix {
    type Output = f64;

    fn index(&self, (row, col): (usize, usize)) -> &f64 {
        &self.entries[row * self.t + col]
    }
}

/// Optimal pairing and its cost.
#[derive(Debug, Clone, PartialEq)]
pub struct AssignmentSolution {
    pub perm: Permutation,
    /// Exactly [`CostMatrix::total_cost`] of `perm`.
    pub total_cost: f64,
}

impl AssignmentSolution {
    fn from_perm(c: &CostMatrix, perm: Permutation) -> Self {
        let total_cost = c.total_cost(&perm);
        Self { perm, total_cost }
    }
}

/// Which solver minimises the assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverBackend {
    /// Exhaustive enumeration, refused above `cap` targets.
    BruteForce { cap: usize },
    #[default]
    OptimalAssignment,
}

impl SolverBackend {
    pub fn brute_force() -> Self {
        SolverBackend::BruteForce {
            cap: DEFAULT_BRUTE_FORCE_CAP,
        }
    }
}

impl fmt::Display for SolverBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverBackend::BruteForce { .. } => write!(f, "brute"),
            SolverBackend::OptimalAssignment => write!(f, "optimal"),
        }
    }
}

pub fn solve(c: &CostMatrix, backend: SolverBackend) -> Result<AssignmentSolution> {
    match backend {
        SolverBackend::BruteForce { cap } => solve_brute_force_capped(c, cap),
        SolverBackend::OptimalAssignment => Ok(solve_optimal(c)),
    }
}

/// Exhaustive search with the default cap of
/// [`DEFAULT_BRUTE_FORCE_CAP`] targets.
pub fn solve_brute_force(c: &CostMatrix) -> Result<AssignmentSolution> {
    solve_brute_force_capped(c, DEFAULT_BRUTE_FORCE_CAP)
}

/// Visits permutations in lexicographic order and keeps the first strict
/// minimum, so ties resolve to the lexicographically smallest permutation.
pub fn solve_brute_force_capped(c: &CostMatrix, cap: usize) -> Result<AssignmentSolution> {
    let t = c.size();
    if t > cap {
        return Err(Error::CapExceeded { t, cap });
    }
    let mut current: Vec<usize> = (0..t).collect();
    let mut best = current.clone();
    let mut best_cost = f64::INFINITY;
    loop {
        let cost = current
            .iter()
            .enumerate()
            .fold(0.0, |acc, (j, &k)| acc + c.get(j, k));
        if cost < best_cost {
            best_cost = cost;
            best.copy_from_slice(&current);
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    let perm = Permutation::new(best).expect("enumerated permutation");
    Ok(AssignmentSolution {
        perm,
        total_cost: best_cost,
    })
}

/// Advances `xs` to the next permutation in lexicographic order; returns
/// `false` after the last one.
fn next_permutation(xs: &mut [usize]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Hungarian method with row/column potentials, `O(t^3)`.
///
/// Rows are inserted one at a time; each insertion runs a Dijkstra-like
/// search over reduced costs for the cheapest augmenting path. Among optimal
/// permutations, which one is returned is unspecified.
pub fn solve_optimal(c: &CostMatrix) -> AssignmentSolution {
    let n = c.size();
    // 1-based working arrays; column 0 is a virtual source.
    let mut u = vec![0.0_f64; n + 1];
    let mut v = vec![0.0_f64; n + 1];
    let mut row_of_col = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    let mut min_slack = vec![f64::INFINITY; n + 1];
    let mut used = vec![false; n + 1];

    for row in 1..=n {
        row_of_col[0] = row;
        let mut col0 = 0usize;
        min_slack.fill(f64::INFINITY);
        used.fill(false);

        loop {
            used[col0] = true;
            let i0 = row_of_col[col0];
            let mut delta = f64::INFINITY;
            let mut col1 = 0usize;

            for col in 1..=n {
                if used[col] {
                    continue;
                }
                let reduced = c.get(i0 - 1, col - 1) - u[i0] - v[col];
                if reduced < min_slack[col] {
                    min_slack[col] = reduced;
                    way[col] = col0;
                }
                if min_slack[col] < delta {
                    delta = min_slack[col];
                    col1 = col;
                }
            }

            for col in 0..=n {
                if used[col] {
                    u[row_of_col[col]] += delta;
                    v[col] -= delta;
                } else {
                    min_slack[col] -= delta;
                }
            }

            col0 = col1;
            if row_of_col[col0] == 0 {
                break;
            }
        }

        loop {
            let col1 = way[col0];
            row_of_col[col0] = row_of_col[col1];
            col0 = col1;
            if col0 == 0 {
                break;
            }
        }
    }

    let mut mapping = vec![0usize; n];
    for col in 1..=n {
        mapping[row_of_col[col] - 1] = col - 1;
    }
    let perm = Permutation::new(mapping).expect("augmenting paths yield a bijection");
    AssignmentSolution::from_perm(c, perm)
}
