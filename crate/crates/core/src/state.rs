use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// State vector of a single target, e.g. its position in metres.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetState(Vec<f64>);

impl TargetState {
    /// Rejects empty vectors and non-finite entries.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Empty("target state"));
        }
        if let Some(&value) = coords.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFiniteState {
                what: "target state",
                value,
            });
        }
        Ok(Self(coords))
    }

    pub fn scalar(x: f64) -> Result<Self> {
        Self::new(vec![x])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }
}

/// Ordered concatenation of `t` target states of equal dimension.
///
/// The index of a target in the sequence is its (implicit) label.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiTargetState {
    targets: Vec<TargetState>,
}

impl MultiTargetState {
    pub fn new(targets: Vec<TargetState>) -> Result<Self> {
        let first = targets.first().ok_or(Error::Empty("multitarget state"))?;
        let nx = first.dim();
        if let Some(bad) = targets.iter().find(|x| x.dim() != nx) {
            return Err(Error::DimensionMismatch {
                what: "target state dimension",
                left: nx,
                right: bad.dim(),
            });
        }
        Ok(Self { targets })
    }

    /// Builds a state from per-target coordinate rows.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let targets = rows
            .iter()
            .map(|r| TargetState::new(r.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(targets)
    }

    /// Builds a state of one-dimensional targets.
    pub fn from_scalars(xs: &[f64]) -> Result<Self> {
        let targets = xs
            .iter()
            .map(|&x| TargetState::scalar(x))
            .collect::<Result<Vec<_>>>()?;
        Self::new(targets)
    }

    /// Splits a stacked vector of length `t * nx` into `t` targets.
    pub fn from_flat(flat: &[f64], nx: usize) -> Result<Self> {
        if nx == 0 {
            return Err(Error::InvalidParameter("nx must be at least 1".into()));
        }
        if !flat.len().is_multiple_of(nx) {
            return Err(Error::DimensionMismatch {
                what: "stacked vector length vs nx",
                left: flat.len(),
                right: nx,
            });
        }
        Self::from_rows(&flat.chunks(nx).collect::<Vec<_>>())
    }

    /// Number of targets `t`.
    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    /// Dimension `nx` shared by every target.
    pub fn dim(&self) -> usize {
        self.targets[0].dim()
    }

    pub fn targets(&self) -> &[TargetState] {
        &self.targets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TargetState> {
        self.targets.iter()
    }

    pub fn to_flat(&self) -> Vec<f64> {
        self.targets
            .iter()
            .flat_map(|x| x.coords().iter().copied())
            .collect()
    }

    /// Reorders targets so that position `j` holds target `perm[j]`.
    pub fn permuted(&self, perm: &Permutation) -> Result<Self> {
        if perm.len() != self.len() {
            return Err(Error::DimensionMismatch {
                what: "permutation length vs t",
                left: perm.len(),
                right: self.len(),
            });
        }
        Ok(Self {
            targets: perm.iter().map(|k| self.targets[k].clone()).collect(),
        })
    }
}

impl std::ops::Index<usize> for MultiTargetState {
    type Output = TargetState;

    fn index(&self, j: usize) -> &TargetState {
        &self.targets[j]
    }
}

/// Bijection on `{0, .., t-1}`; `perm[j]` is the index paired with `j`.
///
/// Stored zero-based. Serialized and displayed one-based, so the swap of two
/// targets prints as `[2, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &k in &mapping {
            if k >= n {
                return Err(Error::InvalidPermutation(format!(
                    "index {k} out of range for t = {n}"
                )));
            }
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidPermutation(format!("index {k} repeated")));
            }
        }
        Ok(Self(mapping))
    }

    pub fn from_one_based(mapping: &[usize]) -> Result<Self> {
        let zero = mapping
            .iter()
            .map(|&k| {
                k.checked_sub(1).ok_or_else(|| {
                    Error::InvalidPermutation("index 0 in one-based permutation".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(zero)
    }

    pub fn identity(t: usize) -> Self {
        Self((0..t).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &k)| j == k)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|k| k + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (j, &k) in self.0.iter().enumerate() {
            inv[k] = j;
        }
        Self(inv)
    }
}

impl std::ops::Index<usize> for Permutation {
    type Output = usize;

    fn index(&self, j: usize) -> &usize {
        &self.0[j]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", k + 1)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(d)?;
        Self::from_one_based(&raw).map_err(serde::de::Error::custom)
    }
}
