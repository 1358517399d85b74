//! Explicit-label representation of a multitarget state.
//!
//! With a fixed, known number of targets a labelled set and a multitarget
//! state vector carry the same information: fixing an order of the labels
//! turns one into the other. The set-domain distance here compares labels
//! directly, so it gives the same value as [`lospa`](crate::lospa) on the
//! vectors obtained under any common label order.
//!
//! Labels are integers. Only equality between labels matters to the metric,
//! and exact equality is well defined on integers but not on reals.

use std::collections::HashMap;

use crate::assignment::CostMatrix;
use crate::error::{Error, Result};
use crate::metric::{self, LospaResult, SolverBackend};
use crate::params::LospaParams;
use crate::state::{MultiTargetState, TargetState};

pub type Label = i64;

#[derive(Debug, Clone, PartialEq)]
pub struct LabelledTarget {
    state: TargetState,
    label: Label,
}

impl LabelledTarget {
    pub fn new(state: TargetState, label: Label) -> Self {
        Self { state, label }
    }

    pub fn state(&self) -> &TargetState {
        &self.state
    }

    pub fn label(&self) -> Label {
        self.label
    }
}

/// Unordered collection of labelled targets with distinct labels.
///
/// Elements keep the order they were given in; no operation depends on it.
#[derive(Debug, Clone)]
pub struct LabelledSet {
    elements: Vec<LabelledTarget>,
}

impl LabelledSet {
    pub fn new(elements: Vec<LabelledTarget>) -> Result<Self> {
        let first = elements.first().ok_or(Error::Empty("labelled set"))?;
        let nx = first.state.dim();
        let mut seen = std::collections::HashSet::with_capacity(elements.len());
        for e in &elements {
            if e.state.dim() != nx {
                return Err(Error::DimensionMismatch {
                    what: "target state dimension",
                    left: nx,
                    right: e.state.dim(),
                });
            }
            if !seen.insert(e.label) {
                return Err(Error::DuplicateLabel(e.label));
            }
        }
        Ok(Self { elements })
    }

    /// Attaches `labels[j]` to target `j` of `x`.
    pub fn from_vector(x: &MultiTargetState, labels: &[Label]) -> Result<Self> {
        if labels.len() != x.len() {
            return Err(Error::DimensionMismatch {
                what: "number of labels vs t",
                left: labels.len(),
                right: x.len(),
            });
        }
        let elements = x
            .iter()
            .zip(labels)
            .map(|(s, &l)| LabelledTarget::new(s.clone(), l))
            .collect();
        Self::new(elements)
    }

    /// Position `j` of the result holds the state labelled `label_order[j]`.
    pub fn to_vector(&self, label_order: &[Label]) -> Result<MultiTargetState> {
        if label_order.len() != self.len() {
            return Err(Error::LabelMismatch(format!(
                "label order has {} entries but the set has {} targets",
                label_order.len(),
                self.len()
            )));
        }
        let by_label: HashMap<Label, &TargetState> =
            self.elements.iter().map(|e| (e.label, &e.state)).collect();
        let mut used = std::collections::HashSet::with_capacity(label_order.len());
        let targets = label_order
            .iter()
            .map(|l| {
                if !used.insert(*l) {
                    return Err(Error::LabelMismatch(format!(
                        "label {l} repeated in label order"
                    )));
                }
                by_label
                    .get(l)
                    .map(|s| (*s).clone())
                    .ok_or_else(|| Error::LabelMismatch(format!("label {l} not in set")))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiTargetState::new(targets)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].state.dim()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LabelledTarget> {
        self.elements.iter()
    }

    /// Labels in ascending order.
    pub fn sorted_labels(&self) -> Vec<Label> {
        let mut labels: Vec<Label> = self.elements.iter().map(|e| e.label).collect();
        labels.sort_unstable();
        labels
    }

    /// Same targets stored in a different order; `order[i]` is the index of
    /// the element placed at position `i`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let perm = crate::Permutation::new(order.to_vec())?;
        if perm.len() != self.len() {
            return Err(Error::DimensionMismatch {
                what: "reorder length vs t",
                left: perm.len(),
                right: self.len(),
            });
        }
        Ok(Self {
            elements: perm.iter().map(|i| self.elements[i].clone()).collect(),
        })
    }

    /// Applies `f` to every label; `f` must be injective on this set's labels.
    pub fn relabelled(&self, f: impl Fn(Label) -> Label) -> Result<Self> {
        Self::new(
            self.elements
                .iter()
                .map(|e| LabelledTarget::new(e.state.clone(), f(e.label)))
                .collect(),
        )
    }
}

/// Set-domain LOSPA with the label penalty applied to explicit labels:
/// `C[j][k] = b(a_j, b_k)^p + alpha^p * [label(a_j) != label(b_k)]`.
pub fn lospa_sets(a: &LabelledSet, b: &LabelledSet, params: &LospaParams) -> Result<f64> {
    Ok(lospa_sets_with(a, b, params, SolverBackend::OptimalAssignment)?.distance)
}

/// As [`lospa_sets`], with the permutation indexing the sets' storage order.
pub fn lospa_sets_with(
    a: &LabelledSet,
    b: &LabelledSet,
    params: &LospaParams,
    backend: SolverBackend,
) -> Result<LospaResult> {
    let (la, lb) = (a.sorted_labels(), b.sorted_labels());
    if la != lb {
        return Err(Error::LabelMismatch(format!(
            "label sets differ: {la:?} vs {lb:?}"
        )));
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            what: "target state dimension",
            left: a.dim(),
            right: b.dim(),
        });
    }
    let penalty = params.label_penalty();
    let costs = CostMatrix::from_fn(a.len(), |j, k| {
        let (x, y) = (&a.elements[j], &b.elements[k]);
        let loc = metric::powered_distance(x.state.coords(), y.state.coords(), params);
        if x.label == y.label {
            loc
        } else {
            loc + penalty
        }
    })?;
    metric::finish(&costs, params, backend)
}
