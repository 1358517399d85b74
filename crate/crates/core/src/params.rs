use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Metric `b` on the single-target state space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BaseMetric {
    Euclidean,
    /// `(sum |x_i - y_i|^q)^(1/q)`, a metric for `q >= 1`.
    PNorm(f64),
}

impl BaseMetric {
    pub fn validate(&self) -> Result<()> {
        match *self {
            BaseMetric::Euclidean => Ok(()),
            BaseMetric::PNorm(q) if q.is_finite() && q >= 1.0 => Ok(()),
            BaseMetric::PNorm(q) => Err(Error::InvalidParameter(format!(
                "pnorm order must be finite and >= 1, got {q}"
            ))),
        }
    }
}

impl fmt::Display for BaseMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseMetric::Euclidean => write!(f, "euclidean"),
            BaseMetric::PNorm(q) => write!(f, "pnorm:{q}"),
        }
    }
}

impl FromStr for BaseMetric {
    type Err = Error;

    /// Accepts `euclidean` or `pnorm:<q>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let metric = if s.eq_ignore_ascii_case("euclidean") {
            BaseMetric::Euclidean
        } else if let Some(q) = s.strip_prefix("pnorm:") {
            let q = q
                .trim()
                .parse::<f64>()
                .map_err(|e| Error::InvalidParameter(format!("bad pnorm order {q:?}: {e}")))?;
            BaseMetric::PNorm(q)
        } else {
            return Err(Error::InvalidParameter(format!(
                "unknown metric {s:?}, expected euclidean or pnorm:<q>"
            )));
        };
        metric.validate()?;
        Ok(metric)
    }
}

impl Serialize for BaseMetric {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BaseMetric {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Exponent `p`, label-error penalty `alpha` and base metric `b`.
///
/// `alpha` is expressed in the units of `b`. `alpha = 0` is accepted and gives
/// the OSPA distance without cut-off; results computed with it are tagged
/// [`MetricKind::Ospa`](crate::MetricKind::Ospa).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct LospaParams {
    p: f64,
    alpha: f64,
    base_metric: BaseMetric,
}

impl LospaParams {
    pub fn new(p: f64, alpha: f64, base_metric: BaseMetric) -> Result<Self> {
        if !(p.is_finite() && p >= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "p must satisfy 1 <= p < inf, got {p}"
            )));
        }
        if !(alpha.is_finite() && alpha >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "alpha must be finite and >= 0, got {alpha}"
            )));
        }
        base_metric.validate()?;
        Ok(Self {
            p,
            alpha,
            base_metric,
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn base_metric(&self) -> BaseMetric {
        self.base_metric
    }

    /// Same `p` and metric with a different `alpha`.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::new(self.p, alpha, self.base_metric)
    }

    /// `alpha^p`, the cost of pairing two different labels.
    pub fn label_penalty(&self) -> f64 {
        self.alpha.powf(self.p)
    }
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    #[serde(with = "crate::numfmt::sig17")]
    p: f64,
    #[serde(with = "crate::numfmt::sig17")]
    alpha: f64,
    metric: BaseMetric,
}

impl TryFrom<RawParams> for LospaParams {
    type Error = Error;

    fn try_from(r: RawParams) -> Result<Self> {
        Self::new(r.p, r.alpha, r.metric)
    }
}

impl From<LospaParams> for RawParams {
    fn from(p: LospaParams) -> Self {
        Self {
            p: p.p,
            alpha: p.alpha,
            metric: p.base_metric,
        }
    }
}
