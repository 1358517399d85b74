//! Multitarget trajectories and their CSV / JSON file formats.
//!
//! CSV: one row per timestep, header `k,x_1_1,...,x_1_nx,x_2_1,...,x_t_nx`.
//! The shape is taken from a comment line `# t=<int> nx=<int>`, from an
//! explicit override, or else from the header column names.
//!
//! JSON: `{"t": 3, "nx": 1, "steps": [{"k": 0, "targets": [[-10.0], [0.0], [10.0]]}]}`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::state::{MultiTargetState, TargetState};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrajectoryFormat {
    Csv,
    Json,
}

impl TrajectoryFormat {
    /// Guesses from the file extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "csv" => Some(Self::Csv),
            "json" => Some(Self::Json),
            _ => None,
        }
    }
}

impl FromStr for TrajectoryFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::InvalidParameter(format!(
                "unknown format {other:?}, expected csv or json"
            ))),
        }
    }
}

impl fmt::Display for TrajectoryFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::Json => "json",
        })
    }
}

/// Number of targets and per-target dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub t: usize,
    pub nx: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TimeStep {
    pub k: i64,
    pub state: MultiTargetState,
}

/// Time-indexed multitarget states with constant `t` and `nx` and strictly
/// increasing time indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    shape: Shape,
    steps: Vec<TimeStep>,
}

impl Trajectory {
    pub fn new(steps: Vec<TimeStep>) -> Result<Self> {
        let first = steps.first().ok_or(Error::Empty("trajectory"))?;
        let shape = Shape {
            t: first.state.len(),
            nx: first.state.dim(),
        };
        for (i, pair) in steps.windows(2).enumerate() {
            if pair[1].k <= pair[0].k {
                return Err(Error::NonIncreasingTime {
                    record: i + 2,
                    prev: pair[0].k,
                    next: pair[1].k,
                });
            }
        }
        for (i, step) in steps.iter().enumerate() {
            let got = Shape {
                t: step.state.len(),
                nx: step.state.dim(),
            };
            if got != shape {
                return Err(Error::InconsistentShape {
                    record: i + 1,
                    message: format!(
                        "expected t={} nx={}, found t={} nx={}",
                        shape.t, shape.nx, got.t, got.nx
                    ),
                });
            }
        }
        Ok(Self { shape, steps })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn steps(&self) -> &[TimeStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Same state at every time index in `ks`.
    pub fn constant(state: &MultiTargetState, ks: impl IntoIterator<Item = i64>) -> Result<Self> {
        Self::new(
            ks.into_iter()
                .map(|k| TimeStep {
                    k,
                    state: state.clone(),
                })
                .collect(),
        )
    }

    pub fn to_csv_string(&self) -> String {
        let Shape { t, nx } = self.shape;
        let mut out = format!("# t={t} nx={nx}\nk");
        for j in 1..=t {
            for d in 1..=nx {
                out.push_str(&format!(",x_{j}_{d}"));
            }
        }
        out.push('\n');
        for step in &self.steps {
            out.push_str(&step.k.to_string());
            for v in step.state.to_flat() {
                out.push(',');
                out.push_str(&crate::numfmt::format_sig17(v));
            }
            out.push('\n');
        }
        out
    }
}

pub fn load_trajectory(path: impl AsRef<Path>, format: TrajectoryFormat) -> Result<Trajectory> {
    load_trajectory_with_shape(path, format, None)
}

/// As [`load_trajectory`]; for CSV, `shape` overrides the comment line and header.
pub fn load_trajectory_with_shape(
    path: impl AsRef<Path>,
    format: TrajectoryFormat,
    shape: Option<Shape>,
) -> Result<Trajectory> {
    let text = std::fs::read_to_string(path)?;
    match format {
        TrajectoryFormat::Csv => parse_csv(&text, shape),
        TrajectoryFormat::Json => parse_json(&text),
    }
}

fn parse_shape_comment(line: &str) -> Option<Shape> {
    let body = line.trim().strip_prefix('#')?;
    let (mut t, mut nx) = (None, None);
    for token in body.split_whitespace() {
        if let Some(v) = token.strip_prefix("t=") {
            t = v.parse().ok();
        } else if let Some(v) = token.strip_prefix("nx=") {
            nx = v.parse().ok();
        }
    }
    Some(Shape { t: t?, nx: nx? })
}

/// Reads `t` and `nx` off column names of the form `x_<j>_<d>`.
fn shape_from_header(header: &csv::StringRecord) -> Option<Shape> {
    let (mut t, mut nx) = (0, 0);
    for name in header.iter().skip(1) {
        let mut parts = name.trim().strip_prefix("x_")?.split('_');
        let j: usize = parts.next()?.parse().ok()?;
        let d: usize = parts.next()?.parse().ok()?;
        t = t.max(j);
        nx = nx.max(d);
    }
    (t > 0 && nx > 0).then_some(Shape { t, nx })
}

pub fn parse_csv(text: &str, shape: Option<Shape>) -> Result<Trajectory> {
    let comment_shape = text
        .lines()
        .map(str::trim)
        .take_while(|l| l.is_empty() || l.starts_with('#'))
        .find_map(parse_shape_comment);

    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let header = reader.headers().map_err(|e| csv_error(0, &e))?.clone();
    if header.get(0).map(str::trim) != Some("k") {
        return Err(Error::Parse {
            record: 0,
            line: 1,
            message: "header must start with column `k`".into(),
        });
    }
    let shape = shape
        .or(comment_shape)
        .or_else(|| shape_from_header(&header))
        .ok_or_else(|| Error::Parse {
            record: 0,
            line: 1,
            message: "cannot determine t and nx: add `# t=<int> nx=<int>` or pass them explicitly"
                .into(),
        })?;
    if shape.t == 0 || shape.nx == 0 {
        return Err(Error::InvalidParameter(
            "t and nx must be at least 1".into(),
        ));
    }
    let width = 1 + shape.t * shape.nx;
    if header.len() != width {
        return Err(Error::InconsistentShape {
            record: 0,
            message: format!(
                "header has {} columns, expected 1 + t*nx = {width} for t={} nx={}",
                header.len(),
                shape.t,
                shape.nx
            ),
        });
    }

    let mut steps = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let record = i + 1;
        let row = row.map_err(|e| csv_error(record, &e))?;
        let line = row.position().map_or(0, |p| p.line());
        if row.len() != width {
            return Err(Error::InconsistentShape {
                record,
                message: format!(
                    "row has {} columns, expected {width} (line {line})",
                    row.len()
                ),
            });
        }
        let k = row[0].parse::<i64>().map_err(|e| Error::Parse {
            record,
            line,
            message: format!("bad time index {:?}: {e}", &row[0]),
        })?;
        let mut flat = Vec::with_capacity(width - 1);
        for (col, cell) in row.iter().enumerate().skip(1) {
            let v = cell.parse::<f64>().map_err(|e| Error::Parse {
                record,
                line,
                message: format!("bad number {cell:?} in column {col}: {e}"),
            })?;
            if !v.is_finite() {
                return Err(Error::NonFiniteValue {
                    record,
                    column: col,
                });
            }
            flat.push(v);
        }
        let state = MultiTargetState::from_flat(&flat, shape.nx)?;
        steps.push(TimeStep { k, state });
    }
    Trajectory::new(steps)
}

fn csv_error(record: usize, e: &csv::Error) -> Error {
    Error::Parse {
        record,
        line: e.position().map_or(0, |p| p.line()),
        message: e.to_string(),
    }
}

#[derive(Deserialize)]
struct JsonTrajectory {
    t: usize,
    nx: usize,
    steps: Vec<JsonStep>,
}

#[derive(Deserialize)]
struct JsonStep {
    k: i64,
    targets: Vec<Vec<f64>>,
}

pub fn parse_json(text: &str) -> Result<Trajectory> {
    let raw: JsonTrajectory = serde_json::from_str(text).map_err(|e| Error::Parse {
        record: 0,
        line: e.line() as u64,
        message: e.to_string(),
    })?;
    let mut steps = Vec::with_capacity(raw.steps.len());
    for (i, step) in raw.steps.into_iter().enumerate() {
        let record = i + 1;
        if step.targets.len() != raw.t {
            return Err(Error::InconsistentShape {
                record,
                message: format!("expected t={} targets, found {}", raw.t, step.targets.len()),
            });
        }
        let mut targets = Vec::with_capacity(raw.t);
        for (j, coords) in step.targets.into_iter().enumerate() {
            if coords.len() != raw.nx {
                return Err(Error::InconsistentShape {
                    record,
                    message: format!(
                        "target {} has dimension {}, expected nx={}",
                        j + 1,
                        coords.len(),
                        raw.nx
                    ),
                });
            }
            if let Some(d) = coords.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFiniteValue {
                    record,
                    column: 1 + j * raw.nx + d,
                });
            }
            targets.push(TargetState::new(coords)?);
        }
        steps.push(TimeStep {
            k: step.k,
            state: MultiTargetState::new(targets)?,
        });
    }
    Trajectory::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CSV: &str = "# t=3 nx=1\nk,x_1_1,x_2_1,x_3_1\n0,-10,0,10\n1,-9.5,0.5,10.5\n";

    #[test]
    fn parses_csv_with_comment() {
        let tr = parse_csv(CSV, None).unwrap();
        assert_eq!(tr.shape(), Shape { t: 3, nx: 1 });
        assert_eq!(tr.len(), 2);
        assert_eq!(tr.steps()[1].k, 1);
        assert_eq!(tr.steps()[1].state.to_flat(), vec![-9.5, 0.5, 10.5]);
    }

    #[test]
    fn infers_shape_from_header() {
        let text = "k,x_1_1,x_1_2,x_2_1,x_2_2\n5,1,2,3,4\n";
        let tr = parse_csv(text, None).unwrap();
        assert_eq!(tr.shape(), Shape { t: 2, nx: 2 });
        assert_eq!(tr.steps()[0].state[1].coords(), &[3.0, 4.0]);
    }

    #[test]
    fn explicit_shape_overrides_comment() {
        let text = "# t=1 nx=4\nk,a,b,c,d\n0,1,2,3,4\n";
        let tr = parse_csv(text, Some(Shape { t: 2, nx: 2 })).unwrap();
        assert_eq!(tr.shape(), Shape { t: 2, nx: 2 });
        assert_eq!(
            parse_csv(text, None).unwrap().shape(),
            Shape { t: 1, nx: 4 }
        );
    }

    #[test]
    fn csv_nan_is_rejected_with_record() {
        let text = "# t=3 nx=1\nk,x_1_1,x_2_1,x_3_1\n0,-10,0,10\n1,-10,NaN,10\n";
        assert!(matches!(
            parse_csv(text, None),
            Err(Error::NonFiniteValue {
                record: 2,
                column: 2
            })
        ));
        let text = "# t=1 nx=1\nk,x_1_1\n0,inf\n";
        assert!(matches!(
            parse_csv(text, None),
            Err(Error::NonFiniteValue {
                record: 1,
                column: 1
            })
        ));
    }

    #[test]
    fn csv_short_row_is_inconsistent_shape() {
        let text = "# t=3 nx=1\nk,x_1_1,x_2_1,x_3_1\n0,-10,0,10\n1,-10,0\n";
        assert!(matches!(
            parse_csv(text, None),
            Err(Error::InconsistentShape { record: 2, .. })
        ));
    }

    #[test]
    fn csv_parse_errors_carry_position() {
        let text = "# t=1 nx=1\nk,x_1_1\n0,1\n1,abc\n";
        match parse_csv(text, None) {
            Err(Error::Parse { record, line, .. }) => {
                assert_eq!(record, 2);
                assert_eq!(line, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_csv("k,x_1_1\nzero,1\n", None),
            Err(Error::Parse { record: 1, .. })
        ));
        assert!(matches!(
            parse_csv("time,x\n0,1\n", None),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_csv("k,a\n0,1\n", None),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn header_width_must_match_shape() {
        let text = "# t=2 nx=1\nk,x_1_1\n0,1\n";
        assert!(matches!(
            parse_csv(text, None),
            Err(Error::InconsistentShape { record: 0, .. })
        ));
    }

    #[test]
    fn time_must_increase() {
        let text = "# t=1 nx=1\nk,x_1_1\n1,0\n1,0\n";
        assert!(matches!(
            parse_csv(text, None),
            Err(Error::NonIncreasingTime { .. })
        ));
    }

    #[test]
    fn parses_json() {
        let text = r#"{"t":3,"nx":1,"steps":[{"k":0,"targets":[[-10],[0],[10]]},{"k":2,"targets":[[-10],[0],[10]]}]}"#;
        let tr = parse_json(text).unwrap();
        assert_eq!(tr.shape(), Shape { t: 3, nx: 1 });
        assert_eq!(tr.steps()[1].k, 2);
    }

    #[test]
    fn json_shape_errors() {
        let text = r#"{"t":3,"nx":1,"steps":[{"k":0,"targets":[[-10],[0],[10]]},{"k":1,"targets":[[-10],[0]]}]}"#;
        assert!(matches!(
            parse_json(text),
            Err(Error::InconsistentShape { record: 2, .. })
        ));
        let text = r#"{"t":1,"nx":2,"steps":[{"k":0,"targets":[[1]]}]}"#;
        assert!(matches!(
            parse_json(text),
            Err(Error::InconsistentShape { record: 1, .. })
        ));
        assert!(matches!(
            parse_json(r#"{"t":1,"nx":1,"steps":[{"k":0,"targets":[[null]]}]}"#),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_json(r#"{"t":1,"nx":1,"steps":[]}"#),
            Err(Error::Empty(_))
        ));
    }

    #[test]
    fn csv_writer_round_trips() {
        let x = MultiTargetState::from_rows(&[[0.1, 1.0 / 3.0], [-2.0, 1e-7]]).unwrap();
        let tr = Trajectory::constant(&x, [0, 1, 5]).unwrap();
        let back = parse_csv(&tr.to_csv_string(), None).unwrap();
        assert_eq!(back, tr);
    }

    #[test]
    fn loads_from_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("truth.csv");
        std::fs::write(&path, CSV).unwrap();
        assert_eq!(
            TrajectoryFormat::from_path(&path),
            Some(TrajectoryFormat::Csv)
        );
        assert_eq!(
            load_trajectory(&path, TrajectoryFormat::Csv).unwrap().len(),
            2
        );
        assert!(matches!(
            load_trajectory(dir.path().join("missing.csv"), TrajectoryFormat::Csv),
            Err(Error::Io(_))
        ));
    }
}
