//! Scenario file schema (JSON) and conversion into core objects.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use proxima_core::contraction::{HrCoefficients, MappingTable, ProximalCoefficients};
use proxima_core::f_family::{FFunction, FKind};
use proxima_core::metric::{MetricSpace, Point};
use proxima_core::proximity::ProximityPair;
use proxima_core::solver::StopRule;

/// Checks the runner knows how to dispatch, in execution order.
pub const KNOWN_CHECKS: &[&str] = &[
    "metric_axioms",
    "omega_membership",
    "p_property",
    "approx_compactness",
    "f_contraction",
    "contraction",
];

pub fn default_checks() -> Vec<String> {
    ["metric_axioms", "omega_membership", "p_property", "approx_compactness", "contraction"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

#[derive(Debug)]
pub enum ScenarioError {
    Io(std::io::Error),
    /// Parse errors carry serde_json's line/column context.
    Parse(serde_json::Error),
    Invalid(String),
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioError::Io(e) => write!(f, "cannot read scenario: {e}"),
            ScenarioError::Parse(e) => write!(f, "scenario parse error: {e}"),
            ScenarioError::Invalid(msg) => write!(f, "invalid scenario: {msg}"),
        }
    }
}

impl std::error::Error for ScenarioError {}

fn invalid(msg: impl Into<String>) -> ScenarioError {
    ScenarioError::Invalid(msg.into())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    Euclidean { dim: usize },
    Chebyshev { dim: usize },
    Matrix { dmatrix: Vec<Vec<f64>> },
}

/// A point set: inline coordinate arrays, or indices into the shared point
/// pool (geometric kinds) / the distance matrix (matrix kind).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetSpec {
    Coords(Vec<Vec<f64>>),
    Indices { indices: Vec<usize> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FSpec {
    pub tag: String,
    pub k: f64,
    /// Breakpoints for tag "table", flattened as [x0, y0, x1, y1, ...].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoefSpec {
    /// First-kind proximal form (a, b, c, h).
    Proximal { a: f64, b: f64, c: f64, h: f64 },
    /// Hardy-Rogers form (a, b, c, e, L), checked on the induced self-map.
    HardyRogers {
        a: f64,
        b: f64,
        c: f64,
        e: f64,
        #[serde(rename = "L")]
        l: f64,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StopSpec {
    pub tol_step: f64,
    pub tol_residual: f64,
    pub max_iter: usize,
}

impl Default for StopSpec {
    fn default() -> Self {
        let d = StopRule::default();
        StopSpec { tol_step: d.tol_step, tol_residual: d.tol_residual, max_iter: d.max_iter }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StartSpec {
    /// The literal string "all-A0".
    AllA0(String),
    Indices { indices: Vec<usize> },
    Coords(Vec<Vec<f64>>),
}

impl Default for StartSpec {
    fn default() -> Self {
        StartSpec::AllA0("all-A0".to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub space: SpaceSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<f64>>>,
    #[serde(rename = "A")]
    pub a: SetSpec,
    #[serde(rename = "B")]
    pub b: SetSpec,
    /// T as index pairs [i, j]: T(A[i]) = B[j]. Must be total on A.
    #[serde(rename = "T")]
    pub t: Vec<[usize; 2]>,
    pub f: FSpec,
    pub coefficients: CoefSpec,
    pub tau: f64,
    #[serde(default)]
    pub eps_prox: f64,
    #[serde(default)]
    pub stop: StopSpec,
    #[serde(default)]
    pub starts: StartSpec,
    #[serde(default = "default_checks")]
    pub checks: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// The validated, fully constructed instance a scenario describes.
pub struct Instance {
    pub pair: ProximityPair,
    pub t: MappingTable,
    pub f: FFunction,
    pub hr: Option<HrCoefficients>,
    pub proximal: Option<ProximalCoefficients>,
    pub stop: StopRule,
    /// Start points, resolved against A0 ("all-A0") or A (explicit lists).
    pub starts: Vec<Point>,
    pub checks: Vec<String>,
    pub seed: u64,
}

impl ScenarioFile {
    pub fn load(path: &Path) -> Result<Self, ScenarioError> {
        let text = std::fs::read_to_string(path).map_err(ScenarioError::Io)?;
        serde_json::from_str(&text).map_err(ScenarioError::Parse)
    }

    fn resolve_set(&self, set: &SetSpec, name: &str) -> Result<Vec<Point>, ScenarioError> {
        match (&self.space, set) {
            (SpaceSpec::Matrix { dmatrix }, SetSpec::Indices { indices }) => {
                let n = dmatrix.len();
                indices
                    .iter()
                    .map(|&i| {
                        if i < n {
                            Ok(Point::Index(i))
                        } else {
                            Err(invalid(format!("{name}: index {i} out of range for {n}x{n} matrix")))
                        }
                    })
                    .collect()
            }
            (SpaceSpec::Matrix { .. }, SetSpec::Coords(_)) => {
                Err(invalid(format!("{name}: matrix spaces take index lists, not coordinates")))
            }
            (_, SetSpec::Coords(coords)) => {
                Ok(coords.iter().map(|c| Point::coords(c)).collect())
            }
            (_, SetSpec::Indices { indices }) => {
                let pool = self
                    .points
                    .as_ref()
                    .ok_or_else(|| invalid(format!("{name}: index list needs a \"points\" pool")))?;
                indices
                    .iter()
                    .map(|&i| {
                        pool.get(i)
                            .map(|c| Point::coords(c))
                            .ok_or_else(|| invalid(format!("{name}: pool index {i} out of range")))
                    })
                    .collect()
            }
        }
    }

    pub fn build(&self) -> Result<Instance, ScenarioError> {
        for name in &self.checks {
            if !KNOWN_CHECKS.contains(&name.as_str()) {
                return Err(invalid(format!("unknown check \"{name}\"")));
            }
        }

        let space = match &self.space {
            SpaceSpec::Euclidean { dim } => MetricSpace::Euclidean { dim: *dim },
            SpaceSpec::Chebyshev { dim } => MetricSpace::Chebyshev { dim: *dim },
            SpaceSpec::Matrix { dmatrix } => MetricSpace::Matrix { dmatrix: dmatrix.clone() },
        };
        let a = self.resolve_set(&self.a, "A")?;
        let b = self.resolve_set(&self.b, "B")?;

        // T: total on A, exactly one image per domain index.
        let mut image: Vec<Option<Point>> = vec![None; a.len()];
        for &[i, j] in &self.t {
            let slot = image
                .get_mut(i)
                .ok_or_else(|| invalid(format!("T: domain index {i} out of range")))?;
            if slot.is_some() {
                return Err(invalid(format!("T: domain index {i} mapped twice")));
            }
            let target =
                b.get(j).ok_or_else(|| invalid(format!("T: image index {j} out of range")))?;
            *slot = Some(target.clone());
        }
        let image: Vec<Point> = image
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| invalid(format!("T: domain index {i} unmapped"))))
            .collect::<Result<_, _>>()?;
        let t = MappingTable::new(a.clone(), image)
            .map_err(|e| invalid(format!("T: {e}")))?;

        let kind = match self.f.tag.as_str() {
            "ln" => FKind::Ln,
            "ln_plus_alpha" => FKind::LnPlusAlpha,
            "neg_inv_sqrt" => FKind::NegInvSqrt,
            "table" => {
                let params = self
                    .f
                    .params
                    .as_ref()
                    .ok_or_else(|| invalid("f: tag \"table\" needs params"))?;
                if params.len() % 2 != 0 {
                    return Err(invalid("f: table params must be (x, y) pairs"));
                }
                FKind::Table(params.chunks(2).map(|c| (c[0], c[1])).collect())
            }
            other => return Err(invalid(format!("f: unknown tag \"{other}\""))),
        };
        let f = FFunction::new(kind, self.f.k).map_err(|e| invalid(format!("f: {e}")))?;

        let (hr, proximal) = match self.coefficients {
            CoefSpec::Proximal { a, b, c, h } => {
                let p = ProximalCoefficients::new(a, b, c, h, self.tau)
                    .map_err(|e| invalid(format!("coefficients: {e}")))?;
                (Some(p.to_hardy_rogers()), Some(p))
            }
            CoefSpec::HardyRogers { a, b, c, e, l } => {
                let hr = HrCoefficients::new(a, b, c, e, l, self.tau)
                    .map_err(|e| invalid(format!("coefficients: {e}")))?;
                (Some(hr), None)
            }
        };

        let pair = ProximityPair::new(space, a.clone(), b, self.eps_prox)
            .map_err(|e| invalid(format!("pair: {e}")))?;

        let stop = StopRule {
            tol_step: self.stop.tol_step,
            tol_residual: self.stop.tol_residual,
            max_iter: self.stop.max_iter,
        };
        stop.validate().map_err(|e| invalid(format!("stop: {e}")))?;

        let starts = match &self.starts {
            StartSpec::AllA0(s) if s == "all-A0" => pair.a0_points(),
            StartSpec::AllA0(s) => {
                return Err(invalid(format!("starts: expected \"all-A0\" or a list, got \"{s}\"")))
            }
            StartSpec::Indices { indices } => indices
                .iter()
                .map(|&i| {
                    a.get(i)
                        .cloned()
                        .ok_or_else(|| invalid(format!("starts: A index {i} out of range")))
                })
                .collect::<Result<_, _>>()?,
            StartSpec::Coords(coords) => coords.iter().map(|c| Point::coords(c)).collect(),
        };

        Ok(Instance {
            pair,
            t,
            f,
            hr,
            proximal,
            stop,
            starts,
            checks: self.checks.clone(),
            seed: self.seed.unwrap_or(0),
        })
    }
}
