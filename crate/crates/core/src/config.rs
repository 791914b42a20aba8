//! JSON configuration files.
//!
//! Three kinds, discriminated by `"kind"`:
//!
//! ```json
//! {"kind": "ceva", "vertices": [["0","0"], ["4","0"], ["0","4"]], "M": ["4/3","4/3"], "s": 1, "t": 1}
//! {"kind": "inscribed", "radius": "1", "params": ["-1","0","1"],
//!  "lines": [{"second_param": "2"}, {"through": ["0","1/3"]}, {"second_param": "-2"}], "s": 1, "t": 1}
//! {"kind": "counterexample", "vertices": [5 points], "M": ["2","2"], "seed": 0}
//! ```
//!
//! Rationals are strings in canonical `p/q` form. Validation errors name the
//! offending field with its JSON path.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::ceva::{CevaConfig, CevaError, Degeneracy};
use crate::circle::{CircleError, InscribedConfig, LineSpec};
use crate::geom::Point;
use crate::rational::{format_rational, parse_rational, ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("malformed JSON: {0}")]
    MalformedJson(String),
    #[error("{field}: {source}")]
    InvalidRational {
        field: String,
        source: ParseRationalError,
    },
    #[error("{field}: {message}")]
    InvariantViolation { field: String, message: String },
    #[error("degenerate configuration at (i={i}, j={j}): {kind}")]
    Degenerate { i: usize, j: usize, kind: Degeneracy },
}

type RawPoint = [String; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawConfig {
    Ceva {
        vertices: Vec<RawPoint>,
        #[serde(rename = "M")]
        pivot: RawPoint,
        s: usize,
        t: usize,
    },
    Inscribed {
        radius: String,
        params: Vec<String>,
        lines: Vec<RawLineSpec>,
        s: usize,
        t: usize,
    },
    Counterexample {
        vertices: Vec<RawPoint>,
        #[serde(rename = "M")]
        pivot: RawPoint,
        #[serde(default)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RawLineSpec {
    SecondParam(String),
    Through(RawPoint),
}

/// Inputs for the pentagon counterexample builder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleInput {
    pub vertices: Vec<Point>,
    pub pivot: Point,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigFile {
    Ceva(CevaConfig),
    Inscribed(InscribedConfig),
    Counterexample(CounterexampleInput),
}

impl ConfigFile {
    pub fn kind(&self) -> &'static str {
        match self {
            ConfigFile::Ceva(_) => "ceva",
            ConfigFile::Inscribed(_) => "inscribed",
            ConfigFile::Counterexample(_) => "counterexample",
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self.to_raw()).expect("config serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("config serializes")
    }

    fn to_raw(&self) -> RawConfig {
        match self {
            ConfigFile::Ceva(cfg) => RawConfig::Ceva {
                vertices: cfg.vertices().iter().map(raw_point).collect(),
                pivot: raw_point(cfg.pivot()),
                s: cfg.s(),
                t: cfg.t(),
            },
            ConfigFile::Inscribed(cfg) => RawConfig::Inscribed {
                radius: format_rational(cfg.radius()),
                params: cfg.params().iter().map(format_rational).collect(),
                lines: cfg
                    .line_specs()
                    .iter()
                    .map(|spec| match spec {
                        LineSpec::SecondParam(v) => RawLineSpec::SecondParam(format_rational(v)),
                        LineSpec::ThroughPoint(p) => RawLineSpec::Through(raw_point(p)),
                    })
                    .collect(),
                s: cfg.s(),
                t: cfg.t(),
            },
            ConfigFile::Counterexample(input) => RawConfig::Counterexample {
                vertices: input.vertices.iter().map(raw_point).collect(),
                pivot: raw_point(&input.pivot),
                seed: input.seed,
            },
        }
    }
}

impl From<CevaConfig> for ConfigFile {
    fn from(cfg: CevaConfig) -> Self {
        ConfigFile::Ceva(cfg)
    }
}

impl From<InscribedConfig> for ConfigFile {
    fn from(cfg: InscribedConfig) -> Self {
        ConfigFile::Inscribed(cfg)
    }
}

fn raw_point(p: &Point) -> RawPoint {
    [format_rational(&p.x), format_rational(&p.y)]
}

fn rational_at(text: &str, field: impl Into<String>) -> Result<Rational, ConfigError> {
    parse_rational(text).map_err(|source| ConfigError::InvalidRational {
        field: field.into(),
        source,
    })
}

fn point_at(raw: &RawPoint, field: &str) -> Result<Point, ConfigError> {
    Ok(Point::new(
        rational_at(&raw[0], format!("{field}[0]"))?,
        rational_at(&raw[1], format!("{field}[1]"))?,
    ))
}

fn points_at(raw: &[RawPoint], field: &str) -> Result<Vec<Point>, ConfigError> {
    raw.iter()
        .enumerate()
        .map(|(k, p)| point_at(p, &format!("{field}[{k}]")))
        .collect()
}

fn violation(field: &str, message: impl Into<String>) -> ConfigError {
    ConfigError::InvariantViolation {
        field: field.to_owned(),
        message: message.into(),
    }
}

fn from_ceva_error(e: CevaError) -> ConfigError {
    match e {
        CevaError::Degenerate { i, j, kind } => ConfigError::Degenerate { i, j, kind },
        CevaError::InvalidParameters(msg) => violation("s/t", msg),
        CevaError::DuplicateVertex(a, b) => violation(
            &format!("vertices[{}]", b - 1),
            format!("duplicates vertex {a}"),
        ),
        CevaError::PivotIsVertex(k) => violation("M", format!("coincides with vertex {k}")),
        other => violation("config", other.to_string()),
    }
}

fn from_circle_error(e: CircleError) -> ConfigError {
    match e {
        CircleError::Degenerate { i, j, kind } => ConfigError::Degenerate { i, j, kind },
        CircleError::NonPositiveRadius => violation("radius", "must be positive"),
        CircleError::InvalidParameters(msg) => violation("s/t", msg),
        CircleError::NotIncreasing { index } => {
            violation(&format!("params[{}]", index - 1), "parameters must be strictly increasing")
        }
        CircleError::SecondParamIsVertex { index } => violation(
            &format!("lines[{}].second_param", index - 1),
            "coincides with a vertex parameter",
        ),
        CircleError::ThroughVertex { index } => violation(
            &format!("lines[{}].through", index - 1),
            "coincides with its own vertex",
        ),
        CircleError::TangentLine { index } => violation(
            &format!("lines[{}]", index - 1),
            "line is tangent to the circle at its vertex",
        ),
        other => violation("config", other.to_string()),
    }
}

pub fn parse_config(bytes: &[u8]) -> Result<ConfigFile, ConfigError> {
    let raw: RawConfig =
        serde_json::from_slice(bytes).map_err(|e| ConfigError::MalformedJson(e.to_string()))?;
    match raw {
        RawConfig::Ceva {
            vertices,
            pivot,
            s,
            t,
        } => {
            let vertices = points_at(&vertices, "vertices")?;
            let pivot = point_at(&pivot, "M")?;
            CevaConfig::new(vertices, pivot, s, t)
                .map(ConfigFile::Ceva)
                .map_err(from_ceva_error)
        }
        RawConfig::Inscribed {
            radius,
            params,
            lines,
            s,
            t,
        } => {
            let radius = rational_at(&radius, "radius")?;
            let params = params
                .iter()
                .enumerate()
                .map(|(k, u)| rational_at(u, format!("params[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let specs = lines
                .iter()
                .enumerate()
                .map(|(k, spec)| match spec {
                    RawLineSpec::SecondParam(v) => {
                        rational_at(v, format!("lines[{k}].second_param")).map(LineSpec::SecondParam)
                    }
                    RawLineSpec::Through(p) => {
                        point_at(p, &format!("lines[{k}].through")).map(LineSpec::ThroughPoint)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            InscribedConfig::new(radius, params, specs, s, t)
                .map(ConfigFile::Inscribed)
                .map_err(from_circle_error)
        }
        RawConfig::Counterexample {
            vertices,
            pivot,
            seed,
        } => {
            let vertices = points_at(&vertices, "vertices")?;
            let pivot = point_at(&pivot, "M")?;
            if vertices.len() != 5 {
                return Err(violation(
                    "vertices",
                    format!("counterexample needs 5 vertices, got {}", vertices.len()),
                ));
            }
            for (a, va) in vertices.iter().enumerate() {
                if va == &pivot {
                    return Err(violation("M", format!("coincides with vertex {}", a + 1)));
                }
                if let Some(b) = vertices[a + 1..].iter().position(|vb| vb == va) {
                    return Err(violation(
                        &format!("vertices[{}]", a + b + 1),
                        format!("duplicates vertex {}", a + 1),
                    ));
                }
            }
            Ok(ConfigFile::Counterexample(CounterexampleInput {
                vertices,
                pivot,
                seed,
            }))
        }
    }
}
