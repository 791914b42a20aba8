//! Seeded generation of valid configurations and batch verification.
//!
//! Every generator is a pure function of `(params, trial)`: the trial number
//! selects a ChaCha stream under the run seed. Candidates that fail a
//! configuration invariant are thrown away and redrawn, never nudged.

use std::time::{Duration, Instant};

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::ceva::{theorem1_product, CevaConfig};
use crate::circle::{
    chord_telescoping_squared, similar_triangle_relation3, theorem2_check, InscribedConfig,
    LineSpec,
};
use crate::config::ConfigFile;
use crate::geom::{AffineMap, Point};
use crate::rational::{format_rational, rat, sign_power, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("trial {trial}: no valid configuration after {rejections} rejections")]
    GenerationExhausted { trial: u64, rejections: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    /// Numerators are drawn from `[-bound, bound]`, denominators from `[1, bound]`.
    pub coordinate_bound: i64,
    pub max_rejections: u32,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            seed: 0,
            n_min: 3,
            n_max: 9,
            coordinate_bound: 20,
            max_rejections: 1000,
        }
    }
}

impl GenParams {
    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.n_min < 3 {
            return Err(HarnessError::InvalidParams(format!(
                "n_min must be at least 3, got {}",
                self.n_min
            )));
        }
        if self.n_min > self.n_max {
            return Err(HarnessError::InvalidParams(format!(
                "n_min {} exceeds n_max {}",
                self.n_min, self.n_max
            )));
        }
        if self.coordinate_bound < 2 {
            return Err(HarnessError::InvalidParams(format!(
                "coordinate_bound must be at least 2, got {}",
                self.coordinate_bound
            )));
        }
        if self.max_rejections == 0 {
            return Err(HarnessError::InvalidParams("max_rejections must be positive".into()));
        }
        Ok(())
    }
}

/// A generated configuration and the number of candidates discarded first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated<T> {
    pub config: T,
    pub rejections: u32,
}

/// Fixed `(s, t)`; the polygon size is `2s + t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub s: usize,
    pub t: usize,
}

impl Shape {
    pub fn n(&self) -> usize {
        2 * self.s + self.t
    }
}

fn rng_for(params: &GenParams, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(trial);
    rng
}

fn draw_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

fn draw_point(rng: &mut impl Rng, bound: i64) -> Point {
    Point::new(draw_rational(rng, bound), draw_rational(rng, bound))
}

fn draw_shape(rng: &mut impl Rng, params: &GenParams) -> Shape {
    let n = rng.gen_range(params.n_min..=params.n_max);
    let s = rng.gen_range(1..=(n - 1) / 2);
    Shape { s, t: n - 2 * s }
}

fn rejection_loop<T>(
    params: &GenParams,
    trial: u64,
    mut candidate: impl FnMut(&mut ChaCha8Rng) -> Option<T>,
) -> Result<Generated<T>, HarnessError> {
    params.validate()?;
    let mut rng = rng_for(params, trial);
    let mut rejections = 0;
    loop {
        if let Some(config) = candidate(&mut rng) {
            return Ok(Generated { config, rejections });
        }
        rejections += 1;
        if rejections >= params.max_rejections {
            return Err(HarnessError::GenerationExhausted { trial, rejections });
        }
    }
}

fn ceva_candidate(
    rng: &mut ChaCha8Rng,
    params: &GenParams,
    shape: Option<Shape>,
    axis_free: bool,
) -> Option<CevaConfig> {
    let shape = shape.unwrap_or_else(|| draw_shape(rng, params));
    let bound = params.coordinate_bound;
    let vertices: Vec<Point> = (0..shape.n()).map(|_| draw_point(rng, bound)).collect();
    let pivot = draw_point(rng, bound);
    if axis_free && vertices.iter().any(|v| v.x == pivot.x || v.y == pivot.y) {
        return None;
    }
    CevaConfig::new(vertices, pivot, shape.s, shape.t).ok()
}

/// A polygon with `n ∈ [n_min, n_max]`, a uniformly drawn decomposition
/// `2s + t = n`, and a pivot in general position.
pub fn gen_ceva_config(params: &GenParams, trial: u64) -> Result<Generated<CevaConfig>, HarnessError> {
    rejection_loop(params, trial, |rng| ceva_candidate(rng, params, None, false))
}

/// As [`gen_ceva_config`] with `(s, t)` fixed; `n_min`/`n_max` are ignored.
pub fn gen_ceva_config_shaped(
    params: &GenParams,
    trial: u64,
    shape: Shape,
) -> Result<Generated<CevaConfig>, HarnessError> {
    if shape.s == 0 || shape.t == 0 {
        return Err(HarnessError::InvalidParams("s and t must be positive".into()));
    }
    rejection_loop(params, trial, |rng| ceva_candidate(rng, params, Some(shape), false))
}

/// As [`gen_ceva_config`], additionally requiring that no vertex shares an
/// x or y coordinate with the pivot.
pub fn gen_axis_free_ceva_config(
    params: &GenParams,
    trial: u64,
) -> Result<Generated<CevaConfig>, HarnessError> {
    rejection_loop(params, trial, |rng| ceva_candidate(rng, params, None, true))
}

fn draw_params(rng: &mut impl Rng, n: usize, bound: i64) -> Option<Vec<Rational>> {
    let mut us: Vec<Rational> = (0..n).map(|_| draw_rational(rng, bound)).collect();
    us.sort();
    us.dedup();
    (us.len() == n).then_some(us)
}

fn draw_radius(rng: &mut impl Rng, bound: i64) -> Rational {
    rat(rng.gen_range(1..=bound), rng.gen_range(1..=bound))
}

/// An inscribed polygon whose lines `d_i` are chords to further rational
/// circle points.
pub fn gen_inscribed_config(
    params: &GenParams,
    trial: u64,
) -> Result<Generated<InscribedConfig>, HarnessError> {
    let bound = params.coordinate_bound;
    rejection_loop(params, trial, |rng| {
        let shape = draw_shape(rng, params);
        let radius = draw_radius(rng, bound);
        let us = draw_params(rng, shape.n(), bound)?;
        let specs = (0..shape.n())
            .map(|_| LineSpec::SecondParam(draw_rational(rng, bound)))
            .collect();
        InscribedConfig::new(radius, us, specs, shape.s, shape.t).ok()
    })
}

/// An inscribed polygon whose lines `d_i` all pass through one random point.
pub fn gen_concurrent_inscribed_config(
    params: &GenParams,
    trial: u64,
) -> Result<Generated<InscribedConfig>, HarnessError> {
    let bound = params.coordinate_bound;
    rejection_loop(params, trial, |rng| {
        let shape = draw_shape(rng, params);
        let radius = draw_radius(rng, bound);
        let us = draw_params(rng, shape.n(), bound)?;
        let pivot = draw_point(rng, bound);
        let specs = vec![LineSpec::ThroughPoint(pivot); shape.n()];
        InscribedConfig::new(radius, us, specs, shape.s, shape.t).ok()
    })
}

/// A random invertible rational affine map.
pub fn gen_affine_map(params: &GenParams, trial: u64) -> Result<Generated<AffineMap>, HarnessError> {
    let bound = params.coordinate_bound;
    rejection_loop(params, trial, |rng| {
        let mut c: Vec<Rational> = (0..6).map(|_| draw_rational(rng, bound)).collect();
        // keep some maps orientation-reversing
        if rng.gen_bool(0.5) {
            c.swap(0, 1);
        }
        let mut it = c.into_iter();
        let mut next = || it.next().expect("six coefficients");
        AffineMap::new(next(), next(), next(), next(), next(), next()).ok()
    })
}

/// A random pentagon and pivot whose five cevians through the pivot are all usable.
pub fn gen_pentagon(params: &GenParams, trial: u64) -> Result<Generated<(Vec<Point>, Point)>, HarnessError> {
    let bound = params.coordinate_bound;
    rejection_loop(params, trial, |rng| {
        let vertices: Vec<Point> = (0..5).map(|_| draw_point(rng, bound)).collect();
        let pivot = draw_point(rng, bound);
        CevaConfig::new(vertices.clone(), pivot.clone(), 2, 1).ok()?;
        Some((vertices, pivot))
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzFailure {
    pub seed: u64,
    pub trial: u64,
    /// Full configuration in the config-file format, ready to feed back to `verify`.
    pub config: Value,
    pub expected: String,
    pub actual: String,
}

fn serialize_millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub kind: String,
    pub trials_requested: u64,
    pub trials_completed: u64,
    pub rejections: u64,
    /// Trials abandoned because generation hit `max_rejections`.
    pub exhausted: u64,
    pub failures: Vec<FuzzFailure>,
    #[serde(rename = "elapsed_ms", serialize_with = "serialize_millis")]
    pub elapsed: Duration,
}

impl FuzzReport {
    fn new(kind: &str, trials: u64) -> Self {
        Self {
            kind: kind.to_owned(),
            trials_requested: trials,
            trials_completed: 0,
            rejections: 0,
            exhausted: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record<T>(
        &mut self,
        generated: Result<Generated<T>, HarnessError>,
        check: impl FnOnce(&T) -> Result<(), (String, String)>,
        to_config: impl FnOnce(T) -> ConfigFile,
        seed: u64,
        trial: u64,
    ) {
        match generated {
            Ok(Generated { config, rejections }) => {
                self.rejections += u64::from(rejections);
                self.trials_completed += 1;
                if let Err((expected, actual)) = check(&config) {
                    self.failures.push(FuzzFailure {
                        seed,
                        trial,
                        config: to_config(config).to_value(),
                        expected,
                        actual,
                    });
                }
            }
            Err(HarnessError::GenerationExhausted { rejections, .. }) => {
                self.rejections += u64::from(rejections);
                self.exhausted += 1;
            }
            Err(e) => unreachable!("parameters validated up front: {e}"),
        }
    }
}

fn check_theorem1(cfg: &CevaConfig) -> Result<(), (String, String)> {
    let expected = sign_power(cfg.n());
    match theorem1_product(cfg) {
        Ok(report) if report.holds => Ok(()),
        Ok(report) => Err((format_rational(&expected), format_rational(&report.product))),
        Err(e) => Err((format_rational(&expected), format!("error: {e}"))),
    }
}

pub fn fuzz_theorem1(params: &GenParams, trials: u64) -> Result<FuzzReport, HarnessError> {
    params.validate()?;
    let start = Instant::now();
    let mut report = FuzzReport::new("ceva", trials);
    for trial in 0..trials {
        report.record(
            gen_ceva_config(params, trial),
            check_theorem1,
            ConfigFile::Ceva,
            params.seed,
            trial,
        );
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InscribedMode {
    /// Lines are chords to random circle points.
    Chords,
    /// Lines all pass through one common point.
    Concurrent,
}

fn check_theorem2(cfg: &InscribedConfig, mode: InscribedMode) -> Result<(), (String, String)> {
    let report = theorem2_check(cfg).map_err(|e| ("identity".to_owned(), format!("error: {e}")))?;
    if !report.holds {
        return Err((
            format!("lhs^2 = {}", format_rational(&report.rhs_squared)),
            format!("lhs^2 = {}", format_rational(&report.lhs_squared)),
        ));
    }
    let chord = chord_telescoping_squared(cfg);
    if !chord.is_one() {
        return Err(("chord product 1".into(), format!("chord product {}", format_rational(&chord))));
    }
    for i in 1..=cfg.n() {
        match similar_triangle_relation3(cfg, i) {
            Ok(true) => {}
            Ok(false) => return Err((format!("relation at i={i}"), "violated".into())),
            Err(e) => return Err((format!("relation at i={i}"), format!("error: {e}"))),
        }
    }
    if mode == InscribedMode::Concurrent {
        let expected = sign_power(cfg.n());
        if report.lhs != expected || !report.rhs_squared.is_one() {
            return Err((
                format!("lhs = {}, rhs^2 = 1", format_rational(&expected)),
                format!(
                    "lhs = {}, rhs^2 = {}",
                    format_rational(&report.lhs),
                    format_rational(&report.rhs_squared)
                ),
            ));
        }
    }
    Ok(())
}

pub fn fuzz_theorem2(
    params: &GenParams,
    trials: u64,
    mode: InscribedMode,
) -> Result<FuzzReport, HarnessError> {
    params.validate()?;
    let start = Instant::now();
    let kind = match mode {
        InscribedMode::Chords => "inscribed",
        InscribedMode::Concurrent => "concurrent",
    };
    let mut report = FuzzReport::new(kind, trials);
    for trial in 0..trials {
        let generated = match mode {
            InscribedMode::Chords => gen_inscribed_config(params, trial),
            InscribedMode::Concurrent => gen_concurrent_inscribed_config(params, trial),
        };
        report.record(
            generated,
            |cfg| check_theorem2(cfg, mode),
            ConfigFile::Inscribed,
            params.seed,
            trial,
        );
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
