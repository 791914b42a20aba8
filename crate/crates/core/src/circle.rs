//! Polygons inscribed in the circle `x² + y² = r²`.
//!
//! Vertices come from the rational parametrization
//! `u ↦ r·((1 − u²)/(1 + u²), 2u/(1 + u²))`, so every vertex, every second
//! intersection `M′_i` and every product below stays rational. Through each
//! vertex `A_i` runs a line `d_i`; it is cut against the same sides as in the
//! polygon case and meets the circle again at `M′_i`. The side-ratio product
//! (the left side) squared equals `∏ |M′_i A_{i+s}|² / |M′_i A_{i+s+t}|²`.
//! Chords between non-collinear points carry no sign, so the right side is
//! only compared in squared form.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ceva::{check_parameters, idx_shift, sides_hit, CevaError, Degeneracy, Factor};
use crate::geom::{directed_ratio, intersect_lines, line_through, GeomError, Line, Point};
use crate::rational::{sign_power, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircleError {
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("circle parameters must be strictly increasing (parameter {index} is not)")]
    NotIncreasing { index: usize },
    #[error("line {index}: second parameter coincides with a vertex parameter")]
    SecondParamIsVertex { index: usize },
    #[error("line {index}: through-point coincides with its vertex")]
    ThroughVertex { index: usize },
    #[error("point is not on the circle")]
    NotOnCircle,
    #[error("point is not on the line")]
    NotOnLine,
    #[error("line is tangent to the circle")]
    Tangent,
    #[error("line {index} is tangent to the circle at its vertex")]
    TangentLine { index: usize },
    #[error("degenerate configuration at (i={i}, j={j}): {kind}")]
    Degenerate { i: usize, j: usize, kind: Degeneracy },
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("the lines d_i do not pass through one common point")]
    NotConcurrent,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

impl From<CevaError> for CircleError {
    fn from(e: CevaError) -> Self {
        match e {
            CevaError::InvalidParameters(msg) => CircleError::InvalidParameters(msg),
            CevaError::Geom(g) => CircleError::Geom(g),
            other => CircleError::InvalidParameters(other.to_string()),
        }
    }
}

/// The rational point with parameter `u` on the circle of radius `r`.
///
/// Panics if `r <= 0`.
pub fn circle_point(u: &Rational, r: &Rational) -> Point {
    assert!(r.is_positive(), "radius must be positive");
    let u2 = u * u;
    let denom = Rational::one() + &u2;
    let two = Rational::from_integer(2.into());
    Point::new(r * (Rational::one() - u2) / &denom, two * r * u / denom)
}

pub fn on_circle(p: &Point, r: &Rational) -> bool {
    &p.x * &p.x + &p.y * &p.y == r * r
}

/// The other point where `line` meets the circle, given one meeting point.
///
/// With `known` on both curves and direction `d = (b, −a)`, the substituted
/// quadratic in `τ` has roots `0` and `−2(known·d)/|d|²`.
pub fn second_intersection(line: &Line, known: &Point, r: &Rational) -> Result<Point, CircleError> {
    if !on_circle(known, r) {
        return Err(CircleError::NotOnCircle);
    }
    if !line.contains(known) {
        return Err(CircleError::NotOnLine);
    }
    let (dx, dy) = (line.b().clone(), -line.a().clone());
    let dot = &known.x * &dx + &known.y * &dy;
    if dot.is_zero() {
        return Err(CircleError::Tangent);
    }
    let tau = -(Rational::from_integer(2.into()) * dot) / (&dx * &dx + &dy * &dy);
    Ok(Point::new(&known.x + &tau * dx, &known.y + tau * dy))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineSpec {
    /// `d_i` is the chord from `A_i` to the circle point with this parameter.
    SecondParam(Rational),
    /// `d_i` is the line from `A_i` through this point.
    ThroughPoint(Point),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InscribedConfig {
    radius: Rational,
    params: Vec<Rational>,
    line_specs: Vec<LineSpec>,
    s: usize,
    t: usize,
    vertices: Vec<Point>,
    lines: Vec<Line>,
    second_points: Vec<Point>,
}

impl InscribedConfig {
    pub fn new(
        radius: Rational,
        params: Vec<Rational>,
        line_specs: Vec<LineSpec>,
        s: usize,
        t: usize,
    ) -> Result<Self, CircleError> {
        if !radius.is_positive() {
            return Err(CircleError::NonPositiveRadius);
        }
        let n = params.len();
        check_parameters(n, s, t)?;
        if let Some(k) = params.windows(2).position(|w| w[0] >= w[1]) {
            return Err(CircleError::NotIncreasing { index: k + 2 });
        }
        if line_specs.len() != n {
            return Err(CircleError::InvalidParameters(format!(
                "expected {n} line specs, got {}",
                line_specs.len()
            )));
        }

        let vertices: Vec<Point> = params.iter().map(|u| circle_point(u, &radius)).collect();
        let mut lines = Vec::with_capacity(n);
        let mut second_points = Vec::with_capacity(n);
        for (idx, spec) in line_specs.iter().enumerate() {
            let index = idx + 1;
            let a = &vertices[idx];
            let (line, second) = match spec {
                LineSpec::SecondParam(v) => {
                    if params.contains(v) {
                        return Err(CircleError::SecondParamIsVertex { index });
                    }
                    let second = circle_point(v, &radius);
                    (line_through(a, &second)?, second)
                }
                LineSpec::ThroughPoint(p) => {
                    if p == a {
                        return Err(CircleError::ThroughVertex { index });
                    }
                    let line = line_through(a, p)?;
                    let second = second_intersection(&line, a, &radius).map_err(|e| match e {
                        CircleError::Tangent => CircleError::TangentLine { index },
                        other => other,
                    })?;
                    (line, second)
                }
            };
            lines.push(line);
            second_points.push(second);
        }

        let cfg = Self {
            radius,
            params,
            line_specs,
            s,
            t,
            vertices,
            lines,
            second_points,
        };
        for i in 1..=n {
            for j in cfg.sides_hit(i) {
                cfg.side_meet(i, j)?;
            }
        }
        Ok(cfg)
    }

    pub fn n(&self) -> usize {
        self.params.len()
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn line_specs(&self) -> &[LineSpec] {
        &self.line_specs
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i - 1]
    }

    /// `d_i`, 1-based.
    pub fn line(&self, i: usize) -> &Line {
        &self.lines[i - 1]
    }

    /// `M′_i`, 1-based.
    pub fn second_point(&self, i: usize) -> &Point {
        &self.second_points[i - 1]
    }

    pub fn second_points(&self) -> &[Point] {
        &self.second_points
    }

    pub fn sides_hit(&self, i: usize) -> Vec<usize> {
        sides_hit(i, self.s, self.t, self.n())
    }

    fn shifted(&self, i: usize, k: usize) -> usize {
        idx_shift(i, k as i64, self.n())
    }

    fn check_index(&self, index: usize) -> Result<(), CircleError> {
        if (1..=self.n()).contains(&index) {
            Ok(())
        } else {
            Err(CircleError::IndexOutOfRange { index, n: self.n() })
        }
    }

    /// `M_ij = d_i ∩ A_j A_{p(j)}`.
    pub fn side_meet(&self, i: usize, j: usize) -> Result<Point, CircleError> {
        self.check_index(i)?;
        self.check_index(j)?;
        let (aj, apj) = (self.vertex(j), self.vertex(self.shifted(j, 1)));
        let side = line_through(aj, apj)?;
        let meet = intersect_lines(self.line(i), &side).map_err(|e| {
            let kind = match e {
                GeomError::CoincidentLines => Degeneracy::Coincident,
                _ => Degeneracy::Parallel,
            };
            CircleError::Degenerate { i, j, kind }
        })?;
        if &meet == aj || &meet == apj {
            return Err(CircleError::Degenerate {
                i,
                j,
                kind: Degeneracy::HitsVertex,
            });
        }
        Ok(meet)
    }
}

/// Product of `M_ij A_j / M_ij A_{p(j)}` over every line and the sides it cuts.
pub fn theorem2_lhs(cfg: &InscribedConfig) -> Result<(Rational, Vec<Factor>), CircleError> {
    let mut factors = Vec::with_capacity(cfg.n() * cfg.t);
    for i in 1..=cfg.n() {
        for j in cfg.sides_hit(i) {
            let meet = cfg.side_meet(i, j)?;
            let value = directed_ratio(&meet, cfg.vertex(j), cfg.vertex(cfg.shifted(j, 1)))?;
            factors.push(Factor { i, j, value });
        }
    }
    let product = factors.iter().fold(Rational::one(), |acc, f| acc * &f.value);
    Ok((product, factors))
}

/// `∏ |M′_i A_{i+s}|² / |M′_i A_{i+s+t}|²`.
pub fn theorem2_rhs_squared(cfg: &InscribedConfig) -> Result<Rational, CircleError> {
    let mut product = Rational::one();
    for i in 1..=cfg.n() {
        let (first, last) = (cfg.shifted(i, cfg.s), cfg.shifted(i, cfg.s + cfg.t));
        let mp = cfg.second_point(i);
        let den = mp.dist2(cfg.vertex(last));
        if den.is_zero() {
            return Err(CircleError::Degenerate {
                i,
                j: cfg.shifted(last, cfg.n() - 1),
                kind: Degeneracy::HitsVertex,
            });
        }
        product *= mp.dist2(cfg.vertex(first)) / den;
    }
    Ok(product)
}

/// Squared form of the chord relation at the first side cut by `d_i`:
/// `|M A_k|² / |M A_{k+1}|² = (|M′A_k|² / |M′A_{k+1}|²)·(|A_i A_k|² / |A_i A_{k+1}|²)`
/// with `k = i + s` and `M = M_{i,k}`.
pub fn similar_triangle_relation3(cfg: &InscribedConfig, i: usize) -> Result<bool, CircleError> {
    cfg.check_index(i)?;
    let k = cfg.shifted(i, cfg.s);
    let k1 = cfg.shifted(k, 1);
    let meet = cfg.side_meet(i, k)?;
    let (ak, ak1, ai) = (cfg.vertex(k), cfg.vertex(k1), cfg.vertex(i));
    let mp = cfg.second_point(i);
    let mp_far = mp.dist2(ak1);
    if mp_far.is_zero() {
        return Err(CircleError::Degenerate {
            i,
            j: k,
            kind: Degeneracy::HitsVertex,
        });
    }
    let left = meet.dist2(ak) / meet.dist2(ak1);
    let right = (mp.dist2(ak) / mp_far) * (ai.dist2(ak) / ai.dist2(ak1));
    Ok(left == right)
}

/// Whether `M_{i,i+s}` lies strictly inside the circle.
pub fn first_meet_inside(cfg: &InscribedConfig, i: usize) -> Result<bool, CircleError> {
    let meet = cfg.side_meet(i, cfg.shifted(i, cfg.s))?;
    Ok(&meet.x * &meet.x + &meet.y * &meet.y < cfg.radius() * cfg.radius())
}

/// `∏ |A_i A_{i+s}|² / |A_i A_{i+s+t}|²`, which is 1 whenever `2s + t = n`.
pub fn chord_telescoping_squared(cfg: &InscribedConfig) -> Rational {
    (1..=cfg.n()).fold(Rational::one(), |acc, i| {
        let ai = cfg.vertex(i);
        acc * ai.dist2(cfg.vertex(cfg.shifted(i, cfg.s)))
            / ai.dist2(cfg.vertex(cfg.shifted(i, cfg.s + cfg.t)))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Report {
    pub factors: Vec<Factor>,
    pub lhs: Rational,
    pub lhs_squared: Rational,
    pub rhs_squared: Rational,
    /// `(−1)^n` when the lines are concurrent, otherwise unset.
    pub expected_lhs: Option<Rational>,
    pub holds: bool,
    pub m_prime_points: Vec<Point>,
}

pub fn theorem2_check(cfg: &InscribedConfig) -> Result<Theorem2Report, CircleError> {
    let (lhs, factors) = theorem2_lhs(cfg)?;
    let rhs_squared = theorem2_rhs_squared(cfg)?;
    let lhs_squared = &lhs * &lhs;
    let holds = lhs_squared == rhs_squared;
    Ok(Theorem2Report {
        factors,
        lhs,
        lhs_squared,
        rhs_squared,
        expected_lhs: None,
        holds,
        m_prime_points: cfg.second_points.clone(),
    })
}

/// The common point of all `d_i`, if there is one.
pub fn common_point(cfg: &InscribedConfig) -> Option<Point> {
    let mut distinct: Vec<&Line> = Vec::new();
    for l in &cfg.lines {
        if !distinct.contains(&l) {
            distinct.push(l);
        }
    }
    if distinct.len() < 2 {
        return None;
    }
    let p = intersect_lines(distinct[0], distinct[1]).ok()?;
    distinct[2..].iter().all(|l| l.contains(&p)).then_some(p)
}

/// With all `d_i` through one point, the side-ratio product is `(−1)^n` and
/// the squared chord-ratio product is 1.
pub fn application_concurrent_check(cfg: &InscribedConfig) -> Result<Theorem2Report, CircleError> {
    if common_point(cfg).is_none() {
        return Err(CircleError::NotConcurrent);
    }
    let mut report = theorem2_check(cfg)?;
    let expected = sign_power(cfg.n());
    report.holds = report.holds && report.lhs == expected && report.rhs_squared.is_one();
    report.expected_lhs = Some(expected);
    Ok(report)
}

/// The `t = 1` case: each line cuts only the side opposite its vertex.
pub fn consequence21_check(cfg: &InscribedConfig) -> Result<Theorem2Report, CircleError> {
    if cfg.t != 1 {
        return Err(CircleError::InvalidParameters(format!(
            "opposite-side form needs t = 1, got t = {}",
            cfg.t
        )));
    }
    theorem2_check(cfg)
}
