//! Exact planar primitives: points, lines, affine maps and the predicates the
//! theorem checks are assembled from.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("points coincide, no unique line through them")]
    IdenticalPoints,
    #[error("line coefficients a and b are both zero")]
    DegenerateLine,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("lines coincide")]
    CoincidentLines,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("ratio point coincides with the denominator end of the segment")]
    CoincidesWithDenominatorEnd,
    #[error("line list contains the same line twice")]
    DuplicateLines,
    #[error("at least two lines are needed to test concurrency")]
    TooFewLines,
    #[error("affine map is singular")]
    SingularMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let two = Rational::from_integer(2.into());
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }

    pub fn dist2(&self, other: &Point) -> Rational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

/// The locus `a·x + b·y + c = 0`, stored with the first nonzero of `(a, b)`
/// equal to one so that equal lines compare equal field by field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl Line {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, GeomError> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(GeomError::DegenerateLine);
        };
        Ok(Self {
            a: a / &lead,
            b: b / &lead,
            c: c / &lead,
        })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// `a·x + b·y + c` at `p`; zero exactly when `p` is on the line.
    pub fn eval(&self, p: &Point) -> Rational {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel_to(&self, other: &Line) -> bool {
        (&self.a * &other.b - &self.b * &other.a).is_zero()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x + {}y + {} = 0",
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c)
        )
    }
}

pub fn line_through(p: &Point, q: &Point) -> Result<Line, GeomError> {
    if p == q {
        return Err(GeomError::IdenticalPoints);
    }
    let a = &q.y - &p.y;
    let b = &p.x - &q.x;
    let c = -(&a * &p.x + &b * &p.y);
    Line::new(a, b, c)
}

pub fn intersect_lines(l1: &Line, l2: &Line) -> Result<Point, GeomError> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Err(if l1 == l2 {
            GeomError::CoincidentLines
        } else {
            GeomError::ParallelLines
        });
    }
    let x = (&l1.b * &l2.c - &l2.b * &l1.c) / &det;
    let y = (&l1.c * &l2.a - &l2.c * &l1.a) / &det;
    Ok(Point::new(x, y))
}

/// Twice the signed area of triangle `pqr`; positive for counter-clockwise.
pub fn signed_area2(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

pub fn is_collinear(p: &Point, q: &Point, r: &Point) -> bool {
    signed_area2(p, q, r).is_zero()
}

/// The signed ratio `XA / XB` of directed segments: the scalar `r` with
/// `A − X = r·(B − X)`. Negative iff `X` lies strictly between `A` and `B`.
pub fn directed_ratio(x: &Point, a: &Point, b: &Point) -> Result<Rational, GeomError> {
    if x == b {
        return Err(GeomError::CoincidesWithDenominatorEnd);
    }
    if !is_collinear(x, a, b) {
        return Err(GeomError::NotCollinear);
    }
    let bx = &b.x - &x.x;
    let by = &b.y - &x.y;
    let from_x = (!bx.is_zero()).then(|| (&a.x - &x.x) / &bx);
    let from_y = (!by.is_zero()).then(|| (&a.y - &x.y) / &by);
    match (from_x, from_y) {
        (Some(rx), Some(ry)) => {
            assert_eq!(rx, ry, "collinear points gave inconsistent coordinate ratios");
            Ok(rx)
        }
        (Some(r), None) | (None, Some(r)) => Ok(r),
        (None, None) => unreachable!("x != b"),
    }
}

/// The unique point `X` on line `AB` with `directed_ratio(X, A, B) = ratio`.
/// `None` when `ratio = 1` (the point is at infinity) or `A = B`.
pub fn point_with_ratio(a: &Point, b: &Point, ratio: &Rational) -> Option<Point> {
    if ratio.is_one() || a == b {
        return None;
    }
    let denom = Rational::one() - ratio;
    Some(Point::new(
        (&a.x - ratio * &b.x) / &denom,
        (&a.y - ratio * &b.y) / &denom,
    ))
}

/// True iff every line passes through one common point.
pub fn are_concurrent(lines: &[Line]) -> Result<bool, GeomError> {
    if lines.len() < 2 {
        return Err(GeomError::TooFewLines);
    }
    for (k, l) in lines.iter().enumerate() {
        if lines[k + 1..].contains(l) {
            return Err(GeomError::DuplicateLines);
        }
    }
    let common = match intersect_lines(&lines[0], &lines[1]) {
        Ok(p) => p,
        Err(_) => return Ok(false),
    };
    Ok(lines[2..].iter().all(|l| l.contains(&common)))
}

/// `(x, y) ↦ (m11·x + m12·y + tx, m21·x + m22·y + ty)` with nonzero determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    m11: Rational,
    m12: Rational,
    m21: Rational,
    m22: Rational,
    tx: Rational,
    ty: Rational,
}

impl AffineMap {
    pub fn new(
        m11: Rational,
        m12: Rational,
        m21: Rational,
        m22: Rational,
        tx: Rational,
        ty: Rational,
    ) -> Result<Self, GeomError> {
        if (&m11 * &m22 - &m12 * &m21).is_zero() {
            return Err(GeomError::SingularMap);
        }
        Ok(Self {
            m11,
            m12,
            m21,
            m22,
            tx,
            ty,
        })
    }

    pub fn identity() -> Self {
        Self {
            m11: Rational::one(),
            m12: Rational::zero(),
            m21: Rational::zero(),
            m22: Rational::one(),
            tx: Rational::zero(),
            ty: Rational::zero(),
        }
    }

    pub fn determinant(&self) -> Rational {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.m11 * &p.x + &self.m12 * &p.y + &self.tx,
            &self.m21 * &p.x + &self.m22 * &p.y + &self.ty,
        )
    }
}

pub fn affine_apply(map: &AffineMap, p: &Point) -> Point {
    map.apply(p)
}
