//! Cevian products over n-gons.
//!
//! Vertices are indexed `1..=n` and `p` is the cycle `1 → 2 → … → n → 1`.
//! Side `j` is the line `A_j A_{p(j)}`. For parameters `s, t ≥ 1` with
//! `2s + t = n`, the line through `A_i` and the pivot `M` is cut against the
//! `t` consecutive sides starting at `i + s`, and the product of the directed
//! ratios `M_ij A_j / M_ij A_{p(j)}` over all `i` and those sides is `(−1)^n`.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::geom::{
    are_concurrent, directed_ratio, intersect_lines, line_through, point_with_ratio, GeomError,
    Line, Point,
};
use crate::rational::{rat, sign_power, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// The cevian is parallel to the side line.
    Parallel,
    /// The cevian is the side line itself.
    Coincident,
    /// The meeting point is an endpoint of the side, so the ratio is 0 or undefined.
    HitsVertex,
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Degeneracy::Parallel => "cevian is parallel to the side line",
            Degeneracy::Coincident => "cevian coincides with the side line",
            Degeneracy::HitsVertex => "cevian meets the side line at one of its vertices",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CevaError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),
    #[error("pivot coincides with vertex {0}")]
    PivotIsVertex(usize),
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("side {j} is not cut by the cevian from vertex {i}")]
    SideNotHit { i: usize, j: usize },
    #[error("degenerate configuration at (i={i}, j={j}): {kind}")]
    Degenerate { i: usize, j: usize, kind: Degeneracy },
    #[error("a vertex shares an x or y coordinate with the pivot")]
    AxisAligned,
    #[error("division by zero: vertex {q} lies on the line through vertex {r} and the pivot")]
    DivisionByZero { r: usize, q: usize },
    #[error("indices must differ")]
    SameIndex,
    #[error("no counterexample branch leaves the fourth cevian off the pivot")]
    NoCounterexampleBranch,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// `p^k(i)` on `1..=n`; negative `k` applies `p⁻¹`.
pub fn idx_shift(i: usize, k: i64, n: usize) -> usize {
    assert!(n >= 1 && (1..=n).contains(&i), "index {i} outside 1..={n}");
    let n = n as i64;
    ((i as i64 - 1 + k).rem_euclid(n) + 1) as usize
}

/// Side indices cut by the line through vertex `i`: `i+s, …, i+s+t−1`.
pub fn sides_hit(i: usize, s: usize, t: usize, n: usize) -> Vec<usize> {
    (0..t)
        .map(|offset| idx_shift(i, (s + offset) as i64, n))
        .collect()
}

pub(crate) fn check_parameters(n: usize, s: usize, t: usize) -> Result<(), CevaError> {
    if n < 3 {
        return Err(CevaError::InvalidParameters(format!(
            "polygon needs at least 3 vertices, got {n}"
        )));
    }
    if s == 0 || t == 0 {
        return Err(CevaError::InvalidParameters(format!(
            "s and t must be positive, got s={s}, t={t}"
        )));
    }
    if 2 * s + t != n {
        return Err(CevaError::InvalidParameters(format!(
            "2s + t must equal n, got 2·{s} + {t} != {n}"
        )));
    }
    Ok(())
}

fn check_distinct(vertices: &[Point], pivot: &Point) -> Result<(), CevaError> {
    for (a, va) in vertices.iter().enumerate() {
        if va == pivot {
            return Err(CevaError::PivotIsVertex(a + 1));
        }
        if let Some(b) = vertices[a + 1..].iter().position(|vb| vb == va) {
            return Err(CevaError::DuplicateVertex(a + 1, a + b + 2));
        }
    }
    Ok(())
}

/// `M_ij`: where the line `A_i M` meets the line of side `j`.
fn side_meet(vertices: &[Point], pivot: &Point, i: usize, j: usize) -> Result<Point, CevaError> {
    let n = vertices.len();
    let (aj, apj) = (&vertices[j - 1], &vertices[idx_shift(j, 1, n) - 1]);
    let cevian = line_through(&vertices[i - 1], pivot)?;
    let side = line_through(aj, apj)?;
    let meet = intersect_lines(&cevian, &side).map_err(|e| {
        let kind = match e {
            GeomError::CoincidentLines => Degeneracy::Coincident,
            _ => Degeneracy::Parallel,
        };
        CevaError::Degenerate { i, j, kind }
    })?;
    if &meet == aj || &meet == apj {
        return Err(CevaError::Degenerate {
            i,
            j,
            kind: Degeneracy::HitsVertex,
        });
    }
    Ok(meet)
}

/// A polygon `A_1 … A_n`, a pivot `M` and `(s, t)` with `2s + t = n`, checked
/// at construction so every ratio `M_ij A_j / M_ij A_{p(j)}` exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CevaConfig {
    vertices: Vec<Point>,
    pivot: Point,
    s: usize,
    t: usize,
}

impl CevaConfig {
    pub fn new(vertices: Vec<Point>, pivot: Point, s: usize, t: usize) -> Result<Self, CevaError> {
        let n = vertices.len();
        check_parameters(n, s, t)?;
        check_distinct(&vertices, &pivot)?;
        for i in 1..=n {
            for j in sides_hit(i, s, t, n) {
                side_meet(&vertices, &pivot, i, j)?;
            }
        }
        Ok(Self {
            vertices,
            pivot,
            s,
            t,
        })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// `A_i`, 1-based.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i - 1]
    }

    pub fn pivot(&self) -> &Point {
        &self.pivot
    }

    pub fn sides_hit(&self, i: usize) -> Vec<usize> {
        sides_hit(i, self.s, self.t, self.n())
    }

    fn check_index(&self, index: usize) -> Result<(), CevaError> {
        if (1..=self.n()).contains(&index) {
            Ok(())
        } else {
            Err(CevaError::IndexOutOfRange { index, n: self.n() })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    /// Vertex the cevian starts from.
    pub i: usize,
    /// Side the cevian is cut against.
    pub j: usize,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductReport {
    pub factors: Vec<Factor>,
    pub product: Rational,
    pub expected: Rational,
    pub holds: bool,
}

impl ProductReport {
    fn new(factors: Vec<Factor>, expected: Rational) -> Self {
        let product = factors
            .iter()
            .fold(Rational::one(), |acc, f| acc * &f.value);
        let holds = product == expected;
        Self {
            factors,
            product,
            expected,
            holds,
        }
    }
}

pub fn cevian_intersection(cfg: &CevaConfig, i: usize, j: usize) -> Result<Point, CevaError> {
    cfg.check_index(i)?;
    cfg.check_index(j)?;
    if !cfg.sides_hit(i).contains(&j) {
        return Err(CevaError::SideNotHit { i, j });
    }
    side_meet(&cfg.vertices, &cfg.pivot, i, j)
}

/// The directed ratio `M_ij A_j / M_ij A_{p(j)}`.
pub fn cevian_factor(cfg: &CevaConfig, i: usize, j: usize) -> Result<Rational, CevaError> {
    let meet = cevian_intersection(cfg, i, j)?;
    let next = cfg.vertex(idx_shift(j, 1, cfg.n()));
    Ok(directed_ratio(&meet, cfg.vertex(j), next)?)
}

pub fn theorem1_product(cfg: &CevaConfig) -> Result<ProductReport, CevaError> {
    let mut factors = Vec::with_capacity(cfg.n() * cfg.t);
    for i in 1..=cfg.n() {
        for j in cfg.sides_hit(i) {
            let value = cevian_factor(cfg, i, j)?;
            factors.push(Factor { i, j, value });
        }
    }
    Ok(ProductReport::new(factors, sign_power(cfg.n())))
}

/// The triangle case: three cevians through `M`, product `−1`.
pub fn classic_ceva_product(triangle: &[Point; 3], pivot: &Point) -> Result<ProductReport, CevaError> {
    let cfg = CevaConfig::new(triangle.to_vec(), pivot.clone(), 1, 1)?;
    theorem1_product(&cfg)
}

/// Odd polygon, each side cut by the cevian from its opposite vertex.
/// Factors are listed by side, so factor `k` is the ratio on `A_k A_{p(k)}`.
pub fn consequence11_product(polygon: &[Point], pivot: &Point) -> Result<ProductReport, CevaError> {
    let n = polygon.len();
    if n < 3 || n % 2 == 0 {
        return Err(CevaError::InvalidParameters(format!(
            "opposite-vertex form needs an odd polygon with at least 3 vertices, got {n}"
        )));
    }
    let cfg = CevaConfig::new(polygon.to_vec(), pivot.clone(), (n - 1) / 2, 1)?;
    let mut report = theorem1_product(&cfg)?;
    report.factors.sort_by_key(|f| f.j);
    Ok(report)
}

/// Every cevian cut against all `n − 2` sides not incident to its vertex.
pub fn consequence12_product(polygon: &[Point], pivot: &Point) -> Result<ProductReport, CevaError> {
    let n = polygon.len();
    if n < 3 {
        return Err(CevaError::InvalidParameters(format!(
            "polygon needs at least 3 vertices, got {n}"
        )));
    }
    let cfg = CevaConfig::new(polygon.to_vec(), pivot.clone(), 1, n - 2)?;
    theorem1_product(&cfg)
}

/// `d(x, y) = (x − a)/(X − a) − (y − b)/(Y − b)` for `A = (X, Y)` and pivot
/// `M = (a, b)`; vanishes exactly on the line `A M`.
pub fn proof_line_value(
    x: &Rational,
    y: &Rational,
    vertex: &Point,
    pivot: &Point,
) -> Result<Rational, CevaError> {
    let dx = &vertex.x - &pivot.x;
    let dy = &vertex.y - &pivot.y;
    if dx.is_zero() || dy.is_zero() {
        return Err(CevaError::AxisAligned);
    }
    Ok((x - &pivot.x) / dx - (y - &pivot.y) / dy)
}

/// `D(a, b)`: the line function of `A_b M` evaluated at `A_a`.
pub fn proof_d(cfg: &CevaConfig, a: usize, b: usize) -> Result<Rational, CevaError> {
    cfg.check_index(a)?;
    cfg.check_index(b)?;
    let at = cfg.vertex(a);
    proof_line_value(&at.x, &at.y, cfg.vertex(b), cfg.pivot())
}

/// `P(k) = (X_k − a)(Y_k − b)`.
pub fn proof_p(cfg: &CevaConfig, k: usize) -> Result<Rational, CevaError> {
    cfg.check_index(k)?;
    let v = cfg.vertex(k);
    Ok((&v.x - &cfg.pivot.x) * (&v.y - &cfg.pivot.y))
}

/// Checks `D(r, q) / D(q, r) = −P(r) / P(q)`.
pub fn proof_identity_check(cfg: &CevaConfig, r: usize, q: usize) -> Result<bool, CevaError> {
    if r == q {
        return Err(CevaError::SameIndex);
    }
    let d_rq = proof_d(cfg, r, q)?;
    let d_qr = proof_d(cfg, q, r)?;
    if d_qr.is_zero() {
        return Err(CevaError::DivisionByZero { r, q });
    }
    let p_r = proof_p(cfg, r)?;
    let p_q = proof_p(cfg, q)?;
    Ok(d_rq / d_qr == -(p_r / p_q))
}

/// `D(i+s, i) / D(i−s, i)`, the collapsed value of the factors contributed by
/// the cevian from vertex `i`.
pub fn cevian_telescoped(cfg: &CevaConfig, i: usize) -> Result<Rational, CevaError> {
    let n = cfg.n();
    cfg.check_index(i)?;
    let first = idx_shift(i, cfg.s as i64, n);
    let last = idx_shift(i, -(cfg.s as i64), n);
    let num = proof_d(cfg, first, i)?;
    let den = proof_d(cfg, last, i)?;
    if den.is_zero() {
        return Err(CevaError::DivisionByZero { r: i, q: last });
    }
    Ok(num / den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CounterexampleBranch {
    /// `M_1 A_1 / M_1 A_2 = 1/K`, `M_2 A_2 / M_2 A_3 = −1`.
    InverseK,
    /// `M_1 A_1 / M_1 A_2 = 2/K`, `M_2 A_2 / M_2 A_3 = −1/2`.
    TwiceInverseK,
}

impl CounterexampleBranch {
    pub fn label(&self) -> &'static str {
        match self {
            CounterexampleBranch::InverseK => "1/K",
            CounterexampleBranch::TwiceInverseK => "2/K",
        }
    }

    fn ratios(&self, k: &Rational) -> (Rational, Rational) {
        match self {
            CounterexampleBranch::InverseK => (k.recip(), rat(-1, 1)),
            CounterexampleBranch::TwiceInverseK => (rat(2, 1) / k, rat(-1, 2)),
        }
    }
}

impl fmt::Display for CounterexampleBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A pentagon with five cevians whose side-ratio product is `−1` although
/// the cevians do not all pass through one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleConfig {
    pub vertices: Vec<Point>,
    pub pivot: Point,
    /// The cevian from `A_k` for `k = 1..=5`; it meets side `k + 2` (mod 5).
    pub cevians: Vec<Line>,
    /// `M_1 … M_5`, with `M_k` on side `A_k A_{p(k)}`.
    pub meet_points: Vec<Point>,
    /// `M_k A_k / M_k A_{p(k)}` recomputed from `meet_points`.
    pub ratios: Vec<Rational>,
    pub k: Rational,
    pub branch: CounterexampleBranch,
    pub product: Rational,
    pub concurrent: bool,
    pub seed: u64,
}

/// Cevians from `A_1, A_2, A_3` through `M` fix `M_3, M_4, M_5` and
/// `K = r_3 r_4 r_5`. `M_1` is then placed with ratio `1/K` (or `2/K` when the
/// line `A_4 M_1` would contain `M`) and `M_2` with `−1` (or `−1/2`), so the
/// five-ratio product is `−1` while `A_4 M_1` misses `M`.
pub fn build_converse_counterexample(
    pentagon: &[Point],
    pivot: &Point,
    seed: u64,
) -> Result<CounterexampleConfig, CevaError> {
    const N: usize = 5;
    if pentagon.len() != N {
        return Err(CevaError::InvalidParameters(format!(
            "counterexample needs a pentagon, got {} vertices",
            pentagon.len()
        )));
    }
    check_distinct(pentagon, pivot)?;
    let a = |k: usize| &pentagon[k - 1];

    // vertex i cuts side i + 2
    let mut meet_points: Vec<Option<Point>> = vec![None; N];
    let mut k_value = Rational::one();
    for i in 1..=3 {
        let j = idx_shift(i, 2, N);
        let meet = side_meet(pentagon, pivot, i, j)?;
        k_value *= directed_ratio(&meet, a(j), a(idx_shift(j, 1, N)))?;
        meet_points[j - 1] = Some(meet);
    }
    let base_cevians: Vec<Line> = (1..=3)
        .map(|i| line_through(a(i), pivot))
        .collect::<Result<_, _>>()?;

    for branch in [CounterexampleBranch::InverseK, CounterexampleBranch::TwiceInverseK] {
        let (r1, r2) = branch.ratios(&k_value);
        let Some(m1) = point_with_ratio(a(1), a(2), &r1) else {
            continue;
        };
        if &m1 == a(4) {
            continue;
        }
        let fourth = line_through(a(4), &m1)?;
        if fourth.contains(pivot) {
            continue;
        }
        let m2 = point_with_ratio(a(2), a(3), &r2).expect("ratio is negative");
        if &m2 == a(5) {
            continue;
        }
        let fifth = line_through(a(5), &m2)?;

        let mut cevians = base_cevians.clone();
        cevians.push(fourth);
        cevians.push(fifth);
        let concurrent = match are_concurrent(&cevians) {
            Ok(c) => c,
            Err(GeomError::DuplicateLines) => continue,
            Err(e) => return Err(e.into()),
        };

        let mut points = meet_points.clone();
        points[0] = Some(m1);
        points[1] = Some(m2);
        let points: Vec<Point> = points.into_iter().map(|p| p.expect("all filled")).collect();
        let ratios = points
            .iter()
            .enumerate()
            .map(|(idx, m)| directed_ratio(m, a(idx + 1), a(idx_shift(idx + 1, 1, N))))
            .collect::<Result<Vec<_>, _>>()?;
        let product = ratios.iter().fold(Rational::one(), |acc, r| acc * r);

        return Ok(CounterexampleConfig {
            vertices: pentagon.to_vec(),
            pivot: pivot.clone(),
            cevians,
            meet_points: points,
            ratios,
            k: k_value,
            branch,
            product,
            concurrent,
            seed,
        });
    }
    Err(CevaError::NoCounterexampleBranch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ipt(x: i64, y: i64) -> Point {
        Point::new(int(x), int(y))
    }

    fn triangle() -> [Point; 3] {
        [ipt(0, 0), ipt(4, 0), ipt(0, 4)]
    }

    fn square() -> Vec<Point> {
        vec![ipt(0, 0), ipt(4, 0), ipt(4, 4), ipt(0, 4)]
    }

    fn centroid() -> Point {
        Point::new(rat(4, 3), rat(4, 3))
    }

    #[test]
    fn idx_shift_examples() {
        assert_eq!(idx_shift(1, 1, 3), 2);
        assert_eq!(idx_shift(3, 1, 3), 1);
        assert_eq!(idx_shift(2, -5, 5), 2);
        assert_eq!(idx_shift(1, -1, 4), 4);
        assert_eq!(idx_shift(4, 9, 4), 1);
    }

    #[test]
    fn sides_hit_examples() {
        assert_eq!(sides_hit(1, 5, 3, 13), vec![6, 7, 8]);
        assert_eq!(sides_hit(2, 5, 3, 13), vec![7, 8, 9]);
        assert_eq!(sides_hit(3, 5, 3, 13), vec![8, 9, 10]);
        assert_eq!(sides_hit(1, 1, 1, 3), vec![2]);
        assert_eq!(sides_hit(12, 5, 3, 13), vec![4, 5, 6]);
    }

    #[test]
    fn config_rejects_bad_parameters() {
        let tri = triangle().to_vec();
        assert!(matches!(
            CevaConfig::new(tri.clone(), centroid(), 2, 1),
            Err(CevaError::InvalidParameters(_))
        ));
        assert!(matches!(
            CevaConfig::new(tri.clone(), centroid(), 0, 3),
            Err(CevaError::InvalidParameters(_))
        ));
        assert_eq!(
            CevaConfig::new(tri.clone(), ipt(4, 0), 1, 1),
            Err(CevaError::PivotIsVertex(2))
        );
        assert_eq!(
            CevaConfig::new(vec![ipt(0, 0), ipt(1, 0), ipt(0, 0)], ipt(5, 5), 1, 1),
            Err(CevaError::DuplicateVertex(1, 3))
        );
    }

    #[test]
    fn median_meets_opposite_midpoint() {
        let cfg = CevaConfig::new(triangle().to_vec(), centroid(), 1, 1).unwrap();
        assert_eq!(cevian_intersection(&cfg, 1, 2).unwrap(), ipt(2, 2));
        assert_eq!(cevian_intersection(&cfg, 1, 3), Err(CevaError::SideNotHit { i: 1, j: 3 }));
    }

    #[test]
    fn square_cevian_meets_extended_side() {
        // y = 2x against x = 4
        let cfg = CevaConfig::new(square(), ipt(1, 2), 1, 2).unwrap();
        assert_eq!(cevian_intersection(&cfg, 1, 2).unwrap(), ipt(4, 8));
    }

    #[test]
    fn pivot_on_a_side_line_is_degenerate() {
        // M on line A_2A_3 (x + y = 4); the cevian from A_2 runs along side 2
        let tri = triangle().to_vec();
        let err = CevaConfig::new(tri, ipt(2, 2), 1, 1).unwrap_err();
        assert!(matches!(err, CevaError::Degenerate { .. }), "{err:?}");

        // M on the line A_3A_4 of the square: the cevian from A_3 is that side line, but A_3
        // only cuts sides 4 and 1, so the failure shows up as a vertex hit
        let err = CevaConfig::new(square(), ipt(2, 4), 1, 2).unwrap_err();
        assert!(matches!(err, CevaError::Degenerate { kind: Degeneracy::HitsVertex, .. }), "{err:?}");
    }

    #[test]
    fn coincident_cevian_is_reported() {
        // pentagon with A_1, M and side A_3A_4 all on y = 0
        let pentagon = vec![ipt(0, 0), ipt(2, -3), ipt(5, 0), ipt(8, 0), ipt(3, 6)];
        let err = CevaConfig::new(pentagon, ipt(1, 0), 2, 1).unwrap_err();
        assert!(
            matches!(err, CevaError::Degenerate { i: 1, j: 3, kind: Degeneracy::Coincident }),
            "{err:?}"
        );
    }

    #[test]
    fn triangle_centroid_product() {
        let r = classic_ceva_product(&triangle(), &centroid()).unwrap();
        assert!(r.factors.iter().all(|f| f.value == int(-1)));
        assert_eq!(r.product, int(-1));
        assert!(r.holds);
    }

    #[test]
    fn triangle_interior_and_exterior_pivots() {
        let r = classic_ceva_product(&triangle(), &ipt(1, 1)).unwrap();
        assert_eq!(r.product, int(-1));

        // feet by hand: (2,2) on side 2, (0,-20) on side 3, (-20,0) on side 1
        let r = classic_ceva_product(&triangle(), &ipt(5, 5)).unwrap();
        let values: Vec<_> = r.factors.iter().map(|f| (f.i, f.j, f.value.clone())).collect();
        assert_eq!(
            values,
            vec![(1, 2, int(-1)), (2, 3, rat(6, 5)), (3, 1, rat(5, 6))]
        );
        assert_eq!(r.product, int(-1));
        assert!(r.holds);
    }

    #[test]
    fn square_product_is_plus_one() {
        let cfg = CevaConfig::new(square(), ipt(1, 2), 1, 2).unwrap();
        let r = theorem1_product(&cfg).unwrap();
        assert_eq!(r.factors.len(), 8);
        assert_eq!(r.product, int(1));
        assert_eq!(r.expected, int(1));
        assert!(r.holds);
        assert_eq!(consequence12_product(&square(), &ipt(1, 2)).unwrap(), r);
    }

    #[test]
    fn pentagon_opposite_vertex_product() {
        let pentagon = vec![ipt(0, 0), ipt(4, 0), ipt(5, 3), ipt(2, 5), ipt(-1, 3)];
        let r = consequence11_product(&pentagon, &ipt(2, 2)).unwrap();
        assert_eq!(r.product, int(-1));
        let sides: Vec<_> = r.factors.iter().map(|f| (f.i, f.j)).collect();
        assert_eq!(sides, vec![(4, 1), (5, 2), (1, 3), (2, 4), (3, 5)]);
        assert!(consequence11_product(&square(), &ipt(1, 2)).is_err());
    }

    #[test]
    fn consequences_reduce_to_ceva_on_triangles() {
        let tri = triangle();
        let classic = classic_ceva_product(&tri, &ipt(1, 1)).unwrap();
        assert_eq!(consequence11_product(&tri, &ipt(1, 1)).unwrap().product, classic.product);
        assert_eq!(consequence12_product(&tri, &ipt(1, 1)).unwrap(), classic);
    }

    #[test]
    fn proof_line_value_examples() {
        let m = Point::new(rat(1, 3), rat(-2, 5));
        let a = Point::new(rat(7, 2), int(4));
        assert_eq!(proof_line_value(&m.x, &m.y, &a, &m).unwrap(), int(0));
        assert_eq!(proof_line_value(&a.x, &a.y, &a, &m).unwrap(), int(0));
        // 2/1 - 2/2
        assert_eq!(proof_line_value(&int(2), &int(2), &ipt(1, 2), &ipt(0, 0)).unwrap(), int(1));
        assert_eq!(
            proof_line_value(&int(2), &int(2), &ipt(0, 2), &ipt(0, 0)),
            Err(CevaError::AxisAligned)
        );
    }

    #[test]
    fn proof_identity_on_square() {
        let cfg = CevaConfig::new(square(), ipt(1, 2), 1, 2).unwrap();
        assert!(proof_identity_check(&cfg, 1, 3).unwrap());
        assert!(proof_identity_check(&cfg, 4, 2).unwrap());
        assert_eq!(proof_identity_check(&cfg, 2, 2), Err(CevaError::SameIndex));
        assert_eq!(
            proof_identity_check(&cfg, 1, 5),
            Err(CevaError::IndexOutOfRange { index: 5, n: 4 })
        );
    }

    #[test]
    fn proof_identity_requires_axis_avoidance() {
        // pivot shares its x coordinate with A_1
        let quad = vec![ipt(0, 0), ipt(5, 1), ipt(4, 5), ipt(-1, 3)];
        let cfg = CevaConfig::new(quad, ipt(0, 2), 1, 2).unwrap();
        assert_eq!(proof_identity_check(&cfg, 1, 3), Err(CevaError::AxisAligned));
        assert!(proof_identity_check(&cfg, 2, 3).unwrap());
    }

    #[test]
    fn proof_identity_reports_zero_denominator() {
        // A_2 lies on line A_1M; with s = 2 that line never has to cut at A_2
        let pentagon = vec![ipt(0, 0), ipt(4, 1), ipt(5, 4), ipt(1, 6), ipt(-3, 3)];
        let cfg = CevaConfig::new(pentagon, Point::new(int(2), rat(1, 2)), 2, 1).unwrap();
        assert_eq!(
            proof_identity_check(&cfg, 1, 2),
            Err(CevaError::DivisionByZero { r: 1, q: 2 })
        );
        assert!(theorem1_product(&cfg).unwrap().holds);
    }

    #[test]
    fn telescoped_value_matches_factor_product() {
        let cfg = CevaConfig::new(square(), Point::new(rat(3, 2), rat(7, 3)), 1, 2).unwrap();
        for i in 1..=4 {
            let direct = cfg
                .sides_hit(i)
                .into_iter()
                .map(|j| cevian_factor(&cfg, i, j).unwrap())
                .fold(Rational::one(), |acc, v| acc * v);
            assert_eq!(cevian_telescoped(&cfg, i).unwrap(), direct, "i = {i}");
        }
    }

    #[test]
    fn counterexample_on_reference_pentagon() {
        let pentagon = vec![ipt(0, 0), ipt(4, 0), ipt(5, 3), ipt(2, 5), ipt(-1, 3)];
        let ce = build_converse_counterexample(&pentagon, &ipt(2, 2), 0).unwrap();
        assert_eq!(ce.product, int(-1));
        assert!(!ce.concurrent);
        let (r1, r2) = match ce.branch {
            CounterexampleBranch::InverseK => (ce.k.recip(), int(-1)),
            CounterexampleBranch::TwiceInverseK => (int(2) / &ce.k, rat(-1, 2)),
        };
        assert_eq!(ce.ratios[0], r1);
        assert_eq!(ce.ratios[1], r2);
        assert_eq!(ce.ratios[2..].iter().fold(Rational::one(), |a, r| a * r), ce.k);
        assert!(!ce.cevians[3].contains(&ce.pivot));
        for k in 0..3 {
            assert!(ce.cevians[k].contains(&ce.pivot));
        }
    }

    #[test]
    fn counterexample_falls_back_to_second_branch() {
        // The 1/K point is the true foot of A_4M exactly when the cevian A_5M bisects
        // side 2, so put M on the line from A_5 to the midpoint of A_2A_3.
        let a2 = ipt(4, 0);
        let a3 = ipt(5, 4);
        let a5 = ipt(-2, 3);
        let mid = a2.midpoint(&a3);
        let m = Point::new(
            &a5.x + (&mid.x - &a5.x) * rat(1, 2),
            &a5.y + (&mid.y - &a5.y) * rat(1, 2),
        );
        let pentagon = vec![ipt(0, -1), a2, a3, ipt(1, 6), a5];
        let ce = build_converse_counterexample(&pentagon, &m, 0).unwrap();
        assert_eq!(ce.branch, CounterexampleBranch::TwiceInverseK);
        assert_eq!(ce.ratios[0], int(2) / &ce.k);
        assert_eq!(ce.ratios[1], rat(-1, 2));
        assert_eq!(ce.product, int(-1));
        assert!(!ce.concurrent);
    }

    #[test]
    fn counterexample_rejects_degenerate_input() {
        let pentagon = vec![ipt(0, 0), ipt(4, 0), ipt(5, 3), ipt(2, 5), ipt(-1, 3)];
        // M is the midpoint of A_1A_3, so the cevian from A_1 meets side 3 at A_3
        let err = build_converse_counterexample(&pentagon, &Point::new(rat(5, 2), rat(3, 2)), 0)
            .unwrap_err();
        assert!(matches!(err, CevaError::Degenerate { i: 1, j: 3, .. }), "{err:?}");
        assert!(matches!(
            build_converse_counterexample(&pentagon[..4], &ipt(2, 2), 0),
            Err(CevaError::InvalidParameters(_))
        ));
    }
}
