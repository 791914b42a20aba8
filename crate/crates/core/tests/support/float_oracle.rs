//! Floating-point side-ratio product computed from signed distances to each
//! cevian line. Shares no code with the exact kernel.

use ceva_core::rational::to_f64;
use ceva_core::Point;

pub type P = (f64, f64);

pub fn to_xy(p: &Point) -> P {
    (to_f64(&p.x), to_f64(&p.y))
}

/// Signed distance of `p` from the oriented line through `a` and `b`.
fn signed_distance(p: P, a: P, b: P) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    (dx * (p.1 - a.1) - dy * (p.0 - a.0)) / dx.hypot(dy)
}

pub struct FloatProduct {
    pub factors: Vec<f64>,
    pub product: f64,
    /// Smallest |distance| of a side endpoint from a cevian, relative to the
    /// polygon diameter.
    pub min_clearance: f64,
}

/// For the cevian from vertex `i` through `pivot` and side `A_j A_{j+1}`,
/// the meeting point `X` satisfies `(A_j − X) = r (A_{j+1} − X)` with
/// `r = dist(A_j) / dist(A_{j+1})`.
pub fn theorem1_product(vertices: &[P], pivot: P, s: usize, t: usize) -> FloatProduct {
    let n = vertices.len();
    let v = |k: usize| vertices[(k - 1) % n];
    let diameter = vertices
        .iter()
        .flat_map(|a| vertices.iter().map(move |b| (a.0 - b.0).hypot(a.1 - b.1)))
        .fold(0.0, f64::max);
    let mut factors = Vec::new();
    let mut min_clearance = f64::INFINITY;
    for i in 1..=n {
        for k in 0..t {
            let j = (i - 1 + s + k) % n + 1;
            let dj = signed_distance(v(j), v(i), pivot);
            let dk = signed_distance(v(j % n + 1), v(i), pivot);
            min_clearance = min_clearance.min(dj.abs() / diameter).min(dk.abs() / diameter);
            factors.push(dj / dk);
        }
    }
    let product = factors.iter().product();
    FloatProduct {
        factors,
        product,
        min_clearance,
    }
}
