//! SVG figures for configuration files.
//!
//! Coordinates are converted to `f64` here and only here; nothing drawn is
//! read back by any check.

use std::fmt::Write as _;

use crate::ceva::{build_converse_counterexample, cevian_intersection, CevaError};
use crate::circle::CircleError;
use crate::config::ConfigFile;
use crate::geom::Point;
use crate::rational::to_f64;

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 40.0;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SvgError {
    #[error(transparent)]
    Ceva(#[from] CevaError),
    #[error(transparent)]
    Circle(#[from] CircleError),
}

#[derive(Debug, Clone, Copy)]
struct Xy(f64, f64);

impl From<&Point> for Xy {
    fn from(p: &Point) -> Self {
        Xy(to_f64(&p.x), to_f64(&p.y))
    }
}

#[derive(Default)]
struct Scene {
    polygon: Vec<Xy>,
    vertex_labels: Vec<String>,
    /// Each cevian is drawn from its vertex to the farthest of its marked points.
    cevians: Vec<(Xy, Xy)>,
    marks: Vec<(Xy, String, &'static str)>,
    circle: Option<f64>,
}

fn farthest(from: Xy, points: &[Xy]) -> Xy {
    let d2 = |p: &Xy| (p.0 - from.0).powi(2) + (p.1 - from.1).powi(2);
    points
        .iter()
        .copied()
        .max_by(|a, b| d2(a).total_cmp(&d2(b)))
        .unwrap_or(from)
}

fn vertex_scene(vertices: &[Point]) -> Scene {
    Scene {
        polygon: vertices.iter().map(Xy::from).collect(),
        vertex_labels: (1..=vertices.len()).map(|k| format!("A_{k}")).collect(),
        ..Scene::default()
    }
}

fn meet_label(i: usize, j: usize, t: usize) -> String {
    if t == 1 {
        format!("M_{j}")
    } else {
        format!("M_{{{i},{j}}}")
    }
}

fn build_scene(cfg: &ConfigFile) -> Result<Scene, SvgError> {
    match cfg {
        ConfigFile::Ceva(cfg) => {
            let mut scene = vertex_scene(cfg.vertices());
            let pivot = Xy::from(cfg.pivot());
            for i in 1..=cfg.n() {
                let mut ends = vec![pivot];
                for j in cfg.sides_hit(i) {
                    let meet = Xy::from(&cevian_intersection(cfg, i, j)?);
                    ends.push(meet);
                    scene.marks.push((meet, meet_label(i, j, cfg.t()), "meet"));
                }
                let a = Xy::from(cfg.vertex(i));
                scene.cevians.push((a, farthest(a, &ends)));
            }
            scene.marks.push((pivot, "M".into(), "pivot"));
            Ok(scene)
        }
        ConfigFile::Inscribed(cfg) => {
            let mut scene = vertex_scene(cfg.vertices());
            scene.circle = Some(to_f64(cfg.radius()));
            for i in 1..=cfg.n() {
                let second = Xy::from(cfg.second_point(i));
                let mut ends = vec![second];
                for j in cfg.sides_hit(i) {
                    let meet = Xy::from(&cfg.side_meet(i, j)?);
                    ends.push(meet);
                    scene.marks.push((meet, meet_label(i, j, cfg.t()), "meet"));
                }
                scene.marks.push((second, format!("M′_{i}"), "second"));
                let a = Xy::from(cfg.vertex(i));
                scene.cevians.push((a, farthest(a, &ends)));
            }
            Ok(scene)
        }
        ConfigFile::Counterexample(input) => {
            let ce = build_converse_counterexample(&input.vertices, &input.pivot, input.seed)?;
            let mut scene = vertex_scene(&ce.vertices);
            let pivot = Xy::from(&ce.pivot);
            for (idx, meet) in ce.meet_points.iter().enumerate() {
                let meet = Xy::from(meet);
                scene.marks.push((meet, format!("M_{}", idx + 1), "meet"));
                // side k is cut by the cevian from vertex k + 2 (mod 5)
                let a = Xy::from(&ce.vertices[(idx + 2) % 5]);
                scene.cevians.push((a, farthest(a, &[meet, pivot])));
            }
            scene.marks.push((pivot, "M".into(), "pivot"));
            Ok(scene)
        }
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(cfg: &ConfigFile) -> Result<String, SvgError> {
    let scene = build_scene(cfg)?;

    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    let all = scene
        .polygon
        .iter()
        .chain(scene.marks.iter().map(|(p, _, _)| p))
        .chain(scene.cevians.iter().flat_map(|(a, b)| [a, b]));
    for p in all {
        xs.push(p.0);
        ys.push(p.1);
    }
    if let Some(r) = scene.circle {
        xs.extend([-r, r]);
        ys.extend([-r, r]);
    }
    let fold = |v: &[f64], f: fn(f64, f64) -> f64, init: f64| v.iter().copied().fold(init, f);
    let (min_x, max_x) = (fold(&xs, f64::min, f64::INFINITY), fold(&xs, f64::max, f64::NEG_INFINITY));
    let (min_y, max_y) = (fold(&ys, f64::min, f64::INFINITY), fold(&ys, f64::max, f64::NEG_INFINITY));
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (WIDTH - 2.0 * MARGIN) / span;
    let height = (max_y - min_y) * scale + 2.0 * MARGIN;
    let map = |p: Xy| -> (f64, f64) {
        (
            MARGIN + (p.0 - min_x) * scale,
            height - MARGIN - (p.1 - min_y) * scale,
        )
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if let Some(r) = scene.circle {
        let (cx, cy) = map(Xy(0.0, 0.0));
        let _ = writeln!(
            out,
            r##"<circle class="circumcircle" cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="#888"/>"##,
            r * scale
        );
    }
    let points: Vec<String> = scene
        .polygon
        .iter()
        .map(|&p| {
            let (x, y) = map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"<polygon class="polygon" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        points.join(" ")
    );
    for &(a, b) in &scene.cevians {
        let ((x1, y1), (x2, y2)) = (map(a), map(b));
        let _ = writeln!(
            out,
            r##"<line class="cevian" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#1f6fb2"/>"##
        );
    }
    for (p, label) in scene.polygon.iter().zip(&scene.vertex_labels) {
        let (x, y) = map(*p);
        let _ = writeln!(
            out,
            r#"<rect class="vertex" x="{:.3}" y="{:.3}" width="6" height="6" fill="black"/>"#,
            x - 3.0,
            y - 3.0
        );
        let _ = writeln!(
            out,
            r#"<text class="label" x="{:.3}" y="{:.3}">{}</text>"#,
            x + 5.0,
            y - 5.0,
            escape(label)
        );
    }
    for (p, label, class) in &scene.marks {
        let (x, y) = map(*p);
        let fill = match *class {
            "pivot" => "#c0392b",
            "second" => "#8e44ad",
            _ => "#1f6fb2",
        };
        let _ = writeln!(
            out,
            r#"<rect class="{class}" x="{:.3}" y="{:.3}" width="5" height="5" fill="{fill}"/>"#,
            x - 2.5,
            y - 2.5
        );
        let _ = writeln!(
            out,
            r#"<text class="label" x="{:.3}" y="{:.3}">{}</text>"#,
            x + 5.0,
            y + 14.0,
            escape(label)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
