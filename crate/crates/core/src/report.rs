//! Machine-readable run reports emitted by `verify` and `counterexample`.

use std::fmt::Write as _;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::ceva::{
    build_converse_counterexample, idx_shift, theorem1_product, CevaConfig, CevaError, Factor,
};
use crate::circle::{
    application_concurrent_check, chord_telescoping_squared, common_point, first_meet_inside,
    similar_triangle_relation3, theorem2_check, CircleError, InscribedConfig,
};
use crate::config::CounterexampleInput;
use crate::geom::Point;
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InscribedDetails {
    pub lhs_squared: String,
    pub rhs_squared: String,
    pub chord_product: String,
    pub relation3: Vec<bool>,
    pub m_prime_points: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub common_point: Option<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleDetails {
    #[serde(rename = "K")]
    pub k: String,
    pub branch: String,
    pub ratios: Vec<String>,
    pub meet_points: Vec<[String; 2]>,
    pub concurrent: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub kind: String,
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub factors: Vec<FactorEntry>,
    pub product: String,
    /// Absent when only the squared identity is predicted.
    pub expected: Option<String>,
    pub holds: bool,
    pub diagnostics: Vec<String>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub inscribed: Option<InscribedDetails>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleDetails>,
}

fn point_strings(p: &Point) -> [String; 2] {
    [format_rational(&p.x), format_rational(&p.y)]
}

fn factor_entries(factors: &[Factor]) -> Vec<FactorEntry> {
    factors
        .iter()
        .map(|f| FactorEntry {
            i: f.i,
            j: f.j,
            value: format_rational(&f.value),
        })
        .collect()
}

pub fn ceva_report(cfg: &CevaConfig) -> Result<RunReport, CevaError> {
    let report = theorem1_product(cfg)?;
    let outside = report.factors.iter().filter(|f| f.value.is_positive()).count();
    let diagnostics = vec![format!(
        "{outside} of {} meeting points lie outside their side segments",
        report.factors.len()
    )];
    Ok(RunReport {
        kind: "ceva".into(),
        n: cfg.n(),
        s: cfg.s(),
        t: cfg.t(),
        factors: factor_entries(&report.factors),
        product: format_rational(&report.product),
        expected: Some(format_rational(&report.expected)),
        holds: report.holds,
        diagnostics,
        inscribed: None,
        counterexample: None,
    })
}

pub fn inscribed_report(cfg: &InscribedConfig) -> Result<RunReport, CircleError> {
    let common = common_point(cfg);
    let report = if common.is_some() {
        application_concurrent_check(cfg)?
    } else {
        theorem2_check(cfg)?
    };
    let chord = chord_telescoping_squared(cfg);
    let relation3 = (1..=cfg.n())
        .map(|i| similar_triangle_relation3(cfg, i))
        .collect::<Result<Vec<_>, _>>()?;
    let inside = (1..=cfg.n())
        .map(|i| first_meet_inside(cfg, i))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|&b| b)
        .count();

    let mut diagnostics = vec![
        match &report.expected_lhs {
            Some(_) => "lines d_i are concurrent: lhs = (-1)^n and rhs^2 = 1 checked".to_owned(),
            None => "lines d_i are not concurrent: lhs^2 = rhs^2 checked".to_owned(),
        },
        format!(
            "first meeting point inside the circle for {inside} of {} lines",
            cfg.n()
        ),
    ];
    if !chord.is_one() {
        diagnostics.push("chord product differs from 1".into());
    }
    if let Some(k) = relation3.iter().position(|ok| !ok) {
        diagnostics.push(format!("chord relation fails at i = {}", k + 1));
    }
    let holds = report.holds && chord.is_one() && relation3.iter().all(|&ok| ok);

    Ok(RunReport {
        kind: "inscribed".into(),
        n: cfg.n(),
        s: cfg.s(),
        t: cfg.t(),
        factors: factor_entries(&report.factors),
        product: format_rational(&report.lhs),
        expected: report.expected_lhs.as_ref().map(format_rational),
        holds,
        diagnostics,
        inscribed: Some(InscribedDetails {
            lhs_squared: format_rational(&report.lhs_squared),
            rhs_squared: format_rational(&report.rhs_squared),
            chord_product: format_rational(&chord),
            relation3,
            m_prime_points: report.m_prime_points.iter().map(point_strings).collect(),
            common_point: common.as_ref().map(point_strings),
        }),
        counterexample: None,
    })
}

pub fn counterexample_report(input: &CounterexampleInput) -> Result<RunReport, CevaError> {
    let ce = build_converse_counterexample(&input.vertices, &input.pivot, input.seed)?;
    let minus_one = -Rational::one();
    let factors = ce
        .ratios
        .iter()
        .enumerate()
        .map(|(idx, r)| FactorEntry {
            i: idx_shift(idx + 1, -2, 5),
            j: idx + 1,
            value: format_rational(r),
        })
        .collect();
    let holds = ce.product == minus_one && !ce.concurrent;
    Ok(RunReport {
        kind: "counterexample".into(),
        n: 5,
        s: 2,
        t: 1,
        factors,
        product: format_rational(&ce.product),
        expected: Some(format_rational(&minus_one)),
        holds,
        diagnostics: vec![format!(
            "cevian from A_4 misses the pivot; branch {} chosen",
            ce.branch
        )],
        inscribed: None,
        counterexample: Some(CounterexampleDetails {
            k: format_rational(&ce.k),
            branch: ce.branch.label().into(),
            ratios: ce.ratios.iter().map(format_rational).collect(),
            meet_points: ce.meet_points.iter().map(point_strings).collect(),
            concurrent: ce.concurrent,
            seed: ce.seed,
        }),
    })
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned text table of the factors followed by the summary lines.
    pub fn to_table(&self) -> String {
        let width = self
            .factors
            .iter()
            .map(|f| f.value.len())
            .chain([5])
            .max()
            .unwrap_or(5);
        let mut out = String::new();
        let _ = writeln!(out, "{} n={} s={} t={}", self.kind, self.n, self.s, self.t);
        let _ = writeln!(out, "{:>4} {:>4}  {:>width$}", "i", "j", "ratio");
        for f in &self.factors {
            let _ = writeln!(out, "{:>4} {:>4}  {:>width$}", f.i, f.j, f.value);
        }
        let _ = writeln!(out, "product  {}", self.product);
        if let Some(expected) = &self.expected {
            let _ = writeln!(out, "expected {expected}");
        }
        if let Some(ins) = &self.inscribed {
            let _ = writeln!(out, "lhs^2    {}", ins.lhs_squared);
            let _ = writeln!(out, "rhs^2    {}", ins.rhs_squared);
        }
        if let Some(ce) = &self.counterexample {
            let _ = writeln!(out, "K        {}", ce.k);
            let _ = writeln!(out, "branch   {}", ce.branch);
            let _ = writeln!(out, "concurrent {}", ce.concurrent);
        }
        let _ = writeln!(out, "holds    {}", self.holds);
        for d in &self.diagnostics {
            let _ = writeln!(out, "note: {d}");
        }
        out
    }
}
