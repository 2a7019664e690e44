//! Experiment harness: tabular reports with pass/fail verdicts.

use std::fmt::Write as _;

use crate::constructions::generalized_power;
use crate::enumerate::{
    connected_classes, min_rho_search, CanonicalForm, BIG_MAX_ORDER, DEFAULT_MAX_ORDER,
};
use crate::error::{Error, Result};
use crate::matrix::{pendant_cycle_rho_sequence, tau_threshold, LimitPointTable};
use crate::par::*;
use crate::parity::{is_bipartite, odd_bipartition};
use crate::tensor::Operator;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format_sig(*x, 12),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Text(verdict_word(v).to_string())
    }
}

pub fn verdict_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Formats like C's `%.{sig}g`.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if exp < -4 || exp >= sig as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub check: String,
    pub tolerance: f64,
    pub pass: bool,
}

/// Named table of results plus the checks run over it.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    pub name: String,
    pub parameters: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub verdicts: Vec<Verdict>,
}

impl ExperimentReport {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            parameters: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.push((key.into(), value.to_string()));
        self
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match columns"
        );
        self.rows.push(row);
    }

    pub fn verdict(&mut self, check: &str, tolerance: f64, pass: bool) {
        self.verdicts.push(Verdict {
            check: check.into(),
            tolerance,
            pass,
        });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    fn verdict_lines(&self) -> Vec<String> {
        self.verdicts
            .iter()
            .map(|v| {
                format!(
                    "{}: {} (tolerance {})",
                    verdict_word(v.pass),
                    v.check,
                    format_sig(v.tolerance, 12)
                )
            })
            .collect()
    }

    /// Aligned plain-text table followed by one line per verdict.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.name);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "# {k} = {v}");
        }
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::render).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| {
                cells
                    .iter()
                    .map(|r| r[c].len())
                    .chain([self.columns[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |fields: &[String]| {
            fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let _ = writeln!(out, "{}", line(&self.columns));
        for r in &cells {
            let _ = writeln!(out, "{}", line(r));
        }
        for v in self.verdict_lines() {
            let _ = writeln!(out, "{v}");
        }
        out
    }

    /// CSV table; verdicts follow as `#` comment lines.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            writer
                .write_record(row.iter().map(Cell::render))
                .expect("in-memory write");
        }
        let mut out =
            String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8");
        for v in &self.verdicts {
            let _ = writeln!(
                out,
                "# check,{},{},{}",
                v.check,
                format_sig(v.tolerance, 12),
                verdict_word(v.pass)
            );
        }
        out
    }
}

/// Checks that `G^{k,k/2}` is odd-bipartite exactly when `G` is bipartite,
/// over every connected graph class on up to `n_max` vertices.
pub fn verify_theorem_nob(n_max: usize, ks: &[usize], big: bool) -> Result<ExperimentReport> {
    let cap = if big {
        BIG_MAX_ORDER
    } else {
        DEFAULT_MAX_ORDER
    };
    if n_max == 0 || n_max > cap {
        return Err(Error::param(format!("n_max must be in 1..={cap}")));
    }
    if let Some(&k) = ks.iter().find(|&&k| k < 4 || k % 2 == 1) {
        return Err(Error::param(format!("k = {k} must be even and at least 4")));
    }
    let mut report = ExperimentReport::new(
        "verify-nob",
        &[
            "n",
            "k",
            "classes",
            "bipartite",
            "odd_bipartite_lifts",
            "mismatches",
            "verdict",
        ],
    );
    report.param("n_max", n_max).param(
        "k",
        ks.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    let mut total_mismatches = 0;
    for n in 1..=n_max {
        let classes = connected_classes(n);
        for &k in ks {
            let outcomes: Vec<(bool, bool)> = classes
                .par_iter()
                .map(|c| {
                    let g = c.graph();
                    let (h, _) = generalized_power(&g, k, k / 2)?;
                    Ok((is_bipartite(&g).is_some(), odd_bipartition(&h)?.is_some()))
                })
                .collect::<Result<_>>()?;
            let bipartite = outcomes.iter().filter(|o| o.0).count();
            let odd = outcomes.iter().filter(|o| o.1).count();
            let mismatches = outcomes.iter().filter(|o| o.0 != o.1).count();
            total_mismatches += mismatches;
            report.push_row(vec![
                n.into(),
                k.into(),
                classes.len().into(),
                bipartite.into(),
                odd.into(),
                mismatches.into(),
                (mismatches == 0).into(),
            ]);
        }
    }
    report.verdict(
        "lift odd-bipartite iff base bipartite",
        0.0,
        total_mismatches == 0,
    );
    Ok(report)
}

/// Spectral radii of `C_{2n+1} + e` against the threshold `sqrt(2 + sqrt 5)`.
pub fn convergence_report(n_max: usize, tol: f64) -> Result<ExperimentReport> {
    if n_max == 0 || n_max > 200 {
        return Err(Error::param("n_max must be in 1..=200"));
    }
    let tau = tau_threshold();
    let seq = pendant_cycle_rho_sequence(n_max, tol)?;
    let mut report = ExperimentReport::new("converge", &["n", "rho", "gap", "bound", "verdict"]);
    report
        .param("n_max", n_max)
        .param("tol", format_sig(tol, 12));
    for t in &seq {
        let ok = t.gap() > 0.0 && t.gap() < t.gap_bound();
        report.push_row(vec![
            t.n.into(),
            t.rho.into(),
            t.gap().into(),
            t.gap_bound().into(),
            ok.into(),
        ]);
    }
    let decreasing = seq.windows(2).all(|w| w[1].rho < w[0].rho);
    report.verdict("rho strictly decreasing in n", tol, decreasing);
    report.verdict(
        "rho above sqrt(2+sqrt5)",
        tol,
        seq.iter().all(|t| t.rho > tau),
    );
    report.verdict(
        "gap below 2/(2n+1) + tree term",
        tol,
        seq.iter().all(|t| t.gap() < t.gap_bound()),
    );
    Ok(report)
}

/// Table of `beta_n`, `alpha_n` with monotonicity and threshold checks.
pub fn limit_points_report(n_max: usize, tol: f64) -> Result<ExperimentReport> {
    if n_max == 0 {
        return Err(Error::param("n_max must be at least 1"));
    }
    let table = LimitPointTable::compute(n_max, tol)?;
    let mut report = ExperimentReport::new("limitpoints", &["n", "beta", "alpha", "threshold_gap"]);
    report
        .param("n_max", n_max)
        .param("tol", format_sig(tol, 12));
    for r in &table.rows {
        report.push_row(vec![
            r.n.into(),
            r.beta.into(),
            r.alpha.into(),
            (table.tau_threshold - r.alpha).into(),
        ]);
    }
    report.verdict(
        "alpha_1 = 2",
        1e-12,
        (table.rows[0].alpha - 2.0).abs() <= 1e-12,
    );
    report.verdict(
        "alpha_n strictly increasing",
        0.0,
        table.strictly_increasing(),
    );
    report.verdict("alpha_n below sqrt(2+sqrt5)", 0.0, table.below_threshold());
    Ok(report)
}

fn describe(c: &CanonicalForm) -> String {
    c.graph()
        .edges()
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Minimum spectral radius search rendered as a report; the verdict asserts
/// a unique minimizer.
pub fn min_rho_report(n: usize, op: Operator, tol: f64, big: bool) -> Result<ExperimentReport> {
    let result = min_rho_search(n, op, tol, 10.0 * tol, big)?;
    let mut report = ExperimentReport::new(
        "minrho",
        &["n", "operator", "rho", "canonical_bits", "edges"],
    );
    report
        .param("n", n)
        .param("operator", op.name())
        .param("tol", format_sig(tol, 12))
        .param("classes_searched", result.classes_searched);
    for (c, rho) in &result.argmin {
        report.push_row(vec![
            n.into(),
            op.name().into(),
            (*rho).into(),
            (c.bits as usize).into(),
            describe(c).into(),
        ]);
    }
    report.verdict(
        "unique minimizer within tie window",
        10.0 * tol,
        result.unique().is_some(),
    );
    Ok(report)
}
