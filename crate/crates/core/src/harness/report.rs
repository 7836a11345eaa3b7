//! Verification reports and their two text renderings.
//!
//! Record format, one report per line, tab-separated:
//!
//! ```text
//! theorem  instance  PASS|FAIL  checks  runtime_us=<int>
//! ```
//!
//! `checks` is a `;`-separated list of `label:kind:measured:reference:tol:ok`
//! where `kind` is one of `le`, `ge`, `eq`, `exact`, `iff`, `holds`. A report
//! whose run errored has the single check `error:<message>`. Everything but
//! the runtime field is deterministic.

use std::fmt::Write as _;
use std::time::Duration;

#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    AtMost { label: &'static str, measured: f64, bound: f64, tol: f64 },
    AtLeast { label: &'static str, measured: f64, bound: f64, tol: f64 },
    Close { label: &'static str, measured: f64, expected: f64, tol: f64 },
    Exact { label: &'static str, measured: u64, expected: u64 },
    Iff { label: &'static str, left: bool, right: bool },
    Holds { label: &'static str, value: bool },
}

impl Check {
    pub fn pass(&self) -> bool {
        match *self {
            Check::AtMost { measured, bound, tol, .. } => measured <= bound + tol,
            Check::AtLeast { measured, bound, tol, .. } => measured >= bound - tol,
            Check::Close { measured, expected, tol, .. } => (measured - expected).abs() <= tol,
            Check::Exact { measured, expected, .. } => measured == expected,
            Check::Iff { left, right, .. } => left == right,
            Check::Holds { value, .. } => value,
        }
    }

    pub fn label(&self) -> &'static str {
        match *self {
            Check::AtMost { label, .. }
            | Check::AtLeast { label, .. }
            | Check::Close { label, .. }
            | Check::Exact { label, .. }
            | Check::Iff { label, .. }
            | Check::Holds { label, .. } => label,
        }
    }

    fn record(&self) -> String {
        let ok = u8::from(self.pass());
        match *self {
            Check::AtMost { label, measured, bound, tol } => format!("{label}:le:{measured:.12}:{bound:.12}:{tol:e}:{ok}"),
            Check::AtLeast { label, measured, bound, tol } => format!("{label}:ge:{measured:.12}:{bound:.12}:{tol:e}:{ok}"),
            Check::Close { label, measured, expected, tol } => {
                format!("{label}:eq:{measured:.12}:{expected:.12}:{tol:e}:{ok}")
            }
            Check::Exact { label, measured, expected } => format!("{label}:exact:{measured}:{expected}:0:{ok}"),
            Check::Iff { label, left, right } => format!("{label}:iff:{left}:{right}:0:{ok}"),
            Check::Holds { label, value } => format!("{label}:holds:{value}:true:0:{ok}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub theorem: &'static str,
    pub instance: String,
    pub checks: Vec<Check>,
    pub error: Option<String>,
    pub runtime: Duration,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(Check::pass)
    }

    pub fn record(&self) -> String {
        let checks = match &self.error {
            Some(msg) => format!("error:{msg}"),
            None => self.checks.iter().map(Check::record).collect::<Vec<_>>().join(";"),
        };
        format!(
            "{}\t{}\t{}\t{}\truntime_us={}",
            self.theorem,
            self.instance,
            if self.pass() { "PASS" } else { "FAIL" },
            checks,
            self.runtime.as_micros()
        )
    }

    /// The record without its timing field.
    pub fn stable_record(&self) -> String {
        let rec = self.record();
        rec[..rec.rfind('\t').unwrap()].to_string()
    }
}

/// Sorts by theorem, then instance, so output order never depends on
/// scheduling.
pub fn canonicalize(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| (a.theorem, &a.instance).cmp(&(b.theorem, &b.instance)));
}

pub fn render_records(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.record());
        out.push('\n');
    }
    out
}

pub fn render_table(reports: &[VerificationReport]) -> String {
    let tw = reports.iter().map(|r| r.theorem.len()).max().unwrap_or(0).max(7);
    let iw = reports.iter().map(|r| r.instance.len()).max().unwrap_or(0).max(8);
    let mut out = String::new();
    writeln!(out, "{:<tw$}  {:<iw$}  {:<4}  details", "theorem", "instance", "pass").unwrap();
    for r in reports {
        let details = match &r.error {
            Some(msg) => format!("error: {msg}"),
            None => r.checks.iter().map(summary).collect::<Vec<_>>().join(", "),
        };
        let verdict = if r.pass() { "ok" } else { "FAIL" };
        writeln!(out, "{:<tw$}  {:<iw$}  {:<4}  {}", r.theorem, r.instance, verdict, details).unwrap();
    }
    let failed = reports.iter().filter(|r| !r.pass()).count();
    writeln!(out, "{} reports, {} failed", reports.len(), failed).unwrap();
    out
}

fn summary(c: &Check) -> String {
    let mark = if c.pass() { "" } else { " (!)" };
    match *c {
        Check::AtMost { label, measured, bound, .. } => format!("{label} {measured:.9} <= {bound:.9}{mark}"),
        Check::AtLeast { label, measured, bound, .. } => format!("{label} {measured:.9} >= {bound:.9}{mark}"),
        Check::Close { label, measured, expected, .. } => format!("{label} {measured:.9} = {expected:.9}{mark}"),
        Check::Exact { label, measured, expected } => format!("{label} {measured} = {expected}{mark}"),
        Check::Iff { label, left, right } => format!("{label} {left} <=> {right}{mark}"),
        Check::Holds { label, value } => format!("{label} {value}{mark}"),
    }
}
