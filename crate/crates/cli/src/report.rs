use std::collections::BTreeMap;

use diagcomm::hilbert::BidegreePolynomial;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};

pub const TOOL: &str = "diagcomm";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Conjecture checks: reported, never failing.
    Report,
    /// A computation ran past its budget.
    Missing,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Report => "REPORT",
            Status::Missing => "MISSING",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub payload: Value,
    pub paper_expectation: Value,
    pub elapsed_ms: Option<u64>,
    /// One-line rendering for tables and CSV.
    #[serde(skip)]
    pub summary: String,
}

impl CheckReport {
    pub fn new(
        name: impl Into<String>,
        status: Status,
        summary: impl Into<String>,
        payload: Value,
    ) -> Self {
        CheckReport {
            name: name.into(),
            status,
            payload,
            paper_expectation: Value::Null,
            elapsed_ms: None,
            summary: summary.into(),
        }
    }

    pub fn expecting(mut self, expectation: Value) -> Self {
        self.paper_expectation = expectation;
        self
    }

    pub fn missing(name: impl Into<String>, payload: Value) -> Self {
        Self::new(name, Status::Missing, "budget exceeded", payload)
    }

    /// A conjecture row whose match flag decides nothing but the findings count.
    pub fn matches_paper(&self) -> Option<bool> {
        self.payload.get("matchesPaperGl3").and_then(Value::as_bool)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub reports: usize,
    pub missing: usize,
    /// Conjecture rows that do not match the published gl3 outcome.
    pub findings: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: RunConfig, checks: Vec<CheckReport>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Report => summary.reports += 1,
                Status::Missing => summary.missing += 1,
            }
            if c.matches_paper() == Some(false) {
                summary.findings += 1;
            }
        }
        Report {
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            config,
            checks,
            summary,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "name",
            "status",
            "result",
            "payload",
            "paperExpectation",
            "elapsedMs",
        ])
        .expect("in-memory write");
        for c in &self.checks {
            let elapsed = c.elapsed_ms.map(|e| e.to_string()).unwrap_or_default();
            w.write_record([
                c.name.as_str(),
                c.status.label(),
                c.summary.as_str(),
                &c.payload.to_string(),
                &c.paper_expectation.to_string(),
                &elapsed,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    fn render_table(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "{} {}  n={} seed={} order={:?} orientation={:?}\n",
            self.tool, self.version, c.n, c.seed, c.order, c.orientation
        )
        .to_lowercase();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for check in &self.checks {
            let mut line = format!(
                "{:<7}  {:<width$}  {}",
                check.status.label(),
                check.name,
                check.summary
            );
            if let Some(ms) = check.elapsed_ms {
                line.push_str(&format!("  ({ms} ms)"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "passed {}, failed {}, reports {}, missing {}, findings {}\n",
            s.passed, s.failed, s.reports, s.missing, s.findings
        ));
        out
    }
}

/// `{"A^i B^j": coeff}` with descending `A` exponent.
pub fn bidegree_json(p: &BidegreePolynomial) -> Value {
    let mut map = Map::new();
    for (&(a, b), &c) in p.terms().iter().rev() {
        map.insert(format!("A^{a} B^{b}"), json!(c));
    }
    Value::Object(map)
}

pub fn bidegree_from_json(v: &Value) -> Option<BidegreePolynomial> {
    let map = v.as_object()?;
    let mut terms = BTreeMap::new();
    for (k, c) in map {
        let (a, b) = k.strip_prefix("A^")?.split_once(" B^")?;
        terms.insert((a.parse().ok()?, b.parse().ok()?), c.as_u64()?);
    }
    Some(BidegreePolynomial::from_terms(terms))
}
