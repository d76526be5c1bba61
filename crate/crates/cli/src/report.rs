//! Check results, the report envelope and its renderings.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::config::{Format, RunConfig};

/// Bumped whenever the report layout changes.
pub const REPORT_VERSION: &str = "1.0";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    /// Acceptance criterion number, 0 for checks outside the criteria.
    pub criterion: u8,
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: String,
    pub expected: String,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn is_pass(&self) -> bool {
        self.status == "pass"
    }

    pub fn is_fail(&self) -> bool {
        self.status == "fail"
    }

    /// `key=value` pairs in key order.
    pub fn params_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: RunConfig,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    /// Set when a check panicked; drives exit code 3.
    #[serde(skip)]
    pub internal_error: bool,
}

impl Report {
    pub fn new(config: RunConfig, mut checks: Vec<CheckResult>, wall_ms: u64, internal_error: bool) -> Report {
        checks.sort_by(|a, b| {
            (a.criterion, &a.check, param_key(&a.params)).cmp(&(b.criterion, &b.check, param_key(&b.params)))
        });
        let summary = Summary {
            pass: checks.iter().filter(|c| c.status == "pass").count(),
            fail: checks.iter().filter(|c| c.status == "fail").count(),
            skipped: checks.iter().filter(|c| c.status == "skipped").count(),
            wall_ms,
        };
        Report { version: REPORT_VERSION.into(), config, checks, summary, internal_error }
    }

    /// 0 all pass, 1 any failure, 3 internal error.
    pub fn exit_code(&self) -> u8 {
        if self.internal_error {
            3
        } else if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["criterion", "check", "params", "status", "expected", "computed", "detail", "elapsed_ms"])
                    .expect("in-memory write");
                for c in &self.checks {
                    w.write_record([
                        c.criterion.to_string(),
                        c.check.clone(),
                        c.params_string(),
                        c.status.clone(),
                        c.expected.clone(),
                        c.computed.clone(),
                        c.detail.clone().unwrap_or_default(),
                        c.elapsed_ms.to_string(),
                    ])
                    .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Table => {
                let mut out = String::new();
                for c in &self.checks {
                    out.push_str(&format!(
                        "[{:>2}] {:<7} {:<22} {:<28} expected {} | computed {}\n",
                        c.criterion,
                        c.status.to_uppercase(),
                        c.check,
                        c.params_string(),
                        clip(&c.expected),
                        clip(&c.computed)
                    ));
                    if c.is_fail() {
                        if let Some(d) = &c.detail {
                            out.push_str(&format!("      detail: {}\n", d));
                        }
                    }
                }
                out.push_str(&format!(
                    "summary: {} pass, {} fail, {} skipped, {} ms\n",
                    self.summary.pass, self.summary.fail, self.summary.skipped, self.summary.wall_ms
                ));
                out
            }
        }
    }
}

/// Numeric-aware ordering key so that `N=10` sorts after `N=9`.
fn param_key(p: &BTreeMap<String, String>) -> Vec<(String, i64, String)> {
    p.iter().map(|(k, v)| (k.clone(), v.parse::<i64>().unwrap_or(i64::MIN), v.clone())).collect()
}

/// Shortens long renderings in the text table.
fn clip(s: &str) -> String {
    const MAX: usize = 40;
    if s.chars().count() <= MAX {
        s.to_string()
    } else {
        let head: String = s.chars().take(MAX).collect();
        format!("{}...", head)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(check: &str, n: &str, status: &str) -> CheckResult {
        CheckResult {
            criterion: 1,
            check: check.into(),
            params: [("N".to_string(), n.to_string())].into_iter().collect(),
            status: status.into(),
            expected: "1".into(),
            computed: "1".into(),
            detail: None,
            elapsed_ms: 0,
        }
    }

    #[test]
    fn numeric_params_sort_numerically() {
        let r = Report::new(RunConfig::default(), vec![result("a", "10", "pass"), result("a", "9", "pass")], 0, false);
        assert_eq!(r.checks[0].params["N"], "9");
    }

    #[test]
    fn exit_code_reflects_failures() {
        let ok = Report::new(RunConfig::default(), vec![result("a", "1", "pass")], 0, false);
        let bad = Report::new(RunConfig::default(), vec![result("a", "1", "fail")], 0, false);
        let crashed = Report::new(RunConfig::default(), vec![result("a", "1", "fail")], 0, true);
        assert_eq!((ok.exit_code(), bad.exit_code(), crashed.exit_code()), (0, 1, 3));
        assert_eq!(bad.summary.fail, 1);
    }

    #[test]
    fn csv_quotes_embedded_commas() {
        let r = Report::new(RunConfig::default(), vec![result("a", "1", "pass")], 0, false);
        let mut c = r.checks[0].clone();
        c.expected = "1,2".into();
        let r = Report::new(RunConfig::default(), vec![c], 0, false);
        assert!(r.render(Format::Csv).contains("\"1,2\""));
    }
}
