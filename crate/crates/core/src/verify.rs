//! Outcome of a single verification, shared by every checking routine.

use std::fmt::Display;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// Expected and computed renderings plus a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub status: Status,
    pub expected: String,
    pub computed: String,
    /// Where the first mismatch occurred, or other context.
    pub detail: Option<String>,
}

impl VerificationOutcome {
    /// Passes exactly when the two renderings agree.
    pub fn compare(expected: impl Display, computed: impl Display) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        VerificationOutcome { status, expected, computed, detail: None }
    }

    pub fn pass(expected: impl Display, computed: impl Display) -> Self {
        VerificationOutcome { status: Status::Pass, expected: expected.to_string(), computed: computed.to_string(), detail: None }
    }

    pub fn fail(expected: impl Display, computed: impl Display, detail: impl Display) -> Self {
        VerificationOutcome {
            status: Status::Fail,
            expected: expected.to_string(),
            computed: computed.to_string(),
            detail: Some(detail.to_string()),
        }
    }

    pub fn skipped(reason: impl Display) -> Self {
        VerificationOutcome { status: Status::Skipped, expected: String::new(), computed: String::new(), detail: Some(reason.to_string()) }
    }

    pub fn with_detail(mut self, detail: impl Display) -> Self {
        self.detail = Some(detail.to_string());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Combines several outcomes: fails if any fails, reports the first failure.
    pub fn all(parts: Vec<VerificationOutcome>) -> Self {
        let n = parts.len();
        if let Some(f) = parts.iter().find(|p| p.status == Status::Fail) {
            return f.clone();
        }
        VerificationOutcome::pass(format!("{} checks", n), format!("{} checks", n))
    }
}
