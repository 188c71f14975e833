//! Pass/fail bookkeeping shared by every verification routine.

use serde::Serialize;

/// Outcome of a single named check.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CheckResult {
    pub id: String,
    pub params: String,
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub sampled: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    /// A check passes when its worst residual is within `tolerance`. NaN never passes.
    pub fn from_error(
        id: impl Into<String>,
        params: impl Into<String>,
        max_error: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            id: id.into(),
            params: params.into(),
            max_error,
            tolerance,
            passed: max_error <= tolerance,
            sampled: false,
            note: None,
        }
    }

    /// A boolean check; `max_error` is recorded as 0 on success and 1 on failure.
    pub fn from_bool(id: impl Into<String>, params: impl Into<String>, ok: bool) -> Self {
        Self {
            id: id.into(),
            params: params.into(),
            max_error: if ok { 0.0 } else { 1.0 },
            tolerance: 0.0,
            passed: ok,
            sampled: false,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn sampled(mut self, sampled: bool) -> Self {
        self.sampled = sampled;
        self
    }
}

/// An ordered collection of checks over one category.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerificationReport {
    pub title: String,
    pub category: String,
    pub tolerance: f64,
    pub seed: Option<u64>,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>, category: impl Into<String>, tolerance: f64) -> Self {
        Self {
            title: title.into(),
            category: category.into(),
            tolerance,
            seed: None,
            checks: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Largest residual over all checks (NaN-propagating).
    pub fn max_error(&self) -> f64 {
        self.checks.iter().fold(0.0_f64, |acc, c| {
            if acc.is_nan() || c.max_error.is_nan() {
                f64::NAN
            } else {
                acc.max(c.max_error)
            }
        })
    }

    /// Sorts checks by id; parameters break ties so the order is fully deterministic.
    pub fn sort(&mut self) {
        self.checks
            .sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.params.cmp(&b.params)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_never_passes() {
        let c = CheckResult::from_error("x", "", f64::NAN, 1.0);
        assert!(!c.passed);
        let mut r = VerificationReport::new("t", "c", 1e-9);
        r.push(c);
        assert!(!r.passed());
        assert!(r.max_error().is_nan());
    }

    #[test]
    fn sort_is_by_id_then_params() {
        let mut r = VerificationReport::new("t", "c", 1e-9);
        r.push(CheckResult::from_bool("b", "2", true));
        r.push(CheckResult::from_bool("a", "", true));
        r.push(CheckResult::from_bool("b", "1", true));
        r.sort();
        let ids: Vec<_> = r.checks.iter().map(|c| (c.id.as_str(), c.params.as_str())).collect();
        assert_eq!(ids, vec![("a", ""), ("b", "1"), ("b", "2")]);
    }
}
