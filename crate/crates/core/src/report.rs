use std::fmt;

use serde::Serialize;

const KEPT_FAILURES: usize = 10;

/// Outcome of one identity suite: how many instances were checked and a
/// sample of the failing ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub datum: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn new(name: &str, datum: &str) -> Self {
        CheckResult { name: name.to_string(), datum: datum.to_string(), checked: 0, failed: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(detail());
            }
        }
    }

    pub fn merge(&mut self, other: CheckResult) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(f);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {} {}: {} checked, {} failed", self.datum, self.name, self.checked, self.failed)?;
        for detail in &self.failures {
            write!(f, "\n    {detail}")?;
        }
        Ok(())
    }
}
