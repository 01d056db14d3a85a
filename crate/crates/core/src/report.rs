//! Named pass/fail checks with witnesses.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Ordered list of checks. A report passes when every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a check; the witness closure only runs on failure.
    pub fn record(&mut self, name: &str, passed: bool, witness: impl FnOnce() -> String) {
        let witness = if passed { None } else { Some(witness()) };
        self.checks.push(Check { name: name.to_string(), passed, witness });
    }

    /// Records a check whose failure witness is already known.
    pub fn record_opt(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(Check { name: name.to_string(), passed: witness.is_none(), witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Whether the named check exists and passed.
    pub fn check_passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    /// Appends `other`'s checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_only_on_failure() {
        let mut r = Report::new();
        r.record("a", true, || panic!("not evaluated"));
        r.record("b", false, || "boom".into());
        assert!(!r.passed());
        assert!(r.check_passed("a"));
        assert!(!r.check_passed("b"));
        assert!(!r.check_passed("missing"));
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.get("b").unwrap().witness.as_deref(), Some("boom"));
    }
}
