//! Pass/fail records for the verification suites.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check { name: name.into(), passed, detail: None });
    }

    /// Records a check whose failure carries the first counterexample.
    pub fn check_first(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check { name: name.into(), passed: failure.is_none(), detail: failure });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Finds the first item for which `ok` fails and describes it.
pub fn first_failure<I, T>(items: I, ok: impl Fn(&T) -> bool, describe: impl Fn(&T) -> String) -> Option<String>
where
    I: IntoIterator<Item = T>,
{
    items.into_iter().find(|x| !ok(x)).map(|x| describe(&x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregation() {
        let mut r = Report::new();
        r.check("a", true);
        assert!(r.passed());
        r.check_first("b", first_failure(0..5, |&i| i < 3, |i| format!("i = {i}")));
        assert!(!r.passed());
        assert_eq!(r.failures().next().unwrap().detail.as_deref(), Some("i = 3"));
    }
}
