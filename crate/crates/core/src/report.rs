use serde::{Deserialize, Serialize};

/// Most witnesses kept per check; the count of failures is still exact.
pub const MAX_WITNESSES: usize = 32;

/// Outcome of one identity checked on basis tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub failures: usize,
    /// Basis index tuples at which the identity fails.
    pub witnesses: Vec<Vec<usize>>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn fail(&mut self, witness: Vec<usize>) {
        self.passed = false;
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    /// Record `ok` for `witness`.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Vec<usize>) {
        if !ok {
            self.fail(witness());
        }
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed {
            write!(f, "{}: pass", self.name)
        } else {
            write!(f, "{}: FAIL ({} failures", self.name, self.failures)?;
            if let Some(w) = self.witnesses.first() {
                write!(f, ", first at {w:?}")?;
            }
            write!(f, ")")
        }
    }
}

/// A named group of checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<CheckReport>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failing(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
