use std::fmt;

use serde::Serialize;

/// One offending witness found by a checker.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub context: String,
    pub witness: String,
    pub residual: String,
}

/// Outcome of a checker. `passed` holds exactly when `failures` is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), passed: true, checked: 0, failures: Vec::new() }
    }

    pub fn fail(&mut self, context: impl Into<String>, witness: impl Into<String>, residual: impl Into<String>) {
        self.passed = false;
        self.failures.push(Failure { context: context.into(), witness: witness.into(), residual: residual.into() });
    }

    pub fn check(&mut self, ok: bool, context: impl Into<String>, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(context, witness(), "");
        }
    }

    /// Folds another report in, prefixing its contexts with its name.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        for f in other.failures {
            self.fail(format!("{}: {}", other.name, f.context), f.witness, f.residual);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {} ({} checks)", self.name, self.checked)?;
        for fl in self.failures.iter().take(20) {
            writeln!(f, "  {} | {} | {}", fl.context, fl.witness, fl.residual)?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  ... {} more", self.failures.len() - 20)?;
        }
        Ok(())
    }
}
