//! Run reports: the machine-readable mirror of the human check table.
//!
//! JSON reports deliberately carry no timing so that identical inputs (and
//! seed) produce byte-identical output; wall time only appears in the table
//! rendering.

use serde::Serialize;

/// A single named verification with an optional failure witness.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: "pass".into(),
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: "fail".into(),
            witness: Some(witness.into()),
        }
    }

    pub fn from_result(name: impl Into<String>, r: Result<(), String>) -> Check {
        match r {
            Ok(()) => Check::pass(name),
            Err(w) => Check::fail(name, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    /// Echo of the invoked command line (without the binary name).
    pub command: String,
    pub checks: Vec<Check>,
    /// Structured payload of the command (roots, rows, graphs, ...).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifacts: Option<serde_json::Value>,
    pub exit_code: i32,
}

impl RunReport {
    pub fn new(command: impl Into<String>, checks: Vec<Check>) -> RunReport {
        let exit_code = if checks.iter().all(Check::passed) { 0 } else { 1 };
        RunReport {
            command: command.into(),
            checks,
            artifacts: None,
            exit_code,
        }
    }

    pub fn with_artifacts(mut self, artifacts: serde_json::Value) -> RunReport {
        self.artifacts = Some(artifacts);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Human rendering; `elapsed` is appended as a footer and never enters
    /// the JSON form.
    pub fn render_table(&self, elapsed: std::time::Duration) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            out.push_str(&format!(
                "  {:<width$}  {}",
                c.name,
                if c.passed() { "pass" } else { "FAIL" },
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  ({w})"));
            }
            out.push('\n');
        }
        let (pass, total) = (
            self.checks.iter().filter(|c| c.passed()).count(),
            self.checks.len(),
        );
        out.push_str(&format!(
            "{pass}/{total} checks passed in {:.3}s\n",
            elapsed.as_secs_f64()
        ));
        out
    }
}
