use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// Whether a verdict checks a proved statement or only gathers evidence for
/// a conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Proved,
    ConjectureEmpirical,
}

/// Outcome of one verification. A failing verdict always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub statement: String,
    pub params: BTreeMap<String, i64>,
    pub pass: bool,
    pub witness: Option<String>,
    pub elapsed: Duration,
    pub status: Status,
}

impl Verdict {
    pub fn new(
        statement: impl Into<String>,
        params: &[(&str, i64)],
        witness: Option<String>,
        elapsed: Duration,
    ) -> Self {
        Self {
            statement: statement.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            pass: witness.is_none(),
            witness,
            elapsed,
            status: Status::Proved,
        }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params.get(name).copied()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.statement
        )?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        if self.status == Status::ConjectureEmpirical {
            f.write_str(" [conjecture, empirical]")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

pub fn all_pass(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(|v| v.pass)
}
