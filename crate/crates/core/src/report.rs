use serde::{Deserialize, Serialize};

/// Outcome of one verification instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub instance: String,
    pub passed: bool,
    /// One line per mismatch; empty when `passed`.
    pub mismatches: Vec<String>,
}

impl CheckReport {
    pub fn new(instance: impl Into<String>, mismatches: Vec<String>) -> Self {
        CheckReport {
            instance: instance.into(),
            passed: mismatches.is_empty(),
            mismatches,
        }
    }
}
