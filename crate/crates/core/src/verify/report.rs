use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialCounts {
    pub attempted: u64,
    pub accepted: u64,
    pub rejected: u64,
}

impl TrialCounts {
    pub fn add(&mut self, other: &TrialCounts) {
        self.attempted += other.attempted;
        self.accepted += other.accepted;
        self.rejected += other.rejected;
    }
}

/// One violated identity, with inputs and both sides as exact text.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    /// Set on failures collected into an aggregate report.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub trial: u64,
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub backend: String,
    pub seed: u64,
    pub trials: TrialCounts,
    /// Sorted by trial index.
    pub failures: Vec<Failure>,
    pub wall_ms: u64,
    /// Per-suite reports of an aggregate run.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<VerificationReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.suites.iter().all(|s| s.passed())
    }

    /// The report with every `wall_ms` zeroed, for comparing reruns.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        r.wall_ms = 0;
        r.suites = r.suites.iter().map(|s| s.without_timing()).collect();
        r
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_field_names() {
        let r = VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: "s".into(),
            backend: "gaussian-rational".into(),
            seed: 42,
            trials: TrialCounts {
                attempted: 3,
                accepted: 2,
                rejected: 1,
            },
            failures: vec![Failure {
                suite: None,
                trial: 1,
                inputs: json!([]),
                lhs: json!("1"),
                rhs: json!("2"),
            }],
            wall_ms: 5,
            suites: Vec::new(),
        };
        let v: Value = serde_json::from_str(&r.to_json_pretty()).unwrap();
        for k in [
            "schema_version",
            "suite",
            "backend",
            "seed",
            "trials",
            "failures",
            "wall_ms",
        ] {
            assert!(v.get(k).is_some(), "missing {k}");
        }
        assert!(v.get("suites").is_none());
        assert!(v["failures"][0].get("suite").is_none());
        assert_eq!(v["trials"]["rejected"], 1);
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        assert!(!r.passed());
        assert_eq!(r.without_timing().wall_ms, 0);
    }
}
