//! JSON report envelope for `ybx verify`.

use std::collections::BTreeMap;

use serde::Serialize;

pub const RNG_NAME: &str = "ChaCha8Rng (rand_chacha 0.9, seed_from_u64)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// Passes when `residual < threshold`.
    Relation,
    /// Negative control: passes when `residual > threshold`.
    Control,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub params: BTreeMap<String, f64>,
    pub residual: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl Check {
    pub fn relation(
        name: impl Into<String>,
        params: &[(&str, f64)],
        residual: f64,
        tolerance: f64,
    ) -> Self {
        Self::build(
            name.into(),
            CheckKind::Relation,
            params,
            residual,
            tolerance,
        )
    }

    pub fn control(
        name: impl Into<String>,
        params: &[(&str, f64)],
        residual: f64,
        floor: f64,
    ) -> Self {
        Self::build(name.into(), CheckKind::Control, params, residual, floor)
    }

    fn build(
        name: String,
        kind: CheckKind,
        params: &[(&str, f64)],
        residual: f64,
        threshold: f64,
    ) -> Self {
        let passed = match kind {
            CheckKind::Relation => residual < threshold,
            CheckKind::Control => residual > threshold,
        };
        let params = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        Self {
            name,
            kind,
            params,
            residual,
            threshold,
            passed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub failed: usize,
    /// Largest residual among relation checks.
    pub max_residual: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub rng: String,
    pub seed: u64,
    /// Global tolerance override, `null` when each check used its default.
    pub tolerance: Option<f64>,
    pub samples: usize,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(
        suite: &str,
        seed: u64,
        tolerance: Option<f64>,
        samples: usize,
        checks: Vec<Check>,
    ) -> Self {
        let failed = checks.iter().filter(|c| !c.passed).count();
        let max_residual = checks
            .iter()
            .filter(|c| c.kind == CheckKind::Relation)
            .map(|c| c.residual)
            .fold(0.0, f64::max);
        let summary = Summary {
            total: checks.len(),
            failed,
            max_residual,
            passed: failed == 0 && !checks.is_empty(),
        };
        Self {
            suite: suite.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            rng: RNG_NAME.to_string(),
            seed,
            tolerance,
            samples,
            checks,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    /// Largest relation residual among checks whose name starts with `prefix`.
    pub fn max_residual_of(&self, prefix: &str) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Relation && c.name.starts_with(prefix))
            .map(|c| c.residual)
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn control_passes_above_floor() {
        assert!(Check::control("c", &[], 0.5, 1e-3).passed);
        assert!(!Check::control("c", &[], 1e-4, 1e-3).passed);
        assert!(!Check::relation("r", &[], 1e-9, 1e-10).passed);
    }

    #[test]
    fn empty_report_does_not_pass() {
        assert!(!Report::new("x", 0, None, 0, vec![]).summary.passed);
    }

    #[test]
    fn params_serialize_in_key_order() {
        let c = Check::relation("r", &[("theta3", 0.1), ("theta1", 0.2)], 0.0, 1.0);
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.find("theta1").unwrap() < s.find("theta3").unwrap());
    }
}
