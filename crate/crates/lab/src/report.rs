//! Machine-readable suite outcomes.

use std::collections::BTreeMap;

use coverlab::homology::Field;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Limits echoed into every report, after suite defaults are applied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub max_k: usize,
    pub fields: Vec<Field>,
    pub seed: u64,
    pub budget: u64,
    pub max_generators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub params: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Note {
    pub instance: String,
    pub params: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub config: SuiteConfig,
    pub instances_tested: usize,
    pub failures: Vec<Failure>,
    /// Instances not decided within the limits; never counted as passes.
    pub skipped: Vec<Note>,
    /// Field disagreements and other observations that carry no verdict.
    pub findings: Vec<Note>,
    pub counts: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn skipped_fraction(&self) -> f64 {
        if self.instances_tested == 0 {
            0.0
        } else {
            self.skipped.len() as f64 / self.instances_tested as f64
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// The report with the wall-clock time zeroed, for byte comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport { elapsed_ms: 0, ..self.clone() }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} ({} instances, {} failures, {} skipped, {} findings, {} ms)",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.instances_tested,
            self.failures.len(),
            self.skipped.len(),
            self.findings.len(),
            self.elapsed_ms
        )
    }
}

/// What one instance contributed; merged in instance-key order.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub tested: usize,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Note>,
    pub findings: Vec<Note>,
    pub counts: BTreeMap<String, u64>,
}

impl Outcome {
    pub fn fail(&mut self, instance: &str, params: &str, expected: impl ToString, got: impl ToString) {
        self.failures.push(Failure {
            instance: instance.to_string(),
            params: params.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        });
    }

    pub fn skip(&mut self, instance: &str, params: &str, why: impl ToString) {
        self.skipped.push(Note { instance: instance.to_string(), params: params.to_string(), note: why.to_string() });
    }

    pub fn finding(&mut self, instance: &str, params: &str, note: impl ToString) {
        self.findings.push(Note { instance: instance.to_string(), params: params.to_string(), note: note.to_string() });
    }

    pub fn count(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: Outcome) {
        self.tested += other.tested;
        self.failures.extend(other.failures);
        self.skipped.extend(other.skipped);
        self.findings.extend(other.findings);
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
    }

    pub fn into_report(mut self, suite: &str, config: SuiteConfig, elapsed_ms: u64) -> VerificationReport {
        self.failures.sort();
        self.skipped.sort();
        self.findings.sort();
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            config,
            instances_tested: self.tested,
            failures: self.failures,
            skipped: self.skipped,
            findings: self.findings,
            counts: self.counts,
            elapsed_ms,
        }
    }
}
