//! Per-run report: what ran, on which inputs, which invariants held, and
//! where the artifacts went. A failed invariant drives the exit code.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantStatus {
    Pass,
    Fail,
    /// Recorded value with no pass/fail meaning.
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantEntry {
    pub status: InvariantStatus,
    pub value: f64,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hbar: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inertia: Option<f64>,
    pub input_digest: BTreeMap<String, String>,
    pub results: Map<String, Value>,
    pub invariants: BTreeMap<String, InvariantEntry>,
    pub artifacts: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            hbar: None,
            inertia: None,
            input_digest: BTreeMap::new(),
            results: Map::new(),
            invariants: BTreeMap::new(),
            artifacts: Vec::new(),
        }
    }

    pub fn set_spec(&mut self, hbar: f64, inertia: f64) {
        self.hbar = Some(hbar);
        self.inertia = Some(inertia);
    }

    pub fn digest(&mut self, role: &str, hex: String) {
        self.input_digest.insert(role.to_string(), hex);
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    /// Records a checked invariant: `value` must stay within `tolerance`
    /// in magnitude to pass.
    pub fn check(&mut self, name: &str, value: f64, tolerance: f64) {
        let status = if value.abs() <= tolerance && value.is_finite() {
            InvariantStatus::Pass
        } else {
            InvariantStatus::Fail
        };
        self.invariants
            .insert(name.to_string(), InvariantEntry { status, value });
    }

    /// Records a value for the record, with no pass/fail meaning.
    pub fn note(&mut self, name: &str, value: f64) {
        self.invariants.insert(
            name.to_string(),
            InvariantEntry {
                status: InvariantStatus::Info,
                value,
            },
        );
    }

    pub fn artifact(&mut self, path: &std::path::Path) {
        self.artifacts.push(path.display().to_string());
    }

    pub fn passed(&self) -> bool {
        self.invariants
            .values()
            .all(|e| e.status != InvariantStatus::Fail)
    }

    /// The results object with the rotor constants merged in, written by
    /// `--json` so every numeric artifact is unit-unambiguous on its own.
    pub fn results_document(&self) -> Map<String, Value> {
        let mut doc = Map::new();
        if let Some(h) = self.hbar {
            doc.insert("hbar".into(), h.into());
        }
        if let Some(i) = self.inertia {
            doc.insert("inertia".into(), i.into());
        }
        for (k, v) in &self.results {
            doc.insert(k.clone(), v.clone());
        }
        doc
    }
}
