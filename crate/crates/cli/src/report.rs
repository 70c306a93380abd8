//! Run reports and CSV tables.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::{JobConfig, SCHEMA_VERSION};

pub const TOOL: &str = "monodromy";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub command: String,
    /// SHA-256 of the canonical JSON of the effective configuration.
    pub config_hash: String,
    pub result: CommandResult,
}

impl RunReport {
    pub fn new(command: &str, config: &JobConfig, result: CommandResult) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            tool: TOOL.into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            config_hash: config_hash(config),
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

pub fn config_hash(config: &JobConfig) -> String {
    Sha256::digest(config.canonical_json().as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandResult {
    Decompose(Vec<DecomposeRow>),
    Lift(LiftReport),
    Monodromy(Vec<MonodromyRow>),
    Compare(Vec<CompareRow>),
    Verify(VerifyReport),
    Sweep(SweepReport),
    Presets(Vec<PresetInfo>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecomposeRow {
    pub point: Vec<f64>,
    /// Eigenphases (Floquet) or eigenvalues (Hermitian), ascending.
    pub eigenvalues: Vec<f64>,
    /// Floquet eigenvalues `e^{iθ}` as `[re, im]`.
    pub unit_eigenvalues: Option<Vec<[f64; 2]>>,
    /// Bloch vector of each slot, for two-level models.
    pub bloch: Option<Vec<[f64; 3]>>,
    pub min_gap: f64,
    /// `max |Σ z_n P_n − U|`.
    pub reconstruction_residual: f64,
    /// Closed-form spin eigenphases `(−(φ+Δ)/2, −(φ−Δ)/2)`.
    pub analytic_eigenphases: Option<[f64; 2]>,
    pub phase_residual: Option<f64>,
    pub projector_residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftReport {
    pub path: String,
    pub samples: usize,
    pub length: f64,
    pub initial_order: Vec<usize>,
    pub permutation: Vec<usize>,
    pub final_eigenvalues: Vec<f64>,
    pub final_bloch: Option<Vec<[f64; 3]>>,
    pub steps_used: usize,
    pub min_gap_seen: f64,
    pub min_overlap_seen: f64,
    pub trajectory_rows: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonodromyRow {
    pub path: String,
    pub permutation: Vec<usize>,
    pub windings: Vec<i64>,
    pub predicted: Option<Vec<usize>>,
    pub steps_used: usize,
    pub min_gap_seen: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub first: String,
    pub second: String,
    pub first_permutation: Vec<usize>,
    pub second_permutation: Vec<usize>,
    pub discrepancy: Vec<usize>,
    pub composite_monodromy: Vec<usize>,
    pub composite_windings: Vec<i64>,
    pub predicted: Option<Vec<usize>>,
    pub composition_holds: bool,
    pub prediction_holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub periods: usize,
    pub infidelity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub path: String,
    pub slot: usize,
    pub rows: Vec<ScanEntry>,
    pub exponent: Option<f64>,
    pub lift_permutation: Vec<usize>,
    pub selected_slot: usize,
    pub selected_fidelity: f64,
    pub slot_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub index: usize,
    pub winding: i64,
    pub expected: Vec<usize>,
    pub found: Vec<usize>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub seed: u64,
    pub loops: usize,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<SweepEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresetInfo {
    pub name: String,
    pub samples: usize,
    pub start: Vec<f64>,
    pub end: Vec<f64>,
    pub length: f64,
    pub points: Vec<[f64; 2]>,
}

/// A plain CSV table; floats are written with 17 significant digits.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn perm_cell(images: &[usize]) -> String {
    images.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_cells_round_trip() {
        for x in [std::f64::consts::PI, -1e-300, 0.1 + 0.2, 6.02214076e23, 0.0] {
            assert_eq!(float(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn hash_depends_on_config() {
        let a = JobConfig::default();
        let mut b = JobConfig::default();
        b.sweep.seed = 7;
        assert_eq!(config_hash(&a), config_hash(&a.clone()));
        assert_ne!(config_hash(&a), config_hash(&b));
        assert_eq!(config_hash(&a).len(), 64);
    }
}
