//! Report records printed by the commands.

use brace_core::analysis::AnalysisSummary;
use brace_core::ybe::YbeViolation;
use brace_core::{AxiomReport, CheckMode};
use serde::Serialize;

/// The analysis report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub simple: bool,
    pub perfect: bool,
    pub trivial: bool,
    pub solvable: bool,
    pub left_nilpotent: bool,
    pub right_nilpotent: bool,
    pub socle_size: usize,
    pub left_series_sizes: Vec<usize>,
    pub right_series_sizes: Vec<usize>,
    pub d_series_sizes: Vec<usize>,
    pub derived_length_mult: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_count: Option<usize>,
}

impl From<AnalysisSummary> for AnalysisReport {
    fn from(s: AnalysisSummary) -> Self {
        AnalysisReport {
            order: s.order,
            simple: s.simple,
            perfect: s.perfect,
            trivial: s.trivial,
            solvable: s.solvable,
            left_nilpotent: s.left_nilpotent,
            right_nilpotent: s.right_nilpotent,
            socle_size: s.socle_size,
            left_series_sizes: s.left_series_sizes,
            right_series_sizes: s.right_series_sizes,
            d_series_sizes: s.d_series_sizes,
            derived_length_mult: s.derived_length_mult,
            ideal_count: s.ideal_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationRecord {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
    pub message: String,
}

/// Result of `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub order: usize,
    pub valid: bool,
    pub mode: String,
    pub violations: Vec<ViolationRecord>,
}

impl From<&AxiomReport> for VerifyReport {
    fn from(r: &AxiomReport) -> Self {
        VerifyReport {
            order: r.order,
            valid: r.is_valid(),
            mode: match r.mode {
                CheckMode::Exhaustive => "exhaustive".into(),
                CheckMode::Sampled { triples, seed } => format!("sampled({triples} triples, seed {seed})"),
            },
            violations: r
                .violations
                .iter()
                .map(|v| ViolationRecord { axiom: v.axiom(), witness: v.witness(), message: v.to_string() })
                .collect(),
        }
    }
}

/// Outcome of one solution check, with its witness when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl From<Result<(), YbeViolation>> for CheckRecord {
    fn from(r: Result<(), YbeViolation>) -> Self {
        match r {
            Ok(()) => CheckRecord { passed: true, witness: None, message: None },
            Err(v) => {
                let witness = match v {
                    YbeViolation::Braid { x, y, z } => vec![x, y, z],
                    YbeViolation::NotInvolutive { x, y } => vec![x, y],
                    YbeViolation::LeftDegenerate { x } => vec![x],
                    YbeViolation::RightDegenerate { y } => vec![y],
                };
                CheckRecord { passed: false, witness: Some(witness), message: Some(v.to_string()) }
            }
        }
    }
}

/// Result of `ybe --verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YbeReport {
    pub size: usize,
    pub braid: CheckRecord,
    pub involutive: CheckRecord,
    pub nondegenerate: CheckRecord,
}

impl YbeReport {
    pub fn passed(&self) -> bool {
        self.braid.passed && self.involutive.passed && self.nondegenerate.passed
    }
}
