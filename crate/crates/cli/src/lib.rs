//! File formats and command implementations behind the `brace` binary.
//!
//! * [`io`]: the JSON encodings of braces, actions, cocycles and
//!   Yang-Baxter solutions, with lossless conversion to the core types.
//! * [`family`]: family-parameter records and the dispatch to the builders.
//! * [`report`]: the analysis and verification reports.
//! * [`CliError`]: failures with their process exit codes.

pub mod family;
pub mod io;
pub mod report;

use brace_core::Error;
use thiserror::Error as ThisError;

/// Exit status of a successful run.
pub const EXIT_OK: u8 = 0;
/// A checked property does not hold (invalid brace, failing solution).
pub const EXIT_PROPERTY: u8 = 1;
/// Bad input: malformed files, violated hypotheses, structural errors.
pub const EXIT_PRECONDITION: u8 = 2;
/// A size guard or analysis cap refused the request.
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{context}: {source}")]
    Json { context: String, source: serde_json::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::SizeGuard { .. } | Error::AnalysisCap { .. }) => EXIT_RESOURCE,
            _ => EXIT_PRECONDITION,
        }
    }

    /// Machine-readable description printed on stdout.
    pub fn to_json(&self) -> serde_json::Value {
        let mut out = serde_json::json!({ "error": self.kind(), "message": self.to_string() });
        match self {
            CliError::Core(Error::Hypothesis { condition, detail }) => {
                out["condition"] = (*condition).into();
                out["detail"] = detail.clone().into();
            }
            CliError::Core(Error::SizeGuard { requested, limit }) => {
                out["requested"] = requested.to_string().into();
                out["limit"] = (*limit).into();
            }
            CliError::Core(Error::NotABrace(v)) => {
                out["axiom"] = v.axiom().into();
                out["witness"] = v.witness().into();
            }
            _ => {}
        }
        out
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => match e {
                Error::SizeGuard { .. } => "size_guard",
                Error::AnalysisCap { .. } => "analysis_cap",
                Error::Structural(_) => "structural",
                Error::NotABrace(_) => "not_a_brace",
                Error::Lambda(_) => "invalid_lambda",
                Error::InvalidAction(_) => "invalid_action",
                Error::InvalidCocycle(_) => "invalid_cocycle",
                Error::Hypothesis { .. } => "hypothesis",
                Error::Precondition(_) => "precondition",
            },
            CliError::Io { .. } => "io",
            CliError::Json { .. } => "json",
            CliError::Usage(_) => "usage",
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
