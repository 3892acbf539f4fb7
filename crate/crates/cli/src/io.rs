//! JSON encodings.
//!
//! * Brace: `{"order": n, "add": [n·n], "mul": [n·n], "meta": {…}}`, row-major.
//! * Action: `{"actor_order", "target_order", "perms": [[…], …]}`.
//! * Cocycle: `{"t_order", "s_order", "table": [row-major S-indices], "bilinear"}`.
//! * Solution: `{"size": n, "r": [[u, v], …]}`, row-major.
//!
//! Files are written compactly with a trailing newline, so reading and
//! rewriting a file reproduces it byte for byte.

use std::path::Path;

use brace_core::brace::verify_tables;
use brace_core::products::{BraceAction, SymmetricCocycle};
use brace_core::ybe::YbeSolution;
use brace_core::{AxiomReport, Error, FiniteBrace, Limits, Meta};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceFile {
    pub order: usize,
    pub add: Vec<u16>,
    pub mul: Vec<u16>,
    #[serde(default)]
    pub meta: Meta,
}

impl BraceFile {
    pub fn from_brace(b: &FiniteBrace) -> Self {
        BraceFile { order: b.order(), add: b.add_table().to_vec(), mul: b.mul_table().to_vec(), meta: b.meta().clone() }
    }

    /// Runs the axiom checks; structural problems are errors.
    pub fn verify(&self, limits: &Limits) -> CliResult<AxiomReport> {
        limits.check_order(self.order as u128)?;
        Ok(verify_tables(self.order, &self.add, &self.mul, limits).map_err(Error::from)?)
    }

    pub fn into_brace(self, limits: &Limits) -> CliResult<FiniteBrace> {
        Ok(FiniteBrace::from_tables(self.order, self.add, self.mul, self.meta, limits)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionFile {
    pub actor_order: usize,
    pub target_order: usize,
    pub perms: Vec<Vec<u16>>,
}

impl ActionFile {
    pub fn from_action(a: &BraceAction) -> Self {
        ActionFile { actor_order: a.actor_order(), target_order: a.target_order(), perms: a.perms().to_vec() }
    }

    pub fn into_action(self) -> CliResult<BraceAction> {
        Ok(BraceAction::new(self.actor_order, self.target_order, self.perms)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleFile {
    pub t_order: usize,
    pub s_order: usize,
    pub table: Vec<u16>,
    pub bilinear: bool,
}

impl CocycleFile {
    pub fn from_cocycle(c: &SymmetricCocycle) -> Self {
        CocycleFile { t_order: c.t_order(), s_order: c.s_order(), table: c.table().to_vec(), bilinear: c.is_bilinear() }
    }

    pub fn into_cocycle(self) -> CliResult<SymmetricCocycle> {
        Ok(SymmetricCocycle::new(self.t_order, self.s_order, self.table, self.bilinear)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub size: usize,
    pub r: Vec<[u16; 2]>,
}

impl SolutionFile {
    pub fn from_solution(s: &YbeSolution) -> Self {
        SolutionFile { size: s.size(), r: s.table().iter().map(|&(u, v)| [u, v]).collect() }
    }

    pub fn into_solution(self) -> CliResult<YbeSolution> {
        Ok(YbeSolution::new(self.size, self.r.into_iter().map(|[u, v]| (u, v)).collect())?)
    }
}

/// Compact JSON with a trailing newline.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable value");
    s.push('\n');
    s
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_json(&text, &path.display().to_string())
}

pub fn parse_json<T: DeserializeOwned>(text: &str, context: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|source| CliError::Json { context: context.to_string(), source })
}

/// Writes `value` to `path`, or to stdout when `path` is `None`.
pub fn write_json<T: Serialize>(value: &T, path: Option<&Path>) -> CliResult<()> {
    let text = to_json_line(value);
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

/// Reads and fully verifies a brace file.
pub fn read_brace(path: &Path, limits: &Limits) -> CliResult<FiniteBrace> {
    read_json::<BraceFile>(path)?.into_brace(limits)
}
