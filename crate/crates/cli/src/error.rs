use std::path::PathBuf;

use thiserror::Error;

use crate::expr::ExprError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("polynomial {index}, {source}")]
    Expr { index: usize, source: ExprError },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Solver(#[from] mhsolve_core::Error),
}
