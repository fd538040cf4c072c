//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]; the CLI maps the variants onto
//! process exit codes (usage = 1, data = 2, training = 3).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Matrix / vector shape disagreement. Carries both shapes.
    #[error("dimension mismatch: {context}: {left} vs {right}")]
    Dimension {
        context: String,
        left: String,
        right: String,
    },

    /// Invalid argument to a numeric or model operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A file failed to parse. `line` is 1-based and includes the header.
    #[error("parse error in {path} line {line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    /// Cohort-level data problem (missing views, empty cohort, unknown feature...).
    #[error("data error: {0}")]
    Data(String),

    /// Bad configuration file or value.
    #[error("config error: {0}")]
    Config(String),

    /// Model training failed (divergence, single-class labels, empty set...).
    #[error("training error: {0}")]
    Training(String),

    /// Fold stratification is impossible for the given labels.
    #[error("stratification error: {0}")]
    Stratification(String),

    /// A metric is undefined on the given inputs (e.g. single-class ROC-AUC).
    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    /// A leakage guard tripped: some stage saw rows outside its allowed fold.
    #[error("leakage guard violated: {0}")]
    Leakage(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn dimension(context: impl Into<String>, left: impl std::fmt::Display, right: impl std::fmt::Display) -> Self {
        Error::Dimension {
            context: context.into(),
            left: left.to_string(),
            right: right.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
