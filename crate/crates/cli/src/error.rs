use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: unknown task `{name}`")]
    UnknownTask { line: usize, name: String },
    #[error("line {line}: parameter `{param}` = {value} is outside {bounds}")]
    OutOfBounds {
        line: usize,
        param: String,
        value: String,
        bounds: String,
    },
    #[error("line {line}: {kind} `{name}` is not defined")]
    Unresolved {
        line: usize,
        kind: &'static str,
        name: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
