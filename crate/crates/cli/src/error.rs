use thiserror::Error;

/// Where in a script something went wrong (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub col: usize,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{at}: syntax error: {msg}")]
    Syntax { at: Location, msg: String },
    #[error("{at}: undefined name `{name}`")]
    Undefined { at: Location, name: String },
    #[error("{at}: `{label}` is not an element of {semiring}")]
    UnknownElement {
        at: Location,
        label: String,
        semiring: String,
    },
    #[error("{at}: {msg}")]
    Arity { at: Location, msg: String },
    #[error("usage: {0}")]
    Usage(String),
    /// A declaration that parses but is mathematically invalid.
    #[error("{at}: {source}")]
    Invalid {
        at: Location,
        #[source]
        source: semicong::Error,
    },
    #[error("{command}: {source}")]
    Domain {
        command: &'static str,
        #[source]
        source: semicong::Error,
    },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid { .. } | CliError::Domain { .. } | CliError::Io(_) => 1,
            CliError::Syntax { .. }
            | CliError::Undefined { .. }
            | CliError::UnknownElement { .. }
            | CliError::Arity { .. }
            | CliError::Usage(_) => 2,
        }
    }

    pub fn syntax(at: Location, msg: impl Into<String>) -> Self {
        CliError::Syntax {
            at,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
