//! Command-line surface for the graph-products toolkit: input documents,
//! analysis reports, classification verdicts, complex emission, and the
//! exhaustive self-check suites.

#![forbid(unsafe_code)]

pub mod commands;
pub mod doc;
pub mod relations;
pub mod suites;

/// Process exit codes used by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Code {
    Ok = 0,
    /// A failing suite, a negative verdict, or an undetermined verdict.
    Failure = 1,
    /// Parse or validation failure of an input document.
    Parse = 2,
    /// The relation table cannot decide a label pair that matters.
    Relation = 3,
    /// Element arithmetic requested under a label that rejects it.
    LabelArithmetic = 4,
    /// Enumeration requested for a non-enumerable presentation.
    Enumeration = 5,
}

/// An error carrying its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: Code,
    pub message: String,
}

impl CliError {
    pub fn new(code: Code, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> CliError {
        CliError::new(Code::Parse, message)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}

impl From<graphprod::Error> for CliError {
    fn from(e: graphprod::Error) -> CliError {
        let code = match &e {
            graphprod::Error::UnsupportedLabel(_) => Code::LabelArithmetic,
            graphprod::Error::NonEnumerable(_) => Code::Enumeration,
            _ => Code::Parse,
        };
        CliError::new(code, e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
