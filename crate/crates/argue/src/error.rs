//! Error-to-exit-code mapping: 2 usage/parse, 3 resource cap, 4 I/O.

use std::fmt;

use ddg_engine::DdgError;
use extensions::ExtensionError;
use knowledge::KnowledgeError;
use logic_core::LogicError;
use prioritizer::PrioritizerError;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Cap(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<LogicError> for CliError {
    fn from(err: LogicError) -> CliError {
        match err {
            LogicError::TooManyAtoms { .. } | LogicError::CapExceeded(_) => {
                CliError::Cap(err.to_string())
            }
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<KnowledgeError> for CliError {
    fn from(err: KnowledgeError) -> CliError {
        match err {
            KnowledgeError::Logic(inner) => inner.into(),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<ExtensionError> for CliError {
    fn from(err: ExtensionError) -> CliError {
        match err {
            ExtensionError::CapExceeded(_) => CliError::Cap(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<DdgError> for CliError {
    fn from(err: DdgError) -> CliError {
        match err {
            DdgError::CapExceeded(_) => CliError::Cap(err.to_string()),
            DdgError::Logic(inner) => inner.into(),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<PrioritizerError> for CliError {
    fn from(err: PrioritizerError) -> CliError {
        match err {
            PrioritizerError::Knowledge(inner) => inner.into(),
            PrioritizerError::Extension(inner) => inner.into(),
            PrioritizerError::Dialogue(inner) => inner.into(),
            _ => CliError::Usage(err.to_string()),
        }
    }
}
