//! Knowledge bases of facts and rules, minimal-support argument mining, and
//! value-labelled argumentation frameworks.

mod args;
mod corpus;
mod vaf;

pub use args::{action_arguments, compute_attacks, derive_arguments, Argument, DerivationMode};
pub use corpus::{parse_corpus, Clause, KnowledgeBase};
pub use vaf::{build_vaf, Vaf};

use logic_core::LogicError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnowledgeError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("duplicate tag \"{0}\"")]
    DuplicateTag(String),
    #[error("no minimal support for \"{0}\" contains its tagged clause")]
    ActionNotDerivable(String),
    #[error("value map does not cover argument '{0}'")]
    PartialValMap(String),
    #[error("audience {0:?} is not a total order over the declared values")]
    NotTotalOrder(Vec<String>),
    #[error("no values declared")]
    EmptyValues,
    #[error(transparent)]
    Logic(#[from] LogicError),
}
