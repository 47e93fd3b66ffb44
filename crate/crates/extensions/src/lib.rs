//! Extension semantics over defeat graphs.
//!
//! An [`Af`] is a plain directed defeat graph over argument ids. Frameworks
//! with value labels are turned into one by [`project_audience`], which drops
//! every attack whose target carries a value the audience ranks strictly
//! above the attacker's. The semantics functions then compute grounded,
//! complete, preferred, and resolution-grounded extensions.

mod af;
mod audience;
mod semantics;

pub use af::{admissible, conflict_free, grounded, Af, Extension};
pub use audience::{project_audience, report_json};
pub use semantics::{complete_all, preferred_all, resolution_grounded, Semantics};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtensionError {
    #[error("audience {0:?} is not an audience of the framework")]
    UnknownAudience(Vec<String>),
    #[error("defeat endpoint {0:?} is not an argument of the framework")]
    UnknownArgument(String),
    #[error("duplicate argument id {0:?}")]
    DuplicateArgument(String),
    #[error("unknown semantics {0:?}")]
    UnknownSemantics(String),
    #[error("{0}")]
    CapExceeded(String),
}
