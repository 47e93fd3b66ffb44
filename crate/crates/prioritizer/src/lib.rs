//! Ranking candidate actions by how they fare across simulated dialogues.
//!
//! Tagged clauses in a corpus are the candidate actions. Each simulated
//! outcome samples a subset of them, pits the sampled arguments against each
//! other, and ranks the sample by how often the chosen semantics accepts
//! each argument; unsampled actions trail in name order. The per-position
//! counts accumulate into a histogram, and [`prioritise`] folds that into
//! one final ordering.

mod corpus;
mod histogram;
mod outcomes;
mod rank;

pub use corpus::{Action, ActionCorpus};
pub use histogram::{fnv1a64, Histogram};
pub use outcomes::{run_dialogues, OutcomeRecord, RunReport};
pub use rank::{prioritise, Prioritisation, Priority};

use ddg_engine::DdgError;
use extensions::ExtensionError;
use knowledge::KnowledgeError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PrioritizerError {
    #[error("the corpus has no tagged actions")]
    EmptyCorpus,
    #[error("sampling needs at least two actions, got {0}")]
    TooFewActions(usize),
    #[error(transparent)]
    Knowledge(#[from] KnowledgeError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Dialogue(#[from] DdgError),
}
