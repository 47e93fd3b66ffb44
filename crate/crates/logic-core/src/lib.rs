//! Propositional formulas with classical truth tables and four-valued
//! star-world models.
//!
//! The grammar is `~` (tightest), `&`, `|`, `->` (right-associative,
//! loosest), parentheses, and a top-level sequent form `p1, p2 |- c`.
//! Sequents evaluate as their conjoined premises materially implying the
//! conclusion.

mod dmodel;
mod enumerate;
mod eval;
mod formula;
mod parse;

pub use dmodel::{DModel, Truth4};
pub use enumerate::enumerate_dmodels;
pub use eval::{
    entails, equivalent, eval_classical, is_tautology, satisfiable, Assignment, MAX_TT_ATOMS,
};
pub use formula::{render_formula, Atom, Formula};
pub use parse::parse_formula;

/// Errors for parsing and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LogicError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("assignment does not cover atom '{0}'")]
    MissingAtom(String),
    #[error("formula set uses {found} atoms, above the truth-table limit of {max}")]
    TooManyAtoms { found: usize, max: usize },
    #[error("unknown world '{0}'")]
    UnknownWorld(String),
    #[error("unknown atom '{0}'")]
    UnknownAtom(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
}
