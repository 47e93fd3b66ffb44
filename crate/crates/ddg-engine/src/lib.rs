//! Two-player dialogue games over formulas.
//!
//! A play opens with three fixed positions: the proponent's thesis, then one
//! rank declaration per player. From position 3 on the players strictly
//! alternate, the opponent first. Every later move either attacks an earlier
//! assertion of the other player or defends one of one's own assertions
//! against such an attack. The local rules say which utterances those are;
//! the global rules G1..G4 bound repetition and atom use, and G4 only exists
//! in the dialetheic ruleset. A player unable to move loses; the winner of a
//! finished play is the last player who contributed content.
//!
//! [`solve`] runs backward induction over the full game tree and returns the
//! winning player together with a strategy table for them.

mod moves;
mod play;
mod solve;
mod transcript;

pub use moves::{Force, Move, MoveKind, Player, RankScope, Ranks, Ruleset};
pub use play::Play;
pub use solve::{
    solve, Solution, Strategy, MAX_SOLVE_ATOMS, MAX_SOLVE_DEPTH, MAX_SOLVE_RANK,
    SOLVE_NODE_BUDGET,
};
pub use transcript::{play_from_json, play_to_json};

use std::fmt;

use logic_core::LogicError;
use thiserror::Error;

/// Which rule a rejected move violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleId {
    /// not an attack or defence the local rules offer at this point
    Local,
    /// the mover's rank budget for that target is spent
    G1,
    /// the proponent may not ground an atom the opponent never asserted
    G2,
    /// verbatim repetition by the same player
    G3,
    /// conjunct defences are shielded from the opponent
    G4,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RuleId::Local => "L",
            RuleId::G1 => "G1",
            RuleId::G2 => "G2",
            RuleId::G3 => "G3",
            RuleId::G4 => "G4",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error)]
pub enum DdgError {
    #[error("illegal move ({rule}): {reason}")]
    IllegalMove { rule: RuleId, reason: String },
    #[error("the play is terminal; no legal moves remain")]
    TerminalPlay,
    #[error("the play is not terminal; legal moves remain")]
    NotTerminal,
    #[error("{0}")]
    CapExceeded(String),
    #[error("bad transcript: {0}")]
    Transcript(String),
    #[error(transparent)]
    Logic(#[from] LogicError),
}
