//! Players, forces, and the move vocabulary.

use std::fmt;

use logic_core::{render_formula, Formula};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Player {
    Proponent,
    Opponent,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Proponent => Player::Opponent,
            Player::Opponent => Player::Proponent,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Player::Proponent => "P",
            Player::Opponent => "O",
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether a move attacks an assertion or defends one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Force {
    Attack,
    Defence,
}

impl Force {
    pub fn as_str(self) -> &'static str {
        match self {
            Force::Attack => "A",
            Force::Defence => "D",
        }
    }
}

/// The utterance shapes. Rank declarations only occur at the two fixed
/// starter positions and carry the declared rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    Assert,
    RequestAndLeft,
    RequestAndRight,
    RequestOr,
    RequestPremises,
    RankDeclaration(u8),
}

impl MoveKind {
    /// Wire name; rank declarations never appear on the wire.
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::Assert => "assert",
            MoveKind::RequestAndLeft => "?andL",
            MoveKind::RequestAndRight => "?andR",
            MoveKind::RequestOr => "?or",
            MoveKind::RequestPremises => "?premises",
            MoveKind::RankDeclaration(_) => "rank",
        }
    }
}

/// One move. `target` is the position the move attacks or, for a defence,
/// the position of the attack being answered. The field order gives the
/// derived ordering used to pick between equally good moves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub content: Option<Formula>,
    pub target: usize,
    pub force: Force,
}

impl Move {
    pub fn assert(content: Formula, target: usize, force: Force) -> Move {
        Move {
            kind: MoveKind::Assert,
            content: Some(content),
            target,
            force,
        }
    }

    pub fn request(kind: MoveKind, target: usize) -> Move {
        Move {
            kind,
            content: None,
            target,
            force: Force::Attack,
        }
    }

    /// Compact rendering, e.g. `!a & b@0` or `?andL@3`.
    pub fn token(&self) -> String {
        let head = match (&self.kind, &self.content) {
            (MoveKind::Assert, Some(f)) => format!("!{}", render_formula(f)),
            (MoveKind::RankDeclaration(r), _) => format!("rank {r}"),
            (kind, Some(f)) => format!("{} {}", kind.as_str(), render_formula(f)),
            (kind, None) => kind.as_str().to_string(),
        };
        format!("{head}@{}", self.target)
    }
}

/// Per-player repetition ranks, declared at positions 1 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ranks {
    pub opponent: u8,
    pub proponent: u8,
}

impl Ranks {
    pub fn new(opponent: u8, proponent: u8) -> Ranks {
        Ranks {
            opponent,
            proponent,
        }
    }

    pub fn of(self, player: Player) -> u8 {
        match player {
            Player::Proponent => self.proponent,
            Player::Opponent => self.opponent,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ruleset {
    Classical,
    Dialetheic,
}

impl Ruleset {
    pub fn as_str(self) -> &'static str {
        match self {
            Ruleset::Classical => "classical",
            Ruleset::Dialetheic => "dialetheic",
        }
    }
}

/// How rank budgets are counted: per attacked-or-defended position, or as
/// one global budget per player.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RankScope {
    #[default]
    PerTarget,
    GlobalBudget,
}
