//! Backward induction over the full game tree.

use std::collections::BTreeMap;

use logic_core::Formula;

use crate::{DdgError, Move, Play, Player, RankScope, Ranks, Ruleset};

pub const MAX_SOLVE_ATOMS: usize = 6;
pub const MAX_SOLVE_DEPTH: usize = 5;
pub const MAX_SOLVE_RANK: u8 = 3;
pub const SOLVE_NODE_BUDGET: usize = 2_000_000;

/// The winner's playbook: for every reachable play where the winner is to
/// move (under arbitrary legal play by the loser), the move to make, keyed
/// by the play's transcript.
pub type Strategy = BTreeMap<String, Move>;

#[derive(Clone, Debug)]
pub struct Solution {
    pub winner: Player,
    pub strategy: Strategy,
}

struct Search {
    nodes: usize,
    memo: BTreeMap<String, Player>,
}

impl Search {
    fn winner_of(&mut self, play: &Play) -> Result<Player, DdgError> {
        let key = play.transcript_key();
        if let Some(winner) = self.memo.get(&key) {
            return Ok(*winner);
        }
        self.nodes += 1;
        if self.nodes > SOLVE_NODE_BUDGET {
            return Err(DdgError::CapExceeded(format!(
                "solve visited more than {SOLVE_NODE_BUDGET} plays"
            )));
        }
        let winner = match play.legal_moves() {
            Err(DdgError::TerminalPlay) => play.last_contentful_mover(),
            Err(other) => return Err(other),
            Ok(moves) => {
                let mover = play.to_move();
                let mut best = mover.other();
                for mv in moves {
                    let mut child = play.clone();
                    child.apply_move(mv)?;
                    if self.winner_of(&child)? == mover {
                        best = mover;
                        break;
                    }
                }
                best
            }
        };
        self.memo.insert(key, winner);
        Ok(winner)
    }

    /// Walk every play consistent with optimal play by `winner` and any
    /// legal play by the loser, recording the winner's moves. Move lists are
    /// sorted, so the recorded move is the least winning one.
    fn collect(
        &mut self,
        play: &Play,
        winner: Player,
        strategy: &mut Strategy,
    ) -> Result<(), DdgError> {
        let moves = match play.legal_moves() {
            Err(DdgError::TerminalPlay) => return Ok(()),
            Err(other) => return Err(other),
            Ok(moves) => moves,
        };
        if play.to_move() == winner {
            for mv in moves {
                let mut child = play.clone();
                child.apply_move(mv.clone())?;
                if self.winner_of(&child)? == winner {
                    strategy.insert(play.transcript_key(), mv);
                    return self.collect(&child, winner, strategy);
                }
            }
            unreachable!("the mover was computed to be winning");
        }
        for mv in moves {
            let mut child = play.clone();
            child.apply_move(mv)?;
            self.collect(&child, winner, strategy)?;
        }
        Ok(())
    }
}

/// Decide the game for a thesis. A bare atomic thesis is indefensible and
/// goes to the opponent outright; everything else is searched exhaustively.
pub fn solve(
    thesis: &Formula,
    ranks: Ranks,
    ruleset: Ruleset,
    rank_scope: RankScope,
) -> Result<Solution, DdgError> {
    let atoms = thesis.atoms().len();
    if atoms > MAX_SOLVE_ATOMS {
        return Err(DdgError::CapExceeded(format!(
            "solve handles at most {MAX_SOLVE_ATOMS} atoms, got {atoms}"
        )));
    }
    let depth = thesis.depth();
    if depth > MAX_SOLVE_DEPTH {
        return Err(DdgError::CapExceeded(format!(
            "solve handles depth at most {MAX_SOLVE_DEPTH}, got {depth}"
        )));
    }
    for rank in [ranks.opponent, ranks.proponent] {
        if !(1..=MAX_SOLVE_RANK).contains(&rank) {
            return Err(DdgError::CapExceeded(format!(
                "solve handles ranks 1..={MAX_SOLVE_RANK}, got {rank}"
            )));
        }
    }
    if thesis.is_atom() {
        return Ok(Solution {
            winner: Player::Opponent,
            strategy: Strategy::new(),
        });
    }
    let play = Play::new_game(thesis.clone(), ranks, ruleset, rank_scope);
    let mut search = Search {
        nodes: 0,
        memo: BTreeMap::new(),
    };
    let winner = search.winner_of(&play)?;
    let mut strategy = Strategy::new();
    search.collect(&play, winner, &mut strategy)?;
    Ok(Solution { winner, strategy })
}
