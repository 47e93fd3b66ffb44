//! Turning tagged clauses into ready-to-sample actions.

use std::collections::BTreeSet;

use ddg_engine::{solve, Player, RankScope, Ranks, Ruleset};
use knowledge::{action_arguments, compute_attacks, Argument, DerivationMode, KnowledgeBase};
use logic_core::Formula;

use crate::PrioritizerError;

/// One candidate action: a tagged clause, its claim, the derived argument
/// standing for it, and how its thesis fares as a dialogue.
#[derive(Clone, Debug)]
pub struct Action {
    pub tag: String,
    pub claim: Formula,
    pub argument: Argument,
    pub proponent_wins: bool,
}

/// All actions of a corpus plus the attack relation over their arguments,
/// keyed by tag. Built once; outcomes restrict it to their sample.
#[derive(Clone, Debug)]
pub struct ActionCorpus {
    actions: Vec<Action>,
    attacks: BTreeSet<(String, String)>,
}

impl ActionCorpus {
    /// Derive one argument per tagged clause: the smallest minimal support
    /// for the clause's head that includes the tagged clause itself. The
    /// argument is re-labelled with the tag. Thesis outcomes are solved
    /// under the dialetheic ruleset at ranks (1, 2).
    pub fn from_kb(kb: &KnowledgeBase) -> Result<ActionCorpus, PrioritizerError> {
        let derived = action_arguments(kb, DerivationMode::Classical)?;
        if derived.is_empty() {
            return Err(PrioritizerError::EmptyCorpus);
        }
        if derived.len() < 2 {
            return Err(PrioritizerError::TooFewActions(derived.len()));
        }
        let mut actions = Vec::with_capacity(derived.len());
        for argument in derived {
            let solution = solve(
                &argument.thesis(),
                Ranks::new(1, 2),
                Ruleset::Dialetheic,
                RankScope::PerTarget,
            )?;
            actions.push(Action {
                tag: argument.id.clone(),
                claim: argument.claim.clone(),
                argument,
                proponent_wins: solution.winner == Player::Proponent,
            });
        }
        let arguments: Vec<Argument> = actions.iter().map(|a| a.argument.clone()).collect();
        let attacks = compute_attacks(&arguments)?;
        Ok(ActionCorpus { actions, attacks })
    }

    pub fn actions(&self) -> &[Action] {
        &self.actions
    }

    /// Attack relation over all action arguments, by tag.
    pub fn attacks(&self) -> &BTreeSet<(String, String)> {
        &self.attacks
    }

    pub fn tags(&self) -> Vec<String> {
        self.actions.iter().map(|a| a.tag.clone()).collect()
    }
}
