//! Play state, move legality, and the endgame rule.

use logic_core::{render_formula, Formula};

use crate::{DdgError, Force, Move, MoveKind, Player, RankScope, Ranks, RuleId, Ruleset};

/// A (possibly unfinished) play. Positions 0..=2 are the starters: the
/// thesis and the two rank declarations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Play {
    ruleset: Ruleset,
    rank_scope: RankScope,
    ranks: Ranks,
    thesis: Formula,
    moves: Vec<Move>,
}

impl Play {
    pub fn new_game(
        thesis: Formula,
        ranks: Ranks,
        ruleset: Ruleset,
        rank_scope: RankScope,
    ) -> Play {
        let moves = vec![
            Move::assert(thesis.clone(), 0, Force::Defence),
            Move {
                kind: MoveKind::RankDeclaration(ranks.opponent),
                content: None,
                target: 1,
                force: Force::Defence,
            },
            Move {
                kind: MoveKind::RankDeclaration(ranks.proponent),
                content: None,
                target: 2,
                force: Force::Defence,
            },
        ];
        Play {
            ruleset,
            rank_scope,
            ranks,
            thesis,
            moves,
        }
    }

    pub fn thesis(&self) -> &Formula {
        &self.thesis
    }

    pub fn ranks(&self) -> Ranks {
        self.ranks
    }

    pub fn ruleset(&self) -> Ruleset {
        self.ruleset
    }

    pub fn rank_scope(&self) -> RankScope {
        self.rank_scope
    }

    /// Full history including the starters.
    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// Even positions belong to the proponent, odd ones to the opponent.
    pub fn player_at(position: usize) -> Player {
        if position % 2 == 0 {
            Player::Proponent
        } else {
            Player::Opponent
        }
    }

    pub fn to_move(&self) -> Player {
        Self::player_at(self.moves.len())
    }

    /// The formula a position asserts, if any. Plain requests and rank
    /// declarations assert nothing; a premise request asserts the premise
    /// conjunction it carries.
    fn asserted_at(&self, position: usize) -> Option<&Formula> {
        match self.moves[position].kind {
            MoveKind::Assert | MoveKind::RequestPremises => self.moves[position].content.as_ref(),
            _ => None,
        }
    }

    fn attack_moves_on(formula: &Formula, position: usize) -> Vec<Move> {
        match formula {
            Formula::Atom(_) => vec![],
            Formula::And(_, _) => vec![
                Move::request(MoveKind::RequestAndLeft, position),
                Move::request(MoveKind::RequestAndRight, position),
            ],
            Formula::Or(_, _) => vec![Move::request(MoveKind::RequestOr, position)],
            Formula::Not(inner) => vec![Move::assert((**inner).clone(), position, Force::Attack)],
            Formula::Implies(antecedent, _) => {
                vec![Move::assert((**antecedent).clone(), position, Force::Attack)]
            }
            Formula::Sequent(premises, _) => vec![Move {
                kind: MoveKind::RequestPremises,
                content: Formula::conjunction(premises.clone()),
                target: position,
                force: Force::Attack,
            }],
        }
    }

    fn defence_moves(attacked: &Formula, attack: &Move, attack_pos: usize) -> Vec<Move> {
        match (attacked, attack.kind) {
            (Formula::And(left, _), MoveKind::RequestAndLeft) => {
                vec![Move::assert((**left).clone(), attack_pos, Force::Defence)]
            }
            (Formula::And(_, right), MoveKind::RequestAndRight) => {
                vec![Move::assert((**right).clone(), attack_pos, Force::Defence)]
            }
            (Formula::Or(left, right), MoveKind::RequestOr) => vec![
                Move::assert((**left).clone(), attack_pos, Force::Defence),
                Move::assert((**right).clone(), attack_pos, Force::Defence),
            ],
            (Formula::Implies(_, consequent), MoveKind::Assert) => {
                vec![Move::assert((**consequent).clone(), attack_pos, Force::Defence)]
            }
            (Formula::Sequent(_, conclusion), MoveKind::RequestPremises) => {
                vec![Move::assert((**conclusion).clone(), attack_pos, Force::Defence)]
            }
            // assertions against a negation admit no defence
            _ => vec![],
        }
    }

    /// Everything the local rules offer the mover, before the global rules.
    /// An utterance legal as both attack and defence appears once, as the
    /// defence.
    pub fn candidate_moves(&self) -> Vec<Move> {
        let mover = self.to_move();
        let mut attacks: Vec<Move> = Vec::new();
        let mut defences: Vec<Move> = Vec::new();
        for (position, mv) in self.moves.iter().enumerate() {
            if Self::player_at(position) == mover {
                continue;
            }
            if let Some(formula) = self.asserted_at(position) {
                attacks.extend(Self::attack_moves_on(formula, position));
            }
            // their attack on one of my assertions invites a defence
            if position >= 3 && mv.force == Force::Attack {
                let attacked_pos = mv.target;
                if Self::player_at(attacked_pos) == mover {
                    if let Some(attacked) = self.asserted_at(attacked_pos) {
                        defences.extend(Self::defence_moves(attacked, mv, position));
                    }
                }
            }
        }
        attacks.retain(|a| {
            !defences
                .iter()
                .any(|d| d.kind == a.kind && d.content == a.content && d.target == a.target)
        });
        let mut all = defences;
        all.extend(attacks);
        all.sort();
        all.dedup();
        all
    }

    /// Validate one move. The local shape is checked first, then G1..G4, and
    /// the first violated rule is reported.
    pub fn check_move(&self, mv: &Move) -> Result<(), DdgError> {
        let mover = self.to_move();
        let candidates = self.candidate_moves();
        if !candidates.contains(mv) {
            // distinguish a suppressed attack twin from a malformed move
            let twin = Move {
                force: Force::Defence,
                ..mv.clone()
            };
            if mv.force == Force::Attack && candidates.contains(&twin) {
                return Err(DdgError::IllegalMove {
                    rule: RuleId::G3,
                    reason: format!("{} canonicalizes to a defence", mv.token()),
                });
            }
            return Err(DdgError::IllegalMove {
                rule: RuleId::Local,
                reason: format!("{} is not an available attack or defence", mv.token()),
            });
        }

        // G1: rank budget
        let spent = self
            .moves
            .iter()
            .enumerate()
            .skip(3)
            .filter(|(p, prior)| {
                Self::player_at(*p) == mover
                    && match self.rank_scope {
                        RankScope::PerTarget => prior.target == mv.target,
                        RankScope::GlobalBudget => true,
                    }
            })
            .count();
        if spent >= usize::from(self.ranks.of(mover)) {
            return Err(DdgError::IllegalMove {
                rule: RuleId::G1,
                reason: format!("rank {} spent for {}", self.ranks.of(mover), mv.token()),
            });
        }

        // G2: proponent atoms must already stand asserted by the opponent
        if mover == Player::Proponent && mv.kind == MoveKind::Assert {
            let needs_ground = match self.ruleset {
                Ruleset::Classical => true,
                Ruleset::Dialetheic => mv.force == Force::Attack,
            };
            if needs_ground {
                if let Some(content @ Formula::Atom(_)) = &mv.content {
                    let grounded = self.moves.iter().enumerate().any(|(p, _)| {
                        Self::player_at(p) == Player::Opponent
                            && self.asserted_at(p) == Some(content)
                    });
                    if !grounded {
                        return Err(DdgError::IllegalMove {
                            rule: RuleId::G2,
                            reason: format!(
                                "the opponent has not asserted {}",
                                render_formula(content)
                            ),
                        });
                    }
                }
            }
        }

        // G3: no verbatim repetition, whatever the force
        let repeated = self.moves.iter().enumerate().any(|(p, prior)| {
            Self::player_at(p) == mover
                && prior.kind == mv.kind
                && prior.content == mv.content
                && prior.target == mv.target
        });
        if repeated {
            return Err(DdgError::IllegalMove {
                rule: RuleId::G3,
                reason: format!("{} repeats an earlier move", mv.token()),
            });
        }

        // G4: conjunct defences are safe from the opponent (dialetheic only)
        if self.ruleset == Ruleset::Dialetheic
            && mover == Player::Opponent
            && mv.force == Force::Attack
        {
            let targeted = &self.moves[mv.target];
            if Self::player_at(mv.target) == Player::Proponent
                && targeted.force == Force::Defence
                && matches!(
                    self.moves[targeted.target].kind,
                    MoveKind::RequestAndLeft | MoveKind::RequestAndRight
                )
            {
                return Err(DdgError::IllegalMove {
                    rule: RuleId::G4,
                    reason: format!("{} targets a conjunct defence", mv.token()),
                });
            }
        }

        Ok(())
    }

    pub fn apply_move(&mut self, mv: Move) -> Result<(), DdgError> {
        self.check_move(&mv)?;
        self.moves.push(mv);
        Ok(())
    }

    /// All moves the mover may actually play, sorted. Errors when none are
    /// left, which is what ends a play.
    pub fn legal_moves(&self) -> Result<Vec<Move>, DdgError> {
        let legal: Vec<Move> = self
            .candidate_moves()
            .into_iter()
            .filter(|mv| self.check_move(mv).is_ok())
            .collect();
        if legal.is_empty() {
            Err(DdgError::TerminalPlay)
        } else {
            Ok(legal)
        }
    }

    pub(crate) fn last_contentful_mover(&self) -> Player {
        let position = self
            .moves
            .iter()
            .rposition(|mv| !matches!(mv.kind, MoveKind::RankDeclaration(_)))
            .expect("a play always holds its thesis");
        Self::player_at(position)
    }

    /// The winner of a finished play: the last player who contributed
    /// content. Errors if moves remain.
    pub fn terminal_winner(&self) -> Result<Player, DdgError> {
        match self.legal_moves() {
            Err(DdgError::TerminalPlay) => Ok(self.last_contentful_mover()),
            Ok(_) => Err(DdgError::NotTerminal),
            Err(other) => Err(other),
        }
    }

    /// Canonical rendering of the contentful phase, used as a strategy key.
    pub fn transcript_key(&self) -> String {
        self.moves
            .iter()
            .enumerate()
            .skip(3)
            .map(|(p, mv)| {
                format!(
                    "{}{} {}",
                    Self::player_at(p).as_str(),
                    mv.force.as_str(),
                    mv.token()
                )
            })
            .collect::<Vec<_>>()
            .join(" ; ")
    }
}

#[cfg(test)]
mod tests {
    use logic_core::parse_formula;

    use super::*;

    fn game(thesis: &str, ranks: (u8, u8), ruleset: Ruleset) -> Play {
        Play::new_game(
            parse_formula(thesis).unwrap(),
            Ranks::new(ranks.0, ranks.1),
            ruleset,
            RankScope::PerTarget,
        )
    }

    fn assert_move(content: &str, target: usize, force: Force) -> Move {
        Move::assert(parse_formula(content).unwrap(), target, force)
    }

    #[test]
    fn starters_are_laid_out_and_opponent_opens() {
        let play = game("a & b", (1, 2), Ruleset::Classical);
        assert_eq!(play.moves().len(), 3);
        assert_eq!(play.to_move(), Player::Opponent);
        assert_eq!(
            play.moves()[1].kind,
            MoveKind::RankDeclaration(1),
            "the opponent's rank sits at position 1"
        );
    }

    #[test]
    fn conjunction_invites_both_conjunct_requests() {
        let play = game("a & b", (1, 2), Ruleset::Classical);
        assert_eq!(
            play.legal_moves().unwrap(),
            vec![
                Move::request(MoveKind::RequestAndLeft, 0),
                Move::request(MoveKind::RequestAndRight, 0),
            ]
        );
    }

    #[test]
    fn negation_attack_has_no_defence() {
        let mut play = game("~(a & b)", (1, 2), Ruleset::Classical);
        play.apply_move(assert_move("a & b", 0, Force::Attack)).unwrap();
        // the proponent can only attack the asserted conjunction
        let legal = play.legal_moves().unwrap();
        assert!(legal.iter().all(|mv| mv.force == Force::Attack));
        assert_eq!(
            legal,
            vec![
                Move::request(MoveKind::RequestAndLeft, 3),
                Move::request(MoveKind::RequestAndRight, 3),
            ]
        );
    }

    #[test]
    fn sequent_attack_carries_the_premise_conjunction() {
        let play = game("a, a -> y |- y", (1, 2), Ruleset::Classical);
        let legal = play.legal_moves().unwrap();
        assert_eq!(legal.len(), 1);
        assert_eq!(legal[0].kind, MoveKind::RequestPremises);
        assert_eq!(
            legal[0].content,
            Some(parse_formula("a & (a -> y)").unwrap())
        );

        // an empty premise list yields a bare, unattackable request
        let play = game("|- a | ~a", (1, 2), Ruleset::Classical);
        let legal = play.legal_moves().unwrap();
        assert_eq!(legal.len(), 1);
        assert_eq!(legal[0].content, None);
    }

    #[test]
    fn premise_conjunction_is_itself_attackable() {
        let mut play = game("a, a -> y |- y", (1, 2), Ruleset::Dialetheic);
        let request = play.legal_moves().unwrap().remove(0);
        play.apply_move(request).unwrap();
        let legal = play.legal_moves().unwrap();
        // defend with the conclusion, or probe the premise conjunction
        assert!(legal.contains(&assert_move("y", 3, Force::Defence)));
        assert!(legal.contains(&Move::request(MoveKind::RequestAndLeft, 3)));
        assert!(legal.contains(&Move::request(MoveKind::RequestAndRight, 3)));
    }

    #[test]
    fn g1_limits_moves_per_target() {
        let mut play = game("a & b", (1, 2), Ruleset::Classical);
        play.apply_move(Move::request(MoveKind::RequestAndLeft, 0))
            .unwrap();
        // the proponent cannot answer (G2) and has nothing to attack
        assert!(matches!(play.legal_moves(), Err(DdgError::TerminalPlay)));

        let mut play = game("a & b", (3, 2), Ruleset::Dialetheic);
        play.apply_move(Move::request(MoveKind::RequestAndLeft, 0))
            .unwrap();
        play.apply_move(assert_move("a", 3, Force::Defence)).unwrap();
        // rank 3 leaves the opponent a second probe of the thesis
        play.apply_move(Move::request(MoveKind::RequestAndRight, 0))
            .unwrap();
        play.apply_move(assert_move("b", 5, Force::Defence)).unwrap();
        let err = play
            .check_move(&Move::request(MoveKind::RequestAndLeft, 0))
            .unwrap_err();
        assert!(
            matches!(err, DdgError::IllegalMove { rule: RuleId::G3, .. }),
            "a third probe repeats before rank runs out: {err}"
        );
    }

    #[test]
    fn g1_rank_one_blocks_the_second_probe() {
        let mut play = game("a & b", (1, 2), Ruleset::Dialetheic);
        play.apply_move(Move::request(MoveKind::RequestAndLeft, 0))
            .unwrap();
        play.apply_move(assert_move("a", 3, Force::Defence)).unwrap();
        let err = play
            .check_move(&Move::request(MoveKind::RequestAndRight, 0))
            .unwrap_err();
        assert!(matches!(
            err,
            DdgError::IllegalMove { rule: RuleId::G1, .. }
        ));
    }

    #[test]
    fn g2_classical_needs_the_opponent_to_ground_atoms() {
        let mut play = game("(a & b) -> a", (1, 2), Ruleset::Classical);
        play.apply_move(assert_move("a & b", 0, Force::Attack)).unwrap();
        let err = play
            .check_move(&assert_move("a", 3, Force::Defence))
            .unwrap_err();
        assert!(matches!(
            err,
            DdgError::IllegalMove { rule: RuleId::G2, .. }
        ));
        play.apply_move(Move::request(MoveKind::RequestAndLeft, 3))
            .unwrap();
        play.apply_move(assert_move("a", 4, Force::Defence)).unwrap();
        // with a asserted by the opponent the defence goes through
        play.apply_move(assert_move("a", 3, Force::Defence)).unwrap();
        assert_eq!(play.terminal_winner().unwrap(), Player::Proponent);
    }

    #[test]
    fn g2_dialetheic_only_constrains_attacks() {
        let mut play = game("(a & b) -> a", (1, 2), Ruleset::Dialetheic);
        play.apply_move(assert_move("a & b", 0, Force::Attack)).unwrap();
        play.apply_move(assert_move("a", 3, Force::Defence)).unwrap();
        assert_eq!(play.terminal_winner().unwrap(), Player::Proponent);
    }

    #[test]
    fn g3_blocks_verbatim_repetition() {
        let mut play = game("a | ~a", (2, 2), Ruleset::Classical);
        play.apply_move(Move::request(MoveKind::RequestOr, 0)).unwrap();
        play.apply_move(assert_move("~a", 3, Force::Defence)).unwrap();
        play.apply_move(assert_move("a", 4, Force::Attack)).unwrap();
        play.apply_move(assert_move("a", 3, Force::Defence)).unwrap();
        let err = play
            .check_move(&assert_move("a", 4, Force::Attack))
            .unwrap_err();
        assert!(matches!(
            err,
            DdgError::IllegalMove { rule: RuleId::G3, .. }
        ));
        assert_eq!(play.terminal_winner().unwrap(), Player::Proponent);
    }

    #[test]
    fn g4_shields_conjunct_defences_in_the_dialetheic_game() {
        let mut play = game("a & ~a", (1, 2), Ruleset::Dialetheic);
        play.apply_move(Move::request(MoveKind::RequestAndRight, 0))
            .unwrap();
        play.apply_move(assert_move("~a", 3, Force::Defence)).unwrap();
        let err = play
            .check_move(&assert_move("a", 4, Force::Attack))
            .unwrap_err();
        assert!(matches!(
            err,
            DdgError::IllegalMove { rule: RuleId::G4, .. }
        ));
        assert_eq!(play.terminal_winner().unwrap(), Player::Proponent);

        // the classical game has no such shield
        let mut play = game("a & ~a", (1, 2), Ruleset::Classical);
        play.apply_move(Move::request(MoveKind::RequestAndRight, 0))
            .unwrap();
        play.apply_move(assert_move("~a", 3, Force::Defence)).unwrap();
        play.apply_move(assert_move("a", 4, Force::Attack)).unwrap();
        assert_eq!(play.terminal_winner().unwrap(), Player::Opponent);
    }

    #[test]
    fn ambiguous_utterances_canonicalize_to_defences() {
        let mut play = game("~a -> a", (1, 2), Ruleset::Dialetheic);
        play.apply_move(assert_move("~a", 0, Force::Attack)).unwrap();
        // asserting a answers the attack and would also counter ~a; only the
        // defence reading is offered
        let legal = play.legal_moves().unwrap();
        assert_eq!(legal, vec![assert_move("a", 3, Force::Defence)]);
        let err = play
            .check_move(&assert_move("a", 3, Force::Attack))
            .unwrap_err();
        assert!(matches!(
            err,
            DdgError::IllegalMove { rule: RuleId::G3, .. }
        ));
    }

    #[test]
    fn terminal_winner_demands_a_finished_play() {
        let play = game("a & b", (1, 2), Ruleset::Classical);
        assert!(matches!(play.terminal_winner(), Err(DdgError::NotTerminal)));

        let play = game("a", (1, 2), Ruleset::Classical);
        // an atomic thesis leaves the opponent without an opening move
        assert!(matches!(play.legal_moves(), Err(DdgError::TerminalPlay)));
        assert_eq!(play.terminal_winner().unwrap(), Player::Proponent);
    }

    #[test]
    fn transcript_keys_are_stable() {
        let mut play = game("a & ~a", (1, 2), Ruleset::Dialetheic);
        play.apply_move(Move::request(MoveKind::RequestAndRight, 0))
            .unwrap();
        play.apply_move(assert_move("~a", 3, Force::Defence)).unwrap();
        assert_eq!(play.transcript_key(), "OA ?andR@0 ; PD !~a@3");
    }
}
