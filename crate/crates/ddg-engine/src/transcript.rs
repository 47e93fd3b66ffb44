//! Plays as JSON: thesis, ranks, ruleset, and the contentful moves. The
//! three starter positions are implied and never serialized.

use serde_json::{json, Map, Value};

use logic_core::{parse_formula, render_formula};

use crate::{DdgError, Force, Move, MoveKind, Play, RankScope, Ranks, Ruleset};

pub fn play_to_json(play: &Play) -> Value {
    let moves: Vec<Value> = play
        .moves()
        .iter()
        .enumerate()
        .skip(3)
        .map(|(position, mv)| {
            let mut entry = Map::new();
            entry.insert(
                "player".into(),
                Value::String(Play::player_at(position).as_str().into()),
            );
            entry.insert("force".into(), Value::String(mv.force.as_str().into()));
            entry.insert("kind".into(), Value::String(mv.kind.as_str().into()));
            if let Some(content) = &mv.content {
                entry.insert("content".into(), Value::String(render_formula(content)));
            }
            entry.insert("target".into(), json!(mv.target));
            Value::Object(entry)
        })
        .collect();
    json!({
        "thesis": render_formula(play.thesis()),
        "ranks": [play.ranks().opponent, play.ranks().proponent],
        "ruleset": play.ruleset().as_str(),
        "moves": moves,
    })
}

fn field<'v>(value: &'v Value, key: &str) -> Result<&'v Value, DdgError> {
    value
        .get(key)
        .ok_or_else(|| DdgError::Transcript(format!("missing field {key:?}")))
}

fn str_field<'v>(value: &'v Value, key: &str) -> Result<&'v str, DdgError> {
    field(value, key)?
        .as_str()
        .ok_or_else(|| DdgError::Transcript(format!("field {key:?} must be a string")))
}

/// Rebuild a play by replaying the listed moves under full rule checking.
/// Illegal transcripts are rejected with the violated rule.
pub fn play_from_json(value: &Value, rank_scope: RankScope) -> Result<Play, DdgError> {
    let thesis = parse_formula(str_field(value, "thesis")?)?;
    let ranks = field(value, "ranks")?
        .as_array()
        .filter(|r| r.len() == 2)
        .ok_or_else(|| DdgError::Transcript("ranks must be a two-element array".into()))?;
    let rank = |v: &Value| {
        v.as_u64()
            .filter(|r| *r <= u64::from(u8::MAX))
            .map(|r| r as u8)
            .ok_or_else(|| DdgError::Transcript("ranks must be small integers".into()))
    };
    let ranks = Ranks::new(rank(&ranks[0])?, rank(&ranks[1])?);
    let ruleset = match str_field(value, "ruleset")? {
        "classical" => Ruleset::Classical,
        "dialetheic" => Ruleset::Dialetheic,
        other => {
            return Err(DdgError::Transcript(format!("unknown ruleset {other:?}")));
        }
    };
    let moves = field(value, "moves")?
        .as_array()
        .ok_or_else(|| DdgError::Transcript("moves must be an array".into()))?;

    let mut play = Play::new_game(thesis, ranks, ruleset, rank_scope);
    for (index, entry) in moves.iter().enumerate() {
        let position = index + 3;
        let player = str_field(entry, "player")?;
        if player != Play::player_at(position).as_str() {
            return Err(DdgError::Transcript(format!(
                "move at position {position} names player {player:?}, but it is {}'s turn",
                Play::player_at(position)
            )));
        }
        let force = match str_field(entry, "force")? {
            "A" => Force::Attack,
            "D" => Force::Defence,
            other => {
                return Err(DdgError::Transcript(format!("unknown force {other:?}")));
            }
        };
        let kind = match str_field(entry, "kind")? {
            "assert" => MoveKind::Assert,
            "?andL" => MoveKind::RequestAndLeft,
            "?andR" => MoveKind::RequestAndRight,
            "?or" => MoveKind::RequestOr,
            "?premises" => MoveKind::RequestPremises,
            other => {
                return Err(DdgError::Transcript(format!("unknown kind {other:?}")));
            }
        };
        let content = match entry.get("content") {
            None | Some(Value::Null) => None,
            Some(Value::String(text)) => Some(parse_formula(text)?),
            Some(_) => {
                return Err(DdgError::Transcript(
                    "content must be a formula string".into(),
                ));
            }
        };
        let target = field(entry, "target")?
            .as_u64()
            .ok_or_else(|| DdgError::Transcript("target must be an integer".into()))?;
        play.apply_move(Move {
            kind,
            content,
            target: target as usize,
        force,
        })?;
    }
    Ok(play)
}
