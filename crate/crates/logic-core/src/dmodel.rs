//! Four-valued models: worlds with a star involution, a ternary
//! accessibility relation for the conditional, and per-world atom valuations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};

use crate::{Atom, Formula, LogicError};

/// The four truth values. `T`/`I` are designated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Truth4 {
    /// true only
    T,
    /// both (glut)
    I,
    /// neither (gap)
    N,
    /// false only
    F,
}

impl Truth4 {
    pub fn is_designated(self) -> bool {
        matches!(self, Truth4::T | Truth4::I)
    }
}

impl fmt::Display for Truth4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth4::T => "t",
            Truth4::I => "i",
            Truth4::N => "n",
            Truth4::F => "f",
        })
    }
}

/// A star-world model.
///
/// Invariants, checked on construction: star is total and an involution;
/// tern only mentions known worlds; `holds` is total over atoms x worlds;
/// the designated world is a world.
#[derive(Clone, Debug, PartialEq)]
pub struct DModel {
    worlds: Vec<String>,
    star: BTreeMap<String, String>,
    tern: BTreeSet<(String, String, String)>,
    holds: BTreeMap<(Atom, String), bool>,
    designated: String,
}

impl DModel {
    pub fn new(
        worlds: Vec<String>,
        star: BTreeMap<String, String>,
        tern: BTreeSet<(String, String, String)>,
        holds: BTreeMap<(Atom, String), bool>,
        designated: String,
    ) -> Result<Self, LogicError> {
        if worlds.is_empty() {
            return Err(LogicError::InvalidModel("no worlds".into()));
        }
        let world_set: BTreeSet<&String> = worlds.iter().collect();
        if world_set.len() != worlds.len() {
            return Err(LogicError::InvalidModel("duplicate world id".into()));
        }
        for w in &worlds {
            let img = star
                .get(w)
                .ok_or_else(|| LogicError::InvalidModel(format!("star undefined at '{w}'")))?;
            if !world_set.contains(img) {
                return Err(LogicError::UnknownWorld(img.clone()));
            }
            let back = star.get(img).expect("image checked above");
            if back != w {
                return Err(LogicError::InvalidModel(format!(
                    "star is not an involution at '{w}'"
                )));
            }
        }
        if star.len() != worlds.len() {
            return Err(LogicError::InvalidModel("star mentions unknown worlds".into()));
        }
        for (a, b, c) in &tern {
            for w in [a, b, c] {
                if !world_set.contains(w) {
                    return Err(LogicError::UnknownWorld(w.clone()));
                }
            }
        }
        let atoms: BTreeSet<&Atom> = holds.keys().map(|(a, _)| a).collect();
        for (atom, w) in holds.keys() {
            if !world_set.contains(w) {
                return Err(LogicError::UnknownWorld(w.clone()));
            }
            let _ = atom;
        }
        for atom in &atoms {
            for w in &worlds {
                if !holds.contains_key(&((*atom).clone(), w.clone())) {
                    return Err(LogicError::InvalidModel(format!(
                        "valuation undefined for '{atom}' at '{w}'"
                    )));
                }
            }
        }
        if !world_set.contains(&designated) {
            return Err(LogicError::UnknownWorld(designated));
        }
        Ok(DModel {
            worlds,
            star,
            tern,
            holds,
            designated,
        })
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn designated_world(&self) -> &str {
        &self.designated
    }

    pub fn star_of(&self, w: &str) -> Result<&str, LogicError> {
        self.star
            .get(w)
            .map(String::as_str)
            .ok_or_else(|| LogicError::UnknownWorld(w.to_string()))
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.holds.keys().map(|(a, _)| a.clone()).collect()
    }

    /// One-sided satisfaction at a world. Negation steps through the star
    /// world; the conditional quantifies over the ternary relation.
    pub fn holds(&self, w: &str, f: &Formula) -> Result<bool, LogicError> {
        if !self.star.contains_key(w) {
            return Err(LogicError::UnknownWorld(w.to_string()));
        }
        match f {
            Formula::Atom(a) => self
                .holds
                .get(&(a.clone(), w.to_string()))
                .copied()
                .ok_or_else(|| LogicError::UnknownAtom(a.name().to_string())),
            Formula::Not(g) => Ok(!self.holds(self.star_of(w)?, g)?),
            Formula::And(l, r) => Ok(self.holds(w, l)? && self.holds(w, r)?),
            Formula::Or(l, r) => Ok(self.holds(w, l)? || self.holds(w, r)?),
            Formula::Implies(l, r) => {
                for (x, u, v) in &self.tern {
                    if x == w && self.holds(u, l)? && !self.holds(v, r)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Formula::Sequent(ps, c) => match Formula::conjunction(ps.iter().cloned()) {
                Some(conj) => self.holds(w, &Formula::implies(conj, (**c).clone())),
                None => self.holds(w, c),
            },
        }
    }

    /// Four-valued verdict at `w`, combining satisfaction at `w` and at its
    /// star world.
    pub fn eval4(&self, w: &str, f: &Formula) -> Result<Truth4, LogicError> {
        let here = self.holds(w, f)?;
        let there = self.holds(self.star_of(w)?, f)?;
        Ok(match (here, there) {
            (true, true) => Truth4::T,
            (true, false) => Truth4::I,
            (false, true) => Truth4::N,
            (false, false) => Truth4::F,
        })
    }

    pub fn to_json(&self) -> Value {
        let holds: BTreeMap<String, bool> = self
            .holds
            .iter()
            .map(|((a, w), v)| (format!("{a}@{w}"), *v))
            .collect();
        json!({
            "worlds": self.worlds,
            "star": self.star,
            "tern": self.tern.iter().map(|(a, b, c)| vec![a, b, c]).collect::<Vec<_>>(),
            "holds": holds,
            "designated": self.designated,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, LogicError> {
        let bad = |m: &str| LogicError::InvalidModel(m.to_string());
        let worlds = v["worlds"]
            .as_array()
            .ok_or_else(|| bad("'worlds' must be an array"))?
            .iter()
            .map(|w| {
                w.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("world ids must be strings"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let star = v["star"]
            .as_object()
            .ok_or_else(|| bad("'star' must be an object"))?
            .iter()
            .map(|(k, val)| {
                val.as_str()
                    .map(|s| (k.clone(), s.to_string()))
                    .ok_or_else(|| bad("star images must be strings"))
            })
            .collect::<Result<BTreeMap<_, _>, _>>()?;
        let tern = v["tern"]
            .as_array()
            .ok_or_else(|| bad("'tern' must be an array"))?
            .iter()
            .map(|t| {
                let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| {
                    bad("tern entries must be triples")
                })?;
                match (t[0].as_str(), t[1].as_str(), t[2].as_str()) {
                    (Some(a), Some(b), Some(c)) => {
                        Ok((a.to_string(), b.to_string(), c.to_string()))
                    }
                    _ => Err(bad("tern entries must be string triples")),
                }
            })
            .collect::<Result<BTreeSet<_>, _>>()?;
        let holds = v["holds"]
            .as_object()
            .ok_or_else(|| bad("'holds' must be an object"))?
            .iter()
            .map(|(k, val)| {
                let (atom, world) = k
                    .split_once('@')
                    .ok_or_else(|| bad("holds keys must look like 'atom@world'"))?;
                let b = val
                    .as_bool()
                    .ok_or_else(|| bad("holds values must be booleans"))?;
                Ok(((Atom::new(atom), world.to_string()), b))
            })
            .collect::<Result<BTreeMap<_, _>, LogicError>>()?;
        let designated = v["designated"]
            .as_str()
            .ok_or_else(|| bad("'designated' must be a string"))?
            .to_string();
        DModel::new(worlds, star, tern, holds, designated)
    }
}
