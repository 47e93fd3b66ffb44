//! Classical evaluation and truth-table queries.

use std::collections::{BTreeMap, BTreeSet};

use crate::{Atom, Formula, LogicError};

/// Truth-table queries refuse formulas with more atoms than this.
pub const MAX_TT_ATOMS: usize = 20;

/// A (partial) map from atoms to truth values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<Atom, bool>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, atom: Atom, value: bool) {
        self.0.insert(atom, value);
    }

    pub fn get(&self, atom: &Atom) -> Option<bool> {
        self.0.get(atom).copied()
    }
}

impl FromIterator<(Atom, bool)> for Assignment {
    fn from_iter<T: IntoIterator<Item = (Atom, bool)>>(iter: T) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

/// Evaluate under `v`; every atom of `f` must be covered.
pub fn eval_classical(f: &Formula, v: &Assignment) -> Result<bool, LogicError> {
    match f {
        Formula::Atom(a) => v
            .get(a)
            .ok_or_else(|| LogicError::MissingAtom(a.name().to_string())),
        Formula::Not(g) => Ok(!eval_classical(g, v)?),
        Formula::And(l, r) => Ok(eval_classical(l, v)? && eval_classical(r, v)?),
        Formula::Or(l, r) => Ok(eval_classical(l, v)? || eval_classical(r, v)?),
        Formula::Implies(l, r) => Ok(!eval_classical(l, v)? || eval_classical(r, v)?),
        Formula::Sequent(ps, c) => {
            let mut all = true;
            for p in ps {
                all &= eval_classical(p, v)?;
            }
            Ok(!all || eval_classical(c, v)?)
        }
    }
}

fn check_atom_budget(atoms: &BTreeSet<Atom>) -> Result<(), LogicError> {
    if atoms.len() > MAX_TT_ATOMS {
        return Err(LogicError::TooManyAtoms {
            found: atoms.len(),
            max: MAX_TT_ATOMS,
        });
    }
    Ok(())
}

fn for_each_assignment(
    atoms: &BTreeSet<Atom>,
    mut visit: impl FnMut(&Assignment) -> Result<bool, LogicError>,
) -> Result<bool, LogicError> {
    check_atom_budget(atoms)?;
    let names: Vec<&Atom> = atoms.iter().collect();
    for mask in 0u32..(1u32 << names.len()) {
        let v: Assignment = names
            .iter()
            .enumerate()
            .map(|(i, a)| ((*a).clone(), mask >> i & 1 == 1))
            .collect();
        if !visit(&v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when `f` holds under every assignment.
pub fn is_tautology(f: &Formula) -> Result<bool, LogicError> {
    for_each_assignment(&f.atoms(), |v| eval_classical(f, v))
}

/// True when `f` holds under some assignment.
pub fn satisfiable(f: &Formula) -> Result<bool, LogicError> {
    Ok(!for_each_assignment(&f.atoms(), |v| {
        Ok(!eval_classical(f, v)?)
    })?)
}

/// Classical equivalence over the union of both atom sets.
pub fn equivalent(f: &Formula, g: &Formula) -> Result<bool, LogicError> {
    let mut atoms = f.atoms();
    atoms.extend(g.atoms());
    for_each_assignment(&atoms, |v| {
        Ok(eval_classical(f, v)? == eval_classical(g, v)?)
    })
}

/// Classical consequence: every model of all `premises` satisfies `claim`.
pub fn entails(premises: &[Formula], claim: &Formula) -> Result<bool, LogicError> {
    let mut atoms = claim.atoms();
    for p in premises {
        atoms.extend(p.atoms());
    }
    for_each_assignment(&atoms, |v| {
        for p in premises {
            if !eval_classical(p, v)? {
                return Ok(true);
            }
        }
        eval_classical(claim, v)
    })
}
