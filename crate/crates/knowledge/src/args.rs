//! Minimal-support arguments and the attack relation.

use std::collections::BTreeSet;

use logic_core::{equivalent, eval_classical, Assignment, Atom, Formula, LogicError, MAX_TT_ATOMS};

use crate::{KnowledgeBase, KnowledgeError};

/// Whether argument mining tolerates unsatisfiable supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivationMode {
    /// Supports must be satisfiable.
    Classical,
    /// Unsatisfiable supports are kept, so explosive arguments survive.
    Dialetheic,
}

/// A claim grounded in a subset-minimal entailing support drawn from a
/// knowledge base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Argument {
    pub id: String,
    pub support: Vec<Formula>,
    pub claim: Formula,
    /// Tag of the first tagged support member, when there is one.
    pub premise_tag: Option<String>,
}

impl Argument {
    /// The argument as a sequent thesis: support |- claim.
    pub fn thesis(&self) -> Formula {
        Formula::sequent(self.support.clone(), self.claim.clone())
    }
}

/// Rows of a truth table packed into words, one bit per assignment.
fn truth_bits(
    f: &Formula,
    atoms: &[&Atom],
    rows: usize,
    words: usize,
) -> Result<Vec<u64>, LogicError> {
    let mut bits = vec![0u64; words];
    for row in 0..rows {
        let v: Assignment = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| ((*a).clone(), row >> i & 1 == 1))
            .collect();
        if eval_classical(f, &v)? {
            bits[row / 64] |= 1 << (row % 64);
        }
    }
    Ok(bits)
}

/// All arguments for each claim: subset-minimal supports from the corpus
/// formulas that classically entail the claim. Ids are assigned `A1..An` in
/// a fixed order (claims in input order, supports by size then position).
///
/// The subset sweep works on truth tables over the corpus-wide atom set,
/// computed once per formula, so each candidate support costs a handful of
/// word operations.
pub fn derive_arguments(
    kb: &KnowledgeBase,
    claims: &[Formula],
    mode: DerivationMode,
) -> Result<Vec<Argument>, KnowledgeError> {
    let formulas = kb.as_formulas();
    let n = formulas.len();
    assert!(n < 63, "corpus too large for subset search");

    let mut atoms: BTreeSet<Atom> = BTreeSet::new();
    for f in formulas.iter().chain(claims) {
        atoms.extend(f.atoms());
    }
    if atoms.len() > MAX_TT_ATOMS {
        return Err(LogicError::TooManyAtoms {
            found: atoms.len(),
            max: MAX_TT_ATOMS,
        }
        .into());
    }
    let atoms: Vec<&Atom> = atoms.iter().collect();
    let rows = 1usize << atoms.len();
    let words = rows.div_ceil(64);
    let all_rows = {
        let mut v = vec![u64::MAX; words];
        if rows % 64 != 0 {
            v[words - 1] = (1u64 << (rows % 64)) - 1;
        }
        v
    };
    let formula_bits = formulas
        .iter()
        .map(|f| truth_bits(f, &atoms, rows, words))
        .collect::<Result<Vec<_>, _>>()?;

    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));

    let mut out = Vec::new();
    for claim in claims {
        let claim_bits = truth_bits(claim, &atoms, rows, words)?;
        let mut found: Vec<u64> = Vec::new();
        for &mask in &masks {
            if found.iter().any(|f| mask & f == *f) {
                continue;
            }
            let mut meet = all_rows.clone();
            for i in (0..n).filter(|i| mask >> i & 1 == 1) {
                for (m, w) in meet.iter_mut().zip(&formula_bits[i]) {
                    *m &= w;
                }
            }
            if mode == DerivationMode::Classical && meet.iter().all(|w| *w == 0) {
                // supersets cannot become satisfiable again
                found.push(mask);
                continue;
            }
            if meet.iter().zip(&claim_bits).all(|(m, c)| m & !c == 0) {
                found.push(mask);
                let support: Vec<Formula> = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| formulas[i].clone())
                    .collect();
                out.push(Argument {
                    id: String::new(),
                    premise_tag: support
                        .iter()
                        .find_map(|f| kb.tag_of(f))
                        .map(str::to_string),
                    support,
                    claim: claim.clone(),
                });
            }
        }
    }
    for (i, arg) in out.iter_mut().enumerate() {
        arg.id = format!("A{}", i + 1);
    }
    Ok(out)
}

/// One argument per tagged clause: the smallest minimal support for the
/// clause's head that contains the tagged clause itself, re-labelled with
/// the tag. This is the argument that "stands for" the action downstream.
pub fn action_arguments(
    kb: &KnowledgeBase,
    mode: DerivationMode,
) -> Result<Vec<Argument>, KnowledgeError> {
    let mut out = Vec::new();
    for (tag, clause_formula, claim) in kb.actions() {
        let derived = derive_arguments(kb, &[claim], mode)?;
        let mut argument = derived
            .into_iter()
            .find(|arg| arg.support.contains(&clause_formula))
            .ok_or_else(|| KnowledgeError::ActionNotDerivable(tag.clone()))?;
        argument.id = tag.clone();
        argument.premise_tag = Some(tag);
        out.push(argument);
    }
    Ok(out)
}

/// Ordered attack pairs `(attacker, attacked)`: the attacker's claim is
/// classically equivalent to the negation of a support member, or to the
/// negation of the whole support conjunction, of the attacked argument.
pub fn compute_attacks(
    args: &[Argument],
) -> Result<BTreeSet<(String, String)>, KnowledgeError> {
    let mut attacks = BTreeSet::new();
    for x in args {
        for y in args {
            if x.id == y.id {
                continue;
            }
            let mut hit = false;
            for member in &y.support {
                if equivalent(&x.claim, &Formula::not(member.clone()))? {
                    hit = true;
                    break;
                }
            }
            if !hit {
                if let Some(conj) = Formula::conjunction(y.support.iter().cloned()) {
                    hit = equivalent(&x.claim, &Formula::not(conj))?;
                }
            }
            if hit {
                attacks.insert((x.id.clone(), y.id.clone()));
            }
        }
    }
    Ok(attacks)
}
