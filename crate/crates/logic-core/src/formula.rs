//! Syntax tree and rendering.

use std::collections::BTreeSet;
use std::fmt;

/// A propositional atom: lowercase identifier like `a` or `claim_rights`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Self {
        Atom(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A propositional formula. `Sequent` is only meaningful at the top level;
/// it evaluates as the conjoined premises materially implying the conclusion.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Sequent(Vec<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(Atom::new(name))
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn sequent(premises: Vec<Formula>, conclusion: Formula) -> Self {
        Formula::Sequent(premises, Box::new(conclusion))
    }

    /// Left-folded conjunction of `items`; `None` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        let mut it = items.into_iter();
        let first = it.next()?;
        Some(it.fold(first, Formula::and))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Formula::Sequent(ps, c) => {
                for p in ps {
                    p.collect_atoms(out);
                }
                c.collect_atoms(out);
            }
        }
    }

    /// Connective nesting depth; atoms are 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                1 + l.depth().max(r.depth())
            }
            Formula::Sequent(ps, c) => {
                1 + ps
                    .iter()
                    .map(Formula::depth)
                    .chain(std::iter::once(c.depth()))
                    .max()
                    .unwrap_or(0)
            }
        }
    }
}

fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Sequent(..) => 0,
        Formula::Implies(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        Formula::Not(..) => 4,
        Formula::Atom(_) => 5,
    }
}

fn write_prec(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if prec(f) < min {
        out.write_str("(")?;
        write_prec(f, 0, out)?;
        return out.write_str(")");
    }
    match f {
        Formula::Atom(a) => write!(out, "{a}"),
        Formula::Not(g) => {
            out.write_str("~")?;
            write_prec(g, 4, out)
        }
        Formula::And(l, r) => {
            write_prec(l, 3, out)?;
            out.write_str(" & ")?;
            write_prec(r, 4, out)
        }
        Formula::Or(l, r) => {
            write_prec(l, 2, out)?;
            out.write_str(" | ")?;
            write_prec(r, 3, out)
        }
        Formula::Implies(l, r) => {
            // chains are grouped explicitly: a -> (b -> c)
            write_prec(l, 2, out)?;
            out.write_str(" -> ")?;
            write_prec(r, 2, out)
        }
        Formula::Sequent(ps, c) => {
            for (i, p) in ps.iter().enumerate() {
                if i > 0 {
                    out.write_str(", ")?;
                }
                write_prec(p, 1, out)?;
            }
            if ps.is_empty() {
                out.write_str("|- ")?;
            } else {
                out.write_str(" |- ")?;
            }
            write_prec(c, 1, out)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(self, 0, f)
    }
}

/// Minimal-parenthesis rendering; round-trips through the parser.
pub fn render_formula(f: &Formula) -> String {
    f.to_string()
}
