//! Corpus files: one clause per line, `#` comments, optional directives.
//!
//! ```text
//! # facts and rules
//! a.
//! ~h :- a.
//! @tag "agriculture" y :- a.
//! @audience y > w
//! @value "agriculture" y
//! ```
//!
//! A `@tag` prefix names the clause as an action: the clause's formula is the
//! action's tagged premise and the head is the action's claim.

use std::collections::BTreeMap;

use logic_core::{parse_formula, Formula};

use crate::KnowledgeError;

/// A fact or a rule. Rules lower to an implication with the conjoined body
/// as antecedent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Clause {
    Fact(Formula),
    Rule { head: Formula, body: Vec<Formula> },
}

impl Clause {
    /// The clause as a single formula.
    pub fn formula(&self) -> Formula {
        match self {
            Clause::Fact(f) => f.clone(),
            Clause::Rule { head, body } => Formula::implies(
                Formula::conjunction(body.iter().cloned()).expect("rules have non-empty bodies"),
                head.clone(),
            ),
        }
    }

    /// The head (facts are their own head).
    pub fn head(&self) -> &Formula {
        match self {
            Clause::Fact(f) => f,
            Clause::Rule { head, .. } => head,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub tag: Option<String>,
    pub clause: Clause,
}

/// A parsed corpus: clauses in file order plus audience and value directives.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    entries: Vec<Entry>,
    audiences: Vec<Vec<String>>,
    values: BTreeMap<String, String>,
}

impl KnowledgeBase {
    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn audiences(&self) -> &[Vec<String>] {
        &self.audiences
    }

    /// Tag-to-value assignments from `@value` directives.
    pub fn values(&self) -> &BTreeMap<String, String> {
        &self.values
    }

    /// Clause formulas in file order, first occurrence kept on duplicates.
    pub fn as_formulas(&self) -> Vec<Formula> {
        let mut out: Vec<Formula> = Vec::new();
        for e in &self.entries {
            let f = e.clause.formula();
            if !out.contains(&f) {
                out.push(f);
            }
        }
        out
    }

    /// `(tag, tagged formula, claim)` for every tagged clause, in file order.
    pub fn actions(&self) -> Vec<(String, Formula, Formula)> {
        self.entries
            .iter()
            .filter_map(|e| {
                e.tag
                    .as_ref()
                    .map(|t| (t.clone(), e.clause.formula(), e.clause.head().clone()))
            })
            .collect()
    }

    /// Look up the tag attached to a formula, if any.
    pub fn tag_of(&self, f: &Formula) -> Option<&str> {
        self.entries
            .iter()
            .find(|e| e.tag.is_some() && e.clause.formula() == *f)
            .and_then(|e| e.tag.as_deref())
    }
}

fn syntax(line: usize, message: impl Into<String>) -> KnowledgeError {
    KnowledgeError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_clause_formula(text: &str, line: usize) -> Result<Formula, KnowledgeError> {
    let f = parse_formula(text).map_err(|e| syntax(line, e.to_string()))?;
    if matches!(f, Formula::Sequent(..)) {
        return Err(syntax(line, "clauses cannot contain sequents"));
    }
    Ok(f)
}

fn parse_clause(text: &str, line: usize) -> Result<Clause, KnowledgeError> {
    let text = text
        .strip_suffix('.')
        .ok_or_else(|| syntax(line, "clause must end with '.'"))?
        .trim();
    match text.split_once(":-") {
        None => Ok(Clause::Fact(parse_clause_formula(text, line)?)),
        Some((head, body)) => {
            let head = parse_clause_formula(head.trim(), line)?;
            let body = body
                .split(',')
                .map(|b| parse_clause_formula(b.trim(), line))
                .collect::<Result<Vec<_>, _>>()?;
            if body.is_empty() {
                return Err(syntax(line, "rule body is empty"));
            }
            Ok(Clause::Rule { head, body })
        }
    }
}

/// Pull a leading double-quoted string; returns (label, rest).
fn quoted(text: &str, line: usize) -> Result<(String, &str), KnowledgeError> {
    let rest = text
        .strip_prefix('"')
        .ok_or_else(|| syntax(line, "expected a quoted label"))?;
    let end = rest
        .find('"')
        .ok_or_else(|| syntax(line, "unterminated label"))?;
    Ok((rest[..end].to_string(), rest[end + 1..].trim_start()))
}

/// Strip a `#` comment, respecting quoted labels.
fn strip_comment(line: &str) -> &str {
    let mut in_quotes = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => in_quotes = !in_quotes,
            '#' if !in_quotes => return &line[..i],
            _ => {}
        }
    }
    line
}

/// Parse a corpus file.
pub fn parse_corpus(text: &str) -> Result<KnowledgeBase, KnowledgeError> {
    let mut kb = KnowledgeBase::default();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("@tag") {
            let (tag, clause_text) = quoted(rest.trim_start(), lineno)?;
            if kb.entries.iter().any(|e| e.tag.as_deref() == Some(&tag)) {
                return Err(KnowledgeError::DuplicateTag(tag));
            }
            let clause = parse_clause(clause_text, lineno)?;
            kb.entries.push(Entry {
                tag: Some(tag),
                clause,
            });
        } else if let Some(rest) = line.strip_prefix("@audience") {
            let order: Vec<String> = rest.split('>').map(|v| v.trim().to_string()).collect();
            if order.iter().any(String::is_empty) || order.len() < 2 {
                return Err(syntax(lineno, "audience must order at least two values"));
            }
            kb.audiences.push(order);
        } else if let Some(rest) = line.strip_prefix("@value") {
            let (tag, value) = quoted(rest.trim_start(), lineno)?;
            if value.is_empty() {
                return Err(syntax(lineno, "missing value label"));
            }
            kb.values.insert(tag, value.to_string());
        } else if line.starts_with('@') {
            return Err(syntax(lineno, "unknown directive"));
        } else {
            let clause = parse_clause(line, lineno)?;
            kb.entries.push(Entry { tag: None, clause });
        }
    }
    Ok(kb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use logic_core::render_formula;

    #[test]
    fn parses_facts_rules_and_comments() {
        let kb = parse_corpus("# land use\na.\n~h :- a.\n\nw :- h, r. # both needed\n").unwrap();
        let fs: Vec<String> = kb.as_formulas().iter().map(render_formula).collect();
        assert_eq!(fs, vec!["a", "a -> ~h", "h & r -> w"]);
    }

    #[test]
    fn tags_name_actions() {
        let kb = parse_corpus("@tag \"agriculture\" y :- a.\nr.\n").unwrap();
        let actions = kb.actions();
        assert_eq!(actions.len(), 1);
        assert_eq!(actions[0].0, "agriculture");
        assert_eq!(render_formula(&actions[0].1), "a -> y");
        assert_eq!(render_formula(&actions[0].2), "y");
        assert_eq!(kb.tag_of(&actions[0].1), Some("agriculture"));
    }

    #[test]
    fn duplicate_tags_are_rejected() {
        let err = parse_corpus("@tag \"x\" a.\n@tag \"x\" b.\n").unwrap_err();
        assert_eq!(err, KnowledgeError::DuplicateTag("x".into()));
    }

    #[test]
    fn audience_and_value_directives() {
        let kb = parse_corpus("@audience y > w\n@value \"agriculture\" y\na.\n").unwrap();
        assert_eq!(kb.audiences(), &[vec!["y".to_string(), "w".to_string()]]);
        assert_eq!(kb.values().get("agriculture").unwrap(), "y");
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        match parse_corpus("a.\nb :- .\n") {
            Err(KnowledgeError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_corpus("a\n") {
            Err(KnowledgeError::Syntax { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_corpus("a |- b.\n").is_err());
    }

    #[test]
    fn duplicate_formulas_dedup_keeping_first() {
        let kb = parse_corpus("a.\na.\nb.\n").unwrap();
        assert_eq!(kb.as_formulas().len(), 2);
        assert_eq!(kb.entries().len(), 3);
    }
}
