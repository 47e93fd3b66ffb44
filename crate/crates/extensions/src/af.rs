//! Defeat graphs and the fixpoint semantics that need no enumeration.

use std::collections::BTreeSet;

use crate::ExtensionError;

/// A set of argument ids.
pub type Extension = BTreeSet<String>;

/// A directed defeat graph over argument ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Af {
    arguments: Vec<String>,
    defeats: BTreeSet<(String, String)>,
}

impl Af {
    /// Every defeat endpoint must name a known argument; ids must be unique.
    pub fn new(
        arguments: Vec<String>,
        defeats: BTreeSet<(String, String)>,
    ) -> Result<Self, ExtensionError> {
        let mut seen = BTreeSet::new();
        for id in &arguments {
            if !seen.insert(id.clone()) {
                return Err(ExtensionError::DuplicateArgument(id.clone()));
            }
        }
        for (src, dst) in &defeats {
            for end in [src, dst] {
                if !seen.contains(end) {
                    return Err(ExtensionError::UnknownArgument(end.clone()));
                }
            }
        }
        Ok(Af { arguments, defeats })
    }

    pub fn arguments(&self) -> &[String] {
        &self.arguments
    }

    pub fn defeats(&self) -> &BTreeSet<(String, String)> {
        &self.defeats
    }

    pub fn has_defeat(&self, src: &str, dst: &str) -> bool {
        self.defeats
            .contains(&(src.to_owned(), dst.to_owned()))
    }

    pub fn defeaters_of<'a>(&'a self, target: &'a str) -> impl Iterator<Item = &'a str> {
        self.defeats
            .iter()
            .filter(move |(_, dst)| dst == target)
            .map(|(src, _)| src.as_str())
    }

    /// Arguments whose every defeater is itself defeated by `base`.
    fn defended_by(&self, base: &Extension) -> Extension {
        let struck: BTreeSet<&str> = self
            .defeats
            .iter()
            .filter(|(src, _)| base.contains(src))
            .map(|(_, dst)| dst.as_str())
            .collect();
        self.arguments
            .iter()
            .filter(|id| self.defeaters_of(id).all(|d| struck.contains(d)))
            .cloned()
            .collect()
    }
}

/// No member defeats another member (or itself).
pub fn conflict_free(af: &Af, set: &Extension) -> bool {
    !af.defeats()
        .iter()
        .any(|(src, dst)| set.contains(src) && set.contains(dst))
}

/// Conflict-free, and every member's defeaters are defeated from inside.
pub fn admissible(af: &Af, set: &Extension) -> bool {
    conflict_free(af, set) && set.is_subset(&af.defended_by(set))
}

/// Least fixpoint of the defence operator, starting from the undefeated
/// arguments. Always exists and is unique.
pub fn grounded(af: &Af) -> Extension {
    let mut current = Extension::new();
    loop {
        let next = af.defended_by(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn af(args: &[&str], defeats: &[(&str, &str)]) -> Af {
        Af::new(
            args.iter().map(|s| s.to_string()).collect(),
            defeats
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        )
        .unwrap()
    }

    fn ext(ids: &[&str]) -> Extension {
        ids.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rejects_unknown_endpoints_and_duplicates() {
        let bad = Af::new(
            vec!["a".into()],
            [("a".to_string(), "b".to_string())].into_iter().collect(),
        );
        assert!(matches!(bad, Err(ExtensionError::UnknownArgument(id)) if id == "b"));
        let dup = Af::new(vec!["a".into(), "a".into()], BTreeSet::new());
        assert!(matches!(dup, Err(ExtensionError::DuplicateArgument(_))));
    }

    #[test]
    fn grounded_of_a_chain_keeps_the_reinstated_end() {
        let af = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(grounded(&af), ext(&["a", "c"]));
    }

    #[test]
    fn grounded_of_a_two_cycle_is_empty() {
        let af = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(grounded(&af), Extension::new());
    }

    #[test]
    fn grounded_without_defeats_is_everything() {
        let af = af(&["a", "b"], &[]);
        assert_eq!(grounded(&af), ext(&["a", "b"]));
    }

    #[test]
    fn self_defeater_never_grounds() {
        let af = af(&["a", "b"], &[("a", "a")]);
        assert_eq!(grounded(&af), ext(&["b"]));
        assert!(!conflict_free(&af, &ext(&["a"])));
    }

    #[test]
    fn admissibility_needs_a_defender_inside() {
        let af = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert!(admissible(&af, &ext(&["a", "c"])));
        assert!(admissible(&af, &ext(&["a"])));
        assert!(admissible(&af, &ext(&[])));
        // c alone cannot answer b
        assert!(!admissible(&af, &ext(&["c"])));
        assert!(conflict_free(&af, &ext(&["c"])));
    }
}
