//! Enumerating semantics. Candidate sets are swept as bitmasks, which is
//! exact and fast enough under the argument cap.

use std::collections::BTreeSet;

use crate::{grounded, Af, Extension, ExtensionError};

const MAX_ENUM_ARGS: usize = 20;
const MAX_MUTUAL_PAIRS: usize = 12;

/// Which extensions to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Semantics {
    Grounded,
    Complete,
    Preferred,
    ResolutionGrounded,
}

impl Semantics {
    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Grounded => "grounded",
            Semantics::Complete => "complete",
            Semantics::Preferred => "preferred",
            Semantics::ResolutionGrounded => "resolution-grounded",
        }
    }

    pub fn extensions(self, af: &Af) -> Result<Vec<Extension>, ExtensionError> {
        match self {
            Semantics::Grounded => Ok(vec![grounded(af)]),
            Semantics::Complete => complete_all(af),
            Semantics::Preferred => preferred_all(af),
            Semantics::ResolutionGrounded => resolution_grounded(af),
        }
    }
}

impl std::str::FromStr for Semantics {
    type Err = ExtensionError;

    fn from_str(name: &str) -> Result<Self, Self::Err> {
        match name {
            "grounded" => Ok(Semantics::Grounded),
            "complete" => Ok(Semantics::Complete),
            "preferred" => Ok(Semantics::Preferred),
            "resolution-grounded" => Ok(Semantics::ResolutionGrounded),
            other => Err(ExtensionError::UnknownSemantics(other.to_string())),
        }
    }
}

struct Masks {
    n: usize,
    /// bit i set in `defeated_by[j]` when argument j defeats argument i
    targets: Vec<u32>,
    attackers: Vec<u32>,
}

fn masks(af: &Af) -> Result<Masks, ExtensionError> {
    let n = af.arguments().len();
    if n > MAX_ENUM_ARGS {
        return Err(ExtensionError::CapExceeded(format!(
            "enumeration handles at most {MAX_ENUM_ARGS} arguments, got {n}"
        )));
    }
    let index = |id: &str| af.arguments().iter().position(|a| a == id).unwrap();
    let mut targets = vec![0u32; n];
    let mut attackers = vec![0u32; n];
    for (src, dst) in af.defeats() {
        let (s, d) = (index(src), index(dst));
        targets[s] |= 1 << d;
        attackers[d] |= 1 << s;
    }
    Ok(Masks {
        n,
        targets,
        attackers,
    })
}

fn to_extension(af: &Af, mask: u32) -> Extension {
    af.arguments()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, id)| id.clone())
        .collect()
}

/// In-sets of every admissible and every complete labelling, as bitmasks.
fn sweep(m: &Masks) -> (Vec<u32>, Vec<u32>) {
    let mut admissible = Vec::new();
    let mut complete = Vec::new();
    for set in 0..(1u32 << m.n) {
        let mut struck = 0u32;
        for i in 0..m.n {
            if set & (1 << i) != 0 {
                struck |= m.targets[i];
            }
        }
        if set & struck != 0 {
            continue; // internal conflict
        }
        let defended: u32 = (0..m.n)
            .filter(|&i| m.attackers[i] & !struck == 0)
            .map(|i| 1u32 << i)
            .sum();
        if set & !defended != 0 {
            continue; // a member is not defended
        }
        admissible.push(set);
        if set == defended {
            complete.push(set);
        }
    }
    (admissible, complete)
}

/// All complete extensions, sorted. Errors above the argument cap.
pub fn complete_all(af: &Af) -> Result<Vec<Extension>, ExtensionError> {
    let m = masks(af)?;
    let (_, complete) = sweep(&m);
    let set: BTreeSet<Extension> = complete.into_iter().map(|s| to_extension(af, s)).collect();
    Ok(set.into_iter().collect())
}

/// All preferred extensions (maximal admissible sets), sorted.
pub fn preferred_all(af: &Af) -> Result<Vec<Extension>, ExtensionError> {
    let m = masks(af)?;
    let (admissible, _) = sweep(&m);
    let maximal: Vec<u32> = admissible
        .iter()
        .filter(|&&s| {
            !admissible
                .iter()
                .any(|&o| o != s && o & s == s)
        })
        .copied()
        .collect();
    let set: BTreeSet<Extension> = maximal.into_iter().map(|s| to_extension(af, s)).collect();
    Ok(set.into_iter().collect())
}

/// Grounded extensions of every orientation of the mutual-defeat pairs,
/// thinned to the inclusion-minimal ones. One-way defeats are kept as they
/// are, so an odd cycle resolves to the plain grounded extension.
pub fn resolution_grounded(af: &Af) -> Result<Vec<Extension>, ExtensionError> {
    let pairs: Vec<(String, String)> = af
        .defeats()
        .iter()
        .filter(|(a, b)| a < b && af.has_defeat(b, a))
        .cloned()
        .collect();
    if pairs.len() > MAX_MUTUAL_PAIRS {
        return Err(ExtensionError::CapExceeded(format!(
            "resolution handles at most {MAX_MUTUAL_PAIRS} mutual pairs, got {}",
            pairs.len()
        )));
    }
    let mut found: BTreeSet<Extension> = BTreeSet::new();
    for choice in 0..(1u32 << pairs.len()) {
        let mut defeats = af.defeats().clone();
        for (i, (a, b)) in pairs.iter().enumerate() {
            let dropped = if choice & (1 << i) != 0 {
                (b.clone(), a.clone())
            } else {
                (a.clone(), b.clone())
            };
            defeats.remove(&dropped);
        }
        let resolved = Af::new(af.arguments().to_vec(), defeats)?;
        found.insert(grounded(&resolved));
    }
    let minimal: Vec<Extension> = found
        .iter()
        .filter(|ext| !found.iter().any(|other| other != *ext && other.is_subset(ext)))
        .cloned()
        .collect();
    Ok(minimal)
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

    fn exts(sets: &[&[&str]]) -> Vec<Extension> {
        sets.iter()
            .map(|ids| ids.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn two_cycle_semantics() {
        let af = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(complete_all(&af).unwrap(), exts(&[&[], &["a"], &["b"]]));
        assert_eq!(preferred_all(&af).unwrap(), exts(&[&["a"], &["b"]]));
        assert_eq!(resolution_grounded(&af).unwrap(), exts(&[&["a"], &["b"]]));
    }

    #[test]
    fn odd_cycle_has_only_the_empty_extension() {
        let af = af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!(complete_all(&af).unwrap(), exts(&[&[]]));
        assert_eq!(preferred_all(&af).unwrap(), exts(&[&[]]));
        // no mutual pairs, so resolution falls back to the grounded extension
        assert_eq!(resolution_grounded(&af).unwrap(), exts(&[&[]]));
    }

    #[test]
    fn chain_has_a_unique_extension() {
        let af = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(complete_all(&af).unwrap(), exts(&[&["a", "c"]]));
        assert_eq!(preferred_all(&af).unwrap(), exts(&[&["a", "c"]]));
    }

    #[test]
    fn resolution_keeps_incomparable_results() {
        // orienting the mutual pair either way reinstates a different side
        let af = af(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "a"), ("a", "c")],
        );
        assert_eq!(
            resolution_grounded(&af).unwrap(),
            exts(&[&["a"], &["b", "c"]])
        );
    }

    #[test]
    fn resolution_thins_to_minimal() {
        // b--c mutual; a defeats b. Orienting c->b gives {a, c}; orienting
        // b->c gives {a, c} as well since a strikes b either way.
        let af = af(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "b")],
        );
        assert_eq!(resolution_grounded(&af).unwrap(), exts(&[&["a", "c"]]));
    }

    #[test]
    fn caps_are_enforced() {
        let many: Vec<String> = (0..21).map(|i| format!("x{i:02}")).collect();
        let af = Af::new(many, BTreeSet::new()).unwrap();
        assert!(matches!(
            complete_all(&af),
            Err(ExtensionError::CapExceeded(_))
        ));

        let args: Vec<String> = (0..26).map(|i| format!("m{i:02}")).collect();
        let defeats: BTreeSet<(String, String)> = (0..13)
            .flat_map(|i| {
                let a = format!("m{:02}", 2 * i);
                let b = format!("m{:02}", 2 * i + 1);
                [(a.clone(), b.clone()), (b, a)]
            })
            .collect();
        let af = Af::new(args, defeats).unwrap();
        assert!(matches!(
            resolution_grounded(&af),
            Err(ExtensionError::CapExceeded(_))
        ));
    }
}
