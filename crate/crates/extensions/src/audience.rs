//! Projecting a value-labelled framework through one audience.

use knowledge::Vaf;
use serde_json::{json, Value};

use crate::{Af, Extension, ExtensionError};

/// Drop every attack whose target's value the audience ranks strictly above
/// the attacker's value; the survivors are defeats. The audience must be one
/// of the framework's declared audiences.
pub fn project_audience(vaf: &Vaf, audience: &[String]) -> Result<Af, ExtensionError> {
    if !vaf.audiences.iter().any(|a| a == audience) {
        return Err(ExtensionError::UnknownAudience(audience.to_vec()));
    }
    let rank = |value: &str| audience.iter().position(|v| v == value).unwrap();
    let defeats = vaf
        .attacks
        .iter()
        .filter(|(src, dst)| rank(&vaf.val[dst]) >= rank(&vaf.val[src]))
        .cloned()
        .collect();
    let ids = vaf.arguments.iter().map(|a| a.id.clone()).collect();
    Af::new(ids, defeats)
}

/// Uniform result shape for the CLI and fixtures.
pub fn report_json(semantics: &str, audience: Option<&[String]>, extensions: &[Extension]) -> Value {
    json!({
        "semantics": semantics,
        "audience": audience,
        "extensions": extensions
            .iter()
            .map(|ext| ext.iter().cloned().collect::<Vec<String>>())
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, BTreeSet};

    use knowledge::{build_vaf, Argument};
    use logic_core::parse_formula;

    use super::*;
    use crate::{grounded, preferred_all};

    fn arg(id: &str, support: &[&str], claim: &str) -> Argument {
        Argument {
            id: id.to_string(),
            support: support.iter().map(|s| parse_formula(s).unwrap()).collect(),
            claim: parse_formula(claim).unwrap(),
            premise_tag: None,
        }
    }

    fn land_use_vaf() -> Vaf {
        let arguments = vec![
            arg("A1", &["a", "a -> y"], "y"),
            arg("A2", &["r", "r -> ~a"], "~(a & (a -> y))"),
            arg("A3", &["y", "r -> ~y"], "~(r & (r -> ~a))"),
            arg("A4", &["a -> ~h", "r", "r -> h"], "~(a & (a -> y))"),
        ];
        let values: BTreeSet<String> = ["y", "w"].iter().map(|s| s.to_string()).collect();
        let val: BTreeMap<String, String> = [("A1", "y"), ("A2", "w"), ("A3", "y"), ("A4", "w")]
            .iter()
            .map(|(a, v)| (a.to_string(), v.to_string()))
            .collect();
        let audiences = vec![
            vec!["y".to_string(), "w".to_string()],
            vec!["w".to_string(), "y".to_string()],
        ];
        build_vaf(arguments, values, val, audiences).unwrap()
    }

    fn strings(items: &[&str]) -> Vec<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn projection_depends_on_the_audience() {
        let vaf = land_use_vaf();
        assert_eq!(vaf.attacks.len(), 3);

        // ranking y first shields A1 from both w-valued attackers
        let af = project_audience(&vaf, &strings(&["y", "w"])).unwrap();
        assert_eq!(
            af.defeats().iter().cloned().collect::<Vec<_>>(),
            vec![("A3".to_string(), "A2".to_string())]
        );
        let expected: Extension = strings(&["A1", "A3", "A4"]).into_iter().collect();
        assert_eq!(grounded(&af), expected);
        assert_eq!(preferred_all(&af).unwrap(), vec![expected]);

        // ranking w first instead shields A2 from A3
        let af = project_audience(&vaf, &strings(&["w", "y"])).unwrap();
        assert_eq!(af.defeats().len(), 2);
        let expected: Extension = strings(&["A2", "A3", "A4"]).into_iter().collect();
        assert_eq!(grounded(&af), expected);
        assert_eq!(preferred_all(&af).unwrap(), vec![expected]);
    }

    #[test]
    fn unknown_audiences_are_rejected() {
        let vaf = land_use_vaf();
        for bad in [strings(&["y"]), strings(&["w", "z"]), strings(&[])] {
            assert!(matches!(
                project_audience(&vaf, &bad),
                Err(ExtensionError::UnknownAudience(_))
            ));
        }
    }

    #[test]
    fn report_shape() {
        let ext: Extension = strings(&["A1", "A5"]).into_iter().collect();
        let report = report_json("preferred", Some(&strings(&["y", "w"])), &[ext]);
        assert_eq!(
            report,
            serde_json::json!({
                "semantics": "preferred",
                "audience": ["y", "w"],
                "extensions": [["A1", "A5"]],
            })
        );
        let none = report_json("grounded", None, &[]);
        assert_eq!(none["audience"], serde_json::Value::Null);
    }
}
