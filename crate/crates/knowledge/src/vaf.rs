//! Value-labelled argumentation frameworks.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::{compute_attacks, Argument, KnowledgeError};

/// Arguments, attacks, a value label per argument, and the audiences (total
/// orders over the values) the framework can be projected through.
#[derive(Clone, Debug, PartialEq)]
pub struct Vaf {
    pub arguments: Vec<Argument>,
    pub attacks: BTreeSet<(String, String)>,
    pub values: BTreeSet<String>,
    pub val: BTreeMap<String, String>,
    pub audiences: Vec<Vec<String>>,
}

/// Assemble and validate a framework; attacks are computed from the claims.
pub fn build_vaf(
    arguments: Vec<Argument>,
    values: BTreeSet<String>,
    val: BTreeMap<String, String>,
    audiences: Vec<Vec<String>>,
) -> Result<Vaf, KnowledgeError> {
    if values.is_empty() {
        return Err(KnowledgeError::EmptyValues);
    }
    for arg in &arguments {
        match val.get(&arg.id) {
            None => return Err(KnowledgeError::PartialValMap(arg.id.clone())),
            Some(v) if !values.contains(v) => {
                return Err(KnowledgeError::PartialValMap(arg.id.clone()))
            }
            Some(_) => {}
        }
    }
    for audience in &audiences {
        let seen: BTreeSet<&String> = audience.iter().collect();
        if audience.len() != values.len() || seen != values.iter().collect() {
            return Err(KnowledgeError::NotTotalOrder(audience.clone()));
        }
    }
    let attacks = compute_attacks(&arguments)?;
    Ok(Vaf {
        arguments,
        attacks,
        values,
        val,
        audiences,
    })
}

impl Vaf {
    pub fn to_json(&self) -> Value {
        json!({
            "arguments": self.arguments.iter().map(|a| json!({
                "id": a.id,
                "support": a.support.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "claim": a.claim.to_string(),
                "value": self.val[&a.id],
                "tag": a.premise_tag,
            })).collect::<Vec<_>>(),
            "attacks": self.attacks.iter().map(|(x, y)| vec![x, y]).collect::<Vec<_>>(),
            "audiences": self.audiences,
        })
    }
}
