//! Simulated deliberation outcomes.

use std::collections::{BTreeMap, BTreeSet};

use extensions::{Af, Extension, Semantics};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{ActionCorpus, Histogram, PrioritizerError};

/// One simulated outcome: which actions were on the table, what the
/// semantics accepted, and the position every tag ended up with.
#[derive(Clone, Debug)]
pub struct OutcomeRecord {
    pub index: usize,
    pub sampled: Vec<String>,
    pub extensions: Vec<Extension>,
    pub positions: BTreeMap<String, usize>,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub outcomes: Vec<OutcomeRecord>,
    pub histogram: Histogram,
}

/// Run `n` outcomes. Outcome i draws its own rng from `seed + i`, samples
/// between two and all actions, restricts the attack relation to the sample,
/// and takes the chosen semantics' extensions as what the outcome accepts.
///
/// Sampled tags are ranked by acceptance count (how many extensions hold
/// their argument), breaking ties by each action's solo dialogue result and
/// then by name; unsampled tags follow in name order. Positions are 1-based,
/// so each tag gets exactly one position per outcome.
pub fn run_dialogues(
    corpus: &ActionCorpus,
    semantics: Semantics,
    n: usize,
    seed: u64,
) -> Result<RunReport, PrioritizerError> {
    let actions = corpus.actions();
    let mut histogram = Histogram::new(corpus.tags());
    let mut outcomes = Vec::with_capacity(n);
    for index in 0..n {
        let mut rng = ChaCha8Rng::seed_from_u64(seed + index as u64);
        let k = rng.gen_range(2..=actions.len());
        let mut picked = rand::seq::index::sample(&mut rng, actions.len(), k).into_vec();
        picked.sort_unstable();
        let sampled: Vec<String> = picked.iter().map(|&i| actions[i].tag.clone()).collect();
        let in_sample: BTreeSet<&str> = sampled.iter().map(String::as_str).collect();

        let defeats: BTreeSet<(String, String)> = corpus
            .attacks()
            .iter()
            .filter(|(src, dst)| in_sample.contains(src.as_str()) && in_sample.contains(dst.as_str()))
            .cloned()
            .collect();
        let af = Af::new(sampled.clone(), defeats)?;
        let extensions = semantics.extensions(&af)?;

        let acceptance: BTreeMap<&str, usize> = sampled
            .iter()
            .map(|tag| {
                let count = extensions.iter().filter(|ext| ext.contains(tag)).count();
                (tag.as_str(), count)
            })
            .collect();
        let wins: BTreeMap<&str, bool> = actions
            .iter()
            .map(|a| (a.tag.as_str(), a.proponent_wins))
            .collect();

        let mut ranked = sampled.clone();
        ranked.sort_by(|x, y| {
            acceptance[y.as_str()]
                .cmp(&acceptance[x.as_str()])
                .then_with(|| wins[y.as_str()].cmp(&wins[x.as_str()]))
                .then_with(|| x.cmp(y))
        });

        let mut positions = BTreeMap::new();
        for (offset, tag) in ranked.iter().enumerate() {
            positions.insert(tag.clone(), offset + 1);
        }
        let mut trailing: Vec<&str> = actions
            .iter()
            .map(|a| a.tag.as_str())
            .filter(|tag| !in_sample.contains(tag))
            .collect();
        trailing.sort_unstable();
        for (offset, tag) in trailing.iter().enumerate() {
            positions.insert((*tag).to_string(), k + offset + 1);
        }
        for (tag, position) in &positions {
            histogram.record(tag, *position);
        }
        outcomes.push(OutcomeRecord {
            index,
            sampled,
            extensions,
            positions,
        });
    }
    Ok(RunReport {
        outcomes,
        histogram,
    })
}
