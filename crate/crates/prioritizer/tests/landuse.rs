//! End-to-end run over the land-use corpus: restoration must outrank
//! agriculture in every outcome, whatever the sample.

use extensions::Semantics;
use knowledge::parse_corpus;
use prioritizer::{prioritise, run_dialogues, ActionCorpus};

const LAND_USE: &str = "\
a.
~h :- a.
@tag \"agriculture\" y :- a.
w :- h.
r.
@tag \"restoration\" ~a :- r.
~y :- r.
h :- r.
y.
y :- s.
s :- h.
";

#[test]
fn restoration_always_outranks_agriculture() {
    let kb = parse_corpus(LAND_USE).unwrap();
    let corpus = ActionCorpus::from_kb(&kb).unwrap();
    let report = run_dialogues(&corpus, Semantics::Grounded, 50, 7).unwrap();
    for outcome in &report.outcomes {
        assert_eq!(outcome.positions["restoration"], 1, "outcome {}", outcome.index);
        assert_eq!(outcome.positions["agriculture"], 2, "outcome {}", outcome.index);
    }
    let result = prioritise(&report.histogram);
    assert_eq!(result.ranking[0].tag, "restoration");
    assert_eq!(result.ranking[0].mean_position, 1.0);
}
