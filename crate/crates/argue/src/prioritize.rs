use std::path::PathBuf;

use clap::Args;
use knowledge::parse_corpus;
use prioritizer::{fnv1a64, prioritise, run_dialogues, ActionCorpus};
use serde_json::json;

use crate::af::parse_semantics;
use crate::error::CliError;
use crate::output::{pretty, read_text, OutDir};

#[derive(Args)]
pub struct PrioritizeArgs {
    /// Corpus of clauses; each @tag names a candidate action
    pub corpus: PathBuf,
    /// grounded | complete | preferred | resolution
    #[arg(long, default_value = "grounded")]
    pub semantics: String,
    /// Number of sampled dialogue outcomes
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// RNG seed; outcome i draws from seed + i
    #[arg(long)]
    pub seed: u64,
    /// Directory for histogram.csv and order.json
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub force: bool,
    /// Also write trace.json recording how ties were broken
    #[arg(long)]
    pub trace: bool,
}

pub fn run(args: PrioritizeArgs) -> Result<(), CliError> {
    let kb = parse_corpus(&read_text(&args.corpus)?)?;
    let corpus = ActionCorpus::from_kb(&kb)?;
    let semantics = parse_semantics(&args.semantics)?;
    let report = run_dialogues(&corpus, semantics, args.n, args.seed)?;
    let csv = report.histogram.to_csv();
    let ranked = prioritise(&report.histogram);

    let out = OutDir::new(Some(args.out), args.force);
    out.emit("histogram.csv", &csv)?;
    let order = json!({
        "semantics": semantics.as_str(),
        "n": args.n,
        "seed": args.seed,
        "histogram_fnv1a64": format!("{:016x}", fnv1a64(csv.as_bytes())),
        "ranking": ranked.ranking.iter().map(|p| json!({
            "tag": p.tag,
            "mean_position": p.mean_position,
            "first_places": p.first_places,
        })).collect::<Vec<_>>(),
    });
    out.emit("order.json", &pretty(&order))?;
    if args.trace {
        out.emit("trace.json", &pretty(&json!({ "ties": ranked.trace })))?;
    }
    for (i, p) in ranked.ranking.iter().enumerate() {
        println!(
            "{}. {} (mean position {:.2}, first places {})",
            i + 1,
            p.tag,
            p.mean_position,
            p.first_places
        );
    }
    Ok(())
}
