use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use clap::Args;
use extensions::{project_audience, report_json, Af, Semantics};
use knowledge::{action_arguments, build_vaf, compute_attacks, parse_corpus, DerivationMode};
use serde_json::Value;

use crate::error::CliError;
use crate::output::{pretty, read_text, OutDir};

#[derive(Args)]
pub struct AfArgs {
    /// Corpus of clauses with @tag / @value / @audience directives
    pub corpus: PathBuf,
    /// grounded | complete | preferred | resolution
    #[arg(long, default_value = "preferred")]
    pub semantics: String,
    /// Project through one audience only, written as "y > w"
    #[arg(long)]
    pub audience: Option<String>,
    /// Directory for extensions.json (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overwrite existing output files
    #[arg(long)]
    pub force: bool,
}

/// The flag name for resolution-based grounded semantics is shortened.
pub fn parse_semantics(name: &str) -> Result<Semantics, CliError> {
    let canonical = if name == "resolution" {
        "resolution-grounded"
    } else {
        name
    };
    canonical.parse::<Semantics>().map_err(CliError::from)
}

pub fn run(args: AfArgs) -> Result<(), CliError> {
    let kb = parse_corpus(&read_text(&args.corpus)?)?;
    let arguments = action_arguments(&kb, DerivationMode::Classical)?;
    if arguments.is_empty() {
        return Err(CliError::Usage(
            "corpus has no tagged clauses to argue from".into(),
        ));
    }
    let semantics = parse_semantics(&args.semantics)?;

    let mut reports = Vec::new();
    if kb.audiences().is_empty() {
        if args.audience.is_some() {
            return Err(CliError::Usage("corpus declares no audiences".into()));
        }
        let ids = arguments.iter().map(|a| a.id.clone()).collect();
        let attacks = compute_attacks(&arguments)?;
        let af = Af::new(ids, attacks)?;
        let extensions = semantics.extensions(&af)?;
        reports.push(report_json(semantics.as_str(), None, &extensions));
    } else {
        let values: BTreeSet<String> = kb.values().values().cloned().collect();
        let val: BTreeMap<String, String> = arguments
            .iter()
            .filter_map(|a| kb.values().get(&a.id).map(|v| (a.id.clone(), v.clone())))
            .collect();
        let vaf = build_vaf(arguments, values, val, kb.audiences().to_vec())?;
        let audiences = match &args.audience {
            None => vaf.audiences.clone(),
            Some(ranking) => {
                let order: Vec<String> = ranking.split('>').map(|v| v.trim().to_string()).collect();
                if !vaf.audiences.contains(&order) {
                    return Err(CliError::Usage(format!("unknown audience {ranking:?}")));
                }
                vec![order]
            }
        };
        for audience in audiences {
            let af = project_audience(&vaf, &audience)?;
            let extensions = semantics.extensions(&af)?;
            reports.push(report_json(semantics.as_str(), Some(&audience), &extensions));
        }
    }

    OutDir::new(args.out, args.force).emit("extensions.json", &pretty(&Value::Array(reports)))
}
