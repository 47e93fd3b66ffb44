use std::path::PathBuf;

use clap::Args;
use logic_core::{is_tautology, parse_formula, satisfiable, DModel};
use serde_json::Value;

use crate::error::CliError;
use crate::output::read_text;

#[derive(Args)]
pub struct FormulaArgs {
    /// Formula text, e.g. "a & ~a" or "(a -> b) -> a"
    pub expr: String,
    /// Star-world model JSON; the formula is then valued world by world
    #[arg(long)]
    pub model: Option<PathBuf>,
}

pub fn run(args: FormulaArgs) -> Result<(), CliError> {
    let formula = parse_formula(&args.expr)?;
    println!("formula: {formula}");
    println!("tautology: {}", is_tautology(&formula)?);
    println!("satisfiable: {}", satisfiable(&formula)?);
    if let Some(path) = &args.model {
        let value: Value = serde_json::from_str(&read_text(path)?)
            .map_err(|e| CliError::Usage(format!("model: {e}")))?;
        let model = DModel::from_json(&value)?;
        for world in model.worlds() {
            let truth = model.eval4(world, &formula)?;
            let mark = if world == model.designated_world() {
                " (designated)"
            } else {
                ""
            };
            println!("world {world}: {truth}{mark}");
        }
    }
    Ok(())
}
