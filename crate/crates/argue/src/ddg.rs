use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Subcommand};
use ddg_engine::{
    play_from_json, solve, DdgError, Force, Move, MoveKind, Play, Player, RankScope, Ranks,
    Ruleset,
};
use logic_core::parse_formula;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::output::{pretty, read_text, OutDir};

#[derive(Subcommand)]
pub enum DdgCommand {
    /// Decide the winner of a thesis and print a winning strategy
    Solve(SolveArgs),
    /// Explore a game move by move on standard input
    Step(StepArgs),
    /// Check a recorded transcript and report its winner
    Replay(ReplayArgs),
}

#[derive(Args)]
pub struct SolveArgs {
    pub thesis: String,
    #[command(flatten)]
    pub rules: RuleFlags,
    /// Directory for solution.json (stdout text only when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args)]
pub struct StepArgs {
    pub thesis: String,
    #[command(flatten)]
    pub rules: RuleFlags,
}

#[derive(Args)]
pub struct ReplayArgs {
    /// Transcript JSON file
    pub transcript: PathBuf,
    /// Count rank budgets over the whole play instead of per target
    #[arg(long)]
    pub global_budget: bool,
}

#[derive(Args)]
pub struct RuleFlags {
    /// classical | dialetheic
    #[arg(long, default_value = "classical")]
    pub ruleset: String,
    /// Opponent,proponent repetition ranks, e.g. "1,2"
    #[arg(long, default_value = "1,2")]
    pub ranks: String,
    /// Count rank budgets over the whole play instead of per target
    #[arg(long)]
    pub global_budget: bool,
}

impl RuleFlags {
    fn parse(&self) -> Result<(Ruleset, Ranks, RankScope), CliError> {
        let ruleset = match self.ruleset.as_str() {
            "classical" => Ruleset::Classical,
            "dialetheic" => Ruleset::Dialetheic,
            other => return Err(CliError::Usage(format!("unknown ruleset {other:?}"))),
        };
        let (o, p) = self
            .ranks
            .split_once(',')
            .and_then(|(o, p)| Some((o.trim().parse().ok()?, p.trim().parse().ok()?)))
            .ok_or_else(|| {
                CliError::Usage(format!("ranks must be \"r1,r2\", got {:?}", self.ranks))
            })?;
        let scope = if self.global_budget {
            RankScope::GlobalBudget
        } else {
            RankScope::PerTarget
        };
        Ok((ruleset, Ranks::new(o, p), scope))
    }
}

pub fn run(command: DdgCommand) -> Result<(), CliError> {
    match command {
        DdgCommand::Solve(args) => run_solve(args),
        DdgCommand::Step(args) => run_step(args),
        DdgCommand::Replay(args) => run_replay(args),
    }
}

fn render_move(mv: &Move) -> String {
    format!("{} {}", mv.force.as_str(), mv.token())
}

fn run_solve(args: SolveArgs) -> Result<(), CliError> {
    let thesis = parse_formula(&args.thesis)?;
    let (ruleset, ranks, scope) = args.rules.parse()?;
    let solution = solve(&thesis, ranks, ruleset, scope)?;
    println!("winner: {}", solution.winner.as_str());
    if solution.strategy.is_empty() {
        println!("strategy: empty");
    } else {
        println!("strategy ({} decision points):", solution.strategy.len());
        for (key, mv) in &solution.strategy {
            let at = if key.is_empty() { "(start)" } else { key };
            println!("  {at} => {}", render_move(mv));
        }
    }
    if args.out.is_some() {
        let strategy: serde_json::Map<String, Value> = solution
            .strategy
            .iter()
            .map(|(key, mv)| (key.clone(), json!(render_move(mv))))
            .collect();
        let report = json!({
            "thesis": thesis.to_string(),
            "ruleset": ruleset.as_str(),
            "ranks": [ranks.opponent, ranks.proponent],
            "winner": solution.winner.as_str(),
            "strategy": strategy,
        });
        OutDir::new(args.out, args.force).emit("solution.json", &pretty(&report))?;
    }
    Ok(())
}

fn run_step(args: StepArgs) -> Result<(), CliError> {
    let thesis = parse_formula(&args.thesis)?;
    let (ruleset, ranks, scope) = args.rules.parse()?;
    let mut play = Play::new_game(thesis, ranks, ruleset, scope);
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    loop {
        let menu = match play.legal_moves() {
            Ok(menu) => menu,
            Err(DdgError::TerminalPlay) => {
                println!("no legal moves remain");
                println!("winner: {}", play.terminal_winner()?.as_str());
                return Ok(());
            }
            Err(other) => return Err(other.into()),
        };
        let mover = play.to_move();
        println!(
            "{} to move at position {}; legal:",
            mover.as_str(),
            play.moves().len()
        );
        for mv in &menu {
            println!("  {} {}", mover.as_str(), render_move(mv));
        }
        print!("> ");
        io::stdout().flush().map_err(|e| CliError::Io(e.to_string()))?;
        let Some(line) = lines.next() else {
            println!("input ended; play open after {} moves", play.moves().len());
            return Ok(());
        };
        let line = line.map_err(|e| CliError::Io(e.to_string()))?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        if text == "quit" {
            println!("play open after {} moves", play.moves().len());
            return Ok(());
        }
        match step_move(&play, &menu, text) {
            Ok(mv) => {
                println!("played {} {}", mover.as_str(), render_move(&mv));
                play.apply_move(mv).expect("menu moves are legal");
            }
            Err(reason) => println!("{reason}"),
        }
    }
}

/// Parse `P !a & b@3` or `O ?andR@1` and match it against the legal menu;
/// the force is taken from the menu entry, so defences are preferred when
/// an utterance could be either.
fn step_move(play: &Play, menu: &[Move], text: &str) -> Result<Move, String> {
    let (player_text, rest) = text
        .split_once(char::is_whitespace)
        .ok_or("expected `P <move>@<target>` or `O <move>@<target>`")?;
    let player = match player_text {
        "P" => Player::Proponent,
        "O" => Player::Opponent,
        other => return Err(format!("unknown player {other:?}")),
    };
    if player != play.to_move() {
        return Err(format!("{player_text} is not to move"));
    }
    let (head, target_text) = rest
        .trim()
        .rsplit_once('@')
        .ok_or("moves end with @<target position>")?;
    let target: usize = target_text
        .trim()
        .parse()
        .map_err(|_| format!("bad target {target_text:?}"))?;
    let head = head.trim();
    let (kind, content) = if let Some(formula_text) = head.strip_prefix('!') {
        let formula = parse_formula(formula_text.trim()).map_err(|e| e.to_string())?;
        (MoveKind::Assert, Some(formula))
    } else {
        let kind = match head {
            "?andL" => MoveKind::RequestAndLeft,
            "?andR" => MoveKind::RequestAndRight,
            "?or" => MoveKind::RequestOr,
            "?premises" => MoveKind::RequestPremises,
            other => return Err(format!("unknown move {other:?}")),
        };
        (kind, None)
    };
    if let Some(mv) = menu.iter().find(|m| {
        m.kind == kind && m.target == target && (kind != MoveKind::Assert || m.content == content)
    }) {
        return Ok(mv.clone());
    }
    // not on the menu: ask the rule checker why
    let probe = Move {
        kind,
        content,
        target,
        force: Force::Defence,
    };
    match play.check_move(&probe) {
        Err(err) => Err(err.to_string()),
        Ok(()) => Err("move is not available here".into()),
    }
}

fn run_replay(args: ReplayArgs) -> Result<(), CliError> {
    let value: Value = serde_json::from_str(&read_text(&args.transcript)?)
        .map_err(|e| CliError::Usage(format!("transcript: {e}")))?;
    let scope = if args.global_budget {
        RankScope::GlobalBudget
    } else {
        RankScope::PerTarget
    };
    let play = play_from_json(&value, scope)?;
    println!(
        "replayed {} moves under the {} ruleset",
        play.moves().len().saturating_sub(3),
        play.ruleset().as_str()
    );
    match play.terminal_winner() {
        Ok(winner) => println!("valid, winner: {}", winner.as_str()),
        Err(DdgError::NotTerminal) => println!("valid, play still open"),
        Err(other) => return Err(other.into()),
    }
    Ok(())
}
