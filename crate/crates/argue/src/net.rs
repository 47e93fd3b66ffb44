use std::fs::File;
use std::path::{Path, PathBuf};

use clap::{Args, Subcommand};
use netkit::{
    betweenness, block_correlation, partition_from_json, partition_json, partition_search,
    Partition, SocialGraph,
};
use serde_json::Value;

use crate::error::CliError;
use crate::output::{pretty, read_text, OutDir};

#[derive(Subcommand)]
pub enum NetCommand {
    /// Shortest-path brokerage score per actor
    Betweenness(BetweennessArgs),
    /// Search for a low-entropy block partition
    Blocks(BlocksArgs),
    /// Mean edge counts between aligned blocks across saved partitions
    Correlate(CorrelateArgs),
}

#[derive(Args)]
pub struct GraphFiles {
    /// Actor CSV: id,name,municipality,typology,lat,lon
    pub actors: PathBuf,
    /// Edge CSV: src,dst,weight,relation
    pub edges: PathBuf,
}

#[derive(Args)]
pub struct BetweennessArgs {
    #[command(flatten)]
    pub graph: GraphFiles,
    /// Directory for betweenness.csv (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args)]
pub struct BlocksArgs {
    #[command(flatten)]
    pub graph: GraphFiles,
    /// Searched block-count range, as "min,max"
    #[arg(long)]
    pub blocks: String,
    /// Metropolis sweeps per level of the agglomeration
    #[arg(long, default_value_t = 40)]
    pub sweeps: usize,
    /// RNG seed for the search
    #[arg(long)]
    pub seed: u64,
    /// json (partition.json) or dot (blocks.dot)
    #[arg(long, default_value = "json")]
    pub format: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args)]
pub struct CorrelateArgs {
    #[command(flatten)]
    pub graph: GraphFiles,
    /// Two or more saved partition JSON files
    #[arg(required = true, num_args = 2..)]
    pub partitions: Vec<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub force: bool,
}

fn load_graph(files: &GraphFiles) -> Result<SocialGraph, CliError> {
    let open = |path: &Path| {
        File::open(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    };
    SocialGraph::from_csv(open(&files.actors)?, open(&files.edges)?)
        .map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(command: NetCommand) -> Result<(), CliError> {
    match command {
        NetCommand::Betweenness(args) => run_betweenness(args),
        NetCommand::Blocks(args) => run_blocks(args),
        NetCommand::Correlate(args) => run_correlate(args),
    }
}

fn run_betweenness(args: BetweennessArgs) -> Result<(), CliError> {
    let graph = load_graph(&args.graph)?;
    let scores = betweenness(&graph);
    let mut csv = String::from("id,betweenness\n");
    for (id, score) in &scores {
        csv.push_str(&format!("{id},{score}\n"));
    }
    OutDir::new(args.out, args.force).emit("betweenness.csv", &csv)
}

fn run_blocks(args: BlocksArgs) -> Result<(), CliError> {
    let graph = load_graph(&args.graph)?;
    let range = args
        .blocks
        .split_once(',')
        .and_then(|(lo, hi)| Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?)))
        .ok_or_else(|| {
            CliError::Usage(format!("--blocks must be \"min,max\", got {:?}", args.blocks))
        })?;
    let search = partition_search(&graph, range, args.sweeps, args.seed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    eprintln!(
        "best of {} sampled levels: B = {}, entropy = {:.6}",
        search.samples.len(),
        search.best.b,
        search.best.entropy
    );
    let out = OutDir::new(args.out, args.force);
    match args.format.as_str() {
        "json" => {
            let report = partition_json(&graph, &search.best)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            out.emit("partition.json", &pretty(&report))
        }
        "dot" => out.emit("blocks.dot", &graph.to_dot(Some(&search.best.blocks))),
        other => Err(CliError::Usage(format!("unknown format {other:?}"))),
    }
}

fn run_correlate(args: CorrelateArgs) -> Result<(), CliError> {
    let graph = load_graph(&args.graph)?;
    let partitions: Vec<Partition> = args
        .partitions
        .iter()
        .map(|path| {
            let value: Value = serde_json::from_str(&read_text(path)?)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            partition_from_json(&graph, &value).map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect::<Result<_, _>>()?;
    let correlation =
        block_correlation(&graph, &partitions).map_err(|e| CliError::Usage(e.to_string()))?;
    eprintln!(
        "reference: {} (within-block edge share {:.4})",
        args.partitions[correlation.reference].display(),
        correlation.within_share()
    );
    let b = correlation.matrix.len();
    let mut csv = String::from("block");
    for s in 0..b {
        csv.push_str(&format!(",b{s}"));
    }
    csv.push('\n');
    for (r, row) in correlation.matrix.iter().enumerate() {
        csv.push_str(&format!("b{r}"));
        for count in row {
            csv.push_str(&format!(",{count}"));
        }
        csv.push('\n');
    }
    OutDir::new(args.out, args.force).emit("correlation.csv", &csv)
}
