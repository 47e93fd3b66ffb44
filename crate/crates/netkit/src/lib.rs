//! Actor networks: loading, centrality, and block structure.
//!
//! A [`SocialGraph`] is an undirected weighted graph of named actors loaded
//! from two CSV files. [`betweenness`] scores brokerage, [`sbm_entropy`]
//! scores a block partition, and [`partition_search`] looks for low-entropy
//! partitions agglomeratively with per-level Metropolis sweeps.

mod blocks;
mod centrality;
mod graph;

pub use blocks::{
    block_correlation, partition_from_json, partition_json, partition_search, sbm_entropy,
    BlockCorrelation, Partition, PartitionSearch,
};
pub use centrality::betweenness;
pub use graph::{Actor, Edge, SocialGraph, Typology};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NetError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("record {record}: {message}")]
    Malformed { record: usize, message: String },
    #[error("duplicate actor id {0:?}")]
    DuplicateId(String),
    #[error("duplicate edge between {0:?} and {1:?}")]
    DuplicateEdge(String, String),
    #[error("unknown actor {0:?}")]
    UnknownNode(String),
    #[error("unknown typology {0:?}")]
    UnknownTypology(String),
    #[error("self loop on {0:?}")]
    SelfLoop(String),
    #[error("edge {src:?} -- {dst:?} has non-positive weight {weight}")]
    BadWeight { src: String, dst: String, weight: f64 },
    #[error("bad partition: {0}")]
    BadPartition(String),
}
