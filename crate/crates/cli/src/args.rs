use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "threshold", version, about = "Threshold graph construction, spectra and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and print its sequence, NSG form, weights and edges.
    Gen(BatchSource),
    /// Print assembled and dense spectra, trivial multiplicities and η±.
    Spectrum(BatchSource),
    /// Count eigenvalues in the gap interval for one graph.
    CheckGap(Source),
    /// Gap check over every connected threshold graph of one order.
    ScanGap(Scan),
    /// Find the extremal η± graphs of one order and compare with A_n.
    ScanConjecture(Scan),
    /// Check η± of the anti-regular graph A_n against the gap interval.
    CheckAntiregular(Order),
    /// Print the reduction chain down to an anti-regular graph.
    Reduce(Source),
    /// Recognize an edge list as threshold, or report a stuck subgraph.
    Recognize(EdgeSource),
}

/// One graph, given exactly one way.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Creation sequence over {0,1}.
    #[arg(long)]
    pub seq: Option<String>,
    /// NSG form, e.g. "nsg(1,2;1,1)" or "nsg(3;2;+1)".
    #[arg(long)]
    pub nsg: Option<String>,
    /// Edge-list file; the graph must be threshold.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

/// One graph, or every threshold graph of `--order`.
#[derive(Debug, Args)]
pub struct BatchSource {
    #[command(flatten)]
    pub one: OneOrOrder,
    /// With --order, only connected graphs.
    #[arg(long)]
    pub connected_only: bool,
    #[arg(long, default_value_t = 22)]
    pub order_cap: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct OneOrOrder {
    #[arg(long)]
    pub seq: Option<String>,
    #[arg(long)]
    pub nsg: Option<String>,
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Enumerate all threshold graphs of this order.
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Scan {
    #[arg(long)]
    pub order: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,
    #[arg(long, default_value_t = 22)]
    pub order_cap: usize,
}

#[derive(Debug, Args)]
pub struct Order {
    #[arg(long)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct EdgeSource {
    #[arg(long)]
    pub edges: PathBuf,
}
