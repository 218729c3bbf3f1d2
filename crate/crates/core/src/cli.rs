//! Command-line front end. Parsing lives here rather than in the binary so
//! the commands can be driven from tests.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::error::Error;
use crate::graph::{
    build_partition_graph, classify_clique, cliques_through, induced_neighborhood, line_graph,
    verify_line_graph_theorem,
};
use crate::local_model::{admissibility_graph, local_type, LocalSummary};
use crate::oracle::{run_all, run_degrees, VerificationReport};
use crate::partition::{enumerate_partitions, Partition};

#[derive(Debug, Parser)]
#[command(
    name = "partgraph",
    version,
    about = "Local structure of the partition graph G_n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; text unless the command says otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions of n in reverse-lexicographic order.
    Partitions { n: usize },
    /// Local type, admissibility graph, degree and clique data of a partition.
    Local {
        #[arg(allow_hyphen_values = true)]
        partition: Partition,
    },
    /// The partition graph G_n.
    Graph { n: usize },
    /// Induced neighborhood and the line graph of the admissibility graph.
    Neighborhood {
        #[arg(allow_hyphen_values = true)]
        partition: Partition,
    },
    /// Maximal cliques through a partition, classified as star or top type.
    Cliques {
        #[arg(allow_hyphen_values = true)]
        partition: Partition,
    },
    /// Exhaustive check of every local result for n = 1..=nmax (JSON report).
    Verify {
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        /// Only compare degrees.
        #[arg(long)]
        degrees_only: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: io::Error },
    #[error("{command} does not support --format {format:?}")]
    UnsupportedFormat {
        command: &'static str,
        format: Format,
    },
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    VerificationFailed,
}

impl From<Status> for ExitCode {
    fn from(status: Status) -> Self {
        match status {
            Status::Success => ExitCode::SUCCESS,
            Status::VerificationFailed => ExitCode::FAILURE,
        }
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let (body, status) = render(cli)?;
    match &cli.output {
        Some(path) => fs::write(path, body).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })?,
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|source| CliError::Write {
                path: "<stdout>".into(),
                source,
            })?,
    }
    Ok(status)
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn render(cli: &Cli) -> Result<(String, Status), CliError> {
    let unsupported = |command, format| Err(CliError::UnsupportedFormat { command, format });
    let body = match &cli.command {
        Command::Partitions { n } => {
            let all = enumerate_partitions(*n)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => pretty(&all),
                Format::Text => all.iter().map(|p| format!("{p}\n")).collect(),
                f @ Format::Dot => return unsupported("partitions", f),
            }
        }
        Command::Local { partition } => match cli.format.unwrap_or(Format::Text) {
            Format::Json => pretty(&local_json(partition)),
            Format::Text => local_text(partition),
            f @ Format::Dot => return unsupported("local", f),
        },
        Command::Graph { n } => {
            let graph = build_partition_graph(*n)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => pretty(&graph),
                Format::Dot => graph.to_dot(&format!("G_{n}")),
                Format::Text => {
                    let mut out = format!(
                        "G_{n}: {} vertices, {} edges\n",
                        graph.vertex_count(),
                        graph.edge_count()
                    );
                    for (v, p) in graph.labels().iter().enumerate() {
                        let _ = writeln!(out, "{v:>4}  {p}  (degree {})", graph.degree(v));
                    }
                    for (a, b) in graph.edges() {
                        let _ = writeln!(out, "{} -- {}", graph.labels()[a], graph.labels()[b]);
                    }
                    out
                }
            }
        }
        Command::Neighborhood { partition } => neighborhood_output(partition, cli.format)?,
        Command::Cliques { partition } => cliques_output(partition, cli.format)?,
        Command::Verify { nmax, degrees_only } => {
            let report = if *degrees_only {
                run_degrees(*nmax)?
            } else {
                run_all(*nmax)?
            };
            let status = if report.passed() {
                Status::Success
            } else {
                Status::VerificationFailed
            };
            let body = match cli.format.unwrap_or(Format::Json) {
                Format::Json => pretty(&report),
                Format::Text => verify_text(&report),
                f @ Format::Dot => return unsupported("verify", f),
            };
            return Ok((body, status));
        }
    };
    Ok((body, Status::Success))
}

fn local_json(p: &Partition) -> serde_json::Value {
    let summary = LocalSummary::of(&local_type(p));
    let mut value = serde_json::to_value(&summary).expect("summary serializes");
    let object = value.as_object_mut().expect("summary is an object");
    object.insert("partition".into(), json!(p));
    object.insert("n".into(), json!(p.weight()));
    object.insert("gaps".into(), json!(p.gaps()));
    value
}

fn bits(v: &[bool]) -> String {
    let inner: Vec<&str> = v.iter().map(|&b| if b { "1" } else { "0" }).collect();
    format!("({})", inner.join(","))
}

fn seq(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(","))
}

fn local_text(p: &Partition) -> String {
    let ty = local_type(p);
    let summary = LocalSummary::of(&ty);
    let blocks: Vec<String> = p
        .blocks()
        .iter()
        .map(|b| format!("{}^{}", b.size, b.multiplicity))
        .collect();
    let edges: Vec<String> = admissibility_graph(&ty)
        .edges
        .iter()
        .map(ToString::to_string)
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "partition      {p}  (n = {})", p.weight());
    let _ = writeln!(out, "block form     {}", blocks.join(" "));
    let _ = writeln!(out, "gaps           {}", seq(&p.gaps()));
    let _ = writeln!(
        out,
        "local type     t={} alpha={} beta={}",
        ty.t(),
        bits(ty.alpha()),
        bits(ty.beta())
    );
    let _ = writeln!(
        out,
        "B edges        {}",
        if edges.is_empty() {
            "(none)".into()
        } else {
            edges.join(" ")
        }
    );
    let _ = writeln!(out, "degree         {}", summary.degree);
    let _ = writeln!(out, "sigma          {}", seq(&summary.sigma));
    let _ = writeln!(out, "tau            {}", seq(&summary.tau));
    let _ = writeln!(out, "omega_loc      {}", summary.local_clique_number);
    let _ = writeln!(out, "dim_loc        {}", summary.local_dimension);
    out
}

fn neighborhood_output(p: &Partition, format: Option<Format>) -> Result<String, CliError> {
    let n = p.weight();
    let nbhd = induced_neighborhood(n, p)?;
    let lg = line_graph(&admissibility_graph(&local_type(p)));
    let report = verify_line_graph_theorem(n, p)?;
    Ok(match format.unwrap_or(Format::Text) {
        Format::Json => {
            let bijection: Vec<_> = report
                .bijection
                .iter()
                .map(|(mv, q)| json!({ "move": mv, "neighbor": q }))
                .collect();
            pretty(&json!({
                "partition": p,
                "neighborhood": nbhd,
                "line_graph": lg,
                "bijection": bijection,
                "pairs_checked": report.pairs_checked,
                "adjacent_pairs": report.adjacent_pairs,
                "verified": report.verified(),
                "violations": report.violations,
            }))
        }
        Format::Dot => {
            let labels: Vec<String> = report
                .bijection
                .iter()
                .map(|(mv, q)| format!("{mv}: {q}"))
                .collect();
            let mut named = crate::graph::SimpleGraph::new(labels);
            for (a, b) in nbhd.edges() {
                named.add_edge(a, b);
            }
            let mut out = named.to_dot(&format!("N({p})"));
            out.push_str(&lg.to_dot(&format!("L(B({p}))")));
            out
        }
        Format::Text => {
            let mut out = format!(
                "N({p}): {} vertices, {} edges\nL(B): {} vertices, {} edges\n",
                nbhd.vertex_count(),
                nbhd.edge_count(),
                lg.vertex_count(),
                lg.edge_count()
            );
            for (mv, q) in &report.bijection {
                let _ = writeln!(out, "  {mv}  ->  {q}");
            }
            for (a, b) in nbhd.edges() {
                let _ = writeln!(out, "  {} -- {}", nbhd.labels()[a], nbhd.labels()[b]);
            }
            if report.verified() {
                let _ = writeln!(
                    out,
                    "verified: {} pairs, 0 violations",
                    report.pairs_checked
                );
            } else {
                let _ = writeln!(out, "VIOLATIONS: {}", report.violations.len());
                for v in &report.violations {
                    let _ = writeln!(
                        out,
                        "  {} / {}: adjacent={} share_corner={}",
                        v.first, v.second, v.adjacent_in_graph, v.share_corner
                    );
                }
            }
            out
        }
    })
}

fn cliques_output(p: &Partition, format: Option<Format>) -> Result<String, CliError> {
    let cliques = cliques_through(p.weight(), p)?;
    let ty = local_type(p);
    let largest = cliques.iter().map(Vec::len).max().unwrap_or(0);
    let mut classified = Vec::new();
    for clique in &cliques {
        let class = if clique.is_empty() {
            None
        } else {
            Some(classify_clique(clique)?.class)
        };
        classified.push((clique, class));
    }
    Ok(match format.unwrap_or(Format::Text) {
        Format::Json => {
            let list: Vec<_> = classified
                .iter()
                .map(|(c, class)| json!({ "moves": c, "size": c.len() + 1, "class": class }))
                .collect();
            pretty(&json!({
                "partition": p,
                "cliques": list,
                "omega_loc_search": largest + 1,
                "omega_loc_formula": crate::local_model::local_clique_number(&ty),
            }))
        }
        Format::Text => {
            let mut out = format!("maximal cliques through {p} (size counts {p} itself):\n");
            for (clique, class) in &classified {
                let moves: Vec<String> = clique.iter().map(ToString::to_string).collect();
                let class = class.map_or_else(|| "isolated".to_owned(), |c| c.to_string());
                let _ = writeln!(
                    out,
                    "  size {}  {:<10} {{{}}}",
                    clique.len() + 1,
                    class,
                    moves.join(", ")
                );
            }
            let _ = writeln!(
                out,
                "omega_loc: {} by search, {} by formula",
                largest + 1,
                crate::local_model::local_clique_number(&ty)
            );
            out
        }
        f @ Format::Dot => {
            return Err(CliError::UnsupportedFormat {
                command: "cliques",
                format: f,
            })
        }
    })
}

fn verify_text(report: &VerificationReport) -> String {
    let mut out = format!("n = {}..={}\n", report.n_range.0, report.n_range.1);
    for check in &report.checks {
        let verdict = if check.passed() { "PASS" } else { "FAIL" };
        let ms = report.timings.get(&check.name).copied().unwrap_or(0);
        let _ = writeln!(
            out,
            "{verdict}  {:<18} {:>6} examined  {:>4} failures  {ms} ms",
            check.name,
            check.examined,
            check.failures.len()
        );
        for f in &check.failures {
            let _ = writeln!(out, "      {f:?}");
        }
    }
    let _ = writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" });
    out
}
