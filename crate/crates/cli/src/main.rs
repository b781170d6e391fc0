mod output;
mod search;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cayleylab::cayley::build_graph;
use cayleylab::polyarith::{build_f_p, build_h_p, extract_g_p, IntPoly};
use cayleylab::ring::{parse_ring_spec_with_limit, FiniteRing, DEFAULT_MAX_RING_SIZE};
use cayleylab::structure::validate::analyze;

use output::{write_output, Failure};

#[derive(Parser)]
#[command(name = "cayleylab", version, about = "p-unitary Cayley graphs over finite commutative rings")]
struct Cli {
    /// Largest ring (number of elements) any command may enumerate.
    #[arg(long, global = true, env = "CAYLEYLAB_MAX_RING_SIZE", default_value_t = DEFAULT_MAX_RING_SIZE)]
    max_ring_size: u64,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Export G_R(p) as DOT, JSON, or an edge list.
    Build {
        #[arg(short, long)]
        ring: String,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural summary of G_R(p) as JSON, theorem and oracle side by side.
    Analyze {
        #[arg(short, long)]
        ring: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification sweep and write a CSV report.
    Verify(verify::VerifyArgs),
    /// Search for witnesses.
    Search {
        #[command(subcommand)]
        kind: search::SearchKind,
    },
    /// Print f_p, h_p = f_p / p, or the cofactor g_p.
    Poly {
        #[arg(value_enum)]
        which: PolyKind,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    F,
    H,
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

pub(crate) fn parse_ring(spec: &str, limit: u64) -> Result<FiniteRing> {
    Ok(parse_ring_spec_with_limit(spec, limit)?)
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    let limit = cli.max_ring_size;
    match cli.command {
        Command::Build { ring, p, format, out } => {
            let r = parse_ring(&ring, limit)?;
            let g = build_graph(&r, p)?;
            let text = match format {
                GraphFormat::Dot => g.to_dot(),
                GraphFormat::Json => g.to_json(),
                GraphFormat::Edgelist => g.to_edge_list(),
            };
            write_output(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Analyze { ring, p, out } => {
            let r = parse_ring(&ring, limit)?;
            let a = analyze(&r, p)?;
            let ok = a.mismatches.is_empty();
            write_output(out.as_deref(), &(serde_json::to_string_pretty(&a)? + "\n"))?;
            Ok(ok)
        }
        Command::Verify(args) => verify::run(args, limit),
        Command::Search { kind } => search::run(kind, limit),
        Command::Poly { which, p, format, out } => {
            let (poly, m): (IntPoly, Option<u32>) = match which {
                PolyKind::F => (build_f_p(p)?, None),
                PolyKind::H => (build_h_p(p)?, None),
                PolyKind::G => {
                    let rec = extract_g_p(p)?;
                    (rec.g, Some(rec.m))
                }
            };
            let name = match which {
                PolyKind::F => "f",
                PolyKind::H => "h",
                PolyKind::G => "g",
            };
            let text = match format {
                PolyFormat::Text => format!("{poly}\n"),
                PolyFormat::Json => {
                    let mut v = json!({ "poly": name, "p": p, "degree": poly.degree(), "coefficients": poly });
                    if let Some(m) = m {
                        v["phi3_multiplicity"] = json!(m);
                    }
                    serde_json::to_string_pretty(&v)? + "\n"
                }
            };
            write_output(out.as_deref(), &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let falsified = e.downcast_ref::<Failure>().is_some()
                || matches!(e.downcast_ref::<cayleylab::Error>(), Some(cayleylab::Error::Falsified(_)));
            ExitCode::from(if falsified { 1 } else { 2 })
        }
    }
}
