use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Subcommand;
use serde_json::{json, Value};

use cayleylab::arith::primes_below;
use cayleylab::charsearch::{bipartite_char2_sweep, embed_sweep, find_k3};
use cayleylab::graph::PlainGraph;

use crate::output::write_output;
use crate::parse_ring;

#[derive(Subcommand)]
pub enum SearchKind {
    /// Triangle {0, 1, a} in G_F(p) for a field F.
    K3 {
        #[arg(long)]
        field: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Least prime ℓ whose G_{F_ℓ}(p) contains the target as an induced subgraph.
    Embed {
        /// Target graph as an edge list ("u v" per line, optional
        /// "# vertices: N" header).
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 200)]
        ell_max: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connected bipartite G_{F_{2^m}}(p), 2 <= m <= m_max.
    #[command(name = "bipartite-char2")]
    BipartiteChar2 {
        #[arg(long)]
        m_max: u32,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&std::path::Path>, v: &Value) -> Result<()> {
    write_output(out, &(serde_json::to_string_pretty(v)? + "\n"))
}

pub fn run(kind: SearchKind, limit: u64) -> Result<bool> {
    match kind {
        SearchKind::K3 { field, p, out } => {
            let f = parse_ring(&field, limit)?;
            let v = match find_k3(&f, p)? {
                Some(hit) => json!({
                    "field": f.spec_string(),
                    "p": p,
                    "found": true,
                    "a": hit.a,
                    "a_label": f.label(cayleylab::ring::Elem(hit.a)),
                    "x": hit.x,
                    "complete": hit.complete,
                    "triangle": [0, 1, hit.a],
                    "verified": true,
                }),
                None => json!({
                    "field": f.spec_string(),
                    "p": p,
                    "found": false,
                    "search_space": f.size(),
                }),
            };
            emit(out.as_deref(), &v)?;
        }
        SearchKind::Embed { target, p, ell_max, out } => {
            let text = fs::read_to_string(&target).with_context(|| format!("reading {}", target.display()))?;
            let g = PlainGraph::parse_edge_list(&text)?;
            if g.vertex_count() == 0 {
                bail!("target graph {} has no vertices", target.display());
            }
            let v = match embed_sweep(&g, p, ell_max)? {
                Some(w) => {
                    let mut v = serde_json::to_value(&w)?;
                    v["found"] = json!(true);
                    v
                }
                None => {
                    let tried = primes_below(ell_max + 1)
                        .into_iter()
                        .filter(|&l| l != p && (l - 1) % p == 0 && (p != 2 || l % 4 == 1))
                        .count();
                    json!({ "p": p, "ell_max": ell_max, "found": false, "search_space": tried })
                }
            };
            emit(out.as_deref(), &v)?;
        }
        SearchKind::BipartiteChar2 { m_max, p, out } => {
            let rows = bipartite_char2_sweep(p, m_max, limit)?;
            let hit = rows.iter().find(|r| r.is_hit());
            let v = json!({
                "p": p,
                "m_max": m_max,
                "found": hit.is_some(),
                "witness": hit,
                "checked": rows,
            });
            emit(out.as_deref(), &v)?;
        }
    }
    Ok(true)
}
