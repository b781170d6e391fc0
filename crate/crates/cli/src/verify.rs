use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use rayon::prelude::*;

use cayleylab::arith::{prime_power, primes_below};
use cayleylab::cayley::{verify_wreath_decomposition, wreath_decomposition};
use cayleylab::charsearch::{count_k3_witnesses, find_k3, weil_sweep};
use cayleylab::polyarith::{
    extract_g_p, phi3_multiplicity, repeated_roots_mod_p, roots_mod_p, ROOT_PRIMES_BELOW_500,
};
use cayleylab::ring::FiniteRing;
use cayleylab::structure::validate::{
    admissible_pairs, analyze, default_local_corpus, homogeneity_check, named_corpus,
    split_spec_list, CSV_HEADER,
};

use crate::output::{csv_text, write_output};
use crate::parse_ring;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Connectivity,
    Anticonnectivity,
    Primality,
    Wreath,
    Homogeneous,
    Weil,
    K3bound,
    Phi3,
    Rootprimes,
    Repeatedroots,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    theorem: Theorem,
    /// Named corpus (default, local, fields, integers, galois) or a
    /// comma-separated list of ring specs.
    #[arg(long)]
    corpus: Option<String>,
    /// Comma-separated ring specs; takes precedence over --corpus.
    #[arg(long)]
    rings: Option<String>,
    /// Comma-separated primes.
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<u64>>,
    /// Upper bound for numeric sweeps (field order or prime).
    #[arg(long)]
    limit: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Report {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    failures: usize,
}

impl VerifyArgs {
    fn specs(&self, default: &str) -> Result<Vec<String>> {
        Ok(match (&self.rings, &self.corpus) {
            (Some(r), _) => split_spec_list(r),
            (None, Some(c)) => named_corpus(c)?,
            (None, None) => named_corpus(default)?,
        })
    }

    fn primes(&self, default: &[u64]) -> Vec<u64> {
        self.p.clone().unwrap_or_else(|| default.to_vec())
    }
}

pub fn run(args: VerifyArgs, limit: u64) -> Result<bool> {
    let report = match args.theorem {
        Theorem::Connectivity | Theorem::Anticonnectivity | Theorem::Primality => structure(&args, limit)?,
        Theorem::Wreath => wreath(&args, limit)?,
        Theorem::Homogeneous => homogeneous(&args, limit)?,
        Theorem::Weil => weil(&args)?,
        Theorem::K3bound => k3bound(&args, limit)?,
        Theorem::Phi3 => phi3(&args)?,
        Theorem::Rootprimes => rootprimes(&args)?,
        Theorem::Repeatedroots => repeatedroots(&args)?,
    };
    write_output(args.out.as_deref(), &csv_text(&report.header, &report.rows)?)?;
    eprintln!("{} rows, {} mismatches", report.rows.len(), report.failures);
    Ok(report.failures == 0)
}

fn structure(args: &VerifyArgs, limit: u64) -> Result<Report> {
    let specs = args.specs("default")?;
    let pairs = admissible_pairs(&specs, &args.primes(&[2, 3, 5, 7]), limit)?;
    let analyses = pairs
        .par_iter()
        .map(|(r, p)| analyze(r, *p))
        .collect::<cayleylab::Result<Vec<_>>>()?;
    let relevant = |m: &String| match args.theorem {
        Theorem::Connectivity => m.starts_with("connected"),
        Theorem::Anticonnectivity => m.starts_with("anticonnected"),
        _ => !m.starts_with("connected") && !m.starts_with("anticonnected"),
    };
    let mut header = CSV_HEADER.to_vec();
    header.push("mismatch");
    let mut failures = 0;
    let rows = analyses
        .iter()
        .map(|a| {
            let flagged: Vec<&String> = a.mismatches.iter().filter(|m| relevant(m)).collect();
            failures += usize::from(!flagged.is_empty());
            let mut rec = a.csv_record();
            rec.push(flagged.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; "));
            rec
        })
        .collect();
    Ok(Report { header, rows, failures })
}

fn local_rings(args: &VerifyArgs, limit: u64) -> Result<Vec<FiniteRing>> {
    let specs = match (&args.rings, &args.corpus) {
        (None, None) => default_local_corpus(),
        _ => args.specs("local")?,
    };
    let mut out = Vec::new();
    for s in specs {
        let r = parse_ring(&s, limit)?;
        if !r.is_local() {
            bail!("{s} is not a local ring");
        }
        out.push(r);
    }
    Ok(out)
}

fn wreath(args: &VerifyArgs, limit: u64) -> Result<Report> {
    let mut jobs = Vec::new();
    for r in local_rings(args, limit)? {
        let p = r.factors()[0].residue_char();
        if r.is_minus_one_pth_power(p)? {
            jobs.push((r, p));
        } else if args.rings.is_some() {
            bail!("-1 is not a {p}-th power in {r}");
        }
    }
    let results = jobs
        .par_iter()
        .map(|(r, p)| {
            let d = wreath_decomposition(r, *p)?;
            Ok((d.quotient.spec_string(), d.blocks, verify_wreath_decomposition(r, *p)?))
        })
        .collect::<cayleylab::Result<Vec<_>>>()?;
    let mut failures = 0;
    let rows = jobs
        .iter()
        .zip(results)
        .map(|((r, p), (quotient, blocks, ok))| {
            failures += usize::from(!ok);
            vec![r.spec_string(), p.to_string(), r.size().to_string(), quotient, blocks.to_string(), ok.to_string()]
        })
        .collect();
    Ok(Report { header: vec!["spec", "p", "|V|", "quotient", "blocks", "isomorphic"], rows, failures })
}

fn homogeneous(args: &VerifyArgs, limit: u64) -> Result<Report> {
    let mut jobs = Vec::new();
    for r in local_rings(args, limit)? {
        for p in args.primes(&[2, 3, 5, 7]) {
            if r.is_minus_one_pth_power(p)? {
                jobs.push((r.clone(), p));
            }
        }
    }
    let checks = jobs
        .par_iter()
        .map(|(r, p)| homogeneity_check(r, *p))
        .collect::<cayleylab::Result<Vec<_>>>()?;
    let mut failures = 0;
    let rows = checks
        .iter()
        .map(|c| {
            failures += usize::from(!c.passed());
            vec![
                c.spec.clone(),
                c.p.to_string(),
                c.ideal.clone(),
                c.ideal_size.to_string(),
                c.homogeneous.to_string(),
                c.translates_checked.to_string(),
                c.translate_violations.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
            ]
        })
        .collect();
    let header = vec!["spec", "p", "ideal", "ideal_size", "homogeneous", "translates_checked", "translate_violations"];
    Ok(Report { header, rows, failures })
}

fn weil(args: &VerifyArgs) -> Result<Report> {
    let rows = weil_sweep(args.limit.unwrap_or(2000), &args.primes(&[3, 5, 7]))?;
    let mut failures = 0;
    let rows = rows
        .iter()
        .map(|r| {
            failures += usize::from(r.margin < -1e-6);
            vec![
                r.q.to_string(),
                r.p.to_string(),
                r.k.to_string(),
                format!("{:.6}", r.magnitude),
                format!("{:.6}", r.bound),
                format!("{:.6}", r.margin),
            ]
        })
        .collect();
    Ok(Report { header: vec!["q", "p", "k", "magnitude", "bound", "margin"], rows, failures })
}

fn k3bound(args: &VerifyArgs, limit: u64) -> Result<Report> {
    let mut jobs = Vec::new();
    for q in 2..args.limit.unwrap_or(2000) {
        let Some((l, m)) = prime_power(q) else { continue };
        for p in args.primes(&[3, 5]) {
            if (q - 1) % p == 0 {
                jobs.push((format!("F({l},{m})"), q, p));
            }
        }
    }
    let results = jobs
        .par_iter()
        .map(|(spec, _, p)| {
            let f = parse_ring(spec, limit)?;
            let count = count_k3_witnesses(&f, *p)?;
            let hit = if f.is_minus_one_pth_power(*p)? { find_k3(&f, *p)? } else { None };
            Ok((count, hit))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut failures = 0;
    let rows = jobs
        .iter()
        .zip(results)
        .map(|((_, q, p), (c, hit))| {
            let guaranteed = *q >= (p + 1).pow(4);
            let bad = !c.identity_holds
                || (c.lower_bound > 0.0 && (c.count as f64) < c.lower_bound)
                || (guaranteed && hit.is_none());
            failures += usize::from(bad);
            vec![
                q.to_string(),
                p.to_string(),
                c.count.to_string(),
                format!("{:.6}", c.lower_bound),
                c.identity_holds.to_string(),
                hit.map(|h| h.a.to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    Ok(Report { header: vec!["q", "p", "count", "lower_bound", "identity_holds", "k3_vertex"], rows, failures })
}

fn large_primes(limit: u64, inclusive: bool) -> Vec<u64> {
    primes_below(limit + u64::from(inclusive)).into_iter().filter(|&p| p > 3).collect()
}

fn phi3(args: &VerifyArgs) -> Result<Report> {
    let primes = large_primes(args.limit.unwrap_or(3000), true);
    let results: Vec<_> = primes.par_iter().map(|&p| phi3_multiplicity(p)).collect();
    let mut failures = 0;
    let rows = primes
        .iter()
        .zip(results)
        .map(|(&p, m)| {
            let formula = if p % 3 == 2 { 1 } else { 2 };
            let m = m.ok();
            failures += usize::from(m != Some(formula));
            vec![
                p.to_string(),
                m.map(|m| m.to_string()).unwrap_or_default(),
                formula.to_string(),
                (m == Some(formula)).to_string(),
            ]
        })
        .collect();
    Ok(Report { header: vec!["p", "multiplicity", "formula", "match"], rows, failures })
}

fn rootprimes(args: &VerifyArgs) -> Result<Report> {
    let limit = args.limit.unwrap_or(500);
    let primes = large_primes(limit, false);
    let roots = primes
        .par_iter()
        .map(|&p| Ok(roots_mod_p(&extract_g_p(p)?.g, p)))
        .collect::<cayleylab::Result<Vec<_>>>()?;
    let mut failures = 0;
    let mut rows = Vec::new();
    for (&p, r) in primes.iter().zip(roots) {
        let listed = ROOT_PRIMES_BELOW_500.contains(&p);
        if p < 500 && listed != !r.is_empty() {
            failures += 1;
        }
        if !r.is_empty() || listed {
            let matches = if p < 500 { (listed == !r.is_empty()).to_string() } else { String::new() };
            let roots = r.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            rows.push(vec![p.to_string(), roots, matches]);
        }
    }
    Ok(Report { header: vec!["p", "roots", "matches_reference_list"], rows, failures })
}

fn repeatedroots(args: &VerifyArgs) -> Result<Report> {
    let primes = large_primes(args.limit.unwrap_or(500), false);
    let results: Vec<_> = primes.par_iter().map(|&p| repeated_roots_mod_p(p)).collect();
    let mut failures = 0;
    let rows = primes
        .iter()
        .zip(results)
        .map(|(&p, r)| match r {
            Ok(roots) => {
                let text = roots.iter().map(|(a, m)| format!("{a}:{m}")).collect::<Vec<_>>().join(" ");
                vec![p.to_string(), text, "true".into()]
            }
            Err(e) => {
                failures += 1;
                vec![p.to_string(), e.to_string(), "false".into()]
            }
        })
        .collect();
    Ok(Report { header: vec!["p", "roots", "all_double"], rows, failures })
}
