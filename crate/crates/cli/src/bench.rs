use std::time::Instant;

use anyhow::{bail, Result};
use pathsep::bounds::entropy_lower_bound;
use pathsep::{construct, generators, is_separator, Graph, Method};
use serde::Serialize;

pub const SUITES: &[&str] = &["trees", "complete", "hypercube", "general", "gnp", "all"];

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub method: Method,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub claimed_bound: usize,
    pub entropy_lb: Option<f64>,
    pub verified: bool,
    pub patched: usize,
    pub runtime_ms: u128,
}

fn instances(suite: &str) -> Result<Vec<(String, Graph, Method)>> {
    let mut out = Vec::new();
    let all = suite == "all";
    if all || suite == "trees" {
        for n in [8, 40, 200] {
            out.push((format!("tree-{n}"), generators::random_tree(n, n as u64), Method::Forest));
            out.push((format!("extremal-{n}"), generators::extremal_tree(n), Method::Forest));
        }
        out.push(("spider-5x4".into(), generators::spider(5, 4), Method::Forest));
    }
    if all || suite == "complete" {
        for n in [5, 8, 20, 40, 60] {
            out.push((format!("K{n}"), generators::complete(n), Method::Complete));
        }
    }
    if all || suite == "hypercube" {
        for d in 2..=8 {
            out.push((format!("Q{d}"), generators::hypercube(d), Method::Hypercube));
        }
    }
    if all || suite == "general" {
        out.push(("petersen".into(), generators::petersen(), Method::General));
        out.push(("K8".into(), generators::complete(8), Method::General));
        for (n, p) in [(50, 0.2), (150, 0.1), (300, 0.05), (300, 0.4)] {
            out.push((format!("gnp-{n}-{p}"), generators::gnp(n, p, 7), Method::General));
        }
    }
    if all || suite == "gnp" {
        for n in [100, 200] {
            let p = 4.0 * (n as f64).ln() / n as f64;
            out.push((format!("gnp-{n}-{p:.3}"), generators::gnp(n, p, 3), Method::Gnp));
        }
    }
    if out.is_empty() {
        bail!("unknown suite `{suite}`; expected one of {}", SUITES.join(", "));
    }
    Ok(out)
}

pub fn run(suite: &str, seed: u64) -> Result<Vec<BenchRow>> {
    instances(suite)?
        .into_iter()
        .map(|(instance, g, method)| {
            let start = Instant::now();
            let r = construct(&g, method, seed)?;
            let runtime_ms = start.elapsed().as_millis();
            let (n, m) = (g.vertex_count(), g.edge_count());
            Ok(BenchRow {
                instance,
                method: r.method,
                n,
                m,
                t: r.size(),
                claimed_bound: r.claimed_bound,
                entropy_lb: entropy_lower_bound::<f64>(n, m).ok().map(|b| b.entropy),
                verified: r.verified && is_separator(&g, &r.family)?,
                patched: r.patched,
                runtime_ms,
            })
        })
        .collect()
}

pub fn table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:<16} {:<10} {:>6} {:>7} {:>6} {:>8} {:>9} {:>8} {:>7} {:>8}\n",
        "instance", "method", "n", "m", "t", "bound", "entropy", "verified", "patched", "ms"
    );
    for r in rows {
        let lb = r.entropy_lb.map_or_else(|| "-".to_string(), |x| format!("{x:.2}"));
        out.push_str(&format!(
            "{:<16} {:<10} {:>6} {:>7} {:>6} {:>8} {:>9} {:>8} {:>7} {:>8}\n",
            r.instance, r.method, r.n, r.m, r.t, r.claimed_bound, lb, r.verified, r.patched, r.runtime_ms
        ));
    }
    out
}
