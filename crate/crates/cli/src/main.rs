//! Command-line front end: generate graphs, build and check path
//! separators, evaluate bounds, solve tiny instances exactly and simulate
//! fault localization.

mod bench;
mod gen;

use std::fmt::Display;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use pathsep::bounds::entropy_lower_bound;
use pathsep::faultsim::{decode_intersection, decode_signature, observe};
use pathsep::io::{emit_family, emit_graph, parse_family, parse_graph, write_atomic};
use pathsep::{
    campaign, check_separator, construct, exact_psn, BoundsReport, EdgeId, Graph, Method, PathFamily,
    SignatureTable,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "pathsep", version, about = "Path separators for graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph.
    Gen {
        /// One of path, star, cycle, complete, bipartite, hypercube,
        /// petersen, spider, gnp, tree, forest, extremal.
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a separator. Without `-o` the family goes to standard output
    /// and the report to standard error.
    Construct {
        graph: PathBuf,
        #[arg(long, default_value = "auto")]
        method: Method,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a family; exits with status 0 exactly when it separates.
    Verify {
        graph: PathBuf,
        family: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Every bound that applies to a graph.
    Bounds {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Minimum separator size with a witness, for tiny graphs.
    Exact {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Fault injection campaign, or a single scenario with `--fail`.
    Simulate {
        graph: PathBuf,
        family: PathBuf,
        /// Number of sampled faults; 0 fails every edge once.
        #[arg(long, default_value_t = 0)]
        trials: usize,
        /// Fail one edge (by index) or `none`.
        #[arg(long)]
        fail: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Size against bound over a built-in corpus: trees, complete,
    /// hypercube, general, gnp or all.
    Bench {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Machine report of `construct`.
#[derive(Debug, Serialize)]
struct ConstructReport {
    method: Method,
    n: usize,
    m: usize,
    /// Family size.
    t: usize,
    claimed_bound: usize,
    /// Absent when `m < n` or `n < 2`.
    entropy_lb: Option<f64>,
    verified: bool,
    retries: usize,
    patched: usize,
    seed: u64,
    runtime_ms: u128,
}

fn read_graph(path: &FsPath) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_family(g: &Graph, path: &FsPath) -> Result<PathFamily> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_family(g, &text).with_context(|| format!("parsing {}", path.display()))
}

fn write_or_print(output: Option<&FsPath>, contents: &str) -> Result<()> {
    match output {
        Some(path) => write_atomic(path, contents).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Two-column table of labelled values.
fn kv(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn opt<T: Display>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { family, params, seed, output } => {
            let g = gen::generate(&family, &params, seed)?;
            write_or_print(output.as_deref(), &emit_graph(&g))?;
        }
        Command::Construct { graph, method, seed, output, json } => {
            let g = read_graph(&graph)?;
            let start = Instant::now();
            let r = construct(&g, method, seed)?;
            let (n, m) = (g.vertex_count(), g.edge_count());
            let report = ConstructReport {
                method: r.method,
                n,
                m,
                t: r.size(),
                claimed_bound: r.claimed_bound,
                entropy_lb: entropy_lower_bound::<f64>(n, m).ok().map(|b| b.entropy),
                verified: r.verified,
                retries: r.retries,
                patched: r.patched,
                seed,
                runtime_ms: start.elapsed().as_millis(),
            };
            write_or_print(output.as_deref(), &emit_family(&r.family))?;
            let text = if json {
                to_json(&report)?
            } else {
                kv(&[
                    ("method", report.method.to_string()),
                    ("n", n.to_string()),
                    ("m", m.to_string()),
                    ("t", report.t.to_string()),
                    ("claimed_bound", report.claimed_bound.to_string()),
                    ("entropy_lb", report.entropy_lb.map_or_else(|| "-".into(), |x| format!("{x:.4}"))),
                    ("verified", report.verified.to_string()),
                    ("retries", report.retries.to_string()),
                    ("patched", report.patched.to_string()),
                    ("seed", seed.to_string()),
                    ("runtime_ms", report.runtime_ms.to_string()),
                ])
            };
            if output.is_some() {
                print!("{text}");
            } else {
                eprint!("{text}");
            }
            if !report.verified {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify { graph, family, json } => {
            let g = read_graph(&graph)?;
            let fam = read_family(&g, &family)?;
            let report = check_separator(&g, &fam)?;
            if json {
                print!("{}", to_json(&report)?);
            } else {
                print!(
                    "{}",
                    kv(&[
                        ("edges", report.edge_count.to_string()),
                        ("paths", report.family_size.to_string()),
                        ("separator", report.is_separator.to_string()),
                        ("test set", report.is_test_set.to_string()),
                        ("uncovered edges", report.uncovered_edges.len().to_string()),
                        ("unseparated pairs", report.unseparated_pairs.len().to_string()),
                    ])
                );
                for p in report.unseparated_pairs.iter().take(10) {
                    let (a, b) = (g.endpoints(p.e), g.endpoints(p.f));
                    println!("  e{} {:?} / e{} {:?}: {:?}", p.e.0, a, p.f.0, b, p.containment);
                }
            }
            if !report.is_separator {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bounds { graph, json } => {
            let g = read_graph(&graph)?;
            let b = BoundsReport::for_graph(&g);
            if json {
                print!("{}", to_json(&b)?);
            } else {
                let f = |x: Option<f64>| x.map_or_else(|| "-".into(), |v| format!("{v:.4}"));
                print!(
                    "{}",
                    kv(&[
                        ("n", b.n.to_string()),
                        ("m", b.m.to_string()),
                        ("entropy lower", f(b.entropy_lb)),
                        ("log-form lower", f(b.log_form_lb)),
                        ("log-form chain lower", f(b.log_form_chain_lb)),
                        ("information lower", b.info_lb.to_string()),
                        ("general upper", opt(b.upper_general)),
                        ("3n log2 n cap", f(b.upper_cap)),
                        ("tree exact", opt(b.tree_exact)),
                        ("tree minimum lower", opt(b.mintree_lb)),
                        ("hypercube lower", f(b.hypercube_lb)),
                        ("hypercube upper", opt(b.hypercube_ub)),
                        ("bipartite lower", f(b.bipartite_lb)),
                    ])
                );
            }
        }
        Command::Exact { graph, json } => {
            let g = read_graph(&graph)?;
            let s = exact_psn(&g)?;
            if json {
                let paths: Vec<&[usize]> = s.family.iter().map(|p| p.vertices()).collect();
                print!("{}", to_json(&serde_json::json!({ "psn": s.value, "witness": paths }))?);
            } else {
                println!("psn {}", s.value);
                print!("{}", emit_family(&s.family));
            }
        }
        Command::Simulate { graph, family, trials, fail, seed, json } => {
            let g = read_graph(&graph)?;
            let fam = read_family(&g, &family)?;
            match fail {
                Some(which) => {
                    let failed = match which.as_str() {
                        "none" => None,
                        e => {
                            let e: usize = e.parse().with_context(|| format!("`{e}` is neither an edge index nor `none`"))?;
                            if e >= g.edge_count() {
                                bail!("edge {e} out of range (graph has {} edges)", g.edge_count());
                            }
                            Some(EdgeId(e))
                        }
                    };
                    let table = SignatureTable::build(&g, &fam)?;
                    let failing = observe(&table, failed);
                    let sig = decode_signature(&table, &failing);
                    let inter = decode_intersection(&table, &failing);
                    if json {
                        let v = serde_json::json!({
                            "failed": failed,
                            "failing_tests": failing,
                            "signature": sig,
                            "intersection": inter,
                        });
                        print!("{}", to_json(&v)?);
                    } else {
                        print!(
                            "{}",
                            kv(&[
                                ("failed", opt(failed.map(|e| e.0))),
                                ("failing tests", format!("{failing:?}")),
                                ("signature decode", format!("{sig:?}")),
                                ("intersection decode", format!("{inter:?}")),
                            ])
                        );
                    }
                }
                None => {
                    let r = campaign(&g, &fam, trials, seed)?;
                    if json {
                        print!("{}", to_json(&r)?);
                    } else {
                        let score = |s: &pathsep::faultsim::DecoderScore| {
                            format!(
                                "rate {:.4}: identified {}, ambiguous {}, inconsistent {}, missed {}",
                                s.identification_rate, s.identified, s.ambiguous, s.inconsistent, s.missed
                            )
                        };
                        print!(
                            "{}",
                            kv(&[
                                ("edges", r.edge_count.to_string()),
                                ("tests", r.family_size.to_string()),
                                ("information lower", r.info_lb.to_string()),
                                ("scenarios", format!("{}{}", r.fault_scenarios, if r.exhaustive { " (exhaustive)" } else { "" })),
                                ("no-fault detected", r.no_fault_detected.to_string()),
                                ("signature decode", score(&r.signature)),
                                ("intersection decode", score(&r.intersection)),
                                (
                                    "tests per edge",
                                    format!("min {} mean {:.2} max {}", r.tests_per_edge_min, r.tests_per_edge_mean, r.tests_per_edge_max),
                                ),
                            ])
                        );
                    }
                }
            }
        }
        Command::Bench { suite, seed, json } => {
            let rows = bench::run(&suite, seed)?;
            if json {
                print!("{}", to_json(&rows)?);
            } else {
                print!("{}", bench::table(&rows));
            }
            if rows.iter().any(|r| !r.verified) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
