use anyhow::{bail, Context, Result};
use pathsep::generators;
use pathsep::Graph;

/// Families accepted by `gen`, with their parameter names.
pub const FAMILIES: &[(&str, &[&str])] = &[
    ("path", &["k"]),
    ("star", &["k"]),
    ("cycle", &["k"]),
    ("complete", &["n"]),
    ("bipartite", &["a", "b"]),
    ("hypercube", &["d"]),
    ("petersen", &[]),
    ("spider", &["legs", "leg_len"]),
    ("gnp", &["n", "p"]),
    ("tree", &["n"]),
    ("forest", &["n", "keep"]),
    ("extremal", &["n"]),
];

fn usage(family: &str) -> String {
    match FAMILIES.iter().find(|(name, _)| *name == family) {
        Some((name, [])) => format!("`{name}` takes no parameters"),
        Some((name, params)) => format!("usage: gen {name} {}", params.join(" ")),
        None => {
            let names: Vec<&str> = FAMILIES.iter().map(|(n, _)| *n).collect();
            format!("unknown family `{family}`; expected one of {}", names.join(", "))
        }
    }
}

fn int(s: &str) -> Result<usize> {
    s.parse().with_context(|| format!("`{s}` is not a non-negative integer"))
}

fn prob(s: &str) -> Result<f64> {
    let p: f64 = s.parse().with_context(|| format!("`{s}` is not a number"))?;
    if !(0.0..=1.0).contains(&p) {
        bail!("probability {p} is outside [0, 1]");
    }
    Ok(p)
}

pub fn generate(family: &str, params: &[String], seed: u64) -> Result<Graph> {
    let p: Vec<&str> = params.iter().map(String::as_str).collect();
    let g = match (family, p.as_slice()) {
        ("path", [k]) => generators::path(int(k)?),
        ("star", [k]) => generators::star(int(k)?),
        ("cycle", [k]) => {
            let k = int(k)?;
            if k < 3 {
                bail!("a cycle needs at least 3 vertices");
            }
            generators::cycle(k)
        }
        ("complete", [n]) => generators::complete(int(n)?),
        ("bipartite", [a, b]) => generators::complete_bipartite(int(a)?, int(b)?),
        ("hypercube", [d]) => {
            let d = int(d)?;
            if d > 20 {
                bail!("hypercube dimension {d} is too large");
            }
            generators::hypercube(d)
        }
        ("petersen", []) => generators::petersen(),
        ("spider", [legs, len]) => generators::spider(int(legs)?, int(len)?),
        ("gnp", [n, pr]) => generators::gnp(int(n)?, prob(pr)?, seed),
        ("tree", [n]) => generators::random_tree(int(n)?, seed),
        ("forest", [n, keep]) => generators::random_forest(int(n)?, prob(keep)?, seed),
        ("extremal", [n]) => generators::extremal_tree(int(n)?),
        _ => bail!(usage(family)),
    };
    Ok(g)
}
