//! `gpl`: compute graph polynomials exactly, compare their distinctive
//! power over catalogs, run the stability transforms, evaluate term
//! programs, and execute the verification battery.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 guard exceeded.

use clap::{Args, Parser, Subcommand};
use gpl_core::equiv::{self, Scope};
use gpl_core::error::Error;
use gpl_core::graphs::{self, Graph};
use gpl_core::polys::basis::{self, Basis};
use gpl_core::roots::stability::{dense_roots_transform, recovery_coefficient};
use gpl_core::roots::{make_hurwitz, make_stable, recover_from_stable, sokalize, StableRewrite};
use gpl_core::soleval::{self, Structure};
use gpl_core::suites;
use gpl_core::zoo::{resolve_poly, GraphPolyDef};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gpl", version, about = "exact graph polynomial laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// graph6 string
    #[arg(long)]
    graph: Option<String>,
    /// edge list, e.g. "n=3;0-1,1-2,0-2"
    #[arg(long)]
    edges: Option<String>,
}

impl GraphInput {
    fn read(&self) -> Result<Graph, Error> {
        match (&self.graph, &self.edges) {
            (Some(g6), None) => graphs::parse_graph6(g6),
            (None, Some(spec)) => graphs::parse_edge_list(spec),
            _ => Err(Error::Parse(
                "provide exactly one of --graph or --edges".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a named polynomial on one graph
    Compute {
        /// polynomial name, e.g. chromatic, tutte, gen-ind:forest
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        input: GraphInput,
        /// emit the JSON form instead of canonical text
        #[arg(long)]
        json: bool,
        /// re-express a univariate result's coefficients in this basis
        /// (power, falling, rising, binomial)
        #[arg(long)]
        basis: Option<String>,
    },
    /// Compare two polynomials by distinctive power over a catalog
    Compare {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// catalog spec: "n<=K[,connected][,forest][,triangle-free][,bipartite]"
        #[arg(long)]
        catalog: String,
        /// dp (all pairs) or sdp (similar pairs only)
        #[arg(long, default_value = "dp")]
        mode: String,
    },
    /// List one representative per isomorphism class with exactly n vertices
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        forest: bool,
        #[arg(long = "triangle-free")]
        triangle_free: bool,
        #[arg(long)]
        bipartite: bool,
        /// g6 or jsonl
        #[arg(long, default_value = "g6")]
        format: String,
    },
    /// Evaluate a term program on one graph
    Soleval {
        /// path to a .sol file
        #[arg(long)]
        file: String,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Stability transforms with coefficient-recovery roundtrips
    Transform {
        #[arg(long)]
        stable: bool,
        #[arg(long)]
        hurwitz: bool,
        #[arg(long)]
        sokal: bool,
        #[arg(long)]
        dense: bool,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Run verification suites
    Verify {
        /// suite name or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute {
            poly,
            input,
            json,
            basis,
        } => {
            let def = resolve_poly(&poly)?;
            let g = input.read()?;
            let mut value = def.compute(&g)?;
            if let Some(b) = basis {
                let b = Basis::parse(&b)?;
                value = basis::convert(&value, Basis::Power, b)?;
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value.to_json()).unwrap()
                );
            } else {
                println!("{}", value.canonical_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare {
            left,
            right,
            catalog,
            mode,
        } => {
            let scope = match mode.as_str() {
                "dp" => Scope::Dp,
                "sdp" => Scope::Sdp,
                other => return Err(Error::Parse(format!("unknown mode `{other}`"))),
            };
            let l = resolve_poly(&left)?;
            let r = resolve_poly(&right)?;
            let graphs = parse_catalog_spec(&catalog)?;
            let verdict = equiv::compare(&l, &r, &graphs, &catalog, scope)?;
            println!("{}", serde_json::to_string_pretty(&verdict).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog {
            n,
            connected,
            forest,
            triangle_free,
            bipartite,
            format,
        } => {
            let filter = move |g: &Graph| {
                (!connected || g.is_connected())
                    && (!forest || g.is_forest())
                    && (!triangle_free || g.is_triangle_free())
                    && (!bipartite || g.is_bipartite())
            };
            let list = graphs::enumerate_catalog(n, Some(&filter))?;
            for g in &list {
                match format.as_str() {
                    "g6" => println!("{}", graphs::encode_graph6(g)?),
                    "jsonl" => {
                        let facts = g.analyze();
                        let line = serde_json::json!({
                            "g6": graphs::encode_graph6(g)?,
                            "facts": facts,
                        });
                        println!("{line}");
                    }
                    other => return Err(Error::Parse(format!("unknown format `{other}`"))),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Soleval { file, input } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Parse(format!("cannot read {file}: {e}")))?;
            let term = soleval::parse_term(&text)?;
            let g = input.read()?;
            let value = soleval::eval_term(&Structure::plain(g), &term)?;
            println!("{}", value.canonical_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform {
            stable,
            hurwitz,
            sokal,
            dense,
            poly,
            input,
        } => {
            let picked = [stable, hurwitz, sokal, dense]
                .iter()
                .filter(|&&b| b)
                .count();
            if picked != 1 {
                return Err(Error::Parse(
                    "pick exactly one of --stable, --hurwitz, --sokal, --dense".into(),
                ));
            }
            let def = resolve_poly(&poly)?;
            let g = input.read()?;
            let report = if stable {
                transform_stable(&def, &g)?
            } else if hurwitz {
                transform_hurwitz(&def, &g)?
            } else if sokal {
                transform_sokal(&def, &g)?
            } else {
                transform_dense(&def, &g)?
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, json } => {
            let results = if suite == "all" {
                suites::run_all()?
            } else {
                vec![suites::run_suite(&suite)?]
            };
            let mut failures = 0usize;
            if json {
                println!("{}", serde_json::to_string_pretty(&results).unwrap());
                failures = results.iter().map(|r| r.failed).sum();
            } else {
                for r in &results {
                    for c in &r.checks {
                        let tag = match c.status {
                            suites::Status::Pass => "PASS",
                            suites::Status::Fail => "FAIL",
                            suites::Status::Skipped => "SKIP",
                        };
                        println!(
                            "[{tag}] {}/{}: {}  [{}]",
                            r.suite, c.id, c.detail, c.reference
                        );
                    }
                    failures += r.failed;
                }
                let total: usize = results.iter().map(|r| r.checks.len()).sum();
                println!("{} checks, {} failures", total, failures);
            }
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn factor_texts(rw: &StableRewrite) -> Vec<String> {
    rw.factors.iter().map(|f| f.canonical_text()).collect()
}

fn transform_stable(def: &GraphPolyDef, g: &Graph) -> Result<serde_json::Value, Error> {
    let (rw, q) = make_stable(def, g, None)?;
    let digits = recover_from_stable(&q, &rw)?;
    let ok = digits == rw.coeffs;
    Ok(serde_json::json!({
        "kind": "stable",
        "poly": def.name,
        "slots": rw.big_m,
        "radix": rw.radix,
        "a0": rw.a0.to_string(),
        "factors": factor_texts(&rw),
        "recovered_digits": digits.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "roundtrip": if ok { "ok" } else { "mismatch" },
    }))
}

fn transform_hurwitz(def: &GraphPolyDef, g: &Graph) -> Result<serde_json::Value, Error> {
    let (rw, q) = make_hurwitz(def, g, None)?;
    let hook = recovery_coefficient(&q, &rw);
    let homogeneous = gpl_core::roots::stability::is_homogeneous(&q, rw.big_m as i32);
    Ok(serde_json::json!({
        "kind": "hurwitz",
        "poly": def.name,
        "slots": rw.big_m,
        "radix": rw.radix,
        "factors": factor_texts(&rw),
        "homogeneous": homogeneous,
        "recovery_coefficient": hook.canonical_text(),
    }))
}

fn transform_sokal(def: &GraphPolyDef, g: &Graph) -> Result<serde_json::Value, Error> {
    let rw = sokalize(def, g)?;
    let (srw, sq) = &rw.stable;
    let digits = recover_from_stable(sq, srw)?;
    let ok = digits == srw.coeffs;
    Ok(serde_json::json!({
        "kind": "sokal",
        "poly": def.name,
        "slots": srw.big_m,
        "a0": srw.a0.to_string(),
        "stable_factors": factor_texts(srw),
        "hurwitz_factors": factor_texts(&rw.hurwitz.0),
        "roundtrip": if ok { "ok" } else { "mismatch" },
    }))
}

fn transform_dense(def: &GraphPolyDef, g: &Graph) -> Result<serde_json::Value, Error> {
    let (q, d) = dense_roots_transform(def, g)?;
    let p = def.compute(g)?;
    let division_ok = q.div_exact(&d) == Some(p);
    Ok(serde_json::json!({
        "kind": "dense-roots",
        "poly": def.name,
        "divisor": d.canonical_text(),
        "product": q.canonical_text(),
        "division_check": if division_ok { "ok" } else { "mismatch" },
    }))
}

/// Parses "n<=K[,connected][,forest][,triangle-free][,bipartite]" into the
/// cumulative catalog with the filters applied.
fn parse_catalog_spec(spec: &str) -> Result<Vec<Graph>, Error> {
    let mut parts = spec.split(',').map(str::trim);
    let head = parts
        .next()
        .ok_or_else(|| Error::Parse("empty catalog spec".into()))?;
    let n: usize = head
        .strip_prefix("n<=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("catalog spec must start with n<=K, got `{head}`")))?;
    let mut connected = false;
    let mut forest = false;
    let mut triangle_free = false;
    let mut bipartite = false;
    for p in parts {
        match p {
            "connected" => connected = true,
            "forest" => forest = true,
            "triangle-free" => triangle_free = true,
            "bipartite" => bipartite = true,
            other => return Err(Error::Parse(format!("unknown catalog filter `{other}`"))),
        }
    }
    Ok(graphs::catalog_up_to(n)?
        .into_iter()
        .filter(|g| {
            (!connected || g.is_connected())
                && (!forest || g.is_forest())
                && (!triangle_free || g.is_triangle_free())
                && (!bipartite || g.is_bipartite())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_spec_parsing() {
        assert_eq!(parse_catalog_spec("n<=3").unwrap().len(), 8);
        let connected = parse_catalog_spec("n<=3,connected").unwrap();
        assert!(connected.iter().all(|g| g.is_connected()));
        assert!(parse_catalog_spec("k<=3").is_err());
        assert!(parse_catalog_spec("n<=3,smooth").is_err());
    }

    #[test]
    fn graph_input_exclusive() {
        let i = GraphInput {
            graph: Some("A_".into()),
            edges: Some("0-1".into()),
        };
        assert!(i.read().is_err());
    }
}
