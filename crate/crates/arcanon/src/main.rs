use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use arcanon::candidates::all_candidates;
use arcanon::canonizer::{canonical_representation, isomorphic, recognize, Verdict, DEFAULT_K_MAX};
use arcanon::error::Error;
use arcanon::graph::{Graph, Vertex};
use arcanon::graphfile::{parse_graph, write_graph};
use arcanon::intersection::{flip_matrix, neighborhood_matrix};
use arcanon::interval::realize_interval;
use arcanon::model::{graph_of_model, model_string_relabel};
use arcanon::oracle::{
    oracle_flip_sets, oracle_is_ca, oracle_normalized_models, random_model, DEFAULT_LIMIT,
};
use arcanon::svg::render_svg;

#[derive(Parser)]
#[command(name = "arcanon", version, about = "Canonical circular-arc representations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the graph is a circular-arc graph.
    Recognize {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: usize,
    },
    /// Print the canonical token string and the vertex-to-arc mapping.
    Canon {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: usize,
    },
    /// Decide isomorphism of two circular-arc graphs.
    Iso {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: usize,
    },
    /// List candidate vertex sets with provenance and flip verdicts.
    Candidates {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: usize,
    },
    /// Run a brute-force ground-truth query.
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: OracleMode,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Emit a random circular-arc graph as a graph file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Write an SVG drawing of a computed representation.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Ca,
    Flipsets,
    Normalized,
}

fn load(path: &PathBuf) -> Result<Graph, u8> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        2u8
    })?;
    parse_graph(&text).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        2u8
    })
}

fn fail(e: Error) -> u8 {
    eprintln!("{e}");
    match e {
        Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

fn fmt_set(s: &BTreeSet<Vertex>) -> String {
    let inner: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn run() -> Result<u8, u8> {
    match Cli::parse().cmd {
        Cmd::Recognize { file, kmax } => {
            let g = load(&file)?;
            if recognize(&g, kmax).map_err(fail)? {
                println!("CA");
                Ok(0)
            } else {
                println!("NOT-CA");
                Ok(1)
            }
        }
        Cmd::Canon { file, kmax } => {
            let g = load(&file)?;
            let out = canonical_representation(&g, kmax).map_err(fail)?;
            let Some((s, rep)) = out.canonical else {
                eprintln!("NOT-CA");
                return Ok(1);
            };
            println!("{s}");
            let emission: BTreeMap<u32, u64> = g
                .vertices()
                .map(|v| (rep.arc(v), out.record.emission_color(v)))
                .collect();
            let (_, relabel) = model_string_relabel(&rep.model, Some(&emission));
            let mapping: Vec<String> = g
                .vertices()
                .map(|v| format!("v{v}={}", relabel[&rep.arc(v)]))
                .collect();
            println!("{}", mapping.join(" "));
            Ok(0)
        }
        Cmd::Iso { file_a, file_b, kmax } => {
            let a = load(&file_a)?;
            let b = load(&file_b)?;
            if isomorphic(&a, &b, kmax).map_err(fail)? {
                println!("ISO");
                Ok(0)
            } else {
                println!("NON-ISO");
                Ok(1)
            }
        }
        Cmd::Candidates { file, kmax } => {
            let g = load(&file)?;
            let (reduced, _) = g.reduce();
            let lambda = neighborhood_matrix(&reduced);
            for cand in all_candidates(&reduced, kmax).map_err(fail)? {
                let flipped = flip_matrix(&lambda, &cand.vertices).map_err(fail)?;
                let verdict = if realize_interval(&flipped).is_some() {
                    "FLIP"
                } else {
                    "NON-FLIP"
                };
                println!(
                    "{} {} {verdict}",
                    fmt_set(&cand.vertices),
                    cand.provenance.tag()
                );
            }
            Ok(0)
        }
        Cmd::Oracle { file, mode, limit } => {
            let g = load(&file)?;
            match mode {
                OracleMode::Ca => {
                    if oracle_is_ca(&g, limit).map_err(fail)? {
                        println!("CA");
                        Ok(0)
                    } else {
                        println!("NOT-CA");
                        Ok(1)
                    }
                }
                OracleMode::Flipsets => {
                    for s in oracle_flip_sets(&g, limit).map_err(fail)? {
                        println!("{}", fmt_set(&s));
                    }
                    Ok(0)
                }
                OracleMode::Normalized => {
                    for rep in oracle_normalized_models(&g, limit).map_err(fail)? {
                        let line: Vec<String> = rep
                            .model
                            .events()
                            .iter()
                            .map(|e| {
                                let side = match e.side {
                                    arcanon::model::Side::L => 'l',
                                    arcanon::model::Side::R => 'r',
                                };
                                format!("{side}{}", e.arc)
                            })
                            .collect();
                        println!("{}", line.join(" "));
                    }
                    Ok(0)
                }
            }
        }
        Cmd::Gen { n, seed } => {
            if n == 0 {
                eprintln!("--n must be at least 1");
                return Ok(2);
            }
            let model = random_model(n, seed);
            let rep = arcanon::model::Representation::identity(model);
            print!("{}", write_graph(&graph_of_model(&rep)));
            Ok(0)
        }
        Cmd::Render { file, out, kmax } => {
            let g = load(&file)?;
            let outcome = canonical_representation(&g, kmax).map_err(fail)?;
            if outcome.verdict == Verdict::NotCircularArc {
                eprintln!("NOT-CA");
                return Ok(1);
            }
            let (_, rep) = outcome.canonical.unwrap();
            std::fs::write(&out, render_svg(&rep)).map_err(|e| {
                eprintln!("{}: {e}", out.display());
                2u8
            })?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) | Err(code) => ExitCode::from(code),
    }
}
