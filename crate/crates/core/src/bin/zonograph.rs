use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use zonohedra::geometry::parse_rational;
use zonohedra::io::{emit_graph, emit_off, parse_graph, parse_off, precision_from_env};
use zonohedra::realize::{realize_with, ScaleSchedule};
use zonohedra::recognize::{recognize, Report};
use zonohedra::reduce::reduce_to_cube;
use zonohedra::{build_zonotope, graph_of, verify_zonohedron, GeneratorSet, Rational, StatsReport};

/// Recognize, realize and generate zonohedral graphs.
#[derive(Parser)]
#[command(name = "zonograph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is zonohedral and print the JSON report.
    Recognize { graph: PathBuf },
    /// Build a convex zonohedron with the given graph.
    Realize {
        graph: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Edge scale of the base cube and every added zone.
        #[arg(long, default_value = "1", value_parser = scale_arg)]
        scale: Rational,
        /// Comma-separated scales of the added zones, in order of addition.
        #[arg(long, value_delimiter = ',', value_parser = scale_arg)]
        zone_scales: Vec<Rational>,
        /// Write the reduction trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Write the graph of a random zonotope with `m` generators.
    Generate {
        #[arg(short)]
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        off: Option<PathBuf>,
    },
    /// Print counts and zone statistics of an accepted graph.
    Stats { graph: PathBuf },
    /// Check that an OFF mesh is a convex zonohedron.
    Verify { mesh: PathBuf },
}

fn scale_arg(s: &str) -> Result<Rational, String> {
    match parse_rational(s) {
        Some(r) if r > Rational::from_integer(0.into()) => Ok(r),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

/// Failure kinds, mapped to exit codes 1 and 2.
enum Failure {
    Rejected(String),
    Input(String),
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn load_graph(path: &Path) -> Result<zonohedra::RotationGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Recognize { graph } => {
            let result = recognize(&load_graph(&graph)?);
            println!("{}", Report::new(&result).to_json());
            match result {
                Ok(_) => Ok(()),
                Err(r) => Err(Failure::Rejected(format!(
                    "rejected: {}",
                    r.reason.as_str()
                ))),
            }
        }
        Command::Realize {
            graph,
            output,
            scale,
            zone_scales,
            trace,
        } => {
            let g = load_graph(&graph)?;
            let cert = recognize(&g).map_err(|r| {
                println!("{}", Report::new(&Err(r.clone())).to_json());
                Failure::Rejected(format!("rejected: {}", r.reason.as_str()))
            })?;
            let steps = reduce_to_cube(&g, &cert).map_err(|e| Failure::Rejected(e.to_string()))?;
            let schedule = ScaleSchedule {
                cube: scale.clone(),
                zones: zone_scales,
                default: scale,
            };
            let r = realize_with(&g, &cert, &steps, &schedule)
                .map_err(|e| Failure::Rejected(e.to_string()))?;
            write(
                &output,
                &emit_off(&r.polyhedron, precision_from_env().map_err(input)?),
            )?;
            if let Some(path) = trace {
                write(&path, &serde_json::to_string_pretty(&steps).map_err(input)?)?;
            }
            println!(
                "{}",
                json!({
                    "vertices": r.polyhedron.vertex_count(),
                    "faces": r.polyhedron.face_count(),
                    "zones": r.generators.len(),
                })
            );
            Ok(())
        }
        Command::Generate {
            m,
            seed,
            output,
            off,
        } => {
            let gs = GeneratorSet::random(m, seed).map_err(input)?;
            let p = build_zonotope(&gs).map_err(input)?;
            let g = graph_of(&p).map_err(input)?;
            write(&output, &emit_graph(&g))?;
            if let Some(path) = off {
                write(&path, &emit_off(&p, precision_from_env().map_err(input)?))?;
            }
            println!(
                "{}",
                json!({ "n": g.vertex_count(), "m": m, "generators": gs.generators })
            );
            Ok(())
        }
        Command::Stats { graph } => {
            let g = load_graph(&graph)?;
            match recognize(&g) {
                Ok(cert) => {
                    let s = StatsReport::new(&g, &cert);
                    println!("{}", serde_json::to_string(&s).map_err(input)?);
                    Ok(())
                }
                Err(r) => {
                    println!("{}", Report::new(&Err(r.clone())).to_json());
                    Err(Failure::Rejected(format!(
                        "rejected: {}",
                        r.reason.as_str()
                    )))
                }
            }
        }
        Command::Verify { mesh } => {
            let p = parse_off(&read(&mesh)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", mesh.display())))?;
            let report = verify_zonohedron(&p);
            println!("{}", serde_json::to_string(&report).map_err(input)?);
            if report.is_clean() {
                Ok(())
            } else {
                Err(Failure::Rejected(format!(
                    "{} violations",
                    report.violations.len()
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
