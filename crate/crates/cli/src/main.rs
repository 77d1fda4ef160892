//! `parityflow`: track circuits, print label timelines and rotation
//! reports, dump tableaus and check rotations against stabilizers.
//!
//! Exit codes: 0 on success, 1 when a violation is found under
//! `--fail-on-violation`, 2 on parse or usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use parityflow::circuit::{parse_circuit, render_labels, track};
use parityflow::{Circuit, TableauKind, Timeline};

#[derive(Parser)]
#[command(name = "parityflow", version, about = "Flow tracking for Clifford circuits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Track a circuit and print one report line per Pauli rotation.
    Track {
        file: PathBuf,
        /// Emit the full timeline as JSON instead of report lines.
        #[arg(long)]
        json: bool,
        /// Exit with code 1 if any rotation violates a stabilizer.
        #[arg(long)]
        fail_on_violation: bool,
    },
    /// Print the flow labels and the Clifford-phase header at a step.
    Labels {
        file: PathBuf,
        /// Snapshot index (number of Clifford gates applied); default final.
        #[arg(long)]
        step: Option<usize>,
    },
    /// Dump the tableau of the circuit's full Clifford content.
    Tableau {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Flow)]
        kind: Kind,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Flow,
    Clifford,
    Combined,
}

fn load(file: &PathBuf) -> Result<(Circuit, Timeline), String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    let circuit = parse_circuit(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let timeline = track(&circuit);
    Ok((circuit, timeline))
}

fn run() -> Result<ExitCode, String> {
    match Cli::parse().command {
        Command::Track {
            file,
            json,
            fail_on_violation,
        } => {
            let (_, timeline) = load(&file)?;
            if json {
                println!("{}", timeline.to_json());
            } else {
                for line in timeline.report_lines() {
                    println!("{line}");
                }
            }
            if fail_on_violation && timeline.any_violation() {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Labels { file, step } => {
            let (_, timeline) = load(&file)?;
            let step = step.unwrap_or(timeline.n_steps());
            match timeline.snapshot(step) {
                Some(ct) => {
                    print!("{}", render_labels(ct, timeline.names(), timeline.registry()));
                    Ok(ExitCode::SUCCESS)
                }
                None => Err(format!(
                    "step {step} out of range 0..={}",
                    timeline.n_steps()
                )),
            }
        }
        Command::Tableau { file, kind, json } => {
            let (_, timeline) = load(&file)?;
            let ct = timeline.final_state();
            let output = match kind {
                Kind::Flow => {
                    let t = ct.flow();
                    if json {
                        t.to_json().to_string()
                    } else {
                        t.to_string()
                    }
                }
                Kind::Clifford => {
                    let t = ct.flow().invert();
                    debug_assert_eq!(t.kind(), TableauKind::Clifford);
                    if json {
                        t.to_json().to_string()
                    } else {
                        t.to_string()
                    }
                }
                Kind::Combined => {
                    if json {
                        ct.to_json().to_string()
                    } else {
                        format!("{ct:?}")
                    }
                }
            };
            println!("{}", output.trim_end());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
