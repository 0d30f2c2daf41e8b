//! Command-line front end. All work happens in `spinphase::commands`; this
//! file only parses arguments, converts angles and writes the output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use spinphase::commands::{
    self, exit_code_for, BellSpec, EvolveSpec, MonogamySpec, Outcome, OutputFormat, Report,
    SweepSpec, Tabular, ThreeSpinSpec, VerifySpec, EXIT_USAGE,
};
use spinphase::geometric::{PairPhases, SinglePhases};
use spinphase::{Result, C64};

#[derive(Parser)]
#[command(name = "spinphase", version, about = "Berry phases and concurrence of spin-1/2 pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// csv, json or pretty
    #[arg(long = "out", global = true, default_value = "pretty")]
    format: OutputFormat,
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    output_path: Option<PathBuf>,
    /// Interpret angle arguments in degrees
    #[arg(long, global = true)]
    degrees: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Berry phase and concurrence across a grid of field tilts
    Sweep {
        #[arg(long, default_value_t = 0.0)]
        phi_min: f64,
        #[arg(long, default_value_t = std::f64::consts::PI)]
        phi_max: f64,
        #[arg(long, default_value_t = 64)]
        points: usize,
        #[arg(long, default_value_t = 10_000)]
        wilson_samples: usize,
        #[arg(long, default_value_t = 500.0)]
        ratio: f64,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
    },
    /// Run the invariant suite
    Verify {
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        /// Trials per randomized check (0 skips them)
        #[arg(long, default_value_t = 50)]
        seeds: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Propagate the up eigenstate over one period and split its phase
    Evolve {
        #[arg(long)]
        phi: f64,
        #[arg(long, default_value_t = 500.0)]
        ratio: f64,
        #[arg(long, default_value_t = 200_000)]
        steps: usize,
    },
    /// Phase matrix of the cyclically evolved Bell states
    Bell {
        #[arg(long, allow_hyphen_values = true)]
        gamma_plus: f64,
    },
    /// Compose a three-spin phase from pair and single-spin phases
    ThreeSpin {
        /// Real parts of a1,a2,a3
        #[arg(long, value_parser = triple, allow_hyphen_values = true)]
        amplitudes: [f64; 3],
        /// Imaginary parts of a1,a2,a3
        #[arg(long, value_parser = triple, allow_hyphen_values = true)]
        amplitudes_im: Option<[f64; 3]>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gamma_ab: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gamma_bc: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gamma_ca: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gamma_a: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gamma_b: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gamma_c: f64,
    },
    /// Report the pairwise sharing bound for n spins
    Monogamy {
        #[arg(long)]
        c12: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c1_rest: Option<f64>,
    },
}

/// Parses `x,y,z` into three reals.
fn triple(s: &str) -> std::result::Result<[f64; 3], String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected 3 comma-separated values, got {}", v.len()))
}

fn emit<S, R, M>(report: Result<Report<S, R, M>>, out: &OutputArgs) -> ExitCode
where
    S: Serialize,
    R: Serialize + Tabular,
    M: Serialize + Outcome,
{
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code_for(&e) as u8);
        }
    };
    let text = report.render(out.format);
    match &out.output_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let angle = |x: f64| if cli.output.degrees { x.to_radians() } else { x };
    let out = &cli.output;
    match cli.command {
        Command::Sweep {
            phi_min,
            phi_max,
            points,
            wilson_samples,
            ratio,
            tolerance,
        } => {
            let spec = SweepSpec {
                phi_min: angle(phi_min),
                phi_max: if out.degrees { phi_max.to_radians().min(std::f64::consts::PI) } else { phi_max },
                points,
                wilson_samples,
                ratio,
                tolerance,
            };
            emit(commands::sweep(&spec), out)
        }
        Command::Verify { tolerance, seeds, seed } => {
            emit(commands::verify(&VerifySpec { tolerance, seeds, seed }), out)
        }
        Command::Evolve { phi, ratio, steps } => {
            let phi = if out.degrees { phi.to_radians().min(std::f64::consts::PI) } else { phi };
            emit(commands::evolve(&EvolveSpec { phi, ratio, steps }), out)
        }
        Command::Bell { gamma_plus } => emit(
            commands::bell(&BellSpec {
                gamma_plus: angle(gamma_plus),
            }),
            out,
        ),
        Command::ThreeSpin {
            amplitudes,
            amplitudes_im,
            gamma_ab,
            gamma_bc,
            gamma_ca,
            gamma_a,
            gamma_b,
            gamma_c,
        } => {
            let im = amplitudes_im.unwrap_or([0.0; 3]);
            let a = [0, 1, 2].map(|k| C64::new(amplitudes[k], im[k]));
            let spec = ThreeSpinSpec {
                amplitudes: a,
                pairs: PairPhases {
                    ab: angle(gamma_ab),
                    bc: angle(gamma_bc),
                    ca: angle(gamma_ca),
                },
                singles: SinglePhases {
                    a: angle(gamma_a),
                    b: angle(gamma_b),
                    c: angle(gamma_c),
                },
            };
            emit(commands::three_spin(&spec), out)
        }
        Command::Monogamy { c12, n, c1_rest } => {
            emit(commands::monogamy(&MonogamySpec { c12, n, c1_rest }), out)
        }
    }
}
