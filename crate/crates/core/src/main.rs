use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dilaton_discord::blackhole::DilatonParams;
use dilaton_discord::cli::{
    find_crossing, render_charts, render_state, sweep, write_charts, write_csv, CliError,
    SweepConfig,
};
use dilaton_discord::oracle::{oracle_report, VALIDATION_GRID};

/// Correlations of Dirac modes shared with an observer near a dilaton black hole.
#[derive(Debug, Parser)]
#[command(name = "dilaton-discord", version)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Black-hole mass M.
    #[arg(long, global = true, default_value_t = 1.0)]
    mass: f64,
    /// Mode frequency ω.
    #[arg(long, global = true, default_value_t = 1.0)]
    omega: f64,
    /// Right-mode weight q_R in [0, 1].
    #[arg(long, global = true, default_value_t = 1.0)]
    qr: f64,
    #[arg(long, global = true, default_value_t = 0.0)]
    alpha_min: f64,
    #[arg(long, global = true, default_value_t = 0.999)]
    alpha_max: f64,
    #[arg(long, global = true, default_value_t = 200)]
    steps: usize,
    /// Output file (sweep) or directory (plot); sweep writes to stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run the brute-force oracles and print their report.
    #[arg(long, global = true)]
    self_check: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate every correlation measure over the dilaton range as CSV.
    Sweep,
    /// Bisect for the dilaton where C(B|A) and C(A|B) cross.
    FindCrossing,
    /// Print the two-qubit detector state at one dilaton value.
    State {
        #[arg(long)]
        alpha: f64,
    },
    /// Emit the classical and quantum correlation charts as SVG.
    Plot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let config = SweepConfig {
        mass: cli.mass,
        omega: cli.omega,
        q_r: cli.qr,
        alpha_min: cli.alpha_min,
        alpha_max: cli.alpha_max,
        steps: cli.steps,
        output_path: cli.out.clone(),
    };

    if cli.self_check {
        self_check(&config)?;
    } else if cli.command.is_none() {
        return Err(CliError::Usage(
            "expected a subcommand (sweep, find-crossing, state, plot) or --self-check".into(),
        ));
    }

    match &cli.command {
        None => Ok(()),
        Some(Command::Sweep) => {
            let rows = sweep(&config)?;
            match &config.output_path {
                Some(path) => {
                    let io = |source| CliError::Io { path: path.clone(), source };
                    let file = File::create(path).map_err(io)?;
                    write_csv(&rows, BufWriter::new(file)).map_err(io)
                }
                None => write_csv(&rows, io::stdout().lock()).map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                }),
            }
        }
        Some(Command::FindCrossing) => {
            let alpha = find_crossing(&config)?;
            println!("{alpha:.5}");
            Ok(())
        }
        Some(Command::State { alpha }) => {
            let p = DilatonParams::real(cli.mass, *alpha, cli.omega, cli.qr)?;
            print!("{}", render_state(&p)?);
            Ok(())
        }
        Some(Command::Plot) => {
            let rows = sweep(&config)?;
            let dir = config.output_path.clone().unwrap_or_else(|| PathBuf::from("."));
            let (c, q) = write_charts(&render_charts(&rows), &dir)?;
            println!("{}\n{}", c.display(), q.display());
            Ok(())
        }
    }
}

fn self_check(config: &SweepConfig) -> Result<(), CliError> {
    config.validate()?;
    let points = 5;
    for k in 0..points {
        let alpha = config.alpha_min
            + (config.alpha_max - config.alpha_min) * k as f64 / (points - 1) as f64;
        let report = oracle_report(&config.params(alpha)?, VALIDATION_GRID)?;
        println!("self-check {report}");
    }
    Ok(())
}
