use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use scissors::cli::{self, Options, Report};

#[derive(Parser)]
#[command(name = "scissors", version, about = "Exact scissors-automorphism traces and K0 computations")]
struct Args {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on the precision used to decide signs.
    #[arg(long, global = true, value_name = "n")]
    precision_bits: Option<u32>,
    #[arg(long, global = true, value_name = "n", default_value_t = 1)]
    seed: u64,
    /// Composition length up to which category files are checked.
    #[arg(long, global = true, value_name = "n", default_value_t = scissors::covercat::DEFAULT_CLOSURE_BOUND)]
    bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check both placements of a scenario.
    Verify { file: PathBuf },
    /// Trace chain and homology class of a scenario.
    Trace {
        file: PathBuf,
        #[arg(long)]
        measure: Option<String>,
    },
    /// K0 of a finite covering category.
    K0 { file: PathBuf },
    /// Additivity and invariance of a measure.
    CheckMeasure {
        file: PathBuf,
        #[arg(long)]
        measure: Option<String>,
    },
    /// Draw a scenario as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the acceptance criteria.
    Selftest,
}

fn read(path: &PathBuf) -> Result<String, Report> {
    std::fs::read_to_string(path)
        .map_err(|e| Report::from_error(&cli::CliError::Parse(format!("{}: {e}", path.display()))))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut opts = Options {
        json: args.json,
        precision_bits: args.precision_bits,
        seed: args.seed,
        bound: args.bound,
        measure: None,
    };
    // render without -o writes the SVG to stdout and the report to stderr
    let mut svg_out = None;
    let report = match args.command {
        Command::Verify { file } => read(&file).map(|t| cli::verify(&t, &opts)),
        Command::Trace { file, measure } => {
            opts.measure = measure;
            read(&file).map(|t| cli::trace(&t, &opts))
        }
        Command::K0 { file } => read(&file).map(|t| cli::k0_command(&t, &opts)),
        Command::CheckMeasure { file, measure } => {
            opts.measure = measure;
            read(&file).map(|t| cli::check_measure(&t, &opts))
        }
        Command::Render { file, output } => read(&file).and_then(|t| cli::render(&t, &opts)).and_then(|(report, svg)| {
            match output {
                Some(path) => std::fs::write(&path, svg)
                    .map(|_| report)
                    .map_err(|e| Report::from_error(&cli::CliError::Parse(format!("{}: {e}", path.display())))),
                None => {
                    svg_out = Some(svg);
                    Ok(report)
                }
            }
        }),
        Command::Selftest => Ok(cli::selftest(&opts)),
    };
    let report = report.unwrap_or_else(|r| r);
    let out = report.output(opts.json);
    match svg_out {
        Some(svg) => {
            print!("{svg}");
            eprint!("{out}");
        }
        None if report.code == 0 => print!("{out}"),
        None => eprint!("{out}"),
    }
    ExitCode::from(report.code)
}
