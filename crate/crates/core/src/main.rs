use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use massdim::experiments::{plot_data, render_report, render_verdict};
use massdim::{
    brute_force_report, compare_reports, detect_limit, information_dimension,
    information_dimension_in, render_table, run_convergence_in, Family, LogBase, MassDocument,
    OutputFormat, DEFAULT_TOLERANCE,
};

const EXIT_INPUT: u8 = 2;
const EXIT_ORACLE: u8 = 3;
const ORACLE_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "massdim",
    version,
    about = "Information fractal dimension of mass functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the dimension report of a mass function stored as JSON.
    Compute {
        file: PathBuf,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        #[arg(long, default_value_t = 4)]
        decimals: usize,
        /// Logarithm base for entropy and split scale: 2, e or 10.
        #[arg(long, default_value = "2")]
        base: LogBase,
        /// Cross-check against brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Sweep a mass-function family over frame sizes n_min..=n_max.
    Sweep {
        family: String,
        n_min: usize,
        n_max: usize,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        #[arg(long, default_value_t = 4)]
        decimals: usize,
        #[arg(long, default_value = "2")]
        base: LogBase,
        /// Append a convergence verdict for the trailing WINDOW rows.
        #[arg(long, num_args = 2, value_names = ["TOL", "WINDOW"])]
        detect_limit: Option<Vec<String>>,
        /// Write (split scale, entropy, N) columns for plotting.
        #[arg(long)]
        plot_data: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Oracle(String),
    Io(String),
}

impl From<massdim::Error> for Failure {
    fn from(err: massdim::Error) -> Self {
        Failure::Input(err.to_string())
    }
}

fn compute(
    file: PathBuf,
    format: OutputFormat,
    decimals: usize,
    base: LogBase,
    oracle: bool,
) -> Result<String, Failure> {
    let text = fs::read_to_string(&file)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", file.display())))?;
    let mass = MassDocument::from_json(&text)?.to_mass(DEFAULT_TOLERANCE)?;
    if oracle {
        let expected = brute_force_report(&mass)?;
        let actual = information_dimension(&mass);
        if !compare_reports(&actual, &expected, ORACLE_TOLERANCE) {
            return Err(Failure::Oracle(format!(
                "oracle mismatch: main path {actual:?}, enumeration {expected:?}"
            )));
        }
    }
    let report = information_dimension_in(&mass, base);
    Ok(render_report(&report, format, decimals)?)
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    family: &str,
    n_min: usize,
    n_max: usize,
    format: OutputFormat,
    decimals: usize,
    base: LogBase,
    detect: Option<Vec<String>>,
    plot: Option<PathBuf>,
) -> Result<String, Failure> {
    let family: Family = family.parse()?;
    let detect = detect
        .map(|args| {
            let tol: f64 = args[0]
                .parse()
                .map_err(|_| Failure::Input(format!("invalid tolerance `{}`", args[0])))?;
            let window: usize = args[1]
                .parse()
                .map_err(|_| Failure::Input(format!("invalid window `{}`", args[1])))?;
            Ok::<_, Failure>((tol, window))
        })
        .transpose()?;
    let table = run_convergence_in(family, n_min, n_max, base)?;
    let mut out = render_table(&table, format, decimals)?;
    if let Some((tol, window)) = detect {
        let verdict = detect_limit(&table, window, tol)?;
        out.push_str(&render_verdict(&verdict, decimals));
        out.push('\n');
    }
    if let Some(path) = plot {
        fs::write(&path, plot_data(&table))
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute {
            file,
            format,
            decimals,
            base,
            oracle,
        } => compute(file, format, decimals, base, oracle),
        Command::Sweep {
            family,
            n_min,
            n_max,
            format,
            decimals,
            base,
            detect_limit,
            plot_data,
        } => sweep(
            &family,
            n_min,
            n_max,
            format,
            decimals,
            base,
            detect_limit,
            plot_data,
        ),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Oracle(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ORACLE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
