use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use linkage_betti::commands::EXACT_WARN_N;
use linkage_betti::{
    cmd_average, cmd_betti, cmd_convergence, cmd_sample, cmd_slice, parse_rational_list, CliError,
    Format, OutputRecord,
};
use linkage_betti_core::Measure;

#[derive(Parser)]
#[command(
    name = "linkage-betti",
    version,
    about = "Betti numbers of planar polygon spaces"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    /// Worker threads for the engine (0 = all cores).
    #[arg(
        long,
        global = true,
        env = "LINKAGE_BETTI_THREADS",
        default_value_t = 0
    )]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Simplex,
    Cube,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Simplex => Measure::SimplexUniform,
            MeasureArg::Cube => Measure::CubeUniform,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureChoice {
    Simplex,
    Cube,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Betti profile of one polygon space.
    Betti {
        /// Side lengths, comma separated (`a/b` or decimals).
        #[arg(long, allow_hyphen_values = true)]
        lengths: String,
    },
    /// Exact expected b_p over random n-gons.
    Average {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum)]
        measure: MeasureArg,
    },
    /// Exact expectations and gap ratios over a range of n.
    Convergence {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "both")]
        measure: MeasureChoice,
    },
    /// Monte Carlo estimate of the expected b_p.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum)]
        measure: MeasureArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Volume fraction of a simplex where a linear functional is negative.
    Slice {
        /// Values of the functional at the vertices, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
}

fn warn_exact(n: usize) {
    if n > EXACT_WARN_N {
        eprintln!("warning: exact averages beyond n = {EXACT_WARN_N} can be slow (n = {n})");
    }
}

fn run(command: Command) -> Result<OutputRecord, CliError> {
    match command {
        Command::Betti { lengths } => cmd_betti(&parse_rational_list(&lengths)?),
        Command::Average { n, p, measure } => {
            warn_exact(n);
            cmd_average(n, p, measure.into())
        }
        Command::Convergence {
            p,
            n_min,
            n_max,
            measure,
        } => {
            if n_min <= n_max {
                warn_exact(n_max);
            }
            let measures: &[Measure] = match measure {
                MeasureChoice::Simplex => &[Measure::SimplexUniform],
                MeasureChoice::Cube => &[Measure::CubeUniform],
                MeasureChoice::Both => &[Measure::SimplexUniform, Measure::CubeUniform],
            };
            cmd_convergence(p, n_min, n_max, measures)
        }
        Command::Sample {
            n,
            p,
            measure,
            samples,
            seed,
        } => cmd_sample(n, p, measure.into(), samples, seed),
        Command::Slice { q } => cmd_slice(&parse_rational_list(&q)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(record) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(record.render(cli.format).as_bytes())
                .is_err()
            {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
