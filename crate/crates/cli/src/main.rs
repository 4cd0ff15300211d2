use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitope_core::chamber::{check_chamber_n, enumerate_full_chambers, load_or_build, write_cache, Chamber};
use orbitope_core::homology::{betti, Mode};
use orbitope_core::par;
use orbitope_core::report::{
    admissible_report, betti_report, chambers_report, dict_report, keel_report, verify_report, Report,
};

/// Exit status when a report contains a failed assertion.
const EXIT_ASSERTION: u8 = 1;
/// Exit status for runtime errors such as a missing or corrupted cache.
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "orbitope", version, about = "Chamber complexes of the hypersimplex and mod-2 homology of X5, X6")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Directory holding chamber caches.
    #[arg(long, global = true, env = "ORBITOPE_CACHE_DIR", default_value = ".orbitope-cache")]
    cache_dir: PathBuf,

    /// Never read or write the chamber cache; enumerate in memory.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Enumerate and store chambers when the cache is missing.
    #[arg(long, global = true)]
    build: bool,

    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,

    /// Worker threads (ignored in sequential builds).
    #[arg(long, global = true)]
    parallelism: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Markdown,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Paper,
    Exhaustive,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Paper => Mode::Paper,
            ModeArg::Exhaustive => Mode::Exhaustive,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List admissible polytopes with counts by family shape.
    Admissible {
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=9))]
        n: u8,
    },
    /// Enumerate full-dimensional chambers and write the cache.
    Chambers {
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=6))]
        n: u8,
    },
    /// Four-point relations among boundary divisors and the quotient dimension.
    Keel {
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=9))]
        n: u8,
    },
    /// Divisor dictionary and its partition check at the reference chamber.
    Dict {
        #[arg(long, value_parser = clap::value_parser!(u8).range(5..=6))]
        n: u8,
    },
    /// Mod-2 Betti table of X5 or X6.
    Betti {
        #[arg(long, value_parser = clap::value_parser!(u8).range(5..=6))]
        n: u8,
        #[arg(long, value_enum, default_value_t = ModeArg::Paper)]
        mode: ModeArg,
    },
    /// Every invariant check for one n.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=6))]
        n: u8,
        #[arg(long, value_enum, default_value_t = ModeArg::Paper)]
        mode: ModeArg,
    },
}

fn chambers(global: &Global, n: usize) -> anyhow::Result<Vec<Chamber>> {
    if global.no_cache {
        return Ok(enumerate_full_chambers(n)?);
    }
    Ok(load_or_build(n, Some(&global.cache_dir), global.build)?)
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let g = &cli.global;
    let report = match cli.command {
        Command::Admissible { n } => admissible_report(n.into())?,
        Command::Chambers { n } => {
            let n = n.into();
            check_chamber_n(n)?;
            let cs = enumerate_full_chambers(n)?;
            if !g.no_cache {
                let path = write_cache(&g.cache_dir, n, &cs)
                    .with_context(|| format!("writing cache under {}", g.cache_dir.display()))?;
                log::info!("wrote {}", path.display());
            }
            chambers_report(n, &cs)
        }
        Command::Keel { n } => keel_report(n.into())?,
        Command::Dict { n } => dict_report(n.into(), &chambers(g, n.into())?)?,
        Command::Betti { n, mode } => {
            let n = n.into();
            betti_report(&betti(n, &chambers(g, n)?, mode.into())?)
        }
        Command::Verify { n, mode } => {
            let n = n.into();
            let cs = chambers(g, n)?;
            verify_report(n, &cs, mode.into())?
        }
    };
    Ok(report)
}

fn emit(report: &Report, output: Output) {
    if matches!(output, Output::Json | Output::Both) {
        print!("{}", report.to_json_string());
    }
    if matches!(output, Output::Markdown | Output::Both) {
        print!("{}", report.to_markdown());
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.global.parallelism {
        Some(0) => Err(anyhow::anyhow!("--parallelism must be at least 1")),
        Some(t) => par::with_threads(t, || run(&cli)),
        None => run(&cli),
    };
    match result {
        Ok(report) => {
            emit(&report, cli.global.output);
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                for a in report.assertions.iter().filter(|a| !a.passed) {
                    log::error!("{}: expected {}, got {}", a.name, a.expected, a.actual);
                }
                ExitCode::from(EXIT_ASSERTION)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
