use std::io::Write;
use std::process::ExitCode;

use arborcount_core::oracle::{Enumerator, DEFAULT_CAP};
use arborcount_core::report::{enumerate, SequenceReport, SeriesFormat, TreeFormat};
use arborcount_core::trees::series_for;
use arborcount_core::verify::verify;
use arborcount_core::{Series, TreeFamily};
use clap::{Parser, Subcommand};

/// Default largest order `count` and `series` will compute.
const DEFAULT_CEILING: usize = 5000;

#[derive(Parser, Debug)]
#[command(
    name = "arborcount",
    version,
    about = "Exact counts of unlabeled trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the number of trees of a family with n vertices.
    Count {
        #[arg(value_parser = parse_family)]
        family: TreeFamily,
        #[arg(long)]
        n: usize,
        /// Largest n accepted.
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
    },
    /// Print counts for n = 1..=terms.
    Series {
        #[arg(value_parser = parse_family)]
        family: TreeFamily,
        #[arg(long)]
        terms: usize,
        /// bfile, json or csv.
        #[arg(long, default_value = "bfile", value_parser = parse_series_format)]
        format: SeriesFormat,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
    },
    /// List every tree of a family with n vertices.
    Enumerate {
        #[arg(value_parser = parse_family)]
        family: TreeFamily,
        #[arg(long)]
        n: usize,
        /// text or dot.
        #[arg(long, default_value = "text", value_parser = parse_tree_format)]
        format: TreeFormat,
        /// Largest tree the enumerator will build.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Compare series coefficients against brute-force enumeration.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

fn parse_family(s: &str) -> Result<TreeFamily, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_series_format(s: &str) -> Result<SeriesFormat, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_tree_format(s: &str) -> Result<TreeFormat, String> {
    s.parse().map_err(|e| format!("{e}"))
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<arborcount_core::Error> for Failure {
    fn from(e: arborcount_core::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn check_range(what: &str, value: usize, ceiling: usize) -> Result<(), Failure> {
    if value < 1 {
        return Err(Failure::Usage(format!("{what} must be at least 1")));
    }
    if value > ceiling {
        return Err(Failure::Usage(format!(
            "{what} = {value} is above the ceiling {ceiling} (raise it with --ceiling)"
        )));
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, Failure> {
    let text = match cli.command {
        Command::Count { family, n, ceiling } => {
            check_range("--n", n, ceiling)?;
            let s: Series = series_for(family, n)?;
            format!("{}\n", s.coeff(n))
        }
        Command::Series {
            family,
            terms,
            format,
            ceiling,
        } => {
            check_range("--terms", terms, ceiling)?;
            SequenceReport::from_series(family, terms)?.render(format)
        }
        Command::Enumerate {
            family,
            n,
            format,
            cap,
        } => {
            if n < 1 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            enumerate(family, n, format, &mut Enumerator::new(cap))?
        }
        Command::Verify { max_n, cap } => {
            if max_n < 1 {
                return Err(Failure::Usage("--max-n must be at least 1".into()));
            }
            let report = verify(max_n, cap)?;
            out.write_all(report.render().as_bytes())
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            return Ok(report.passed());
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
