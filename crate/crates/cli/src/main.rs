mod commands;
mod poly;

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use commands::{BaseSpec, CliError, ModelSpec};

/// Exact generating series for characteristic classes of symmetric products.
///
/// Exit codes: 0 success, 1 a verification check failed, 2 bad flags,
/// 3 file or parse error, 4 invariant violation, 5 pole, 6 parity mismatch.
#[derive(Debug, Parser)]
#[command(name = "symprod", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Pipeline {
    Hirzebruch,
    Todd,
    Chern,
    ChernLimit,
    L,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Text,
    TableDoc,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficient table of a class generating series.
    Classes {
        /// point, p1 or file:PATH
        #[arg(long, value_parser = commands::parse_model)]
        model: ModelSpec,
        /// hirzebruch, todd, chern, l, chi=INT, poly=EXPR or file:PATH
        #[arg(long, value_parser = commands::parse_base)]
        base: BaseSpec,
        #[arg(long, value_enum)]
        pipeline: Pipeline,
        /// Truncation order
        #[arg(long = "N", default_value_t = 6, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Evaluate every coefficient at this rational y
        #[arg(long)]
        y_eval: Option<String>,
        /// Ichi for the l pipeline
        #[arg(long, allow_negative_numbers = true)]
        ichi: Option<i64>,
    },
    /// Run a verification suite; exit 0 iff every identity holds.
    Verify {
        #[arg(long, value_parser = ["p1", "oracle", "genera", "specializations", "all"])]
        suite: String,
        #[arg(long = "N", default_value_t = 6, allow_negative_numbers = true)]
        n: i64,
        /// Seed for the random abstract models
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Degree-zero series: chi_y, signatures or arithmetic genera.
    #[command(group(ArgGroup::new("input").required(true).args(["chi_y", "sigma", "chi_a"])))]
    Genera {
        /// chi_(-y) of the space as a polynomial in y
        #[arg(long)]
        chi_y: Option<String>,
        #[arg(long, requires = "chi", allow_negative_numbers = true)]
        sigma: Option<i64>,
        /// Euler characteristic, with --sigma
        #[arg(long, requires = "sigma", allow_negative_numbers = true)]
        chi: Option<i64>,
        /// Arithmetic genus
        #[arg(long, allow_negative_numbers = true)]
        chi_a: Option<i64>,
        #[arg(long = "N", default_value_t = 6, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Classes {
            model,
            base,
            pipeline,
            n,
            format,
            y_eval,
            ichi,
        } => {
            let n = commands::truncation(n)?;
            let out = commands::classes(&model, &base, pipeline, n, format, y_eval.as_deref(), ichi)?;
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n, seed } => {
            let n = commands::truncation(n)?;
            let (out, passed) = commands::verify(&suite, n, seed)?;
            print!("{out}");
            Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Genera {
            chi_y,
            sigma,
            chi,
            chi_a,
            n,
            format,
        } => {
            let n = commands::truncation(n)?;
            let input = match (chi_y, sigma.zip(chi), chi_a) {
                (Some(p), None, None) => commands::GeneraInput::ChiY(p),
                (None, Some((s, c)), None) => commands::GeneraInput::Signature(s, c),
                (None, None, Some(a)) => commands::GeneraInput::ArithmeticGenus(a),
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --chi-y, --sigma/--chi, --chi-a".into(),
                    ))
                }
            };
            print!("{}", commands::genera(input, n, format)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("symprod: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
