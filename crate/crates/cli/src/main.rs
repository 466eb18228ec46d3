//! `samelson`: orders of Samelson products in SU(n) from the command line.
//!
//! Exit codes: 0 success, 2 invalid input, 3 internal solver failure,
//! 4 a recomputed theorem value disagrees with the stated one.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use render::Outcome;

#[derive(Debug, Parser)]
#[command(
    name = "samelson",
    version,
    about = "Odd-primary orders of Samelson products in SU(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct ProblemArgs {
    /// Dimension of the first projective space, 1 ≤ a < n.
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Dimension of the second projective space, 1 ≤ b < n.
    #[arg(long, allow_negative_numbers = true)]
    b: i64,
    /// Rank of SU(n).
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Odd-primary order of <ε_a, ε_b> in SU(n).
    Order {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also print the integer combination of generators reaching d·(1,…,1).
        #[arg(long)]
        certificate: bool,
    },
    /// The integer generator matrix with its row and column labels.
    Matrix {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute a theorem's table of orders and compare with the stated values.
    Table {
        #[arg(long)]
        theorem: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Audit every printed generator table against recomputation.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Homotopy commutativity of SU(n) localized at an odd prime.
    Commutative {
        #[arg(long)]
        su: u32,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Bound on p-local homotopy types of gauge groups.
    Gauge {
        /// Order of the commutator map.
        #[arg(long, conflicts_with = "su4", required_unless_present = "su4")]
        order: Option<String>,
        /// Use the order of the SU(4) commutator.
        #[arg(long)]
        su4: bool,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };

    let (format, outcome) = match cli.command {
        Command::Order {
            problem,
            format,
            certificate,
        } => (
            format,
            render::order(problem.a, problem.b, problem.n, certificate),
        ),
        Command::Matrix { problem, format } => {
            (format, render::matrix(problem.a, problem.b, problem.n))
        }
        Command::Table { theorem, format } => (format, render::table(theorem)),
        Command::VerifyPaper { format } => (format, render::verify_paper()),
        Command::Commutative { su, prime, format } => (format, render::commutative(su, prime)),
        Command::Gauge {
            order,
            su4,
            prime,
            format,
        } => (format, render::gauge(order.as_deref(), su4, prime)),
    };

    emit(format, outcome)
}

fn emit(format: Format, outcome: Outcome) -> ExitCode {
    match outcome {
        Outcome::Done {
            code,
            document,
            text,
        } => {
            match format {
                Format::Text => print!("{text}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&document).expect("documents are serializable")
                ),
            }
            ExitCode::from(code)
        }
        Outcome::Failed { code, message } => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
