mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "insets",
    version,
    about = "Inset numbers, restricted ternary words and related sequences"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Directory holding cached OEIS b-files.
    #[arg(long, global = true, env = "INSETS_FIXTURES", value_name = "DIR")]
    fixtures: Option<PathBuf>,
    /// Never touch the network.
    #[arg(long, global = true, env = "INSETS_OFFLINE", value_parser = clap::builder::BoolishValueParser::new())]
    offline: bool,
    /// URL template for b-file downloads (`{id}`, `{digits}` are expanded).
    #[arg(long, global = true, env = "INSETS_REMOTE", hide = true)]
    remote: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Variable {
    M,
    N,
    K,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print {m,n,k}.
    Compute { m: u32, n: u32, k: u32 },
    /// Print the trapeze table for fixed n, rows m = 0..=m_max.
    Table { n: u32, m_max: u32 },
    /// List the ternary words counted by {m,n,k} in lexicographic order.
    Words {
        m: u32,
        n: u32,
        k: u32,
        /// Print at most this many words.
        #[arg(long)]
        limit: Option<usize>,
        /// Allow listings above the safety threshold.
        #[arg(long)]
        force: bool,
    },
    /// Check an identity (or `all`) on the grid 0..=m_max x 0..=n_max.
    Verify {
        identity: String,
        m_max: u32,
        n_max: u32,
    },
    /// Expand a generating function; `m` takes (n, k), `n` takes (m, k), `k` takes (m, n).
    Series {
        #[arg(value_enum)]
        variable: Variable,
        a: u32,
        b: u32,
        order: usize,
        /// Compare the coefficients against inset values.
        #[arg(long)]
        check: bool,
    },
    /// Coefficients of the generalized Chebyshev polynomial P_{m,n}, lowest power first.
    Poly { m: u32, n: u32 },
    /// Print the first terms of a cataloged sequence.
    Seq { key: String, count: usize },
    /// Validate a cataloged sequence (or `all`) against its OEIS b-file.
    Crosscheck {
        key: String,
        /// Download the b-file again before validating.
        #[arg(long)]
        refresh: bool,
    },
    /// Dump the sequence catalog.
    Catalog,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context::new(cli.format, cli.fixtures, cli.offline, cli.remote);
    let result = match cli.command {
        Command::Compute { m, n, k } => commands::compute(&ctx, m, n, k),
        Command::Table { n, m_max } => commands::table(&ctx, n, m_max),
        Command::Words {
            m,
            n,
            k,
            limit,
            force,
        } => commands::words(&ctx, m, n, k, limit, force),
        Command::Verify {
            identity,
            m_max,
            n_max,
        } => commands::verify(&ctx, &identity, m_max, n_max),
        Command::Series {
            variable,
            a,
            b,
            order,
            check,
        } => {
            let v = match variable {
                Variable::M => insets::series::GfVariable::M,
                Variable::N => insets::series::GfVariable::N,
                Variable::K => insets::series::GfVariable::K,
            };
            commands::series(&ctx, v, a, b, order, check)
        }
        Command::Poly { m, n } => commands::poly(&ctx, m, n),
        Command::Seq { key, count } => commands::seq(&ctx, &key, count),
        Command::Crosscheck { key, refresh } => commands::crosscheck(&ctx, &key, refresh),
        Command::Catalog => commands::catalog(&ctx),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(msg) = e.message() {
                eprintln!("insets: {msg}");
            }
            ExitCode::from(e.code())
        }
    }
}
