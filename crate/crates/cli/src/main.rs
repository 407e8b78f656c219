mod cli;
mod commands;

use std::process::ExitCode;

use brandt_core::rewrite::DeriveBounds;
use clap::Parser;

use cli::{Cli, Command};
use commands::Ctx;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx {
        format: cli.format,
        budget: cli.budget,
    };
    let result = match &cli.command {
        Command::Check {
            semigroup,
            identity,
        } => commands::check(&ctx, semigroup, identity),
        Command::BasisVerify {
            semigroup,
            n,
            positive_basis,
            abelian,
        } => commands::basis_verify(&ctx, semigroup, *n, positive_basis, *abelian),
        Command::Decompose { word, n } => commands::decompose(&ctx, word, *n),
        Command::Star { word, n } => commands::star(&ctx, word, *n),
        Command::Separate {
            semigroup,
            a,
            b,
            n,
        } => commands::separate(&ctx, semigroup, a, b, *n),
        Command::Classify { semigroup, verbose } => commands::classify_cmd(&ctx, semigroup, *verbose),
        Command::Build { semigroup, output } => commands::build(&ctx, semigroup, output.as_deref()),
        Command::Derive {
            identity,
            basis,
            max_steps,
            max_length,
            max_word_length,
        } => commands::derive(
            &ctx,
            identity,
            basis,
            DeriveBounds {
                max_steps: *max_steps,
                max_length: *max_length,
                max_word_length: *max_word_length,
            },
        ),
        Command::Ln {
            n,
            check,
            semigroup,
        } => commands::ln(&ctx, *n, semigroup.as_deref().filter(|_| *check)),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
