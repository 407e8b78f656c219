use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "brandt", version, about = "Identities and structure of finite semigroups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    pub format: Format,

    /// Worker threads for exhaustive checks (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Maximum number of evaluations an exhaustive check may visit.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    JsonLines,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an identity exhaustively.
    Check {
        /// Builtin name such as `B(Z2,2)`, or `@path` to a table file.
        #[arg(short, long)]
        semigroup: String,
        #[arg(short, long)]
        identity: String,
    },
    /// Check every identity of a basis for Brandt semigroups.
    BasisVerify {
        #[arg(short, long)]
        semigroup: String,
        #[arg(short, long)]
        n: usize,
        /// File with one group word per line, or `abelian` for the basis of
        /// abelian groups of exponent n.
        #[arg(long, default_value = "abelian", conflicts_with = "abelian")]
        positive_basis: String,
        /// Use the four-identity basis for abelian structure groups instead.
        #[arg(long)]
        abelian: bool,
    },
    /// Rewrite a repeated word into a product of cells.
    Decompose {
        #[arg(short, long)]
        word: String,
        #[arg(short, long)]
        n: usize,
    },
    /// Print the star word of the cell form of a repeated word.
    Star {
        #[arg(short, long)]
        word: String,
        #[arg(short, long)]
        n: usize,
    },
    /// Separate two distinct regular elements by a homomorphism.
    Separate {
        #[arg(short, long)]
        semigroup: String,
        /// Element label or index.
        #[arg(short)]
        a: String,
        #[arg(short)]
        b: String,
        #[arg(short, long)]
        n: usize,
    },
    /// Recognise groups, groups with zero and Brandt semigroups.
    Classify {
        #[arg(short, long)]
        semigroup: String,
        /// Also print the coordinate isomorphism.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Write the table of a semigroup.
    Build {
        #[arg(short, long)]
        semigroup: String,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for a derivation of an identity from a basis.
    Derive {
        #[arg(short, long)]
        identity: String,
        /// `trahtman` or a file with one identity per line.
        #[arg(long, default_value = "trahtman")]
        basis: String,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        /// Longest image of a rule variable.
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        #[arg(long, default_value_t = 12)]
        max_word_length: usize,
    },
    /// Print `x^2 y1..yk yk..y1 = y1..yk yk..y1 x^2`, optionally checking it.
    Ln {
        #[arg(short, long)]
        n: usize,
        #[arg(long, requires = "semigroup")]
        check: bool,
        #[arg(short, long)]
        semigroup: Option<String>,
    },
}
