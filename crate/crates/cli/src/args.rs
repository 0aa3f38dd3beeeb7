use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "aldkit", version, about = "Asymmetric Lee distance codes: metric, bounds, constructions and tables")]
pub struct Cli {
    /// Time budget in seconds for long computations.
    #[arg(long, global = true, env = "ALDKIT_BUDGET_SECS", value_name = "SECONDS")]
    pub budget: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundMethod {
    Lp,
    Naive,
    Optimal1,
    Simple,
    Weights1,
    Delsarte,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Correct one Class-1 error.
    Correct1,
    /// Detect one Class-2 error.
    Detect2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two quaternary words.
    Dist {
        word1: String,
        word2: String,
        #[arg(long, default_value_t = 1)]
        lambda: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ball and sphere sizes around a center of pair weight `w`.
    Ball {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        r: u64,
        #[arg(long, default_value_t = 1)]
        lambda: u32,
        /// Also count by exhaustive enumeration.
        #[arg(long)]
        enumerate: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// An upper bound on the code size.
    Bound {
        #[arg(value_enum)]
        method: BoundMethod,
        #[arg(long)]
        n: usize,
        /// Minimum distance; `optimal1` defaults to `2λ + 1`.
        #[arg(long)]
        d: Option<u64>,
        #[arg(long, default_value_t = 1)]
        lambda: u32,
        /// Print the exact value next to the floor.
        #[arg(long)]
        exact_rational: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a code and write it as a codebook file.
    Construct(ConstructArgs),
    /// Decode received words.
    Decode {
        #[command(subcommand)]
        code: DecodeCode,
    },
    /// Check properties of a codebook file.
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
    /// Exact maximum code size by exhaustive search (n <= 4).
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        lambda: u32,
        /// Write a maximising codebook here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute a reference table and compare cell by cell.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        table: u8,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub kind: ConstructKind,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also print the words in the G/C/T/A alphabet.
    #[arg(long, global = true)]
    pub dna: bool,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// Coset `C_{l,u}` of length `2^v - 2`.
    Cl {
        #[arg(long)]
        v: u32,
        #[arg(long, default_value_t = 0)]
        u: u64,
    },
    /// `C_L(n)` from a one-bit shortened BCH code (`--v`) or an odd-weight-column check (`--n`, `--rows`).
    #[command(name = "cL")]
    BigCl {
        #[arg(long, conflicts_with_all = ["n", "rows"])]
        v: Option<u32>,
        #[arg(long, requires = "rows")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        rows: Option<usize>,
    },
    /// The parity code `C_p(n)`.
    Cp {
        #[arg(long)]
        n: usize,
    },
    /// The weight-partition code of length `2^v - 2`.
    Partition {
        #[arg(long)]
        v: u32,
        #[arg(long, default_value_t = 0)]
        u: u64,
    },
    /// `C_N` over `F_{q^ell}`; the largest coset unless `--u` and `--z` are given.
    Cn {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 1)]
        ell: u32,
        #[arg(long)]
        d: u64,
        #[arg(long, requires = "z")]
        u: Option<u64>,
        /// Comma-separated power-sum targets.
        #[arg(long, requires = "u", value_delimiter = ',')]
        z: Option<Vec<u32>>,
    },
    /// `C_λ` with greedy component codes.
    Clambda {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        lambda: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum DecodeCode {
    /// Syndrome decoding for `C_{l,u}`.
    Cl {
        #[arg(long)]
        v: u32,
        #[arg(long, default_value_t = 0)]
        u: u64,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Codebook file holding the received words.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCheck {
    /// Minimum pairwise distance against the design distance.
    Mindist {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        lambda: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}
