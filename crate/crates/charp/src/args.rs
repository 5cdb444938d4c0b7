//! Command-line flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "charp", version, about = "Test ideals, F-jumping numbers and HSL numbers of hypersurfaces over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Frobenius root (f^m)^[1/p^e]
    Root {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(short = 'm', default_value_t = 1)]
        m: u64,
        #[arg(short = 'e', default_value_t = 1)]
        e: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Test ideal tau(f^lambda), or its left limit with --left
    Tau {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        left: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// F-pure threshold
    Fpt {
        #[command(flatten)]
        ring: RingArgs,
        /// Largest e used to bracket the threshold
        #[arg(short = 'e', default_value_t = 3)]
        e: u32,
        #[arg(long, default_value_t = 3)]
        s_max: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// F-jumping numbers in (0, 1), or a single certificate with --lambda
    Jumps {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = 3)]
        resolution_e: u32,
        #[arg(long, default_value_t = 3)]
        s_max: u32,
        #[arg(long)]
        lambda: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// HSL number
    Hsl {
        #[command(flatten)]
        ring: RingArgs,
        /// Longest chain tried before giving up
        #[arg(long, default_value_t = 64)]
        depth: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Binomial and multinomial coefficients mod p
    Lucas {
        #[arg(short = 'p', long = "prime")]
        p: u64,
        #[arg(short = 'm')]
        m: u64,
        /// Lower index of C(m, k)
        #[arg(short = 'k', conflicts_with = "parts")]
        k: Option<u64>,
        /// Parts of a multinomial coefficient, comma separated
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Invariants of one polynomial over a range of primes
    Scan(ScanArgs),
}

#[derive(Args, Debug, Clone)]
pub struct RingArgs {
    #[arg(short = 'p', long = "prime")]
    pub p: u64,
    /// Variable names, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub vars: Vec<String>,
    #[arg(short = 'f', long = "poly")]
    pub poly: String,
    #[arg(long, value_enum, default_value_t = Order::Grevlex)]
    pub order: Order,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Result cache directory (default: $CHARP_CACHE_DIR)
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ScanArgs {
    /// Variable names, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub vars: Vec<String>,
    #[arg(short = 'f', long = "poly")]
    pub poly: String,
    #[arg(long, value_enum, default_value_t = Order::Grevlex)]
    pub order: Order,
    /// Inclusive prime range `lo..hi`
    #[arg(long)]
    pub primes: String,
    /// Invariants to compute, comma separated
    #[arg(long, value_enum, value_delimiter = ',', default_value = "fpt")]
    pub report: Vec<Invariant>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 300)]
    pub timeout_secs: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// e_max for fpt
    #[arg(short = 'e', default_value_t = 3)]
    pub e: u32,
    #[arg(long, default_value_t = 3)]
    pub resolution_e: u32,
    #[arg(long, default_value_t = 3)]
    pub s_max: u32,
    #[arg(long, default_value_t = 64)]
    pub depth: usize,
    /// Write 0 in the wall_ms column so runs are byte-identical
    #[arg(long)]
    pub no_timing: bool,
    /// Fraction of cache hits recomputed and compared
    #[arg(long, default_value_t = 0.05, hide = true)]
    pub audit_fraction: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Grevlex,
    Lex,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Invariant {
    Fpt,
    Hsl,
    Jumps,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Fpt => "fpt",
            Invariant::Hsl => "hsl",
            Invariant::Jumps => "jumps",
        }
    }
}
