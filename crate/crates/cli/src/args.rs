use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "skewbrace", version, about = "Construct, verify and analyze skew braces and brace systems")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of samples for sampled checks.
    #[arg(long, global = true, default_value_t = 500)]
    pub samples: usize,
    /// Largest group order accepted by the exhaustive algorithms.
    #[arg(long, global = true, default_value_t = 24)]
    pub max_order: usize,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

/// A group from a JSON file or a catalog name.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GroupSource {
    /// Group file: a Cayley table, permutation generators, or a catalog name.
    #[arg(long = "in", value_name = "PATH")]
    pub path: Option<PathBuf>,
    /// Catalog name such as Z4, Z2xZ4, Z2^3, D4, Dic3, Q8, S3, A4.
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Debug, Args)]
pub struct BraceSource {
    /// Brace file with "add" and "circ" tables.
    #[arg(long = "in", value_name = "PATH")]
    pub path: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the group axioms of a table.
    VerifyGroup {
        #[command(flatten)]
        source: GroupSource,
    },
    /// Check the left and right brace laws of a pair of tables.
    VerifyBrace {
        #[command(flatten)]
        source: BraceSource,
    },
    /// Report the λ-homomorphic, anti-homomorphic, symmetric, λ-cyclic and natural flags.
    Classify {
        #[command(flatten)]
        source: BraceSource,
    },
    /// Build a brace on a group.
    Construct {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_enum)]
        kind: ConstructKind,
        /// JSON file `{"maps": [[...], ...], "mode": "hom"|"anti"}` for `--kind lambda`.
        #[arg(long, value_name = "PATH")]
        lambda: Option<PathBuf>,
        /// Comma-separated elements of the first factor for `--kind factorization`.
        #[arg(long, value_delimiter = ',')]
        a: Vec<usize>,
        /// Comma-separated elements of the second factor for `--kind factorization`.
        #[arg(long, value_delimiter = ',')]
        b: Vec<usize>,
    },
    /// Every skew brace with the given additive group.
    Enumerate {
        #[command(flatten)]
        source: GroupSource,
        /// Include the classification of each brace.
        #[arg(long)]
        classify: bool,
    },
    /// Build a brace system and its graph.
    System {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_enum, default_value_t = SystemChoice::Linear)]
        kind: SystemChoice,
        /// λ file for `--kind linear`.
        #[arg(long, value_name = "PATH")]
        lambda: Option<PathBuf>,
        /// Highest level; the linear family runs to its period when omitted.
        #[arg(long)]
        depth: Option<usize>,
        /// Also build the negative levels of a linear family.
        #[arg(long)]
        negative: bool,
        /// RB operator file for `--kind rb`.
        #[arg(long, value_name = "PATH")]
        map: Option<PathBuf>,
    },
    /// Ideals, the triviality chain and the λ-kernel of a brace.
    Structure {
        #[command(flatten)]
        source: BraceSource,
    },
    /// Checks on free groups.
    Freegroup {
        #[command(subcommand)]
        command: FreeCommand,
    },
    /// Sampled checks of the linear family on ℤ².
    Lattice {
        #[arg(long)]
        p: i64,
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// Also evaluate `a ∘_level b` for `--a x,y --b x,y`.
        #[arg(long, value_delimiter = ',', num_args = 1, allow_negative_numbers = true)]
        a: Vec<i64>,
        #[arg(long, value_delimiter = ',', num_args = 1, allow_negative_numbers = true)]
        b: Vec<i64>,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        level: i64,
    },
    /// Analyze a Rota–Baxter operator.
    Rb {
        /// Operator file.
        #[arg(long = "in", value_name = "PATH")]
        path: PathBuf,
        /// Group file for a finite operator without an inline group.
        #[arg(long = "group-file", value_name = "PATH")]
        group_file: Option<PathBuf>,
        /// Catalog name of the group for a finite operator.
        #[arg(long)]
        group: Option<String>,
        /// Number of derived levels in the multibrace.
        #[arg(long, default_value_t = 3)]
        levels: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Trivial,
    Op,
    Lambda,
    Factorization,
    Inversion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SystemChoice {
    Linear,
    Rooted,
    Rb,
}

#[derive(Debug, Subcommand)]
pub enum FreeCommand {
    /// Schreier generators of Ker λ and the action of s for θ the generator cycle.
    VerifyCyclic {
        #[arg(long)]
        n: usize,
    },
    /// Shift action of s for θ conjugation by w.
    T4 {
        #[arg(long)]
        n: usize,
        /// Word such as "x2 x1^2".
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = skewbrace::free::DEFAULT_T4_WINDOW)]
        window: i64,
    },
    /// Sampled brace laws for `λ_a = θ^{l(a)}`.
    Sample {
        #[arg(long, value_enum)]
        theta: ThetaChoice,
        #[arg(long)]
        n: usize,
        /// Conjugating word for `--theta inner`.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Sampled checks of the operator `x_i ↦ x1` on F_2 and its levels.
    Rb {
        #[arg(long, default_value_t = 3)]
        max_m: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ThetaChoice {
    Identity,
    Cycle,
    Inner,
}
