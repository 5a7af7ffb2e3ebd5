use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "c4free",
    version,
    about = "Planar-monomial construction of C4-free tripartite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the field F_{q^3} used for a given q.
    FieldInfo(FieldInfoArgs),
    /// Test planarity of a monomial against its closed-form criterion.
    PlanarTest(PlanarTestArgs),
    /// Check the root structure of f_a for one a or for every nonzero a.
    FaVerify(FaVerifyArgs),
    /// Describe G_q(a), or export its edge list.
    Construct(ConstructArgs),
    /// Check C4-freeness and count triangles of G_q(a).
    Verify(VerifyArgs),
    /// Table of baseline, new lower bound and reference curves.
    Bounds(BoundsArgs),
    /// Pair-solution count with X^((3^alpha+1)/2) in place of X^(q+1).
    AltMonomial(AltMonomialArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Edgelist,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FieldInfoArgs {
    #[arg(long)]
    pub q: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// X^(q^alpha + 1) over F_{q^e}
    Qa1,
    /// X^((3^alpha + 1)/2) over F_{3^e}
    Char3,
}

#[derive(Debug, Args)]
pub struct PlanarTestArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub alpha: u32,
    #[arg(long, default_value_t = 3)]
    pub e: u32,
    #[arg(long, value_enum, default_value_t = Family::Qa1)]
    pub family: Family,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct FaVerifyArgs {
    #[arg(long)]
    pub q: u64,
    /// Encoding of a; all nonzero elements when omitted.
    #[arg(long)]
    pub a: Option<u64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub q: u64,
    /// Encoding of a; the smallest valid a when omitted.
    #[arg(long)]
    pub a: Option<u64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub a: Option<u64>,
    /// Check every part pair for 4-cycles explicitly (q = 3 only).
    #[arg(long)]
    pub direct_c4: bool,
    /// Count triangles by walking the graph (q = 3 only).
    #[arg(long)]
    pub bruteforce_triangles: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Comma-separated list of q.
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<u64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct AltMonomialArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub alpha: u32,
    #[command(flatten)]
    pub output: Output,
}
