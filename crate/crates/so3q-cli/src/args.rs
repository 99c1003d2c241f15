use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "so3q",
    version,
    about = "SO(3) quantum invariants, torus TQFT and theta-function checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default, Serialize, Deserialize)]
pub struct GlobalArgs {
    /// TOML file with defaults; command-line flags take precedence.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
    /// Working precision in bits for extended-precision paths.
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision_bits: Option<u32>,
    /// Worker threads (also read from SO3Q_THREADS).
    #[arg(long, global = true, env = "SO3Q_THREADS")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Colored Jones polynomial of a knot.
    Jones(JonesArgs),
    /// Kauffman bracket of a diagram.
    Bracket(BracketArgs),
    /// Torus TQFT matrices, words and curve operators.
    Tqft(TqftArgs),
    /// Run the geometric verification suite.
    GeomVerify(GeomArgs),
    /// Knot state coefficients and norms.
    KnotState(KnotStateArgs),
    /// Volume-conjecture sequence as CSV.
    VolumeSeq(VolumeArgs),
    /// Surgery invariant of S^3 along a framed knot.
    Rt(RtArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Jones(_) => "jones",
            Self::Bracket(_) => "bracket",
            Self::Tqft(_) => "tqft",
            Self::GeomVerify(_) => "geom-verify",
            Self::KnotState(_) => "knot-state",
            Self::VolumeSeq(_) => "volume-seq",
            Self::Rt(_) => "rt",
        }
    }
}

#[derive(Args, Debug, Default, Clone, Serialize, Deserialize)]
pub struct KnotArgs {
    /// Catalog name: unknot, trefoil, figure-eight (or 0_1, 3_1, 4_1).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub knot: Option<String>,
    /// Braid word as signed generators, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braid: Option<String>,
    /// Strand count for --braid; inferred from the word if omitted.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strands: Option<usize>,
}

#[derive(Args, Debug, Default, Clone, Serialize, Deserialize)]
pub struct JonesArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub knot: KnotArgs,
    /// Color n >= 1 (J_1 = 1).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    /// Level r >= 3 for numeric evaluation at exp(2 pi i/(r+1/2)).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    /// Print the exact Laurent polynomial in t.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub exact: bool,
    /// exact, rmatrix or catalog.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backend: Option<String>,
}

#[derive(Args, Debug, Default, Clone, Serialize, Deserialize)]
pub struct BracketArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub knot: KnotArgs,
    /// Planar diagram file (`X a b c d` lines, optional `F` framings).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd: Option<PathBuf>,
    /// Color every component with e_c.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub color: Option<u32>,
    /// Also evaluate at the level-r root.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TqftEmit {
    Matrices,
    Kirby,
    Word,
    Curve,
}

#[derive(Args, Debug, Default, Clone, Serialize, Deserialize)]
pub struct TqftArgs {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub emit: Option<TqftEmit>,
    /// Word in S, T, S^-1, T^k, e.g. "S T^2 S".
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    /// Primitive curve "a,b" meaning a mu + b lambda.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<String>,
}

#[derive(Args, Debug, Default, Clone, Serialize, Deserialize)]
pub struct GeomArgs {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    /// Modular parameter, e.g. "i" or "0.3+1.7i".
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
}

#[derive(Args, Debug, Default, Clone, Serialize, Deserialize)]
pub struct KnotStateArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub knot: KnotArgs,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backend: Option<String>,
}

#[derive(Args, Debug, Default, Clone, Serialize, Deserialize)]
pub struct VolumeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub knot: KnotArgs,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_min: Option<u32>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_max: Option<u32>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<u32>,
    /// Reference volume, required for knots outside the catalog.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ref_vol: Option<f64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backend: Option<String>,
}

#[derive(Args, Debug, Default, Clone, Serialize, Deserialize)]
pub struct RtArgs {
    /// Surgery knot; S^3 itself when no knot is given.
    #[command(flatten)]
    #[serde(flatten)]
    pub knot: KnotArgs,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub framing: Option<i64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backend: Option<String>,
}
