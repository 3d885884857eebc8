use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use og10_llv::{ManifoldProfile, Target};

#[derive(Debug, Parser)]
#[command(
    name = "og10-llv",
    version,
    about = "Exact fixed-subspace counts on the LLV decomposition of OG10-type cohomology"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Manifold invariants, e.g. `b2=24,euler=176904,dim=10`; omitted keys keep their defaults.
    #[arg(long, global = true, value_parser = parse_profile, default_value = "b2=24,euler=176904,dim=10")]
    pub profile: ManifoldProfile,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fixed-subspace dimensions for one automorphism.
    Invariants(InvariantsArgs),
    /// Reconstruct a polynomial in r and diff it against the printed one.
    Table(TableArgs),
    /// Euler-characteristic feasibility scan for free quotients.
    Check(CheckArgs),
    /// Certify Sym²(Λ²V) = Sym²V + Λ⁴V + V(2,2) for D_rank.
    Weyl(WeylArgs),
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    /// Order of the automorphism on H².
    #[arg(long)]
    pub order: u32,
    /// Eigenvalue multiplicities a0,a1,... indexed by powers of exp(2πi/order).
    #[arg(long, value_delimiter = ',', conflicts_with = "invariant_dim", required_unless_present = "invariant_dim")]
    pub mults: Option<Vec<u64>>,
    /// Dimension of the invariant subspace of H² (orders 1, 2, 3).
    #[arg(long)]
    pub invariant_dim: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    A,
    B,
    C,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub order: u32,
    /// Row of the totals table: a, b (order 2) or c (order 3).
    #[arg(long, value_enum, conflicts_with = "target", required_unless_present = "target")]
    pub case: Option<Case>,
    /// Intermediate quantity: sym2, lambda2, lambda2_zeta, lambda4, sym2lambda2, v22, verbitsky, total_a, total_b, total_c.
    #[arg(long, value_parser = Target::from_str)]
    pub target: Option<Target>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Orders to scan; defaults to the prime divisors of χ(X, O_X).
    #[arg(long, value_delimiter = ',')]
    pub orders: Option<Vec<u32>>,
    /// Which totals to test.
    #[arg(long, value_enum, default_value_t = SourceArg::Both)]
    pub source: SourceArg,
    /// Also scan every rational H² character of each composite divisor of χ(X, O_X).
    #[arg(long)]
    pub include_composite: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Derived,
    PaperLiteral,
    Both,
}

#[derive(Debug, Args)]
pub struct WeylArgs {
    /// Rank n of D_n (3..=13).
    #[arg(long, value_parser = clap::value_parser!(u8).range(3..=13))]
    pub rank: u8,
    /// Only the dimension bookkeeping.
    #[arg(long)]
    pub dim_only: bool,
    /// Cap on elementary steps; overrides OG10_LLV_WORK_CAP.
    #[arg(long)]
    pub work_cap: Option<u64>,
}

/// Environment variable read for the default work cap.
pub const WORK_CAP_ENV: &str = "OG10_LLV_WORK_CAP";

pub fn parse_profile(s: &str) -> Result<ManifoldProfile, String> {
    let mut profile = ManifoldProfile::og10();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let value: u64 = value.trim().parse().map_err(|_| format!("`{value}` is not a non-negative integer"))?;
        match key.trim() {
            "b2" => profile.second_betti = value,
            "euler" => profile.total_euler = value,
            "dim" => profile.complex_dimension = value,
            other => return Err(format!("unknown profile key `{other}` (expected b2, euler, dim)")),
        }
    }
    profile.validate().map_err(|e| e.to_string())?;
    Ok(profile)
}
