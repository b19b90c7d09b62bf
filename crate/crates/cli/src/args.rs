use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sigmak_core::{BoundaryGeometry, Rational};

#[derive(Debug, Parser)]
#[command(name = "sigmak", version, about = "Exact sigma_k-curvature computations on sphere x hyperbolic products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for (m, n) with sigma_k(A_{m,n}) = 0.
    Search(SearchArgs),
    /// sigma profile, cone verdict and T_3 of the interior Schouten tensor.
    Profile(ProfileArgs),
    /// H_4 and S_3 on the boundary as polynomials in kappa, or evaluated.
    Boundary(BoundaryArgs),
    /// Recompute every reference value and report pass/fail.
    Verify(VerifyArgs),
    /// Leading-order Jacobi index model.
    Index(IndexArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Geometry {
    Cap,
    Ball,
}

impl From<Geometry> for BoundaryGeometry {
    fn from(g: Geometry) -> Self {
        match g {
            Geometry::Cap => BoundaryGeometry::Cap,
            Geometry::Ball => BoundaryGeometry::Ball,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Modes {
    /// Sphere harmonics for the ball, Weyl estimate for the cap.
    Auto,
    Sphere,
    Weyl,
    ConstantOnly,
}

#[derive(Debug, Clone, Args)]
pub struct CacheArgs {
    /// Always recompute; neither read nor write the cache.
    #[arg(long)]
    pub no_cache: bool,
    /// Directory for cached search results.
    #[arg(long, env = "SIGMAK_CACHE_DIR", value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for the search (default: all cores).
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    /// Bound for both m and n.
    #[arg(long, required_unless_present_all = ["m_max", "n_max"])]
    pub max: Option<u64>,
    #[arg(long)]
    pub m_max: Option<u64>,
    #[arg(long)]
    pub n_max: Option<u64>,
    /// Keep only hits with m + n > 8 and sigma_j >= 0 for j < k.
    #[arg(long)]
    pub admissible: bool,
    /// Report (n, m) alongside (m, n).
    #[arg(long)]
    pub both_orientations: bool,
    /// Keep the m = n hits of odd k.
    #[arg(long)]
    pub include_trivial: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    /// Sphere dimension.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Hyperbolic dimension.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub kmax: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[arg(long, value_enum)]
    pub geometry: Geometry,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub m: u64,
    /// Exact mean curvature, e.g. `3/2`.
    #[arg(long, value_parser = parse_rational, conflicts_with = "epsilon", allow_hyphen_values = true)]
    pub kappa: Option<Rational>,
    /// Boundary parameter; kappa = cot(eps) for the cap, coth(eps) for the ball (floating point).
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[arg(long, value_enum)]
    pub geometry: Geometry,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub m: u64,
    /// Comma-separated list of rational kappa values.
    #[arg(long, value_parser = parse_rational, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    pub kappa: Vec<Rational>,
    #[arg(long, value_enum, default_value_t = Modes::Auto)]
    pub modes: Modes,
    /// Volume of the closed factor for the Weyl estimate.
    #[arg(long, value_parser = parse_rational, default_value = "1")]
    pub volume: Rational,
    /// Top of the Weyl mode list (default: just above the largest threshold).
    #[arg(long, value_parser = parse_rational)]
    pub lambda_max: Option<Rational>,
    /// Largest harmonic degree the sphere mode list may grow to.
    #[arg(long, default_value_t = 100_000)]
    pub l_cap: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| e.to_string())
}
