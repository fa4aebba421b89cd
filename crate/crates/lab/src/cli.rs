use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "brody-lab", version, about = "Brody reparametrization and hyperbolicity experiments")]
pub struct Cli {
    /// CSV output path (standard output when omitted).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Override the subcommand's invariant tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Radial quadrature size (grid size for `winkelmann --report boxes`).
    #[arg(long, global = true)]
    pub nr: Option<usize>,

    /// Angular quadrature size.
    #[arg(long, global = true)]
    pub ntheta: Option<usize>,

    /// Run the subcommand's built-in examples instead of an experiment.
    #[arg(long, global = true)]
    pub selftest: bool,

    /// JSON scenario file for the subcommand.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One Brody reparametrization step per map.
    Brody(BrodyArgs),
    /// Length/area profile, Cauchy–Schwarz check and Ahlfors radii.
    Ahlfors(AhlforsArgs),
    /// Empirical currents and closedness defects along a ladder.
    Current(CurrentArgs),
    /// Lelong monotonicity profile of a curve in a ball.
    Lelong(LelongArgs),
    /// Five-line polyhedron checks.
    Green(GreenArgs),
    /// Six-plane sextic deformation and root migration.
    Sextic(SexticArgs),
    /// Dense line on the torus blown up at a point.
    Winkelmann(WinkelmannArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `(1, nz)`
    Nz,
    /// `(1, truncated exp(nz))`
    Exp,
    /// `(1, n(z + z²))`
    Poly,
}

#[derive(Debug, Args)]
pub struct BrodyArgs {
    #[arg(long, value_enum, default_value = "nz")]
    pub family: Family,
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 4, 8])]
    pub n: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct AhlforsArgs {
    #[arg(long, value_enum, default_value = "nz")]
    pub family: Family,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Domain radius of the family map.
    #[arg(long, default_value_t = 8.0)]
    pub radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartitionKind {
    Hemispheres,
    Grid,
}

#[derive(Debug, Args)]
pub struct CurrentArgs {
    #[arg(long, value_enum, default_value = "nz")]
    pub family: Family,
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 4, 8, 16])]
    pub n: Vec<u32>,
    #[arg(long, value_enum, default_value = "hemispheres")]
    pub partition: PartitionKind,
    /// Boxes per side of the chart grid.
    #[arg(long, default_value_t = 4)]
    pub k: usize,
    /// Report Stokes residuals and closedness defects instead of cell masses.
    #[arg(long)]
    pub closedness: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveKind {
    /// `(z, 0)`
    Line,
    /// `(z, z²)`
    Parabola,
    /// `(z, z³)`
    Cubic,
    /// `(z², z³)`
    Cusp,
}

#[derive(Debug, Args)]
pub struct LelongArgs {
    #[arg(long, value_enum, default_value = "parabola")]
    pub curve: CurveKind,
    /// Ball radius.
    #[arg(long, default_value_t = 1.0)]
    pub eps: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GreenCheck {
    Preimage,
    Epsilon,
    Faces,
}

#[derive(Debug, Args)]
pub struct GreenArgs {
    #[arg(long, value_enum, default_value = "preimage")]
    pub check: GreenCheck,
    #[arg(long, default_value_t = 0.25)]
    pub eps: f64,
    #[arg(long, default_value_t = 2)]
    pub n: u32,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct SexticArgs {
    /// Double lines to process, in order, as `i-j` plane pairs (0-based).
    #[arg(long, value_delimiter = ',', default_values = ["0-1"])]
    pub order: Vec<String>,
    /// Number of decades in the ε ladder `10⁻¹ … 10⁻ᵐ`.
    #[arg(long, default_value_t = 6)]
    pub decades: i32,
    /// `ε_k` used for each deformation step.
    #[arg(long, default_value_t = 1e-2)]
    pub step_eps: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WinkelmannReport {
    Locus,
    Boxes,
}

#[derive(Debug, Args)]
pub struct WinkelmannArgs {
    #[arg(long, value_enum, default_value = "locus")]
    pub report: WinkelmannReport,
    /// Scale for the box report.
    #[arg(long, default_value_t = 200)]
    pub n: u32,
    #[arg(long, default_value_t = 4)]
    pub k: usize,
    #[arg(long, value_delimiter = ',', default_values_t = [10, 20, 40, 80, 160, 320])]
    pub ladder: Vec<u32>,
    /// Put the disc through the blown-up point (zero offset).
    #[arg(long)]
    pub through_p: bool,
}
