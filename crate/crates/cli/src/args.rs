use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact computations for finite-dimensional Hopf algebras.
///
/// Wherever an algebra is expected, give a catalog key (`cyclic:n`, `bk:k`,
/// `cplus:k`, `cminus:k`) or the path of a Hopf algebra JSON file. The JSON
/// report goes to standard output and progress to standard error.
#[derive(Debug, Parser)]
#[command(name = "hopfdy", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Also write the report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub json_out: Option<PathBuf>,
    /// Give up with exit code 5 after this many seconds.
    #[arg(long, global = true, value_name = "N")]
    pub max_seconds: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Hopf algebra axioms.
    Verify { source: String },
    /// Build and check the Drinfeld double.
    Double { source: String },
    /// R-matrix checks, tangent spaces and the B_k family.
    Rmatrix {
        #[command(subcommand)]
        action: RAction,
    },
    /// Same as `rmatrix tangent`.
    #[command(hide = true)]
    Tangent(RArgs),
    /// Davydov-Yetter cohomology of a functor.
    Dy {
        #[command(subcommand)]
        kind: DyKind,
    },
    /// Relative Ext over the pair (D(H), H).
    Relext(RelextArgs),
    /// Compare two independent computations.
    Crosscheck {
        #[command(subcommand)]
        which: Which,
    },
    /// List the built-in algebras, or export one as a file.
    Catalog {
        /// Print this key as a Hopf algebra file instead of a report.
        #[arg(long, value_name = "KEY")]
        export: Option<String>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RSelect {
    /// The triangular R-matrix R₀ of B_k.
    #[arg(long, conflicts_with_all = ["trivial_r", "r"])]
    pub r0: bool,
    /// R = 1 ⊗ 1.
    #[arg(long, conflicts_with = "r")]
    pub trivial_r: bool,
    /// An R-matrix file.
    #[arg(long, value_name = "FILE")]
    pub r: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RArgs {
    pub source: String,
    #[command(flatten)]
    pub r: RSelect,
}

#[derive(Debug, Subcommand)]
pub enum RAction {
    /// Check the R-matrix axioms.
    Check(RArgs),
    /// Basis of the tangent space of the R-matrix variety.
    Tangent(RArgs),
    /// R_λ on B_k for a k × k matrix λ.
    Family {
        source: String,
        #[arg(long, value_name = "FILE")]
        lambda: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ResolutionArg {
    Bar,
    Cover,
}

#[derive(Debug, Subcommand)]
pub enum DyKind {
    /// The identity functor.
    Id {
        source: String,
        #[arg(long)]
        degree: usize,
    },
    /// The tensor product functor with the structure from R.
    Tensor {
        source: String,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        r: RSelect,
    },
    /// The restriction functor to a Hopf subalgebra.
    Res {
        source: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_name = "KEY")]
        sub: String,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RelextArgs {
    pub source: String,
    #[arg(long)]
    pub degree: usize,
    #[arg(long, value_enum, default_value = "cover")]
    pub resolution: ResolutionArg,
    /// Coefficients Hom_K(H, 𝕜) for this subalgebra K instead of 𝕜.
    #[arg(long, value_name = "KEY")]
    pub sub: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Which {
    /// DY cohomology of the tensor functor against Ext over the tensor pair.
    AdjunctionTensor {
        source: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, value_enum, default_value = "cover")]
        resolution: ResolutionArg,
        #[command(flatten)]
        r: RSelect,
    },
    /// DY cohomology of a restriction against Ext over (D(H), H).
    AdjunctionRes {
        source: String,
        #[arg(long, value_name = "KEY")]
        sub: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, value_enum, default_value = "cover")]
        resolution: ResolutionArg,
    },
    /// Tangent dimension against dim H²(tensor) − 2 dim H²(id).
    DimensionFormula {
        source: String,
        #[command(flatten)]
        r: RSelect,
    },
    /// Ext over the tensor pair against the Künneth sum.
    Kunneth {
        source: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
}
