//! Command-line surface. Arguments stay as text here; [`crate::request`]
//! turns them into typed, validated parameters.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "fracton-lab",
    version,
    about = "Fracton thermodynamics and filling-factor classification",
    allow_negative_numbers = true
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Absolute tolerance for fractal-index quadrature.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Number of class members to list.
    #[arg(long, global = true)]
    pub count: Option<usize>,

    #[command(subcommand)]
    pub command: Commands,
}

#[derive(Debug, Subcommand)]
pub enum Commands {
    /// Hausdorff dimension, dual partner and class of each filling factor.
    Classify {
        #[arg(required = true)]
        nu: Vec<String>,
    },
    /// Leading members of the universal class h.
    ClassMembers { h: String },
    /// Dual filling factor of each ν.
    Dual {
        #[arg(required = true)]
        nu: Vec<String>,
    },
    /// Farey sequence of order n.
    Farey { n: u64 },
    /// Unimodularity verdict for each adjacent pair of a chain.
    ValidateChain {
        nu: Vec<String>,
        /// Read the chains from a fixture file instead.
        #[arg(long, conflicts_with = "nu")]
        fixtures: Option<PathBuf>,
    },
    /// Checks that every interior fraction of F_n opens its own class.
    TheoremCheck { n: u64 },
    /// Occupation, Y and Θ at each fugacity.
    Occupation {
        h: String,
        #[arg(required = true)]
        xi: Vec<String>,
    },
    /// Entropy per state at each occupation.
    Entropy {
        h: String,
        #[arg(required = true)]
        n: Vec<String>,
    },
    /// Free energy kT·lnΘ at each fugacity.
    FreeEnergy {
        h: String,
        #[arg(required = true)]
        xi: Vec<String>,
        #[arg(long, default_value = "1")]
        kt: String,
    },
    /// Fractal index of each class.
    FractalIndex {
        #[arg(required = true)]
        h: Vec<String>,
    },
    /// Central charges by both routes, side by side (default ν = 1..6).
    CentralCharge { nu: Vec<u32> },
    /// Tabulate over a grid: lo:hi:n[:log].
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        h: Option<String>,
        #[arg(long)]
        grid: Option<String>,
    },
    /// Validate fixture files (the bundled set when none is given).
    ValidateFixtures {
        #[arg(long)]
        fixtures: Vec<PathBuf>,
        /// List every check, not only the findings.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Sweep ξ: xi, Y, n, theta, S/K.
    Occupation,
    /// Sweep n: n, S/K.
    Entropy,
    /// Sweep h: h, i_f, err.
    Index,
}
