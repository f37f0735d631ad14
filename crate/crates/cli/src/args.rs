use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mbe_core::{Deformation, Rational, Var};

#[derive(Debug, Parser)]
#[command(name = "mbe", version, about = "Exact checks for the K-family of R-matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the registered checks and report one line per check.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[arg(long)]
        json: bool,
    },
    /// Solve the linear RTT system for the general 4x4 R-matrix.
    SolveRtt {
        #[arg(long, value_parser = parse_deformation)]
        deformation: Deformation,
        #[arg(long)]
        json: bool,
    },
    /// Frobenius norm of the braid residual over a grid of K values.
    Scan(ScanArgs),
    /// Normal-order an expression in the group or plane algebra.
    Plane {
        #[arg(long, value_parser = parse_deformation)]
        deformation: Deformation,
        #[arg(long = "K", value_parser = parse_rational)]
        k: Option<Rational>,
        #[command(flatten)]
        bindings: Bindings,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the (p, q) -> (g, h) contraction identity by identity.
    Contract {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    All,
    Catalog,
    Identities,
    Rtt,
    Plane,
    Contraction,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Catalog => "catalog",
            Scope::Identities => "identities",
            Scope::Rtt => "rtt",
            Scope::Plane => "plane",
            Scope::Contraction => "contraction",
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Bindings {
    #[arg(long, value_parser = parse_rational)]
    pub p: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub q: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub g: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub h: Option<Rational>,
}

impl Bindings {
    pub fn pairs(&self) -> Vec<(Var, Rational)> {
        [(Var::P, &self.p), (Var::Q, &self.q), (Var::G, &self.g), (Var::H, &self.h)]
            .into_iter()
            .filter_map(|(v, x)| x.clone().map(|x| (v, x)))
            .collect()
    }
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[arg(long, value_parser = parse_deformation)]
    pub deformation: Deformation,
    #[command(flatten)]
    pub bindings: Bindings,
    #[arg(long, value_parser = parse_rational)]
    pub kmin: Rational,
    #[arg(long, value_parser = parse_rational)]
    pub kmax: Rational,
    /// Number of grid points, endpoints included.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub steps: u32,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

fn parse_deformation(s: &str) -> Result<Deformation, String> {
    s.parse().map_err(|e: mbe_core::Error| e.to_string())
}

/// Integers and `n/d` fractions; decimal literals are refused.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    if s.contains(['.', 'e', 'E']) {
        return Err(format!("`{s}` is not exact; write it as n/d"));
    }
    s.trim().parse::<Rational>().map_err(|e| format!("`{s}`: {e}"))
}
