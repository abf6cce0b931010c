//! Command-line front end: argument parsing, JSON I/O and the subcommands.
//! All structured output is JSON on stdout; logs go to stderr.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input or
//! an exceeded budget.

pub mod commands;
pub mod json;

use std::fmt;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ringel_core::{Budget, Error};

#[derive(Parser, Debug)]
#[command(name = "ringel", version, about = "Exact Hall numbers and Hall polynomials for quiver representations")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Suppress progress messages on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Largest field order that may be built.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_MAX_Q)]
    pub max_q: u32,
    /// Largest number of candidates any single enumeration may visit.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_MAX_CANDIDATES)]
    pub max_candidates: u64,
    /// Largest number of subspace tuples any single enumeration may visit.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_MAX_SUBSPACES)]
    pub max_subspaces: u64,
}

impl Global {
    pub fn budget(&self) -> Budget {
        Budget { max_q: self.max_q, max_candidates: self.max_candidates, max_subspaces: self.max_subspaces }
    }

    pub fn log(&self, msg: impl fmt::Display) {
        if !self.quiet {
            eprintln!("ringel: {msg}");
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the isomorphism classes of a given dimension vector.
    Classify {
        /// Quiver preset name or JSON.
        #[arg(long)]
        quiver: String,
        /// Dimension vector, e.g. "[1,1]".
        #[arg(long)]
        dims: String,
        /// Field order.
        #[arg(long)]
        q: u32,
        /// Only nilpotent representations.
        #[arg(long)]
        nilpotent: bool,
    },
    /// Hall number F and Riedtmann number P for representations M, N, X
    /// (N the submodule, M the quotient).
    Hall {
        /// Representation JSON (inline, file, or `-` for stdin).
        m: String,
        n: String,
        x: String,
    },
    /// Number of subrepresentations of X with dimension vector E.
    Grassmannian {
        x: String,
        /// Dimension vector of the subrepresentations.
        #[arg(long)]
        dims: String,
    },
    /// Hall polynomial of three partitions or three discrete classes.
    Hallpoly {
        /// Three partitions, e.g. "[1,1]" "[1]" "[1,1,1]".
        #[arg(long, num_args = 3, value_names = ["LAMBDA", "MU", "NU"], conflicts_with = "discrete")]
        classical: Option<Vec<String>>,
        /// Three discrete classes as JSON.
        #[arg(long, num_args = 3, value_names = ["MU", "NU", "XI"])]
        discrete: Option<Vec<String>>,
    },
    /// Segre Hall polynomial with the fixed-module sums and counting
    /// polynomials of the three symbols.
    Segre {
        rho: String,
        sigma: String,
        tau: String,
        /// Also check all sums by brute force over F_q.
        #[arg(long)]
        check_q: Option<u32>,
    },
    /// Hall polynomial of three Kronecker decomposition symbols.
    Decomp { alpha: String, beta: String, gamma: String },
    /// Run an identity sweep and print one report per instance.
    Verify {
        /// green, assoc, riedtmann, tables, torsion, kronecker or example.
        #[arg(long)]
        identity: String,
        #[arg(long, default_value = "jordan")]
        quiver: String,
        #[arg(long)]
        q: u32,
        /// Same bound at every vertex (total dimension for the Jordan quiver).
        #[arg(long, conflicts_with = "dims")]
        max_dim: Option<usize>,
        /// Bound on dimension vectors, e.g. "[2,2]".
        #[arg(long)]
        dims: Option<String>,
        /// Regular dimension multiple minus one for the Kronecker identities.
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Reproduce the worked Jordan-quiver example over F_q.
    Example {
        #[arg(long)]
        q: u32,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input or an exceeded budget.
    Input(String),
    /// A verification or internal consistency check failed.
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotUniversal(_) | Error::Inconsistent { .. } | Error::Internal(_) => CliError::Failed(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Failed(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Failed(_) => ExitCode::from(1),
            CliError::Input(_) => ExitCode::from(2),
        }
    }
}
