//! Command-line surface of hopfkit: JSON workspaces in, canonical JSON out.

pub mod commands;
pub mod error;
pub mod selftest;
pub mod workspace;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hopfkit::galois::H2Backend;
use serde::Serialize;
use serde_json::Value;

pub use error::CliError;
pub use workspace::Workspace;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Backend {
    Direct,
    Group,
}

impl From<Backend> for H2Backend {
    fn from(b: Backend) -> Self {
        match b {
            Backend::Direct => H2Backend::Direct,
            Backend::Group => H2Backend::Group,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hopfkit",
    version,
    about = "Exact computations with finite cocommutative Hopf algebras"
)]
pub struct Cli {
    /// Workspace JSON file with named groups, algebras, morphisms and extension data.
    #[arg(long, global = true)]
    pub workspace: Option<PathBuf>,
    /// Ground field: Q or F<p>; overrides the workspace.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "direct")]
    pub backend: Backend,
    #[arg(long, global = true, default_value_t = 16)]
    pub max_group_order: usize,
    /// Pretty-print with this many spaces; compact when absent.
    #[arg(long, global = true)]
    pub json_indent: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the Hopf algebra axioms.
    Check {
        algebra: String,
    },
    /// Hopf kernel of a morphism.
    Kernel {
        morphism: String,
    },
    /// Kernel pair `Eq(f)`.
    Eqpair {
        morphism: String,
    },
    /// Huq commutator of two subalgebras (an algebra name means the whole algebra).
    Commutator {
        x: String,
        y: String,
    },
    /// Center `Z(A)` with its Hopf-subalgebra flags.
    Center {
        algebra: String,
    },
    /// `A / A·K⁺` for a normal Hopf subalgebra `K`.
    Quotient {
        algebra: String,
        subalgebra: String,
    },
    /// `H₁(A) = A / A[A,A]⁺`.
    Abelianize {
        algebra: String,
    },
    /// Crossed product from an action and a cocycle.
    Crossed {
        action: String,
        cocycle: String,
    },
    /// Cleft-extension data of a surjection with a coalgebra section.
    CleftAnalyze {
        morphism: String,
        section: String,
    },
    /// Trivial, normal and class-𝓔 membership of an extension.
    ExtensionReport {
        morphism: String,
        #[arg(long)]
        section: Option<String>,
    },
    /// Fundamental group of a normal extension.
    Pi1 {
        morphism: String,
        #[arg(long)]
        section: Option<String>,
    },
    /// Second homology of a group (or of the codomain of a presentation).
    H2 {
        target: String,
    },
    /// Schur multiplier from the bar resolution.
    Schur {
        group: String,
    },
    /// Five-term exact sequence of a group extension.
    Fiveterm {
        morphism: String,
    },
    /// Run the full invariant battery.
    Selftest,
}

/// JSON text for `value`, compact or indented, with a trailing newline.
pub fn render<T: Serialize>(value: &T, indent: Option<usize>) -> String {
    let mut out = match indent {
        None => serde_json::to_string(value).expect("serializable"),
        Some(n) => {
            let pad = vec![b' '; n];
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
            let mut buf = Vec::new();
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
            value.serialize(&mut ser).expect("serializable");
            String::from_utf8(buf).expect("utf-8")
        }
    };
    out.push('\n');
    out
}

fn execute(cli: &Cli) -> Result<(Value, bool), CliError> {
    let field = cli
        .field
        .as_deref()
        .map(|f| workspace::parse_field(&Value::String(f.to_string())))
        .transpose()?;
    let ws = match &cli.workspace {
        Some(path) => Workspace::from_path(path, field)?,
        None => Workspace::empty(field.unwrap_or(hopfkit::Field::Rational)),
    };
    let max = cli.max_group_order;
    use commands as c;
    match &cli.command {
        Command::Check { algebra } => c::check(&ws, algebra),
        Command::Kernel { morphism } => c::kernel(&ws, morphism),
        Command::Eqpair { morphism } => c::eqpair(&ws, morphism),
        Command::Commutator { x, y } => c::commutator(&ws, x, y),
        Command::Center { algebra } => c::center_cmd(&ws, algebra),
        Command::Quotient {
            algebra,
            subalgebra,
        } => c::quotient(&ws, algebra, subalgebra),
        Command::Abelianize { algebra } => c::abelianize(&ws, algebra),
        Command::Crossed { action, cocycle } => c::crossed(&ws, action, cocycle),
        Command::CleftAnalyze { morphism, section } => c::cleft_analyze(&ws, morphism, section),
        Command::ExtensionReport { morphism, section } => {
            c::extension_report_cmd(&ws, morphism, section.as_deref())
        }
        Command::Pi1 { morphism, section } => c::pi1_cmd(&ws, morphism, section.as_deref()),
        Command::H2 { target } => c::h2(&ws, target, cli.backend.into(), max),
        Command::Schur { group } => c::schur(&ws, group, max),
        Command::Fiveterm { morphism } => c::fiveterm(&ws, morphism, max),
        Command::Selftest => Ok(selftest::report(&selftest::run_all())),
    }
}

/// Runs a parsed command line; returns the text for standard output and the exit code.
pub fn run(cli: &Cli) -> (String, i32) {
    match execute(cli) {
        Ok((value, ok)) => (render(&value, cli.json_indent), if ok { 0 } else { 1 }),
        Err(e) => (render(&e.to_json(), cli.json_indent), e.exit_code()),
    }
}
