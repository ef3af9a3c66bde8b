use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod run;
mod table;

#[derive(Parser, Debug)]
#[command(
    name = "gpoisson",
    version,
    about = "Graded Poisson structures: verification, twists, rigidity and cohomology"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Structure document (JSON)
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "catalog")]
    pub input: Option<PathBuf>,

    /// Built-in catalog entry
    #[arg(long, global = true, value_name = "NAME")]
    pub catalog: Option<String>,

    /// Catalog parameter, repeatable
    #[arg(long = "param", global = true, value_name = "K=V", value_parser = parse_param)]
    pub params: Vec<(String, String)>,

    /// Highest internal degree for windowed computations
    #[arg(long, global = true, default_value_t = 6, value_name = "N")]
    pub max_degree: i64,

    /// Largest accepted --max-degree
    #[arg(long, global = true, default_value_t = 20, value_name = "N")]
    pub degree_cap: i64,

    /// Central element for ozone checks, repeatable; defaults to the potential
    #[arg(long, global = true, value_name = "POLY")]
    pub central: Vec<String>,

    /// Derivation document for `twist`
    #[arg(
        long,
        global = true,
        value_name = "PATH",
        conflicts_with = "derivation_name"
    )]
    pub derivation: Option<PathBuf>,

    /// Named derivation of the catalog entry for `twist`
    #[arg(long, global = true, value_name = "NAME")]
    pub derivation_name: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Check that the bracket is graded and satisfies Jacobi
    Verify,
    /// Modular derivation and its divergence
    Modular,
    /// Split off the modular part: the unimodular twist and its derivation
    Unimodularize,
    /// Twist by a semi-Poisson derivation
    Twist,
    /// Rigidity of graded twisting with Gpd and Gspd dimensions
    Rgt,
    /// Per-degree dimensions of Poisson, Hamiltonian and ozone derivations
    Derivations,
    /// Per-degree bases of the Poisson center
    Center,
    /// Poisson cohomology and zeroth homology over a degree window
    Cohomology,
    /// Every applicable computation, compared with the catalog expectations
    Report,
    /// List catalog entries, or show one
    Catalog {
        /// Entry to show; `--catalog` works too
        name: Option<String>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected K=V, got `{s}`"))?;
    if k.trim().is_empty() {
        return Err(format!("empty parameter name in `{s}`"));
    }
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(run::main(&cli))
}
