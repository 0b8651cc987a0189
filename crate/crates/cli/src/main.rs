//! `twistalg`: one verb per library operation, exact output, stable exit
//! codes (0 pass, 1 a mathematical check failed, 2 input error).

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    CheckJacobi,
    Killing,
    Semisimple,
    Cohomology,
    Cobracket,
    Cocycle,
    Cojacobi,
    Dual,
    Cybe,
    Classify,
    EsSubalgebra,
    Pushforward,
    Cartan,
    Iwasawa,
    HopfCheck,
    TwistCheck,
    TwistDeform,
    TwistModule,
    Moyal,
    Star,
    Assoc,
    ExtractR,
    PoissonCheck,
    Euler,
    Surface,
    Obstruct,
}

#[derive(Debug, Parser)]
#[command(name = "twistalg", version, about = "Exact Lie bialgebra, r-matrix, Hopf twist and star product checks")]
pub struct Cli {
    /// Operation to run.
    #[arg(value_enum)]
    pub verb: Verb,
    /// Input documents, in the order the verb expects.
    pub files: Vec<PathBuf>,
    /// Emit a single JSON document instead of text.
    #[arg(long)]
    pub json: bool,
    /// Truncation order for ħ-series.
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    /// Cochain degree; all supported degrees when omitted.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Coefficient module: trivial, adjoint or adjoint2.
    #[arg(long, default_value = "trivial")]
    pub module: String,
    /// Genus of the closed orientable surface.
    #[arg(long)]
    pub genus: Option<u64>,
    /// Twist parameter c in F = exp(−cħ(∂1⊗∂2 − ∂2⊗∂1)), as a scalar literal.
    #[arg(long, default_value = "i")]
    pub coeff: String,
    /// Polynomial in x1, x2; repeat for several operands.
    #[arg(long = "expr")]
    pub exprs: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match commands::run(&cli) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                print!("{}", out.text);
                if !out.text.ends_with('\n') {
                    println!();
                }
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            if json {
                let doc = serde_json::json!({ "error": e.to_string(), "exit_code": e.code() });
                println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
            }
            ExitCode::from(e.code())
        }
    }
}
