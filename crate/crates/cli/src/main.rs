use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nichols_core::input::{parse_input, Convention, InputSpec};
use nichols_core::report::{analyze, render, AnalysisReport, Depth, Status};
use serde_json::json;

#[derive(Parser)]
#[command(name = "nichols", version, about = "Calabi-Yau analysis of Hecke-type Nichols algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest tensor degree to compute (default depends on the dimension)
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Orientation of the braiding table; overrides the document's option
    #[arg(long, global = true, value_enum)]
    convention: Option<ConventionArg>,
}

#[derive(Subcommand)]
enum Command {
    /// Check invertibility, the braid equation, the Hecke label and rigidity
    Validate { input: String },
    /// Run the full pipeline and print the report
    Analyze { input: String },
    /// Run the full pipeline and print only the Frobenius/Nakayama cross-check
    Oracle { input: String },
    /// Print the input document of a built-in family
    Builtin {
        /// example2, trivial1 or diagonal
        name: String,
        /// q-matrix for `diagonal`, as JSON, e.g. '[[1,"2"],["1/2",1]]'
        #[arg(long)]
        qmatrix: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Standard,
    Transpose,
}

fn read_source(path: &str) -> Result<Vec<u8>, String> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| e.to_string())?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn reject(format: Format, stage: &str, error: &str) -> ExitCode {
    match format {
        Format::Json => {
            let doc = json!({"status": "rejected", "failure": {"stage": stage, "error": error}});
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => println!("REJECTED at stage {stage}: {error}"),
    }
    ExitCode::from(2)
}

fn load(cli: &Cli, path: &str) -> Result<(InputSpec, Vec<u8>), ExitCode> {
    let source = read_source(path).map_err(|e| reject(cli.format, "read", &e))?;
    let text = String::from_utf8(source.clone()).map_err(|e| reject(cli.format, "parse", &e.to_string()))?;
    let mut spec = parse_input(&text).map_err(|e| reject(cli.format, "parse", &e.to_string()))?;
    if cli.cap.is_some() {
        spec.options.cap = cli.cap;
    }
    if let Some(c) = cli.convention {
        spec.options.convention = match c {
            ConventionArg::Standard => Convention::Standard,
            ConventionArg::Transpose => Convention::Transpose,
        };
    }
    Ok((spec, source))
}

fn emit(format: Format, rep: &AnalysisReport) {
    match format {
        Format::Json => print!("{}", rep.to_json()),
        Format::Text => print!("{}", rep.to_text()),
    }
}

fn emit_oracle(format: Format, rep: &AnalysisReport) {
    match format {
        Format::Json => {
            let doc = json!({
                "status": rep.status,
                "failure": rep.failure,
                "oracle": rep.oracle,
                "phi": rep.phi,
                "D": rep.homological_matrix,
                "Q": rep.quantum_label,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => match &rep.oracle {
            Some(o) => {
                println!("{:<28}{}", "nakayama (brute force):", render(&o.nakayama_deg1_bruteforce));
                println!("{:<28}{}", "nakayama (formula):", render(&o.nakayama_deg1_formula));
                println!("{:<28}{}", "agreement:", o.agreement);
                println!("{:<28}{}", "phi is transpose:", o.phi_is_transpose);
                println!("{:<28}{}", "form nondegenerate:", o.form_nondegenerate);
                println!("{:<28}{}", "modular function = counit:", o.modular_function_is_counit);
                if let Some(f) = &rep.failure {
                    println!("INTERNAL ERROR at stage {}: {}", f.stage, f.error);
                }
            }
            None => print!("{}", rep.to_text()),
        },
    }
}

fn run_builtin(cli: &Cli, name: &str, qmatrix: Option<&str>) -> ExitCode {
    let mut doc = json!({ "family": name });
    if let Some(q) = qmatrix {
        match serde_json::from_str::<serde_json::Value>(q) {
            Ok(v) => doc["qmatrix"] = v,
            Err(e) => return reject(cli.format, "builtin", &format!("qmatrix: {e}")),
        }
    }
    match parse_input(&doc.to_string()) {
        Ok(mut spec) => {
            spec.options.cap = cli.cap;
            println!("{}", spec.to_json());
            ExitCode::SUCCESS
        }
        Err(e) => reject(cli.format, "builtin", &e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (path, depth, oracle_only) = match &cli.command {
        Command::Builtin { name, qmatrix } => return run_builtin(&cli, name, qmatrix.as_deref()),
        Command::Validate { input } => (input.clone(), Depth::Validate, false),
        Command::Analyze { input } => (input.clone(), Depth::Full, false),
        Command::Oracle { input } => (input.clone(), Depth::Full, true),
    };
    let (spec, source) = match load(&cli, &path) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let rep = analyze(&spec, &source, depth);
    if oracle_only {
        emit_oracle(cli.format, &rep);
    } else {
        emit(cli.format, &rep);
    }
    if rep.status == Status::InternalError {
        if let Some(f) = &rep.failure {
            eprintln!("internal error at stage {}: {}", f.stage, f.error);
        }
    }
    ExitCode::from(rep.status.exit_code() as u8)
}
