use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;
mod report;

use commands::{FlagInput, GauduchonInput};

#[derive(Parser)]
#[command(
    name = "flagcy",
    version,
    about = "Exact invariant-class calculus on flag varieties and torus bundles over them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Skip validation and report whatever the checks return.
    #[arg(long, global = true)]
    diagnostic: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct FlagArgs {
    /// Lie family: A, B, C, D, E, F or G.
    #[arg(value_name = "TYPE")]
    lie_type: String,
    rank: usize,
    /// 1-based simple roots in the parabolic set, comma separated; empty for the full flag.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    parabolic: String,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, Picard number, anticanonical class and root table.
    Describe {
        #[command(flatten)]
        flag: FlagArgs,
    },
    /// Integral basis of degree-zero line bundles.
    PrimitiveBasis {
        #[command(flatten)]
        flag: FlagArgs,
        #[arg(long, default_value = "anticanonical", allow_hyphen_values = true)]
        omega0: String,
        /// 1-based pivot simple root.
        #[arg(long)]
        gamma: Option<usize>,
    },
    /// t-Gauduchon Ricci-flat metric on U(O(k) + F_1 + ...).
    Gauduchon {
        #[command(flatten)]
        flag: FlagArgs,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Line bundles as `a,b;c,d`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        bundles: String,
        /// Override of λ, only with --diagnostic.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Balanced metric on U(F_1 + ... + F_2r).
    Balanced {
        #[command(flatten)]
        flag: FlagArgs,
        #[arg(long, default_value = "anticanonical", allow_hyphen_values = true)]
        omega0: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        bundles: String,
    },
    /// Finite-difference check of the eigenvalues of ω₀⁻¹ψ at the origin (type A).
    VerifyNumeric {
        #[command(flatten)]
        flag: FlagArgs,
        #[arg(long, default_value = "anticanonical", allow_hyphen_values = true)]
        omega0: String,
        #[arg(long, allow_hyphen_values = true)]
        psi: String,
        #[arg(long, default_value_t = 1e-4)]
        step: f64,
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
    },
}

impl From<FlagArgs> for FlagInput {
    fn from(a: FlagArgs) -> Self {
        FlagInput {
            lie_type: a.lie_type,
            rank: a.rank,
            parabolic: a.parabolic,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let diagnostic = cli.diagnostic;
    let report = match cli.command {
        Command::Describe { flag } => commands::describe(&flag.into()),
        Command::PrimitiveBasis { flag, omega0, gamma } => {
            commands::primitive_basis_cmd(&flag.into(), &omega0, gamma)
        }
        Command::Gauduchon { flag, k, t, bundles, lambda } => commands::gauduchon(
            &flag.into(),
            &GauduchonInput {
                k,
                t: &t,
                bundles: &bundles,
                lambda: lambda.as_deref(),
                diagnostic,
            },
        ),
        Command::Balanced { flag, omega0, bundles } => {
            commands::balanced(&flag.into(), &omega0, &bundles, diagnostic)
        }
        Command::VerifyNumeric { flag, omega0, psi, step, tol } => {
            commands::verify_numeric(&flag.into(), &omega0, &psi, step, tol)
        }
    };
    match cli.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if let Some(f) = &report.failure {
        eprintln!("error: {}: {}", f.code, f.message);
    }
    std::process::exit(report.exit() as i32);
}
