mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub const DEFAULT_SEED: u64 = 20240101;

/// Exact chart-level computations with Frobenius liftings mod p^2.
#[derive(Parser)]
#[command(name = "froblift", version)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads for scans over independent values.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone)]
pub struct ChartArgs {
    /// Chart file (JSON, or TOML by extension): { p, vars, images, log_rank, center }.
    #[arg(long)]
    pub chart: PathBuf,
    /// Prime; must match the chart's `p` when both are given.
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Args, Clone)]
pub struct SplitArgs {
    /// Splitting file: { p, vars, u }.
    #[arg(long, conflicts_with_all = ["vars", "u"])]
    pub splitting: Option<PathBuf>,
    #[arg(long)]
    pub p: Option<u64>,
    /// Comma separated variable names, with --u.
    #[arg(long, requires = "u")]
    pub vars: Option<String>,
    /// Key polynomial of the trace form.
    #[arg(long, requires = "vars")]
    pub u: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum WittOp {
    Add,
    Sub,
    Mul,
    Neg,
    Frobenius,
    Ghost,
}

#[derive(Subcommand)]
pub enum Command {
    /// Arithmetic in W_2(F_p), checked against the ghost map.
    Witt {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        op: WittOp,
        /// First operand as `a0,a1`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Second operand for add, sub and mul.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Validate a chart and print its delta values.
    LiftValidate(ChartArgs),
    /// delta(f) = (F*(f) - f^p) / p for f over Z/p^2.
    Delta {
        #[command(flatten)]
        chart: ChartArgs,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// The xi matrix and its determinant.
    XiDet(ChartArgs),
    /// The logarithmic xi matrix for x_1 ... x_r = 0.
    LogXiDet {
        #[command(flatten)]
        chart: ChartArgs,
        /// Defaults to the chart's `log_rank`.
        #[arg(long)]
        log_rank: Option<usize>,
    },
    /// The trace-form splitting attached to the lifting.
    SplitFromLift(ChartArgs),
    /// Whether F*(I) lies in I^p over Z/p^2.
    Compat {
        #[command(flatten)]
        chart: ChartArgs,
        /// Semicolon separated generators over Z/p^2.
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// Whether the lifting extends to the blow-up along coordinates.
    Blowup {
        #[command(flatten)]
        chart: ChartArgs,
        /// Comma separated names or 1-based indices; defaults to the chart's `center`.
        #[arg(long)]
        center: Option<String>,
    },
    /// Product of two charts and the determinant identity.
    Product {
        #[command(flatten)]
        chart: ChartArgs,
        /// Second chart; its variables come last.
        #[arg(long)]
        other: PathBuf,
    },
    /// The lifting induced on a coordinate divisor.
    Restrict {
        #[command(flatten)]
        chart: ChartArgs,
        /// Name or 1-based index of the coordinate.
        #[arg(long)]
        divisor: String,
    },
    /// Base change psi along phi: A^n -> chart.
    Psi {
        #[command(flatten)]
        chart: ChartArgs,
        /// Semicolon separated components of phi over F_p, one per chart variable.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Comma separated names of the source variables; defaults to x1..xn.
        #[arg(long)]
        source_vars: Option<String>,
    },
    /// The canonical Z/p^2 point over an F_p point.
    PointLift {
        #[command(flatten)]
        chart: ChartArgs,
        /// Comma separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Checks theta(nu(f)) = F*(f) on f or on random samples.
    Roundtrip {
        #[command(flatten)]
        chart: ChartArgs,
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Fedder's criterion for F_p[x] / (f) at the origin.
    Fedder {
        #[arg(long)]
        p: u64,
        /// Comma separated names; defaults to x1..xn.
        #[arg(long)]
        vars: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Whether a splitting is compatible with an ideal over F_p.
    CompatSplit {
        #[command(flatten)]
        split: SplitArgs,
        /// Semicolon separated generators over F_p.
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// Multiplicities of candidate factors in the key polynomial.
    Divisor {
        #[command(flatten)]
        split: SplitArgs,
        /// Semicolon separated nonconstant factors.
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
    },
    /// Average a splitting over a finite group of substitutions.
    Average {
        #[command(flatten)]
        split: SplitArgs,
        /// Group file: a list of maps, each a list of variable images.
        #[arg(long)]
        group: PathBuf,
    },
    /// Normal forms, flatness and the comparison with a lifting.
    CanonicalLiftCheck {
        #[command(flatten)]
        split: SplitArgs,
        /// Use the splitting of this chart and also run the comparison.
        #[arg(long, conflicts_with_all = ["splitting", "u"])]
        chart: Option<PathBuf>,
        /// Monomial degree cap for the flatness check (default 2p).
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Coefficient of x^(p-1) y^(p-1) in x (x - y) ... (x - (p-1) y) y^(p-2).
    P1Scan {
        #[arg(
            long = "p",
            env = "FROBLIFT_PRIMES",
            value_delimiter = ',',
            default_value = "3,5,7,11,13"
        )]
        primes: Vec<u64>,
    },
    /// Screen a CSV table id,degree,rho,b3[,c1c2][,h12].
    FanoScreen { file: PathBuf },
    /// N = 4 M m^3 against M + Mm + Mm^2 + Mm^3.
    Bounds {
        #[arg(long)]
        m: u64,
        #[arg(long = "M")]
        big_m: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Witt { .. } => "witt",
            Command::LiftValidate(_) => "lift-validate",
            Command::Delta { .. } => "delta",
            Command::XiDet(_) => "xi-det",
            Command::LogXiDet { .. } => "log-xi-det",
            Command::SplitFromLift(_) => "split-from-lift",
            Command::Compat { .. } => "compat",
            Command::Blowup { .. } => "blowup",
            Command::Product { .. } => "product",
            Command::Restrict { .. } => "restrict",
            Command::Psi { .. } => "psi",
            Command::PointLift { .. } => "point-lift",
            Command::Roundtrip { .. } => "roundtrip",
            Command::Fedder { .. } => "fedder",
            Command::CompatSplit { .. } => "compat-split",
            Command::Divisor { .. } => "divisor",
            Command::Average { .. } => "average",
            Command::CanonicalLiftCheck { .. } => "canonical-lift-check",
            Command::P1Scan { .. } => "p1-scan",
            Command::FanoScreen { .. } => "fano-screen",
            Command::Bounds { .. } => "bounds",
        }
    }
}

// A closed pipe (`froblift ... | head`) is not worth a panic.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    match commands::run(&cli) {
        Ok(report) => {
            if cli.json {
                let envelope = json!({ "command": name, "ok": true, "result": report.result });
                emit(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&envelope).unwrap()
                ));
            } else {
                emit(&report.human);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let message = format!("{e:#}");
            eprintln!("error: {message}");
            if cli.json {
                let envelope = json!({ "command": name, "ok": false, "error": message });
                emit(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&envelope).unwrap()
                ));
            }
            ExitCode::FAILURE
        }
    }
}
