use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use convexlab::GeomError;

mod run;

#[derive(Parser, Debug)]
#[command(name = "convexlab", version, about = "Convex bodies, volume products and symmetrization")]
pub struct Cli {
    /// Worker threads for parallel sections (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Read, validate and convert body files.
    #[command(subcommand)]
    Body(BodyCmd),
    /// Volume product at the Santaló point.
    Product(Io),
    /// Santaló point and polar volume.
    Santalo(Io),
    Symmetrize(SymmetrizeArgs),
    Measure(MeasureArgs),
    #[command(subcommand)]
    Lab(LabCmd),
}

#[derive(Args, Debug, Clone)]
pub struct Io {
    #[arg(long)]
    pub body: PathBuf,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum BodyCmd {
    Validate {
        #[command(flatten)]
        io: Io,
        /// Relative tolerance of the o-symmetry check.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    Convert {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        to: Kind,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
#[value(rename_all = "snake_case")]
pub enum Kind {
    PolytopeH,
    PolytopeV,
    Polygon,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
pub enum Op {
    Steiner,
    Schwarz,
    Isotropic,
    Rounding,
    Full,
}

#[derive(Args, Debug)]
pub struct SymmetrizeArgs {
    #[command(flatten)]
    pub io: Io,
    #[arg(long, value_enum)]
    pub op: Op,
    /// Comma-separated direction (hyperplane normal for steiner); defaults to e1.
    #[arg(long)]
    pub axis: Option<String>,
    /// Offset of the steiner hyperplane along the axis.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub offset: f64,
    /// Meridian nodes written for bodies of revolution without a closed form.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Report file (the body goes to --out).
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub io: Io,
    #[arg(long)]
    pub q: bool,
    #[arg(long)]
    pub bm: bool,
    #[arg(long)]
    pub bonnesen: bool,
    #[arg(long)]
    pub asa: bool,
    #[arg(long)]
    pub ratios: bool,
}

#[derive(Subcommand, Debug)]
pub enum LabCmd {
    /// Stability records of a body family as CSV.
    Scan {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Parameter range `a:b:geometric|linear:k` or a comma list.
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fill the seconds column (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Chain(Io),
    Falsecentre(Io),
}

/// Exit 1 for invalid input, 2 when a solver fails to converge.
fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<GeomError>() {
        Some(GeomError::Convergence { .. }) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("SANTALO_LAB_LOG")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global() {
            log::warn!("thread pool: {e}");
        }
    }
    match run::dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convergence_exits_two() {
        let e = anyhow::Error::from(GeomError::Convergence { iterations: 3, best: vec![], residual: 1.0 });
        assert_eq!(exit_code(&e), 2);
        assert_eq!(exit_code(&anyhow::Error::from(GeomError::Domain("x".into()))), 1);
    }

    #[test]
    fn flags_parse() {
        let c = Cli::try_parse_from(["convexlab", "--threads", "2", "lab", "scan", "--family", "caps", "--eps", "1e-4:1e-2:geometric:3"]).unwrap();
        assert_eq!(c.threads, Some(2));
        assert!(Cli::try_parse_from(["convexlab", "symmetrize", "--op", "twist", "--body", "x"]).is_err());
    }
}
