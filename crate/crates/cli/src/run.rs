//! Command-line definition and dispatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use mhsolve_core::liftz::SolveOptions;
use mhsolve_core::minimize::{build_lagrange_system, choose_u, critical_points_with};
use mhsolve_core::ring::realroot::rational_roots;
use mhsolve_core::{
    homotopy_bezout_number, isolate_minimum, lifting_ledger, nonsingular_solutions_repeated, solve_over_z, Error,
    Outcome, PrimeField, RationalField, ZeroDimParam,
};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::CliError;
use crate::record::{BoundReport, IntervalRecord, OutputRecord, ParamRecord, RunMeta};
use crate::system::{ParsedSystem, SystemFile};

#[derive(Debug, Parser)]
#[command(name = "mhsolve", version, about = "Exact solver for multi-homogeneous polynomial systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct IoArgs {
    /// System file (JSON).
    #[arg(short, long)]
    pub input: PathBuf,
    /// Write the JSON record here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Worker threads for the per-point lifting.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Independent runs; the highest-degree output is kept.
    #[arg(long, default_value_t = 3)]
    pub repeat: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Bézout numbers and the lifting bounds.
    Bounds {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Solve over the rationals.
    Solve {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Use this prime instead of a random one from the bound.
        #[arg(long)]
        prime_override: Option<u64>,
    },
    /// Solve over the prime field F_p.
    SolveModp {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(short)]
        p: u64,
    },
    /// Minimize the first variable on the set defined by the polynomials.
    Minimize {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Width of the output interval is at most 2^-sigma.
        #[arg(long, default_value_t = 30)]
        sigma: u32,
        #[arg(long)]
        prime_override: Option<u64>,
    },
}

impl Command {
    pub fn io(&self) -> &IoArgs {
        match self {
            Command::Bounds { io } | Command::Solve { io, .. } | Command::SolveModp { io, .. } | Command::Minimize { io, .. } => io,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Bounds { .. } => "bounds",
            Command::Solve { .. } => "solve",
            Command::SolveModp { .. } => "solve-modp",
            Command::Minimize { .. } => "minimize",
        }
    }
}

pub fn load(path: &Path) -> Result<ParsedSystem, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    SystemFile::from_json(&text)?.parse()
}

fn warn_override(p: Option<u64>) {
    if let Some(p) = p {
        eprintln!(
            "warning: using --prime-override {p}; the prime is not drawn at random, so the success \
             probability guarantee no longer holds (all output checks are still enforced)"
        );
    }
}

fn record(cmd: &Command, sys: &ParsedSystem) -> OutputRecord {
    OutputRecord {
        command: cmd.name().into(),
        outcome: "success".into(),
        error: None,
        variables: sys.var_names.clone(),
        parametrization: None,
        points: Vec::new(),
        minimum: None,
        bounds: None,
        run: None,
    }
}

fn rational_points(param: &ZeroDimParam<BigRational>, n: usize) -> Result<Vec<Vec<String>>, CliError> {
    rational_roots(&param.q)
        .iter()
        .map(|t| Ok(param.point_at(&RationalField, t)?[..n].iter().map(ToString::to_string).collect()))
        .collect()
}

fn fail(rec: &mut OutputRecord, e: &Error) {
    rec.outcome = "fail".into();
    rec.error = Some(e.to_string());
}

/// Run one command. Failures of the randomized solver are reported in the
/// record; everything else is an error.
pub fn execute(cmd: &Command) -> Result<OutputRecord, CliError> {
    let sys = load(&cmd.io().input)?;
    let mut rec = record(cmd, &sys);
    match cmd {
        Command::Bounds { .. } => {
            let s = sys.system()?;
            let ledger = lifting_ledger(&s.blocks, &s.degrees, &sys.heights)?;
            rec.bounds = Some(BoundReport::new(&ledger, &homotopy_bezout_number(&s.blocks, &s.degrees)?));
        }
        Command::Solve { run, prime_override, .. } => {
            warn_override(*prime_override);
            let s = sys.system()?;
            let opts = SolveOptions { seed: run.seed, repeat: run.repeat, prime_override: *prime_override };
            let report = solve_over_z(&s, &sys.heights, &opts)?;
            rec.bounds = Some(BoundReport::new(&report.ledger, &homotopy_bezout_number(&s.blocks, &s.degrees)?));
            rec.run = Some(RunMeta {
                seed: run.seed,
                prime: Some(report.prime),
                prime_override: prime_override.is_some(),
                repeats: run.repeat,
                degrees: report.degrees.clone(),
            });
            rec.outcome = report.outcome.tag().into();
            match &report.outcome {
                Outcome::Fail(e) => fail(&mut rec, e),
                Outcome::Success(p) | Outcome::LowerDegreeSuspected(p) => {
                    rec.parametrization = Some(ParamRecord::rational(p));
                    rec.points = rational_points(p, sys.var_names.len())?;
                }
            }
        }
        Command::SolveModp { run, p, .. } => {
            let s = sys.system()?;
            let field = PrimeField::new(*p)?;
            let mut meta = RunMeta { seed: run.seed, prime: Some(*p), prime_override: false, repeats: run.repeat, degrees: vec![] };
            match nonsingular_solutions_repeated(&field, &s, run.seed, run.repeat) {
                Ok(rep) => {
                    rec.outcome = if rep.consistent() { "success" } else { "lower-degree-suspected" }.into();
                    rec.parametrization = Some(ParamRecord::modular(*p, &rep.best));
                    meta.degrees = rep.degrees;
                }
                Err(e) if e.is_fail() => fail(&mut rec, &e),
                Err(e) => return Err(e.into()),
            }
            rec.run = Some(meta);
        }
        Command::Minimize { run, sigma, prime_override, .. } => {
            warn_override(*prime_override);
            let prob = sys.problem()?;
            let u = choose_u(prob.p(), &prob.degree_bound()?, run.seed);
            let lagrange = build_lagrange_system(&prob, &u)?;
            let ls = &lagrange.system;
            let ledger = lifting_ledger(&ls.blocks, &ls.degrees, &lagrange.heights)?;
            rec.bounds = Some(BoundReport::new(&ledger, &homotopy_bezout_number(&ls.blocks, &ls.degrees)?));
            let opts = SolveOptions { seed: run.seed, repeat: run.repeat, prime_override: *prime_override };
            let mut meta = RunMeta { seed: run.seed, prime: None, prime_override: prime_override.is_some(), repeats: run.repeat, degrees: vec![] };
            match critical_points_with(&prob, lagrange, &opts) {
                Ok(cp) => {
                    rec.outcome = cp.report.outcome.tag().into();
                    meta.prime = Some(cp.report.prime);
                    meta.degrees = cp.report.degrees.clone();
                    rec.points = rational_points(&cp.projected, prob.n)?;
                    rec.parametrization = Some(ParamRecord::rational(&cp.projected));
                    rec.minimum = isolate_minimum(&cp.projected, *sigma).map(|iv| {
                        let mid = (&iv.lo + &iv.hi) / BigRational::from_integer(2.into());
                        IntervalRecord {
                            lo: iv.lo.to_string(),
                            hi: iv.hi.to_string(),
                            sigma: *sigma,
                            approx: mid.to_f64().unwrap_or(f64::NAN),
                        }
                    });
                }
                Err(e) if e.is_fail() => fail(&mut rec, &e),
                Err(e) => return Err(e.into()),
            }
            rec.run = Some(meta);
        }
    }
    Ok(rec)
}

/// Parse arguments, run, write the record and return the exit status:
/// 0 on success, 2 on a fail outcome, 1 on usage or input errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let threads = cli.command.io().threads.max(1);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let result = pool.install(|| execute(&cli.command));
    let rec = match result {
        Ok(rec) => rec,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, CliError::Solver(Error::PrimeBoundTooLarge(_))) {
                eprintln!("hint: pass --prime-override with a prime of your choice");
            }
            return 1;
        }
    };
    let mut text = serde_json::to_string_pretty(&rec).expect("records serialize");
    text.push('\n');
    let written = match &cli.command.io().output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 1;
    }
    if rec.outcome == "fail" {
        2
    } else {
        0
    }
}
