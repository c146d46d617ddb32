use clap::{Parser, Subcommand};
use num_complex::Complex64;
use opcalc::ModelKind;
use qtoda_cli::*;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qtoda", version, about = "Verification suites and point evaluation for the q-Toda chain")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the invariant battery of a module
    Verify {
        suite: Suite,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        tier: Option<Tier>,
        /// write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Evaluate a function at a point, or on a grid as CSV
    Eval {
        target: Target,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        model: Option<String>,
        /// z, w, x or λ depending on the target, as `re,im`
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        /// repeated, one per site
        #[arg(long, allow_hyphen_values = true)]
        x: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        y: Vec<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// free τ-roots, repeated
        #[arg(long = "root", allow_hyphen_values = true)]
        roots: Vec<String>,
        #[arg(long)]
        at_root: Option<usize>,
        #[arg(long, default_value_t = 0.4, allow_hyphen_values = true)]
        p0: f64,
        #[arg(long, default_value_t = 400)]
        factors: usize,
        /// re0,re1,im0,im1,n
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
    /// Dump the λ-lattice where the contour of Q gets pinched
    Poles {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "generic")]
        model: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        mmax: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn load(path: &Option<PathBuf>) -> Result<RunConfig> {
    match path {
        Some(p) => RunConfig::load(p),
        None => Ok(RunConfig::default()),
    }
}

fn model(s: &str) -> Result<ModelKind> {
    s.parse().map_err(|_| CliError::Parse(format!("unknown model {s:?}")))
}

fn complex(s: &Option<String>) -> Result<Option<Complex64>> {
    s.as_deref().map(parse_complex).transpose()
}

fn complexes(v: &[String]) -> Result<Vec<Complex64>> {
    v.iter().map(|s| parse_complex(s)).collect()
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Verify {
            suite,
            config,
            seed,
            tier,
            json,
        } => {
            let mut cfg = load(&config)?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(t) = tier {
                cfg.tier = t;
            }
            let report = run_suite(suite, &cfg)?;
            print!("{}", report.summary());
            if let Some(path) = json {
                std::fs::write(path, report.to_json())?;
            }
            verdict(&report)
        }
        Command::Eval {
            target,
            config,
            model: m,
            at,
            u,
            v,
            t,
            x,
            y,
            n,
            seed,
            roots,
            at_root,
            p0,
            factors,
            grid,
        } => {
            let cfg = load(&config)?;
            let args = EvalArgs {
                model: m.as_deref().map(model).transpose()?,
                at: complex(&at)?,
                u: complex(&u)?,
                v: complex(&v)?,
                t: complex(&t)?,
                x: complexes(&x)?,
                y: complexes(&y)?,
                n,
                seed,
                roots: complexes(&roots)?,
                at_root,
                p0,
                factors,
            };
            match grid {
                Some(g) => print!("{}", eval_grid(target, &args, &cfg, g.parse()?)?),
                None => {
                    for (label, value) in eval_point(target, &args, &cfg)? {
                        println!("{label} = {}", format_value(value));
                    }
                }
            }
            Ok(())
        }
        Command::Poles {
            config,
            model: m,
            n,
            mmax,
            json,
        } => {
            let cfg = load(&config)?;
            let lat = spectral::pole_pinch_lattice(&cfg.kernel_params(model(&m)?)?, n, mmax);
            match json {
                Some(path) => {
                    std::fs::write(&path, lat.to_json())?;
                    println!("{} pinch points written to {}", lat.points.len(), path.display());
                }
                None => println!("{}", lat.to_json()),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
