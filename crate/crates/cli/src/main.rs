use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use schurpath::identities::{self, VerifyArgs, IDENTITIES};
use schurpath::lgv::{
    bialternant_endpoints, cauchy_endpoints, cauchy_scheme, lgv_det, nonintersecting_systems, pt,
    reduction_scheme, schur_endpoints, schur_scheme, vandermonde_endpoints, vandermonde_scheme,
    LatticePoint, LatticeScheme, PathSystem,
};
use schurpath::svg::{render_system, render_systems};
use schurpath::{
    compute_schur, CheckReport, Error, Partition, Polynomial, SchurMethod, SuiteConfig,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "schurpath",
    version,
    about = "Schur polynomials and lattice path identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Schur polynomial
    Schur {
        /// Partition, e.g. "[2,1]"
        #[arg(long)]
        shape: Partition,
        /// Number of variables
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Tableaux)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Verify one identity
    Verify {
        #[arg(value_parser = PossibleValuesParser::new(IDENTITIES))]
        identity: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        shape: Option<Partition>,
        #[arg(long)]
        degree_cap: Option<u32>,
        /// Scheme variant for lgv-lemma
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Run the full verification suite
    Suite {
        /// JSON config file
        #[arg(long)]
        config: Option<PathBuf>,
        /// Restrict to these identities
        #[arg(long, value_parser = PossibleValuesParser::new(IDENTITIES))]
        only: Vec<String>,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Count non-intersecting path systems and their signed weight
    Paths {
        #[command(flatten)]
        config: PathArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Draw non-intersecting path systems as SVG
    Render {
        #[command(flatten)]
        config: PathArgs,
        /// Combined SVG with one panel per system
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Directory for one SVG file per system
        #[arg(long)]
        each: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Tableaux,
    #[value(alias = "jacobi-trudi")]
    Jacobitrudi,
    Bialternant,
    Lgv,
}

impl From<Method> for SchurMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Tableaux => SchurMethod::Tableaux,
            Method::Jacobitrudi => SchurMethod::JacobiTrudi,
            Method::Bialternant => SchurMethod::Bialternant,
            Method::Lgv => SchurMethod::Lgv,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Vandermonde,
    Schur,
    Reduction,
    Cauchy,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    JacobiTrudi,
    SchurWeighted,
    CauchyDoubled,
}

#[derive(Args)]
struct PathArgs {
    #[arg(long, value_enum)]
    preset: Preset,
    #[arg(long, default_value_t = 2)]
    n: u32,
    #[arg(long)]
    shape: Option<Partition>,
    /// Cauchy preset: largest power of each x_i y_j kept
    #[arg(long, default_value_t = 2)]
    degree_cap: u32,
    /// Custom preset: edge weights
    #[arg(long, value_enum)]
    scheme: Option<SchemeArg>,
    /// Custom preset: window width
    #[arg(long)]
    cols: Option<u32>,
    /// Custom preset: set x_k = 0 for k >= this index
    #[arg(long)]
    truncate_at: Option<u32>,
    /// Custom preset: points as "c,r;c,r"
    #[arg(long)]
    sources: Option<String>,
    #[arg(long)]
    sinks: Option<String>,
}

/// A failure with its exit code: 1 for refusals and mismatches, 2 for usage.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::InvalidPartition(_)
            | Error::OutOfBounds(_)
            | Error::InvalidArgument(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn exit_for(reports: &[CheckReport]) -> ExitCode {
    if reports.iter().all(CheckReport::is_verified) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn parse_points(s: &str) -> Result<Vec<LatticePoint>, Failure> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let p = p.trim().trim_start_matches('(').trim_end_matches(')');
            let (c, r) = p
                .split_once(',')
                .ok_or_else(|| Failure::usage(format!("expected \"col,row\", got {p:?}")))?;
            let num = |v: &str| {
                v.trim()
                    .parse::<i64>()
                    .map_err(|_| Failure::usage(format!("bad coordinate {v:?}")))
            };
            Ok(pt(num(c)?, num(r)?))
        })
        .collect()
}

struct Configuration {
    scheme: LatticeScheme,
    sources: Vec<LatticePoint>,
    sinks: Vec<LatticePoint>,
}

fn configuration(args: &PathArgs) -> Result<Configuration, Failure> {
    let n = args.n;
    if n == 0 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    let shape = || {
        args.shape
            .clone()
            .ok_or_else(|| Failure::usage("this preset needs --shape"))
    };
    Ok(match args.preset {
        Preset::Vandermonde => {
            let (sources, sinks) = vandermonde_endpoints(n);
            Configuration {
                scheme: vandermonde_scheme(n),
                sources,
                sinks,
            }
        }
        Preset::Schur => {
            let lam = shape()?;
            if lam.rows() > n as usize {
                return Err(Failure::usage(format!("{lam} has more than {n} rows")));
            }
            let (sources, sinks) = schur_endpoints(&lam, n);
            Configuration {
                scheme: schur_scheme(&lam, n),
                sources,
                sinks,
            }
        }
        Preset::Reduction => {
            let lam = shape()?;
            if lam.rows() > n as usize {
                return Err(Failure::usage(format!("{lam} has more than {n} rows")));
            }
            let ends = bialternant_endpoints(&lam, n);
            Configuration {
                scheme: reduction_scheme(&lam, n),
                sources: ends.outer,
                sinks: ends.sinks,
            }
        }
        Preset::Cauchy => {
            let (sources, sinks) = cauchy_endpoints(n);
            Configuration {
                scheme: cauchy_scheme(n, 2 * args.degree_cap),
                sources,
                sinks,
            }
        }
        Preset::Custom => {
            let (Some(kind), Some(cols), Some(src), Some(dst)) =
                (args.scheme, args.cols, &args.sources, &args.sinks)
            else {
                return Err(Failure::usage(
                    "custom preset needs --scheme, --cols, --sources and --sinks",
                ));
            };
            let mut scheme = match kind {
                SchemeArg::JacobiTrudi => LatticeScheme::jacobi_trudi(n, cols),
                SchemeArg::SchurWeighted => LatticeScheme::schur_weighted(n, cols),
                SchemeArg::CauchyDoubled => LatticeScheme::cauchy_doubled(n, cols, None),
            };
            if let Some(k) = args.truncate_at {
                scheme = scheme.truncated(k);
            }
            Configuration {
                scheme,
                sources: parse_points(src)?,
                sinks: parse_points(dst)?,
            }
        }
    })
}

fn systems(c: &Configuration) -> Result<Vec<PathSystem>, Failure> {
    if c.sources.len() != c.sinks.len() {
        return Err(Failure::usage(format!(
            "{} sources but {} sinks",
            c.sources.len(),
            c.sinks.len()
        )));
    }
    Ok(nonintersecting_systems(&c.scheme, &c.sources, &c.sinks)?)
}

#[derive(Serialize)]
struct PathsReport {
    systems: usize,
    sum: String,
    determinant: String,
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Schur {
            shape,
            n,
            method,
            output,
        } => {
            if n == 0 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            let s = compute_schur(&shape, n, method.into())?;
            match output {
                Output::Text => println!("{s}"),
                Output::Json => print_json(&serde_json::json!({ "schur": s.to_string() })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity,
            n,
            m,
            shape,
            degree_cap,
            scheme,
            output,
        } => {
            let args = VerifyArgs {
                n,
                m,
                shape,
                degree_cap,
                scheme,
            };
            let report = identities::verify(&identity, &args)?;
            match output {
                Output::Text => println!("{report}"),
                Output::Json => print_json(&report),
            }
            Ok(exit_for(&[report]))
        }
        Command::Suite {
            config,
            only,
            output,
        } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                    serde_json::from_str::<SuiteConfig>(&text)
                        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
                }
                None => SuiteConfig::default(),
            };
            if !only.is_empty() {
                cfg.only = Some(only);
            }
            cfg.validate()?;
            let reports = identities::run_suite(&cfg);
            match output {
                Output::Json => print_json(&reports),
                Output::Text => {
                    for r in &reports {
                        println!("{r}");
                    }
                    let ok = reports.iter().filter(|r| r.is_verified()).count();
                    println!("{ok}/{} verified", reports.len());
                }
            }
            Ok(exit_for(&reports))
        }
        Command::Paths { config, output } => {
            let c = configuration(&config)?;
            let found = systems(&c)?;
            let sum: Polynomial = found
                .iter()
                .map(|s| s.weight(&c.scheme).scale(s.sign))
                .sum();
            let sum = match c.scheme.degree_cap {
                Some(cap) => sum.truncate(cap),
                None => sum,
            };
            let report = PathsReport {
                systems: found.len(),
                sum: sum.to_string(),
                determinant: lgv_det(&c.scheme, &c.sources, &c.sinks)?.to_string(),
            };
            match output {
                Output::Text => {
                    println!("systems: {}", report.systems);
                    println!("sum: {}", report.sum);
                    println!("determinant: {}", report.determinant);
                }
                Output::Json => print_json(&report),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { config, svg, each } => {
            if svg.is_none() && each.is_none() {
                return Err(Failure::usage("render needs --svg or --each"));
            }
            let c = configuration(&config)?;
            let found = systems(&c)?;
            let write = |path: &PathBuf, text: String| {
                fs::write(path, text).map_err(|e| Failure {
                    code: 1,
                    message: format!("{}: {e}", path.display()),
                })
            };
            if let Some(path) = &svg {
                write(
                    path,
                    render_systems(&c.scheme, &c.sources, &c.sinks, &found),
                )?;
                println!("wrote {} systems to {}", found.len(), path.display());
            }
            if let Some(dir) = &each {
                fs::create_dir_all(dir).map_err(|e| Failure {
                    code: 1,
                    message: format!("{}: {e}", dir.display()),
                })?;
                for (k, system) in found.iter().enumerate() {
                    let path = dir.join(format!("system-{}.svg", k + 1));
                    write(
                        &path,
                        render_system(&c.scheme, &c.sources, &c.sinks, system),
                    )?;
                }
                println!("wrote {} files to {}", found.len(), dir.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
