use clap::{Args, Parser, Subcommand};
use hyperfield::census::exponents::exponents_with_threshold;
use hyperfield::census::{ev_threshold_search, exponents, run_census, write_csv};
use hyperfield::config::RunConfig;
use hyperfield::family::{witness_report, HyperellipticCurve, RecipeId};
use hyperfield::padic::newton_polygon;
use hyperfield::perm::{certify_polynomial, good_primes, DEFAULT_CERTIFY_PRIMES};
use hyperfield::{Error, IntPolynomial, Result};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hyperfield", version, about = "Galois certificates and field census for hyperelliptic families")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Newton polygon of a polynomial at a prime.
    Np {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        json: bool,
    },
    /// Certify Galois group S_n by Frobenius sampling.
    Certify {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Comma-separated primes; defaults to the first good primes from 3.
        #[arg(long)]
        primes: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CERTIFY_PRIMES)]
        count: usize,
    },
    /// Build and verify a specialization witness for one recipe.
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        recipe: String,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate a family box and classify its members.
    Census(CensusArgs),
    /// Exact exponents of the counting theorems.
    Exponents {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        /// Print the degree from which the improved exponent holds.
        #[arg(long)]
        threshold: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CensusArgs {
    /// key=value config file; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    curve: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    y: Option<String>,
    /// Comma-separated heights, one summary each.
    #[arg(long)]
    sweep: Option<String>,
    /// CSV destination; `-` for stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    summary: Option<PathBuf>,
}

fn parse_poly(s: &str) -> Result<IntPolynomial> {
    s.parse()
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(bytes: &[u8]) -> Result<()> {
    match std::io::stdout().lock().write_all(bytes) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn emitln(s: impl std::fmt::Display) -> Result<()> {
    emit(format!("{s}\n").as_bytes())
}

fn print_json<T: Serialize>(v: &T) -> Result<()> {
    emitln(serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))?)
}

fn cmd_census(a: CensusArgs) -> Result<()> {
    let mut cfg = match &a.config {
        Some(p) => RunConfig::from_file(p)?,
        None => RunConfig::default(),
    };
    let mut overrides = Vec::new();
    if let Some(c) = &a.curve {
        overrides.push(format!("curve={c}"));
    }
    if let Some(n) = a.n {
        overrides.push(format!("n={n}"));
    }
    if let Some(y) = &a.y {
        overrides.push(format!("y={y}"));
    }
    if let Some(s) = &a.sweep {
        overrides.push(format!("sweep={s}"));
    }
    let extra = RunConfig::parse(&overrides.join("\n"), None)?;
    if extra.curve.is_some() {
        cfg.curve = extra.curve;
    }
    if extra.n.is_some() {
        cfg.n = extra.n;
    }
    if !extra.heights.is_empty() {
        cfg.heights = extra.heights;
    }
    if a.csv.is_some() {
        cfg.csv_out = a.csv;
    }
    if a.summary.is_some() {
        cfg.summary_out = a.summary;
    }
    let curve = cfg.curve()?;
    let n = cfg.n()?;
    if cfg.heights.is_empty() {
        return Err(Error::Config("missing y or sweep".into()));
    }
    let mut summaries = Vec::new();
    let mut csv = Vec::new();
    for y in &cfg.heights {
        let run = run_census(&curve, n, &cfg.census(y))?;
        write_csv(&run.records, &mut csv)?;
        summaries.push(run.summary);
    }
    match cfg.csv_out.as_deref() {
        Some(p) if p.as_os_str() == "-" => emit(&csv)?,
        Some(p) => std::fs::write(p, &csv)?,
        None => {}
    }
    let text = serde_json::to_string_pretty(&summaries).map_err(|e| Error::Io(e.to_string()))?;
    match &cfg.summary_out {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => emitln(text)?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Np { poly, prime, json } => {
            let p = parse_poly(&poly)?;
            let np = newton_polygon(&p, prime)?;
            if json {
                print_json(&np.certificate(&p))?;
            } else {
                emitln(np)?;
            }
        }
        Cmd::Certify { poly, primes, count } => {
            let p = parse_poly(&poly)?;
            let primes = match primes {
                Some(s) => s
                    .split(',')
                    .map(|x| x.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad prime {x:?}"))))
                    .collect::<Result<Vec<_>>>()?,
                None => good_primes(&p, count),
            };
            print_json(&certify_polynomial(&p, &primes)?)?;
        }
        Cmd::Witness { curve, n, recipe, prime, seed } => {
            let curve = HyperellipticCurve::new(parse_poly(&curve)?)?;
            let recipe: RecipeId = recipe.parse()?;
            print_json(&witness_report(&curve, n, recipe, prime, seed)?)?;
        }
        Cmd::Census(a) => cmd_census(a)?,
        Cmd::Exponents { g, d, n, threshold, json } => {
            let (Some(d), Some(n)) = (d, n) else {
                if threshold {
                    return emitln(ev_threshold_search(g)?);
                }
                return Err(Error::Parse("exponents needs --d and --n, or --threshold".into()));
            };
            let r = if threshold { exponents_with_threshold(g, d, n)? } else { exponents(g, d, n)? };
            if json {
                print_json(&r)?;
            } else {
                emitln(format_args!(
                    "g {}  d {}  n {}\nc               {}\nc_n             {}\nc_n derived     {}\nc_n improved    {}\n  as printed    {}\nT exponent      {}\nthreshold       {}",
                    r.g, r.d, r.n, r.c, r.c_n, r.c_n_derived, r.c_n_improved, r.c_n_improved_printed, r.t_exponent,
                    r.improvement_threshold.map_or("NOT_FOUND".to_string(), |t| t.to_string())
                ))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
