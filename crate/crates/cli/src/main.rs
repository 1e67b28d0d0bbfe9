use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use syzygy::constructions::dispatch_construction;
use syzygy::criterion::{brute_force_check, splitting_type_p1, Level};
use syzygy::inequalities::{sweep_with, Function, SweepRanges};
use syzygy::sweep::{run_sweep_with, SweepGrid};
use syzygy::{check_family, Error, Exec, MonomialFamily};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_NO_FAMILY: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(
    name = "syzcert",
    version,
    about = "Generate and certify monomial families with stable syzygy bundles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certified family of n monomials of degree d in N+1 variables.
    Generate(GenerateArgs),
    /// Certify a family read from a file ("-" for stdin).
    Check(CheckArgs),
    /// Generate and certify every admissible (N, d, n) in a grid.
    Sweep(SweepArgs),
    /// Evaluate an auxiliary inequality over a grid and report its minimum.
    Audit(AuditArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(short = 'N', long = "N", value_name = "N")]
    dim: usize,
    #[arg(short = 'd')]
    d: u32,
    #[arg(short = 'n')]
    n: usize,
    /// Family file to write; the certificate goes to PATH.cert.json.
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    output: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    input: PathBuf,
    /// Require a stability certificate (default).
    #[arg(long, conflicts_with = "semi")]
    strict: bool,
    /// Accept a semistability certificate.
    #[arg(long)]
    semi: bool,
    /// Also run the exhaustive subset enumeration and compare.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long = "Nmin", default_value_t = 1)]
    dim_min: usize,
    #[arg(long = "Nmax", default_value_t = 4)]
    dim_max: usize,
    #[arg(long = "dmin", default_value_t = 2)]
    d_min: u32,
    #[arg(long = "dmax", default_value_t = 6)]
    d_max: u32,
    /// Worker threads; 1 runs sequentially, 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the full JSON report here.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AuditArgs {
    /// T, U, V, Q, P or brenner2.
    function: Function,
    /// Range of N, e.g. 3..5.
    #[arg(long = "N", value_parser = parse_range)]
    dim: Option<RangeInclusive<i64>>,
    /// Range of d, e.g. 2..10.
    #[arg(long = "d", value_parser = parse_range)]
    d: Option<RangeInclusive<i64>>,
    /// Random samples (P only).
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    json: bool,
}

/// `a..b` and `a..=b` are both inclusive; a single integer is a one-point range.
fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad bound {t:?}: {e}"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(parse(a)?..=parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

fn default_ranges(f: Function) -> (RangeInclusive<i64>, RangeInclusive<i64>) {
    match f {
        Function::T | Function::U => (3..=5, 2..=10),
        Function::V | Function::Q | Function::P => (3..=5, 5..=12),
        Function::Brenner2Gap => (1..=6, 0..=20),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let code = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Check(a) => check(a),
        Command::Sweep(a) => sweep(a),
        Command::Audit(a) => audit(a),
    };
    ExitCode::from(code)
}

fn write_file(path: &Path, contents: &str) -> Result<(), u8> {
    fs::write(path, contents).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        EXIT_FAIL
    })
}

fn cert_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".cert.json");
    PathBuf::from(s)
}

fn generate(a: GenerateArgs) -> u8 {
    let c = match dispatch_construction(a.dim, a.d, a.n) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::NoFamilyExists { .. } => EXIT_NO_FAMILY,
                Error::OutOfRange { .. } => EXIT_USAGE,
                _ => EXIT_FAIL,
            };
        }
    };
    let route = c.route.describe();
    let cert_json = c.certificate.to_json(Some(&route));
    if let Some(path) = &a.output {
        if let Err(code) = write_file(path, &c.family.to_text())
            .and_then(|_| write_file(&cert_path(path), &cert_json))
        {
            return code;
        }
    } else if !a.json {
        print!("{}", c.family.to_text());
    }
    if a.json {
        println!("{cert_json}");
    } else {
        print!("{}", c.certificate.render_table(Some(&route)));
    }
    EXIT_OK
}

fn read_input(path: &Path) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    }
}

fn check(a: CheckArgs) -> u8 {
    let text = match read_input(&a.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", a.input.display());
            return EXIT_FAIL;
        }
    };
    let fam = match MonomialFamily::parse_text(&text) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_DATA;
        }
    };
    let cert = match check_family(&fam) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAIL;
        }
    };
    if a.json {
        println!("{}", cert.to_json(None));
    } else {
        print!("{}", cert.render_table(None));
        if fam.dim() == 1 {
            if let Ok(t) = splitting_type_p1(&fam) {
                println!("splitting type: {:?}", t.twists);
            }
        }
    }
    let level = if a.semi {
        Level::Semistable
    } else {
        Level::Stable
    };
    let mut code = if cert.verdict.satisfies(level) {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    if a.oracle {
        match brute_force_check(&fam) {
            Ok(o) if o.verdict == cert.verdict && o.min_margin == cert.min_margin => {
                eprintln!("oracle agrees");
            }
            Ok(o) => {
                eprintln!(
                    "oracle DISAGREES: {} (min margin {:?}) vs {} (min margin {:?})",
                    o.verdict, o.min_margin, cert.verdict, cert.min_margin
                );
                code = EXIT_FAIL;
            }
            Err(e) => {
                eprintln!("error: {e}");
                code = EXIT_FAIL;
            }
        }
    }
    code
}

fn sweep(a: SweepArgs) -> u8 {
    let grid = SweepGrid {
        dim_min: a.dim_min,
        dim_max: a.dim_max,
        d_min: a.d_min,
        d_max: a.d_max,
    };
    let exec = Exec::from_jobs(a.jobs);
    let report = exec.install(a.jobs, || run_sweep_with(&grid, exec));
    let json = report.to_json();
    if let Some(path) = &a.report {
        if let Err(code) = write_file(path, &json) {
            return code;
        }
    }
    if a.json {
        println!("{json}");
    } else {
        println!(
            "{:>3} {:>3} {:>5}  {:<20} {:>6}  verdict",
            "N", "d", "n", "route", "worst"
        );
        for r in &report.rows {
            let worst = r.worst_margin.map_or("-".to_string(), |m| m.to_string());
            println!(
                "{:>3} {:>3} {:>5}  {:<20} {:>6}  {}",
                r.dim,
                r.d,
                r.n,
                r.route.as_deref().unwrap_or("-"),
                worst,
                r.verdict
            );
        }
        for r in report.failed_rows() {
            println!(
                "FAILED ({}, {}, {}): {}",
                r.dim,
                r.d,
                r.n,
                r.error.as_deref().unwrap_or("")
            );
        }
        println!("{} rows, {} failures", report.total, report.failures);
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn audit(a: AuditArgs) -> u8 {
    let (dim_default, d_default) = default_ranges(a.function);
    let ranges = SweepRanges {
        dim: a.dim.unwrap_or(dim_default),
        d: a.d.unwrap_or(d_default),
        samples: a.samples,
        seed: a.seed,
    };
    let exec = Exec::from_jobs(a.jobs);
    let (_, summary) = exec.install(a.jobs, || sweep_with(a.function, &ranges, exec));
    if a.json {
        println!("{}", summary.to_json());
    } else {
        println!("function: {}", a.function);
        println!(
            "grid: N {}..{}, d {}..{}",
            summary.grid.dim[0], summary.grid.dim[1], summary.grid.d[0], summary.grid.d[1]
        );
        println!("points: {}", summary.points);
        match (&summary.min, &summary.argmin) {
            (Some(m), Some(arg)) => {
                let names = a.function.arg_names();
                let args: Vec<String> = names
                    .iter()
                    .zip(arg)
                    .map(|(n, v)| format!("{n}={v}"))
                    .collect();
                println!("min: {m} at ({})", args.join(", "));
            }
            _ => println!("min: none (empty grid)"),
        }
        println!("violations: {}", summary.violations);
        for v in &summary.violation_examples {
            println!("  violated at {v:?}");
        }
    }
    if summary.passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}
