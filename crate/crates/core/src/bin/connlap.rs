use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use connlap::complex::graphic_matroid;
use connlap::energy::green_matrix;
use connlap::error::Error;
use connlap::facets::{parse_facet_file, parse_graph_file, write_facet_file};
use connlap::families;
use connlap::incidence::connection_matrix;
use connlap::report::{MatrixRecord, Report, DEFAULT_MAX_N};
use connlap::ring::{parse_program, ring_energy, ring_energy_via_inverse};
use connlap::verify::{build_pool, run_suite, PoolSpec, DEFAULT_VERIFY_MAX_N};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "connlap", version, about = "Connection Laplacians of simplicial complexes, computed exactly")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichMatrix {
    #[value(name = "L")]
    L,
    #[value(name = "g")]
    G,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write the facet file of a named family.
    Gen {
        /// simplex, cycle, complete, path, wheel, diamond, octahedron, point,
        /// random or matroid-of
        family: String,
        /// Numeric parameters, or the graph file for matroid-of.
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print invariants of a complex read from a facet file (`-` for stdin).
    Report {
        input: String,
        #[arg(long, value_enum)]
        matrix: Option<WhichMatrix>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Run a verification suite over a pool of complexes.
    Verify {
        suite: String,
        #[arg(long, default_value = "small")]
        pool: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_VERIFY_MAX_N)]
        max_n: usize,
    },
    /// Evaluate a ring expression, given inline or as a file.
    Ring {
        expr: String,
        /// Also sum the inverse of each product Laplacian up to this many cells.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
}

fn read_input(input: &str) -> Result<String, Error> {
    if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::BadParams(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::BadParams(format!("cannot read {input}: {e}")))
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::BadParams(format!("cannot write {}: {e}", p.display()))),
        None => {
            let _ = io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn gen(family: &str, params: &[String], output: Option<&Path>) -> Result<u8, Error> {
    let c = if family == "matroid-of" {
        let [file] = params else {
            return Err(Error::BadParams("matroid-of takes one graph file".into()));
        };
        graphic_matroid(&parse_graph_file(&read_input(file)?)?)
    } else {
        let nums = params
            .iter()
            .map(|p| p.parse::<f64>().map_err(|_| Error::BadParams(format!("not a number: {p}"))))
            .collect::<Result<Vec<_>, _>>()?;
        families::family(family, &nums)?
    };
    emit(output, &write_facet_file(&c))?;
    Ok(0)
}

fn report(input: &str, matrix: Option<WhichMatrix>, json: bool, max_n: usize) -> Result<u8, Error> {
    let c = parse_facet_file(&read_input(input)?)?;
    let mut r = Report::build(&c, max_n)?;
    r.matrix = match matrix {
        None => None,
        Some(WhichMatrix::L) => Some(MatrixRecord::new("L", &connection_matrix(&c))),
        Some(WhichMatrix::G) if c.is_empty() => Some(MatrixRecord::new("g", &connection_matrix(&c))),
        Some(WhichMatrix::G) => Some(MatrixRecord::new("g", green_matrix(&c)?.matrix())),
    };
    if json {
        println!("{}", r.to_json());
    } else {
        print!("{}", r.to_text());
    }
    Ok(if r.all_passed() { 0 } else { EXIT_FAIL })
}

fn verify(suite: &str, pool: &str, seed: u64, max_n: usize) -> Result<u8, Error> {
    let spec: PoolSpec = pool.parse()?;
    let entries = build_pool(&spec, seed)?;
    let log = run_suite(suite, &entries, seed, max_n)?;
    let mut out = io::stdout().lock();
    for line in &log.lines {
        let _ = writeln!(out, "{line}");
    }
    let verdict = if log.is_clean() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "{verdict} {suite} on pool {spec} ({} complexes, seed {seed}): {}",
        entries.len(),
        log.summary()
    );
    Ok(if log.is_clean() { 0 } else { EXIT_FAIL })
}

fn ring(expr: &str, max_n: usize) -> Result<u8, Error> {
    let text = if Path::new(expr).is_file() {
        read_input(expr)?
    } else {
        expr.to_string()
    };
    let e = parse_program(&text)?;
    let energy = ring_energy(&e);
    println!("expression  {e}");
    println!("energy      {energy}");
    match ring_energy_via_inverse(&e, max_n) {
        Ok(v) => {
            println!("inverse sum {v}");
            if v != energy {
                return Ok(EXIT_FAIL);
            }
        }
        Err(Error::TooLarge { dim, max, .. }) => {
            println!("inverse sum skipped ({dim} cells exceed {max})");
        }
        Err(err) => return Err(err),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Gen { family, params, output } => gen(family, params, output.as_deref()),
        Cmd::Report {
            input,
            matrix,
            json,
            max_n,
        } => report(input, *matrix, *json, *max_n),
        Cmd::Verify {
            suite,
            pool,
            seed,
            max_n,
        } => verify(suite, pool, *seed, *max_n),
        Cmd::Ring { expr, max_n } => ring(expr, *max_n),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("connlap: {e}");
            ExitCode::from(match e {
                Error::Internal(_) => EXIT_FAIL,
                _ => EXIT_USAGE,
            })
        }
    }
}
