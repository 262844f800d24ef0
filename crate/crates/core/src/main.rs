//! Command-line front end: exact term and table queries, generating-matrix
//! and Hadamard inspection, Binet evaluation, identity audits, and the
//! naive-vs-fast benchmark.
//!
//! Exit codes: 0 success (and audit runs with no FAIL), 1 parameter or
//! degenerate-input errors (the message names the violated precondition),
//! 2 usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bpfib::audit::{self, ParamGrid, Suite};
use bpfib::bench::{run_bench, BenchMethod};
use bpfib::genmatrix::{
    hadamard_l, hadamard_q, mat_pow, mat_ql, mat_qq, qq_pow_closed, ql_pow_closed,
};
use bpfib::sequences::{bp_fib, bp_fib_poly, bp_lucas};
use bpfib::spectral::{binet_q, binet_q_float, hadamard_spectrum, HadamardSpectrum};
use bpfib::{Error, Mat2, ParamSet, Rational, SeqFamily};

#[derive(Parser)]
#[command(
    name = "bpfib",
    version,
    about = "Exact bi-periodic Fibonacci/Lucas sequences, their generating matrices, \
             Hadamard products, and a grid-sweep identity auditor"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TermKind {
    /// Bi-periodic Fibonacci number
    Q,
    /// Bi-periodic Lucas number
    L,
    /// Bi-periodic Fibonacci polynomial
    Qpoly,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqKind {
    Q,
    L,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    /// Fibonacci-side generating matrix
    Qq,
    /// Lucas-side generating matrix
    Ql,
}

#[derive(Clone, Copy, ValueEnum)]
enum PowerMethod {
    /// Binary exponentiation
    Pow,
    /// Sequence-valued closed form
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchMethodArg {
    Naive,
    Matpow,
    BinetFloat,
}

impl From<BenchMethodArg> for BenchMethod {
    fn from(m: BenchMethodArg) -> Self {
        match m {
            BenchMethodArg::Naive => BenchMethod::Naive,
            BenchMethodArg::Matpow => BenchMethod::MatPow,
            BenchMethodArg::BinetFloat => BenchMethod::BinetFloat,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact term of a sequence, or one polynomial
    Term {
        #[arg(long, value_enum)]
        kind: TermKind,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        json: bool,
    },
    /// Print a run of terms as CSV (default) or JSON
    Table {
        #[arg(long, value_enum)]
        kind: SeqKind,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Print a generating-matrix power with its determinant and trace
    Matrix {
        #[arg(long, value_enum)]
        which: MatrixKind,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        /// Evaluation point for the qq matrix (default 1)
        #[arg(long, allow_hyphen_values = true)]
        x: Option<Rational>,
        #[arg(long, value_enum, default_value = "pow")]
        method: PowerMethod,
        #[arg(long)]
        json: bool,
    },
    /// Print a Hadamard power product, optionally with its exact spectrum
    Hadamard {
        #[arg(long, value_enum)]
        which: SeqKind,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        spectrum: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the Binet closed form, exactly or in double precision
    Binet {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<Rational>,
        #[arg(long)]
        float: bool,
    },
    /// Audit identities over a parameter grid; exit 0 iff nothing fails
    Verify {
        /// Comma-separated suite list, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        /// JSON grid file overriding the default grid
        #[arg(long)]
        grid: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Time one method of computing the n-th Fibonacci-side term
    Bench {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_enum)]
        method: BenchMethodArg,
        #[arg(long, default_value_t = 3)]
        repeat: u32,
        /// Also reduce the exact result modulo this value and cross-check it
        /// against the O(n) modular recurrence oracle
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
}

#[derive(Serialize)]
struct TermOutput {
    kind: String,
    n: i64,
    a: Rational,
    b: Rational,
    value: String,
}

#[derive(Serialize)]
struct TableRow {
    n: i64,
    value: Rational,
}

#[derive(Serialize)]
struct MatrixOutput {
    matrix: Mat2<Rational>,
    det: Rational,
    trace: Rational,
}

#[derive(Serialize)]
struct HadamardOutput {
    matrix: Mat2<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<HadamardSpectrum>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> bpfib::Result<ExitCode> {
    match command {
        Command::Term { kind, n, a, b, json } => {
            let p = ParamSet::new(a, b)?;
            match kind {
                TermKind::Q | TermKind::L => {
                    let (name, value) = match kind {
                        TermKind::Q => ("q", bp_fib(n, &p)),
                        _ => ("l", bp_lucas(n, &p)),
                    };
                    if json {
                        let out = TermOutput {
                            kind: name.into(),
                            n,
                            a: p.a().clone(),
                            b: p.b().clone(),
                            value: value.to_string(),
                        };
                        println!("{}", serde_json::to_string(&out).expect("serializable"));
                    } else {
                        println!("{value}");
                    }
                }
                TermKind::Qpoly => {
                    let n = u64::try_from(n).map_err(|_| {
                        Error::InvalidParameter(
                            "polynomial terms are defined for n >= 0".into(),
                        )
                    })?;
                    let poly = bp_fib_poly(n, &p);
                    if json {
                        println!("{}", serde_json::to_string(&poly).expect("serializable"));
                    } else {
                        println!("{poly}");
                    }
                }
            }
        }
        Command::Table { kind, from, to, a, b, format } => {
            let p = ParamSet::new(a, b)?;
            if from > to {
                return Err(Error::InvalidParameter(
                    "table range requires from <= to".into(),
                ));
            }
            let term = |n: i64| match kind {
                SeqKind::Q => bp_fib(n, &p),
                SeqKind::L => bp_lucas(n, &p),
            };
            match format {
                TableFormat::Csv => {
                    println!("n,value");
                    for n in from..=to {
                        println!("{n},{}", term(n));
                    }
                }
                TableFormat::Json => {
                    let rows: Vec<TableRow> =
                        (from..=to).map(|n| TableRow { n, value: term(n) }).collect();
                    println!("{}", serde_json::to_string(&rows).expect("serializable"));
                }
            }
        }
        Command::Matrix { which, n, a, b, x, method, json } => {
            let p = ParamSet::new(a, b)?;
            let matrix = match which {
                MatrixKind::Qq => {
                    let x = x.unwrap_or_else(Rational::one);
                    match method {
                        PowerMethod::Pow => mat_pow(&mat_qq(&p, &x), n)?,
                        PowerMethod::Closed => qq_pow_closed(n, &p, &x),
                    }
                }
                MatrixKind::Ql => {
                    if x.is_some() {
                        return Err(Error::InvalidParameter(
                            "the evaluation point x applies to the qq matrix only".into(),
                        ));
                    }
                    match method {
                        PowerMethod::Pow => mat_pow(&mat_ql(&p), n)?,
                        PowerMethod::Closed => ql_pow_closed(n, &p)?,
                    }
                }
            };
            let out = MatrixOutput {
                det: matrix.det(),
                trace: matrix.trace(),
                matrix,
            };
            if json {
                println!("{}", serde_json::to_string(&out).expect("serializable"));
            } else {
                println!("{}", out.matrix);
                println!("det: {}", out.det);
                println!("trace: {}", out.trace);
            }
        }
        Command::Hadamard { which, n, a, b, spectrum, json } => {
            let p = ParamSet::new(a, b)?;
            let family = match which {
                SeqKind::Q => SeqFamily::Fibonacci,
                SeqKind::L => SeqFamily::Lucas,
            };
            let matrix = match family {
                SeqFamily::Fibonacci => hadamard_q(n, &p)?,
                SeqFamily::Lucas => hadamard_l(n, &p)?,
            };
            let spec = if spectrum {
                Some(hadamard_spectrum(family, n, &p)?)
            } else {
                None
            };
            if json {
                let out = HadamardOutput { matrix, spectrum: spec };
                println!("{}", serde_json::to_string(&out).expect("serializable"));
            } else {
                println!("{matrix}");
                if let Some(s) = spec {
                    println!("det: {}", s.determinant);
                    println!("trace: {}", s.trace);
                    println!("eigenvalues: {}, {}", s.eigenvalues.0, s.eigenvalues.1);
                    println!(
                        "eigenvectors: [{}, {}], [{}, {}]",
                        s.eigenvectors.0 .0,
                        s.eigenvectors.0 .1,
                        s.eigenvectors.1 .0,
                        s.eigenvectors.1 .1
                    );
                    match s.inverse {
                        Some(inv) => println!("inverse: {inv}"),
                        None => println!("inverse: none (determinant is zero)"),
                    }
                }
            }
        }
        Command::Binet { n, a, b, x, float } => {
            let p = ParamSet::new(a, b)?;
            let x = x.unwrap_or_else(Rational::one);
            if float {
                let value = binet_q_float(n, &p, &x)?;
                if value.is_infinite() {
                    eprintln!("note: the result overflows double precision");
                }
                println!("{value}");
            } else {
                println!("{}", binet_q(n, &p, &x)?);
            }
        }
        Command::Verify { suite, grid, json } => {
            let suites = Suite::parse_list(&suite)?;
            let grid = match grid {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| {
                        Error::InvalidParameter(format!("cannot read grid file: {e}"))
                    })?;
                    serde_json::from_str::<ParamGrid>(&text)
                        .map_err(|e| Error::Parse(format!("bad grid file: {e}")))?
                }
                None => ParamGrid::default(),
            };
            let reports = audit::run_audit(&grid, &suites)?;
            if json {
                println!("{}", serde_json::to_string(&reports).expect("serializable"));
            } else {
                print!("{}", audit::render_text(&reports));
            }
            if audit::has_failures(&reports) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench { n, a, b, method, repeat, modulus } => {
            let p = ParamSet::new(a, b)?;
            let result = run_bench(method.into(), n, &p, repeat, modulus)?;
            println!("{}", serde_json::to_string(&result).expect("serializable"));
        }
    }
    Ok(ExitCode::SUCCESS)
}
