//! Command-line front end.
//!
//! [`run`] does all the work and returns the text to print plus an exit code,
//! so the binary stays a few lines long and tests can call it in-process.
//!
//! Exit codes: `0` when every check passes (expected failures included), `1`
//! when a verification fails, `2` for usage or configuration errors.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::digits::Base;
use crate::error::{Error, Result};
use crate::exactpoly::{parse_rational, Rational};
use crate::matrix::{Dims, Matrix, Scalar, DEFAULT_DIMENSION_CAP};
use crate::ptm::{
    factorize, m_matrix, prouhet_partition, t_matrix, u_matrix, v_matrix, ZeroSumVector,
};
use crate::random::seeded_zero_sums;
use crate::report::{CheckRecord, Status, SuiteReport};
use crate::sierpinski::{s_matrix, x_matrix};
use crate::verify::{run_suite, Suite, SuiteConfig};

/// Random zero-sum vectors generated for the factorization suite when
/// `--zero-sum` is not given.
pub const RANDOM_VECTORS: usize = 20;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "digital-binomial",
    version,
    about = "Exact Sierpinski matrices, digital binomial identities and PTM factorizations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Base b >= 2. Defaults to 2, or to the length of --zero-sum.
    #[arg(long, global = true)]
    pub base: Option<u32>,

    /// Depth N >= 1; matrices have dimension b^N.
    #[arg(long, global = true, default_value_t = 1)]
    pub depth: u32,

    /// Largest matrix dimension accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_DIMENSION_CAP)]
    pub cap: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for the random zero-sum vectors of the factorization suite.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Evaluate S or X at this rational, e.g. 1 or -3/4.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub eval: Option<String>,

    /// Comma-separated rationals summing to zero, e.g. 1,-1 or 1/2,1/2,-1.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub zero_sum: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one of the matrices S, X, M, T, U, V at (b, N).
    Matrix {
        #[arg(value_enum)]
        kind: MatrixKind,
    },
    /// Run a verification suite at (b, N).
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Factor the PTM polynomial of --zero-sum at depth N.
    Ptm,
    /// Prouhet's partition of 0..b^(N+1), equal power sums up to degree N.
    Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    #[value(name = "S")]
    S,
    #[value(name = "X")]
    X,
    #[value(name = "M")]
    M,
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
    #[value(name = "V")]
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    OneParameter,
    DigitalBinomial,
    Exp,
    Stirling,
    Factorization,
    Relations,
    Prouhet,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::OneParameter => vec![Suite::OneParameter],
            SuiteArg::DigitalBinomial => vec![Suite::DigitalBinomial],
            SuiteArg::Exp => vec![Suite::Exp],
            SuiteArg::Stirling => vec![Suite::Stirling],
            SuiteArg::Factorization => vec![Suite::Factorization],
            SuiteArg::Relations => vec![Suite::Relations],
            SuiteArg::Prouhet => vec![Suite::Prouhet],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            SuiteArg::All => "all",
            other => other.suites()[0].name(),
        }
    }
}

/// Text to print on stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            code: EXIT_OK,
        }
    }

    fn checked(stdout: String, passed: bool) -> Self {
        Output {
            stdout,
            code: if passed { EXIT_OK } else { EXIT_FAILED },
        }
    }
}

/// Runs a parsed command. Errors are configuration problems and map to
/// [`EXIT_USAGE`].
pub fn run(cli: &Cli) -> Result<Output> {
    let zero_sum = cli.zero_sum.as_deref().map(parse_zero_sum).transpose()?;
    let base = match (cli.base, &zero_sum) {
        (Some(b), _) => b,
        (None, Some(a)) => a.base().get(),
        (None, None) => 2,
    };
    if let Some(a) = &zero_sum {
        if a.base().get() != base {
            return Err(Error::InvalidArgument(format!(
                "--zero-sum has {} entries but --base is {base}",
                a.base()
            )));
        }
    }
    let eval = cli.eval.as_deref().map(parse_rational).transpose()?;

    match cli.command {
        Command::Matrix { kind } => {
            let dims = Dims::with_cap(base, cli.depth, cli.cap)?;
            matrix_command(kind, dims, eval.as_ref(), cli.format)
        }
        Command::Verify { suite } => {
            let dims = Dims::with_cap(base, cli.depth, cli.cap)?;
            let zero_sums = match zero_sum {
                Some(a) => vec![a],
                None => seeded_zero_sums(dims.base(), RANDOM_VECTORS, cli.seed),
            };
            let config = SuiteConfig {
                dims,
                cap: cli.cap,
                zero_sums,
            };
            verify_command(suite, &config, cli.format)
        }
        Command::Ptm => {
            let a = zero_sum
                .ok_or_else(|| Error::InvalidArgument("ptm needs --zero-sum".to_string()))?;
            let dims = Dims::with_cap(base, cli.depth, cli.cap)?;
            ptm_command(dims, &a, cli.format)
        }
        Command::Partition => {
            let base = Base::new(base)?;
            partition_command(base, cli.depth, cli.cap, cli.format)
        }
    }
}

fn parse_zero_sum(items: &[String]) -> Result<ZeroSumVector> {
    let entries = items
        .iter()
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<Vec<_>>>()?;
    ZeroSumVector::new(entries)
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn render_matrix<T: Scalar + std::fmt::Display>(m: &Matrix<T>, format: Format) -> String {
    let rows: Vec<Vec<String>> = m.rows().map(strings).collect();
    match format {
        Format::Json => {
            let lines: Vec<String> = rows
                .iter()
                .map(|r| format!("  {}", serde_json::to_string(r).expect("strings serialize")))
                .collect();
            format!("[\n{}\n]\n", lines.join(",\n"))
        }
        Format::Csv => rows.iter().map(|r| r.join(",") + "\n").collect(),
        Format::Text => m.to_string(),
    }
}

fn matrix_command(
    kind: MatrixKind,
    dims: Dims,
    eval: Option<&Rational>,
    format: Format,
) -> Result<Output> {
    let symbolic = match kind {
        MatrixKind::S => Some(s_matrix(dims)),
        MatrixKind::X => Some(x_matrix(dims)),
        _ => None,
    };
    let text = match (symbolic, eval) {
        (Some(m), Some(x0)) => render_matrix(&m.eval(x0, &Rational::default()), format),
        (Some(_), None) if format == Format::Csv => {
            return Err(Error::InvalidArgument(
                "csv output of S or X needs --eval".to_string(),
            ))
        }
        (Some(m), None) => render_matrix(&m, format),
        (None, Some(_)) => {
            return Err(Error::InvalidArgument(
                "--eval applies only to S and X".to_string(),
            ))
        }
        (None, None) => {
            let m = match kind {
                MatrixKind::M => m_matrix(dims),
                MatrixKind::T => t_matrix(dims),
                MatrixKind::U => u_matrix(dims),
                _ => v_matrix(dims),
            };
            render_matrix(&m, format)
        }
    };
    Ok(Output::ok(text))
}

fn verify_command(suite: SuiteArg, config: &SuiteConfig, format: Format) -> Result<Output> {
    let mut checks = Vec::new();
    for s in suite.suites() {
        checks.extend(run_suite(s, config)?);
    }
    let dims = config.dims;
    let report = SuiteReport::new(suite.name(), dims.b(), dims.depth(), checks);
    let text = match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut out = String::from("name,b,N,status\n");
            for c in &report.checks {
                let _ = writeln!(out, "{},{},{},{}", c.name, c.b, c.n, c.status.label());
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                out.push_str(&check_line(c));
            }
            let _ = writeln!(
                out,
                "{} {} b={} N={}",
                if report.passed { "PASSED" } else { "FAILED" },
                report.suite,
                report.base,
                report.depth
            );
            out
        }
    };
    Ok(Output::checked(text, report.passed))
}

fn check_line(c: &CheckRecord) -> String {
    let tag = match c.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::ExpectedFail => "XFAIL",
        Status::UnexpectedPass => "XPASS",
    };
    let mut line = format!("{tag} {} b={} N={}", c.name, c.b, c.n);
    if let Some(w) = &c.witness {
        let _ = write!(
            line,
            " witness={}",
            serde_json::to_string(w).expect("witness serializes")
        );
    }
    line.push('\n');
    line
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

#[derive(Serialize)]
struct PtmReport {
    base: u32,
    depth: u32,
    zero_sum: Vec<String>,
    /// Coefficients of `F_N(x; A)`.
    f: Vec<String>,
    /// Coefficients of the cofactor `P_N`, i.e. `c_N`.
    c: Vec<String>,
    /// Coefficients of `P_N · ∏_{m<N} (1 − x^{b^m})`.
    product: Vec<String>,
    factorization_holds: bool,
}

fn padded(coeffs: &[Rational], len: usize) -> Vec<String> {
    (0..len)
        .map(|i| coeffs.get(i).cloned().unwrap_or_default().to_string())
        .collect()
}

fn ptm_command(dims: Dims, a: &ZeroSumVector, format: Format) -> Result<Output> {
    let fact = factorize(dims, a)?;
    let dim = dims.dim();
    let report = PtmReport {
        base: dims.b(),
        depth: dims.depth(),
        zero_sum: strings(a.entries()),
        f: padded(fact.f.coeffs(), dim),
        c: padded(fact.p.coeffs(), dim),
        product: padded(fact.product.coeffs(), dim),
        factorization_holds: fact.holds(),
    };
    let text = match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut out = String::from("n,f,c,product\n");
            for n in 0..dim {
                let _ = writeln!(
                    out,
                    "{n},{},{},{}",
                    report.f[n], report.c[n], report.product[n]
                );
            }
            out
        }
        Format::Text => format!(
            "A = ({})\nf = [{}]\nc = [{}]\nproduct = [{}]\nfactorization {}\n",
            report.zero_sum.join(", "),
            report.f.join(", "),
            report.c.join(", "),
            report.product.join(", "),
            if report.factorization_holds {
                "holds"
            } else {
                "FAILS"
            }
        ),
    };
    Ok(Output::checked(text, report.factorization_holds))
}

#[derive(Serialize)]
struct PartitionReport {
    base: u32,
    degree: u32,
    classes: Vec<Vec<u64>>,
    /// `power_sums[m][i]` is the sum of `n^m` over class `i`.
    power_sums: Vec<Vec<String>>,
    equal_power_sums: bool,
}

fn partition_command(base: Base, degree: u32, cap: usize, format: Format) -> Result<Output> {
    let partition = prouhet_partition(base, degree, cap)?;
    let report = PartitionReport {
        base: base.get(),
        degree,
        classes: partition.classes().to_vec(),
        power_sums: partition
            .power_sums(degree)
            .iter()
            .map(|row| strings(row))
            .collect(),
        equal_power_sums: partition.has_equal_power_sums(),
    };
    let text = match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut out = String::from("class,members\n");
            for (i, class) in report.classes.iter().enumerate() {
                let _ = writeln!(out, "{i},{}", strings(class).join(" "));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (i, class) in report.classes.iter().enumerate() {
                let _ = writeln!(out, "S_{i} = {{{}}}", strings(class).join(", "));
            }
            for (m, row) in report.power_sums.iter().enumerate() {
                let _ = writeln!(out, "m={m}: {}", row.join(" "));
            }
            out
        }
    };
    Ok(Output::checked(text, report.equal_power_sums))
}
