//! `monsat`: saturation numbers of monomial ideals from the command line.
//!
//! Ideals are passed either inline (`"n=3; (x1*x2, x2*x3)"`) or with
//! `--file`, in the pretty or the record format.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monsat::borel::{self, BorelSpec};
use monsat::format::{self, IdealFormat};
use monsat::polymatroid;
use monsat::primes::{self, ScalingHypothesis};
use monsat::quasilinear::quasilinear_fit;
use monsat::saturation;
use monsat::verify;
use monsat::{Error, Limits, MonomialIdeal, VarSet};

#[derive(Parser)]
#[command(
    name = "monsat",
    version,
    about = "Saturation numbers of monomial ideals and their powers"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Records,
}

#[derive(Args)]
struct IdealInput {
    /// Ideal in pretty form, e.g. "n=3; (x1*x2, x1*x3, x2*x3)".
    #[arg(conflicts_with = "file", required_unless_present = "file")]
    ideal: Option<String>,
    /// Read the ideal from a file (pretty or record form, auto-detected).
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Saturation number via the colon chain.
    Sat {
        #[command(flatten)]
        input: IdealInput,
        /// Also print every ideal of the chain.
        #[arg(long)]
        chain: bool,
    },
    /// sat(I^k) for k = 1..=K, with a quasi-linear fit in text mode.
    SatTable {
        #[command(flatten)]
        input: IdealInput,
        #[arg(short = 'K', long = "max-k")]
        max_k: u32,
    },
    /// Graded profile of I^sat / I.
    Profile {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Generators of B^k(u_1, ..., u_m).
    Closure {
        #[arg(short, long)]
        k: u32,
        #[arg(short, long)]
        n: usize,
        /// Borel generators, e.g. x2*x3.
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Decides v ⪯_k u.
    Precedes {
        #[arg(short, long)]
        k: u32,
        #[arg(short, long)]
        n: usize,
        v: String,
        u: String,
    },
    /// Exchange-axiom test, with the rank tables when it passes.
    PolymatroidCheck {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Intersection-of-prime-powers presentation of a polymatroidal ideal.
    Decompose {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Closed formula for sat(I_{d,n}^k), optionally checked against the colon chain.
    VeroneseSat {
        #[arg(short, long)]
        d: u32,
        #[arg(short, long)]
        n: usize,
        #[arg(short = 'K', long = "max-k")]
        max_k: u32,
        /// Compare every row with the colon chain; exit 1 on a mismatch.
        #[arg(long)]
        check: bool,
    },
    /// Runs the reproduction suite; exit 1 on any failure.
    VerifyPaper,
    /// Tests sat(I^k) = k·sat(I) and stability of Ass(I^k) for k = 1..=K.
    ScalingCheck {
        #[command(flatten)]
        input: IdealInput,
        #[arg(short = 'K', long = "max-k")]
        max_k: u32,
        /// Skip the polymatroid test and take intersection type as given.
        #[arg(long)]
        assume_intersection_type: bool,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Resource { .. }) => 3,
            Failure::Lib(Error::Internal(_)) => 1,
            Failure::Lib(_) | Failure::Usage(_) | Failure::Io(_) => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Usage(m) | Failure::Io(m) => f.write_str(m),
        }
    }
}

/// Printed output plus whether the run counts as a verification success.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match Limits::DEFAULT.with_overrides(|k| std::env::var(k).ok()) {
        Ok(limits) => limits.install(),
        Err(msg) => {
            eprintln!("monsat: {msg}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("monsat: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_ideal(input: &IdealInput) -> Result<MonomialIdeal, Failure> {
    match (&input.ideal, &input.file) {
        (Some(text), _) => Ok(format::parse_ideal(text)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
            Ok(format::parse_ideal(&text)?)
        }
        (None, None) => Err(Failure::Usage("an ideal or --file is required".into())),
    }
}

fn show_ideal(ideal: &MonomialIdeal, fmt: Format) -> String {
    match fmt {
        Format::Records => format::render_ideal(ideal, IdealFormat::Records),
        _ => format::render_ideal(ideal, IdealFormat::Pretty) + "\n",
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Sat { input, chain } => {
            let ideal = read_ideal(input)?;
            let r = saturation::saturate(&ideal)?;
            let mut out = String::new();
            match fmt {
                Format::Csv => writeln!(out, "sat\n{}", r.sat_number).unwrap(),
                Format::Records => out = show_ideal(&r.saturated, fmt),
                Format::Text => {
                    writeln!(out, "sat={}", r.sat_number).unwrap();
                    write!(out, "saturation={}", show_ideal(&r.saturated, fmt)).unwrap();
                    if *chain {
                        for (i, c) in r.chain.iter().enumerate() {
                            write!(out, "I:m^{i}={}", show_ideal(c, fmt)).unwrap();
                        }
                    }
                }
            }
            Ok(Output::ok(out))
        }
        Command::SatTable { input, max_k } => {
            let ideal = read_ideal(input)?;
            let table = saturation::sat_table(&ideal, *max_k)?;
            if fmt != Format::Text {
                return Ok(Output::ok(table.to_csv()));
            }
            let mut out = String::new();
            for (k, s) in &table.rows {
                writeln!(out, "k={k} sat={s}").unwrap();
            }
            match quasilinear_fit(&table) {
                Some(fit) => out.push_str(&fit.to_string()),
                None => out.push_str("fit=none\n"),
            }
            Ok(Output::ok(out))
        }
        Command::Profile { input } => {
            let p = saturation::quotient_profile(&read_ideal(input)?)?;
            if fmt == Format::Csv {
                let mut out = String::from("d,dim\n");
                for (d, dim) in &p.per_degree {
                    writeln!(out, "{d},{dim}").unwrap();
                }
                return Ok(Output::ok(out));
            }
            Ok(Output::ok(p.to_string()))
        }
        Command::Closure { k, n, gens } => {
            let gens = gens
                .iter()
                .map(|g| format::parse_monomial(g, *n))
                .collect::<Result<Vec<_>, _>>()?;
            let closure = borel::borel_closure(&BorelSpec::new(*k, gens, *n)?);
            Ok(Output::ok(show_ideal(&closure, fmt)))
        }
        Command::Precedes { k, n, v, u } => {
            let v = format::parse_monomial(v, *n)?;
            let u = format::parse_monomial(u, *n)?;
            let holds = borel::precedes_k(&v, &u, *k)?;
            Ok(Output::ok(format!("{holds}\n")))
        }
        Command::PolymatroidCheck { input } => {
            let ideal = read_ideal(input)?;
            let mut out = String::new();
            if let Err(v) = polymatroid::check_polymatroidal(&ideal) {
                writeln!(out, "polymatroidal=false\nreason={v}").unwrap();
                return Ok(Output::ok(out));
            }
            writeln!(out, "polymatroidal=true").unwrap();
            let rank = polymatroid::rank_function(&ideal)?;
            if fmt == Format::Csv {
                out = String::from("set,rho,tau\n");
            }
            let mut subsets: Vec<VarSet> = VarSet::full(ideal.nvars()).subsets().collect();
            subsets.sort();
            for f in subsets {
                let (rho, tau) = (rank.rho(f), rank.tau(f));
                match fmt {
                    Format::Csv => writeln!(out, "\"{f}\",{rho},{tau}").unwrap(),
                    _ => writeln!(out, "{f} rho={rho} tau={tau}").unwrap(),
                }
            }
            Ok(Output::ok(out))
        }
        Command::Decompose { input } => {
            let ideal = read_ideal(input)?;
            let p = polymatroid::intersection_presentation(&ideal)?;
            let mut out = p.render();
            if fmt == Format::Text {
                writeln!(out, "sat={}", polymatroid::sat_from_presentation(&p)?).unwrap();
            }
            Ok(Output::ok(out))
        }
        Command::VeroneseSat { d, n, max_k, check } => veronese_rows(*d, *n, *max_k, *check, fmt),
        Command::VerifyPaper => verify_paper(fmt),
        Command::ScalingCheck {
            input,
            max_k,
            assume_intersection_type,
        } => {
            let hypothesis = if *assume_intersection_type {
                ScalingHypothesis::AssertedIntersectionType
            } else {
                ScalingHypothesis::Polymatroidal
            };
            let report = primes::check_scaling_law(&read_ideal(input)?, *max_k, hypothesis)?;
            if fmt != Format::Csv {
                return Ok(Output::ok(report.to_string()));
            }
            let mut out = String::from("k,sat,predicted,ass_stable\n");
            for r in &report.rows {
                writeln!(out, "{},{},{},{}", r.k, r.sat, r.predicted, r.ass_stable).unwrap();
            }
            Ok(Output::ok(out))
        }
    }
}

fn veronese_rows(
    d: u32,
    n: usize,
    max_k: u32,
    check: bool,
    fmt: Format,
) -> Result<Output, Failure> {
    if max_k == 0 {
        return Err(Failure::Usage("--max-k must be at least 1".into()));
    }
    let base = if check {
        Some(borel::veronese(d, n)?)
    } else {
        None
    };
    let mut power = MonomialIdeal::unit(n);
    let mut out = String::new();
    let mut ok = true;
    if fmt == Format::Csv {
        out.push_str(if check {
            "k,d,n,expected,computed,pass\n"
        } else {
            "k,d,n,sat\n"
        });
    }
    for k in 1..=max_k {
        let formula = borel::veronese_sat(d, n, k)?;
        match &base {
            Some(base) => {
                power = power.product(base)?;
                let chain = saturation::sat_number(&power)?;
                let pass = formula == chain;
                ok &= pass;
                match fmt {
                    Format::Csv => writeln!(out, "{k},{d},{n},{formula},{chain},{pass}").unwrap(),
                    _ => writeln!(
                        out,
                        "{} k={k} d={d} n={n} formula={formula} chain={chain}",
                        if pass { "PASS" } else { "FAIL" }
                    )
                    .unwrap(),
                }
            }
            None => match fmt {
                Format::Csv => writeln!(out, "{k},{d},{n},{formula}").unwrap(),
                _ => writeln!(out, "k={k} sat={formula}").unwrap(),
            },
        }
    }
    Ok(Output { text: out, ok })
}

/// Runs the checks on worker threads and reports them in suite order.
fn verify_paper(fmt: Format) -> Result<Output, Failure> {
    let checks: Vec<verify::Check> = std::thread::scope(|s| {
        let handles: Vec<_> = verify::CHECKS
            .iter()
            .map(|&(name, run)| s.spawn(move || verify::run_check(name, run)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    let ok = checks.iter().all(|c| c.pass);
    let mut out = String::new();
    if fmt == Format::Csv {
        out.push_str("name,expected,computed,pass\n");
        for c in &checks {
            writeln!(
                out,
                "{},{},{},{}",
                c.name,
                csv_field(&c.expected),
                csv_field(&c.computed),
                c.pass
            )
            .unwrap();
        }
    } else {
        for c in &checks {
            writeln!(out, "{c}").unwrap();
        }
        let passed = checks.iter().filter(|c| c.pass).count();
        writeln!(out, "{passed}/{} checks passed", checks.len()).unwrap();
    }
    Ok(Output { text: out, ok })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
