//! Command-line front end: compute any quantity by any route, run the
//! cross-check matrix, emit machine-readable tables, and walk through the
//! contact-transport bijection.
//!
//! Subcommands:
//!
//! * `exact` — one partition-function polynomial by a chosen route, as JSON;
//! * `crosscheck` — every applicable route on every grid point, compared
//!   coefficient-by-coefficient; exit 1 on the first mismatch;
//! * `contacts` — mean contact number at a fugacity (exact rational for `p/q`
//!   input, floating for decimal input);
//! * `asym` — leading-order asymptotics, as a point estimate or as an
//!   exact-vs-asymptotic convergence table;
//! * `bijection` — full trace of the contact-transport procedure on one family.
//!
//! Output is byte-deterministic for identical flags: JSON keys are emitted in
//! fixed order, floating values use 17 significant digits (`{:.16e}`), and
//! polynomial coefficients are decimal strings keyed by exponent. Exit codes:
//! 0 success, 1 cross-check mismatch, 2 usage or domain error.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive};
use std::str::FromStr;

use crate::asym::{convergence_report, mean_asym, z_asym_leading, Regime};
use crate::error::{Error, Result};
use crate::formulas::{z_double_sum, z_even_closed, z_marked_contacts};
use crate::lgv::{z_det_deviation0, z_det_general, z_det_watermelon};
use crate::model::{WalkerSpec, WatermelonSpec};
use crate::oracle::{enumerate_contact_polynomial, enumerate_families, Step};
use crate::poly::ContactPolynomial;
use crate::stats::normalized_mean;
use crate::tableaux::{bijection_forward, family_to_tableau};

#[derive(Parser)]
#[command(
    name = "watermelon",
    about = "Exact and asymptotic contact statistics of vicious walkers above a wall",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one partition-function polynomial by a chosen route
    Exact(ExactArgs),
    /// Run every applicable route over a grid and compare coefficients exactly
    Crosscheck(CrosscheckArgs),
    /// Mean contact number at a fugacity
    Contacts(ContactsArgs),
    /// Leading-order asymptotics and convergence tables
    Asym(AsymArgs),
    /// Trace the contact-transport bijection on one family
    Bijection(BijectionArgs),
}

/// Independent computation routes for the partition function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Brute-force enumeration over all families (exponential; reference)
    Oracle,
    /// Determinant of single-walker polynomials, arbitrary endpoints
    #[value(name = "det-general")]
    DetGeneral,
    /// Determinant specialized to watermelon endpoints
    #[value(name = "det-watermelon")]
    DetWatermelon,
    /// Hankel determinant for zero deviation
    #[value(name = "det-dev0")]
    DetDev0,
    /// Closed single-sum product formula, zero deviation
    Thm4,
    /// Closed double-sum product formula, any deviation
    Thm8,
    /// Marked-contact expansion, assembled into the polynomial
    Thm9,
}

impl Method {
    fn token(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::DetGeneral => "det-general",
            Method::DetWatermelon => "det-watermelon",
            Method::DetDev0 => "det-dev0",
            Method::Thm4 => "thm4",
            Method::Thm8 => "thm8",
            Method::Thm9 => "thm9",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct ExactArgs {
    /// Number of walkers (watermelon form; with --y)
    #[arg(long)]
    n: Option<usize>,
    /// Walk length
    #[arg(long)]
    t: i64,
    /// Deviation: end height of the lowest walker (watermelon form; with --n)
    #[arg(long)]
    y: Option<i64>,
    /// Comma-separated start heights (general form; with --e)
    #[arg(long, value_name = "LIST")]
    a: Option<String>,
    /// Comma-separated end heights (general form; with --a)
    #[arg(long, value_name = "LIST")]
    e: Option<String>,
    /// Computation route
    #[arg(long, value_enum, default_value = "thm8")]
    method: Method,
}

#[derive(Args)]
struct CrosscheckArgs {
    /// Largest number of walkers
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    /// Largest walk length
    #[arg(long, default_value_t = 12)]
    max_t: i64,
    /// Largest deviation
    #[arg(long, default_value_t = 4)]
    max_y: i64,
    /// Corrupt one route at the last grid point (self-test of the FAIL path)
    #[arg(long, hide = true)]
    inject_mismatch: bool,
}

#[derive(Args)]
struct ContactsArgs {
    /// Number of walkers
    #[arg(long)]
    n: usize,
    /// Walk length
    #[arg(long)]
    t: i64,
    /// Deviation
    #[arg(long)]
    y: i64,
    /// Contact fugacity: "p/q" for exact rational output, decimal for floating
    #[arg(long)]
    kappa: String,
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Args)]
struct AsymArgs {
    /// Number of walkers
    #[arg(long)]
    n: usize,
    /// Deviation
    #[arg(long)]
    y: i64,
    /// Contact fugacity: "p/q" or decimal
    #[arg(long)]
    kappa: String,
    /// Walk length; repeat the flag for several lengths in a report
    #[arg(long, required = true)]
    t: Vec<i64>,
    /// Emit an exact-vs-asymptotic convergence table over the given lengths
    #[arg(long)]
    report: bool,
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Args)]
struct BijectionArgs {
    /// Number of walkers
    #[arg(long)]
    n: usize,
    /// Walk length
    #[arg(long)]
    t: i64,
    /// Deviation
    #[arg(long)]
    y: i64,
    /// Index of the family in enumeration order (see `exact --method oracle`)
    #[arg(long)]
    family: usize,
}

/// Entry point used by the binary: parse, dispatch, map errors to exit codes.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.cmd {
        Command::Exact(args) => cmd_exact(&args),
        Command::Crosscheck(args) => cmd_crosscheck(&args),
        Command::Contacts(args) => cmd_contacts(&args),
        Command::Asym(args) => cmd_asym(&args),
        Command::Bijection(args) => cmd_bijection(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

/// Fugacity argument: exact rational (`p/q` or integer literal) or floating
/// (decimal literal).
enum KappaValue {
    Exact(BigRational),
    Float(f64),
}

impl KappaValue {
    fn as_f64(&self) -> f64 {
        match self {
            KappaValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            KappaValue::Float(x) => *x,
        }
    }

    fn as_rational(&self) -> Result<BigRational> {
        match self {
            KappaValue::Exact(r) => Ok(r.clone()),
            KappaValue::Float(x) => BigRational::from_float(*x).ok_or_else(|| {
                Error::InvalidConfig(format!("fugacity {x} has no finite rational value"))
            }),
        }
    }

    /// Deterministic display used in JSON/CSV: `p/q` for exact, `{:.16e}` for float.
    fn display(&self) -> String {
        match self {
            KappaValue::Exact(r) => r.to_string(),
            KappaValue::Float(x) => fmt_float(*x),
        }
    }
}

fn parse_kappa(text: &str) -> Result<KappaValue> {
    let bad = |why: &str| Error::InvalidConfig(format!("fugacity '{text}': {why}"));
    if let Some((p, q)) = text.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad("numerator is not an integer"))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad("denominator is not an integer"))?;
        if q == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        return Ok(KappaValue::Exact(BigRational::new(p, q)));
    }
    if !text.contains(['.', 'e', 'E']) {
        if let Ok(p) = BigInt::from_str(text.trim()) {
            return Ok(KappaValue::Exact(BigRational::from(p)));
        }
    }
    let x = f64::from_str(text.trim()).map_err(|_| bad("not a number"))?;
    if !x.is_finite() {
        return Err(bad("not finite"));
    }
    Ok(KappaValue::Float(x))
}

/// Fixed floating format of the output contract: 17 significant digits.
fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_height_list(text: &str, what: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<i64>().map_err(|_| {
                Error::InvalidConfig(format!("{what} list entry '{part}' is not an integer"))
            })
        })
        .collect()
}

/// The polynomial JSON contract:
/// `{"n":int,"t":int,"y":int|null,"coeffs":{"<exponent>":"<decimal integer>"}}`.
fn polynomial_json(n: usize, t: i64, y: Option<i64>, z: &ContactPolynomial) -> String {
    let y_text = y.map_or_else(|| "null".into(), |v| v.to_string());
    let coeffs = z
        .terms()
        .map(|(exp, coeff)| format!("\"{exp}\":\"{coeff}\""))
        .collect::<Vec<_>>()
        .join(",");
    format!("{{\"n\":{n},\"t\":{t},\"y\":{y_text},\"coeffs\":{{{coeffs}}}}}")
}

/// Zero-length walks degenerate every route to the reference count, so they are
/// answered by the enumeration layer directly.
fn zero_length_polynomial(n: usize, y: i64) -> Result<ContactPolynomial> {
    if y != 0 {
        return Err(Error::InvalidConfig(format!(
            "t = 0 forces deviation 0, got y = {y}"
        )));
    }
    let heights: Vec<i64> = (0..n as i64).map(|i| 2 * i).collect();
    let w = WalkerSpec::new(0, heights.clone(), heights)?;
    Ok(enumerate_contact_polynomial(&w))
}

/// One watermelon partition function by the requested route. `t = 0` is routed
/// to the enumeration layer for every method.
fn watermelon_route(method: Method, n: usize, t: i64, y: i64) -> Result<ContactPolynomial> {
    if t == 0 {
        return zero_length_polynomial(n, y);
    }
    let w = WatermelonSpec::new(n, t, y)?;
    match method {
        Method::Oracle => Ok(enumerate_contact_polynomial(&w.walker_spec())),
        Method::DetGeneral => z_det_general(&w.walker_spec()),
        Method::DetWatermelon => z_det_watermelon(&w),
        Method::DetDev0 => {
            if y != 0 {
                return Err(Error::InvalidConfig(format!(
                    "method det-dev0 requires deviation 0, got y = {y}"
                )));
            }
            z_det_deviation0(n, t / 2)
        }
        Method::Thm4 => {
            if y != 0 {
                return Err(Error::InvalidConfig(format!(
                    "method thm4 requires deviation 0, got y = {y}"
                )));
            }
            z_even_closed(n, t / 2)
        }
        Method::Thm8 => z_double_sum(&w),
        Method::Thm9 => z_marked_contacts(&w)?.assemble(),
    }
}

fn cmd_exact(args: &ExactArgs) -> Result<i32> {
    let z;
    let (n, y_field);
    match (&args.a, &args.e) {
        (Some(a), Some(e)) => {
            if args.n.is_some() || args.y.is_some() {
                return Err(Error::InvalidConfig(
                    "give either --n/--y or --a/--e, not both".into(),
                ));
            }
            let starts = parse_height_list(a, "start")?;
            let ends = parse_height_list(e, "end")?;
            let w = WalkerSpec::new(args.t, starts, ends)?;
            z = match args.method {
                Method::Oracle => enumerate_contact_polynomial(&w),
                Method::DetGeneral => z_det_general(&w)?,
                other => {
                    return Err(Error::InvalidConfig(format!(
                        "method {} needs watermelon endpoints; use --n/--y",
                        other.token()
                    )));
                }
            };
            n = w.n();
            y_field = None;
        }
        (None, None) => {
            let (n_flag, y_flag) = match (args.n, args.y) {
                (Some(n), Some(y)) => (n, y),
                _ => {
                    return Err(Error::InvalidConfig(
                        "give --n and --y (watermelon) or --a and --e (general)".into(),
                    ));
                }
            };
            z = watermelon_route(args.method, n_flag, args.t, y_flag)?;
            n = n_flag;
            y_field = Some(y_flag);
        }
        _ => {
            return Err(Error::InvalidConfig(
                "--a and --e must be given together".into(),
            ));
        }
    }
    println!("{}", polynomial_json(n, args.t, y_field, &z));
    Ok(0)
}

/// Routes applicable to one grid point, in reporting order.
fn applicable_routes(t: i64, y: i64) -> Vec<Method> {
    if t == 0 {
        return vec![Method::Oracle];
    }
    let mut routes = vec![
        Method::Oracle,
        Method::DetGeneral,
        Method::DetWatermelon,
        Method::Thm8,
        Method::Thm9,
    ];
    if y == 0 {
        routes.push(Method::DetDev0);
        routes.push(Method::Thm4);
    }
    routes
}

struct Mismatch {
    route: &'static str,
    exponent: usize,
    expected: BigInt,
    got: BigInt,
}

struct PointOutcome {
    n: usize,
    t: i64,
    y: i64,
    routes: Vec<&'static str>,
    mismatch: Option<Mismatch>,
}

/// First exponent where the two polynomials differ, with both coefficients.
fn first_difference(
    reference: &ContactPolynomial,
    other: &ContactPolynomial,
) -> Option<(usize, BigInt, BigInt)> {
    let top = reference.degree().max(other.degree()).unwrap_or(0);
    (0..=top).find_map(|exp| {
        let want = reference.coeff(exp);
        let got = other.coeff(exp);
        (want != got).then_some((exp, want, got))
    })
}

fn check_point(n: usize, t: i64, y: i64, corrupt: bool) -> Result<PointOutcome> {
    let methods = applicable_routes(t, y);
    let reference = watermelon_route(methods[0], n, t, y)?;
    let mut mismatch = None;
    for &method in &methods[1..] {
        let mut z = watermelon_route(method, n, t, y)?;
        if corrupt && method == Method::Thm8 {
            let low = z.valuation().unwrap_or(0);
            z.add_term(low, BigInt::one());
        }
        if let Some((exponent, expected, got)) = first_difference(&reference, &z) {
            mismatch = Some(Mismatch {
                route: method.token(),
                exponent,
                expected,
                got,
            });
            break;
        }
    }
    Ok(PointOutcome {
        n,
        t,
        y,
        routes: methods.iter().map(|m| m.token()).collect(),
        mismatch,
    })
}

fn cmd_crosscheck(args: &CrosscheckArgs) -> Result<i32> {
    if args.max_n == 0 {
        return Err(Error::InvalidConfig("--max-n must be at least 1".into()));
    }
    let mut points = Vec::new();
    for n in 1..=args.max_n {
        for y in 0..=args.max_y {
            let mut t = if y == 0 { 0 } else { y };
            while t <= args.max_t {
                points.push((n, t, y));
                t += 2;
            }
        }
    }
    let last = points.len().saturating_sub(1);

    // evaluate grid points concurrently, then report in deterministic grid order
    let workers = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(points.len().max(1));
    let mut outcomes: Vec<Option<Result<PointOutcome>>> = Vec::new();
    outcomes.resize_with(points.len(), || None);
    std::thread::scope(|scope| {
        let (tx, rx) = std::sync::mpsc::channel();
        for worker in 0..workers {
            let tx = tx.clone();
            let points = &points;
            let inject = args.inject_mismatch;
            scope.spawn(move || {
                let mut idx = worker;
                while idx < points.len() {
                    let (n, t, y) = points[idx];
                    let outcome = check_point(n, t, y, inject && idx == last);
                    if tx.send((idx, outcome)).is_err() {
                        return;
                    }
                    idx += workers;
                }
            });
        }
        drop(tx);
        for (idx, outcome) in rx {
            outcomes[idx] = Some(outcome);
        }
    });

    for outcome in outcomes {
        let point = outcome.expect("every grid point reports")?;
        let PointOutcome {
            n,
            t,
            y,
            routes,
            mismatch,
        } = point;
        match mismatch {
            None => {
                println!("n={n} t={t} y={y} routes=[{}] PASS", routes.join(" "));
            }
            Some(m) => {
                println!(
                    "n={n} t={t} y={y} FAIL route={} exponent={} expected={} got={}",
                    m.route, m.exponent, m.expected, m.got
                );
                return Ok(1);
            }
        }
    }
    println!("crosscheck PASS ({} instances)", points.len());
    Ok(0)
}

fn cmd_contacts(args: &ContactsArgs) -> Result<i32> {
    let kappa = parse_kappa(&args.kappa)?;
    let z = if args.t == 0 {
        zero_length_polynomial(args.n, args.y)?
    } else {
        z_double_sum(&WatermelonSpec::new(args.n, args.t, args.y)?)?
    };
    let mean = normalized_mean(&z, &kappa.as_rational()?)?;
    let mean_text = match kappa {
        KappaValue::Exact(_) => format!("\"{mean}\""),
        KappaValue::Float(_) => fmt_float(
            mean.to_f64()
                .ok_or_else(|| Error::Numerical("mean does not fit in f64".into()))?,
        ),
    };
    match args.format {
        OutputFormat::Json => {
            println!(
                "{{\"n\":{},\"t\":{},\"y\":{},\"kappa\":\"{}\",\"mean\":{}}}",
                args.n,
                args.t,
                args.y,
                kappa.display(),
                mean_text,
            );
        }
        OutputFormat::Csv => {
            println!("n,t,y,kappa,mean");
            println!(
                "{},{},{},{},{}",
                args.n,
                args.t,
                args.y,
                kappa.display(),
                mean_text.trim_matches('"'),
            );
        }
    }
    Ok(0)
}

fn cmd_asym(args: &AsymArgs) -> Result<i32> {
    let kappa = parse_kappa(&args.kappa)?;
    let kappa_f = kappa.as_f64();
    if args.report {
        let mut lengths = args.t.clone();
        lengths.sort_unstable();
        lengths.dedup();
        let rows = convergence_report(args.n, args.y, &kappa.as_rational()?, &lengths)?;
        let regime = Regime::classify(kappa_f)?;
        match args.format {
            OutputFormat::Json => {
                let body = rows
                    .iter()
                    .map(|row| {
                        format!(
                            "{{\"t\":{},\"ln_exact\":{},\"ln_asym\":{},\"gap\":{}}}",
                            row.t,
                            fmt_float(row.ln_exact),
                            fmt_float(row.ln_asym),
                            fmt_float(row.gap),
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(",");
                println!(
                    "{{\"n\":{},\"y\":{},\"kappa\":\"{}\",\"regime\":\"{regime}\",\"rows\":[{body}]}}",
                    args.n,
                    args.y,
                    kappa.display(),
                );
            }
            OutputFormat::Csv => {
                println!("t,ln_exact,ln_asym,gap");
                for row in &rows {
                    println!(
                        "{},{},{},{}",
                        row.t,
                        fmt_float(row.ln_exact),
                        fmt_float(row.ln_asym),
                        fmt_float(row.gap),
                    );
                }
            }
        }
        return Ok(0);
    }
    if args.t.len() != 1 {
        return Err(Error::InvalidConfig(
            "point mode takes exactly one --t; pass --report for a table".into(),
        ));
    }
    let t = args.t[0];
    let est = z_asym_leading(args.n, args.y, kappa_f, t)?;
    let mean = mean_asym(args.n, args.y, kappa_f, t)?;
    match args.format {
        OutputFormat::Json => {
            println!(
                "{{\"n\":{},\"y\":{},\"kappa\":\"{}\",\"t\":{t},\"regime\":\"{}\",\"growth_rate\":{},\"critical_exponent\":{},\"constant\":{},\"ln_value\":{},\"mean\":{}}}",
                args.n,
                args.y,
                kappa.display(),
                est.regime,
                fmt_float(est.growth_rate),
                fmt_float(est.critical_exponent),
                fmt_float(est.constant),
                fmt_float(est.ln_value),
                fmt_float(mean),
            );
        }
        OutputFormat::Csv => {
            println!("n,y,kappa,t,regime,growth_rate,critical_exponent,constant,ln_value,mean");
            println!(
                "{},{},{},{t},{},{},{},{},{},{}",
                args.n,
                args.y,
                kappa.display(),
                est.regime,
                fmt_float(est.growth_rate),
                fmt_float(est.critical_exponent),
                fmt_float(est.constant),
                fmt_float(est.ln_value),
                fmt_float(mean),
            );
        }
    }
    Ok(0)
}

fn walk_string(steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| if *s == Step::Up { 'u' } else { 'd' })
        .collect()
}

fn print_rows(rows: &[Vec<i64>], indent: &str) {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for row in rows {
        let line = row
            .iter()
            .map(|v| format!("{v:width$}"))
            .collect::<Vec<_>>()
            .join(" ");
        println!("{indent}{line}");
    }
}

fn cmd_bijection(args: &BijectionArgs) -> Result<i32> {
    let w = WatermelonSpec::new(args.n, args.t, args.y)?;
    let families = enumerate_families(&w.walker_spec());
    let family = families.get(args.family).ok_or(Error::IndexOutOfRange {
        index: args.family,
        count: families.len(),
    })?;
    let transport = bijection_forward(family, &w)?;

    println!(
        "configuration n={} t={} y={}, family {} of {}",
        args.n,
        args.t,
        args.y,
        args.family,
        families.len()
    );
    for (i, walk) in family.walks().iter().enumerate() {
        println!(
            "  walker {} (start {}): {}",
            i + 1,
            family.starts()[i],
            walk_string(walk)
        );
    }
    let start = family_to_tableau(family)?;
    println!("start tableau (down-step positions, rows):");
    print_rows(&start.rows(), "  ");
    for (round, record) in transport.rounds.iter().enumerate() {
        println!(
            "round {}: special entry from column 0 row {}, slides to corner (row {}, column {})",
            round + 1,
            record.special_row,
            record.corner.0,
            record.corner.1
        );
        print_rows(&record.after_slide_rows, "  ");
    }
    println!(
        "after {} rounds every entry decreases by 1; image tableau:",
        transport.rounds.len()
    );
    print_rows(&transport.end.rows(), "  ");
    println!(
        "image family (lowest walker shortened by {} steps):",
        transport.contacts_transported + 1
    );
    for (i, walk) in transport.family.walks().iter().enumerate() {
        println!(
            "  walker {} (start {}): {}",
            i + 1,
            transport.family.starts()[i],
            walk_string(walk)
        );
    }
    println!("contacts transported: {}", transport.contacts_transported);
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_parsing_routes() {
        assert!(matches!(parse_kappa("3/2").unwrap(), KappaValue::Exact(_)));
        assert!(matches!(parse_kappa("2").unwrap(), KappaValue::Exact(_)));
        assert!(matches!(parse_kappa("1.5").unwrap(), KappaValue::Float(_)));
        assert!(matches!(parse_kappa("2e0").unwrap(), KappaValue::Float(_)));
        assert!(parse_kappa("1/0").is_err());
        assert!(parse_kappa("abc").is_err());
        assert!(parse_kappa("inf").is_err());
        assert_eq!(parse_kappa("3/2").unwrap().display(), "3/2");
        assert_eq!(parse_kappa("4/2").unwrap().display(), "2");
    }

    #[test]
    fn float_format_is_17_significant_digits() {
        assert_eq!(fmt_float(2.0), "2.0000000000000000e0");
        assert_eq!(fmt_float(0.5), "5.0000000000000000e-1");
    }

    #[test]
    fn polynomial_json_shape() {
        let z =
            ContactPolynomial::from_terms([(2usize, BigInt::from(1)), (3usize, BigInt::from(2))]);
        assert_eq!(
            polynomial_json(2, 4, Some(0), &z),
            "{\"n\":2,\"t\":4,\"y\":0,\"coeffs\":{\"2\":\"1\",\"3\":\"2\"}}"
        );
        assert_eq!(
            polynomial_json(2, 4, None, &z),
            "{\"n\":2,\"t\":4,\"y\":null,\"coeffs\":{\"2\":\"1\",\"3\":\"2\"}}"
        );
    }

    #[test]
    fn zero_length_routes_to_enumeration() {
        let z = watermelon_route(Method::Thm8, 2, 0, 0).unwrap();
        assert_eq!(z, ContactPolynomial::monomial(1, BigInt::one()));
        assert!(watermelon_route(Method::Thm8, 2, 0, 2).is_err());
    }

    #[test]
    fn route_dispatch_matches_reference() {
        for method in [
            Method::Oracle,
            Method::DetGeneral,
            Method::DetWatermelon,
            Method::Thm8,
            Method::Thm9,
        ] {
            let z = watermelon_route(method, 2, 4, 0).unwrap();
            assert_eq!(
                z,
                ContactPolynomial::from_terms([
                    (2usize, BigInt::from(1)),
                    (3usize, BigInt::from(2)),
                ]),
                "method {:?}",
                method
            );
        }
        assert!(watermelon_route(Method::Thm4, 2, 4, 2).is_err());
        assert!(watermelon_route(Method::DetDev0, 2, 4, 2).is_err());
    }

    #[test]
    fn difference_reports_lowest_exponent() {
        let a = ContactPolynomial::from_terms([(1usize, BigInt::from(2)), (3, BigInt::from(4))]);
        let b = ContactPolynomial::from_terms([(1usize, BigInt::from(2)), (3, BigInt::from(5))]);
        let (exp, want, got) = first_difference(&a, &b).unwrap();
        assert_eq!((exp, want, got), (3, BigInt::from(4), BigInt::from(5)));
        assert!(first_difference(&a, &a).is_none());
    }
}
