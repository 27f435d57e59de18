//! Command-line front end. Output is deterministic: fixed term order, fixed
//! JSON key order, nothing time-dependent.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{Map, Number, Value};

use crate::akfamily::{ak_consistency_check, ak_report, AKParams, SIGNATURE_FORMULA_NOTE};
use crate::charnum::{self, evaluate, json_integer, min_genus_bound, CharNumberVector, Flavor};
use crate::error::{Error, Result};
use crate::newton::{
    check_homogenized_identity, check_shift_property, newton_poly, uniqueness_kernel_check,
};
use crate::poly::Partition;
use crate::symfun::{verify_fiber_substitution, verify_newton_identity, FiberKind, FiberModel};

/// Above this `n`, `expand` warns about cost on stderr.
pub const EXPAND_SOFT_LIMIT: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Pontryagin,
    Chern,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Pontryagin => Flavor::Pontryagin,
            FlavorArg::Chern => Flavor::Chern,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Shift,
    Homog,
    Symmetric,
    Fiber,
    Unique,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "mmmcalc",
    version,
    about = "Newton polynomials, MMM characteristic numbers and Atiyah-Kodaira invariants"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Newton polynomial f_n.
    Newton { n: usize },
    /// Run identity checks for 1 <= n <= max-n.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        which: Check,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Expand an MMM number over Pontryagin (e_{2n-1}) or Chern (e_n) numbers.
    Expand {
        #[arg(value_enum)]
        flavor: FlavorArg,
        n: usize,
        /// Compare against a reference produced by `expand --format json`.
        #[arg(long, value_name = "FILE")]
        self_check: Option<PathBuf>,
    },
    /// Evaluate the expansion on characteristic numbers read from a JSON file.
    Evaluate {
        #[arg(value_enum)]
        flavor: FlavorArg,
        n: usize,
        numbers_file: PathBuf,
    },
    /// Invariants of the Atiyah-Kodaira construction.
    Ak {
        /// Genus of the surface S.
        #[arg(long)]
        genus: u32,
        /// Number of sheets k.
        #[arg(long)]
        sheets: u32,
        /// Also run the consistency check; failure gives a nonzero exit.
        #[arg(long)]
        check: bool,
    },
}

/// Parses `args` (program name first) and runs. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Newton { n } => cmd_newton(*n, fmt)?,
        Command::Verify { which, max_n } => {
            let (text, ok) = cmd_verify(*max_n, *which, fmt)?;
            write_out(out, &text)?;
            return Ok(if ok { 0 } else { 1 });
        }
        Command::Expand {
            flavor,
            n,
            self_check,
        } => {
            if *n > EXPAND_SOFT_LIMIT {
                let _ = writeln!(
                    err,
                    "warning: n = {n} is above {EXPAND_SOFT_LIMIT}; the expansion has p({}) terms and may take a while",
                    Flavor::from(*flavor).degree(*n)
                );
            }
            if let Some(path) = self_check {
                let reference = read_file(path)?;
                let (line, ok) = self_check_expansion((*flavor).into(), *n, &reference)?;
                write_out(out, &line)?;
                return Ok(if ok { 0 } else { 1 });
            }
            cmd_expand((*flavor).into(), *n, fmt)?
        }
        Command::Evaluate {
            flavor,
            n,
            numbers_file,
        } => {
            let json = read_file(numbers_file)?;
            cmd_evaluate((*flavor).into(), *n, &json, fmt)?
        }
        Command::Ak {
            genus,
            sheets,
            check,
        } => {
            let (text, ok) = cmd_ak(*genus, *sheets, *check, fmt)?;
            write_out(out, &text)?;
            return Ok(if ok { 0 } else { 1 });
        }
    };
    write_out(out, &text)?;
    Ok(0)
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes())
        .map_err(|e| Error::BadInput(format!("cannot write output: {e}")))
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::BadInput(format!("cannot read {}: {e}", path.display())))
}

fn number(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

fn json_line(v: Value) -> String {
    let mut s = serde_json::to_string(&v).expect("serializable");
    s.push('\n');
    s
}

fn csv_doc(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn coefficient_rows(flavor_prefix: &str, terms: &[(Partition, BigInt)]) -> Vec<Vec<String>> {
    terms
        .iter()
        .map(|(j, c)| {
            vec![
                j.to_string(),
                render_partition(flavor_prefix, j),
                c.to_string(),
            ]
        })
        .collect()
}

fn render_partition(prefix: &str, j: &Partition) -> String {
    match prefix {
        "p" => charnum::monomial_name(Flavor::Pontryagin, j),
        "c" => charnum::monomial_name(Flavor::Chern, j),
        _ => j
            .to_monomial()
            .render(&crate::poly::VarTable::indexed(prefix, j.size()).expect("valid prefix")),
    }
}

fn coefficient_object(terms: &[(Partition, BigInt)]) -> Value {
    Value::Object(
        terms
            .iter()
            .map(|(j, c)| (j.to_string(), number(c)))
            .collect::<Map<_, _>>(),
    )
}

pub fn cmd_newton(n: usize, fmt: OutputFormat) -> Result<String> {
    let f = newton_poly(n)?;
    Ok(match fmt {
        OutputFormat::Text => format!("{}\n", f.poly()),
        OutputFormat::Json => {
            let mut m = Map::new();
            m.insert("n".into(), Value::from(n));
            m.insert("polynomial".into(), Value::from(f.poly().to_text()));
            m.insert("coefficients".into(), coefficient_object(&f.coefficients()));
            json_line(Value::Object(m))
        }
        OutputFormat::Csv => csv_doc(
            &["partition", "monomial", "coefficient"],
            coefficient_rows("x", &f.coefficients()),
        ),
    })
}

/// One identity check at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: &'static str,
    pub n: usize,
    pub passed: bool,
}

fn checks_for(which: Check) -> Vec<&'static str> {
    match which {
        Check::Shift => vec!["shift"],
        Check::Homog => vec!["homog"],
        Check::Symmetric => vec!["symmetric"],
        Check::Fiber => vec!["fiber-pontryagin", "fiber-chern"],
        Check::Unique => vec!["unique"],
        Check::All => vec![
            "shift",
            "homog",
            "symmetric",
            "fiber-pontryagin",
            "fiber-chern",
            "unique",
        ],
    }
}

fn run_check(name: &str, n: usize) -> Result<bool> {
    match name {
        "shift" => check_shift_property(n),
        "homog" => check_homogenized_identity(n),
        "symmetric" => verify_newton_identity(n, n),
        "fiber-pontryagin" => {
            verify_fiber_substitution(&FiberModel::new(FiberKind::Pontryagin, n)?)
        }
        "fiber-chern" => verify_fiber_substitution(&FiberModel::new(FiberKind::Chern, n)?),
        "unique" => uniqueness_kernel_check(n),
        _ => unreachable!("unknown check {name}"),
    }
}

/// Runs the selected checks for `1..=max_n`, in parallel, returning results
/// in (check, n) order.
pub fn run_checks(max_n: usize, which: Check) -> Result<Vec<CheckResult>> {
    if max_n == 0 {
        return Err(Error::ZeroDegree(0));
    }
    // warm the cache once so workers only read it
    newton_poly(max_n + 1)?;
    let jobs: Vec<(&'static str, usize)> = checks_for(which)
        .into_iter()
        .flat_map(|c| (1..=max_n).map(move |n| (c, n)))
        .collect();
    jobs.into_par_iter()
        .map(|(check, n)| {
            Ok(CheckResult {
                check,
                n,
                passed: run_check(check, n)?,
            })
        })
        .collect()
}

pub fn cmd_verify(max_n: usize, which: Check, fmt: OutputFormat) -> Result<(String, bool)> {
    let results = run_checks(max_n, which)?;
    let ok = results.iter().all(|r| r.passed);
    let verdict = |p: bool| if p { "PASS" } else { "FAIL" };
    let text = match fmt {
        OutputFormat::Text => {
            let mut s = String::new();
            for r in &results {
                s.push_str(&format!("{} n={} {}\n", r.check, r.n, verdict(r.passed)));
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed == 0 {
                s.push_str(&format!("all {} checks passed\n", results.len()));
            } else {
                s.push_str(&format!("{failed} of {} checks failed\n", results.len()));
            }
            s
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = results
                .iter()
                .map(|r| {
                    let mut m = Map::new();
                    m.insert("check".into(), Value::from(r.check));
                    m.insert("n".into(), Value::from(r.n));
                    m.insert("result".into(), Value::from(verdict(r.passed)));
                    Value::Object(m)
                })
                .collect();
            json_line(Value::Array(rows))
        }
        OutputFormat::Csv => csv_doc(
            &["check", "n", "result"],
            results
                .iter()
                .map(|r| {
                    vec![
                        r.check.to_string(),
                        r.n.to_string(),
                        verdict(r.passed).into(),
                    ]
                })
                .collect(),
        ),
    };
    Ok((text, ok))
}

fn expansion_json(flavor: Flavor, n: usize) -> Result<Value> {
    let exp = charnum::expand(flavor, n)?;
    let mut m = Map::new();
    m.insert("flavor".into(), Value::from(flavor.to_string()));
    m.insert("n".into(), Value::from(n));
    m.insert(
        "mmm_class".into(),
        Value::from(format!("e{}", flavor.mmm_index(n))),
    );
    m.insert("degree".into(), Value::from(exp.degree()));
    m.insert("coefficients".into(), coefficient_object(exp.terms()));
    Ok(Value::Object(m))
}

pub fn cmd_expand(flavor: Flavor, n: usize, fmt: OutputFormat) -> Result<String> {
    let exp = charnum::expand(flavor, n)?;
    Ok(match fmt {
        OutputFormat::Text => {
            let items: Vec<String> = exp
                .terms()
                .iter()
                .map(|(j, c)| format!("{}: {c}", exp.monomial_name(j)))
                .collect();
            format!("{}\n", items.join(", "))
        }
        OutputFormat::Json => json_line(expansion_json(flavor, n)?),
        OutputFormat::Csv => csv_doc(
            &["partition", "monomial", "coefficient"],
            coefficient_rows(flavor.prefix(), exp.terms()),
        ),
    })
}

/// Re-derives the expansion and compares it with a reference JSON document
/// in the `expand --format json` layout.
pub fn self_check_expansion(flavor: Flavor, n: usize, reference: &str) -> Result<(String, bool)> {
    let reference: Value =
        serde_json::from_str(reference).map_err(|e| Error::BadInput(e.to_string()))?;
    let exp = charnum::expand(flavor, n)?;
    let label = format!("e{} {flavor} expansion", flavor.mmm_index(n));
    let mismatch = |why: String| Ok((format!("self-check FAIL: {label}: {why}\n"), false));

    if reference.get("flavor").and_then(Value::as_str) != Some(&flavor.to_string()) {
        return mismatch("flavor differs".into());
    }
    if reference.get("n").and_then(Value::as_u64) != Some(n as u64) {
        return mismatch("n differs".into());
    }
    let Some(Value::Object(coeffs)) = reference.get("coefficients") else {
        return mismatch("no coefficients object".into());
    };
    if coeffs.len() != exp.terms().len() {
        return mismatch(format!(
            "{} reference terms, {} derived",
            coeffs.len(),
            exp.terms().len()
        ));
    }
    for ((key, value), (j, c)) in coeffs.iter().zip(exp.terms()) {
        if *key != j.to_string() {
            return mismatch(format!("expected key {j}, found {key}"));
        }
        if json_integer(key, value)? != *c {
            return mismatch(format!("coefficient of {j} differs"));
        }
    }
    Ok((
        format!(
            "self-check PASS: {label} matches reference ({} terms)\n",
            exp.terms().len()
        ),
        true,
    ))
}

pub fn cmd_evaluate(flavor: Flavor, n: usize, json: &str, fmt: OutputFormat) -> Result<String> {
    let exp = charnum::expand(flavor, n)?;
    let v = CharNumberVector::from_json(flavor, exp.degree(), json)?;
    let value = evaluate(&exp, &v)?;
    // the genus obstruction is stated for the odd Pontryagin route
    let bound = match flavor {
        Flavor::Pontryagin => min_genus_bound(n, &value),
        Flavor::Chern => None,
    };
    Ok(match fmt {
        OutputFormat::Text => {
            let mut s = format!("{value}\n");
            if bound.is_some() {
                s.push_str(&format!("min fiber genus > {}\n", 2 * n));
            }
            s
        }
        OutputFormat::Json => {
            let mut m = Map::new();
            m.insert("flavor".into(), Value::from(flavor.to_string()));
            m.insert("n".into(), Value::from(n));
            m.insert(
                "mmm_class".into(),
                Value::from(format!("e{}", flavor.mmm_index(n))),
            );
            m.insert("value".into(), number(&value));
            m.insert(
                "min_fiber_genus".into(),
                bound.map_or(Value::Null, Value::from),
            );
            json_line(Value::Object(m))
        }
        OutputFormat::Csv => csv_doc(
            &["value", "min_fiber_genus"],
            vec![vec![
                value.to_string(),
                bound.map(|b| b.to_string()).unwrap_or_default(),
            ]],
        ),
    })
}

pub fn cmd_ak(genus: u32, sheets: u32, check: bool, fmt: OutputFormat) -> Result<(String, bool)> {
    let params = AKParams::new(genus, sheets)?;
    let report = ak_report(params)?;
    let ok = if check {
        ak_consistency_check(params)?
    } else {
        true
    };
    let fields = report.fields();
    let text = match fmt {
        OutputFormat::Text => {
            let mut s = String::new();
            for (name, v) in &fields {
                s.push_str(&format!("{name}: {v}\n"));
            }
            if check {
                s.push_str(&format!(
                    "consistency_check: {}\n",
                    if ok { "PASS" } else { "FAIL" }
                ));
            }
            s.push_str(&format!("note: {SIGNATURE_FORMULA_NOTE}\n"));
            s
        }
        OutputFormat::Json => json_line(Value::Object(
            fields
                .iter()
                .map(|(name, v)| (name.to_string(), number(v)))
                .collect(),
        )),
        OutputFormat::Csv => {
            let header: Vec<&str> = fields.iter().map(|(n, _)| *n).collect();
            csv_doc(
                &header,
                vec![fields.iter().map(|(_, v)| v.to_string()).collect()],
            )
        }
    };
    Ok((text, ok))
}
