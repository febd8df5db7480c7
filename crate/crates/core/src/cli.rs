//! The `ulab` command line.
//!
//! Every command renders a table as CSV (header row, LF endings, no quoting)
//! or JSON (an array of objects with sorted keys). Exit code 0 means
//! success, 2 an input error and 3 a failed check in the emitted table.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::cyclo::{self, SeparationCertificate};
use crate::exact::{self, Rational};
use crate::lethargy::{self, JumpSpec, SequenceSpec};
use crate::padic::{AbsValue, PadicNumber, Prime, Valuation};
use crate::poly::{self, NewtonPolygon, PadicPoly};
use crate::schemes::{self, CertifiedBound};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ulab", version, about = "Exact p-adic and ultrametric approximation tables")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write the table here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Valuation, absolute value and digits of a rational in Q_p.
    Padic(PadicArgs),
    /// Metric data and Krasner constants of p^n-th roots of unity.
    KrasnerTable(LevelArgs),
    /// Newton polygon of a polynomial with rational coefficients.
    Newton(NewtonArgs),
    #[command(subcommand)]
    Lethargy(LethargyCommand),
    #[command(subcommand)]
    Scheme(SchemeCommand),
}

#[derive(Args, Debug)]
pub struct PadicArgs {
    #[arg(long)]
    pub prime: u64,
    /// Relative precision N: digits are known modulo p^{v+N}.
    #[arg(long)]
    pub precision: u32,
    #[arg(long, value_name = "NUM/DEN", allow_hyphen_values = true)]
    pub rational: String,
    /// Digit positions LO:HI (inclusive) instead of the unit digits.
    #[arg(long, value_name = "LO:HI", allow_hyphen_values = true)]
    pub window: Option<String>,
}

#[derive(Args, Debug)]
pub struct LevelArgs {
    #[arg(long)]
    pub prime: u64,
    #[arg(long)]
    pub max_level: u32,
}

#[derive(Args, Debug)]
pub struct NewtonArgs {
    #[arg(long)]
    pub prime: u64,
    /// Coefficients a0,a1,...,ad as rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    /// Also draw the polygon as SVG.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum LethargyCommand {
    /// Plateau regularization of a rate against a jump function.
    Regularize {
        #[arg(long)]
        eps: String,
        #[arg(long)]
        jump: String,
        #[arg(long)]
        horizon: u64,
    },
    /// The recurrence r_s and the rate exponent (rho/2) k^{1/log2 C}.
    Dichotomy {
        #[arg(long = "C", value_name = "RATIONAL")]
        c: String,
        #[arg(long, default_value = "1")]
        rho_exp: String,
        #[arg(long)]
        kmax: u64,
        #[arg(long, default_value_t = 10)]
        smax: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum SchemeCommand {
    /// Deviation of the unit ball from A_n in the null-sequence model.
    ModelA {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        nmax: u64,
    },
    /// A vector whose errors are not O(eps_n).
    Witness {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        horizon: u64,
    },
    /// Certified lower bounds for roots of unity against bounded degree.
    CpTable(LevelArgs),
}

/// A rendered table plus whether every check in it passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    pub ok: bool,
}

impl Table {
    fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
            ok: true,
        }
    }

    fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::Array(rows)).expect("json values serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(csv_cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn text(s: impl ToString) -> Value {
    Value::String(s.to_string())
}

fn num(n: impl Into<serde_json::Number>) -> Value {
    Value::Number(n.into())
}

fn opt_text<T: ToString>(v: Option<T>) -> Value {
    v.map_or(Value::Null, text)
}

fn prime(p: u64) -> Result<Prime> {
    Prime::new(p)
}

fn exponent(v: &AbsValue) -> Value {
    opt_text(v.exponent())
}

fn render_valuation(v: Valuation) -> String {
    match v {
        Valuation::Exact(v) => v.to_string(),
        Valuation::AtLeast(v) => format!(">={v}"),
    }
}

fn parse_window(s: &str) -> Result<(i64, i64)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("window {s:?} is not LO:HI")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::invalid(format!("window bound {t:?} is not an integer")))
    };
    Ok((parse(lo)?, parse(hi)?))
}

pub fn padic_table(args: &PadicArgs) -> Result<Table> {
    let p = prime(args.prime)?;
    let x = exact::parse_rational(&args.rational)?;
    let value = PadicNumber::from_ratio(&x, p, args.precision)?;
    let digits = match &args.window {
        Some(w) => {
            let (lo, hi) = parse_window(w)?;
            value.digit_window(lo, hi)?
        }
        None => value.unit_digits(),
    };
    let mut t = Table::new(vec!["prime", "precision", "valuation", "abs", "digits"]);
    t.push(vec![
        num(p.get()),
        num(args.precision),
        text(render_valuation(value.valuation())),
        text(value.abs().render(p)),
        Value::Array(digits.into_iter().map(num).collect()),
    ]);
    Ok(t)
}

pub fn krasner_table(args: &LevelArgs) -> Result<Table> {
    let p = prime(args.prime)?;
    if args.max_level == 0 {
        return Err(Error::invalid("max level must be at least 1"));
    }
    let mut t = Table::new(vec![
        "level",
        "degree",
        "dist_to_one_exponent",
        "conjugate_gap_exponent",
        "c0_coefficient",
        "c0_exponent",
        "newton_verified",
    ]);
    for level in 1..=args.max_level {
        let cert = SeparationCertificate::new(p, level)?;
        let verified = cyclo::verify_dist_via_newton(p, level)? && cert.c0_below_gap()?;
        t.ok &= verified;
        t.push(vec![
            num(level),
            num(cert.degree),
            exponent(&cert.dist_to_one),
            cert.conjugate_gap.as_ref().map_or(Value::Null, exponent),
            text(cert.c0.coefficient()),
            text(cert.c0.exponent()),
            Value::Bool(verified),
        ]);
    }
    Ok(t)
}

pub fn parse_poly(p: Prime, s: &str) -> Result<PadicPoly> {
    let coeffs = s
        .split(',')
        .map(|c| exact::parse_rational(c.trim()))
        .collect::<Result<Vec<_>>>()?;
    let f = PadicPoly::new(p, coeffs);
    if f.is_zero() {
        return Err(Error::invalid("the zero polynomial has no Newton polygon"));
    }
    Ok(f)
}

pub fn newton_table(poly: &NewtonPolygon) -> Table {
    let mut t = Table::new(vec!["record", "i", "valuation", "slope", "length", "root_valuation"]);
    for (i, v) in poly.vertices() {
        t.push(vec![text("vertex"), num(*i as u64), text(v), Value::Null, Value::Null, Value::Null]);
    }
    for s in poly.segments() {
        t.push(vec![
            text("segment"),
            num(s.start.0 as u64),
            text(&s.start.1),
            text(&s.slope),
            num(s.length as u64),
            text(s.root_valuation()),
        ]);
    }
    t
}

const SVG_WIDTH: i64 = 800;
const SVG_HEIGHT: i64 = 600;
const SVG_MARGIN: i64 = 60;

/// Nearest integer to a rational, halves rounded up.
fn round(x: &Rational) -> i64 {
    (x + exact::rat(1, 2)).floor().to_integer().to_i64().unwrap_or(0)
}

/// The Newton polygon on a fixed 800x600 canvas: every point `(i, v(a_i))`,
/// the lower hull and its slopes, with larger valuations drawn higher.
pub fn newton_svg(poly: &NewtonPolygon, p: Prime) -> String {
    let pts = poly.points();
    let max_i = pts.iter().map(|(i, _)| *i).max().unwrap_or(0).max(1) as i64;
    let lo = pts.iter().map(|(_, v)| v.clone()).min().unwrap_or_else(Rational::zero);
    let hi = pts.iter().map(|(_, v)| v.clone()).max().unwrap_or_else(Rational::zero);
    let span = if hi > lo { &hi - &lo } else { Rational::one() };
    let inner_w = exact::int(SVG_WIDTH - 2 * SVG_MARGIN);
    let inner_h = exact::int(SVG_HEIGHT - 2 * SVG_MARGIN);
    let px = |i: usize| round(&(exact::int(SVG_MARGIN) + &inner_w * exact::int(i as i64) / exact::int(max_i)));
    let py = |v: &Rational| round(&(exact::int(SVG_HEIGHT - SVG_MARGIN) - &inner_h * (v - &lo) / &span));

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}" font-family="monospace" font-size="12pt">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>"#);
    let base = SVG_HEIGHT - SVG_MARGIN;
    let _ = writeln!(
        s,
        r#"<line x1="{SVG_MARGIN}" y1="{base}" x2="{}" y2="{base}" stroke="black"/>"#,
        SVG_WIDTH - SVG_MARGIN
    );
    let _ = writeln!(
        s,
        r#"<line x1="{SVG_MARGIN}" y1="{base}" x2="{SVG_MARGIN}" y2="{SVG_MARGIN}" stroke="black"/>"#
    );
    let _ = writeln!(s, r#"<text x="{}" y="{}">i</text>"#, SVG_WIDTH - SVG_MARGIN + 10, base + 5);
    let _ = writeln!(s, r#"<text x="{}" y="{}">v_{p}</text>"#, SVG_MARGIN - 10, SVG_MARGIN - 15);
    let hull: Vec<String> = poly
        .vertices()
        .iter()
        .map(|(i, v)| format!("{},{}", px(*i), py(v)))
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
        hull.join(" ")
    );
    for (i, v) in pts {
        let (x, y) = (px(*i), py(v));
        let _ = writeln!(s, r#"<rect x="{}" y="{}" width="8" height="8" fill="black"/>"#, x - 4, y - 4);
        let _ = writeln!(s, r#"<text x="{}" y="{}">({i},{v})</text>"#, x + 6, y - 8);
    }
    for seg in poly.segments() {
        let mx = (px(seg.start.0) + px(seg.end.0)) / 2;
        let my = (py(&seg.start.1) + py(&seg.end.1)) / 2;
        let _ = writeln!(
            s,
            r#"<text x="{mx}" y="{}" fill="steelblue">slope {}</text>"#,
            my + 20,
            seg.slope
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn regularize_table(eps: &str, jump: &str, horizon: u64) -> Result<Table> {
    let eps: SequenceSpec = eps.parse()?;
    let h: JumpSpec = jump.parse()?;
    let xi = lethargy::regularize(&eps, &h, horizon)?;
    let mut t = Table::new(vec!["n", "eps_n", "xi_n", "check1", "check2"]);
    for (e, n) in eps.iter().zip(1..=horizon) {
        let x = xi.xi(n)?;
        let check1 = exact::cmp(x, &e).is_ge();
        let target = xi.xi(h.eval(n)?)? * exact::int(2);
        let check2 = exact::cmp(x, &target).is_le();
        t.ok &= check1 && check2;
        t.push(vec![num(n), text(&e), text(x), Value::Bool(check1), Value::Bool(check2)]);
    }
    Ok(t)
}

pub fn dichotomy_table(c: &str, rho: &str, kmax: u64, smax: u32) -> Result<Table> {
    let c = exact::parse_rational(c)?;
    let rho = exact::parse_rational(rho)?;
    if !rho.is_positive() {
        return Err(Error::invalid("rho exponent must be positive"));
    }
    if kmax == 0 {
        return Err(Error::invalid("kmax must be at least 1"));
    }
    let mut t = Table::new(vec!["record", "index", "lower", "upper"]);
    for (s, r) in lethargy::dichotomy_recurrence(smax).into_iter().enumerate() {
        t.ok &= r == (BigInt::one() << s).to_biguint().expect("positive") + 2u32;
        t.push(vec![text("r"), num(s as u64), text(&r), text(&r)]);
    }
    for k in 1..=kmax {
        let b = lethargy::dichotomy_bound(&c, &rho, k)?;
        t.ok &= b.lower <= b.upper;
        t.push(vec![text("bound"), num(k), text(&b.lower), text(&b.upper)]);
    }
    Ok(t)
}

pub fn model_a_table(p: u64, nmax: u64) -> Result<Table> {
    let p = prime(p)?;
    let mut t = Table::new(vec!["n", "deviation", "p_k", "ok"]);
    for n in 0..=nmax {
        let d = schemes::model_a_deviation(p, n)?;
        let ok = d.floor_holds();
        t.ok &= ok;
        t.push(vec![num(n), text(d.deviation.render(p)), text(d.floor.render(p)), Value::Bool(ok)]);
    }
    Ok(t)
}

pub fn witness_table(p: u64, eps: &str, horizon: u64) -> Result<Table> {
    let p = prime(p)?;
    let eps: SequenceSpec = eps.parse()?;
    let w = schemes::shapiro_witness(&eps, p, horizon)?;
    let mut t = Table::new(vec!["n", "eps_n", "error_exponent", "ratio", "ratio_log_floor"]);
    let mut last = i64::MIN;
    for r in &w.rows {
        let log = schemes::ratio_log_floor(p, &r.ratio);
        t.ok &= log >= last;
        last = log;
        t.push(vec![num(r.n), text(&r.eps), num(r.error_exponent), text(&r.ratio), num(log)]);
    }
    Ok(t)
}

pub fn cp_table(args: &LevelArgs) -> Result<Table> {
    let p = prime(args.prime)?;
    let rows = schemes::cp_witness_table(p, args.max_level)?;
    let mut t = Table::new(vec![
        "level",
        "witness",
        "degree",
        "c0",
        "bound",
        "route",
        "bound_holds_below",
        "dist_to_one",
        "conjugate_gap",
        "c0_below_gap",
        "newton_verified",
        "unit_norm_verified",
    ]);
    for r in rows {
        t.ok &= r.verified();
        let order = p.big().pow(r.level());
        let bound = match &r.bound {
            CertifiedBound::Krasner(c) => c.to_string(),
            CertifiedBound::ExactZero => "0".to_string(),
        };
        t.push(vec![
            num(r.level()),
            text(format!("zeta_{order}")),
            num(r.degree),
            text(cyclo::c_zero(p)),
            text(bound),
            text(r.bound.route()),
            num(r.bound_holds_below),
            text(r.dist_to_one.render(p)),
            opt_text(r.conjugate_gap.as_ref().map(|g| g.render(p))),
            Value::Bool(r.c0_below_gap),
            Value::Bool(r.newton_verified),
            Value::Bool(r.unit_norm_verified),
        ]);
    }
    Ok(t)
}

fn write_output(path: Option<&PathBuf>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, body),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

fn execute(cli: &Cli) -> Result<Table> {
    match &cli.command {
        Command::Padic(a) => padic_table(a),
        Command::KrasnerTable(a) => krasner_table(a),
        Command::Newton(a) => {
            let p = prime(a.prime)?;
            let hull = poly::newton_polygon(&parse_poly(p, &a.poly)?)?;
            if let Some(path) = &a.svg {
                std::fs::write(path, newton_svg(&hull, p))
                    .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(newton_table(&hull))
        }
        Command::Lethargy(LethargyCommand::Regularize { eps, jump, horizon }) => regularize_table(eps, jump, *horizon),
        Command::Lethargy(LethargyCommand::Dichotomy { c, rho_exp, kmax, smax }) => {
            dichotomy_table(c, rho_exp, *kmax, *smax)
        }
        Command::Scheme(SchemeCommand::ModelA { prime, nmax }) => model_a_table(*prime, *nmax),
        Command::Scheme(SchemeCommand::Witness { prime, eps, horizon }) => witness_table(*prime, eps, *horizon),
        Command::Scheme(SchemeCommand::CpTable(a)) => cp_table(a),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let table = match execute(&cli) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    if let Err(e) = write_output(cli.out.as_ref(), &table.render(cli.format)) {
        eprintln!("error: {e}");
        return EXIT_INPUT;
    }
    if table.ok {
        EXIT_OK
    } else {
        eprintln!("error: a check failed; see the false entries in the table");
        EXIT_VIOLATION
    }
}
