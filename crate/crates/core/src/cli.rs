//! Command-line front end behind the `mgg` binary.
//!
//! Exit codes: 0 success, 1 invalid input, 2 a computed disagreement or failed invariant.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cocycle::{FieldElem, FieldModel};
use crate::cover::{self, CoverKind, DEFAULT_BOUND};
use crate::report::{self, Params, SweepRow};
use crate::verify::{self, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mgg", version, about = "Whittaker dimensions of Gelfand-Graev modules for metaplectic covers of GL(r)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Derived parameters r0, n0, d0 and the structure of X(lambda).
    Derive(Flags),
    /// The S_k-orbits of X(lambda).
    Orbits(Flags),
    /// Closed-form, brute-force and Hecke dimensions side by side.
    Dims(Flags),
    /// Run the invariant suites.
    Verify(VerifyFlags),
    /// Dimension table over parameter ranges.
    Sweep(Flags),
    /// The tame n-th Hilbert symbol (u, v).
    Hilbert(HilbertFlags),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// A flag value: a number, or for `sweep` a range `a..b` (inclusive) or list `a,b,c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Spec {
    Int(i64),
    Text(String),
}

impl std::str::FromStr for Spec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(s.trim().parse::<i64>().map_or_else(|_| Spec::Text(s.trim().to_string()), Spec::Int))
    }
}

impl Spec {
    fn single(&self, name: &str) -> Result<i64, String> {
        match self {
            Spec::Int(v) => Ok(*v),
            Spec::Text(s) => Err(format!("--{name} expects an integer, got {s:?}")),
        }
    }

    /// Values in order of appearance; ranges are inclusive and may be empty.
    fn values(&self, name: &str) -> Result<Vec<i64>, String> {
        let text = match self {
            Spec::Int(v) => return Ok(vec![*v]),
            Spec::Text(s) => s,
        };
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || format!("--{name}: cannot parse {part:?}");
            if let Some((a, b)) = part.split_once("..") {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
                out.extend(a..=b);
            } else {
                out.push(part.parse().map_err(|_| bad())?);
            }
        }
        Ok(out)
    }
}

/// Shared parameter flags. Every field may also come from `--config`; flags win.
#[derive(Args, Clone, Debug, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Flags {
    /// kp, savin or generic (sweep accepts a comma list).
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<Spec>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<Spec>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<Spec>,
    /// Rank of GL(r); defaults to k.
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<Spec>,
    /// Sweep only: r runs over these multiples of k.
    #[arg(long)]
    pub r_mult: Option<Spec>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<Spec>,
    /// Defaults to 1 (sweep: every divisor of n).
    #[arg(long)]
    pub l0: Option<Spec>,
    /// q0 = q^f.
    #[arg(long)]
    pub f: Option<u32>,
    /// Specialization point for the Hecke computation, e.g. 5 or 1/2.
    #[arg(long)]
    pub q: Option<String>,
    /// Ceiling on |X(lambda)| for exhaustive enumeration.
    #[arg(long)]
    pub bound: Option<u64>,
    #[arg(long, value_enum)]
    pub output: Option<OutputFormat>,
    /// JSON file whose keys mirror the flags.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

macro_rules! overlay {
    ($dst:ident, $src:ident; $($field:ident),*) => {
        $( if $dst.$field.is_none() { $dst.$field = $src.$field; } )*
    };
}

impl Flags {
    /// Flag values with the config file filling the gaps.
    fn resolved(&self) -> Result<Flags, String> {
        let mut out = self.clone();
        if let Some(path) = &self.config {
            let file: Flags = read_config(path)?;
            overlay!(out, file; kind, n, c, d, r, r_mult, k, l0, f, q, bound, output);
        }
        Ok(out)
    }

    fn kinds(&self) -> Result<Vec<CoverKind>, String> {
        let s = self.kind.as_deref().ok_or("--kind is required")?;
        s.split(',').map(|k| k.trim().parse::<CoverKind>().map_err(|e| e.to_string())).collect()
    }

    fn bound(&self) -> u64 {
        self.bound.unwrap_or(DEFAULT_BOUND)
    }

    fn q_point(&self) -> Result<Option<BigRational>, String> {
        self.q.as_deref().map(|s| s.trim().parse::<BigRational>().map_err(|_| format!("--q: cannot parse {s:?} as a rational"))).transpose()
    }

    /// The single parameter point of derive, orbits and dims.
    fn params(&self) -> Result<Params, String> {
        let kinds = self.kinds()?;
        let [kind] = kinds[..] else { return Err("--kind takes a single value here".into()) };
        let get = |v: &Option<Spec>, name: &str| v.as_ref().map(|s| s.single(name)).transpose();
        let n = get(&self.n, "n")?.ok_or("--n is required")?;
        let k = get(&self.k, "k")?.ok_or("--k is required")?;
        let r = get(&self.r, "r")?.unwrap_or(k);
        let l0 = get(&self.l0, "l0")?.unwrap_or(1);
        let (c, d) = cover_defaults(kind, get(&self.c, "c")?, get(&self.d, "d")?)?;
        Ok(Params { kind, n, c, d, r, k, l0, f: self.f.unwrap_or(1) })
    }

    /// All sweep points, lexicographic in parameters.
    fn sweep_points(&self) -> Result<Vec<Params>, String> {
        let vals = |v: &Option<Spec>, name: &str| v.as_ref().map(|s| s.values(name)).transpose();
        let ns = vals(&self.n, "n")?.ok_or("--n is required")?;
        let ks = vals(&self.k, "k")?.ok_or("--k is required")?;
        let rs = vals(&self.r, "r")?;
        let mults = vals(&self.r_mult, "r-mult")?;
        if rs.is_some() && mults.is_some() {
            return Err("--r and --r-mult are exclusive".into());
        }
        let l0s = vals(&self.l0, "l0")?;
        let cs = vals(&self.c, "c")?;
        let ds = vals(&self.d, "d")?;
        let f = self.f.unwrap_or(1);
        let mut out = Vec::new();
        for kind in self.kinds()? {
            for &n in &ns {
                let l0_list = l0s.clone().unwrap_or_else(|| (1..=n).filter(|l| n % l == 0).collect());
                let c_list: Vec<i64> = match kind {
                    CoverKind::Savin => vec![-1],
                    _ => cs.clone().unwrap_or_else(|| (0..n).collect()),
                };
                let d_list: Vec<i64> = match kind {
                    CoverKind::Kp => vec![1],
                    CoverKind::Savin => vec![2],
                    CoverKind::Generic => ds.clone().ok_or("--d is required for generic covers")?,
                };
                for &k in &ks {
                    let r_list: Vec<i64> = match (&rs, &mults) {
                        (Some(r), _) => r.clone(),
                        (None, Some(m)) => m.iter().map(|m| m * k).collect(),
                        (None, None) => vec![k],
                    };
                    for &c in &c_list {
                        for &d in &d_list {
                            for &r in &r_list {
                                for &l0 in &l0_list {
                                    let p = Params { kind, n, c, d, r, k, l0, f };
                                    // points outside the model (k ∤ r, l0 ∤ n, n < 1) are not rows
                                    if p.validate().is_ok() {
                                        out.push(p);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

fn cover_defaults(kind: CoverKind, c: Option<i64>, d: Option<i64>) -> Result<(i64, i64), String> {
    match kind {
        CoverKind::Kp => Ok((c.unwrap_or(0), d.unwrap_or(1))),
        CoverKind::Savin => Ok((c.unwrap_or(-1), d.unwrap_or(2))),
        CoverKind::Generic => Ok((
            c.ok_or("--c is required for generic covers")?,
            d.ok_or("--d is required for generic covers")?,
        )),
    }
}

fn read_config<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

#[derive(Args, Clone, Debug, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyFlags {
    /// Suites to run (comma list); all by default.
    #[arg(long, value_delimiter = ',')]
    pub suite: Option<Vec<String>>,
    /// Residue field size(s) for the cocycle suite.
    #[arg(long, value_delimiter = ',')]
    pub q: Option<Vec<u64>>,
    /// Restrict the cocycle suite to this n.
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub bound: Option<u64>,
    #[arg(long, value_enum)]
    pub output: Option<OutputFormat>,
    /// Self-test: perturb one Hecke structure constant.
    #[arg(long, hide = true)]
    #[serde(skip)]
    pub inject_fault: bool,
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HilbertFlags {
    /// Residue field size.
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    /// `valuation:unit_exponent`.
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
    #[arg(long, value_enum)]
    pub output: Option<OutputFormat>,
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

fn parse_elem(fm: &FieldModel, s: &str) -> Result<FieldElem, String> {
    let (a, x) = s.split_once(':').ok_or_else(|| format!("expected val:unit, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad valuation in {s:?}"))?;
    let x: i64 = x.trim().parse().map_err(|_| format!("bad unit exponent in {s:?}"))?;
    Ok(fm.elem(a, x))
}

enum Failure {
    Invalid(String),
    Disagree(&'static str),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Invalid(s)
    }
}

impl From<&str> for Failure {
    fn from(s: &str) -> Self {
        Failure::Invalid(s.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(io::Error::other)?;
    writeln!(out)
}

fn csv_rows(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(io::Error::other)?;
    for r in rows {
        w.write_record(r).map_err(io::Error::other)?;
    }
    w.flush()
}

fn cmd_derive(flags: &Flags, out: &mut dyn Write) -> Result<(), Failure> {
    let p = flags.params()?;
    let (cov, ty) = p.validate().map_err(|e| e.to_string())?;
    let d = cover::derive_params(&cov, &ty).map_err(|e| e.to_string())?;
    let g = cover::x_lambda(&cov, &ty).map_err(|e| e.to_string())?;
    let m = cover::coroot_multiplier(&g).map_err(|e| e.to_string())?;
    match flags.output.unwrap_or(OutputFormat::Text) {
        OutputFormat::Json => json_line(
            out,
            &json!({
                "params": p, "r0": d.r0, "n0": d.n0, "d0": d.d0,
                "x_order": g.order(), "invariant_factors": g.invariant_factors(),
                "relation_lattice": g.relation_lattice(), "coroot_multiplier": m,
            }),
        )?,
        OutputFormat::Csv => csv_rows(
            out,
            &["kind", "n", "c", "d", "r", "k", "l0", "r0", "n0", "d0", "x_order", "invariant_factors", "coroot_multiplier"],
            &[vec![
                p.kind.to_string(),
                p.n.to_string(),
                p.c.to_string(),
                p.d.to_string(),
                p.r.to_string(),
                p.k.to_string(),
                p.l0.to_string(),
                d.r0.to_string(),
                d.n0.to_string(),
                d.d0.to_string(),
                g.order().to_string(),
                join(g.invariant_factors(), " "),
                m.to_string(),
            ]],
        )?,
        OutputFormat::Text => {
            writeln!(out, "r0 = {}, n0 = {}, d0 = {}", d.r0, d.n0, d.d0)?;
            writeln!(out, "|X| = {} with invariant factors [{}]", g.order(), join(g.invariant_factors(), ", "))?;
            writeln!(out, "coroot multiplier = {m}")?;
            for row in g.relation_lattice() {
                writeln!(out, "  lattice row {row:?}")?;
            }
        }
    }
    Ok(())
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn cmd_orbits(flags: &Flags, out: &mut dyn Write) -> Result<(), Failure> {
    let p = flags.params()?;
    let (cov, ty) = p.validate().map_err(|e| e.to_string())?;
    let g = cover::x_lambda(&cov, &ty).map_err(|e| e.to_string())?;
    let orbits = g.orbits(flags.bound()).map_err(|e| e.to_string())?;
    match flags.output.unwrap_or(OutputFormat::Text) {
        OutputFormat::Json => json_line(out, &orbits)?,
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = orbits
                .iter()
                .map(|o| {
                    vec![
                        join(&o.representative, " "),
                        o.size.to_string(),
                        o.stabilizer.as_ref().map_or("NA".to_string(), |c| join(c.parts(), " ")),
                        o.stabilizer_order.to_string(),
                    ]
                })
                .collect();
            csv_rows(out, &["representative", "size", "stabilizer", "stabilizer_order"], &rows)?;
        }
        OutputFormat::Text => {
            for o in &orbits {
                writeln!(out, "{o}")?;
            }
            writeln!(out, "{} orbits on {} classes", orbits.len(), g.order())?;
        }
    }
    Ok(())
}

fn cmd_dims(flags: &Flags, out: &mut dyn Write) -> Result<(), Failure> {
    let p = flags.params()?;
    let q = flags.q_point()?;
    let rep = report::dim_report(p, flags.bound(), q.as_ref()).map_err(|e| e.to_string())?;
    match flags.output.unwrap_or(OutputFormat::Text) {
        OutputFormat::Json => json_line(out, &rep)?,
        OutputFormat::Csv => csv_rows(out, &report::CSV_HEADER, &[rep.csv_record()])?,
        OutputFormat::Text => write!(out, "{rep}")?,
    }
    if rep.disagrees() {
        return Err(Failure::Disagree("dimension computations disagree"));
    }
    Ok(())
}

fn cmd_sweep(flags: &Flags, out: &mut dyn Write) -> Result<(), Failure> {
    let points = flags.sweep_points()?;
    let q = flags.q_point()?;
    let rows = report::sweep(points, flags.bound(), q.as_ref());
    match flags.output.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => report::write_csv(&mut *out, &rows).map_err(|e| e.to_string())?,
        OutputFormat::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| match r {
                    SweepRow::Report(rep) => serde_json::to_value(rep).expect("report serializes"),
                    SweepRow::Failed(p, e) => json!({ "params": p, "error": e }),
                })
                .collect();
            json_line(out, &items)?;
        }
        OutputFormat::Text => {
            let mut table = vec![report::CSV_HEADER.iter().map(ToString::to_string).collect::<Vec<_>>()];
            table.extend(rows.iter().map(SweepRow::csv_record));
            let widths: Vec<usize> =
                (0..report::CSV_HEADER.len()).map(|i| table.iter().map(|r| r[i].len()).max().unwrap_or(0)).collect();
            for row in &table {
                let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
    }
    if rows.iter().any(SweepRow::disagrees) {
        return Err(Failure::Disagree("dimension computations disagree on some rows"));
    }
    Ok(())
}

fn cmd_verify(flags: &VerifyFlags, out: &mut dyn Write) -> Result<(), Failure> {
    let mut f = flags.clone();
    if let Some(path) = &flags.config {
        let file: VerifyFlags = read_config(path)?;
        overlay!(f, file; suite, q, n, seed, bound, output);
    }
    let suites: Vec<Suite> = match &f.suite {
        Some(names) => names.iter().map(|s| s.parse::<Suite>()).collect::<Result<_, _>>()?,
        None => Suite::ALL.to_vec(),
    };
    let mut opts = VerifyOptions { inject_fault: f.inject_fault, field_degree: f.n, ..VerifyOptions::default() };
    if let Some(q) = &f.q {
        opts.field_sizes = q.clone();
    }
    if let Some(seed) = f.seed {
        opts.seed = seed;
    }
    if let Some(b) = f.bound {
        opts.bound = b;
    }
    if let Some(n) = f.n {
        for &q in &opts.field_sizes {
            FieldModel::new(q, n).map_err(|e| e.to_string())?;
        }
    }
    let results: Vec<_> = suites.iter().flat_map(|&s| verify::run_suite(s, &opts)).collect();
    match f.output.unwrap_or(OutputFormat::Text) {
        OutputFormat::Json => json_line(out, &results)?,
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        r.suite.to_string(),
                        r.invariant.clone(),
                        r.cases.to_string(),
                        if r.passed() { "pass" } else { "fail" }.to_string(),
                        r.failure.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_rows(out, &["suite", "invariant", "cases", "status", "failure"], &rows)?;
        }
        OutputFormat::Text => {
            for r in &results {
                writeln!(out, "{r}")?;
            }
        }
    }
    if results.iter().any(|r| !r.passed()) {
        return Err(Failure::Disagree("invariant check failed"));
    }
    Ok(())
}

fn cmd_hilbert(flags: &HilbertFlags, out: &mut dyn Write) -> Result<(), Failure> {
    let mut f = flags.clone();
    if let Some(path) = &flags.config {
        let file: HilbertFlags = read_config(path)?;
        overlay!(f, file; q, n, u, v, output);
    }
    let q = f.q.ok_or("--q is required")?;
    let n = f.n.ok_or("--n is required")?;
    let fm = FieldModel::new(q, n).map_err(|e| e.to_string())?;
    let u = parse_elem(&fm, f.u.as_deref().ok_or("--u is required")?)?;
    let v = parse_elem(&fm, f.v.as_deref().ok_or("--v is required")?)?;
    let h = fm.hilbert(&u, &v);
    match f.output.unwrap_or(OutputFormat::Text) {
        OutputFormat::Json => json_line(out, &json!({ "q": q, "n": n, "u": u, "v": v, "exp": h.exp, "order": h.order() }))?,
        OutputFormat::Csv => csv_rows(
            out,
            &["q", "n", "u", "v", "exp", "order"],
            &[vec![
                q.to_string(),
                n.to_string(),
                format!("{}:{}", u.valuation, u.unit_exp),
                format!("{}:{}", v.valuation, v.unit_exp),
                h.exp.to_string(),
                h.order().to_string(),
            ]],
        )?,
        OutputFormat::Text => writeln!(out, "{h}")?,
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let res = match &cli.command {
        Command::Derive(f) => f.resolved().map_err(Failure::from).and_then(|f| cmd_derive(&f, out)),
        Command::Orbits(f) => f.resolved().map_err(Failure::from).and_then(|f| cmd_orbits(&f, out)),
        Command::Dims(f) => f.resolved().map_err(Failure::from).and_then(|f| cmd_dims(&f, out)),
        Command::Sweep(f) => f.resolved().map_err(Failure::from).and_then(|f| cmd_sweep(&f, out)),
        Command::Verify(f) => cmd_verify(f, out),
        Command::Hilbert(f) => cmd_hilbert(f, out),
    };
    let _ = out.flush();
    match res {
        Ok(()) => EXIT_OK,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Disagree(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DISAGREE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["mgg"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spec_parsing() {
        let s: Spec = "1..3,7".parse().unwrap();
        assert_eq!(s.values("n").unwrap(), vec![1, 2, 3, 7]);
        assert_eq!("2..1".parse::<Spec>().unwrap().values("n").unwrap(), Vec::<i64>::new());
        assert_eq!("-1".parse::<Spec>().unwrap(), Spec::Int(-1));
        assert!("x".parse::<Spec>().unwrap().single("n").is_err());
    }

    #[test]
    fn dims_text() {
        let (code, out, _) = run_str(&["dims", "--kind", "savin", "--n", "4", "--r", "2", "--k", "2", "--l0", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("dim_hecke: 3"), "{out}");
    }

    #[test]
    fn invalid_input_exits_one() {
        assert_eq!(run_str(&["dims", "--kind", "kp", "--n", "4", "--k", "2", "--r", "3"]).0, 1);
        assert_eq!(run_str(&["dims", "--kind", "nope", "--n", "4", "--k", "2"]).0, 1);
        assert_eq!(run_str(&["dims", "--bogus"]).0, 1);
        assert_eq!(run_str(&["hilbert", "--q", "6", "--n", "5", "--u", "1:0", "--v", "1:0"]).0, 1);
    }

    #[test]
    fn hilbert_example() {
        let (code, out, _) = run_str(&["hilbert", "--q", "5", "--n", "4", "--u", "1:0", "--v", "1:0"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "zeta^2 (order 2)");
    }
}
