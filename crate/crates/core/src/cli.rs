//! The `selfdual` command line.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::cosets::{
    count_selfdual, cyclotomic_cosets, euclidean_exists, find_splitting, hermitian_exists,
    CyclotomicCoset,
};
use crate::cyclic_codes::{
    best_min_distance, enumerate_self_dual, minimum_distance, BestDistance, CyclicCode, Distance,
};
use crate::error::Error;
use crate::finite_field::{build_field, Field, Gf2Poly};
use crate::modular::split_even_length;
use crate::oracle::{brute_force_self_dual_capped, enumerated_generators, DEFAULT_CAP};
use crate::polynomial::{factor_cyclotomic, Kind, Poly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Codeword count up to which minimum distances are computed by default.
pub const DEFAULT_MINDIST_BUDGET: u64 = 1 << 28;

#[derive(Debug, Parser)]
#[command(
    name = "selfdual",
    version,
    about = "Construct, count and enumerate self-dual cyclic codes over GF(2^r)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, Default, Args)]
pub struct FieldArgs {
    /// Field order, `4` or `2^2`.
    #[arg(long, value_parser = parse_power)]
    pub q: Option<u64>,
    /// Hermitian shorthand for the field of order `2^(2 ell)`.
    #[arg(long, conflicts_with = "q")]
    pub ell: Option<u32>,
    /// Defining polynomial over GF(2) in hex, e.g. `0x13`.
    #[arg(long)]
    pub defpoly: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// q-cyclotomic cosets modulo nbar.
    Cosets {
        #[arg(long)]
        nbar: u64,
        #[arg(long, value_parser = parse_power, default_value = "2")]
        q: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Irreducible factors of x^nbar - 1, grouped by the pairing map.
    Factor {
        #[arg(long)]
        nbar: u64,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "euclidean")]
        kind: Kind,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Existence, count and best minimum distance for one length.
    Classify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "euclidean")]
        kind: Kind,
        /// Largest codeword count scanned per code; exceeding an explicit budget exits with 2.
        #[arg(long)]
        mindist_budget: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// One row per even length: n, nbar, nu, t, count, hmind.
    Table {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "hermitian")]
        kind: Kind,
        #[arg(long, default_value_t = 286)]
        n_max: usize,
        /// Compute best minimum distances for lengths up to this bound.
        #[arg(long, default_value_t = 0)]
        with_distances_up_to: usize,
        #[arg(long, default_value_t = DEFAULT_MINDIST_BUDGET)]
        mindist_budget: u64,
        /// Also list lengths with only the trivial code.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Stream every self-dual cyclic code of length n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "euclidean")]
        kind: Kind,
        #[arg(long)]
        limit: Option<u64>,
        /// Attach minimum distances for codes within this codeword count.
        #[arg(long)]
        mindist_budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare the enumeration with the brute-force oracle for every even n <= n-max.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "euclidean")]
        kind: Kind,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        verify_cap: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Parses `16` or `2^4`.
pub fn parse_power(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let value = match s.split_once('^') {
        Some((base, exp)) => {
            let base: u64 = base
                .trim()
                .parse()
                .map_err(|_| format!("bad base in `{s}`"))?;
            let exp: u32 = exp
                .trim()
                .parse()
                .map_err(|_| format!("bad exponent in `{s}`"))?;
            base.checked_pow(exp)
                .ok_or_else(|| format!("`{s}` overflows"))?
        }
        None => s.parse().map_err(|_| format!("`{s}` is not an integer"))?,
    };
    if value < 2 {
        return Err(format!("`{s}` must be at least 2"));
    }
    Ok(value)
}

impl FieldArgs {
    /// GF(2) for Euclidean and GF(4) for Hermitian unless told otherwise.
    pub fn resolve(&self, kind: Kind) -> Result<Field, Error> {
        let from_q = match (self.q, self.ell) {
            (Some(q), _) => {
                if !q.is_power_of_two() {
                    return Err(Error::Parse(format!("field order {q} is not a power of 2")));
                }
                Some(q.trailing_zeros())
            }
            (None, Some(ell)) => Some(2 * ell),
            (None, None) => None,
        };
        match &self.defpoly {
            Some(hex) => {
                let p = Gf2Poly::from_hex(hex)?;
                let degree = p.degree().unwrap_or(0);
                if let Some(r) = from_q {
                    if r != degree {
                        return Err(Error::Parse(format!(
                            "defining polynomial {hex} has degree {degree}, expected {r}"
                        )));
                    }
                }
                build_field(degree, Some(&p))
            }
            None => {
                let default = match kind {
                    Kind::Euclidean => 1,
                    Kind::Hermitian => 2,
                };
                build_field(from_q.unwrap_or(default), None)
            }
        }
    }
}

/// Entry point used by the binary. Returns the process exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CapExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let text = match &cli.command {
        Command::Cosets { nbar, q, format } => cmd_cosets(*nbar, *q, *format)?,
        Command::Factor {
            nbar,
            field,
            kind,
            format,
        } => cmd_factor(*nbar, &field.resolve(*kind)?, *kind, *format)?,
        Command::Classify {
            n,
            field,
            kind,
            mindist_budget,
            format,
        } => {
            let report = cmd_classify(
                *n,
                &field.resolve(*kind)?,
                *kind,
                mindist_budget.unwrap_or(DEFAULT_MINDIST_BUDGET),
            )?;
            let body = render_report(&report, *format);
            write_out(out, &body)?;
            let budget_missed = mindist_budget.is_some() && report.best_min_distance.is_none();
            return Ok(if budget_missed { EXIT_BUDGET } else { EXIT_OK });
        }
        Command::Table {
            field,
            kind,
            n_max,
            with_distances_up_to,
            mindist_budget,
            all,
            format,
        } => {
            let rows = cmd_table(
                &field.resolve(*kind)?,
                *kind,
                *n_max,
                *with_distances_up_to,
                *mindist_budget,
                *all,
            )?;
            render_table(&rows, *format)?
        }
        Command::Enumerate {
            n,
            field,
            kind,
            limit,
            mindist_budget,
            format,
        } => {
            let field = field.resolve(*kind)?;
            return cmd_enumerate(*n, &field, *kind, *limit, *mindist_budget, *format, out);
        }
        Command::Verify {
            n_max,
            field,
            kind,
            verify_cap,
            format,
        } => {
            let report = cmd_verify(*n_max, &field.resolve(*kind)?, *kind, *verify_cap)?;
            write_out(out, &render_verify(&report, *format))?;
            return Ok(if report.pass { EXIT_OK } else { EXIT_MISMATCH });
        }
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<(), Error> {
    out.write_all(s.as_bytes())
        .map_err(|e| Error::Parse(format!("write failed: {e}")))
}

fn raw_number(v: &BigUint) -> Box<RawValue> {
    RawValue::from_string(v.to_string()).expect("decimal digits are valid JSON")
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("records serialize")
}

/// Coset partition as JSON or one line per coset.
pub fn cmd_cosets(nbar: u64, q: u64, format: Format) -> Result<String, Error> {
    let partition = cyclotomic_cosets(nbar, q)?;
    Ok(match format {
        Format::Json => partition.to_json() + "\n",
        Format::Csv => {
            let mut s = String::from("rep,size,members\n");
            for c in partition.cosets() {
                writeln!(s, "{},{},{}", c.rep(), c.len(), join(c.members(), " ")).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{}-cyclotomic cosets modulo {}: {}\n",
                q,
                nbar,
                partition.len()
            );
            for c in partition.cosets() {
                writeln!(s, "C_{} = {{{}}}", c.rep(), join(c.members(), ", ")).unwrap();
            }
            s
        }
    })
}

fn join(xs: &[u64], sep: &str) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

#[derive(Serialize)]
struct FactorRecord {
    coset: Vec<u64>,
    poly: Vec<u64>,
}

#[derive(Serialize)]
struct PairRecord {
    coset: Vec<u64>,
    factor: Vec<u64>,
    partner_coset: Vec<u64>,
    partner: Vec<u64>,
}

#[derive(Serialize)]
struct PatternRecord {
    nbar: u64,
    field: String,
    kind: Kind,
    s: usize,
    t: usize,
    self_paired: Vec<FactorRecord>,
    swapped_pairs: Vec<PairRecord>,
}

fn coset_label(c: &CyclotomicCoset) -> String {
    format!("C_{} {{{}}}", c.rep(), join(c.members(), ","))
}

/// Factorization of `x^nbar - 1` split into self-paired factors and swapped pairs.
pub fn cmd_factor(nbar: u64, field: &Field, kind: Kind, format: Format) -> Result<String, Error> {
    let pattern = factor_cyclotomic(nbar, field, kind)?;
    Ok(match format {
        Format::Json => {
            let record = PatternRecord {
                nbar,
                field: field.to_string(),
                kind,
                s: pattern.s(),
                t: pattern.t(),
                self_paired: pattern
                    .self_paired
                    .iter()
                    .map(|f| FactorRecord {
                        coset: f.coset.members().to_vec(),
                        poly: f.poly.to_u64s(),
                    })
                    .collect(),
                swapped_pairs: pattern
                    .swapped_pairs
                    .iter()
                    .map(|p| PairRecord {
                        coset: p.coset.members().to_vec(),
                        factor: p.factor.to_u64s(),
                        partner_coset: p.partner_coset.members().to_vec(),
                        partner: p.partner.to_u64s(),
                    })
                    .collect(),
            };
            to_json(&record) + "\n"
        }
        Format::Csv => {
            let mut s = String::from("role,coset,poly\n");
            for f in &pattern.self_paired {
                writeln!(s, "fixed,{},\"{}\"", f.coset.rep(), f.poly.to_list_string()).unwrap();
            }
            for (j, p) in pattern.swapped_pairs.iter().enumerate() {
                writeln!(
                    s,
                    "pair{j},{},\"{}\"",
                    p.coset.rep(),
                    p.factor.to_list_string()
                )
                .unwrap();
                writeln!(
                    s,
                    "pair{j},{},\"{}\"",
                    p.partner_coset.rep(),
                    p.partner.to_list_string()
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "x^{nbar} - 1 over {field}, {kind} pairing: s = {}, t = {}\n",
                pattern.s(),
                pattern.t()
            );
            for f in &pattern.self_paired {
                writeln!(s, "  fixed {}: {}", coset_label(&f.coset), f.poly).unwrap();
            }
            for p in &pattern.swapped_pairs {
                writeln!(
                    s,
                    "  pair  {}: {}  <->  {}: {}",
                    coset_label(&p.coset),
                    p.factor,
                    coset_label(&p.partner_coset),
                    p.partner
                )
                .unwrap();
            }
            s
        }
    })
}

/// Everything the CLI reports about one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: usize,
    pub nbar: u64,
    pub nu: u32,
    pub field: Field,
    pub kind: Kind,
    pub t: usize,
    pub exists: bool,
    pub count: BigUint,
    pub best_min_distance: Option<usize>,
    pub mindist_budget: u64,
    pub witness: Option<Poly>,
}

#[derive(Serialize)]
struct ReportRecord {
    n: usize,
    nbar: u64,
    nu: u32,
    field: String,
    kind: Kind,
    t: usize,
    exists: bool,
    count: Box<RawValue>,
    best_min_distance: Option<usize>,
    mindist_budget: u64,
    witness: Option<Vec<u64>>,
}

/// Number of pairs swapped by the pairing multiplier, read off the cosets.
pub fn swapped_pair_count(nbar: u64, field: &Field, kind: Kind) -> Result<usize, Error> {
    let q = field.order().ok_or(Error::UnsupportedDegree {
        degree: field.degree(),
        max: 63,
    })?;
    let b = kind.multiplier(field)?;
    Ok(find_splitting(nbar, q, b)?.t())
}

fn exists_for(nbar: u64, field: &Field, kind: Kind) -> bool {
    match kind {
        Kind::Euclidean => euclidean_exists(nbar, field.degree()),
        Kind::Hermitian => hermitian_exists(nbar, field.degree() / 2),
    }
}

pub fn cmd_classify(
    n: usize,
    field: &Field,
    kind: Kind,
    budget: u64,
) -> Result<ClassificationReport, Error> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    let (nbar, nu) = split_even_length(n as u64);
    let t = swapped_pair_count(nbar, field, kind)?;
    let best = best_min_distance(n, field, kind, budget)?;
    let (best_min_distance, witness) = match best {
        BestDistance::Exact { distance, witness } => {
            (Some(distance), Some(witness.generator().clone()))
        }
        BestDistance::Unknown { .. } => (None, None),
    };
    Ok(ClassificationReport {
        n,
        nbar,
        nu,
        field: field.clone(),
        kind,
        t,
        exists: exists_for(nbar, field, kind),
        count: count_selfdual(nu, t),
        best_min_distance,
        mindist_budget: budget,
        witness,
    })
}

fn render_report(r: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let record = ReportRecord {
                n: r.n,
                nbar: r.nbar,
                nu: r.nu,
                field: r.field.to_string(),
                kind: r.kind,
                t: r.t,
                exists: r.exists,
                count: raw_number(&r.count),
                best_min_distance: r.best_min_distance,
                mindist_budget: r.mindist_budget,
                witness: r.witness.as_ref().map(Poly::to_u64s),
            };
            to_json(&record) + "\n"
        }
        Format::Csv => {
            let mut s = String::from("n,nbar,nu,t,exists,count,hmind,witness\n");
            writeln!(
                s,
                "{},{},{},{},{},{},{},{}",
                r.n,
                r.nbar,
                r.nu,
                r.t,
                r.exists,
                r.count,
                r.best_min_distance
                    .map(|d| d.to_string())
                    .unwrap_or_default(),
                r.witness
                    .as_ref()
                    .map(|w| format!("\"{}\"", w.to_list_string()))
                    .unwrap_or_default()
            )
            .unwrap();
            s
        }
        Format::Text => {
            let mut s = format!(
                "n = {} = 2^{} * {} over {}, {}\n",
                r.n, r.nu, r.nbar, r.field, r.kind
            );
            writeln!(s, "swapped pairs t = {}", r.t).unwrap();
            writeln!(
                s,
                "nontrivial codes exist: {}",
                if r.exists { "yes" } else { "no" }
            )
            .unwrap();
            writeln!(s, "self-dual cyclic codes: {}", r.count).unwrap();
            match (&r.best_min_distance, &r.witness) {
                (Some(d), Some(w)) => {
                    writeln!(s, "highest minimum distance: {d}").unwrap();
                    writeln!(s, "attained by g(x) = {w}").unwrap();
                }
                _ => writeln!(
                    s,
                    "highest minimum distance: unknown (budget {})",
                    r.mindist_budget
                )
                .unwrap(),
            }
            s
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub nbar: u64,
    pub nu: u32,
    pub t: usize,
    pub count: BigUint,
    pub hmind: Option<usize>,
}

#[derive(Serialize)]
struct TableJson {
    n: usize,
    nbar: u64,
    nu: u32,
    t: usize,
    count: Box<RawValue>,
    hmind: Option<usize>,
}

#[derive(Serialize)]
struct TableCsv {
    n: usize,
    nbar: u64,
    nu: u32,
    t: usize,
    count: String,
    hmind: Option<usize>,
}

/// Rows for every even `n <= n_max` with `t >= 1` (all even `n` with `all`).
pub fn cmd_table(
    field: &Field,
    kind: Kind,
    n_max: usize,
    distances_up_to: usize,
    budget: u64,
    all: bool,
) -> Result<Vec<TableRow>, Error> {
    if kind == Kind::Hermitian {
        kind.multiplier(field)?;
    }
    let lengths: Vec<usize> = (2..=n_max).step_by(2).collect();
    let rows = lengths
        .par_iter()
        .map(|&n| -> Result<Option<TableRow>, Error> {
            let (nbar, nu) = split_even_length(n as u64);
            let t = swapped_pair_count(nbar, field, kind)?;
            if t == 0 && !all {
                return Ok(None);
            }
            let hmind = if n <= distances_up_to {
                best_min_distance(n, field, kind, budget)?.distance()
            } else {
                None
            };
            Ok(Some(TableRow {
                n,
                nbar,
                nu,
                t,
                count: count_selfdual(nu, t),
                hmind,
            }))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(rows.into_iter().flatten().collect())
}

fn render_table(rows: &[TableRow], format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(TableCsv {
                    n: r.n,
                    nbar: r.nbar,
                    nu: r.nu,
                    t: r.t,
                    count: r.count.to_string(),
                    hmind: r.hmind,
                })
                .map_err(|e| Error::Parse(e.to_string()))?;
            }
            if rows.is_empty() {
                w.write_record(["n", "nbar", "nu", "t", "count", "hmind"])
                    .map_err(|e| Error::Parse(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
        Format::Json => {
            let records: Vec<TableJson> = rows
                .iter()
                .map(|r| TableJson {
                    n: r.n,
                    nbar: r.nbar,
                    nu: r.nu,
                    t: r.t,
                    count: raw_number(&r.count),
                    hmind: r.hmind,
                })
                .collect();
            to_json(&records) + "\n"
        }
        Format::Text => {
            let mut s = format!(
                "{:>5} {:>5} {:>3} {:>3} {:>20} {:>6}\n",
                "n", "nbar", "nu", "t", "count", "hmind"
            );
            for r in rows {
                let d = r.hmind.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
                writeln!(
                    s,
                    "{:>5} {:>5} {:>3} {:>3} {:>20} {:>6}",
                    r.n, r.nbar, r.nu, r.t, r.count, d
                )
                .unwrap();
            }
            s
        }
    })
}

/// JSON record for one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct CodeRecord {
    pub n: usize,
    pub field: String,
    pub kind: Kind,
    pub generator: Vec<u64>,
    pub k: usize,
    pub min_distance: Option<usize>,
}

impl CodeRecord {
    pub fn new(code: &CyclicCode, kind: Kind, min_distance: Option<usize>) -> CodeRecord {
        CodeRecord {
            n: code.n(),
            field: code.field().to_string(),
            kind,
            generator: code.generator().to_u64s(),
            k: code.k(),
            min_distance,
        }
    }
}

fn cmd_enumerate(
    n: usize,
    field: &Field,
    kind: Kind,
    limit: Option<u64>,
    budget: Option<u64>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let codes = enumerate_self_dual(n, field, kind, limit)?;
    let mut exit = EXIT_OK;
    if format == Format::Csv {
        write_out(out, "n,k,generator,min_distance\n")?;
    }
    for code in codes {
        let distance = match budget {
            Some(b) => match minimum_distance(&code, b) {
                Distance::Exact(d) => Some(d),
                Distance::Unknown { .. } => {
                    exit = EXIT_BUDGET;
                    None
                }
            },
            None => None,
        };
        let line = match format {
            Format::Json => to_json(&CodeRecord::new(&code, kind, distance)) + "\n",
            Format::Csv => format!(
                "{},{},\"{}\",{}\n",
                code.n(),
                code.k(),
                code.generator().to_list_string(),
                distance.map(|d| d.to_string()).unwrap_or_default()
            ),
            Format::Text => match distance {
                Some(d) => format!("{}  d = {d}\n", code.generator()),
                None => format!("{}\n", code.generator()),
            },
        };
        write_out(out, &line)?;
    }
    Ok(exit)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub n: usize,
    pub oracle: usize,
    pub enumerated: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub field: String,
    pub kind: Kind,
    pub n_max: usize,
    pub rows: Vec<VerifyRow>,
    pub pass: bool,
}

/// Oracle against enumeration, as generator sets, for every even `n <= n_max`.
pub fn cmd_verify(
    n_max: usize,
    field: &Field,
    kind: Kind,
    cap: u64,
) -> Result<VerifyReport, Error> {
    let mut rows = Vec::new();
    for n in (2..=n_max).step_by(2) {
        let oracle: BTreeSet<Poly> = brute_force_self_dual_capped(n, field, kind, cap)?;
        let enumerated = enumerated_generators(n, field, kind)?;
        rows.push(VerifyRow {
            n,
            oracle: oracle.len(),
            enumerated: enumerated.len(),
            pass: oracle == enumerated,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(VerifyReport {
        field: field.to_string(),
        kind,
        n_max,
        rows,
        pass,
    })
}

fn render_verify(r: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r) + "\n",
        Format::Csv => {
            let mut s = String::from("n,oracle,enumerated,pass\n");
            for row in &r.rows {
                writeln!(
                    s,
                    "{},{},{},{}",
                    row.n, row.oracle, row.enumerated, row.pass
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{} self-dual codes over {}, n <= {}\n",
                r.kind, r.field, r.n_max
            );
            for row in &r.rows {
                let verdict = if row.pass { "ok" } else { "MISMATCH" };
                writeln!(
                    s,
                    "n = {:>3}: oracle {:>6}, enumeration {:>6}  {verdict}",
                    row.n, row.oracle, row.enumerated
                )
                .unwrap();
            }
            writeln!(s, "{}", if r.pass { "pass" } else { "FAIL" }).unwrap();
            s
        }
    }
}
