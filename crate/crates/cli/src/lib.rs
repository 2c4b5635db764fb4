//! The `pcx` command-line driver: witness emission, single measurements,
//! verification sweeps, atom reports, semigroup sizes and classification.

pub mod dfa_json;
pub mod error;
pub mod report;
pub mod sweep;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use pcx_core::atoms::{atoms_report, reverse_complexity_full};
use pcx_core::bounds::{atom_bound, bound, BoundQuery};
use pcx_core::transform::{transition_semigroup_size, DEFAULT_SEMIGROUP_CAP};
use pcx_core::{
    apply_dialect, classify_report, measure, theorem_operands, witness, AtomComplexity, Bound, Dfa, Dialect, Family,
    Measure, Op, SemigroupSize, WitnessParams,
};
use serde_json::Value;

pub use dfa_json::{parse_dfa, serialize_dfa};
pub use error::CliError;
use report::{Format, Table};
use sweep::{parse_measures, parse_range, SweepConfig};

#[derive(Debug, Parser)]
#[command(name = "pcx", version, about = "Quotient complexity of prefix-convex languages")]
pub struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Worker threads for sweeps (default: logical CPUs).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for sampled atom indices.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a witness DFA as JSON.
    Witness {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Letter map such as `a=b,b=a,c=-` (`-` deletes).
        #[arg(long)]
        dialect: Option<String>,
    },
    /// Measure one operation on catalogued witnesses or DFA files.
    Measure(MeasureArgs),
    /// Compare measured values with the closed-form bounds.
    Verify(VerifyArgs),
    /// Complexity of every atom.
    Atoms {
        #[command(flatten)]
        source: Source,
    },
    /// Size of the transition semigroup.
    Semigroup {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = DEFAULT_SEMIGROUP_CAP)]
        cap: usize,
    },
    /// Decide prefix-convexity and the subclass.
    Classify {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Regime {
    Restricted,
    Unrestricted,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[arg(long, conflicts_with = "file")]
    pub family: Option<Family>,
    /// Operand DFA file; give twice for binary operations.
    #[arg(long)]
    pub file: Vec<PathBuf>,
    /// reverse, star, concat (product), union, xor, diff, intersect,
    /// semigroup or atoms-count.
    #[arg(long)]
    pub op: Op,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Regime::Restricted)]
    pub regime: Regime,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Families to sweep (repeatable; default all).
    #[arg(long)]
    pub family: Vec<Family>,
    /// Measures to sweep (repeatable; default all). `union` etc. cover both
    /// regimes.
    #[arg(long)]
    pub measure: Vec<String>,
    /// Left operand size or range such as `4..6`.
    #[arg(long, value_parser = parse_range)]
    pub m: Option<std::ops::RangeInclusive<usize>>,
    /// Operand size or range such as `4..6`.
    #[arg(long, value_parser = parse_range)]
    pub n: Option<std::ops::RangeInclusive<usize>>,
    /// Atom indices sampled per cell above the exhaustive size.
    #[arg(long, default_value_t = sweep::DEFAULT_ATOM_SAMPLES)]
    pub atom_samples: usize,
}

/// A DFA from a file, or a family witness with an optional dialect.
#[derive(Debug, Args)]
pub struct Source {
    #[arg(long, conflicts_with = "file", requires = "n")]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub dialect: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// What a command produced: text to emit and whether all checks passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn read_dfa(path: &PathBuf) -> Result<Dfa, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_dfa(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn with_dialect(d: Dfa, dialect: &Option<String>) -> Result<Dfa, CliError> {
    match dialect {
        Some(text) => Ok(apply_dialect(&d, &Dialect::parse(text)?)?),
        None => Ok(d),
    }
}

/// The DFA named by `source`. Without a dialect a family resolves to the
/// catalogued operand for `measure` when there is one.
fn resolve(source: &Source, measure: Option<Measure>) -> Result<(Dfa, Option<Family>), CliError> {
    if let Some(path) = &source.file {
        return Ok((with_dialect(read_dfa(path)?, &source.dialect)?, None));
    }
    let family = source.family.ok_or_else(|| CliError::Usage("give --family or --file".into()))?;
    let n = source.n.ok_or_else(|| CliError::Usage("--family needs --n".into()))?;
    if source.dialect.is_none() {
        if let Some(ms) = measure {
            if let Ok((d, _)) = theorem_operands(family, ms, n, n, source.k, source.k) {
                return Ok((d, Some(family)));
            }
        }
    }
    let d = witness(&WitnessParams::new(family, n, source.k))?;
    Ok((with_dialect(d, &source.dialect)?, Some(family)))
}

fn catalog_measure(op: Op, regime: Regime) -> Measure {
    use Measure::*;
    let r = regime == Regime::Restricted;
    match op {
        Op::Reverse => Reverse,
        Op::Star => Star,
        Op::Semigroup => Semigroup,
        Op::AtomsCount => AtomsCount,
        Op::Concat => {
            if r {
                ProductRestricted
            } else {
                ProductUnrestricted
            }
        }
        Op::Union => {
            if r {
                UnionR
            } else {
                UnionU
            }
        }
        Op::Xor => {
            if r {
                XorR
            } else {
                XorU
            }
        }
        Op::Diff => {
            if r {
                DiffR
            } else {
                DiffU
            }
        }
        Op::Intersect => {
            if r {
                IntersectR
            } else {
                IntersectU
            }
        }
    }
}

fn bound_text(b: Bound) -> String {
    match b {
        Bound::Exact(v) => v.to_string(),
        Bound::Undefined => "undefined".into(),
    }
}

fn cmd_witness(family: Family, n: usize, k: Option<usize>, dialect: &Option<String>) -> Result<Output, CliError> {
    let d = with_dialect(witness(&WitnessParams::new(family, n, k))?, dialect)?;
    Ok(Output::ok(serialize_dfa(&d) + "\n"))
}

fn cmd_measure(a: &MeasureArgs, format: Option<Format>) -> Result<Output, CliError> {
    let (value, checked) = if let Some(family) = a.family {
        let n = a.n.ok_or_else(|| CliError::Usage("--family needs --n".into()))?;
        let ms = catalog_measure(a.op, a.regime);
        let m = a.m.unwrap_or(n);
        let j = a.j.or(a.k);
        let (lhs, rhs) = theorem_operands(family, ms, m, n, j, a.k)?;
        let value = measure(&lhs, rhs.as_ref(), a.op)?;
        let query = if ms.is_binary() {
            BoundQuery::binary(family, ms, m, n, j, a.k)
        } else {
            BoundQuery::unary(family, ms, n, a.k)
        };
        let b = bound(&query);
        (value, Some((b, b == Bound::Exact(value as u128))))
    } else {
        let dfas = a.file.iter().map(read_dfa).collect::<Result<Vec<_>, _>>()?;
        let expected = if a.op.is_binary() { 2 } else { 1 };
        if dfas.len() != expected {
            return Err(CliError::Usage(format!("`{}` takes {expected} --file operand(s), got {}", a.op, dfas.len())));
        }
        (measure(&dfas[0], dfas.get(1), a.op)?, None)
    };
    let ok = checked.is_none_or(|(_, pass)| pass);
    let text = match format {
        None => {
            let mut s = format!("{value}\n");
            if let Some((b, pass)) = checked {
                let _ = writeln!(s, "bound: {} ({})", bound_text(b), if pass { "pass" } else { "FAIL" });
            }
            s
        }
        Some(f) => {
            let mut t =
                Table::new(if checked.is_some() { vec!["measured", "bound", "pass"] } else { vec!["measured"] });
            let mut row = vec![value.to_string()];
            if let Some((b, pass)) = checked {
                row.push(bound_text(b));
                row.push(pass.to_string());
            }
            t.push(row);
            t.render(f)
        }
    };
    Ok(Output { text, ok })
}

fn cmd_verify(a: &VerifyArgs, format: Option<Format>, jobs: Option<usize>, seed: u64) -> Result<Output, CliError> {
    let mut config =
        SweepConfig { m: a.m.clone(), n: a.n.clone(), atom_samples: a.atom_samples, seed, ..SweepConfig::default() };
    if !a.family.is_empty() {
        config.families = a.family.clone();
    }
    if !a.measure.is_empty() {
        let mut measures = Vec::new();
        for text in &a.measure {
            measures.extend(parse_measures(text)?);
        }
        config.measures = measures;
    }
    let rows = sweep::run(&config, jobs)?;
    let ok = rows.iter().all(|r| r.status() != report::Status::Fail);
    let text = match format.unwrap_or(Format::Md) {
        Format::Md => report::summary_markdown(&rows),
        f => report::rows_table(&rows).render(f),
    };
    Ok(Output { text, ok })
}

fn subset_text(s: &[usize]) -> String {
    format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn cmd_atoms(source: &Source, format: Option<Format>) -> Result<Output, CliError> {
    let (d, family) = resolve(source, Some(Measure::Atom))?;
    let report = atoms_report(&d)?;
    let reverse = reverse_complexity_full(&d);
    let mut ok = true;
    let mut t = Table::new(if family.is_some() {
        vec!["subset", "complexity", "bound", "pass"]
    } else {
        vec!["subset", "complexity"]
    });
    for e in &report.entries {
        let value = match e.complexity {
            AtomComplexity::Atom(c) => c.to_string(),
            AtomComplexity::NotAnAtom => "empty".into(),
        };
        let mut row = vec![subset_text(&e.subset), value];
        if let Some(f) = family {
            let (b, pass) = match atom_bound(f, d.state_count(), source.k, &e.subset) {
                Ok(b) => (
                    bound_text(b),
                    Bound::Exact(e.complexity.value().unwrap_or(0) as u128) == b && e.complexity.value().is_some(),
                ),
                Err(_) => ("empty".into(), e.complexity == AtomComplexity::NotAnAtom),
            };
            ok &= pass;
            row.push(b);
            row.push(pass.to_string());
        }
        t.push(row);
    }
    let text = match format.unwrap_or(Format::Md) {
        Format::Json => {
            let mut doc: IndexMap<&str, Value> = IndexMap::new();
            doc.insert("atom_count", report.atom_count.into());
            doc.insert("reverse_complexity", reverse.into());
            doc.insert("atoms", serde_json::from_str(&t.json()).expect("table json parses"));
            serde_json::to_string_pretty(&doc).expect("plain values serialize") + "\n"
        }
        Format::Csv => t.csv(),
        Format::Md => format!("{}\natoms: {}, reverse complexity: {}\n", t.markdown(), report.atom_count, reverse),
    };
    Ok(Output { text, ok })
}

fn cmd_semigroup(source: &Source, cap: usize, format: Option<Format>) -> Result<Output, CliError> {
    let (d, family) = resolve(source, Some(Measure::Semigroup))?;
    let size = match transition_semigroup_size(&d, cap)? {
        SemigroupSize::Size(s) => s,
        SemigroupSize::Overflow => return Err(pcx_core::Error::SemigroupOverflow(cap).into()),
    };
    let checked = family.map(|f| {
        let b = bound(&BoundQuery::unary(f, Measure::Semigroup, d.state_count(), source.k));
        (b, b == Bound::Exact(size as u128))
    });
    // Only catalogued operands are checked against the bound.
    let checked = checked.filter(|_| source.dialect.is_none());
    let ok = checked.is_none_or(|(_, p)| p);
    let text = match format {
        None => {
            let mut s = format!("{size}\n");
            if let Some((b, pass)) = checked {
                let _ = writeln!(s, "bound: {} ({})", bound_text(b), if pass { "pass" } else { "FAIL" });
            }
            s
        }
        Some(f) => {
            let mut t = Table::new(["size", "bound", "pass"]);
            match checked {
                Some((b, pass)) => t.push([size.to_string(), bound_text(b), pass.to_string()]),
                None => t.push([size.to_string(), String::new(), String::new()]),
            }
            t.render(f)
        }
    };
    Ok(Output { text, ok })
}

fn cmd_classify(source: &Source, format: Option<Format>) -> Result<Output, CliError> {
    let (d, _) = resolve(source, None)?;
    let r = classify_report(&d);
    let mut t =
        Table::new(["class", "k", "prefix_convex", "right_ideal", "prefix_closed", "prefix_free", "final_quotients"]);
    t.push([
        r.class.name().to_string(),
        r.k().map(|k| k.to_string()).unwrap_or_default(),
        r.prefix_convex.to_string(),
        r.right_ideal.to_string(),
        r.prefix_closed.to_string(),
        r.prefix_free.to_string(),
        r.final_count.to_string(),
    ]);
    let text = match format {
        None => {
            let mut s = String::new();
            for (h, v) in t.headers.iter().zip(&t.rows[0]) {
                if !v.is_empty() {
                    let _ = writeln!(s, "{h}: {v}");
                }
            }
            s
        }
        Some(f) => t.render(f),
    };
    Ok(Output::ok(text))
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Witness { family, n, k, dialect } => cmd_witness(*family, *n, *k, dialect),
        Command::Measure(a) => cmd_measure(a, cli.format),
        Command::Verify(a) => cmd_verify(a, cli.format, cli.jobs, cli.seed),
        Command::Atoms { source } => cmd_atoms(source, cli.format),
        Command::Semigroup { source, cap } => cmd_semigroup(source, *cap, cli.format),
        Command::Classify { source } => cmd_classify(source, cli.format),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs the CLI and returns the process exit code: 0 on success, 1 when a
/// check fails, 2 on usage or parse errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = execute(&cli).and_then(|out| emit(&cli, &out.text).map(|()| out.ok));
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
