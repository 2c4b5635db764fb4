//! Verification sweeps: every catalogued cell is measured and compared with
//! its closed-form bound.

use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use pcx_core::atoms::{all_subsets, atom_complexity};
use pcx_core::bounds::{atom_bound, bound, BoundQuery};
use pcx_core::{measure, theorem_operands, AtomComplexity, Family, Measure};
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::error::CliError;
use crate::report::{Expected, Measured, Row};

/// Largest `n` for unary measures in the default sweep.
pub const UNARY_N_MAX: usize = 7;
/// Largest `m` and `n` for binary measures in the default sweep.
pub const BINARY_MAX: usize = 6;
/// Atoms are enumerated for every `S` up to this `n` and sampled above it.
pub const ATOM_EXHAUSTIVE_MAX: usize = 6;
pub const DEFAULT_ATOM_SAMPLES: usize = 32;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub measures: Vec<Measure>,
    pub m: Option<RangeInclusive<usize>>,
    pub n: Option<RangeInclusive<usize>>,
    pub atom_samples: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: Family::ALL.to_vec(),
            measures: Measure::ALL.to_vec(),
            m: None,
            n: None,
            atom_samples: DEFAULT_ATOM_SAMPLES,
            seed: 0,
        }
    }
}

/// One unit of work. Atom cells produce one row per index `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Single { family: Family, measure: Measure, m: Option<usize>, n: usize, j: Option<usize>, k: Option<usize> },
    Atoms { family: Family, n: usize, k: Option<usize>, subsets: Vec<Vec<usize>> },
}

/// Parses a measure name, expanding `union`, `xor`, `diff`, `intersect` and
/// `product`/`concat` to both regimes and accepting `atoms` for the count.
pub fn parse_measures(text: &str) -> Result<Vec<Measure>, CliError> {
    use Measure::*;
    Ok(match text {
        "product" | "concat" => vec![ProductRestricted, ProductUnrestricted],
        "union" => vec![UnionR, UnionU],
        "xor" => vec![XorR, XorU],
        "diff" => vec![DiffR, DiffU],
        "intersect" => vec![IntersectR, IntersectU],
        "atoms" => vec![AtomsCount],
        other => vec![Measure::from_str(other).map_err(|e| CliError::Usage(e.to_string()))?],
    })
}

/// Parses `5` or `4..6` (inclusive).
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("`{text}` is not a size or range like 4..6"));
    match text.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(format!("empty range `{text}`"));
            }
            Ok(lo..=hi)
        }
        None => num(text).map(|v| v..=v),
    }
}

fn clip(range: &Option<RangeInclusive<usize>>, min: usize, default_max: usize) -> RangeInclusive<usize> {
    match range {
        Some(r) => (*r.start()).max(min)..=*r.end(),
        None => min..=default_max,
    }
}

fn ks(family: Family, n: usize) -> Vec<Option<usize>> {
    if family.has_k() {
        (1..=n.saturating_sub(2)).map(Some).collect()
    } else {
        vec![None]
    }
}

fn in_catalog(family: Family, measure: Measure) -> bool {
    let n = family.min_n();
    let k = family.has_k().then_some(1);
    theorem_operands(family, measure, n, n, k, k).is_ok()
}

fn atom_seed(seed: u64, family: Family, n: usize, k: Option<usize>) -> u64 {
    let f = Family::ALL.iter().position(|x| *x == family).unwrap_or(0) as u64;
    seed ^ (f << 40) ^ ((n as u64) << 20) ^ k.unwrap_or(0) as u64
}

fn sample_subsets(seed: u64, n: usize, count: usize) -> Vec<Vec<usize>> {
    let total = 1usize << n;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut masks = rand::seq::index::sample(&mut rng, total, count.min(total)).into_vec();
    masks.sort_unstable();
    masks.into_iter().map(|mask| (0..n).filter(|&q| mask >> q & 1 == 1).collect()).collect()
}

/// Every cell of the sweep, in a fixed order.
pub fn plan(config: &SweepConfig) -> Vec<Cell> {
    let mut cells = Vec::new();
    for &family in &config.families {
        let min = family.min_n();
        for &measure in &config.measures {
            if !in_catalog(family, measure) {
                continue;
            }
            if measure == Measure::Atom {
                for n in clip(&config.n, min, UNARY_N_MAX) {
                    for k in ks(family, n) {
                        let subsets = if n <= ATOM_EXHAUSTIVE_MAX {
                            all_subsets(n).collect()
                        } else {
                            sample_subsets(atom_seed(config.seed, family, n, k), n, config.atom_samples)
                        };
                        cells.push(Cell::Atoms { family, n, k, subsets });
                    }
                }
            } else if measure.is_binary() {
                for m in clip(&config.m, min, BINARY_MAX) {
                    for n in clip(&config.n, min, BINARY_MAX) {
                        for j in ks(family, m) {
                            for k in ks(family, n) {
                                cells.push(Cell::Single { family, measure, m: Some(m), n, j, k });
                            }
                        }
                    }
                }
            } else {
                for n in clip(&config.n, min, UNARY_N_MAX) {
                    for k in ks(family, n) {
                        cells.push(Cell::Single { family, measure, m: None, n, j: None, k });
                    }
                }
            }
        }
    }
    cells
}

fn measure_single(
    family: Family,
    ms: Measure,
    m: Option<usize>,
    n: usize,
    j: Option<usize>,
    k: Option<usize>,
) -> Measured {
    let op = ms.op().expect("non-atom measures map to an operation");
    let result =
        theorem_operands(family, ms, m.unwrap_or(n), n, j, k).and_then(|(lhs, rhs)| measure(&lhs, rhs.as_ref(), op));
    match result {
        Ok(v) => Measured::Value(v as u128),
        Err(e) => Measured::Error(e.to_string()),
    }
}

pub fn run_cell(cell: &Cell) -> Vec<Row> {
    match cell {
        &Cell::Single { family, measure: ms, m, n, j, k } => {
            let start = Instant::now();
            let measured = measure_single(family, ms, m, n, j, k);
            let query = match m {
                Some(m) => BoundQuery::binary(family, ms, m, n, j, k),
                None => BoundQuery::unary(family, ms, n, k),
            };
            vec![Row {
                family,
                measure: ms,
                subset: None,
                m,
                n,
                j,
                k,
                measured,
                expected: Expected::Bound(bound(&query)),
                elapsed_ms: start.elapsed().as_millis(),
            }]
        }
        Cell::Atoms { family, n, k, subsets } => {
            let (family, n, k) = (*family, *n, *k);
            let operand = theorem_operands(family, Measure::Atom, n, n, None, k);
            subsets
                .iter()
                .map(|s| {
                    let start = Instant::now();
                    let measured = match &operand {
                        Ok((d, _)) => match atom_complexity(d, s) {
                            AtomComplexity::Atom(c) => Measured::Value(c as u128),
                            AtomComplexity::NotAnAtom => Measured::Empty,
                        },
                        Err(e) => Measured::Error(e.to_string()),
                    };
                    let expected = match atom_bound(family, n, k, s) {
                        Ok(b) => Expected::Bound(b),
                        Err(_) => Expected::Empty,
                    };
                    Row {
                        family,
                        measure: Measure::Atom,
                        subset: Some(s.clone()),
                        m: None,
                        n,
                        j: None,
                        k,
                        measured,
                        expected,
                        elapsed_ms: start.elapsed().as_millis(),
                    }
                })
                .collect()
        }
    }
}

/// Runs the sweep on `jobs` worker threads (all logical CPUs when `None`).
/// Rows come back in plan order regardless of scheduling.
pub fn run(config: &SweepConfig, jobs: Option<usize>) -> Result<Vec<Row>, CliError> {
    let cells = plan(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let rows: Vec<Vec<Row>> = pool.install(|| cells.par_iter().map(run_cell).collect());
    Ok(rows.into_iter().flatten().collect())
}
