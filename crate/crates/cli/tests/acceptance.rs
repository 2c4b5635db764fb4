//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` are expected to fail; the target fails if
//! the set of failing criteria differs from it in either direction.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use pcx_cli::report::{Row, Status};
use pcx_cli::sweep::{self, SweepConfig};
use pcx_core::atoms::{atom_count, reverse_complexity_full};
use pcx_core::convexity::check_ideal_or_empty;
use pcx_core::transform::check_proper_permutation_lemma;
use pcx_core::witness::Family;
use pcx_core::{classify, classify_report, is_prefix_convex, witness, Dfa, LanguageClass, Measure, WitnessParams};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Criterion 3: the prefix-free per-atom closed form disagrees with the
/// measured witness (empty `S` and the middle range). Criterion 9: the
/// default sweep therefore exits 1.
const KNOWN_RED: [u32; 2] = [3, 9];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn families_and_sizes(unary: bool) -> usize {
    // Number of (n, k) points per family with n up to 7 (unary) or (m, j, n, k)
    // points with m, n up to 6 (binary), computed without the sweep planner.
    let max = if unary { 7 } else { 6 };
    let mut total = 0;
    for f in Family::ALL {
        let points: usize = (f.min_n()..=max).map(|n| if f.has_k() { n - 2 } else { 1 }).sum();
        total += if unary { points } else { points * points };
    }
    total
}

fn sweep(families: &[Family], measures: &[Measure]) -> Vec<Row> {
    let config = SweepConfig { families: families.to_vec(), measures: measures.to_vec(), ..SweepConfig::default() };
    sweep::run(&config, None).expect("sweep runs")
}

fn judge(rows: &[Row], expected_rows: usize, allow_skips: bool) -> Outcome {
    let fail: Vec<&Row> = rows.iter().filter(|r| r.status() == Status::Fail).collect();
    let skipped = rows.iter().filter(|r| r.status() == Status::Skipped).count();
    let mut detail = format!("{} rows, {} failed, {} skipped", rows.len(), fail.len(), skipped);
    if let Some(r) = fail.first() {
        detail += &format!(
            "; first failure {} {} n={} measured {:?} expected {:?}",
            r.family,
            r.measure_label(),
            r.n,
            r.measured,
            r.expected
        );
    }
    let pass = fail.is_empty() && rows.len() == expected_rows && (allow_skips || skipped == 0);
    Outcome { pass, detail }
}

fn without_small(fs: &[Family]) -> Vec<Family> {
    fs.iter().copied().filter(|f| *f != Family::PrefixFreeSmall).collect()
}

fn c1_semigroup() -> Outcome {
    let families = without_small(&Family::ALL);
    let rows = sweep(&families, &[Measure::Semigroup]);
    let expected = families_and_sizes(true) - 4;
    judge(&rows, expected, false)
}

fn c2_reverse_and_atom_counts() -> Outcome {
    let rows = sweep(&Family::ALL, &[Measure::Reverse, Measure::AtomsCount]);
    judge(&rows, 2 * families_and_sizes(true), false)
}

fn c3_atom_complexities() -> Outcome {
    let families = without_small(&Family::ALL);
    let rows = sweep(&families, &[Measure::Atom]);
    let mut expected = 0;
    for f in &families {
        for n in f.min_n()..=7 {
            let per = if n <= sweep::ATOM_EXHAUSTIVE_MAX { 1 << n } else { sweep::DEFAULT_ATOM_SAMPLES };
            expected += per * if f.has_k() { n - 2 } else { 1 };
        }
    }
    judge(&rows, expected, false)
}

fn c4_star() -> Outcome {
    let rows = sweep(&Family::ALL, &[Measure::Star]);
    judge(&rows, families_and_sizes(true), false)
}

fn c5_product() -> Outcome {
    let rows = sweep(&Family::ALL, &[Measure::ProductRestricted, Measure::ProductUnrestricted]);
    judge(&rows, 2 * families_and_sizes(false), false)
}

fn c6_boolean() -> Outcome {
    use Measure::*;
    let measures = [UnionR, UnionU, XorR, XorU, DiffR, DiffU, IntersectR, IntersectU];
    let rows = sweep(&Family::ALL, &measures);
    let skips_ok = rows
        .iter()
        .filter(|r| r.status() == Status::Skipped)
        .all(|r| r.family == Family::PrefixFree && r.m == Some(4) && r.n == 4);
    let mut o = judge(&rows, 8 * families_and_sizes(false), true);
    o.pass &= skips_ok && rows.iter().filter(|r| r.status() == Status::Skipped).count() == 8;
    o
}

fn random_dfa(rng: &mut StdRng, n: usize, letters: usize) -> Dfa {
    let alphabet = (0..letters).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let delta = (0..letters).map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect()).collect();
    let p = rng.gen_range(0.1..0.9);
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(p)).collect();
    Dfa::new(n, alphabet, delta, 0, finals).expect("valid random DFA")
}

fn words(max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for c in 0..2 {
                let mut w = out[i].clone();
                w.push(c);
                out.push(w);
            }
        }
        start = end;
    }
    out
}

/// `u ∈ L`, `uv ∉ L` and `uvz ∈ L` never occur with `|u|, |v|, |z| <= 8`.
fn convex_oracle(d: &Dfa, ws: &[Vec<usize>]) -> bool {
    let live: Vec<bool> = (0..d.state_count()).map(|q| ws.iter().any(|z| d.is_final(d.run_from(q, z)))).collect();
    ws.iter().all(|u| {
        let p = d.run_from(d.initial(), u);
        !d.is_final(p)
            || ws.iter().all(|v| {
                let r = d.run_from(p, v);
                d.is_final(r) || !live[r]
            })
    })
}

fn c7_classifier() -> Outcome {
    let mut witnesses = 0;
    let mut bad = Vec::new();
    for f in Family::ALL {
        for n in f.min_n()..=7 {
            let ks: Vec<Option<usize>> = if f.has_k() { (1..=n - 2).map(Some).collect() } else { vec![None] };
            for k in ks {
                let d = witness(&WitnessParams::new(f, n, k)).expect("witness");
                let r = classify_report(&d);
                witnesses += 1;
                if r.class != f.class() || r.k() != k {
                    bad.push(format!("{f} n={n} k={k:?}"));
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0);
    let ws = words(8);
    let (mut random, mut disagreements, mut convex) = (0, 0, 0);
    while random < 200 {
        let n = rng.gen_range(1..=6);
        let d = random_dfa(&mut rng, n, 2).minimize();
        if d.state_count() != n {
            continue;
        }
        let oracle = convex_oracle(&d, &ws);
        convex += oracle as usize;
        if is_prefix_convex(&d) != oracle || (classify(&d) != LanguageClass::NotPrefixConvex) != oracle {
            disagreements += 1;
        }
        random += 1;
    }
    Outcome {
        pass: bad.is_empty() && disagreements == 0,
        detail: format!(
            "{witnesses} witnesses ({} misclassified), {random} random minimal DFAs ({convex} convex, {disagreements} disagreements)",
            bad.len()
        ),
    }
}

fn c8_structural() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let mut idempotent = true;
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let letters = rng.gen_range(1..=3);
        let d = random_dfa(&mut rng, n, letters);
        let m = d.minimize();
        idempotent &= m.minimize() == m;
    }
    let mut atoms_ok = 0;
    for _ in 0..50 {
        let n = rng.gen_range(1..=6);
        let letters = rng.gen_range(1..=3);
        let d = random_dfa(&mut rng, n, letters);
        atoms_ok += (atom_count(&d) == reverse_complexity_full(&d)) as usize;
    }
    let (mut convex, mut lemma_ok) = (0, true);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=5);
        let d = random_dfa(&mut rng, n, 2);
        if let Ok(holds) = check_ideal_or_empty(&d) {
            convex += 1;
            lemma_ok &= holds;
        }
    }
    let mut perm = 0;
    let mut perm_ok = true;
    for n in 3..=7 {
        for k in 1..=n - 2 {
            perm += 1;
            perm_ok &= check_proper_permutation_lemma(n, k).unwrap_or(false);
        }
    }
    Outcome {
        pass: idempotent && atoms_ok == 50 && lemma_ok && convex > 0 && perm_ok,
        detail: format!(
            "minimize idempotent: {idempotent}; atoms = reverse on {atoms_ok}/50; ideal-or-empty on {convex} convex DFAs: {lemma_ok}; permutation lemma on {perm} (n,k): {perm_ok}"
        ),
    }
}

fn c9_table() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_pcx"))
        .args(["verify", "--format", "md", "--jobs", "4"])
        .output()
        .expect("run pcx");
    let text = String::from_utf8_lossy(&out.stdout);
    let table: Vec<&str> = text.lines().filter(|l| l.starts_with("| ") && !l.starts_with("|  |")).collect();
    let mut cells = 0;
    let mut unmarked = 0;
    let mut crossed = 0;
    for line in table.iter().take_while(|l| !l.starts_with("| family")) {
        for cell in line.trim_matches('|').split(" | ").skip(1).map(str::trim) {
            if cell == "—" {
                continue;
            }
            cells += 1;
            if !cell.starts_with('`') || !(cell.contains('✓') || cell.contains('✗')) {
                unmarked += 1;
            }
            crossed += cell.contains('✗') as usize;
        }
    }
    let code = out.status.code().unwrap_or(-1);
    Outcome {
        pass: code == 0 && cells > 0 && unmarked == 0 && crossed == 0,
        detail: format!("exit {code}; {cells} table cells, {crossed} marked ✗, {unmarked} without formula or mark"),
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "semigroup sizes", c1_semigroup),
        (2, "reverse complexity and atom counts", c2_reverse_and_atom_counts),
        (3, "atom complexities", c3_atom_complexities),
        (4, "star", c4_star),
        (5, "product", c5_product),
        (6, "boolean operations", c6_boolean),
        (7, "classifier", c7_classifier),
        (8, "structural properties", c8_structural),
        (9, "table reproduction", c9_table),
    ];
    let mut red = BTreeSet::new();
    for (id, name, check) in criteria {
        let start = Instant::now();
        let o = check();
        let mark = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && KNOWN_RED.contains(&id) { " (known)" } else { "" };
        println!("criterion {id} {mark}{note}: {name}: {} [{:.1}s]", o.detail, start.elapsed().as_secs_f64());
        if !o.pass {
            red.insert(id);
        }
    }
    let known: BTreeSet<u32> = KNOWN_RED.into_iter().collect();
    if red != known {
        let newly_red: Vec<_> = red.difference(&known).collect();
        let newly_green: Vec<_> = known.difference(&red).collect();
        eprintln!("unexpected acceptance result: newly failing {newly_red:?}, newly passing {newly_green:?}");
        std::process::exit(1);
    }
    println!("acceptance: {} of 9 criteria pass; known failing: {:?}", 9 - red.len(), KNOWN_RED);
}
