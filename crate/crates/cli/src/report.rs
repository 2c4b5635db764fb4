//! Report rows and their CSV, JSON and Markdown renderings.

use std::fmt::Write as _;

use indexmap::IndexMap;
use pcx_core::bounds::formula;
use pcx_core::{Bound, Family, Measure};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// A plain table rendered in any [`Format`].
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table { headers: headers.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(Into::into).collect());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
            Format::Md => self.markdown(),
        }
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn json(&self) -> String {
        let rows: Vec<IndexMap<&str, Value>> = self
            .rows
            .iter()
            .map(|r| self.headers.iter().map(String::as_str).zip(r.iter().map(|c| json_cell(c))).collect())
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).expect("plain values serialize");
        s.push('\n');
        s
    }

    pub fn markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "| {} |", self.headers.join(" | "));
        let _ = writeln!(s, "|{}", "---|".repeat(self.headers.len()));
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
            let _ = writeln!(s, "| {} |", cells.join(" | "));
        }
        s
    }
}

/// Integers and booleans become JSON numbers and booleans, empty cells
/// `null`, anything else a string.
fn json_cell(c: &str) -> Value {
    if c.is_empty() {
        Value::Null
    } else if let Ok(v) = c.parse::<u64>() {
        Value::from(v)
    } else if let Ok(v) = c.parse::<u128>() {
        Value::String(v.to_string())
    } else if let Ok(b) = c.parse::<bool>() {
        Value::Bool(b)
    } else {
        Value::String(c.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Measured {
    Value(u128),
    /// The atom is empty.
    Empty,
    Error(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Bound(Bound),
    /// The class admits no atom with this index.
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub family: Family,
    pub measure: Measure,
    pub subset: Option<Vec<usize>>,
    pub m: Option<usize>,
    pub n: usize,
    pub j: Option<usize>,
    pub k: Option<usize>,
    pub measured: Measured,
    pub expected: Expected,
    pub elapsed_ms: u128,
}

impl Row {
    pub fn status(&self) -> Status {
        match (&self.expected, &self.measured) {
            (Expected::Bound(Bound::Undefined), _) => Status::Skipped,
            (Expected::Bound(Bound::Exact(b)), Measured::Value(v)) if b == v => Status::Pass,
            (Expected::Empty, Measured::Empty) => Status::Pass,
            _ => Status::Fail,
        }
    }

    pub fn pass(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn measure_label(&self) -> String {
        match &self.subset {
            Some(s) => {
                format!("{}{{{}}}", self.measure.name(), s.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            }
            None => self.measure.name().to_string(),
        }
    }

    fn cells(&self) -> Vec<String> {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let measured = match &self.measured {
            Measured::Value(v) => v.to_string(),
            Measured::Empty => "empty".into(),
            Measured::Error(e) => format!("error: {e}"),
        };
        let bound = match self.expected {
            Expected::Bound(Bound::Exact(b)) => b.to_string(),
            Expected::Bound(Bound::Undefined) => "undefined".into(),
            Expected::Empty => "empty".into(),
        };
        let pass = match self.status() {
            Status::Pass => "true",
            Status::Fail => "false",
            Status::Skipped => "skipped",
        };
        vec![
            self.family.name().to_string(),
            self.measure_label(),
            opt(self.m),
            self.n.to_string(),
            opt(self.j),
            opt(self.k),
            measured,
            bound,
            pass.to_string(),
            self.elapsed_ms.to_string(),
        ]
    }
}

pub const COLUMNS: [&str; 10] = ["family", "measure", "m", "n", "j", "k", "measured", "bound", "pass", "elapsed_ms"];

pub fn rows_table(rows: &[Row]) -> Table {
    let mut t = Table::new(COLUMNS);
    for r in rows {
        t.push(r.cells());
    }
    t
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn of<'a>(rows: impl IntoIterator<Item = &'a Row>) -> Self {
        let mut t = Tally::default();
        for r in rows {
            match r.status() {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skipped => t.skipped += 1,
            }
        }
        t
    }
}

fn family_heading(f: Family) -> &'static str {
    match f {
        Family::Regular => "Regular",
        Family::RightIdeal => "Ideal",
        Family::PrefixClosed => "Closed",
        Family::PrefixFree => "Free",
        Family::PrefixFreeSmall => "Free (6 letters)",
        Family::Proper => "Proper",
    }
}

fn measure_heading(m: Measure) -> &'static str {
    use Measure::*;
    match m {
        Semigroup => "Semigroup",
        Reverse => "Reverse",
        AtomsCount => "Atoms",
        Atom => "Atom complexity",
        Star => "Star",
        ProductRestricted => "Product R",
        ProductUnrestricted => "Product U",
        UnionR => "∪ R",
        UnionU => "∪ U",
        XorR => "⊕ R",
        XorU => "⊕ U",
        DiffR => "∖ R",
        DiffU => "∖ U",
        IntersectR => "∩ R",
        IntersectU => "∩ U",
    }
}

/// Measures as rows and families as columns; each cell shows the formula,
/// a pass mark and the number of verified parameter points.
pub fn summary_markdown(rows: &[Row]) -> String {
    let families: Vec<Family> = Family::ALL.into_iter().filter(|f| rows.iter().any(|r| r.family == *f)).collect();
    let measures: Vec<Measure> = Measure::ALL.into_iter().filter(|m| rows.iter().any(|r| r.measure == *m)).collect();
    let mut s = String::from("## Complexities of prefix-convex languages\n\n");
    let mut headers = vec![""];
    headers.extend(families.iter().map(|f| family_heading(*f)));
    let mut table = Table::new(headers);
    for &m in &measures {
        let mut line = vec![measure_heading(m).to_string()];
        for &f in &families {
            let cell: Vec<&Row> = rows.iter().filter(|r| r.family == f && r.measure == m).collect();
            line.push(if cell.is_empty() { "—".to_string() } else { summary_cell(f, m, &cell) });
        }
        table.push(line);
    }
    s.push_str(&table.markdown());
    let total = Tally::of(rows);
    let _ = writeln!(
        s,
        "\n{} cells: {} passed, {} failed, {} skipped (bound undefined).",
        rows.len(),
        total.pass,
        total.fail,
        total.skipped
    );
    let failing: Vec<Row> = rows.iter().filter(|r| r.status() == Status::Fail).cloned().collect();
    if !failing.is_empty() {
        s.push_str("\n### Failing cells\n\n");
        s.push_str(&rows_table(&failing).markdown());
    }
    s
}

fn summary_cell(f: Family, m: Measure, cell: &[&Row]) -> String {
    let t = Tally::of(cell.iter().copied());
    let checked = t.pass + t.fail;
    let mark = if t.fail == 0 && checked > 0 {
        "✓"
    } else if t.fail > 0 {
        "✗"
    } else {
        "–"
    };
    let formula = formula(f, m).unwrap_or("?");
    let mut out = format!("`{formula}` {mark} {}/{checked}", t.pass);
    if t.skipped > 0 {
        let _ = write!(out, " ({} skipped)", t.skipped);
    }
    out
}
