//! Witness DFAs for each language class, dialects, and the catalog of
//! operand pairs used for every measured operation.

use std::fmt;
use std::str::FromStr;

use crate::automata::{Dfa, LanguageClass};
use crate::bounds::Measure;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Regular,
    RightIdeal,
    PrefixClosed,
    PrefixFree,
    PrefixFreeSmall,
    Proper,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Regular,
        Family::RightIdeal,
        Family::PrefixClosed,
        Family::PrefixFree,
        Family::PrefixFreeSmall,
        Family::Proper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Regular => "regular",
            Family::RightIdeal => "right-ideal",
            Family::PrefixClosed => "prefix-closed",
            Family::PrefixFree => "prefix-free",
            Family::PrefixFreeSmall => "prefix-free-small",
            Family::Proper => "proper",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            Family::Regular | Family::Proper => 3,
            _ => 4,
        }
    }

    pub fn has_k(self) -> bool {
        self == Family::Proper
    }

    /// The class the family's witnesses belong to.
    pub fn class(self) -> LanguageClass {
        match self {
            Family::Regular => LanguageClass::NotPrefixConvex,
            Family::RightIdeal => LanguageClass::RightIdeal,
            Family::PrefixClosed => LanguageClass::PrefixClosed,
            Family::PrefixFree | Family::PrefixFreeSmall => LanguageClass::PrefixFree,
            Family::Proper => LanguageClass::ProperPrefixConvex,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WitnessParams {
    pub family: Family,
    pub n: usize,
    /// Number of final states; used by [`Family::Proper`] only.
    pub k: Option<usize>,
}

impl WitnessParams {
    pub fn new(family: Family, n: usize, k: Option<usize>) -> Self {
        WitnessParams { family, n, k }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < self.family.min_n() {
            return Err(Error::InvalidParams(format!(
                "{} needs n >= {}, got {}",
                self.family,
                self.family.min_n(),
                self.n
            )));
        }
        match (self.family.has_k(), self.k) {
            (true, Some(k)) if k >= 1 && k + 2 <= self.n => Ok(()),
            (true, Some(k)) => Err(Error::InvalidParams(format!("k must lie in 1..={}, got {k}", self.n - 2))),
            (true, None) => Err(Error::InvalidParams("proper family needs k".into())),
            (false, Some(_)) => Err(Error::InvalidParams(format!("{} takes no k", self.family))),
            (false, None) => Ok(()),
        }
    }
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn rows<F: Fn(usize) -> usize>(n: usize, f: F) -> Vec<usize> {
    (0..n).map(f).collect()
}

fn cycle_row(n: usize, lo: usize, hi: usize) -> Vec<usize> {
    rows(n, |q| {
        if q < lo || q > hi {
            q
        } else if q == hi {
            lo
        } else {
            q + 1
        }
    })
}

fn swap_row(n: usize, p: usize, r: usize) -> Vec<usize> {
    rows(n, |q| {
        if q == p {
            r
        } else if q == r {
            p
        } else {
            q
        }
    })
}

fn map_row(n: usize, from: usize, to: usize) -> Vec<usize> {
    rows(n, |q| if q == from { to } else { q })
}

/// `cycle_row` composed with `(p, r)` on a disjoint support.
fn cycle_and_swap(n: usize, lo: usize, hi: usize, p: usize, r: usize) -> Vec<usize> {
    let c = cycle_row(n, lo, hi);
    rows(n, |q| {
        if q == p {
            r
        } else if q == r {
            p
        } else {
            c[q]
        }
    })
}

fn check(family: Family, n: usize, k: Option<usize>) -> Result<()> {
    WitnessParams::new(family, n, k).validate()
}

/// `D_n(a,b,c)`: `a` cycles `Q_n`, `b` swaps 0 and 1, `c` sends 1 to 0.
pub fn regular(n: usize) -> Result<Dfa> {
    check(Family::Regular, n, None)?;
    let delta = vec![cycle_row(n, 0, n - 1), swap_row(n, 0, 1), map_row(n, 1, 0)];
    Dfa::new(n, names(&["a", "b", "c"]), delta, 0, [n - 1])
}

/// `D_n(a,b,c,d)` with sink-free final state `n-1`.
pub fn right_ideal(n: usize) -> Result<Dfa> {
    check(Family::RightIdeal, n, None)?;
    let delta = vec![
        cycle_row(n, 0, n - 2),
        swap_row(n, 0, 1),
        map_row(n, 1, 0),
        rows(n, |q| if q + 1 < n { q + 1 } else { q }),
    ];
    Dfa::new(n, names(&["a", "b", "c", "d"]), delta, 0, [n - 1])
}

/// `D_n(a,b,c,d)` with every state but the sink `n-1` final.
pub fn prefix_closed(n: usize) -> Result<Dfa> {
    check(Family::PrefixClosed, n, None)?;
    let delta = vec![
        cycle_row(n, 0, n - 2),
        swap_row(n, 0, 1),
        map_row(n, 1, 0),
        rows(n, |q| match q {
            0 => n - 1,
            q if q == n - 1 => q,
            q => q - 1,
        }),
    ];
    Dfa::new(n, names(&["a", "b", "c", "d"]), delta, 0, 0..n - 1)
}

fn free_a(n: usize) -> Vec<usize> {
    let mut r = cycle_row(n, 0, n - 3);
    r[n - 2] = n - 1;
    r
}

fn free_c(n: usize) -> Vec<usize> {
    let mut r = map_row(n, 1, 0);
    r[n - 2] = n - 1;
    r
}

fn free_d(n: usize) -> Vec<usize> {
    rows(n, |q| if q == 0 { n - 2 } else { n - 1 })
}

fn free_e(n: usize, q0: usize) -> Vec<usize> {
    rows(n, |q| {
        if q == q0 {
            n - 2
        } else if q == n - 2 {
            n - 1
        } else {
            q
        }
    })
}

/// `D_n(a,b,c,d,e_0,...,e_{n-3})` with unique final state `n-2`.
pub fn prefix_free(n: usize) -> Result<Dfa> {
    check(Family::PrefixFree, n, None)?;
    let mut b = swap_row(n, 0, 1);
    b[n - 2] = n - 1;
    let mut alphabet = names(&["a", "b", "c", "d"]);
    let mut delta = vec![free_a(n), b, free_c(n), free_d(n)];
    for q in 0..=n - 3 {
        alphabet.push(format!("e_{q}"));
        delta.push(free_e(n, q));
    }
    Dfa::new(n, alphabet, delta, 0, [n - 2])
}

/// `D_n(a,c,d,e,f,g)`, the prefix-free witness over six letters.
pub fn prefix_free_small(n: usize) -> Result<Dfa> {
    check(Family::PrefixFreeSmall, n, None)?;
    let f = rows(n, |q| if q + 1 < n { q + 1 } else { q });
    let g = map_row(n, n - 2, n - 1);
    let delta = vec![free_a(n), free_c(n), free_d(n), free_e(n, n - 3), f, g];
    Dfa::new(n, names(&["a", "c", "d", "e", "f", "g"]), delta, 0, [n - 2])
}

/// `D_{n,k}(a,b,c_1,c_2,d_1,d_2,e)`: `E = {0..n-2-k}`, `F = {n-1-k..n-2}`
/// (final), sink `n-1`.
pub fn proper(n: usize, k: usize) -> Result<Dfa> {
    check(Family::Proper, n, Some(k))?;
    let e_len = n - 1 - k;
    let f_lo = n - 1 - k;
    let f_hi = n - 2;
    let a = match (e_len.is_multiple_of(2), k >= 2) {
        (true, true) => cycle_and_swap(n, 1, n - 2 - k, f_lo, f_lo + 1),
        (false, true) => cycle_and_swap(n, 0, n - 2 - k, f_lo, f_lo + 1),
        (true, false) => cycle_row(n, 1, n - 2 - k),
        (false, false) => cycle_row(n, 0, n - 2 - k),
    };
    let b = match (k.is_multiple_of(2), e_len >= 2) {
        (true, true) => cycle_and_swap(n, f_lo + 1, f_hi, 0, 1),
        (false, true) => cycle_and_swap(n, f_lo, f_hi, 0, 1),
        (true, false) => cycle_row(n, f_lo + 1, f_hi),
        (false, false) => cycle_row(n, f_lo, f_hi),
    };
    let c1 = if e_len >= 2 { map_row(n, 1, 0) } else { rows(n, |q| q) };
    let c2 = if k >= 2 { map_row(n, f_lo + 1, f_lo) } else { rows(n, |q| q) };
    let d1 = rows(n, |q| {
        if q + 3 + k <= n {
            q + 1
        } else if q == n - 2 - k {
            n - 1
        } else {
            q
        }
    });
    let d2 = rows(n, |q| if (f_lo..=f_hi).contains(&q) { q + 1 } else { q });
    let e = map_row(n, 0, f_lo);
    Dfa::new(n, names(&["a", "b", "c_1", "c_2", "d_1", "d_2", "e"]), vec![a, b, c1, c2, d1, d2, e], 0, f_lo..=f_hi)
}

pub fn witness(p: &WitnessParams) -> Result<Dfa> {
    p.validate()?;
    match p.family {
        Family::Regular => regular(p.n),
        Family::RightIdeal => right_ideal(p.n),
        Family::PrefixClosed => prefix_closed(p.n),
        Family::PrefixFree => prefix_free(p.n),
        Family::PrefixFreeSmall => prefix_free_small(p.n),
        Family::Proper => proper(p.n, p.k.expect("validated")),
    }
}

/// A partial renaming of letters. Letters absent from the mapping are kept
/// under their own name; letters mapped to `None` are deleted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Dialect {
    mapping: Vec<(String, Option<String>)>,
}

impl Dialect {
    pub fn new<I, A, B>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (A, Option<B>)>,
        A: Into<String>,
        B: Into<String>,
    {
        Dialect { mapping: pairs.into_iter().map(|(a, b)| (a.into(), b.map(Into::into))).collect() }
    }

    /// The notation `L(x_1, ..., x_r)` over an ordered alphabet: position
    /// `i` renames the `i`-th letter to `x_i`, `-` deletes it, and letters
    /// past the end of the list are deleted.
    pub fn positional(alphabet: &[String], targets: &[&str]) -> Self {
        let mapping = alphabet
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let t = targets.get(i).copied().filter(|&t| t != "-");
                (l.clone(), t.map(str::to_string))
            })
            .collect();
        Dialect { mapping }
    }

    /// Parses `a=b,b=a,c=-`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut mapping = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (from, to) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidParams(format!("dialect entry `{part}` is not `x=y`")))?;
            let (from, to) = (from.trim(), to.trim());
            if from.is_empty() || to.is_empty() {
                return Err(Error::InvalidParams(format!("dialect entry `{part}` has an empty side")));
            }
            mapping.push((from.to_string(), (to != "-").then(|| to.to_string())));
        }
        Ok(Dialect { mapping })
    }

    pub fn mapping(&self) -> &[(String, Option<String>)] {
        &self.mapping
    }

    fn image<'a>(&'a self, letter: &'a str) -> Option<&'a str> {
        match self.mapping.iter().find(|(l, _)| l == letter) {
            Some((_, t)) => t.as_deref(),
            None => Some(letter),
        }
    }
}

/// Renames and deletes letters; deleted letters lose their transition rows
/// and the remaining letters keep their original order.
pub fn apply_dialect(d: &Dfa, pi: &Dialect) -> Result<Dfa> {
    if let Some((l, _)) = pi.mapping.iter().find(|(l, _)| d.letter_index(l).is_none()) {
        return Err(Error::UnknownLetter(l.clone()));
    }
    let mut alphabet: Vec<String> = Vec::new();
    let mut delta = Vec::new();
    for (l, row) in d.alphabet().iter().zip(d.transitions()) {
        if let Some(t) = pi.image(l) {
            if alphabet.iter().any(|a| a == t) {
                return Err(Error::DuplicateTarget(t.to_string()));
            }
            alphabet.push(t.to_string());
            delta.push(row.clone());
        }
    }
    Dfa::new(d.state_count(), alphabet, delta, d.initial(), d.finals())
}

fn dialect(d: Dfa, targets: &[&str]) -> Result<Dfa> {
    let pi = Dialect::positional(d.alphabet(), targets);
    apply_dialect(&d, &pi)
}

const ALL: &[&str] = &["a", "b", "c", "d", "e", "f", "g"];

/// Operand DFAs for one catalogued measurement: the dialect of the
/// `m`-state witness (or of the `n`-state witness for unary measures) and,
/// for binary measures, the dialect of the `n`-state witness.
///
/// `j` is the final-state count of the left proper operand, `k` that of the
/// right (or only) one.
pub fn theorem_operands(
    family: Family,
    measure: Measure,
    m: usize,
    n: usize,
    j: Option<usize>,
    k: Option<usize>,
) -> Result<(Dfa, Option<Dfa>)> {
    use Measure::*;
    let unknown = || Error::UnknownCatalogEntry(format!("{family} {}", measure.name()));
    let left = |targets: &[&str]| -> Result<Dfa> {
        let d = match family {
            Family::Proper => proper(m, j.ok_or_else(|| Error::InvalidParams("proper left operand needs j".into()))?)?,
            _ => witness(&WitnessParams::new(family, m, None))?,
        };
        dialect(d, targets)
    };
    let right = |targets: &[&str]| -> Result<Dfa> {
        let d = match family {
            Family::Proper => proper(n, k.ok_or_else(|| Error::InvalidParams("proper operand needs k".into()))?)?,
            _ => witness(&WitnessParams::new(family, n, None))?,
        };
        dialect(d, targets)
    };
    let unary = |targets: &[&str]| right(targets).map(|d| (d, None));
    let binary = |l: &[&str], r: &[&str]| Ok((left(l)?, Some(right(r)?)));

    match family {
        Family::Regular => match measure {
            Semigroup | Atom | Reverse | AtomsCount => unary(&["a", "b", "c"]),
            Star => unary(&["a", "b"]),
            ProductRestricted => binary(&["a", "b"], &["a", "-", "b"]),
            ProductUnrestricted => binary(&["a", "b"], &["a", "c", "b"]),
            UnionR | XorR | DiffR | IntersectR | IntersectU => binary(&["a", "b"], &["b", "a"]),
            UnionU | XorU => binary(&["a", "b", "c"], &["b", "a", "d"]),
            DiffU => binary(&["a", "b", "c"], &["b", "a"]),
        },
        Family::RightIdeal => match measure {
            Semigroup | Atom => unary(ALL),
            Reverse | AtomsCount | Star => unary(&["a", "-", "-", "d"]),
            ProductRestricted => binary(&["a", "-", "c", "d"], &["a", "-", "c", "d"]),
            ProductUnrestricted => binary(&["a", "-", "c", "d"], &["b", "-", "c", "d"]),
            UnionR | XorR | DiffR | IntersectR => binary(&["a", "-", "-", "d"], &["-", "-", "d", "a"]),
            UnionU | XorU | DiffU | IntersectU => binary(&["a", "-", "c", "d"], &["b", "-", "d", "a"]),
        },
        Family::PrefixClosed => match measure {
            Semigroup | Atom => unary(ALL),
            Reverse | AtomsCount => unary(&["a", "-", "-", "d"]),
            Star => unary(&["a", "-", "c", "d"]),
            ProductRestricted | ProductUnrestricted => binary(&["a", "b", "c", "d"], &["a", "d", "b", "c"]),
            UnionR | XorR | DiffR | IntersectR | UnionU | XorU | DiffU | IntersectU => {
                binary(&["a", "b", "-", "d"], &["b", "a", "-", "d"])
            }
        },
        Family::PrefixFree => {
            let e_all: Vec<String> = (0..n.saturating_sub(2)).map(|q| format!("e_{q}")).collect();
            match measure {
                Semigroup => {
                    let mut t = vec!["a", "b", "c", "-"];
                    t.extend(e_all.iter().map(String::as_str));
                    unary(&t)
                }
                Reverse | AtomsCount => unary(&["a", "-", "c", "-", "e_0"]),
                Atom => unary(&["a", "b", "c", "-", "e_0"]),
                Star => unary(&["a", "-", "-", "d"]),
                ProductRestricted | ProductUnrestricted => binary(&["a", "-", "-", "d"], &["a", "-", "-", "d"]),
                UnionR | XorR | DiffR | IntersectR | UnionU | XorU | DiffU | IntersectU => {
                    prefix_free_boolean_operands(m, n).map(|(l, r)| (l, Some(r)))
                }
            }
        }
        Family::PrefixFreeSmall => match measure {
            // Atom count equals reverse complexity, so both use one language.
            Reverse | AtomsCount => unary(&["a", "c", "-", "e"]),
            Star => unary(&["a", "-", "d"]),
            ProductRestricted | ProductUnrestricted => binary(&["-", "-", "-", "-", "f"], &["-", "-", "-", "-", "f"]),
            UnionR | XorR | UnionU | XorU => binary(&["-", "-", "-", "-", "f", "g"], &["-", "-", "-", "-", "g", "f"]),
            DiffR | IntersectR | DiffU | IntersectU => {
                binary(&["a", "-", "-", "e", "-", "-"], &["-", "-", "-", "-", "e", "a"])
            }
            Semigroup | Atom => Err(unknown()),
        },
        Family::Proper => match measure {
            Semigroup | Atom => unary(ALL),
            Reverse | AtomsCount => unary(&["a", "b", "-", "-", "-", "d_2", "e"]),
            Star => unary(&["a", "b", "-", "-", "d_1", "d_2", "e"]),
            ProductRestricted | ProductUnrestricted => {
                binary(&["a", "b", "c_1", "-", "d_1", "d_2", "e"], &["a", "d_2", "c_1", "-", "d_1", "b", "e"])
            }
            UnionR | XorR | DiffR | IntersectR | UnionU | XorU | DiffU | IntersectU => {
                binary(&["a", "b", "c_1", "-", "d_1", "d_2", "e"], &["a", "b", "e", "-", "d_2", "d_1", "c_1"])
            }
        },
    }
}

/// `L_m(a,b,-,-,e_0,e_{m-3})` and `L_n(b,a,-,-,e_0,e_{m-3})`, where the
/// second operand's last letter is its own `e_{n-3}` renamed `e_{m-3}`.
pub fn prefix_free_boolean_operands(m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    let lm = prefix_free(m)?;
    let last = format!("e_{}", m - 3);
    let keep_left: Vec<(String, Option<String>)> = lm
        .alphabet()
        .iter()
        .map(|l| {
            let kept = matches!(l.as_str(), "a" | "b" | "e_0") || *l == last;
            (l.clone(), kept.then(|| l.clone()))
        })
        .collect();
    let left = apply_dialect(&lm, &Dialect { mapping: keep_left })?;

    let ln = prefix_free(n)?;
    let own_last = format!("e_{}", n - 3);
    let map_right: Vec<(String, Option<String>)> = ln
        .alphabet()
        .iter()
        .map(|l| {
            let t = match l.as_str() {
                "a" => Some("b".to_string()),
                "b" => Some("a".to_string()),
                "e_0" => Some("e_0".to_string()),
                x if x == own_last => Some(last.clone()),
                _ => None,
            };
            (l.clone(), t)
        })
        .collect();
    let right = apply_dialect(&ln, &Dialect { mapping: map_right })?;
    Ok((left, right))
}
