//! Transformations of `Q_n = {0, ..., n-1}` and transition semigroups.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::witness;

/// Default element cap for semigroup enumeration.
pub const DEFAULT_SEMIGROUP_CAP: usize = 5_000_000;

/// A total map `Q_n -> Q_n`; position `q` holds the image of `q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if let Some(&q) = images.iter().find(|&&q| q >= n) {
            return Err(Error::StateOutOfRange { state: q, size: n });
        }
        Ok(Transformation { images })
    }

    pub fn identity(n: usize) -> Self {
        Transformation { images: (0..n).collect() }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, q: usize) -> usize {
        self.images[q]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(q, &t)| q == t)
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.size()];
        self.images.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    /// `self` followed by `t`.
    pub fn then(&self, t: &Transformation) -> Result<Transformation> {
        compose(self, t)
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// Pointwise composition with `s` applied first: `q(s*t) = (qs)t`.
pub fn compose(s: &Transformation, t: &Transformation) -> Result<Transformation> {
    if s.size() != t.size() {
        return Err(Error::SizeMismatch(s.size(), t.size()));
    }
    Ok(Transformation { images: s.images.iter().map(|&q| t.images[q]).collect() })
}

/// Descriptions of the transformations used to define witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformSpec {
    Identity,
    /// `(q_0, ..., q_{k-1})`: `q_i -> q_{i+1}`, last to first.
    Cycle(Vec<usize>),
    Transposition(usize, usize),
    /// `(P -> q)`.
    Collapse {
        from: Vec<usize>,
        to: usize,
    },
    /// `q -> q+1 (mod n)` for `low <= q <= high`.
    ShiftUp {
        low: usize,
        high: usize,
    },
    /// `q -> q-1 (mod n)` for `low <= q <= high`.
    ShiftDown {
        low: usize,
        high: usize,
    },
    /// Applied left to right.
    Compose(Vec<TransformSpec>),
}

pub fn make_transformation(n: usize, spec: &TransformSpec) -> Result<Transformation> {
    let check = |q: usize| {
        if q < n {
            Ok(())
        } else {
            Err(Error::StateOutOfRange { state: q, size: n })
        }
    };
    let mut images: Vec<usize> = (0..n).collect();
    match spec {
        TransformSpec::Identity => {}
        TransformSpec::Cycle(states) => {
            let mut seen = HashSet::new();
            for &q in states {
                check(q)?;
                if !seen.insert(q) {
                    return Err(Error::RepeatedCycleState(q));
                }
            }
            for (i, &q) in states.iter().enumerate() {
                images[q] = states[(i + 1) % states.len()];
            }
        }
        TransformSpec::Transposition(p, q) => {
            return make_transformation(n, &TransformSpec::Cycle(vec![*p, *q]));
        }
        TransformSpec::Collapse { from, to } => {
            check(*to)?;
            for &p in from {
                check(p)?;
                images[p] = *to;
            }
        }
        TransformSpec::ShiftUp { low, high } | TransformSpec::ShiftDown { low, high } => {
            if low > high || *high >= n {
                return Err(Error::InvalidShift { low: *low, high: *high });
            }
            let up = matches!(spec, TransformSpec::ShiftUp { .. });
            for (q, image) in (*low..).zip(&mut images[*low..=*high]) {
                *image = if up { (q + 1) % n } else { (q + n - 1) % n };
            }
        }
        TransformSpec::Compose(parts) => {
            let mut acc = Transformation::identity(n);
            for p in parts {
                acc = compose(&acc, &make_transformation(n, p)?)?;
            }
            return Ok(acc);
        }
    }
    Ok(Transformation { images })
}

/// One transformation per letter, in alphabet order.
pub fn letter_transformations(d: &Dfa) -> Vec<(String, Transformation)> {
    d.alphabet()
        .iter()
        .zip(d.transitions())
        .map(|(l, row)| (l.clone(), Transformation { images: row.clone() }))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemigroupSize {
    Size(usize),
    Overflow,
}

impl SemigroupSize {
    pub fn value(self) -> Option<usize> {
        match self {
            SemigroupSize::Size(s) => Some(s),
            SemigroupSize::Overflow => None,
        }
    }
}

fn closure<K, F>(gens: &[K], mul: F, cap: usize) -> Option<Vec<K>>
where
    K: Clone + Eq + Hash,
    F: Fn(&K, usize) -> K,
{
    let mut seen: HashSet<K> = HashSet::new();
    let mut elems: Vec<K> = Vec::new();
    for g in gens {
        if seen.insert(g.clone()) {
            elems.push(g.clone());
        }
    }
    let mut head = 0;
    while head < elems.len() {
        if elems.len() > cap {
            return None;
        }
        let x = elems[head].clone();
        head += 1;
        for g in 0..gens.len() {
            let y = mul(&x, g);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                elems.push(y);
            }
        }
    }
    (elems.len() <= cap).then_some(elems)
}

fn common_size(gens: &[Transformation]) -> Result<usize> {
    let n = gens.first().map_or(0, Transformation::size);
    if gens.is_empty() {
        return Err(Error::InvalidParams("empty generator set".into()));
    }
    if let Some(g) = gens.iter().find(|g| g.size() != n) {
        return Err(Error::SizeMismatch(n, g.size()));
    }
    Ok(n)
}

fn pack(t: &Transformation) -> u64 {
    t.images.iter().enumerate().fold(0, |acc, (q, &i)| acc | (i as u64) << (4 * q))
}

/// Every element of the semigroup generated by `gens`, or `None` past `cap`.
pub fn semigroup_elements(gens: &[Transformation], cap: usize) -> Result<Option<Vec<Transformation>>> {
    common_size(gens)?;
    Ok(closure(gens, |x, g| compose(x, &gens[g]).expect("sizes checked"), cap))
}

/// Size of the semigroup generated by `gens` under composition. The
/// identity counts only when some product of generators equals it.
pub fn semigroup_size(gens: &[Transformation], cap: usize) -> Result<SemigroupSize> {
    let n = common_size(gens)?;
    let found = if n <= 16 {
        let packed: Vec<u64> = gens.iter().map(pack).collect();
        let tables: Vec<&[usize]> = gens.iter().map(|g| g.images()).collect();
        let mul = |x: &u64, g: usize| {
            let t = tables[g];
            (0..n).fold(0u64, |acc, q| acc | (t[(x >> (4 * q) & 0xf) as usize] as u64) << (4 * q))
        };
        closure(&packed, mul, cap).map(|v| v.len())
    } else {
        closure(gens, |x, g| compose(x, &gens[g]).expect("sizes checked"), cap).map(|v| v.len())
    };
    Ok(found.map_or(SemigroupSize::Overflow, SemigroupSize::Size))
}

/// Transition semigroup size of a DFA.
pub fn transition_semigroup_size(d: &Dfa, cap: usize) -> Result<SemigroupSize> {
    let gens: Vec<Transformation> = letter_transformations(d).into_iter().map(|(_, t)| t).collect();
    if gens.is_empty() {
        return Ok(SemigroupSize::Size(0));
    }
    semigroup_size(&gens, cap)
}

fn factorial(x: usize) -> usize {
    (1..=x).product()
}

/// Order of the group generated by the `a` and `b` permutations of the
/// proper prefix-convex witness `D_{n,k}`.
pub fn proper_permutation_group_order(n: usize, k: usize) -> Result<usize> {
    let d = witness::proper(n, k)?;
    let gens: Vec<Transformation> =
        ["a", "b"].iter().map(|l| Transformation { images: d.row(l).expect("letter").to_vec() }).collect();
    let elems = semigroup_elements(&gens, usize::MAX)?.expect("uncapped");
    Ok(elems.len())
}

/// Whether `a` and `b` of `D_{n,k}` generate every permutation that fixes
/// `E_{n,k}`, `F_{n,k}` and `n-1` setwise.
pub fn check_proper_permutation_lemma(n: usize, k: usize) -> Result<bool> {
    let d = witness::proper(n, k)?;
    let gens: Vec<Transformation> =
        ["a", "b"].iter().map(|l| Transformation { images: d.row(l).expect("letter").to_vec() }).collect();
    let elems = semigroup_elements(&gens, usize::MAX)?.expect("uncapped");
    let e_max = n - 2 - k;
    let block = |q: usize| {
        if q <= e_max {
            0
        } else if q < n - 1 {
            1
        } else {
            2
        }
    };
    let preserves = elems.iter().all(|t| t.is_permutation() && (0..n).all(|q| block(t.apply(q)) == block(q)));
    Ok(preserves && elems.len() == factorial(n - 1 - k) * factorial(k))
}
