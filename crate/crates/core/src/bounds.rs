//! Closed-form complexity bounds for every catalogued measurement.
//!
//! All values are exact `u128` integers. A value that would overflow `u128`
//! is reported as [`Bound::Undefined`] rather than wrapping.

use std::fmt;
use std::str::FromStr;

use crate::constructions::Op;
use crate::error::{Error, Result};
use crate::witness::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Semigroup,
    Reverse,
    AtomsCount,
    Atom,
    Star,
    ProductRestricted,
    ProductUnrestricted,
    UnionR,
    UnionU,
    XorR,
    XorU,
    DiffR,
    DiffU,
    IntersectR,
    IntersectU,
}

impl Measure {
    pub const ALL: [Measure; 15] = [
        Measure::Semigroup,
        Measure::Reverse,
        Measure::AtomsCount,
        Measure::Atom,
        Measure::Star,
        Measure::ProductRestricted,
        Measure::ProductUnrestricted,
        Measure::UnionR,
        Measure::UnionU,
        Measure::XorR,
        Measure::XorU,
        Measure::DiffR,
        Measure::DiffU,
        Measure::IntersectR,
        Measure::IntersectU,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Semigroup => "semigroup",
            Measure::Reverse => "reverse",
            Measure::AtomsCount => "atoms-count",
            Measure::Atom => "atom",
            Measure::Star => "star",
            Measure::ProductRestricted => "product-r",
            Measure::ProductUnrestricted => "product-u",
            Measure::UnionR => "union-r",
            Measure::UnionU => "union-u",
            Measure::XorR => "xor-r",
            Measure::XorU => "xor-u",
            Measure::DiffR => "diff-r",
            Measure::DiffU => "diff-u",
            Measure::IntersectR => "intersect-r",
            Measure::IntersectU => "intersect-u",
        }
    }

    /// The construction that realizes this measure; `None` for per-atom
    /// measurements.
    pub fn op(self) -> Option<Op> {
        Some(match self {
            Measure::Semigroup => Op::Semigroup,
            Measure::Reverse => Op::Reverse,
            Measure::AtomsCount => Op::AtomsCount,
            Measure::Atom => return None,
            Measure::Star => Op::Star,
            Measure::ProductRestricted | Measure::ProductUnrestricted => Op::Concat,
            Measure::UnionR | Measure::UnionU => Op::Union,
            Measure::XorR | Measure::XorU => Op::Xor,
            Measure::DiffR | Measure::DiffU => Op::Diff,
            Measure::IntersectR | Measure::IntersectU => Op::Intersect,
        })
    }

    pub fn is_binary(self) -> bool {
        !matches!(self, Measure::Semigroup | Measure::Reverse | Measure::AtomsCount | Measure::Atom | Measure::Star)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown measure `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    Exact(u128),
    Undefined,
}

impl Bound {
    pub fn value(self) -> Option<u128> {
        match self {
            Bound::Exact(v) => Some(v),
            Bound::Undefined => None,
        }
    }
}

impl From<Option<u128>> for Bound {
    fn from(v: Option<u128>) -> Self {
        v.map_or(Bound::Undefined, Bound::Exact)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exact(v) => write!(f, "{v}"),
            Bound::Undefined => f.write_str("undefined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundQuery {
    pub family: Family,
    pub measure: Measure,
    pub m: usize,
    pub n: usize,
    pub j: Option<usize>,
    pub k: Option<usize>,
    /// Atom index, for [`Measure::Atom`] only.
    pub subset: Option<Vec<usize>>,
}

impl BoundQuery {
    pub fn unary(family: Family, measure: Measure, n: usize, k: Option<usize>) -> Self {
        BoundQuery { family, measure, m: 0, n, j: None, k, subset: None }
    }

    pub fn binary(family: Family, measure: Measure, m: usize, n: usize, j: Option<usize>, k: Option<usize>) -> Self {
        BoundQuery { family, measure, m, n, j, k, subset: None }
    }
}

fn pow(b: usize, e: usize) -> Option<u128> {
    (b as u128).checked_pow(u32::try_from(e).ok()?)
}

fn p2(e: usize) -> Option<u128> {
    pow(2, e)
}

fn u(x: usize) -> Option<u128> {
    Some(x as u128)
}

/// Binomial coefficient, zero when `b > a`.
pub fn binom(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128)
}

fn add(a: Option<u128>, b: Option<u128>) -> Option<u128> {
    a?.checked_add(b?)
}

fn sub(a: Option<u128>, b: Option<u128>) -> Option<u128> {
    a?.checked_sub(b?)
}

fn mul(a: Option<u128>, b: Option<u128>) -> Option<u128> {
    a?.checked_mul(b?)
}

fn valid_k(n: usize, k: Option<usize>) -> Option<usize> {
    k.filter(|&k| k >= 1 && k + 2 <= n)
}

/// The bound for one cell, or `Undefined` for cells outside the stated
/// parameter ranges.
pub fn bound(q: &BoundQuery) -> Bound {
    use Family::*;
    use Measure::*;
    let (m, n) = (q.m, q.n);
    let min = q.family.min_n();
    if n < min || (q.measure.is_binary() && m < min) {
        return Bound::Undefined;
    }
    let mn = mul(u(m), u(n));
    let value = match (q.family, q.measure) {
        (_, Atom) => {
            return match &q.subset {
                Some(s) => atom_bound(q.family, n, q.k, s).unwrap_or(Bound::Undefined),
                None => Bound::Undefined,
            }
        }

        (Regular, Semigroup) => pow(n, n),
        (Regular, Reverse | AtomsCount) => p2(n),
        (Regular, Star) => add(p2(n - 1), p2(n - 2)),
        (Regular, ProductRestricted) => sub(mul(u(m), p2(n)), p2(n - 1)),
        (Regular, ProductUnrestricted) => add(mul(u(m), p2(n)), p2(n - 1)),
        (Regular, UnionR | XorR | DiffR | IntersectR | IntersectU) => mn,
        (Regular, UnionU | XorU) => mul(u(m + 1), u(n + 1)),
        (Regular, DiffU) => add(mn, u(m)),

        (RightIdeal, Semigroup) => pow(n, n - 1),
        (RightIdeal, Reverse | AtomsCount) => p2(n - 1),
        (RightIdeal, Star) => u(n + 1),
        (RightIdeal, ProductRestricted) => add(u(m), p2(n - 2)),
        (RightIdeal, ProductUnrestricted) => add(add(u(m + 1), p2(n - 1)), p2(n - 2)),
        (RightIdeal, IntersectR | XorR) => mn,
        (RightIdeal, DiffR) => sub(mn, u(m - 1)),
        (RightIdeal, UnionR) => sub(mn, u(m + n - 2)),
        (RightIdeal, UnionU | XorU) => mul(u(m + 1), u(n + 1)),
        (RightIdeal, DiffU) => add(mn, u(m)),
        (RightIdeal, IntersectU) => mn,

        (PrefixClosed, Semigroup) => pow(n, n - 1),
        (PrefixClosed, Reverse | AtomsCount) => p2(n - 1),
        (PrefixClosed, Star) => add(p2(n - 2), u(1)),
        (PrefixClosed, ProductRestricted | ProductUnrestricted) => mul(u(m + 1), p2(n - 2)),
        (PrefixClosed, UnionR | UnionU | XorR | XorU) => mn,
        (PrefixClosed, DiffR | DiffU) => sub(mn, u(n - 1)),
        (PrefixClosed, IntersectR | IntersectU) => sub(mn, u(m + n - 2)),

        (PrefixFree, Semigroup) => pow(n, n - 2),
        (PrefixFree | PrefixFreeSmall, Reverse | AtomsCount) => add(p2(n - 2), u(1)),
        (PrefixFree | PrefixFreeSmall, Star) => u(n),
        (PrefixFree | PrefixFreeSmall, ProductRestricted | ProductUnrestricted) => u(m + n - 2),
        (PrefixFree, _) if m == 4 && n == 4 => None,
        (PrefixFree | PrefixFreeSmall, UnionR | UnionU | XorR | XorU) => sub(mn, u(2)),
        (PrefixFree | PrefixFreeSmall, DiffR | DiffU) => sub(mn, u(m + 2 * n - 4)),
        (PrefixFree | PrefixFreeSmall, IntersectR | IntersectU) => sub(mn, u(2 * (m + n - 3))),
        (PrefixFreeSmall, Semigroup) => None,

        (Proper, measure) => {
            let k = match valid_k(n, q.k) {
                Some(k) => k,
                None => return Bound::Undefined,
            };
            match measure {
                Semigroup => mul(pow(n, n - 1 - k), pow(k + 1, k)),
                Reverse | AtomsCount => p2(n - 1),
                Star => add(add(p2(n - 2), p2(n - 2 - k)), u(1)),
                _ => {
                    let j = match valid_k(m, q.j) {
                        Some(j) => j,
                        None => return Bound::Undefined,
                    };
                    match measure {
                        ProductRestricted | ProductUnrestricted => {
                            add(add(u(m - 1 - j), mul(u(j), p2(n - 2))), p2(n - 1))
                        }
                        UnionR | UnionU | XorR | XorU => mn,
                        DiffR | DiffU => sub(mn, u(n - 1)),
                        IntersectR | IntersectU => sub(mn, u(m + n - 2)),
                        _ => unreachable!("unary measures handled above"),
                    }
                }
            }
        }
    };
    value.into()
}

fn invalid(family: Family, subset: &[usize]) -> Error {
    Error::InvalidAtomIndex { family: family.name().to_string(), subset: subset.to_vec() }
}

/// Whether the class guarantees `A_S` is non-empty, i.e. whether `S` is an
/// admissible atom index for the family's witness. `S` must be sorted.
pub fn atom_index_allowed(family: Family, n: usize, k: Option<usize>, subset: &[usize]) -> bool {
    let contains = |q: usize| subset.binary_search(&q).is_ok();
    match family {
        Family::Regular => true,
        Family::RightIdeal => contains(n - 1),
        Family::PrefixClosed => !contains(n - 1),
        Family::PrefixFree => subset == [n - 2] || subset.iter().all(|&q| q + 2 < n),
        Family::PrefixFreeSmall => false,
        Family::Proper => valid_k(n, k).is_some() && !contains(n - 1),
    }
}

/// Complexity of the atom `A_S` for the family's witness. Errors when `S` is
/// not an admissible index (the atom is empty) or out of range.
pub fn atom_bound(family: Family, n: usize, k: Option<usize>, subset: &[usize]) -> Result<Bound> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if n < family.min_n()
        || s.len() != subset.len()
        || s.iter().any(|&q| q >= n)
        || !atom_index_allowed(family, n, k, &s)
    {
        return Err(invalid(family, subset));
    }
    let size = s.len();
    let sum =
        |xs: std::ops::RangeInclusive<usize>, ys: std::ops::RangeInclusive<usize>, f: &dyn Fn(usize, usize) -> u128| {
            let mut total = 0u128;
            for x in xs {
                for y in ys.clone() {
                    total += f(x, y);
                }
            }
            total
        };
    let value = match family {
        Family::Regular => {
            if size == 0 || size == n {
                p2(n).map(|v| v - 1)
            } else {
                Some(1 + sum(1..=size, 1..=n - size, &|x, y| binom(n, x) * binom(n - x, y)))
            }
        }
        Family::RightIdeal => {
            if size == n {
                p2(n - 1)
            } else {
                Some(1 + sum(1..=size, 1..=n - size, &|x, y| binom(n - 1, x - 1) * binom(n - x, y)))
            }
        }
        Family::PrefixClosed => {
            if size == 0 {
                p2(n - 1)
            } else {
                Some(1 + sum(1..=n - size, 1..=size, &|x, y| binom(n - 1, x - 1) * binom(n - x, y)))
            }
        }
        Family::PrefixFree => {
            if s == [n - 2] {
                Some(2)
            } else if size == 0 {
                p2(n - 1)
            } else if size == n - 2 {
                add(p2(n - 2), u(1))
            } else {
                Some(2 + sum(1..=size, 1..=n - 2 - size, &|x, y| binom(n - 2, x) * binom(n - 2 - x, y)))
            }
        }
        Family::PrefixFreeSmall => None,
        Family::Proper => {
            let k = k.expect("checked by atom_index_allowed");
            Some(proper_atom_bound(n, k, &s))
        }
    };
    Ok(value.into())
}

fn proper_atom_bound(n: usize, k: usize, s: &[usize]) -> u128 {
    let e_size = n - 1 - k;
    let x1 = s.iter().filter(|&&q| q < e_size).count();
    let x2 = s.len() - x1;
    let (nx1, nx2) = (e_size - x1, k - x2);
    if s.is_empty() {
        return 1 << (n - 1);
    }
    let term = |a1: usize, a2: usize, b1: usize, b2: usize| {
        binom(e_size, a1) * binom(k, a2) * binom(e_size - a1, b1) * binom(k - a2.min(k), b2)
    };
    let mut total = 1u128;
    if x2 > 0 {
        for a1 in 0..=x1 {
            for a2 in 1..=x1 + x2 - a1 {
                if a2 > k {
                    continue;
                }
                for b1 in 0..=nx1 {
                    for b2 in 0..=nx1 + nx2 - b1 {
                        total += term(a1, a2, b1, b2);
                    }
                }
            }
        }
        total
    } else {
        for a1 in 0..=x1 {
            for a2 in 0..=x1 - a1 {
                if a2 > k {
                    continue;
                }
                for b1 in 0..=nx1 {
                    for b2 in 0..=k {
                        total += term(a1, a2, b1, b2);
                    }
                }
            }
        }
        let correction: u128 = (0..=nx1).map(|y| binom(e_size, y)).sum::<u128>() << k;
        total - correction
    }
}

/// Bounds for arbitrary regular languages, used as the reference row when
/// comparing classes.
pub fn regular_reference_bounds(measure: Measure, m: usize, n: usize) -> Bound {
    use Measure::*;
    if n < 3 || (measure.is_binary() && m < 3) {
        return Bound::Undefined;
    }
    let mn = mul(u(m), u(n));
    let v = match measure {
        Semigroup => pow(n, n),
        Reverse | AtomsCount => p2(n),
        Atom => None,
        Star => add(p2(n - 1), p2(n - 2)),
        ProductRestricted => add(mul(u(m - 1), p2(n)), p2(n - 1)),
        ProductUnrestricted => add(mul(u(m), p2(n)), p2(n - 1)),
        UnionR | XorR | DiffR | IntersectR | IntersectU => mn,
        UnionU | XorU => mul(u(m + 1), u(n + 1)),
        DiffU => add(mn, u(m)),
    };
    v.into()
}

/// Human-readable formula of a cell, for report tables.
pub fn formula(family: Family, measure: Measure) -> Option<&'static str> {
    use Family::*;
    use Measure::*;
    Some(match (family, measure) {
        (Regular, Atom) => "2^n-1 at S=∅,Q_n; else 1+Σ_{x=1}^{|S|}Σ_{y=1}^{n-|S|} C(n,x)C(n-x,y)",
        (RightIdeal, Atom) => "2^(n-1) at S=Q_n; else 1+Σ_{x=1}^{|S|}Σ_{y=1}^{n-|S|} C(n-1,x-1)C(n-x,y)",
        (PrefixClosed, Atom) => "2^(n-1) at S=∅; else 1+Σ_{x=1}^{n-|S|}Σ_{y=1}^{|S|} C(n-1,x-1)C(n-x,y)",
        (PrefixFree, Atom) => {
            "2, 2^(n-1), 2^(n-2)+1 at S={n-2},∅,Q_(n-2); else 2+Σ_{x=1}^{|S|}Σ_{y=1}^{n-2-|S|} C(n-2,x)C(n-2-x,y)"
        }
        (Proper, Atom) => "2^(n-1) at S=∅; else sums over S∩E, S∩F and their complements",
        (PrefixFreeSmall, Atom) => return None,
        (Regular, Semigroup) => "n^n",
        (Regular, Reverse | AtomsCount) => "2^n",
        (Regular, Star) => "2^(n-1)+2^(n-2)",
        (Regular, ProductRestricted) => "m2^n-2^(n-1)",
        (Regular, ProductUnrestricted) => "m2^n+2^(n-1)",
        (Regular, UnionR | XorR | DiffR | IntersectR | IntersectU) => "mn",
        (Regular, UnionU | XorU) => "(m+1)(n+1)",
        (Regular, DiffU) => "mn+m",
        (RightIdeal | PrefixClosed, Semigroup) => "n^(n-1)",
        (RightIdeal | PrefixClosed, Reverse | AtomsCount) => "2^(n-1)",
        (RightIdeal, Star) => "n+1",
        (RightIdeal, ProductRestricted) => "m+2^(n-2)",
        (RightIdeal, ProductUnrestricted) => "m+2^(n-1)+2^(n-2)+1",
        (RightIdeal, IntersectR | XorR | IntersectU) => "mn",
        (RightIdeal, DiffR) => "mn-(m-1)",
        (RightIdeal, UnionR) => "mn-(m+n-2)",
        (RightIdeal, UnionU | XorU) => "(m+1)(n+1)",
        (RightIdeal, DiffU) => "mn+m",
        (PrefixClosed, Star) => "2^(n-2)+1",
        (PrefixClosed, ProductRestricted | ProductUnrestricted) => "(m+1)2^(n-2)",
        (PrefixClosed | Proper, UnionR | UnionU | XorR | XorU) => "mn",
        (PrefixClosed | Proper, DiffR | DiffU) => "mn-(n-1)",
        (PrefixClosed | Proper, IntersectR | IntersectU) => "mn-(m+n-2)",
        (PrefixFree, Semigroup) => "n^(n-2)",
        (PrefixFree | PrefixFreeSmall, Reverse | AtomsCount) => "2^(n-2)+1",
        (PrefixFree | PrefixFreeSmall, Star) => "n",
        (PrefixFree | PrefixFreeSmall, ProductRestricted | ProductUnrestricted) => "m+n-2",
        (PrefixFree | PrefixFreeSmall, UnionR | UnionU | XorR | XorU) => "mn-2",
        (PrefixFree | PrefixFreeSmall, DiffR | DiffU) => "mn-(m+2n-4)",
        (PrefixFree | PrefixFreeSmall, IntersectR | IntersectU) => "mn-2(m+n-3)",
        (PrefixFreeSmall, Semigroup) => return None,
        (Proper, Semigroup) => "n^(n-1-k)(k+1)^k",
        (Proper, Reverse | AtomsCount) => "2^(n-1)",
        (Proper, Star) => "2^(n-2)+2^(n-2-k)+1",
        (Proper, ProductRestricted | ProductUnrestricted) => "m-1-j+j2^(n-2)+2^(n-1)",
    })
}
