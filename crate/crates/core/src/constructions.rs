//! Reversal, star, product and boolean operations on DFAs.

use std::fmt;
use std::str::FromStr;

use crate::atoms;
use crate::automata::{joint_alphabet, Dfa, Nfa};
use crate::error::{Error, Result};
use crate::transform::{transition_semigroup_size, SemigroupSize, DEFAULT_SEMIGROUP_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BooleanOp {
    Union,
    SymmetricDifference,
    Difference,
    Intersection,
}

impl BooleanOp {
    pub fn apply(self, x: bool, y: bool) -> bool {
        match self {
            BooleanOp::Union => x || y,
            BooleanOp::SymmetricDifference => x != y,
            BooleanOp::Difference => x && !y,
            BooleanOp::Intersection => x && y,
        }
    }
}

/// Transitions reversed; the finals become initial and the initial state
/// becomes the only final state.
pub fn reverse(d: &Dfa) -> Nfa {
    let n = d.state_count();
    let mut r = Nfa::new(n, d.alphabet().to_vec()).expect("valid alphabet");
    for (c, row) in d.transitions().iter().enumerate() {
        for (q, &t) in row.iter().enumerate() {
            r.add_transition(t, c, q);
        }
    }
    for q in d.finals() {
        r.add_initial(q);
    }
    r.add_final(d.initial());
    r
}

/// ε-NFA for `L*`: a fresh initial state `n`, final, with the outgoing
/// transitions of the old initial state, and ε-edges from every final state
/// back to the old initial state.
pub fn star(d: &Dfa) -> Nfa {
    let n = d.state_count();
    let mut r = Nfa::new(n + 1, d.alphabet().to_vec()).expect("valid alphabet");
    for (c, row) in d.transitions().iter().enumerate() {
        for (q, &t) in row.iter().enumerate() {
            r.add_transition(q, c, t);
        }
        r.add_transition(n, c, row[d.initial()]);
    }
    for q in d.finals() {
        r.add_final(q);
        r.add_epsilon(q, d.initial());
    }
    r.add_initial(n);
    r.add_final(n);
    r
}

/// ε-NFA for `L(d1)L(d2)` over the joint alphabet. States of `d2` are
/// shifted past those of the completed `d1`.
pub fn concat(d1: &Dfa, d2: &Dfa) -> Nfa {
    let alpha = joint_alphabet(d1.alphabet(), d2.alphabet());
    let a = d1.complete(&alpha).expect("superset alphabet");
    let b = d2.complete(&alpha).expect("superset alphabet");
    let (na, nb) = (a.state_count(), b.state_count());
    let mut r = Nfa::new(na + nb, alpha).expect("valid alphabet");
    for c in 0..a.alphabet().len() {
        for q in 0..na {
            r.add_transition(q, c, a.step(q, c));
        }
        for q in 0..nb {
            r.add_transition(na + q, c, na + b.step(q, c));
        }
    }
    for q in a.finals() {
        r.add_epsilon(q, na + b.initial());
    }
    for q in b.finals() {
        r.add_final(na + q);
    }
    r.add_initial(a.initial());
    r
}

/// Direct product over the joint alphabet; pair `(p, q)` is state
/// `p * n2 + q`. The result is not minimized.
pub fn boolean(d1: &Dfa, d2: &Dfa, op: BooleanOp) -> Dfa {
    let alpha = joint_alphabet(d1.alphabet(), d2.alphabet());
    let a = d1.complete(&alpha).expect("superset alphabet");
    let b = d2.complete(&alpha).expect("superset alphabet");
    let (na, nb) = (a.state_count(), b.state_count());
    let delta =
        (0..alpha.len()).map(|c| (0..na * nb).map(|s| a.step(s / nb, c) * nb + b.step(s % nb, c)).collect()).collect();
    let finals = (0..na * nb).filter(|&s| op.apply(a.is_final(s / nb), b.is_final(s % nb)));
    Dfa::new(na * nb, alpha, delta, a.initial() * nb + b.initial(), finals).expect("well-formed product")
}

/// Operations accepted by [`measure`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Reverse,
    Star,
    Concat,
    Union,
    Xor,
    Diff,
    Intersect,
    Semigroup,
    AtomsCount,
}

impl Op {
    pub const ALL: [Op; 9] =
        [Op::Reverse, Op::Star, Op::Concat, Op::Union, Op::Xor, Op::Diff, Op::Intersect, Op::Semigroup, Op::AtomsCount];

    pub fn name(self) -> &'static str {
        match self {
            Op::Reverse => "reverse",
            Op::Star => "star",
            Op::Concat => "concat",
            Op::Union => "union",
            Op::Xor => "xor",
            Op::Diff => "diff",
            Op::Intersect => "intersect",
            Op::Semigroup => "semigroup",
            Op::AtomsCount => "atoms-count",
        }
    }

    pub fn is_binary(self) -> bool {
        matches!(self, Op::Concat | Op::Union | Op::Xor | Op::Diff | Op::Intersect)
    }

    pub fn boolean(self) -> Option<BooleanOp> {
        match self {
            Op::Union => Some(BooleanOp::Union),
            Op::Xor => Some(BooleanOp::SymmetricDifference),
            Op::Diff => Some(BooleanOp::Difference),
            Op::Intersect => Some(BooleanOp::Intersection),
            _ => None,
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "product" => "concat",
            "atoms" => "atoms-count",
            other => other,
        };
        Op::ALL
            .into_iter()
            .find(|o| o.name() == alias)
            .ok_or_else(|| Error::InvalidParams(format!("unknown operation `{s}`")))
    }
}

/// Runs one construction and returns the measured value: quotient
/// complexity of the result, transition semigroup size, or atom count.
pub fn measure(lhs: &Dfa, rhs: Option<&Dfa>, op: Op) -> Result<usize> {
    let second = || rhs.ok_or_else(|| Error::MissingOperand(op.name().to_string()));
    match op {
        Op::Reverse => Ok(reverse(lhs).complexity()),
        Op::Star => Ok(star(lhs).complexity()),
        Op::Concat => Ok(concat(lhs, second()?).complexity()),
        Op::Union | Op::Xor | Op::Diff | Op::Intersect => {
            Ok(boolean(lhs, second()?, op.boolean().expect("boolean op")).complexity())
        }
        Op::Semigroup => match transition_semigroup_size(lhs, DEFAULT_SEMIGROUP_CAP)? {
            SemigroupSize::Size(s) => Ok(s),
            SemigroupSize::Overflow => Err(Error::SemigroupOverflow(DEFAULT_SEMIGROUP_CAP)),
        },
        Op::AtomsCount => Ok(atoms::atom_count(lhs)),
    }
}
