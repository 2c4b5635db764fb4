//! Prefix-convexity and its subclasses, decided on the minimal DFA.

use crate::automata::{Dfa, LanguageClass};
use crate::error::{Error, Result};

/// Every subclass the language belongs to, plus one canonical class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassReport {
    pub class: LanguageClass,
    pub prefix_convex: bool,
    pub right_ideal: bool,
    pub prefix_closed: bool,
    pub prefix_free: bool,
    /// Number of final quotients.
    pub final_count: usize,
}

impl ClassReport {
    /// `k` of a k-proper language.
    pub fn k(&self) -> Option<usize> {
        (self.class == LanguageClass::ProperPrefixConvex).then_some(self.final_count)
    }
}

fn convex_minimal(m: &Dfa) -> bool {
    let co = m.coreachable_states();
    let n = m.state_count();
    let mut seen = vec![false; n];
    let mut stack: Vec<usize> = m.finals();
    for &q in &stack {
        seen[q] = true;
    }
    while let Some(q) = stack.pop() {
        if !m.is_final(q) && co[q] {
            return false;
        }
        for row in m.transitions() {
            let t = row[q];
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    true
}

/// True iff every state reachable from a final state is final or empty.
pub fn is_prefix_convex(d: &Dfa) -> bool {
    convex_minimal(&d.minimize())
}

pub fn classify_report(d: &Dfa) -> ClassReport {
    let m = d.minimize();
    let finals = m.finals();
    let empty = m.empty_states();
    let prefix_convex = convex_minimal(&m);
    let single = (finals.len() == 1).then(|| finals[0]);
    let right_ideal = single.is_some_and(|p| m.transitions().iter().all(|row| row[p] == p));
    let prefix_free =
        finals.is_empty() || single.is_some_and(|p| m.transitions().iter().all(|row| empty.contains(&row[p])));
    let prefix_closed = prefix_convex && (finals.is_empty() || m.is_final(m.initial()));
    let epsilon_only = single == Some(m.initial()) && prefix_free;

    let class = if finals.is_empty() {
        LanguageClass::PrefixClosed
    } else if epsilon_only {
        LanguageClass::PrefixFree
    } else if !prefix_convex {
        LanguageClass::NotPrefixConvex
    } else if right_ideal {
        LanguageClass::RightIdeal
    } else if prefix_free {
        LanguageClass::PrefixFree
    } else if prefix_closed {
        LanguageClass::PrefixClosed
    } else {
        LanguageClass::ProperPrefixConvex
    };
    ClassReport { class, prefix_convex, right_ideal, prefix_closed, prefix_free, final_count: finals.len() }
}

/// Canonical class. The empty language is prefix-closed, `{ε}` is
/// prefix-free, and a language that is both a right ideal and prefix-closed
/// (`Σ*`) is reported as a right ideal.
pub fn classify(d: &Dfa) -> LanguageClass {
    classify_report(d).class
}

/// A prefix-convex language is a right ideal or has an empty quotient.
pub fn check_ideal_or_empty(d: &Dfa) -> Result<bool> {
    let m = d.minimize();
    if !convex_minimal(&m) {
        return Err(Error::NotPrefixConvex);
    }
    Ok(classify(&m) == LanguageClass::RightIdeal || !m.empty_states().is_empty())
}
