//! Atoms of a regular language, via the automaton of pairs
//! `(X, Y) = (S·w, S̄·w)`.

use std::collections::HashMap;

use crate::automata::Dfa;
use crate::bitset::StateSet;
use crate::constructions::reverse;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AtomComplexity {
    Atom(usize),
    NotAnAtom,
}

impl AtomComplexity {
    pub fn value(self) -> Option<usize> {
        match self {
            AtomComplexity::Atom(c) => Some(c),
            AtomComplexity::NotAnAtom => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomEntry {
    pub subset: Vec<usize>,
    pub complexity: AtomComplexity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomReport {
    pub entries: Vec<AtomEntry>,
    pub atom_count: usize,
}

/// All subsets of `Q_n` as sorted index lists, by increasing bitmask.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |mask| (0..n).filter(|&q| mask >> q & 1 == 1).collect())
}

fn pair_states(d: &Dfa, subset: &[usize]) -> (Vec<(StateSet, StateSet)>, Vec<Vec<usize>>) {
    let n = d.state_count();
    let x0 = StateSet::from_iter_with_capacity(n, subset.iter().copied());
    let y0 = StateSet::from_iter_with_capacity(n, (0..n).filter(|q| !x0.contains(*q)));
    let mut index: HashMap<(StateSet, StateSet), usize> = HashMap::new();
    let mut states = vec![(x0, y0)];
    index.insert(states[0].clone(), 0);
    let mut edges = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let (x, y) = states[head].clone();
        head += 1;
        let mut row = Vec::with_capacity(d.alphabet().len());
        for c in 0..d.alphabet().len() {
            let image = |s: &StateSet| StateSet::from_iter_with_capacity(n, s.iter().map(|q| d.step(q, c)));
            let next = (image(&x), image(&y));
            let id = *index.entry(next.clone()).or_insert_with(|| {
                states.push(next);
                states.len() - 1
            });
            row.push(id);
        }
        edges.push(row);
    }
    (states, edges)
}

/// DFA of the atom `A_S`: states are the reachable pairs `(S·w, S̄·w)`, and
/// a pair accepts iff `X ⊆ F` and `Y ∩ F = ∅`. `subset` lists `S`.
pub fn atom_automaton(d: &Dfa, subset: &[usize]) -> Dfa {
    let n = d.state_count();
    let finals = StateSet::from_iter_with_capacity(n, d.finals());
    let (states, edges) = pair_states(d, subset);
    let delta = (0..d.alphabet().len()).map(|c| edges.iter().map(|r| r[c]).collect()).collect();
    let accepting =
        states.iter().enumerate().filter(|(_, (x, y))| x.is_subset(&finals) && !y.intersects(&finals)).map(|(i, _)| i);
    Dfa::new(states.len(), d.alphabet().to_vec(), delta, 0, accepting).expect("well-formed pair automaton")
}

/// Whether `A_S` is non-empty.
pub fn is_atom(d: &Dfa, subset: &[usize]) -> bool {
    let n = d.state_count();
    let finals = StateSet::from_iter_with_capacity(n, d.finals());
    let (states, _) = pair_states(d, subset);
    states.iter().any(|(x, y)| x.is_subset(&finals) && !y.intersects(&finals))
}

/// Quotient complexity of `A_S` over the alphabet of `d`.
pub fn atom_complexity(d: &Dfa, subset: &[usize]) -> AtomComplexity {
    let a = atom_automaton(d, subset);
    if a.is_empty_language() {
        AtomComplexity::NotAnAtom
    } else {
        AtomComplexity::Atom(a.minimize().state_count())
    }
}

/// `d` itself when minimal, else its minimal DFA. Atoms are indexed by
/// quotients, so only a minimal DFA names them by state sets.
pub fn quotient_dfa(d: &Dfa) -> std::borrow::Cow<'_, Dfa> {
    let m = d.minimize();
    if m.state_count() == d.state_count() {
        std::borrow::Cow::Borrowed(d)
    } else {
        std::borrow::Cow::Owned(m)
    }
}

/// Number of non-empty atoms.
pub fn atom_count(d: &Dfa) -> usize {
    let d = quotient_dfa(d);
    all_subsets(d.state_count()).filter(|s| is_atom(&d, s)).count()
}

/// Complexity of the reverse over the full alphabet of `d`, which equals
/// the number of atoms.
pub fn reverse_complexity_full(d: &Dfa) -> usize {
    reverse(d).determinize().minimize().state_count()
}

/// Every subset with its atom complexity. Subsets index the states of the
/// minimal DFA of `d`. Errors if the number of atoms differs from the
/// complexity of the reverse.
pub fn atoms_report(d: &Dfa) -> Result<AtomReport> {
    let d = &*quotient_dfa(d);
    let entries: Vec<AtomEntry> = all_subsets(d.state_count())
        .map(|subset| {
            let complexity = atom_complexity(d, &subset);
            AtomEntry { subset, complexity }
        })
        .collect();
    let atom_count = entries.iter().filter(|e| e.complexity != AtomComplexity::NotAnAtom).count();
    let rev = reverse_complexity_full(d);
    if atom_count != rev {
        return Err(Error::AtomCountMismatch { atoms: atom_count, reverse: rev });
    }
    Ok(AtomReport { entries, atom_count })
}

/// The index `S` of the unique atom containing `word` (letter indices).
pub fn atom_of_word(d: &Dfa, word: &[usize]) -> Vec<usize> {
    (0..d.state_count()).filter(|&q| d.is_final(d.run_from(q, word))).collect()
}
