//! Complete DFAs, ε-NFAs, and the pipeline that measures quotient complexity:
//! complete, determinize, minimize, count.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::bitset::StateSet;
use crate::error::{Error, Result};

/// The language classes distinguished by the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LanguageClass {
    Regular,
    RightIdeal,
    PrefixClosed,
    PrefixFree,
    ProperPrefixConvex,
    NotPrefixConvex,
}

impl LanguageClass {
    pub fn name(self) -> &'static str {
        match self {
            LanguageClass::Regular => "regular",
            LanguageClass::RightIdeal => "right-ideal",
            LanguageClass::PrefixClosed => "prefix-closed",
            LanguageClass::PrefixFree => "prefix-free",
            LanguageClass::ProperPrefixConvex => "proper",
            LanguageClass::NotPrefixConvex => "not-prefix-convex",
        }
    }
}

/// A complete deterministic automaton over an ordered alphabet.
///
/// Transitions are stored letter-major: `transitions()[i][q]` is the target
/// of state `q` under the `i`-th letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Vec<String>,
    delta: Vec<Vec<usize>>,
    initial: usize,
    finals: Vec<bool>,
}

fn check_alphabet(alphabet: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in alphabet {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLetter(l.clone()));
        }
    }
    Ok(())
}

/// Letters of `a` followed by the letters of `b` not already in `a`.
pub fn joint_alphabet(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = a.to_vec();
    for l in b {
        if !out.contains(l) {
            out.push(l.clone());
        }
    }
    out
}

impl Dfa {
    pub fn new<I>(
        state_count: usize,
        alphabet: Vec<String>,
        transitions: Vec<Vec<usize>>,
        initial: usize,
        finals: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        check_alphabet(&alphabet)?;
        if transitions.len() != alphabet.len() {
            let letter = alphabet.get(transitions.len()).cloned().unwrap_or_else(|| format!("#{}", alphabet.len()));
            return Err(Error::RowLength { letter, len: 0, states: state_count });
        }
        for (letter, row) in alphabet.iter().zip(&transitions) {
            if row.len() != state_count {
                return Err(Error::RowLength { letter: letter.clone(), len: row.len(), states: state_count });
            }
            if let Some((q, &t)) = row.iter().enumerate().find(|(_, &t)| t >= state_count) {
                return Err(Error::TargetOutOfRange {
                    letter: letter.clone(),
                    source_state: q,
                    target: t,
                    states: state_count,
                });
            }
        }
        if initial >= state_count {
            return Err(Error::InitialOutOfRange(initial));
        }
        let mut fin = vec![false; state_count];
        for f in finals {
            if f >= state_count {
                return Err(Error::FinalOutOfRange(f));
            }
            fin[f] = true;
        }
        Ok(Dfa { alphabet, delta: transitions, initial, finals: fin })
    }

    /// The one-state automaton of the empty language.
    pub fn empty_language(alphabet: Vec<String>) -> Self {
        let delta = vec![vec![0]; alphabet.len()];
        Dfa { alphabet, delta, initial: 0, finals: vec![false] }
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn letter_index(&self, letter: &str) -> Option<usize> {
        self.alphabet.iter().position(|l| l == letter)
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.delta
    }

    pub fn row(&self, letter: &str) -> Option<&[usize]> {
        self.letter_index(letter).map(|i| self.delta[i].as_slice())
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&q| self.finals[q]).collect()
    }

    #[inline]
    pub fn step(&self, q: usize, letter: usize) -> usize {
        self.delta[letter][q]
    }

    /// State reached from `from` by a word given as letter indices.
    pub fn run_from(&self, from: usize, word: &[usize]) -> usize {
        word.iter().fold(from, |q, &c| self.delta[c][q])
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.finals[self.run_from(self.initial, word)]
    }

    /// Membership of a word spelled with letter names; words using a letter
    /// outside the alphabet are rejected.
    pub fn accepts<S: AsRef<str>>(&self, word: &[S]) -> bool {
        let mut q = self.initial;
        for l in word {
            match self.letter_index(l.as_ref()) {
                Some(c) => q = self.delta[c][q],
                None => return false,
            }
        }
        self.finals[q]
    }

    pub fn with_initial(&self, q: usize) -> Dfa {
        assert!(q < self.state_count());
        Dfa { initial: q, ..self.clone() }
    }

    pub fn with_finals<I: IntoIterator<Item = usize>>(&self, finals: I) -> Result<Dfa> {
        Dfa::new(self.state_count(), self.alphabet.clone(), self.delta.clone(), self.initial, finals)
    }

    pub fn complement(&self) -> Dfa {
        Dfa { finals: self.finals.iter().map(|f| !f).collect(), ..self.clone() }
    }

    /// Makes the automaton total over `alphabet`, which must contain every
    /// current letter. Letters new to the automaton lead every state to a
    /// fresh non-final sink; no sink is added when nothing is new.
    pub fn complete(&self, alphabet: &[String]) -> Result<Dfa> {
        check_alphabet(alphabet)?;
        if let Some(l) = self.alphabet.iter().find(|l| !alphabet.contains(l)) {
            return Err(Error::MissingLetter(l.clone()));
        }
        let n = self.state_count();
        let needs_sink = alphabet.iter().any(|l| !self.alphabet.contains(l));
        let total = if needs_sink { n + 1 } else { n };
        let delta = alphabet
            .iter()
            .map(|l| match self.letter_index(l) {
                Some(c) => {
                    let mut row = self.delta[c].clone();
                    if needs_sink {
                        row.push(n);
                    }
                    row
                }
                None => vec![n; total],
            })
            .collect();
        let mut finals = self.finals.clone();
        if needs_sink {
            finals.push(false);
        }
        Ok(Dfa { alphabet: alphabet.to_vec(), delta, initial: self.initial, finals })
    }

    /// Drops every letter not in `keep`; the remaining letters keep their
    /// relative order.
    pub fn restrict(&self, keep: &[String]) -> Dfa {
        let (alphabet, delta) = self
            .alphabet
            .iter()
            .zip(&self.delta)
            .filter(|(l, _)| keep.contains(l))
            .map(|(l, r)| (l.clone(), r.clone()))
            .unzip();
        Dfa { alphabet, delta, initial: self.initial, finals: self.finals.clone() }
    }

    pub fn reachable_states(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = stack.pop() {
            for row in &self.delta {
                let t = row[q];
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable (non-empty states).
    pub fn coreachable_states(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut preds = vec![Vec::new(); n];
        for row in &self.delta {
            for (q, &t) in row.iter().enumerate() {
                preds[t].push(q);
            }
        }
        let mut seen = self.finals.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| seen[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// States whose language is empty.
    pub fn empty_states(&self) -> Vec<usize> {
        let co = self.coreachable_states();
        (0..self.state_count()).filter(|&q| !co[q]).collect()
    }

    pub fn is_empty_language(&self) -> bool {
        !self.coreachable_states()[self.initial]
    }

    /// Letters occurring in at least one accepted word.
    pub fn effective_alphabet(&self) -> Vec<String> {
        let reach = self.reachable_states();
        let co = self.coreachable_states();
        self.alphabet
            .iter()
            .zip(&self.delta)
            .filter(|(_, row)| (0..self.state_count()).any(|q| reach[q] && co[row[q]]))
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// Renumbers reachable states in breadth-first order from the initial
    /// state, following letters in alphabet order. Unreachable states are
    /// dropped. Two automata with the same alphabet order are isomorphic iff
    /// their canonical forms are equal.
    pub fn canonical(&self) -> Dfa {
        let n = self.state_count();
        let mut order = Vec::with_capacity(n);
        let mut index = vec![usize::MAX; n];
        index[self.initial] = 0;
        order.push(self.initial);
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for row in &self.delta {
                let t = row[q];
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
        }
        let delta = self.delta.iter().map(|row| order.iter().map(|&q| index[row[q]]).collect()).collect();
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        Dfa { alphabet: self.alphabet.clone(), delta, initial: 0, finals }
    }

    pub fn is_isomorphic(&self, other: &Dfa) -> bool {
        self.canonical() == other.canonical()
    }

    /// The minimal complete DFA of the same language over the same alphabet,
    /// in canonical numbering.
    pub fn minimize(&self) -> Dfa {
        let d = self.canonical();
        let block_of = hopcroft_partition(&d);
        let blocks = block_of.iter().copied().max().map_or(0, |b| b + 1);
        let mut rep = vec![usize::MAX; blocks];
        for (q, &b) in block_of.iter().enumerate() {
            if rep[b] == usize::MAX {
                rep[b] = q;
            }
        }
        let delta = d.delta.iter().map(|row| rep.iter().map(|&q| block_of[row[q]]).collect()).collect();
        let finals = rep.iter().map(|&q| d.finals[q]).collect();
        Dfa { alphabet: d.alphabet.clone(), delta, initial: block_of[d.initial], finals }.canonical()
    }

    /// Quotient complexity of the accepted language, measured over the
    /// letters that occur in accepted words. When no letter occurs (the
    /// languages ∅ and {ε}) the automaton's own alphabet is kept, so {ε} over a
    /// non-empty alphabet counts two quotients.
    pub fn complexity(&self) -> usize {
        let eff = self.effective_alphabet();
        if eff.is_empty() || eff.len() == self.alphabet.len() {
            self.minimize().state_count()
        } else {
            self.restrict(&eff).minimize().state_count()
        }
    }

    /// Complexity of the language of each state, in state order.
    pub fn quotient_complexities(&self) -> Vec<usize> {
        (0..self.state_count()).map(|q| self.with_initial(q).complexity()).collect()
    }

    pub fn to_nfa(&self) -> Nfa {
        let n = self.state_count();
        let mut nfa = Nfa::new(n, self.alphabet.clone()).expect("alphabet already validated");
        for (c, row) in self.delta.iter().enumerate() {
            for (q, &t) in row.iter().enumerate() {
                nfa.add_transition(q, c, t);
            }
        }
        nfa.add_initial(self.initial);
        for q in self.finals() {
            nfa.add_final(q);
        }
        nfa
    }
}

/// Hopcroft partition refinement. Returns the block index of every state;
/// block indices are dense but otherwise arbitrary.
#[allow(clippy::needless_range_loop)]
fn hopcroft_partition(d: &Dfa) -> Vec<usize> {
    let n = d.state_count();
    let k = d.alphabet.len();
    let mut inverse = vec![vec![Vec::new(); n]; k];
    for (c, row) in d.delta.iter().enumerate() {
        for (q, &t) in row.iter().enumerate() {
            inverse[c][t].push(q);
        }
    }

    let (fin, non): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| d.finals[q]);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![0; n];
    for part in [non, fin] {
        if !part.is_empty() {
            for &q in &part {
                block_of[q] = blocks.len();
            }
            blocks.push(part);
        }
    }
    if blocks.len() < 2 || k == 0 {
        return block_of;
    }

    let mut queued = vec![vec![false; k]; 2];
    let mut work = Vec::new();
    let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
    for (c, flag) in queued[smaller].iter_mut().enumerate() {
        *flag = true;
        work.push((smaller, c));
    }

    let mut marked = vec![false; n];
    let mut hits = vec![0usize; n];
    let mut preds = Vec::new();
    let mut touched = Vec::new();
    while let Some((splitter, c)) = work.pop() {
        queued[splitter][c] = false;
        preds.clear();
        for &q in &blocks[splitter] {
            for &p in &inverse[c][q] {
                if !marked[p] {
                    marked[p] = true;
                    preds.push(p);
                }
            }
        }
        touched.clear();
        for &p in &preds {
            let b = block_of[p];
            if hits[b] == 0 {
                touched.push(b);
            }
            hits[b] += 1;
        }
        for &b in &touched {
            if hits[b] < blocks[b].len() {
                let (inside, outside): (Vec<usize>, Vec<usize>) = blocks[b].iter().partition(|&&q| marked[q]);
                let fresh = blocks.len();
                for &q in &outside {
                    block_of[q] = fresh;
                }
                blocks[b] = inside;
                blocks.push(outside);
                queued.push(vec![false; k]);
                for c2 in 0..k {
                    let target = if queued[b][c2] || blocks[fresh].len() < blocks[b].len() { fresh } else { b };
                    if !queued[target][c2] {
                        queued[target][c2] = true;
                        work.push((target, c2));
                    }
                }
            }
            hits[b] = 0;
        }
        for &p in &preds {
            marked[p] = false;
        }
    }
    block_of
}

/// Language equality, decided on the product over the union of both
/// alphabets. A letter missing from one operand is treated as leading that
/// operand to an empty sink.
pub fn equivalent(d1: &Dfa, d2: &Dfa) -> bool {
    let alpha = joint_alphabet(&d1.alphabet, &d2.alphabet);
    let a = d1.complete(&alpha).expect("superset alphabet");
    let b = d2.complete(&alpha).expect("superset alphabet");
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert((a.initial, b.initial));
    queue.push_back((a.initial, b.initial));
    while let Some((p, q)) = queue.pop_front() {
        if a.finals[p] != b.finals[q] {
            return false;
        }
        for c in 0..alpha.len() {
            let next = (a.delta[c][p], b.delta[c][q]);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    true
}

/// A nondeterministic automaton with ε-transitions and a set of initial
/// states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Vec<String>,
    delta: Vec<Vec<StateSet>>,
    epsilon: Vec<StateSet>,
    initials: StateSet,
    finals: StateSet,
}

impl Nfa {
    /// An automaton with `state_count` states and no transitions.
    pub fn new(state_count: usize, alphabet: Vec<String>) -> Result<Self> {
        check_alphabet(&alphabet)?;
        let empty = StateSet::new(state_count);
        Ok(Nfa {
            delta: vec![vec![empty.clone(); state_count]; alphabet.len()],
            epsilon: vec![empty.clone(); state_count],
            initials: empty.clone(),
            finals: empty,
            alphabet,
        })
    }

    pub fn state_count(&self) -> usize {
        self.epsilon.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initials(&self) -> &StateSet {
        &self.initials
    }

    pub fn finals(&self) -> &StateSet {
        &self.finals
    }

    pub fn targets(&self, q: usize, letter: usize) -> &StateSet {
        &self.delta[letter][q]
    }

    pub fn epsilon_targets(&self, q: usize) -> &StateSet {
        &self.epsilon[q]
    }

    pub fn has_epsilon(&self) -> bool {
        self.epsilon.iter().any(|s| !s.is_empty())
    }

    pub fn add_transition(&mut self, from: usize, letter: usize, to: usize) {
        assert!(from < self.state_count() && to < self.state_count());
        self.delta[letter][from].insert(to);
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        assert!(from < self.state_count() && to < self.state_count());
        self.epsilon[from].insert(to);
    }

    pub fn add_initial(&mut self, q: usize) {
        assert!(q < self.state_count());
        self.initials.insert(q);
    }

    pub fn add_final(&mut self, q: usize) {
        assert!(q < self.state_count());
        self.finals.insert(q);
    }

    pub fn epsilon_closure(&self, set: &StateSet) -> StateSet {
        let mut out = set.clone();
        let mut stack: Vec<usize> = set.iter().collect();
        while let Some(q) = stack.pop() {
            for t in self.epsilon[q].iter() {
                if out.insert(t) {
                    stack.push(t);
                }
            }
        }
        out
    }

    fn step_set(&self, set: &StateSet, letter: usize) -> StateSet {
        let mut next = StateSet::new(self.state_count());
        for q in set.iter() {
            next.union_with(&self.delta[letter][q]);
        }
        self.epsilon_closure(&next)
    }

    pub fn accepts<S: AsRef<str>>(&self, word: &[S]) -> bool {
        let mut cur = self.epsilon_closure(&self.initials);
        for l in word {
            match self.alphabet.iter().position(|a| a == l.as_ref()) {
                Some(c) => cur = self.step_set(&cur, c),
                None => return false,
            }
        }
        cur.intersects(&self.finals)
    }

    /// Extends the alphabet; new letters have no transitions.
    pub fn with_alphabet(&self, alphabet: &[String]) -> Result<Nfa> {
        check_alphabet(alphabet)?;
        if let Some(l) = self.alphabet.iter().find(|l| !alphabet.contains(l)) {
            return Err(Error::MissingLetter(l.clone()));
        }
        let empty = vec![StateSet::new(self.state_count()); self.state_count()];
        let delta = alphabet
            .iter()
            .map(|l| match self.alphabet.iter().position(|a| a == l) {
                Some(c) => self.delta[c].clone(),
                None => empty.clone(),
            })
            .collect();
        Ok(Nfa { alphabet: alphabet.to_vec(), delta, ..self.clone() })
    }

    /// Accessible subset construction. Reachable subsets are numbered in
    /// lexicographic order; the empty subset, when reachable, is the sink.
    pub fn determinize(&self) -> Dfa {
        let start = self.epsilon_closure(&self.initials);
        let mut index: HashMap<StateSet, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        let mut edges: Vec<Vec<usize>> = Vec::new();
        index.insert(start, 0);
        let mut head = 0;
        while head < subsets.len() {
            let cur = subsets[head].clone();
            head += 1;
            let mut row = Vec::with_capacity(self.alphabet.len());
            for c in 0..self.alphabet.len() {
                let next = self.step_set(&cur, c);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                row.push(id);
            }
            edges.push(row);
        }

        let mut order: Vec<usize> = (0..subsets.len()).collect();
        order.sort_by(|&a, &b| subsets[a].cmp(&subsets[b]));
        let mut rank = vec![0; subsets.len()];
        for (r, &id) in order.iter().enumerate() {
            rank[id] = r;
        }
        let delta = (0..self.alphabet.len()).map(|c| order.iter().map(|&id| rank[edges[id][c]]).collect()).collect();
        let finals = order.iter().map(|&id| subsets[id].intersects(&self.finals)).collect();
        Dfa { alphabet: self.alphabet.clone(), delta, initial: rank[0], finals }
    }

    pub fn complexity(&self) -> usize {
        self.determinize().complexity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    fn regular3() -> Dfa {
        Dfa::new(3, s(&["a", "b", "c"]), vec![vec![1, 2, 0], vec![1, 0, 2], vec![0, 0, 2]], 0, [2]).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_input() {
        let ab = s(&["a", "b"]);
        assert_eq!(Dfa::new(0, vec![], vec![], 0, []), Err(Error::NoStates));
        assert!(matches!(
            Dfa::new(3, s(&["a"]), vec![vec![0, 5, 1]], 0, []),
            Err(Error::TargetOutOfRange { target: 5, .. })
        ));
        assert!(matches!(
            Dfa::new(2, ab.clone(), vec![vec![0, 1], vec![0]], 0, []),
            Err(Error::RowLength { len: 1, .. })
        ));
        assert_eq!(Dfa::new(1, s(&["a", "a"]), vec![vec![0], vec![0]], 0, []), Err(Error::DuplicateLetter("a".into())));
        assert_eq!(Dfa::new(1, vec![], vec![], 1, []), Err(Error::InitialOutOfRange(1)));
        assert_eq!(Dfa::new(1, vec![], vec![], 0, [3]), Err(Error::FinalOutOfRange(3)));
    }

    #[test]
    fn complete_over_same_alphabet_is_identity() {
        let d = regular3();
        assert_eq!(d.complete(d.alphabet()).unwrap(), d);
    }

    #[test]
    fn complete_adds_sink_for_new_letters() {
        let d = regular3();
        let c = d.complete(&s(&["a", "b", "c", "d"])).unwrap();
        assert_eq!(c.state_count(), 4);
        assert_eq!(c.row("d").unwrap(), &[3, 3, 3, 3]);
        assert_eq!(c.row("a").unwrap(), &[1, 2, 0, 3]);
        assert!(!c.is_final(3));
        assert!(equivalent(&d, &c));
        for q in 0..c.state_count() {
            assert_eq!(c.transitions().iter().filter(|r| r[q] < c.state_count()).count(), 4);
        }
    }

    #[test]
    fn complete_from_empty_alphabet() {
        let d = Dfa::new(1, vec![], vec![], 0, [0]).unwrap();
        let c = d.complete(&s(&["a"])).unwrap();
        assert_eq!(c.state_count(), 2);
        assert_eq!(c.row("a").unwrap(), &[1, 1]);
    }

    #[test]
    fn complete_rejects_missing_letter() {
        assert_eq!(regular3().complete(&s(&["a", "b"])), Err(Error::MissingLetter("c".into())));
    }

    #[test]
    fn minimize_merges_equivalent_states() {
        let d = Dfa::new(2, s(&["a"]), vec![vec![1, 0]], 0, [0, 1]).unwrap();
        assert_eq!(d.minimize().state_count(), 1);
        assert_eq!(regular3().minimize().state_count(), 3);
    }

    #[test]
    fn minimize_drops_unreachable() {
        let d = Dfa::new(3, s(&["a"]), vec![vec![0, 2, 1]], 0, [1]).unwrap();
        let m = d.minimize();
        assert_eq!(m.state_count(), 1);
        assert!(m.is_empty_language());
    }

    #[test]
    fn empty_language_complexity() {
        assert_eq!(Dfa::empty_language(s(&["a"])).complexity(), 1);
        assert!(Dfa::empty_language(s(&["a"])).effective_alphabet().is_empty());
    }

    #[test]
    fn epsilon_language_has_two_quotients() {
        let d = Dfa::new(2, s(&["a"]), vec![vec![1, 1]], 0, [0]).unwrap();
        assert_eq!(d.complexity(), 2);
    }

    #[test]
    fn sigma_star_quotients() {
        let d = Dfa::new(1, s(&["a", "b"]), vec![vec![0], vec![0]], 0, [0]).unwrap();
        assert_eq!(d.quotient_complexities(), vec![1]);
    }

    #[test]
    fn determinize_deterministic_input_is_isomorphic() {
        let d = regular3();
        assert!(d.to_nfa().determinize().minimize().is_isomorphic(&d));
        assert_eq!(d.to_nfa().determinize().state_count(), 3);
    }

    #[test]
    fn determinize_with_empty_initial_set() {
        let n = Nfa::new(2, s(&["a"])).unwrap();
        let d = n.determinize();
        assert_eq!(d.state_count(), 1);
        assert!(d.is_empty_language());
    }

    #[test]
    fn equivalent_detects_complement() {
        let d = regular3();
        assert!(equivalent(&d, &d.minimize()));
        assert!(!equivalent(&d, &d.complement()));
    }

    #[test]
    fn equivalent_over_different_alphabets() {
        let d = regular3();
        let wider = d.complete(&s(&["a", "b", "c", "z"])).unwrap();
        assert!(equivalent(&d, &wider));
        let restricted = d.restrict(&s(&["a", "b"]));
        assert!(!equivalent(&d, &restricted));
    }

    #[test]
    fn nfa_epsilon_closure_and_acceptance() {
        let mut n = Nfa::new(3, s(&["a"])).unwrap();
        n.add_initial(0);
        n.add_epsilon(0, 1);
        n.add_transition(1, 0, 2);
        n.add_final(2);
        assert!(n.accepts(&["a"]));
        assert!(!n.accepts::<&str>(&[]));
        assert!(!n.accepts(&["a", "a"]));
        assert!(!n.accepts(&["z"]));
        let d = n.determinize();
        assert!(d.accepts(&["a"]));
        assert!(!d.accepts(&["a", "a"]));
    }
}
