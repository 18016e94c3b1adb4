use std::collections::HashMap;
use std::ops::Deref;

use crate::automata::symbol::{is_token, Alphabet, Letter};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Index of a state within an automaton. States are numbered in lexicographic
/// order of their names.
pub type StateId = usize;

/// Nondeterministic finite automaton without ε-transitions.
///
/// States are kept sorted by name and transition lists sorted by target, so
/// iteration order (and the text serialization) is canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    names: Vec<String>,
    alphabet: Alphabet,
    delta: Vec<Vec<Vec<StateId>>>,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
}

impl Nfa {
    /// Builds an automaton from named parts, validating every reference.
    pub fn from_named<S, A, T, I, F>(states: S, alphabet: A, transitions: T, initial: I, accepting: F) -> Result<Self>
    where
        S: IntoIterator,
        S::Item: AsRef<str>,
        A: IntoIterator,
        A::Item: AsRef<str>,
        T: IntoIterator<Item = (String, String, String)>,
        I: IntoIterator,
        I::Item: AsRef<str>,
        F: IntoIterator,
        F::Item: AsRef<str>,
    {
        let names: Vec<String> = states.into_iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if !is_token(name) {
                return Err(Error::InvalidStateName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::Duplicate {
                    kind: "state",
                    name: name.clone(),
                });
            }
        }
        let alphabet = Alphabet::new(alphabet.into_iter().map(|s| s.as_ref().to_string()))?;
        let state = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UndeclaredState(name.to_string()))
        };
        let mut edges = Vec::new();
        for (src, sym, dst) in transitions {
            let letter = alphabet
                .letter(&sym)
                .ok_or_else(|| Error::UndeclaredSymbol(sym.clone()))?;
            edges.push((state(&src)?, letter, state(&dst)?));
        }
        let initial = initial
            .into_iter()
            .map(|s| state(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let accepting = accepting
            .into_iter()
            .map(|s| state(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_indexed(names, alphabet, edges, initial, accepting))
    }

    /// Builds an automaton from indices into `names`, which need not be sorted.
    /// Names must be distinct tokens.
    pub(crate) fn from_indexed(
        names: Vec<String>,
        alphabet: Alphabet,
        transitions: impl IntoIterator<Item = (StateId, Letter, StateId)>,
        initial: impl IntoIterator<Item = StateId>,
        accepting: impl IntoIterator<Item = StateId>,
    ) -> Self {
        let n = names.len();
        let mut order: Vec<StateId> = (0..n).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut rank = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        debug_assert!(order.windows(2).all(|w| names[w[0]] != names[w[1]]));

        let mut delta = vec![vec![Vec::new(); alphabet.len()]; n];
        for (p, a, q) in transitions {
            delta[rank[p]][a].push(rank[q]);
        }
        for row in &mut delta {
            for succ in row.iter_mut() {
                succ.sort_unstable();
                succ.dedup();
            }
        }
        let mut initial: Vec<StateId> = initial.into_iter().map(|q| rank[q]).collect();
        initial.sort_unstable();
        initial.dedup();
        let mut is_accepting = vec![false; n];
        for q in accepting {
            is_accepting[rank[q]] = true;
        }
        let mut names = names;
        let mut sorted = Vec::with_capacity(n);
        for &old in &order {
            sorted.push(std::mem::take(&mut names[old]));
        }
        Self {
            names: sorted,
            alphabet,
            delta,
            initial,
            accepting: is_accepting,
        }
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.names.len()
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.names[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn state(&self, name: &str) -> Option<StateId> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn successors(&self, q: StateId, a: Letter) -> &[StateId] {
        &self.delta[q][a]
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting(&self) -> impl Iterator<Item = StateId> + '_ {
        self.states().filter(|&q| self.accepting[q])
    }

    /// All transitions `(source, letter, target)` in lexicographic order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, succ)| succ.iter().map(move |&q| (p, a, q)))
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().flatten().map(Vec::len).sum()
    }

    /// `δ(set, a)`.
    pub fn step(&self, set: &BitSet, a: Letter) -> BitSet {
        let mut next = BitSet::new();
        for q in set.iter() {
            next.extend(self.delta[q][a].iter().copied());
        }
        next
    }

    /// `δ(set, word)`.
    pub fn read(&self, set: &BitSet, word: &[Letter]) -> BitSet {
        word.iter().fold(set.clone(), |cur, &a| self.step(&cur, a))
    }

    /// States reachable from `q` under `word`.
    pub fn read_from(&self, q: StateId, word: &[Letter]) -> BitSet {
        let mut start = BitSet::new();
        start.insert(q);
        self.read(&start, word)
    }

    pub fn initial_set(&self) -> BitSet {
        self.initial.iter().copied().collect()
    }

    /// Whether the word (as letter indices) is accepted, by simulating state sets.
    pub fn accepts(&self, word: &[Letter]) -> bool {
        self.read(&self.initial_set(), word).iter().any(|q| self.accepting[q])
    }

    /// Membership for a word given by symbol names.
    pub fn membership<S: AsRef<str>>(&self, word: &[S]) -> Result<bool> {
        Ok(self.accepts(&self.alphabet.encode(word)?))
    }

    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.delta.iter().flatten().all(|s| s.len() <= 1)
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().flatten().all(|s| !s.is_empty())
    }

    /// Same automaton over a larger alphabet; the new letters have no transitions.
    pub fn extend_alphabet<S: AsRef<str>>(&self, extra: &[S]) -> Result<Nfa> {
        let alphabet = self.alphabet.extended(extra)?;
        let remap: Vec<Letter> = self
            .alphabet
            .symbols()
            .iter()
            .map(|s| alphabet.letter(s.as_str()).expect("superset"))
            .collect();
        Ok(Self::from_indexed(
            self.names.clone(),
            alphabet,
            self.transitions().map(|(p, a, q)| (p, remap[a], q)),
            self.initial.iter().copied(),
            self.accepting(),
        ))
    }

    /// Same automaton with a different set of initial states.
    pub fn with_initial(&self, initial: impl IntoIterator<Item = StateId>) -> Nfa {
        let mut copy = self.clone();
        copy.initial = initial.into_iter().collect();
        copy.initial.sort_unstable();
        copy.initial.dedup();
        copy
    }

    pub(crate) fn same_alphabet(&self, other: &Nfa) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

/// Complete deterministic automaton: one initial state and exactly one
/// successor per state and letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa(Nfa);

impl Dfa {
    pub fn initial_state(&self) -> StateId {
        self.0.initial[0]
    }

    #[inline]
    pub fn next(&self, q: StateId, a: Letter) -> StateId {
        self.0.delta[q][a][0]
    }

    pub fn run(&self, q: StateId, word: &[Letter]) -> StateId {
        word.iter().fold(q, |q, &a| self.next(q, a))
    }

    pub fn as_nfa(&self) -> &Nfa {
        &self.0
    }

    pub fn into_nfa(self) -> Nfa {
        self.0
    }

    /// Same DFA started in `q`: the quotient of the language by any word leading to `q`.
    pub fn with_initial_state(&self, q: StateId) -> Dfa {
        Dfa(self.0.with_initial([q]))
    }
}

impl TryFrom<Nfa> for Dfa {
    type Error = Error;

    fn try_from(nfa: Nfa) -> Result<Self> {
        if nfa.initial.len() != 1 {
            return Err(Error::NotDeterministic(format!("{} initial states", nfa.initial.len())));
        }
        for q in nfa.states() {
            for a in nfa.alphabet.letters() {
                match nfa.delta[q][a].len() {
                    1 => {}
                    0 => {
                        return Err(Error::NotDeterministic(format!(
                            "no transition from `{}` on `{}`",
                            nfa.names[q],
                            nfa.alphabet.symbol(a)
                        )))
                    }
                    _ => {
                        return Err(Error::DuplicateTransition {
                            state: nfa.names[q].clone(),
                            symbol: nfa.alphabet.symbol(a).to_string(),
                        })
                    }
                }
            }
        }
        Ok(Dfa(nfa))
    }
}

impl Deref for Dfa {
    type Target = Nfa;

    fn deref(&self) -> &Nfa {
        &self.0
    }
}

impl AsRef<Nfa> for Dfa {
    fn as_ref(&self) -> &Nfa {
        &self.0
    }
}

impl AsRef<Nfa> for Nfa {
    fn as_ref(&self) -> &Nfa {
        self
    }
}

/// Shorthand for building test and example automata from string triples.
pub fn edges<'a>(triples: &[(&'a str, &'a str, &'a str)]) -> Vec<(String, String, String)> {
    triples
        .iter()
        .map(|&(p, a, q)| (p.to_string(), a.to_string(), q.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Nfa {
        Nfa::from_named(
            ["s1", "s0"],
            ["b", "a"],
            edges(&[("s0", "a", "s1"), ("s1", "b", "s1"), ("s0", "a", "s0")]),
            ["s0"],
            ["s1"],
        )
        .unwrap()
    }

    #[test]
    fn states_and_letters_are_sorted() {
        let a = sample();
        assert_eq!(a.state_names(), &["s0".to_string(), "s1".to_string()]);
        assert_eq!(a.successors(0, 0), &[0, 1]);
        assert_eq!(
            a.transitions().collect::<Vec<_>>(),
            vec![(0, 0, 0), (0, 0, 1), (1, 1, 1)]
        );
    }

    #[test]
    fn membership_simulates_sets() {
        let a = sample();
        assert!(a.membership(&["a", "b", "b"]).unwrap());
        assert!(a.membership(&["a", "a"]).unwrap());
        assert!(!a.membership::<&str>(&[]).unwrap());
        assert!(!a.membership(&["b"]).unwrap());
        assert_eq!(a.membership(&["c"]), Err(Error::UndeclaredSymbol("c".into())));
    }

    #[test]
    fn reject_bad_references() {
        let bad = Nfa::from_named(["p"], ["a"], edges(&[("p", "a", "q")]), ["p"], ["p"]);
        assert_eq!(bad, Err(Error::UndeclaredState("q".into())));
        let bad = Nfa::from_named(["p"], ["a"], edges(&[("p", "b", "p")]), ["p"], ["p"]);
        assert_eq!(bad, Err(Error::UndeclaredSymbol("b".into())));
    }

    #[test]
    fn dfa_requires_totality() {
        assert!(Dfa::try_from(sample()).is_err());
        let total = Nfa::from_named(["p"], ["a"], edges(&[("p", "a", "p")]), ["p"], Vec::<&str>::new()).unwrap();
        let d = Dfa::try_from(total).unwrap();
        assert_eq!(d.next(0, 0), 0);
    }

    #[test]
    fn extending_alphabet_keeps_language() {
        let a = sample();
        let ext = a.extend_alphabet(&["0"]).unwrap();
        assert_eq!(ext.alphabet().len(), 3);
        assert!(ext.membership(&["a", "b"]).unwrap());
        assert!(!ext.membership(&["0"]).unwrap());
    }
}
