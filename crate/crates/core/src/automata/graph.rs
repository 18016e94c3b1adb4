//! Graph algorithms on the transition graph restricted to a sub-alphabet.

use std::collections::VecDeque;

use serde::Serialize;

use crate::automata::nfa::{Dfa, Nfa, StateId};
use crate::automata::symbol::{Letter, Word};
use crate::bitset::{BitSet, LetterSet};

/// Reflexive-transitive reachability `p ⇝ q` inside a sub-alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachRelation {
    rows: Vec<BitSet>,
}

impl ReachRelation {
    pub fn contains(&self, p: StateId, q: StateId) -> bool {
        self.rows[p].contains(q)
    }

    pub fn reachable_from(&self, p: StateId) -> &BitSet {
        &self.rows[p]
    }

    /// Inclusion of relations over the same state set.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }
}

/// Forward closure from `from` using only letters of `gamma` (includes `from`).
pub fn reach_within(nfa: &Nfa, gamma: &LetterSet, from: StateId) -> BitSet {
    let mut seen = BitSet::new();
    seen.insert(from);
    let mut queue = VecDeque::from([from]);
    while let Some(q) = queue.pop_front() {
        for a in gamma.iter() {
            for &p in nfa.successors(q, a) {
                if seen.insert(p) {
                    queue.push_back(p);
                }
            }
        }
    }
    seen
}

/// States that reach `to` using only letters of `gamma` (includes `to`).
pub fn coreach_within(nfa: &Nfa, gamma: &LetterSet, to: StateId) -> BitSet {
    let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); nfa.num_states()];
    for (p, a, q) in nfa.transitions() {
        if gamma.contains(a) {
            preds[q].push(p);
        }
    }
    let mut seen = BitSet::new();
    seen.insert(to);
    let mut queue = VecDeque::from([to]);
    while let Some(q) = queue.pop_front() {
        for &p in &preds[q] {
            if seen.insert(p) {
                queue.push_back(p);
            }
        }
    }
    seen
}

pub fn restricted_reach(nfa: &Nfa, gamma: &LetterSet) -> ReachRelation {
    ReachRelation {
        rows: nfa.states().map(|p| reach_within(nfa, gamma, p)).collect(),
    }
}

/// A shortest word over `gamma` leading from `from` to `to`, staying inside `within`
/// when given.
pub fn shortest_path(
    nfa: &Nfa,
    gamma: &LetterSet,
    from: StateId,
    to: StateId,
    within: Option<&BitSet>,
) -> Option<Word> {
    let allowed = |q: StateId| within.is_none_or(|s| s.contains(q));
    let mut parent: Vec<Option<(StateId, Letter)>> = vec![None; nfa.num_states()];
    let mut seen = vec![false; nfa.num_states()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(q) = queue.pop_front() {
        if q == to {
            let mut word = Vec::new();
            let mut cur = q;
            while let Some((p, a)) = parent[cur] {
                word.push(a);
                cur = p;
            }
            word.reverse();
            return Some(word);
        }
        for a in gamma.iter() {
            for &p in nfa.successors(q, a) {
                if !seen[p] && allowed(p) {
                    seen[p] = true;
                    parent[p] = Some((q, a));
                    queue.push_back(p);
                }
            }
        }
    }
    None
}

/// Strongly connected component of the restricted graph, with the letters of
/// the transitions internal to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub states: Vec<StateId>,
    #[serde(skip)]
    pub letters: LetterSet,
}

impl Component {
    pub fn contains(&self, q: StateId) -> bool {
        self.states.binary_search(&q).is_ok()
    }

    pub fn state_set(&self) -> BitSet {
        self.states.iter().copied().collect()
    }
}

/// Tarjan's algorithm on the `gamma`-restricted graph. Components come out in
/// topological order (sources first), each with ascending states.
pub fn scc_decomposition(nfa: &Nfa, gamma: &LetterSet) -> Vec<Component> {
    let n = nfa.num_states();
    let adj: Vec<Vec<StateId>> = nfa
        .states()
        .map(|q| {
            let mut succ: Vec<StateId> = gamma
                .iter()
                .flat_map(|a| nfa.successors(q, a).iter().copied())
                .collect();
            succ.sort_unstable();
            succ.dedup();
            succ
        })
        .collect();

    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp_of = vec![UNVISITED; n];
    let mut groups: Vec<Vec<StateId>> = Vec::new();
    let mut counter = 0;

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        let mut call: Vec<(StateId, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&(v, next)) = call.last() {
            if next < adj[v].len() {
                let w = adj[v][next];
                call.last_mut().expect("frame").1 += 1;
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(u, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut group = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp_of[w] = groups.len();
                        group.push(w);
                        if w == v {
                            break;
                        }
                    }
                    group.sort_unstable();
                    groups.push(group);
                }
            }
        }
    }

    // Tarjan emits sinks first.
    let total = groups.len();
    let mut letters = vec![LetterSet::new(); total];
    for (p, a, q) in nfa.transitions() {
        if gamma.contains(a) && comp_of[p] == comp_of[q] {
            letters[comp_of[p]].insert(a);
        }
    }
    groups
        .into_iter()
        .zip(letters)
        .rev()
        .map(|(states, letters)| Component { states, letters })
        .collect()
}

/// A component of the `gamma`-restricted graph whose internal letters are
/// exactly `gamma`, i.e. one carrying a cycle over `gamma`. With
/// `require_initial_and_final`, the component must also hold an initial and an
/// accepting state.
pub fn cycle_over_alphabet(nfa: &Nfa, gamma: &LetterSet, require_initial_and_final: bool) -> Option<Component> {
    scc_decomposition(nfa, gamma).into_iter().find(|c| {
        &c.letters == gamma
            && (!require_initial_and_final
                || (nfa.initial().iter().any(|&q| c.contains(q)) && c.states.iter().any(|&q| nfa.is_accepting(q))))
    })
}

/// A closed walk from `anchor` back to itself that uses every letter of
/// `gamma` and nothing else, if the component of `anchor` in the `gamma`
/// restriction has exactly those letters.
///
/// The walk repeatedly moves to the nearest transition with a letter not yet
/// used, then returns to `anchor` by a shortest path.
pub fn covering_cycle(nfa: &Nfa, gamma: &LetterSet, anchor: StateId) -> Option<Word> {
    if gamma.is_empty() {
        return None;
    }
    let comp = scc_decomposition(nfa, gamma).into_iter().find(|c| c.contains(anchor))?;
    if &comp.letters != gamma {
        return None;
    }
    let inside = comp.state_set();
    let mut missing = gamma.clone();
    let mut word = Vec::new();
    let mut cur = anchor;
    while !missing.is_empty() {
        let (path, a, next) = nearest_edge(nfa, gamma, &inside, cur, &missing)?;
        word.extend(path);
        word.push(a);
        missing.remove(a);
        cur = next;
    }
    word.extend(shortest_path(nfa, gamma, cur, anchor, Some(&inside))?);
    Some(word)
}

/// A closed walk from `anchor` that contains `pattern` as a subsequence and
/// uses only letters of `gamma`: for each letter of `pattern` in turn it takes
/// the nearest transition with that letter inside the component of `anchor`.
/// Requires the component to carry every letter of `pattern`.
pub fn following_cycle(nfa: &Nfa, gamma: &LetterSet, anchor: StateId, pattern: &[Letter]) -> Option<Word> {
    let comp = scc_decomposition(nfa, gamma).into_iter().find(|c| c.contains(anchor))?;
    let inside = comp.state_set();
    let mut word = Vec::new();
    let mut cur = anchor;
    for &a in pattern {
        if !comp.letters.contains(a) {
            return None;
        }
        let wanted: LetterSet = [a].into_iter().collect();
        let (path, a, next) = nearest_edge(nfa, gamma, &inside, cur, &wanted)?;
        word.extend(path);
        word.push(a);
        cur = next;
    }
    word.extend(shortest_path(nfa, gamma, cur, anchor, Some(&inside))?);
    Some(word)
}

/// BFS from `from` inside `within` for the closest transition `p -a-> q` with
/// `a ∈ wanted` and `q ∈ within`; returns the path to `p`, `a` and `q`.
fn nearest_edge(
    nfa: &Nfa,
    gamma: &LetterSet,
    within: &BitSet,
    from: StateId,
    wanted: &LetterSet,
) -> Option<(Word, Letter, StateId)> {
    let mut parent: Vec<Option<(StateId, Letter)>> = vec![None; nfa.num_states()];
    let mut seen = vec![false; nfa.num_states()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(p) = queue.pop_front() {
        for a in wanted.iter() {
            if let Some(&q) = nfa.successors(p, a).iter().find(|&&q| within.contains(q)) {
                let mut path = Vec::new();
                let mut cur = p;
                while let Some((prev, b)) = parent[cur] {
                    path.push(b);
                    cur = prev;
                }
                path.reverse();
                return Some((path, a, q));
            }
        }
        for a in gamma.iter() {
            for &q in nfa.successors(p, a) {
                if !seen[q] && within.contains(q) {
                    seen[q] = true;
                    parent[q] = Some((p, a));
                    queue.push_back(q);
                }
            }
        }
    }
    None
}

/// `Σ(q)`: letters labelling a self-loop at `q`.
pub fn self_loop_letters(dfa: &Dfa, q: StateId) -> LetterSet {
    dfa.alphabet().letters().filter(|&a| dfa.next(q, a) == q).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::nfa::edges;
    use crate::automata::symbol::letters_of;

    fn chain() -> Nfa {
        Nfa::from_named(
            ["0", "1", "2"],
            ["a", "b"],
            edges(&[("0", "a", "1"), ("1", "b", "2"), ("0", "b", "2")]),
            ["0"],
            ["2"],
        )
        .unwrap()
    }

    #[test]
    fn empty_gamma_is_identity() {
        let a = chain();
        let r = restricted_reach(&a, &LetterSet::new());
        for p in a.states() {
            for q in a.states() {
                assert_eq!(r.contains(p, q), p == q);
            }
        }
    }

    #[test]
    fn full_gamma_is_reachability() {
        let a = chain();
        let r = restricted_reach(&a, &a.alphabet().full());
        assert!(r.contains(0, 2) && r.contains(0, 1) && !r.contains(2, 0));
    }

    #[test]
    fn dag_has_singleton_components() {
        let a = chain();
        let comps = scc_decomposition(&a, &a.alphabet().full());
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.states.len() == 1 && c.letters.is_empty()));
        // topological: 0 before 1 before 2
        let order: Vec<_> = comps.iter().map(|c| c.states[0]).collect();
        assert_eq!(order, vec![0, 1, 2]);
    }

    #[test]
    fn self_loop_component() {
        let a = Nfa::from_named(["q"], ["a"], edges(&[("q", "a", "q")]), ["q"], ["q"]).unwrap();
        let gamma = a.alphabet().full();
        let comps = scc_decomposition(&a, &gamma);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].letters, gamma);
        let c = cycle_over_alphabet(&a, &gamma, true).unwrap();
        assert_eq!(c.states, vec![0]);
        assert_eq!(covering_cycle(&a, &gamma, 0), Some(vec![0]));
    }

    #[test]
    fn no_cycle_over_missing_letter() {
        let a = Nfa::from_named(["q"], ["a", "b"], edges(&[("q", "a", "q")]), ["q"], ["q"]).unwrap();
        assert!(cycle_over_alphabet(&a, &a.alphabet().full(), false).is_none());
    }

    #[test]
    fn covering_cycle_uses_exactly_gamma() {
        let a = Nfa::from_named(
            ["0", "1", "2"],
            ["a", "b", "c"],
            edges(&[("0", "a", "1"), ("1", "b", "0"), ("1", "c", "2"), ("2", "a", "0")]),
            ["0"],
            ["0"],
        )
        .unwrap();
        let gamma = a.alphabet().full();
        let c = covering_cycle(&a, &gamma, 0).unwrap();
        assert_eq!(letters_of(&c), gamma);
        assert!(a.read_from(0, &c).contains(0));
        let ab = a.alphabet().letter_set(&["a", "b"]).unwrap();
        let c = covering_cycle(&a, &ab, 1).unwrap();
        assert_eq!(letters_of(&c), ab);
        assert!(a.read_from(1, &c).contains(1));
    }
}
