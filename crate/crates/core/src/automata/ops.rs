use std::collections::{HashMap, VecDeque};

use crate::automata::determinize::subset_construction;
use crate::automata::minimize::{isomorphic, minimize};
use crate::automata::nfa::{Nfa, StateId};
use crate::automata::symbol::{Letter, Word};
use crate::error::Result;

/// Result of [`trim_with_map`]: the trimmed automaton and, for each of its
/// states, the corresponding state of the original.
#[derive(Clone, Debug)]
pub struct Trimmed {
    pub nfa: Nfa,
    pub origin: Vec<StateId>,
}

impl Trimmed {
    /// State of the trimmed automaton for an original state, if it survived.
    pub fn image(&self, original: StateId) -> Option<StateId> {
        self.origin.binary_search(&original).ok()
    }
}

fn forward_closure(nfa: &Nfa, seeds: impl IntoIterator<Item = StateId>) -> Vec<bool> {
    let mut seen = vec![false; nfa.num_states()];
    let mut queue = VecDeque::new();
    for q in seeds {
        if !seen[q] {
            seen[q] = true;
            queue.push_back(q);
        }
    }
    while let Some(q) = queue.pop_front() {
        for a in nfa.alphabet().letters() {
            for &p in nfa.successors(q, a) {
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
    }
    seen
}

fn backward_closure(nfa: &Nfa) -> Vec<bool> {
    let mut preds = vec![Vec::new(); nfa.num_states()];
    for (p, _, q) in nfa.transitions() {
        preds[q].push(p);
    }
    let mut seen = vec![false; nfa.num_states()];
    let mut queue: VecDeque<StateId> = nfa.accepting().collect();
    for &q in &queue {
        seen[q] = true;
    }
    while let Some(q) = queue.pop_front() {
        for &p in &preds[q] {
            if !seen[p] {
                seen[p] = true;
                queue.push_back(p);
            }
        }
    }
    seen
}

/// Keeps exactly the states that are reachable and co-reachable, remembering
/// where each came from. Since names are preserved and already sorted, the
/// origin map is ascending.
pub fn trim_with_map(nfa: &Nfa) -> Trimmed {
    let fwd = forward_closure(nfa, nfa.initial().iter().copied());
    let bwd = backward_closure(nfa);
    let origin: Vec<StateId> = nfa.states().filter(|&q| fwd[q] && bwd[q]).collect();
    let mut image = vec![usize::MAX; nfa.num_states()];
    for (i, &q) in origin.iter().enumerate() {
        image[q] = i;
    }
    let keep = |q: StateId| image[q] != usize::MAX;
    let trimmed = Nfa::from_indexed(
        origin.iter().map(|&q| nfa.state_name(q).to_string()).collect(),
        nfa.alphabet().clone(),
        nfa.transitions()
            .filter(|&(p, _, q)| keep(p) && keep(q))
            .map(|(p, a, q)| (image[p], a, image[q]))
            .collect::<Vec<_>>(),
        nfa.initial()
            .iter()
            .copied()
            .filter(|&q| keep(q))
            .map(|q| image[q])
            .collect::<Vec<_>>(),
        nfa.accepting()
            .filter(|&q| keep(q))
            .map(|q| image[q])
            .collect::<Vec<_>>(),
    );
    Trimmed { nfa: trimmed, origin }
}

/// Useful part only; may have zero states when the language is empty.
pub fn trim(nfa: &Nfa) -> Nfa {
    trim_with_map(nfa).nfa
}

/// Synchronized product accepting `L(a) ∩ L(b)`, restricted to reachable pairs.
/// Pair states are named `(p,q)`.
pub fn product_intersection(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    a.same_alphabet(b)?;
    let mut index: HashMap<(StateId, StateId), usize> = HashMap::new();
    let mut pairs = Vec::new();
    let mut queue = VecDeque::new();
    for &p in a.initial() {
        for &q in b.initial() {
            index.insert((p, q), pairs.len());
            pairs.push((p, q));
            queue.push_back((p, q));
        }
    }
    let mut edges = Vec::new();
    while let Some((p, q)) = queue.pop_front() {
        let from = index[&(p, q)];
        for l in a.alphabet().letters() {
            for &p2 in a.successors(p, l) {
                for &q2 in b.successors(q, l) {
                    let to = *index.entry((p2, q2)).or_insert_with(|| {
                        pairs.push((p2, q2));
                        queue.push_back((p2, q2));
                        pairs.len() - 1
                    });
                    edges.push((from, l, to));
                }
            }
        }
    }
    let initial: Vec<usize> = (0..index.len())
        .filter(|&i| a.initial().contains(&pairs[i].0) && b.initial().contains(&pairs[i].1))
        .collect();
    let accepting: Vec<usize> = (0..pairs.len())
        .filter(|&i| a.is_accepting(pairs[i].0) && b.is_accepting(pairs[i].1))
        .collect();
    let names = pairs
        .iter()
        .map(|&(p, q)| format!("({},{})", a.state_name(p), b.state_name(q)))
        .collect();
    Ok(Nfa::from_indexed(
        names,
        a.alphabet().clone(),
        edges,
        initial,
        accepting,
    ))
}

/// A shortest accepted word, if the language is nonempty.
pub fn shortest_accepted(nfa: &Nfa) -> Option<Word> {
    let mut parent: Vec<Option<(StateId, Letter)>> = vec![None; nfa.num_states()];
    let mut seen = vec![false; nfa.num_states()];
    let mut queue = VecDeque::new();
    for &q in nfa.initial() {
        seen[q] = true;
        queue.push_back(q);
    }
    while let Some(q) = queue.pop_front() {
        if nfa.is_accepting(q) {
            let mut word = Vec::new();
            let mut cur = q;
            while let Some((p, a)) = parent[cur] {
                word.push(a);
                cur = p;
            }
            word.reverse();
            return Some(word);
        }
        for a in nfa.alphabet().letters() {
            for &p in nfa.successors(q, a) {
                if !seen[p] {
                    seen[p] = true;
                    parent[p] = Some((q, a));
                    queue.push_back(p);
                }
            }
        }
    }
    None
}

pub fn is_empty_language(nfa: &Nfa) -> bool {
    shortest_accepted(nfa).is_none()
}

/// Language equality, via isomorphism of the minimal DFAs.
pub fn equivalent(a: &Nfa, b: &Nfa) -> Result<bool> {
    a.same_alphabet(b)?;
    Ok(isomorphic(
        &minimize(&subset_construction(a)),
        &minimize(&subset_construction(b)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::nfa::{edges, Dfa};
    use crate::error::Error;

    fn plus(letter: &str) -> Nfa {
        Nfa::from_named(
            ["0", "1"],
            ["a", "b"],
            edges(&[("0", letter, "1"), ("1", letter, "1")]),
            ["0"],
            ["1"],
        )
        .unwrap()
    }

    fn universal() -> Nfa {
        Nfa::from_named(
            ["u"],
            ["a", "b"],
            edges(&[("u", "a", "u"), ("u", "b", "u")]),
            ["u"],
            ["u"],
        )
        .unwrap()
    }

    #[test]
    fn trim_drops_unreachable_and_sink() {
        let nfa = Nfa::from_named(
            ["0", "1", "junk", "sink"],
            ["a", "b"],
            edges(&[
                ("0", "a", "1"),
                ("0", "b", "sink"),
                ("1", "a", "1"),
                ("1", "b", "sink"),
                ("sink", "a", "sink"),
                ("sink", "b", "sink"),
                ("junk", "a", "1"),
            ]),
            ["0"],
            ["1"],
        )
        .unwrap();
        assert!(Dfa::try_from(nfa.clone()).is_err());
        let t = trim_with_map(&nfa);
        assert_eq!(t.nfa.state_names(), &["0".to_string(), "1".to_string()]);
        assert_eq!(t.origin, vec![0, 1]);
        assert!(equivalent(&t.nfa, &nfa).unwrap());
        assert_eq!(trim(&t.nfa), t.nfa);
    }

    #[test]
    fn trim_of_empty_language_has_no_states() {
        let nfa = Nfa::from_named(["0"], ["a"], edges(&[("0", "a", "0")]), ["0"], Vec::<&str>::new()).unwrap();
        assert_eq!(trim(&nfa).num_states(), 0);
    }

    #[test]
    fn product_with_universal_is_identity() {
        let p = product_intersection(&universal(), &plus("a")).unwrap();
        assert!(equivalent(&p, &plus("a")).unwrap());
    }

    #[test]
    fn disjoint_first_letters() {
        let p = product_intersection(&plus("a"), &plus("b")).unwrap();
        assert!(is_empty_language(&p));
        assert_eq!(shortest_accepted(&plus("b")), Some(vec![1]));
    }

    #[test]
    fn equivalence() {
        assert!(equivalent(&plus("a"), &plus("a")).unwrap());
        let empty = Nfa::from_named(["z"], ["a", "b"], Vec::new(), ["z"], Vec::<&str>::new()).unwrap();
        assert!(!equivalent(&universal(), &empty).unwrap());
        let other = Nfa::from_named(["u"], ["a"], Vec::new(), ["u"], ["u"]).unwrap();
        assert_eq!(equivalent(&other, &empty), Err(Error::AlphabetMismatch));
    }
}
