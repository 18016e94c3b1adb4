use std::collections::HashMap;

use crate::automata::nfa::{Dfa, Nfa, StateId};
use crate::bitset::BitSet;

fn subset_name(nfa: &Nfa, set: &BitSet) -> String {
    let members: Vec<&str> = set.iter().map(|q| nfa.state_name(q)).collect();
    format!("{{{}}}", members.join(","))
}

/// Subset construction restricted to reachable subsets. The result is complete;
/// the empty subset, when reachable, is the sink. States are named `{p,q,..}`.
pub fn subset_construction(nfa: &Nfa) -> Dfa {
    let sigma = nfa.alphabet().len();
    let start = nfa.initial_set();
    let mut index: HashMap<BitSet, StateId> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut edges = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        for a in 0..sigma {
            let next = nfa.step(&subsets[i], a);
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    subsets.push(next.clone());
                    index.insert(next, subsets.len() - 1);
                    subsets.len() - 1
                }
            };
            edges.push((i, a, j));
        }
        i += 1;
    }
    let accepting: Vec<StateId> = subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| s.iter().any(|q| nfa.is_accepting(q)))
        .map(|(i, _)| i)
        .collect();
    let names = subsets.iter().map(|s| subset_name(nfa, s)).collect();
    let out = Nfa::from_indexed(names, nfa.alphabet().clone(), edges, [0], accepting);
    Dfa::try_from(out).expect("subset construction yields a complete DFA")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::nfa::edges;

    #[test]
    fn contains_a_determinizes_to_two_states() {
        // Σ*aΣ* with a self-looping initial state
        let nfa = Nfa::from_named(
            ["0", "1"],
            ["a", "b"],
            edges(&[
                ("0", "a", "0"),
                ("0", "b", "0"),
                ("0", "a", "1"),
                ("1", "a", "1"),
                ("1", "b", "1"),
            ]),
            ["0"],
            ["1"],
        )
        .unwrap();
        let dfa = subset_construction(&nfa);
        assert_eq!(dfa.num_states(), 2);
        assert_eq!(dfa.state_names(), &["{0,1}".to_string(), "{0}".to_string()]);
    }

    #[test]
    fn union_of_stars_has_four_subsets() {
        // a* ∪ b* with two initial components
        let nfa = Nfa::from_named(
            ["p", "q"],
            ["a", "b"],
            edges(&[("p", "a", "p"), ("q", "b", "q")]),
            ["p", "q"],
            ["p", "q"],
        )
        .unwrap();
        let dfa = subset_construction(&nfa);
        let mut names = dfa.state_names().to_vec();
        names.sort();
        assert_eq!(names, vec!["{p,q}", "{p}", "{q}", "{}"]);
        assert!(dfa.is_complete());
    }
}
