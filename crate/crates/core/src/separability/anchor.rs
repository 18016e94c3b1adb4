use serde::Serialize;

use crate::automata::graph::{coreach_within, reach_within};
use crate::automata::{Nfa, StateId};
use crate::bitset::LetterSet;
use crate::error::Result;

/// A pair of states, one per automaton, that both lie on cycles whose letters
/// are exactly `gamma`, with `gamma` as large as possible for that pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PumpAnchor {
    pub r_a: StateId,
    pub r_b: StateId,
    #[serde(skip)]
    pub gamma: LetterSet,
}

/// Letters on transitions internal to the strongly connected component of `r`
/// in the `gamma`-restricted graph.
pub(crate) fn component_letters(nfa: &Nfa, gamma: &LetterSet, r: StateId) -> LetterSet {
    let comp = reach_within(nfa, gamma, r).intersection(&coreach_within(nfa, gamma, r));
    let mut letters = LetterSet::new();
    for p in comp.iter() {
        for a in gamma.iter() {
            if !letters.contains(a) && nfa.successors(p, a).iter().any(|&q| comp.contains(q)) {
                letters.insert(a);
            }
        }
    }
    letters
}

/// Greatest fixpoint of `Γ ↦ letters(SCC_A(r_a) in A|Γ) ∩ letters(SCC_B(r_b) in B|Γ)`
/// from `Γ = Σ`.
///
/// A nonempty result is an exact cycle alphabet at `r_a` in `a` and at `r_b`
/// in `b`, and it contains every alphabet that is one at both. The iteration
/// only shrinks, so it stops after at most `|Σ|` rounds.
pub fn maximal_common_cycle_alphabet(a: &Nfa, b: &Nfa, r_a: StateId, r_b: StateId) -> Result<LetterSet> {
    a.same_alphabet(b)?;
    let mut gamma = a.alphabet().full();
    loop {
        let next = component_letters(a, &gamma, r_a).intersection(&component_letters(b, &gamma, r_b));
        if next == gamma {
            return Ok(gamma);
        }
        gamma = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::edges;

    #[test]
    fn shrinks_to_common_loops() {
        let a = Nfa::from_named(["r"], ["a", "b"], edges(&[("r", "a", "r")]), ["r"], ["r"]).unwrap();
        let b = Nfa::from_named(
            ["r"],
            ["a", "b"],
            edges(&[("r", "a", "r"), ("r", "b", "r")]),
            ["r"],
            ["r"],
        )
        .unwrap();
        let gamma = maximal_common_cycle_alphabet(&a, &b, 0, 0).unwrap();
        assert_eq!(a.alphabet().decode_set(&gamma), vec!["a"]);
    }

    #[test]
    fn acyclic_anchor_is_empty() {
        let a = Nfa::from_named(["0", "1"], ["a"], edges(&[("0", "a", "1")]), ["0"], ["1"]).unwrap();
        let b = Nfa::from_named(["r"], ["a"], edges(&[("r", "a", "r")]), ["r"], ["r"]).unwrap();
        assert!(maximal_common_cycle_alphabet(&a, &b, 0, 0).unwrap().is_empty());
    }

    #[test]
    fn alternating_cycles_share_both_letters() {
        let ab = Nfa::from_named(
            ["0", "1"],
            ["a", "b"],
            edges(&[("0", "a", "1"), ("1", "b", "0")]),
            ["0"],
            ["0"],
        )
        .unwrap();
        let ba = Nfa::from_named(
            ["0", "1"],
            ["a", "b"],
            edges(&[("0", "b", "1"), ("1", "a", "0")]),
            ["0"],
            ["0"],
        )
        .unwrap();
        let gamma = maximal_common_cycle_alphabet(&ab, &ba, 0, 0).unwrap();
        assert_eq!(gamma, ab.alphabet().full());
    }
}
