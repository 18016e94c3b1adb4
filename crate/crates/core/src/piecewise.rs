//! Piecewise testability of regular languages.
//!
//! The language of a minimal DFA fails to be piecewise testable exactly when
//! the DFA has a cycle through two or more distinct states, or when some state
//! `p` reaches two distinct states `q ≠ q′` (both different from `p`) by words
//! over `Σ(q) ∩ Σ(q′)`, the letters looping on both of them. NFAs are handled
//! by determinizing and minimizing first, which also takes care of telling
//! apart inequivalent subset states.

use std::collections::VecDeque;

use serde::Serialize;

use crate::automata::graph::{coreach_within, scc_decomposition, shortest_path};
use crate::automata::{letters_of, minimize, self_loop_letters, subset_construction};
use crate::automata::{Dfa, Letter, Nfa, StateId, Word};
use crate::bitset::LetterSet;
use crate::error::{Error, Result};

/// Structural evidence that a minimal DFA does not recognize a piecewise
/// testable language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PtWitness {
    /// States `states[0] -word[0]-> states[1] -> ... -word[m-1]-> states[0]`,
    /// pairwise distinct, at least two of them.
    NontrivialCycle { states: Vec<StateId>, word: Word },
    /// `p -w-> q` and `p -w′-> q′` with `w, w′ ∈ gamma*` and
    /// `gamma = Σ(q) ∩ Σ(q′)`.
    Triple {
        p: StateId,
        q: StateId,
        q_prime: StateId,
        w: Word,
        w_prime: Word,
        gamma: LetterSet,
    },
}

impl PtWitness {
    /// Replays the witness on `dfa`.
    pub fn validate(&self, dfa: &Dfa) -> Result<()> {
        let fail = |msg: &str| Err(Error::InvalidWitness(msg.to_string()));
        match self {
            PtWitness::NontrivialCycle { states, word } => {
                if states.len() < 2 || states.len() != word.len() {
                    return fail("cycle needs at least two states and one letter per step");
                }
                let mut sorted = states.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != states.len() {
                    return fail("cycle states repeat");
                }
                for (i, (&q, &a)) in states.iter().zip(word).enumerate() {
                    if dfa.next(q, a) != states[(i + 1) % states.len()] {
                        return fail("cycle does not replay");
                    }
                }
                Ok(())
            }
            PtWitness::Triple {
                p,
                q,
                q_prime,
                w,
                w_prime,
                gamma,
            } => {
                if p == q || p == q_prime || q == q_prime {
                    return fail("triple states are not pairwise distinct");
                }
                let loops = self_loop_letters(dfa, *q).intersection(&self_loop_letters(dfa, *q_prime));
                if &loops != gamma {
                    return fail("gamma differs from the common self-loop letters");
                }
                if !letters_of(w).union(&letters_of(w_prime)).is_subset(gamma) {
                    return fail("words leave gamma");
                }
                if dfa.run(*p, w) != *q || dfa.run(*p, w_prime) != *q_prime {
                    return fail("paths do not replay");
                }
                Ok(())
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PtWitness::NontrivialCycle { .. } => "nontrivial_cycle",
            PtWitness::Triple { .. } => "triple",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtVerdict {
    pub is_pt: bool,
    /// Present iff `is_pt` is false.
    pub witness: Option<PtWitness>,
    /// The automaton the witness refers to.
    pub minimal_dfa: Dfa,
}

/// Which characterization fired, for reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    NontrivialCycle,
    Triple,
}

impl PtVerdict {
    pub fn condition(&self) -> Option<Condition> {
        self.witness.as_ref().map(|w| match w {
            PtWitness::NontrivialCycle { .. } => Condition::NontrivialCycle,
            PtWitness::Triple { .. } => Condition::Triple,
        })
    }
}

/// A cycle through at least two distinct states, ignoring self-loops.
pub fn condition1_nontrivial_cycle(dfa: &Dfa) -> Option<PtWitness> {
    let comps = scc_decomposition(dfa, &dfa.alphabet().full());
    let comp = comps.iter().find(|c| c.states.len() >= 2)?;
    let inside = comp.state_set();
    let start = comp.states[0];
    let letters = dfa.alphabet().letters();

    // BFS from `start` inside the component; the first state with an edge back
    // to `start` closes a shortest cycle through it.
    let mut parent: Vec<Option<(StateId, Letter)>> = vec![None; dfa.num_states()];
    let mut seen = vec![false; dfa.num_states()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if x != start {
            if let Some(back) = letters.clone().find(|&a| dfa.next(x, a) == start) {
                let mut states = vec![x];
                let mut word = vec![back];
                let mut cur = x;
                while let Some((prev, a)) = parent[cur] {
                    states.push(prev);
                    word.push(a);
                    cur = prev;
                }
                states.reverse();
                // word holds [back, a_k, ..., a_1]; rotate to [a_1, ..., a_k, back]
                word.reverse();
                return Some(PtWitness::NontrivialCycle { states, word });
            }
        }
        for a in letters.clone() {
            let y = dfa.next(x, a);
            if !seen[y] && inside.contains(y) {
                seen[y] = true;
                parent[y] = Some((x, a));
                queue.push_back(y);
            }
        }
    }
    unreachable!("a component with two states has a cycle through each of them")
}

/// Three distinct states `p, q, q′` with `q, q′` reachable from `p` over the
/// letters looping on both. Pairs `{q, q′}` are scanned in canonical order and
/// words are shortest paths.
pub fn condition2_triple(dfa: &Dfa) -> Option<PtWitness> {
    let loops: Vec<LetterSet> = dfa.states().map(|q| self_loop_letters(dfa, q)).collect();
    for q in dfa.states() {
        for q_prime in q + 1..dfa.num_states() {
            let gamma = loops[q].intersection(&loops[q_prime]);
            if gamma.is_empty() {
                continue;
            }
            let to_q = coreach_within(dfa, &gamma, q);
            let to_q_prime = coreach_within(dfa, &gamma, q_prime);
            let p = to_q.intersection(&to_q_prime).iter().find(|&p| p != q && p != q_prime);
            if let Some(p) = p {
                let w = shortest_path(dfa, &gamma, p, q, None).expect("p reaches q");
                let w_prime = shortest_path(dfa, &gamma, p, q_prime, None).expect("p reaches q′");
                return Some(PtWitness::Triple {
                    p,
                    q,
                    q_prime,
                    w,
                    w_prime,
                    gamma,
                });
            }
        }
    }
    None
}

/// Decides piecewise testability of a minimal DFA. Non-minimal input is
/// rejected rather than silently minimized.
pub fn is_pt_dfa(dfa: &Dfa) -> Result<PtVerdict> {
    let minimal = minimize(dfa).num_states();
    if minimal != dfa.num_states() {
        return Err(Error::NotMinimal {
            states: dfa.num_states(),
            minimal,
        });
    }
    let witness = condition1_nontrivial_cycle(dfa).or_else(|| condition2_triple(dfa));
    Ok(PtVerdict {
        is_pt: witness.is_none(),
        witness,
        minimal_dfa: dfa.clone(),
    })
}

/// Decides piecewise testability of an NFA language via its minimal DFA.
pub fn is_pt_nfa(nfa: &Nfa) -> PtVerdict {
    is_pt_dfa(&minimize(&subset_construction(nfa))).expect("minimized input")
}
