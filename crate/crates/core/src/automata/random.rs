//! Seeded random automata for property tests and benchmarks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automata::nfa::{Dfa, Nfa};
use crate::automata::symbol::Alphabet;

/// Random NFA over letters `a`, `b`, `c`, ... with states `0..states`.
///
/// Each possible transition is present with probability `density`; every state
/// is initial with probability 0.3 (state `0` always is) and accepting with
/// probability 0.4.
pub fn random_nfa(states: usize, letters: usize, density: f64, seed: u64) -> Nfa {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = letter_names(letters);
    let alphabet = Alphabet::new(sigma.iter().cloned()).expect("distinct letters");
    let names: Vec<String> = (0..states).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for p in 0..states {
        for a in 0..letters {
            for q in 0..states {
                if rng.gen_bool(density) {
                    edges.push((p, a, q));
                }
            }
        }
    }
    let initial: Vec<usize> = (0..states).filter(|&q| q == 0 || rng.gen_bool(0.3)).collect();
    let accepting: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.4)).collect();
    Nfa::from_indexed(names, alphabet, edges, initial, accepting)
}

/// Random complete DFA with states `0..states`.
pub fn random_dfa(states: usize, letters: usize, seed: u64) -> Dfa {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = Alphabet::new(letter_names(letters)).expect("distinct letters");
    let names: Vec<String> = (0..states).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for p in 0..states {
        for a in 0..letters {
            edges.push((p, a, rng.gen_range(0..states)));
        }
    }
    let accepting: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::try_from(Nfa::from_indexed(names, alphabet, edges, [0], accepting)).expect("one successor per letter")
}

fn letter_names(letters: usize) -> Vec<String> {
    assert!(letters <= 26);
    (0..letters).map(|i| char::from(b'a' + i as u8).to_string()).collect()
}
