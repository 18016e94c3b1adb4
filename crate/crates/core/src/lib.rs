//! Decision procedures for piecewise testable languages over finite automata.
//!
//! * [`piecewise`] decides whether the language of a DFA or NFA is piecewise
//!   testable and explains a negative answer with a structural witness.
//! * [`separability`] decides whether two regular languages can be separated
//!   by a piecewise testable language, returning a pumping pattern that
//!   generates arbitrarily high towers when they cannot.
//! * [`oracles`] holds brute-force machinery (subsequence profiles, bounded
//!   tower search, k-PT separator synthesis) used to cross-check both.
//! * [`mcvp`] turns monotone circuits into separability instances whose answer
//!   is known from evaluating the circuit.

pub mod automata;
pub mod bitset;
pub mod error;
pub mod mcvp;
pub mod oracles;
pub mod piecewise;
pub mod report;
pub mod separability;

pub use automata::{Alphabet, Dfa, Letter, Nfa, StateId, Symbol, Word};
pub use bitset::{BitSet, LetterSet};
pub use error::{Error, Result};
