//! Automaton representation, text format and the graph algorithms the
//! decision procedures are built on.

pub mod determinize;
pub mod graph;
pub mod minimize;
pub mod nfa;
pub mod ops;
pub mod random;
pub mod symbol;
pub mod text;

pub use determinize::subset_construction;
pub use graph::{
    covering_cycle, cycle_over_alphabet, following_cycle, restricted_reach, scc_decomposition, self_loop_letters,
    Component, ReachRelation,
};
pub use minimize::{is_minimal, isomorphic, minimize};
pub use nfa::{edges, Dfa, Nfa, StateId};
pub use ops::{equivalent, is_empty_language, product_intersection, shortest_accepted, trim, trim_with_map, Trimmed};
pub use symbol::{letters_of, Alphabet, Letter, Symbol, Word};
pub use text::{parse_automaton, parse_dfa, parse_nfa, ParsedAutomaton};
