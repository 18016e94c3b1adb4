use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("missing {0}")]
    Missing(&'static str),

    #[error("invalid symbol `{0}`")]
    InvalidSymbol(String),

    #[error("invalid state name `{0}`")]
    InvalidStateName(String),

    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },

    #[error("undeclared state `{0}`")]
    UndeclaredState(String),

    #[error("undeclared symbol `{0}`")]
    UndeclaredSymbol(String),

    #[error("duplicate transition from `{state}` on `{symbol}` in a deterministic automaton")]
    DuplicateTransition { state: String, symbol: String },

    #[error("not a DFA: {0}")]
    NotDeterministic(String),

    #[error("alphabets differ")]
    AlphabetMismatch,

    #[error("automaton is not minimal: {states} states but the minimal DFA has {minimal}")]
    NotMinimal { states: usize, minimal: usize },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("circuit line {line}: {message}")]
    Circuit { line: usize, message: String },

    #[error("constructed automaton is not minimal ({states} states, minimal {minimal})")]
    MinimalityViolation { states: usize, minimal: usize },

    #[error("search budget of {0} nodes exceeded")]
    CapExceeded(usize),
}
