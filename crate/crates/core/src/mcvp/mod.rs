//! Monotone circuits and their reduction to separability of two DFAs: the
//! languages of `A′` (or its minimal variant `A`) and `B` are inseparable by
//! piecewise testable languages iff the circuit evaluates to 1.

mod circuit;
mod reduction;

pub use circuit::{evaluate, parse_circuit, random_circuit, Circuit, Gate, GateIndex, GateKind, Operand};
pub use reduction::{
    build_a_minimal, build_a_prime, build_b, fresh_symbols, proof_gamma, reduction_alphabet, ReductionOutput, HUB_B,
    INITIAL_A, INITIAL_B, SINK, STATE_FALSE, STATE_TRUE,
};
