use std::collections::BTreeSet;

use crate::automata::{is_minimal, minimize, Alphabet, Dfa, Nfa};
use crate::bitset::LetterSet;
use crate::error::{Error, Result};
use crate::mcvp::circuit::{evaluate, Circuit, GateKind, Operand};

pub const INITIAL_A: &str = "s";
pub const STATE_TRUE: &str = "T";
pub const STATE_FALSE: &str = "F";
pub const INITIAL_B: &str = "q";
pub const HUB_B: &str = "t";
pub const SINK: &str = "sink";

/// The three automata of the reduction and the fresh letters of `a_minimal`.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub a_prime: Dfa,
    pub a_minimal: Dfa,
    pub b: Dfa,
    pub fresh: Vec<String>,
}

impl ReductionOutput {
    pub fn build(c: &Circuit) -> Result<Self> {
        Ok(Self {
            a_prime: build_a_prime(c),
            a_minimal: build_a_minimal(c)?,
            b: build_b(c),
            fresh: fresh_symbols(c),
        })
    }

    /// `b` over the alphabet of `a_minimal`; fresh letters lead to the sink.
    pub fn b_joint(&self, c: &Circuit) -> Dfa {
        build_b_over(c, &self.fresh)
    }
}

/// `{x, y} ∪ {a_i, b_i}`.
pub fn reduction_alphabet(c: &Circuit) -> Alphabet {
    Alphabet::new(base_symbols(c)).expect("distinct symbols")
}

fn base_symbols(c: &Circuit) -> Vec<String> {
    let mut names = vec!["x".to_string(), "y".to_string()];
    for i in 1..=c.len() {
        names.push(format!("a{i}"));
        names.push(format!("b{i}"));
    }
    names
}

/// `f1, ..., f2n`.
pub fn fresh_symbols(c: &Circuit) -> Vec<String> {
    (1..=2 * c.len()).map(|i| format!("f{i}")).collect()
}

fn target(op: Operand) -> String {
    match op {
        Operand::Gate(j) => j.to_string(),
        Operand::Zero => STATE_FALSE.to_string(),
        Operand::One => STATE_TRUE.to_string(),
    }
}

type Edge = (String, String, String);

fn edge(p: impl ToString, a: impl ToString, q: impl ToString) -> Edge {
    (p.to_string(), a.to_string(), q.to_string())
}

/// Adds a non-accepting `sink` and sends every undefined transition to it.
fn complete(states: Vec<String>, symbols: &[String], mut trans: Vec<Edge>, initial: &str, accepting: &[&str]) -> Dfa {
    let defined: BTreeSet<(String, String)> = trans.iter().map(|(p, a, _)| (p.clone(), a.clone())).collect();
    let mut all = states;
    all.push(SINK.to_string());
    for p in &all {
        for a in symbols {
            if !defined.contains(&(p.clone(), a.clone())) {
                trans.push(edge(p, a, SINK));
            }
        }
    }
    let nfa = Nfa::from_named(
        all,
        symbols.iter().cloned(),
        trans,
        [initial],
        accepting.iter().copied(),
    )
    .expect("well-formed reduction automaton");
    Dfa::try_from(nfa).expect("complete and deterministic")
}

fn a_prime_parts(c: &Circuit) -> (Vec<String>, Vec<Edge>) {
    let n = c.len();
    let mut states = vec![INITIAL_A.to_string(), STATE_TRUE.to_string(), STATE_FALSE.to_string()];
    states.extend((1..=n).map(|i| i.to_string()));
    let mut trans = vec![edge(INITIAL_A, "x", n), edge(STATE_TRUE, "y", INITIAL_A)];
    for i in 1..=n {
        let (l, r) = c.operands(i);
        trans.push(edge(i, format!("a{i}"), target(l)));
        trans.push(edge(i, format!("b{i}"), target(r)));
    }
    (states, trans)
}

/// `A′`: gate `i` moves to `ℓ(i)` on `a_i` and to `r(i)` on `b_i`, with the
/// constants 1 and 0 as the accepting states `T` and `F`; `s -x-> n` and
/// `T -y-> s`.
pub fn build_a_prime(c: &Circuit) -> Dfa {
    let (states, trans) = a_prime_parts(c);
    complete(states, &base_symbols(c), trans, INITIAL_A, &[STATE_TRUE, STATE_FALSE])
}

/// `A′` plus one fresh letter per added transition: `s -> i` for `i < n`, then
/// `i -> F` for every gate, then `F -> T`.
pub fn build_a_minimal(c: &Circuit) -> Result<Dfa> {
    let n = c.len();
    let (states, mut trans) = a_prime_parts(c);
    let fresh = fresh_symbols(c);
    let mut letters = fresh.iter();
    for i in 1..n {
        trans.push(edge(INITIAL_A, letters.next().expect("2n letters"), i));
    }
    for i in 1..=n {
        trans.push(edge(i, letters.next().expect("2n letters"), STATE_FALSE));
    }
    trans.push(edge(STATE_FALSE, letters.next().expect("2n letters"), STATE_TRUE));
    let mut symbols = base_symbols(c);
    symbols.extend(fresh);
    let dfa = complete(states, &symbols, trans, INITIAL_A, &[STATE_TRUE, STATE_FALSE]);
    if !is_minimal(&dfa) {
        return Err(Error::MinimalityViolation {
            states: dfa.num_states(),
            minimal: minimize(&dfa).num_states(),
        });
    }
    Ok(dfa)
}

/// `B`: `q -x-> t -y-> q`; OR and 1 gates loop on `t` under `a_i, b_i`, AND
/// gates add `t -a_i-> i -b_i-> t`, and 0 gates add nothing.
pub fn build_b(c: &Circuit) -> Dfa {
    build_b_over(c, &[])
}

fn build_b_over(c: &Circuit, extra: &[String]) -> Dfa {
    let mut states = vec![INITIAL_B.to_string(), HUB_B.to_string()];
    let mut trans = vec![edge(INITIAL_B, "x", HUB_B), edge(HUB_B, "y", INITIAL_B)];
    for i in 1..=c.len() {
        match c.kind(i) {
            GateKind::Or | GateKind::One => {
                trans.push(edge(HUB_B, format!("a{i}"), HUB_B));
                trans.push(edge(HUB_B, format!("b{i}"), HUB_B));
            }
            GateKind::And => {
                states.push(i.to_string());
                trans.push(edge(HUB_B, format!("a{i}"), i));
                trans.push(edge(i, format!("b{i}"), HUB_B));
            }
            GateKind::Zero => {}
        }
    }
    let mut symbols = base_symbols(c);
    symbols.extend(extra.iter().cloned());
    complete(states, &symbols, trans, INITIAL_B, &[INITIAL_B])
}

/// The alphabet on which both `A′` and `B` have a cycle through their initial
/// and accepting states when the circuit evaluates to 1; empty otherwise.
///
/// Contains `x`, `y`, and `a_i` (resp. `b_i`) for every true gate `i` whose
/// left (resp. right) operand is true and that is reached from gate `n` along
/// such letters.
pub fn proof_gamma(c: &Circuit) -> LetterSet {
    let sigma = reduction_alphabet(c);
    if !evaluate(c) {
        return LetterSet::new();
    }
    let values = c.values();
    let mut gamma = LetterSet::new();
    for s in ["x", "y"] {
        gamma.insert(sigma.letter(s).expect("base symbol"));
    }
    let mut seen = vec![false; c.len() + 1];
    let mut stack = vec![c.len()];
    seen[c.len()] = true;
    while let Some(i) = stack.pop() {
        let (l, r) = c.operands(i);
        for (prefix, op) in [("a", l), ("b", r)] {
            if !Circuit::operand_value(&values, op) {
                continue;
            }
            gamma.insert(sigma.letter(&format!("{prefix}{i}")).expect("base symbol"));
            if let Operand::Gate(j) = op {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    gamma
}
