//! Serializable reports with states and letters spelled by name, so that a
//! witness can be replayed against the automaton files it came from.

use serde::Serialize;

use crate::automata::{Alphabet, Nfa, StateId};
use crate::oracles::{KptSeparator, ProfileConflict};
use crate::piecewise::PtWitness;
use crate::separability::{PatternWitness, Side, Tower};

pub const SCHEMA: &str = "ptsep-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct Report<V: Serialize> {
    pub schema: &'static str,
    pub command: Vec<String>,
    pub verdict: V,
    pub witness: Option<WitnessReport>,
    pub oracle_check: OracleCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl<V: Serialize> Report<V> {
    pub fn new(command: Vec<String>, verdict: V) -> Self {
        Self {
            schema: SCHEMA,
            command,
            verdict,
            witness: None,
            oracle_check: OracleCheck::skipped(),
            timings: None,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub total_ms: f64,
    pub decision_ms: f64,
    pub oracle_ms: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Ran,
    Skipped,
}

/// Outcome of re-checking a verdict with an independent oracle.
#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub status: CheckStatus,
    /// `None` when the oracle ran but was inconclusive.
    pub agreed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl OracleCheck {
    pub fn skipped() -> Self {
        Self {
            status: CheckStatus::Skipped,
            agreed: None,
            detail: None,
        }
    }

    pub fn ran(agreed: Option<bool>, detail: impl Into<String>) -> Self {
        Self {
            status: CheckStatus::Ran,
            agreed,
            detail: Some(detail.into()),
        }
    }
}

type Names = Vec<String>;

fn word(alphabet: &Alphabet, w: &[usize]) -> Names {
    w.iter().map(|&l| alphabet.symbol(l).to_string()).collect()
}

fn state(nfa: &Nfa, q: StateId) -> String {
    nfa.state_name(q).to_string()
}

#[derive(Clone, Debug, Serialize)]
pub struct PathReport {
    pub entry: String,
    pub lead_in: Names,
    pub cycle: Names,
    pub lead_out: Names,
    pub exit: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    pub gamma: Names,
    pub anchor_a: String,
    pub anchor_b: String,
    pub a: PathReport,
    pub b: PathReport,
    pub tail: Names,
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerReport {
    pub start_side: Side,
    pub words: Vec<Names>,
}

impl TowerReport {
    pub fn new(tower: &Tower, alphabet: &Alphabet) -> Self {
        Self {
            start_side: tower.start_side,
            words: tower.words.iter().map(|w| word(alphabet, w)).collect(),
        }
    }
}

/// Witness payloads, tagged by `type`.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessReport {
    NontrivialCycle {
        states: Names,
        word: Names,
    },
    Triple {
        p: String,
        q: String,
        q_prime: String,
        w: Names,
        w_prime: Names,
        gamma: Names,
    },
    Pattern {
        k: usize,
        initial: [String; 2],
        head: Names,
        blocks: Vec<BlockReport>,
        accepting: [String; 2],
        sample_tower: Option<TowerReport>,
    },
    Tower(TowerReport),
    Separator {
        k: usize,
        contains: Side,
        accepted_profiles: Vec<Vec<Names>>,
    },
    ProfileConflict {
        pieces: Vec<Names>,
        accepted: Names,
        rejected: Names,
    },
}

impl WitnessReport {
    pub fn pt(w: &PtWitness, dfa: &Nfa) -> Self {
        let sigma = dfa.alphabet();
        match w {
            PtWitness::NontrivialCycle { states, word: wd } => WitnessReport::NontrivialCycle {
                states: states.iter().map(|&q| state(dfa, q)).collect(),
                word: word(sigma, wd),
            },
            PtWitness::Triple {
                p,
                q,
                q_prime,
                w,
                w_prime,
                gamma,
            } => WitnessReport::Triple {
                p: state(dfa, *p),
                q: state(dfa, *q),
                q_prime: state(dfa, *q_prime),
                w: word(sigma, w),
                w_prime: word(sigma, w_prime),
                gamma: sigma.decode_set(gamma),
            },
        }
    }

    pub fn pattern(w: &PatternWitness, a: &Nfa, b: &Nfa, sample: Option<&Tower>) -> Self {
        let sigma = a.alphabet();
        let path = |nfa: &Nfa, p: &crate::separability::BlockPath| PathReport {
            entry: state(nfa, p.entry),
            lead_in: word(sigma, &p.lead_in),
            cycle: word(sigma, &p.cycle),
            lead_out: word(sigma, &p.lead_out),
            exit: state(nfa, p.exit),
        };
        WitnessReport::Pattern {
            k: w.k(),
            initial: [state(a, w.initial.0), state(b, w.initial.1)],
            head: word(sigma, &w.head),
            blocks: w
                .blocks
                .iter()
                .map(|bl| BlockReport {
                    gamma: sigma.decode_set(bl.gamma()),
                    anchor_a: state(a, bl.anchor.r_a),
                    anchor_b: state(b, bl.anchor.r_b),
                    a: path(a, &bl.a),
                    b: path(b, &bl.b),
                    tail: word(sigma, &bl.tail),
                })
                .collect(),
            accepting: [state(a, w.accepting.0), state(b, w.accepting.1)],
            sample_tower: sample.map(|t| TowerReport::new(t, sigma)),
        }
    }

    pub fn separator(s: &KptSeparator, alphabet: &Alphabet) -> Self {
        WitnessReport::Separator {
            k: s.k,
            contains: s.side,
            accepted_profiles: s
                .accepted_profiles
                .iter()
                .map(|p| p.pieces().iter().map(|piece| word(alphabet, piece)).collect())
                .collect(),
        }
    }

    pub fn conflict(c: &ProfileConflict, alphabet: &Alphabet) -> Self {
        WitnessReport::ProfileConflict {
            pieces: c.profile.pieces().iter().map(|p| word(alphabet, p)).collect(),
            accepted: word(alphabet, &c.accepted),
            rejected: word(alphabet, &c.rejected),
        }
    }
}
