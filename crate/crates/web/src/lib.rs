//! In-browser front end: each export takes the same text formats as the CLI
//! and returns a JSON report string (`{"error": ...}` on bad input).

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use ptsep_core::automata::{is_minimal, parse_automaton, ParsedAutomaton};
use ptsep_core::mcvp::{evaluate, parse_circuit, ReductionOutput};
use ptsep_core::piecewise::{is_pt_dfa, is_pt_nfa};
use ptsep_core::report::{TowerReport, WitnessReport};
use ptsep_core::separability::{decide_separability_with, towers_from_pattern, SeparabilityOptions};
use ptsep_core::Nfa;

const MAX_HEIGHT: usize = 8;

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => to_json(&v),
        Err(e) => to_json(&json!({ "error": e })),
    }
}

fn automaton(text: &str, which: &str) -> Result<ParsedAutomaton, String> {
    parse_automaton(text).map_err(|e| format!("{which}: {e}"))
}

/// Piecewise testability of the automaton in `text`.
#[wasm_bindgen]
pub fn pt_check(text: &str) -> String {
    respond((|| {
        let parsed = automaton(text, "automaton")?;
        let verdict = match &parsed {
            ParsedAutomaton::Dfa(d) if is_minimal(d) => is_pt_dfa(d).map_err(|e| e.to_string())?,
            other => is_pt_nfa(other.as_nfa()),
        };
        let dfa = &verdict.minimal_dfa;
        Ok(json!({
            "is_pt": verdict.is_pt,
            "condition": verdict.condition(),
            "minimal_dfa": dfa.to_text(),
            "witness": verdict.witness.as_ref().map(|w| WitnessReport::pt(w, dfa)),
        }))
    })())
}

/// Separability of two automata; inseparable inputs come with a tower of
/// height `height` (clamped to 1..=8).
#[wasm_bindgen]
pub fn separability(a: &str, b: &str, height: usize) -> String {
    respond((|| {
        let a: Nfa = automaton(a, "A")?.into_nfa();
        let b: Nfa = automaton(b, "B")?.into_nfa();
        let options = SeparabilityOptions {
            attach_separator: true,
            ..Default::default()
        };
        let verdict = decide_separability_with(&a, &b, &options).map_err(|e| e.to_string())?;
        let sigma = a.alphabet();
        let witness = match (&verdict.witness, &verdict.separator) {
            (Some(w), _) => {
                let tower = towers_from_pattern(w, height.clamp(1, MAX_HEIGHT)).map_err(|e| e.to_string())?;
                tower.validate(&a, &b).map_err(|e| e.to_string())?;
                let rendered: Vec<String> = tower.words.iter().map(|x| sigma.render(x)).collect();
                json!({
                    "pattern": WitnessReport::pattern(w, &a, &b, Some(&tower)),
                    "tower": rendered,
                })
            }
            (None, Some(s)) => json!({ "separator": WitnessReport::separator(s, sigma) }),
            (None, None) => Value::Null,
        };
        Ok(json!({
            "separable": verdict.separable,
            "separator_omitted": verdict.separator_omitted,
            "witness": witness,
        }))
    })())
}

/// Evaluates a monotone circuit and decides separability of its reduction.
#[wasm_bindgen]
pub fn mcvp_endtoend(circuit: &str) -> String {
    respond((|| {
        let c = parse_circuit(circuit).map_err(|e| e.to_string())?;
        let out = ReductionOutput::build(&c).map_err(|e| e.to_string())?;
        let b = out.b_joint(&c);
        let verdict =
            decide_separability_with(&out.a_minimal, &b, &SeparabilityOptions::default()).map_err(|e| e.to_string())?;
        let value = evaluate(&c);
        let tower = match &verdict.witness {
            Some(w) => {
                let t = towers_from_pattern(w, 3).map_err(|e| e.to_string())?;
                Some(TowerReport::new(&t, out.a_minimal.alphabet()))
            }
            None => None,
        };
        Ok(json!({
            "eval": u8::from(value),
            "separable": verdict.separable,
            "agree": verdict.separable != value,
            "a_prime": out.a_prime.to_text(),
            "b": out.b.to_text(),
            "tower": tower,
        }))
    })())
}
