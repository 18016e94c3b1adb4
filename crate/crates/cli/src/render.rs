use std::fmt::Write;

use ptsep_core::oracles::KptSeparator;
use ptsep_core::piecewise::PtWitness;
use ptsep_core::separability::{BlockPath, PatternWitness, Tower};
use ptsep_core::{Alphabet, LetterSet, Nfa};

fn set(alphabet: &Alphabet, s: &LetterSet) -> String {
    format!("{{{}}}", alphabet.decode_set(s).join(","))
}

pub fn pt_witness(w: &PtWitness, dfa: &Nfa) -> String {
    let sigma = dfa.alphabet();
    match w {
        PtWitness::NontrivialCycle { states, word } => {
            let mut out = String::from("nontrivial cycle: ");
            for (q, &a) in states.iter().zip(word) {
                let _ = write!(out, "{} -{}-> ", dfa.state_name(*q), sigma.symbol(a));
            }
            out.push_str(dfa.state_name(states[0]));
            out
        }
        PtWitness::Triple {
            p,
            q,
            q_prime,
            w,
            w_prime,
            gamma,
        } => format!(
            "triple over {}: {} -{}-> {} and {} -{}-> {}",
            set(sigma, gamma),
            dfa.state_name(*p),
            sigma.render(w),
            dfa.state_name(*q),
            dfa.state_name(*p),
            sigma.render(w_prime),
            dfa.state_name(*q_prime),
        ),
    }
}

fn path(nfa: &Nfa, anchor: usize, p: &BlockPath) -> String {
    let sigma = nfa.alphabet();
    format!(
        "{} -{}-> {} ({})* -{}-> {}",
        nfa.state_name(p.entry),
        sigma.render(&p.lead_in),
        nfa.state_name(anchor),
        sigma.render(&p.cycle),
        sigma.render(&p.lead_out),
        nfa.state_name(p.exit)
    )
}

pub fn pattern(w: &PatternWitness, a: &Nfa, b: &Nfa) -> String {
    let sigma = a.alphabet();
    let mut out = format!("pattern with {} pumping block(s)\n", w.k());
    let _ = writeln!(
        out,
        "  start ({}, {}) head {}",
        a.state_name(w.initial.0),
        b.state_name(w.initial.1),
        sigma.render(&w.head)
    );
    for (i, block) in w.blocks.iter().enumerate() {
        let _ = writeln!(out, "  block {} over {}", i + 1, set(sigma, block.gamma()));
        let _ = writeln!(out, "    A: {}", path(a, block.anchor.r_a, &block.a));
        let _ = writeln!(out, "    B: {}", path(b, block.anchor.r_b, &block.b));
        let _ = writeln!(out, "    then {}", sigma.render(&block.tail));
    }
    let _ = writeln!(
        out,
        "  accept in ({}, {})",
        a.state_name(w.accepting.0),
        b.state_name(w.accepting.1)
    );
    out
}

pub fn tower(t: &Tower, alphabet: &Alphabet) -> String {
    let words: Vec<String> = t.words.iter().map(|w| alphabet.render(w)).collect();
    format!(
        "tower of height {} starting in {:?}: {}\n",
        t.height(),
        t.start_side,
        words.join(", ")
    )
}

pub fn separator(s: &KptSeparator, alphabet: &Alphabet) -> String {
    let mut out = format!(
        "{}-PT separator containing L({:?}), {} profile class(es):\n",
        s.k,
        s.side,
        s.accepted_profiles.len()
    );
    for p in &s.accepted_profiles {
        let pieces: Vec<String> = p.pieces().iter().map(|w| alphabet.render(w)).collect();
        let _ = writeln!(out, "  {{{}}}", pieces.join(", "));
    }
    out
}
