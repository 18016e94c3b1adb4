//! Line-based text format for automata.
//!
//! ```text
//! kind: nfa            # or dfa
//! states: s0 s1
//! alphabet: a b
//! initial: s0
//! final: s1
//! trans: s0 a s1       # one transition per line
//! ```
//!
//! `#` starts a comment. `kind` defaults to `nfa` and `final` to the empty set.
//! Serialization is canonical: states, symbols and transitions sorted.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::automata::nfa::{Dfa, Nfa};
use crate::error::{Error, Result};

/// Result of parsing: a `kind: dfa` file yields a validated [`Dfa`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedAutomaton {
    Nfa(Nfa),
    Dfa(Dfa),
}

impl ParsedAutomaton {
    pub fn into_nfa(self) -> Nfa {
        match self {
            Self::Nfa(n) => n,
            Self::Dfa(d) => d.into_nfa(),
        }
    }

    pub fn as_nfa(&self) -> &Nfa {
        match self {
            Self::Nfa(n) => n,
            Self::Dfa(d) => d,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Self::Nfa(n) => n.to_text(),
            Self::Dfa(d) => d.to_text(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Nfa,
    Dfa,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_automaton(text: &str) -> Result<ParsedAutomaton> {
    let mut kind = None;
    let mut states: Option<Vec<String>> = None;
    let mut alphabet: Option<Vec<String>> = None;
    let mut initial: Option<(usize, Vec<String>)> = None;
    let mut accepting: Option<(usize, Vec<String>)> = None;
    let mut trans = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(lineno, format!("expected `key: values`, found `{line}`")))?;
        let tokens: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        fn set_once<T>(slot: &mut Option<T>, value: T, key: &str, line: usize) -> Result<()> {
            if slot.is_some() {
                return Err(syntax(line, format!("duplicate `{key}` line")));
            }
            *slot = Some(value);
            Ok(())
        }
        match key.trim() {
            "kind" => {
                let k = match tokens.as_slice() {
                    [k] if k == "nfa" => Kind::Nfa,
                    [k] if k == "dfa" => Kind::Dfa,
                    _ => return Err(syntax(lineno, "kind must be `nfa` or `dfa`")),
                };
                set_once(&mut kind, k, "kind", lineno)?;
            }
            "states" => set_once(&mut states, tokens, "states", lineno)?,
            "alphabet" => set_once(&mut alphabet, tokens, "alphabet", lineno)?,
            "initial" => set_once(&mut initial, (lineno, tokens), "initial", lineno)?,
            "final" => set_once(&mut accepting, (lineno, tokens), "final", lineno)?,
            "trans" => match <[String; 3]>::try_from(tokens) {
                Ok([p, a, q]) => trans.push((lineno, p, a, q)),
                Err(_) => return Err(syntax(lineno, "trans expects `<src> <symbol> <dst>`")),
            },
            other => return Err(syntax(lineno, format!("unknown key `{other}`"))),
        }
    }

    let kind = kind.unwrap_or(Kind::Nfa);
    let states = states.ok_or(Error::Missing("states"))?;
    let alphabet = alphabet.ok_or(Error::Missing("alphabet"))?;
    let (init_line, initial) = initial.ok_or(Error::Missing("initial"))?;
    let (final_line, accepting) = accepting.unwrap_or((0, Vec::new()));

    let declared: HashSet<&str> = states.iter().map(String::as_str).collect();
    let symbols: HashSet<&str> = alphabet.iter().map(String::as_str).collect();
    let check_state = |line: usize, s: &str| {
        if declared.contains(s) {
            Ok(())
        } else {
            Err(syntax(line, format!("undeclared state `{s}`")))
        }
    };
    for s in &initial {
        check_state(init_line, s)?;
    }
    for s in &accepting {
        check_state(final_line, s)?;
    }
    let mut seen = HashSet::new();
    for (line, p, a, q) in &trans {
        check_state(*line, p)?;
        check_state(*line, q)?;
        if !symbols.contains(a.as_str()) {
            return Err(syntax(*line, format!("undeclared symbol `{a}`")));
        }
        if kind == Kind::Dfa && !seen.insert((p.as_str(), a.as_str())) {
            return Err(Error::DuplicateTransition {
                state: p.clone(),
                symbol: a.clone(),
            });
        }
    }

    let nfa = Nfa::from_named(
        &states,
        &alphabet,
        trans.into_iter().map(|(_, p, a, q)| (p, a, q)),
        &initial,
        &accepting,
    )?;
    match kind {
        Kind::Nfa => Ok(ParsedAutomaton::Nfa(nfa)),
        Kind::Dfa => Ok(ParsedAutomaton::Dfa(Dfa::try_from(nfa)?)),
    }
}

/// Parses either kind and forgets determinism.
pub fn parse_nfa(text: &str) -> Result<Nfa> {
    parse_automaton(text).map(ParsedAutomaton::into_nfa)
}

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    match parse_automaton(text)? {
        ParsedAutomaton::Dfa(d) => Ok(d),
        ParsedAutomaton::Nfa(n) => Dfa::try_from(n),
    }
}

fn write_text(nfa: &Nfa, kind: &str) -> String {
    let mut out = String::new();
    let list = |items: &mut dyn Iterator<Item = &str>| {
        items.fold(String::new(), |mut acc, s| {
            acc.push(' ');
            acc.push_str(s);
            acc
        })
    };
    let _ = writeln!(out, "kind: {kind}");
    let _ = writeln!(
        out,
        "states:{}",
        list(&mut nfa.state_names().iter().map(String::as_str))
    );
    let _ = writeln!(
        out,
        "alphabet:{}",
        list(&mut nfa.alphabet().symbols().iter().map(|s| s.as_str()))
    );
    let _ = writeln!(
        out,
        "initial:{}",
        list(&mut nfa.initial().iter().map(|&q| nfa.state_name(q)))
    );
    let _ = writeln!(out, "final:{}", list(&mut nfa.accepting().map(|q| nfa.state_name(q))));
    for (p, a, q) in nfa.transitions() {
        let _ = writeln!(
            out,
            "trans: {} {} {}",
            nfa.state_name(p),
            nfa.alphabet().symbol(a),
            nfa.state_name(q)
        );
    }
    out
}

impl Nfa {
    /// Canonical text serialization with `kind: nfa`.
    pub fn to_text(&self) -> String {
        write_text(self, "nfa")
    }
}

impl Dfa {
    /// Canonical text serialization with `kind: dfa`.
    pub fn to_text(&self) -> String {
        write_text(self.as_nfa(), "dfa")
    }
}
