//! Bounded search for towers of a fixed height.
//!
//! The top word is read letter by letter. Each letter carries a threshold `t`:
//! levels `t..=h` read it, lower levels skip it, so every level's word is a
//! subsequence of the next one. A configuration is one state per level; level
//! `i` runs the automaton of its side.

use std::collections::{HashMap, VecDeque};

use crate::automata::{trim, Letter, Nfa, StateId, Word};
use crate::error::{Error, Result};
use crate::oracles::Budget;
use crate::separability::{Side, Tower};

/// A tower of height exactly `h` with the first word on side `start`.
pub fn bounded_tower_from(a: &Nfa, b: &Nfa, h: usize, start: Side, budget: &Budget) -> Result<Option<Tower>> {
    assert!(h >= 1, "tower height must be positive");
    a.same_alphabet(b)?;
    let (ta, tb) = (trim(a), trim(b));
    let levels: Vec<&Nfa> = (0..h).map(|i| start.at_level(i).pick(&ta, &tb)).collect();
    if levels.iter().any(|l| l.num_states() == 0) {
        return Ok(None);
    }

    let mut configs: Vec<Vec<StateId>> = Vec::new();
    let mut parent: Vec<Option<(usize, Letter, usize)>> = Vec::new();
    let mut index: HashMap<Vec<StateId>, usize> = HashMap::new();
    let mut queue = VecDeque::new();

    let mut initial = vec![Vec::new()];
    for level in &levels {
        initial = initial
            .into_iter()
            .flat_map(|prefix| {
                level.initial().iter().map(move |&q| {
                    let mut c = prefix.clone();
                    c.push(q);
                    c
                })
            })
            .collect();
    }
    for c in initial {
        index.insert(c.clone(), configs.len());
        queue.push_back(configs.len());
        configs.push(c);
        parent.push(None);
    }

    while let Some(i) = queue.pop_front() {
        let config = configs[i].clone();
        if config.iter().zip(&levels).all(|(&q, l)| l.is_accepting(q)) {
            return Ok(Some(rebuild(&parent, i, h, start)));
        }
        for letter in ta.alphabet().letters() {
            for t in 0..h {
                let mut next = vec![config.clone()];
                for lvl in t..h {
                    let succ = levels[lvl].successors(config[lvl], letter);
                    next = next
                        .into_iter()
                        .flat_map(|c| {
                            succ.iter().map(move |&q| {
                                let mut c = c.clone();
                                c[lvl] = q;
                                c
                            })
                        })
                        .collect();
                }
                for c in next {
                    if index.contains_key(&c) {
                        continue;
                    }
                    if configs.len() >= budget.max_nodes {
                        return Err(Error::CapExceeded(budget.max_nodes));
                    }
                    index.insert(c.clone(), configs.len());
                    queue.push_back(configs.len());
                    configs.push(c);
                    parent.push(Some((i, letter, t)));
                }
            }
        }
    }
    Ok(None)
}

fn rebuild(parent: &[Option<(usize, Letter, usize)>], mut node: usize, h: usize, start: Side) -> Tower {
    let mut steps = Vec::new();
    while let Some((prev, letter, t)) = parent[node] {
        steps.push((letter, t));
        node = prev;
    }
    steps.reverse();
    let words: Vec<Word> = (0..h)
        .map(|lvl| {
            steps
                .iter()
                .filter(|&&(_, t)| t <= lvl)
                .map(|&(letter, _)| letter)
                .collect()
        })
        .collect();
    Tower {
        words,
        start_side: start,
    }
}

/// A tower of height `h` starting in `L(a)`, or failing that in `L(b)`.
pub fn bounded_tower_exists(a: &Nfa, b: &Nfa, h: usize, budget: &Budget) -> Result<Option<Tower>> {
    match bounded_tower_from(a, b, h, Side::A, budget)? {
        Some(t) => Ok(Some(t)),
        None => bounded_tower_from(a, b, h, Side::B, budget),
    }
}
