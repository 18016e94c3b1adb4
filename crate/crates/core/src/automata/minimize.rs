use std::collections::{HashMap, VecDeque};

use crate::automata::nfa::{Dfa, Nfa, StateId};

/// States reachable from the initial state, ascending.
pub(crate) fn reachable_states(dfa: &Dfa) -> Vec<StateId> {
    let mut seen = vec![false; dfa.num_states()];
    let mut queue = VecDeque::from([dfa.initial_state()]);
    seen[dfa.initial_state()] = true;
    while let Some(q) = queue.pop_front() {
        for a in dfa.alphabet().letters() {
            let p = dfa.next(q, a);
            if !seen[p] {
                seen[p] = true;
                queue.push_back(p);
            }
        }
    }
    dfa.states().filter(|&q| seen[q]).collect()
}

/// Minimal DFA by Moore partition refinement over the reachable part.
///
/// Each class is named after its lexicographically smallest member. The empty
/// language minimizes to a single rejecting sink.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let live = reachable_states(dfa);
    let sigma = dfa.alphabet().len();
    let mut class = vec![usize::MAX; dfa.num_states()];
    for &q in &live {
        class[q] = usize::from(dfa.is_accepting(q));
    }
    let mut count = 0;
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut refined = vec![usize::MAX; dfa.num_states()];
        for &q in &live {
            let mut signature = Vec::with_capacity(sigma + 1);
            signature.push(class[q]);
            signature.extend((0..sigma).map(|a| class[dfa.next(q, a)]));
            let fresh = ids.len();
            refined[q] = *ids.entry(signature).or_insert(fresh);
        }
        class = refined;
        if ids.len() == count {
            break;
        }
        count = ids.len();
    }

    // `live` is ascending, i.e. sorted by name, so the first member seen is the representative.
    let mut representative = vec![usize::MAX; count];
    for &q in &live {
        if representative[class[q]] == usize::MAX {
            representative[class[q]] = q;
        }
    }
    let names = representative.iter().map(|&q| dfa.state_name(q).to_string()).collect();
    let edges = representative.iter().enumerate().flat_map(|(c, &q)| {
        let class = &class;
        (0..sigma).map(move |a| (c, a, class[dfa.next(q, a)]))
    });
    let accepting: Vec<usize> = (0..count).filter(|&c| dfa.is_accepting(representative[c])).collect();
    let out = Nfa::from_indexed(
        names,
        dfa.alphabet().clone(),
        edges.collect::<Vec<_>>(),
        [class[dfa.initial_state()]],
        accepting,
    );
    Dfa::try_from(out).expect("quotient of a complete DFA is complete")
}

/// Whether `dfa` equals its own minimization in size.
pub fn is_minimal(dfa: &Dfa) -> bool {
    minimize(dfa).num_states() == dfa.num_states()
}

/// Isomorphism of the reachable parts, matching states from the initial pair.
pub fn isomorphic(a: &Dfa, b: &Dfa) -> bool {
    if a.alphabet() != b.alphabet() {
        return false;
    }
    if reachable_states(a).len() != reachable_states(b).len() {
        return false;
    }
    let mut map_ab = vec![usize::MAX; a.num_states()];
    let mut map_ba = vec![usize::MAX; b.num_states()];
    let mut queue = VecDeque::from([(a.initial_state(), b.initial_state())]);
    map_ab[a.initial_state()] = b.initial_state();
    map_ba[b.initial_state()] = a.initial_state();
    while let Some((p, q)) = queue.pop_front() {
        if a.is_accepting(p) != b.is_accepting(q) {
            return false;
        }
        for l in a.alphabet().letters() {
            let (p2, q2) = (a.next(p, l), b.next(q, l));
            match (map_ab[p2], map_ba[q2]) {
                (usize::MAX, usize::MAX) => {
                    map_ab[p2] = q2;
                    map_ba[q2] = p2;
                    queue.push_back((p2, q2));
                }
                (x, y) if x == q2 && y == p2 => {}
                _ => return false,
            }
        }
    }
    true
}
