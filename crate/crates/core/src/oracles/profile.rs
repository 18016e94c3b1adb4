//! Subsequence profiles: the set of pieces of length at most `k` of a word.
//!
//! Pieces are numbered densely (by length, then base-`m` rank), so a profile is
//! a bitset over `1 + m + m² + ... + m^k` codes.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automata::{Dfa, Letter, Nfa, StateId, Word};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::oracles::Budget;

/// Largest piece index space the oracles will allocate.
pub const MAX_PIECE_CODES: usize = 1 << 16;

/// Numbering of all words of length `≤ k` over `m` letters.
#[derive(Clone, Debug)]
pub struct ProfileSpace {
    k: usize,
    m: usize,
    offsets: Vec<usize>,
}

impl ProfileSpace {
    pub fn new(alphabet_len: usize, k: usize) -> Result<Self> {
        let mut offsets = vec![0usize];
        let mut layer = 1usize;
        for _ in 0..=k {
            let next = offsets
                .last()
                .copied()
                .unwrap_or(0)
                .checked_add(layer)
                .filter(|&t| t <= MAX_PIECE_CODES)
                .ok_or(Error::CapExceeded(MAX_PIECE_CODES))?;
            offsets.push(next);
            layer = layer.saturating_mul(alphabet_len);
        }
        Ok(Self {
            k,
            m: alphabet_len,
            offsets,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alphabet_len(&self) -> usize {
        self.m
    }

    /// `{ε}`.
    pub fn empty_word(&self) -> KProfile {
        let mut bits = BitSet::new();
        bits.insert(0);
        KProfile {
            k: self.k,
            alphabet_len: self.m,
            bits,
        }
    }

    pub fn code(&self, piece: &[Letter]) -> Option<usize> {
        if piece.len() > self.k {
            return None;
        }
        let rank = piece.iter().fold(0, |r, &a| r * self.m + a);
        Some(self.offsets[piece.len()] + rank)
    }

    pub fn decode(&self, code: usize) -> Word {
        let len = self.offsets.partition_point(|&o| o <= code) - 1;
        let mut rank = code - self.offsets[len];
        let mut word = vec![0; len];
        for slot in word.iter_mut().rev() {
            *slot = rank % self.m;
            rank /= self.m;
        }
        word
    }

    /// Profile of `w·a` from the profile of `w`: adds `p·a` for every piece
    /// `p` shorter than `k`.
    pub fn extend(&self, profile: &KProfile, a: Letter) -> KProfile {
        let mut bits = profile.bits.clone();
        let mut len = 0;
        for code in profile.bits.iter() {
            while code >= self.offsets[len + 1] {
                len += 1;
            }
            if len == self.k {
                break;
            }
            let rank = code - self.offsets[len];
            bits.insert(self.offsets[len + 1] + rank * self.m + a);
        }
        KProfile {
            k: self.k,
            alphabet_len: self.m,
            bits,
        }
    }

    pub fn profile(&self, word: &[Letter]) -> KProfile {
        word.iter().fold(self.empty_word(), |p, &a| self.extend(&p, a))
    }
}

/// Pieces of length `≤ k` of some word; always contains `ε` and is closed
/// under taking subsequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KProfile {
    k: usize,
    alphabet_len: usize,
    bits: BitSet,
}

impl KProfile {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    fn space(&self) -> ProfileSpace {
        ProfileSpace::new(self.alphabet_len, self.k).expect("profile built within limits")
    }

    /// All pieces, shortest first.
    pub fn pieces(&self) -> Vec<Word> {
        let space = self.space();
        self.bits.iter().map(|c| space.decode(c)).collect()
    }

    pub fn contains(&self, piece: &[Letter]) -> bool {
        self.space().code(piece).is_some_and(|c| self.bits.contains(c))
    }

    pub fn is_subset(&self, other: &KProfile) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

/// `profile_k(w)` over an alphabet with `alphabet_len` letters.
pub fn profile_k(word: &[Letter], k: usize, alphabet_len: usize) -> Result<KProfile> {
    Ok(ProfileSpace::new(alphabet_len, k)?.profile(word))
}

struct ProfileGraph {
    nodes: Vec<(StateId, KProfile)>,
    parent: Vec<Option<(usize, Letter)>>,
}

impl ProfileGraph {
    fn word_to(&self, mut node: usize) -> Word {
        let mut word = Vec::new();
        while let Some((prev, a)) = self.parent[node] {
            word.push(a);
            node = prev;
        }
        word.reverse();
        word
    }
}

/// BFS over `(state, profile)` pairs from the initial states, stopping early
/// once `stop` returns true for a newly discovered node.
fn explore(
    nfa: &Nfa,
    space: &ProfileSpace,
    budget: &Budget,
    mut stop: impl FnMut(usize, &(StateId, KProfile)) -> bool,
) -> Result<ProfileGraph> {
    let mut index: HashMap<(StateId, KProfile), usize> = HashMap::new();
    let mut graph = ProfileGraph {
        nodes: Vec::new(),
        parent: Vec::new(),
    };
    let mut queue = VecDeque::new();
    for &q in nfa.initial() {
        let node = (q, space.empty_word());
        if !index.contains_key(&node) {
            index.insert(node.clone(), graph.nodes.len());
            queue.push_back(graph.nodes.len());
            graph.nodes.push(node);
            graph.parent.push(None);
            if stop(graph.nodes.len() - 1, &graph.nodes[graph.nodes.len() - 1]) {
                return Ok(graph);
            }
        }
    }
    while let Some(i) = queue.pop_front() {
        let (q, profile) = graph.nodes[i].clone();
        for a in nfa.alphabet().letters() {
            let succ = nfa.successors(q, a);
            if succ.is_empty() {
                continue;
            }
            let next = space.extend(&profile, a);
            for &p in succ {
                let node = (p, next.clone());
                if index.contains_key(&node) {
                    continue;
                }
                if graph.nodes.len() >= budget.max_nodes {
                    return Err(Error::CapExceeded(budget.max_nodes));
                }
                index.insert(node.clone(), graph.nodes.len());
                queue.push_back(graph.nodes.len());
                graph.nodes.push(node);
                graph.parent.push(Some((i, a)));
                if stop(graph.nodes.len() - 1, &graph.nodes[graph.nodes.len() - 1]) {
                    return Ok(graph);
                }
            }
        }
    }
    Ok(graph)
}

/// `{ profile_k(w) | w ∈ L(nfa) }`.
pub fn reachable_profiles(nfa: &Nfa, k: usize, budget: &Budget) -> Result<BTreeSet<KProfile>> {
    let space = ProfileSpace::new(nfa.alphabet().len(), k)?;
    let graph = explore(nfa, &space, budget, |_, _| false)?;
    Ok(graph
        .nodes
        .into_iter()
        .filter(|(q, _)| nfa.is_accepting(*q))
        .map(|(_, p)| p)
        .collect())
}

/// Two words with the same `k`-profile, one accepted and one rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileConflict {
    pub profile: KProfile,
    pub accepted: Word,
    pub rejected: Word,
}

/// A profile reached at both an accepting and a rejecting state of a complete
/// DFA. None means membership is a function of the `k`-profile, i.e. the
/// language is `k`-piecewise testable.
pub fn profile_conflict(dfa: &Dfa, k: usize, budget: &Budget) -> Result<Option<ProfileConflict>> {
    let space = ProfileSpace::new(dfa.alphabet().len(), k)?;
    let mut first: HashMap<KProfile, [Option<usize>; 2]> = HashMap::new();
    let mut hit = None;
    let graph = explore(dfa, &space, budget, |i, (q, profile)| {
        let slots = first.entry(profile.clone()).or_default();
        let side = usize::from(dfa.is_accepting(*q));
        if slots[side].is_none() {
            slots[side] = Some(i);
        }
        if let [Some(rej), Some(acc)] = *slots {
            hit = Some((rej, acc, profile.clone()));
            return true;
        }
        false
    })?;
    Ok(hit.map(|(rej, acc, profile)| ProfileConflict {
        profile,
        accepted: graph.word_to(acc),
        rejected: graph.word_to(rej),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::edges;

    #[test]
    fn codes_round_trip() {
        let space = ProfileSpace::new(3, 3).unwrap();
        for code in 0..40 {
            assert_eq!(space.code(&space.decode(code)), Some(code));
        }
        assert_eq!(space.code(&[]), Some(0));
        assert_eq!(space.code(&[0, 1, 2, 0]), None);
    }

    #[test]
    fn small_profiles() {
        // alphabet {a, b} = {0, 1}
        assert_eq!(profile_k(&[], 3, 2).unwrap().pieces(), vec![Vec::<usize>::new()]);
        assert_eq!(
            profile_k(&[0, 1], 1, 2).unwrap().pieces(),
            vec![vec![], vec![0], vec![1]]
        );
        assert_eq!(
            profile_k(&[0, 1], 2, 2).unwrap().pieces(),
            vec![vec![], vec![0], vec![1], vec![0, 1]]
        );
    }

    #[test]
    fn huge_spaces_are_refused() {
        assert_eq!(
            ProfileSpace::new(50, 4).unwrap_err(),
            Error::CapExceeded(MAX_PIECE_CODES)
        );
    }

    fn plus_a() -> Nfa {
        Nfa::from_named(
            ["0", "1"],
            ["a"],
            edges(&[("0", "a", "1"), ("1", "a", "1")]),
            ["0"],
            ["1"],
        )
        .unwrap()
    }

    #[test]
    fn reachable_profiles_examples() {
        let budget = Budget::default();
        let empty = Nfa::from_named(["0"], ["a"], Vec::new(), ["0"], Vec::<&str>::new()).unwrap();
        assert!(reachable_profiles(&empty, 2, &budget).unwrap().is_empty());
        let eps = Nfa::from_named(["0"], ["a"], Vec::new(), ["0"], ["0"]).unwrap();
        let profiles = reachable_profiles(&eps, 2, &budget).unwrap();
        assert_eq!(profiles.len(), 1);
        assert_eq!(profiles.iter().next().unwrap().pieces(), vec![Vec::<usize>::new()]);
        let profiles = reachable_profiles(&plus_a(), 1, &budget).unwrap();
        assert_eq!(profiles.len(), 1);
        assert_eq!(profiles.iter().next().unwrap().pieces(), vec![vec![], vec![0]]);
    }

    #[test]
    fn budget_is_enforced() {
        let tiny = Budget { max_nodes: 2 };
        assert_eq!(
            reachable_profiles(&plus_a(), 3, &tiny).unwrap_err(),
            Error::CapExceeded(2)
        );
    }
}
