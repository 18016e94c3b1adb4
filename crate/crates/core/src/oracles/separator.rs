use std::collections::BTreeSet;

use crate::automata::{Letter, Nfa};
use crate::error::Result;
use crate::oracles::profile::{reachable_profiles, KProfile, ProfileSpace};
use crate::oracles::Budget;
use crate::separability::Side;

/// A `k`-piecewise testable language given as a union of `k`-profile classes.
/// A word belongs to it iff its `k`-profile is one of `accepted_profiles`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KptSeparator {
    pub k: usize,
    pub alphabet_len: usize,
    pub accepted_profiles: BTreeSet<KProfile>,
    /// The input language the separator contains.
    pub side: Side,
}

impl KptSeparator {
    pub fn accepts(&self, word: &[Letter]) -> bool {
        let space = ProfileSpace::new(self.alphabet_len, self.k).expect("separator within limits");
        self.accepted_profiles.contains(&space.profile(word))
    }
}

/// A `k`-PT language containing `L(a)` and disjoint from `L(b)`, if one exists.
///
/// Every `k`-PT language is a union of `k`-profile classes, so one exists iff
/// no profile is realized by both languages; the profiles of `L(a)` then form
/// the smallest such separator.
pub fn separable_by_kpt(a: &Nfa, b: &Nfa, k: usize, budget: &Budget) -> Result<Option<KptSeparator>> {
    a.same_alphabet(b)?;
    let pa = reachable_profiles(a, k, budget)?;
    let pb = reachable_profiles(b, k, budget)?;
    if pa.intersection(&pb).next().is_some() {
        return Ok(None);
    }
    Ok(Some(KptSeparator {
        k,
        alphabet_len: a.alphabet().len(),
        accepted_profiles: pa,
        side: Side::A,
    }))
}

/// Exact check, at the level of profiles, that `s` contains its side's
/// language and misses the other.
pub fn verify_separator(s: &KptSeparator, a: &Nfa, b: &Nfa, budget: &Budget) -> Result<bool> {
    a.same_alphabet(b)?;
    if s.alphabet_len != a.alphabet().len() {
        return Ok(false);
    }
    let inside = reachable_profiles(s.side.pick(a, b), s.k, budget)?;
    let outside = reachable_profiles(s.side.other().pick(a, b), s.k, budget)?;
    Ok(inside.is_subset(&s.accepted_profiles) && outside.is_disjoint(&s.accepted_profiles))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::edges;

    fn plus(letter: &str) -> Nfa {
        Nfa::from_named(
            ["0", "1"],
            ["a", "b"],
            edges(&[("0", letter, "1"), ("1", letter, "1")]),
            ["0"],
            ["1"],
        )
        .unwrap()
    }

    #[test]
    fn a_plus_versus_b_plus() {
        let budget = Budget::default();
        let s = separable_by_kpt(&plus("a"), &plus("b"), 1, &budget).unwrap().unwrap();
        let pieces: Vec<_> = s.accepted_profiles.iter().map(|p| p.pieces()).collect();
        assert_eq!(pieces, vec![vec![vec![], vec![0]]]);
        assert!(verify_separator(&s, &plus("a"), &plus("b"), &budget).unwrap());
        assert!(s.accepts(&[0, 0, 0]) && !s.accepts(&[1]) && !s.accepts(&[0, 1]));
    }

    #[test]
    fn identical_languages_never_separate() {
        let budget = Budget::default();
        for k in 0..4 {
            assert!(separable_by_kpt(&plus("a"), &plus("a"), k, &budget).unwrap().is_none());
        }
    }

    #[test]
    fn empty_separator_fails_verification() {
        let budget = Budget::default();
        let s = KptSeparator {
            k: 1,
            alphabet_len: 2,
            accepted_profiles: BTreeSet::new(),
            side: Side::A,
        };
        assert!(!verify_separator(&s, &plus("a"), &plus("b"), &budget).unwrap());
    }
}
