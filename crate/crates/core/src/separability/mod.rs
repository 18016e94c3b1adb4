//! Separability of two regular languages by a piecewise testable language.
//!
//! Inseparability is witnessed by a [`PatternWitness`]: a common skeleton of
//! accepting paths in both automata in which some segments can be pumped
//! around cycles sharing one alphabet. Every such witness generates towers of
//! any height via [`towers_from_pattern`].

mod anchor;
mod decide;
mod pattern;
mod product;
mod tower;

pub use anchor::{maximal_common_cycle_alphabet, PumpAnchor};
pub use decide::{decide_separability, decide_separability_with, SepVerdict, SeparabilityOptions};
pub use pattern::{towers_from_pattern, BlockPath, PatternWitness, PumpBlock};
pub use product::{build_block_product, BlockProduct, PairNode};
pub use tower::{Side, Tower};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{edges, Nfa};
    use crate::oracles::{verify_separator, Budget};

    fn nfa(states: &[&str], trans: &[(&str, &str, &str)], init: &[&str], fin: &[&str]) -> Nfa {
        Nfa::from_named(states, ["a", "b"], edges(trans), init, fin).unwrap()
    }

    /// `(ab)+`
    fn ab_plus() -> Nfa {
        nfa(
            &["0", "1", "2"],
            &[("0", "a", "1"), ("1", "b", "2"), ("2", "a", "1")],
            &["0"],
            &["2"],
        )
    }

    /// `(ba)+`
    fn ba_plus() -> Nfa {
        nfa(
            &["0", "1", "2"],
            &[("0", "b", "1"), ("1", "a", "2"), ("2", "b", "1")],
            &["0"],
            &["2"],
        )
    }

    #[test]
    fn plus_languages_are_separable() {
        let a = nfa(&["0", "1"], &[("0", "a", "1"), ("1", "a", "1")], &["0"], &["1"]);
        let b = nfa(&["0", "1"], &[("0", "b", "1"), ("1", "b", "1")], &["0"], &["1"]);
        let options = SeparabilityOptions {
            attach_separator: true,
            ..Default::default()
        };
        let v = decide_separability_with(&a, &b, &options).unwrap();
        assert!(v.separable && v.witness.is_none() && !v.separator_omitted);
        let s = v.separator.unwrap();
        assert_eq!(s.k, 1);
        assert!(verify_separator(&s, &a, &b, &Budget::default()).unwrap());
    }

    #[test]
    fn equal_languages_give_an_empty_common_word() {
        let star = nfa(&["0"], &[("0", "a", "0")], &["0"], &["0"]);
        let v = decide_separability(&star, &star).unwrap();
        assert!(!v.separable);
        let w = v.witness.unwrap();
        assert_eq!(w.k(), 0);
        assert!(w.head.is_empty());
        let t = towers_from_pattern(&w, 4).unwrap();
        assert_eq!(t.words, vec![Vec::<usize>::new(); 4]);
    }

    #[test]
    fn alternating_plus_languages_pump_one_block() {
        let (a, b) = (ab_plus(), ba_plus());
        let v = decide_separability(&a, &b).unwrap();
        assert!(!v.separable);
        let w = v.witness.unwrap();
        w.validate(&a, &b).unwrap();
        assert_eq!(w.k(), 1);
        assert_eq!(w.blocks[0].gamma(), &a.alphabet().full());
        let t = towers_from_pattern(&w, 3).unwrap();
        let expected: Vec<_> = ["a b", "b a b a", "a b a b a b"]
            .iter()
            .map(|w| a.alphabet().encode(&w.split(' ').collect::<Vec<_>>()).unwrap())
            .collect();
        assert_eq!(t.words, expected);
        for h in 1..=8 {
            towers_from_pattern(&w, h).unwrap().validate(&a, &b).unwrap();
        }
    }

    #[test]
    fn block_product_edges() {
        let loop_a = Nfa::from_named(["0"], ["a"], edges(&[("0", "a", "0")]), ["0"], ["0"]).unwrap();
        let p = build_block_product(&loop_a, &loop_a).unwrap();
        let blocks: Vec<_> = p.block_edges().collect();
        assert_eq!(blocks, vec![((0, 0), 0, (0, 0))]);
        assert_eq!(p.anchor(0).gamma, loop_a.alphabet().full());

        let chain = nfa(&["0", "1"], &[("0", "a", "1")], &["0"], &["1"]);
        let p = build_block_product(&chain, &chain).unwrap();
        assert_eq!(p.block_edges().count(), 0);
        assert_eq!(p.letter_edges().count(), 1);
    }

    #[test]
    fn symmetric_and_mismatch() {
        let (a, b) = (ab_plus(), ba_plus());
        assert_eq!(
            decide_separability(&a, &b).unwrap().separable,
            decide_separability(&b, &a).unwrap().separable
        );
        let other = Nfa::from_named(["0"], ["a"], Vec::new(), ["0"], ["0"]).unwrap();
        assert!(decide_separability(&a, &other).is_err());
    }
}
