use crate::automata::Nfa;
use crate::error::Result;
use crate::oracles::{separable_by_kpt, Budget, KptSeparator};
use crate::separability::pattern::PatternWitness;
use crate::separability::product::build_block_product;

#[derive(Clone, Debug)]
pub struct SeparabilityOptions {
    /// Search for a separator when the languages are separable.
    pub attach_separator: bool,
    /// Largest piece length tried by the separator search.
    pub kmax: usize,
    pub budget: Budget,
}

impl Default for SeparabilityOptions {
    fn default() -> Self {
        Self {
            attach_separator: false,
            kmax: 6,
            budget: Budget::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SepVerdict {
    pub separable: bool,
    /// Present iff not separable.
    pub witness: Option<PatternWitness>,
    pub separator: Option<KptSeparator>,
    /// A separator was requested but none was found within the limits.
    pub separator_omitted: bool,
}

/// Decides whether some piecewise testable language separates `L(a)` from
/// `L(b)`. The languages are inseparable iff the block product has a path from
/// an initial pair to an accepting pair.
pub fn decide_separability(a: &Nfa, b: &Nfa) -> Result<SepVerdict> {
    decide_separability_with(a, b, &SeparabilityOptions::default())
}

pub fn decide_separability_with(a: &Nfa, b: &Nfa, options: &SeparabilityOptions) -> Result<SepVerdict> {
    let product = build_block_product(a, b)?;
    let witness = product.find_pattern(false).or_else(|| product.find_pattern(true));
    if witness.is_some() {
        return Ok(SepVerdict {
            separable: false,
            witness,
            separator: None,
            separator_omitted: false,
        });
    }
    let mut separator = None;
    if options.attach_separator {
        for k in 1..=options.kmax {
            match separable_by_kpt(a, b, k, &options.budget) {
                Ok(Some(s)) => {
                    separator = Some(s);
                    break;
                }
                Ok(None) => {}
                Err(_) => break,
            }
        }
    }
    Ok(SepVerdict {
        separable: true,
        witness: None,
        separator_omitted: options.attach_separator && separator.is_none(),
        separator,
    })
}
