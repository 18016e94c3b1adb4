use serde::Serialize;

use crate::automata::{Nfa, Word};
use crate::error::{Error, Result};
use crate::oracles::subsequence;

/// One of the two input languages.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    pub fn pick<'a, T>(self, a: &'a T, b: &'a T) -> &'a T {
        match self {
            Side::A => a,
            Side::B => b,
        }
    }

    /// Side of the `i`-th word (0-based) of a tower starting on `self`.
    pub fn at_level(self, i: usize) -> Side {
        if i.is_multiple_of(2) {
            self
        } else {
            self.other()
        }
    }
}

/// Words `w_1, w_2, ...` each a subsequence of the next, with membership
/// alternating between the two languages starting at `start_side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    pub words: Vec<Word>,
    pub start_side: Side,
}

impl Tower {
    pub fn height(&self) -> usize {
        self.words.len()
    }

    /// Checks the subsequence chain and the alternating memberships.
    pub fn validate(&self, a: &Nfa, b: &Nfa) -> Result<()> {
        for (i, w) in self.words.iter().enumerate() {
            let side = self.start_side.at_level(i);
            if !side.pick(a, b).accepts(w) {
                return Err(Error::InvalidWitness(format!(
                    "tower word {} is not in L({side:?})",
                    i + 1
                )));
            }
        }
        for (i, pair) in self.words.windows(2).enumerate() {
            if !subsequence(&pair[0], &pair[1]) {
                return Err(Error::InvalidWitness(format!(
                    "tower word {} is not a subsequence of word {}",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(())
    }
}
