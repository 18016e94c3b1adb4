use std::fmt;

use serde::Serialize;

use crate::bitset::LetterSet;
use crate::error::{Error, Result};

/// Index of a letter within an [`Alphabet`].
pub type Letter = usize;

/// A word as a sequence of letter indices of some alphabet.
pub type Word = Vec<Letter>;

/// An input symbol: a non-empty token without whitespace or `#`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_token(&name) {
            Ok(Self(name))
        } else {
            Err(Error::InvalidSymbol(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_token(s: &str) -> bool {
    !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || c == '#')
}

/// Ordered set of symbols. Letter `i` is the `i`-th symbol in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    /// Builds an alphabet, sorting the symbols; duplicates are rejected.
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut symbols = symbols.into_iter().map(Symbol::new).collect::<Result<Vec<_>>>()?;
        symbols.sort();
        if let Some(w) = symbols.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate {
                kind: "symbol",
                name: w[0].to_string(),
            });
        }
        Ok(Self { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> &Symbol {
        &self.symbols[letter]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.symbols.binary_search_by(|s| s.as_str().cmp(name)).ok()
    }

    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.symbols.len()
    }

    /// All letters as a set.
    pub fn full(&self) -> LetterSet {
        LetterSet::full(self.len())
    }

    /// Translates symbol names into a word, rejecting foreign symbols.
    pub fn encode<S: AsRef<str>>(&self, word: &[S]) -> Result<Word> {
        word.iter()
            .map(|s| {
                self.letter(s.as_ref())
                    .ok_or_else(|| Error::UndeclaredSymbol(s.as_ref().to_string()))
            })
            .collect()
    }

    /// Letter set for a list of symbol names.
    pub fn letter_set<S: AsRef<str>>(&self, names: &[S]) -> Result<LetterSet> {
        Ok(self.encode(names)?.into_iter().collect())
    }

    pub fn decode(&self, word: &[Letter]) -> Vec<String> {
        word.iter().map(|&l| self.symbols[l].to_string()).collect()
    }

    pub fn decode_set(&self, set: &LetterSet) -> Vec<String> {
        set.iter().map(|l| self.symbols[l].to_string()).collect()
    }

    /// Symbols are space-separated unless all of them are single characters;
    /// the empty word prints as `ε`.
    pub fn render(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            "ε".to_string()
        } else {
            let sep = if self.symbols.iter().all(|s| s.as_str().chars().count() == 1) {
                ""
            } else {
                " "
            };
            self.decode(word).join(sep)
        }
    }

    /// Same symbols plus `extra`; letter indices of existing symbols may shift.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Self> {
        let mut names: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        for e in extra {
            if self.letter(e.as_ref()).is_none() {
                names.push(e.as_ref().to_string());
            }
        }
        Self::new(names)
    }
}

/// `alp(w)`: the set of letters occurring in `word`.
pub fn letters_of(word: &[Letter]) -> LetterSet {
    word.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols_reject_bad_tokens() {
        assert!(Symbol::new("a1").is_ok());
        assert!(Symbol::new("").is_err());
        assert!(Symbol::new("a b").is_err());
        assert!(Symbol::new("a#").is_err());
    }

    #[test]
    fn alphabet_is_sorted_and_unique() {
        let sigma = Alphabet::new(["b", "a", "c"]).unwrap();
        assert_eq!(sigma.letter("a"), Some(0));
        assert_eq!(sigma.letter("c"), Some(2));
        assert_eq!(sigma.encode(&["c", "a"]).unwrap(), vec![2, 0]);
        assert!(sigma.encode(&["z"]).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert_eq!(sigma.render(&[]), "ε");
        assert_eq!(sigma.render(&[0, 1, 0]), "aba");
        let long = Alphabet::new(["x", "a1"]).unwrap();
        assert_eq!(long.render(&[1, 0]), "x a1");
    }
}
