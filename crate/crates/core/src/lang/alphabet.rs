use serde::{Deserialize, Serialize};

use super::LangError;

const RESERVED: &[char] = &['(', ')', '+', '*', '.', 'ε', '∅', ',', ':'];

/// Ordered list of distinct symbols. Symbol order fixes the column order of
/// transition tables and the coordinate order of Parikh vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, LangError> {
        let mut out: Vec<char> = Vec::new();
        for c in symbols {
            if c.is_whitespace() || c.is_control() || RESERVED.contains(&c) {
                return Err(LangError::BadSymbol(c));
            }
            if out.contains(&c) {
                return Err(LangError::DuplicateSymbol(c));
            }
            out.push(c);
        }
        Ok(Alphabet { symbols: out })
    }

    /// Sorted, deduplicated alphabet of every symbol occurring in `words`.
    pub fn spanning<'a>(words: impl IntoIterator<Item = &'a str>) -> Result<Self, LangError> {
        let mut set = std::collections::BTreeSet::new();
        for w in words {
            set.extend(w.chars());
        }
        Alphabet::new(set)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index(&self, c: char) -> Option<usize> {
        self.symbols.iter().position(|&s| s == c)
    }

    pub fn contains(&self, c: char) -> bool {
        self.symbols.contains(&c)
    }

    pub fn symbol(&self, i: usize) -> char {
        self.symbols[i]
    }

    /// Translate a word into symbol indices.
    pub fn encode(&self, word: &str) -> Result<Vec<usize>, LangError> {
        word.chars()
            .map(|c| self.index(c).ok_or(LangError::UnknownSymbol(c)))
            .collect()
    }

    pub fn decode(&self, idx: &[usize]) -> String {
        idx.iter().map(|&i| self.symbols[i]).collect()
    }

    /// Alphabet containing the symbols of both, `self` first.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut symbols = self.symbols.clone();
        for &c in &other.symbols {
            if !symbols.contains(&c) {
                symbols.push(c);
            }
        }
        Alphabet { symbols }
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.symbols.iter().all(|&c| other.contains(c))
    }
}

impl TryFrom<String> for Alphabet {
    type Error = LangError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        Alphabet::new(s.chars())
    }
}

impl TryFrom<&str> for Alphabet {
    type Error = LangError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        Alphabet::new(s.chars())
    }
}

impl From<Alphabet> for String {
    fn from(a: Alphabet) -> String {
        a.symbols.into_iter().collect()
    }
}

impl std::fmt::Display for Alphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
