//! Alphabets, regular expressions, minimal DFAs, semiautomata and shuffles.

mod alphabet;
mod dfa;
pub(crate) mod nfa;
mod regex;
mod semiautomaton;
mod shuffle;

pub use alphabet::Alphabet;
pub use dfa::Dfa;
pub use regex::{literal_symbols, Regex};
pub use semiautomaton::{AutomatonJson, PairJson, Semiautomaton, StatePairSpec};
pub use shuffle::{shuffle_pair, shuffle_tuple};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LangError {
    #[error("parse error at {at}: {msg}")]
    Parse { at: usize, msg: String },
    #[error("symbol '{0}' is not in the alphabet")]
    UnknownSymbol(char),
    #[error("symbol '{0}' cannot be used in an alphabet")]
    BadSymbol(char),
    #[error("symbol '{0}' appears twice in the alphabet")]
    DuplicateSymbol(char),
    #[error("transition table is incomplete")]
    Incomplete,
    #[error("malformed automaton: {0}")]
    Malformed(String),
    #[error("automata over different alphabets")]
    AlphabetMismatch,
    #[error("{what} exceeds the cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize },
}

/// Regex, minimal DFA in one step.
pub fn regex_to_dfa(text: &str, alphabet: &Alphabet) -> Result<Dfa, LangError> {
    Dfa::parse_regex(text, alphabet)
}
