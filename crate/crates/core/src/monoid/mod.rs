//! Transition monoids and equation-based classification.

mod classify;
mod transition;

pub use classify::{verdicts, ClassificationReport, Complexity, Violation};
pub use transition::{MonoidCaps, MonoidDump, TransitionMonoid};

use crate::lang::{Dfa, LangError, Semiautomaton};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("{what} exceeds the cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize },
    #[error(transparent)]
    Lang(#[from] LangError),
}

pub fn transition_monoid(sa: &Semiautomaton, caps: MonoidCaps) -> Result<TransitionMonoid, MonoidError> {
    TransitionMonoid::of_semiautomaton(sa, caps)
}

pub fn syntactic_monoid(d: &Dfa, caps: MonoidCaps) -> Result<TransitionMonoid, MonoidError> {
    TransitionMonoid::syntactic(d, caps)
}

pub fn classify(sa: &Semiautomaton, caps: MonoidCaps) -> Result<ClassificationReport, MonoidError> {
    Ok(transition_monoid(sa, caps)?.classify())
}

/// Classification of the language of a regex through its syntactic monoid.
pub fn classify_regex(text: &str, alphabet: &crate::lang::Alphabet, caps: MonoidCaps) -> Result<ClassificationReport, MonoidError> {
    let d = Dfa::parse_regex(text, alphabet)?;
    Ok(syntactic_monoid(&d, caps)?.classify())
}
